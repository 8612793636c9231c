use serde::Serialize;

use super::OnlineInstance;
use crate::error::{Error, Result};
use crate::poset::ChainPartition;

/// How the arriving vertex relates to an earlier arrival.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// The new vertex lies below the earlier one.
    Below,
    /// The new vertex lies above the earlier one.
    Above,
    Incomparable,
}

/// An on-line chain partitioner. Each call receives the relation of the
/// new vertex to every earlier arrival, in arrival order, and returns an
/// irrevocable 1-based chain index.
pub trait OnlineColorer {
    fn next(&mut self, relations: &[Relation]) -> Result<usize>;
}

/// Colors emitted by a run, indexed by vertex id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OnlineRun {
    pub colors: Vec<usize>,
    pub partition: ChainPartition,
}

impl OnlineRun {
    pub fn n_colors(&self) -> usize {
        self.partition.n_chains()
    }
}

/// Feeds `instance` to `colorer` and checks every answer keeps the color
/// classes chains. Steps are numbered from 1.
pub fn run_online(colorer: &mut dyn OnlineColorer, instance: &OnlineInstance) -> Result<OnlineRun> {
    let p = instance.poset();
    let order = instance.presentation();
    let mut colors = vec![0; p.len()];
    let mut relations = Vec::with_capacity(order.len());
    for (step, &v) in order.iter().enumerate() {
        relations.clear();
        relations.extend(order[..step].iter().map(|&u| {
            if p.less(v, u) {
                Relation::Below
            } else if p.less(u, v) {
                Relation::Above
            } else {
                Relation::Incomparable
            }
        }));
        let c = colorer.next(&relations)?;
        let clash = order[..step]
            .iter()
            .any(|&u| colors[u] == c && p.incomparable(u, v));
        if c == 0 || clash {
            return Err(Error::InvalidMove(step + 1));
        }
        colors[v] = c;
    }
    let partition = ChainPartition::from_labels(&colors);
    Ok(OnlineRun { colors, partition })
}

/// First-Fit as a stateful on-line colorer.
#[derive(Debug, Default, Clone)]
pub struct FirstFitColorer {
    colors: Vec<usize>,
}

impl FirstFitColorer {
    pub fn new() -> Self {
        Self::default()
    }
}

impl OnlineColorer for FirstFitColorer {
    fn next(&mut self, relations: &[Relation]) -> Result<usize> {
        let mut blocked = vec![false; self.colors.len() + 2];
        for (k, r) in relations.iter().enumerate() {
            if *r == Relation::Incomparable {
                blocked[self.colors[k]] = true;
            }
        }
        let c = (1..).find(|&c| !blocked[c]).unwrap();
        self.colors.push(c);
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::online::first_fit;
    use crate::poset::Poset;

    struct AlwaysOne;

    impl OnlineColorer for AlwaysOne {
        fn next(&mut self, _: &[Relation]) -> Result<usize> {
            Ok(1)
        }
    }

    #[test]
    fn constant_colorer_is_caught() {
        let inst = OnlineInstance::in_id_order(Poset::antichain(2));
        assert_eq!(run_online(&mut AlwaysOne, &inst), Err(Error::InvalidMove(2)));
    }

    #[test]
    fn wrapped_first_fit_matches() {
        let p = Poset::new(5, &[(0, 3), (1, 3), (2, 4)]).unwrap();
        let inst = OnlineInstance::new(p, vec![3, 4, 0, 2, 1], 3).unwrap();
        let run = run_online(&mut FirstFitColorer::new(), &inst).unwrap();
        assert_eq!(run.colors, first_fit(&inst).colors());
    }
}
