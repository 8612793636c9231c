use crate::error::{Error, Result};
use crate::poset::antichain::{join_unchecked, meet_unchecked};
use crate::poset::{maximum_antichain, width, Antichain, Poset};

use super::RegularBuild;

/// Where an arriving vertex goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Routing {
    /// Joins `X̄` and is handed to the width `w-1` colorer.
    Child,
    /// Triggers `A_i` (0-based `index`) and is colored on the regular side.
    Regular { index: usize, antichain: Antichain },
}

/// Bookkeeping of the reduction at a single width level.
#[derive(Debug, Clone)]
pub struct ReductionState {
    w: usize,
    xbar: Vec<usize>,
    family: Vec<Antichain>,
    triggers: Vec<usize>,
    build: RegularBuild,
    check: bool,
}

impl ReductionState {
    pub fn new(w: usize) -> Self {
        Self {
            w,
            xbar: Vec::new(),
            family: Vec::new(),
            triggers: Vec::new(),
            build: RegularBuild::new(w),
            check: true,
        }
    }

    /// Turns the per-step structural checks on or off.
    pub fn with_checks(mut self, check: bool) -> Self {
        self.check = check;
        self
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Vertices handed to the child, in arrival order.
    pub fn xbar(&self) -> &[usize] {
        &self.xbar
    }

    /// `A_1, …, A_n` in creation order.
    pub fn antichains(&self) -> &[Antichain] {
        &self.family
    }

    /// `x_i`, the vertex that created `A_i`.
    pub fn triggers(&self) -> &[usize] {
        &self.triggers
    }

    pub fn build(&self) -> &RegularBuild {
        &self.build
    }

    /// Routes vertex `x` of `prefix`. `prefix` holds every vertex seen so
    /// far, `x` included.
    pub fn process_vertex(&mut self, x: usize, prefix: &Poset) -> Result<Routing> {
        let step = x + 1;
        let wp = width(prefix);
        if wp > self.w {
            return Err(Error::WidthExceeded { width: wp, bound: self.w });
        }
        let mut with_x = self.xbar.clone();
        with_x.push(x);
        if width(&prefix.induced(&with_x)) < self.w {
            self.xbar.push(x);
            return Ok(Routing::Child);
        }

        let inc: Vec<usize> = self.xbar.iter().copied().filter(|&v| prefix.incomparable(v, x)).collect();
        let mut ax: Vec<usize> = maximum_antichain(&prefix.induced(&inc)).into_iter().map(|k| inc[k]).collect();
        ax.push(x);
        ax.sort_unstable();
        if ax.len() != self.w {
            return Err(violated(step, format!("A_x has {} points", ax.len())));
        }
        let ax = Antichain::from_sorted(ax);

        let below: Vec<&Antichain> = self.family.iter().filter(|a| a.iter().any(|v| prefix.less(v, x))).collect();
        let above: Vec<&Antichain> = self.family.iter().filter(|a| a.iter().any(|v| prefix.less(x, v))).collect();
        let ad = extreme(prefix, &below, true).map_err(|c| violated(step, c))?;
        let au = extreme(prefix, &above, false).map_err(|c| violated(step, c))?;
        // a missing A_d / A_u acts as the bottom / top of the lattice
        let lower = match au {
            Some(au) => meet_unchecked(prefix, au, &ax),
            None => ax.clone(),
        };
        let ai = match ad {
            Some(ad) => join_unchecked(prefix, ad, &lower),
            None => lower,
        };

        if self.check {
            self.check_new(step, x, prefix, &ai)?;
        }
        let index = self.build.push(prefix, ai.clone())?;
        if self.check {
            self.build.check_latest()?;
        }
        self.family.push(ai.clone());
        self.triggers.push(x);
        Ok(Routing::Regular { index, antichain: ai })
    }

    fn check_new(&self, step: usize, x: usize, prefix: &Poset, ai: &Antichain) -> Result<()> {
        if !ai.contains(x) {
            return Err(violated(step, "x is not in A_i".into()));
        }
        if ai.len() != self.w || !prefix.is_antichain(ai.members()) {
            return Err(violated(step, "A_i is not a maximum antichain".into()));
        }
        if let Some(j) = self.family.iter().position(|a| a == ai) {
            return Err(violated(step, format!("A_i repeats A_{}", j + 1)));
        }
        if let Some(j) = self
            .family
            .iter()
            .position(|a| !a.dominated_by(prefix, ai) && !ai.dominated_by(prefix, a))
        {
            return Err(violated(step, format!("A_i is ⊑-incomparable to A_{}", j + 1)));
        }
        Ok(())
    }
}

/// `⊑`-maximum (or minimum) of a family that should be a chain.
fn extreme<'a>(
    prefix: &Poset,
    family: &[&'a Antichain],
    max: bool,
) -> std::result::Result<Option<&'a Antichain>, String> {
    let Some(&first) = family.first() else {
        return Ok(None);
    };
    let mut best = first;
    for &a in &family[1..] {
        let (lo, hi) = if max { (best, a) } else { (a, best) };
        if lo.dominated_by(prefix, hi) {
            best = a;
        } else if !hi.dominated_by(prefix, lo) {
            return Err("antichain family is not a ⊑-chain".into());
        }
    }
    Ok(Some(best))
}

fn violated(step: usize, claim: String) -> Error {
    Error::InvariantViolated { step, claim }
}
