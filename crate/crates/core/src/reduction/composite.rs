use serde::Serialize;

use super::{ReductionState, Routing};
use crate::bitset::{BitMatrix, BitSet};
use crate::error::{Error, Result};
use crate::online::{run_online, FirstFitColorer, OnlineColorer, OnlineInstance, OnlineRun, Relation};
use crate::poset::Poset;
use crate::regular::RegularInstance;

/// Default number of colors reserved per width level.
pub const DEFAULT_COLOR_CAP: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionOptions {
    /// Colors reserved per level; level `ℓ` emits `(ℓ-1)·cap + local`.
    pub cap: usize,
    /// Run the per-step structural checks.
    pub check: bool,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        Self { cap: DEFAULT_COLOR_CAP, check: true }
    }
}

#[derive(Debug, Clone)]
enum Level {
    Base(FirstFitColorer),
    Reduce {
        state: ReductionState,
        child: Box<CompositeColorer>,
        /// First-Fit color classes over `(U, ≤_R)`.
        classes: Vec<BitSet>,
        /// First-Fit color per point.
        point_color: Vec<usize>,
    },
}

/// The recursive width-`w` colorer: regular side by First-Fit over
/// `(U, ≤_R)`, the rest handed to a width `w-1` instance, First-Fit at
/// width 1.
#[derive(Debug, Clone)]
pub struct CompositeColorer {
    w: usize,
    cap: usize,
    less: BitMatrix,
    level: Level,
}

impl CompositeColorer {
    pub fn new(w: usize) -> Result<Self> {
        Self::with_options(w, ReductionOptions::default())
    }

    pub fn with_options(w: usize, opts: ReductionOptions) -> Result<Self> {
        if w == 0 {
            return Err(Error::BadParameters("width bound must be at least 1".into()));
        }
        if opts.cap == 0 {
            return Err(Error::BadParameters("color cap must be at least 1".into()));
        }
        let level = if w == 1 {
            Level::Base(FirstFitColorer::new())
        } else {
            Level::Reduce {
                state: ReductionState::new(w).with_checks(opts.check),
                child: Box::new(Self::with_options(w - 1, opts)?),
                classes: Vec::new(),
                point_color: Vec::new(),
            }
        };
        Ok(Self { w, cap: opts.cap, less: BitMatrix::new(0), level })
    }

    pub fn w(&self) -> usize {
        self.w
    }

    /// Reduction state of this level; `None` at width 1.
    pub fn state(&self) -> Option<&ReductionState> {
        match &self.level {
            Level::Base(_) => None,
            Level::Reduce { state, .. } => Some(state),
        }
    }

    /// First-Fit color of every point of `U` at this level.
    pub fn point_colors(&self) -> &[usize] {
        match &self.level {
            Level::Base(_) => &[],
            Level::Reduce { point_color, .. } => point_color,
        }
    }

    /// The colorer one width down.
    pub fn child(&self) -> Option<&CompositeColorer> {
        match &self.level {
            Level::Base(_) => None,
            Level::Reduce { child, .. } => Some(child),
        }
    }

    /// Emitted regular instance of every level with `w ≥ 2`, top first.
    pub fn regular_instances(&self) -> Result<Vec<(usize, RegularInstance)>> {
        let mut out = Vec::new();
        let mut cur = Some(self);
        while let Some(c) = cur {
            if let Some(st) = c.state().filter(|st| st.build().n_blocks() > 0) {
                out.push((c.w, st.build().to_regular_instance()?));
            }
            cur = c.child();
        }
        Ok(out)
    }

    fn global(&self, local: usize) -> Result<usize> {
        if local > self.cap {
            return Err(Error::ColorCapExceeded { color: local, cap: self.cap });
        }
        Ok((self.w - 1) * self.cap + local)
    }
}

impl OnlineColorer for CompositeColorer {
    fn next(&mut self, relations: &[Relation]) -> Result<usize> {
        let x = self.less.size();
        if relations.len() != x {
            return Err(Error::BadParameters(format!(
                "expected {x} relations, got {}",
                relations.len()
            )));
        }
        self.less.push();
        for (k, r) in relations.iter().enumerate() {
            match r {
                Relation::Below => self.less.set(x, k, true),
                Relation::Above => self.less.set(k, x, true),
                Relation::Incomparable => {}
            }
        }
        match &mut self.level {
            Level::Base(ff) => {
                let local = ff.next(relations)?;
                self.global(local)
            }
            Level::Reduce { state, child, classes, point_color } => {
                let prefix = Poset::from_closed(self.less.clone());
                let xbar_before = state.xbar().len();
                let w = self.w;
                let routing = state.process_vertex(x, &prefix).map_err(|e| match e {
                    Error::InvariantViolated { step, claim } => Error::InvariantViolated {
                        step,
                        claim: format!("{claim} (level {w})"),
                    },
                    e => e,
                })?;
                match routing {
                    Routing::Child => {
                        let sub: Vec<Relation> = state.xbar()[..xbar_before].iter().map(|&k| relations[k]).collect();
                        child.next(&sub)
                    }
                    Routing::Regular { index, .. } => {
                        let build = state.build();
                        let mut local = 0;
                        for &a in build.block(index) {
                            let comparable = build.r_comparable(a);
                            let c = (0..classes.len())
                                .find(|&c| classes[c].is_subset(&comparable))
                                .unwrap_or(classes.len());
                            if c == classes.len() {
                                classes.push(BitSet::new(0));
                            }
                            for cl in classes.iter_mut() {
                                cl.grow(a + 1);
                            }
                            classes[c].insert(a);
                            point_color.push(c + 1);
                            if build.point(a).0 == x {
                                local = c + 1;
                            }
                        }
                        debug_assert!(local > 0);
                        self.global(local)
                    }
                }
            }
        }
    }
}

/// Outcome of [`composite_color`].
#[derive(Debug, Clone, Serialize)]
pub struct CompositeOutcome {
    pub run: OnlineRun,
    /// `((U, ≤_R), B_1, …, B_n)` of the top level; `None` when `w = 1` or
    /// no vertex reached the regular side.
    pub regular: Option<RegularInstance>,
    /// Original vertex of each point of the top-level `U`.
    pub point_vertex: Vec<usize>,
    /// First-Fit color of each top-level point.
    pub point_colors: Vec<usize>,
}

/// Runs the composite colorer at the instance's width bound.
pub fn composite_color(instance: &OnlineInstance, opts: ReductionOptions) -> Result<CompositeOutcome> {
    let mut colorer = CompositeColorer::with_options(instance.width_bound().max(1), opts)?;
    let run = run_online(&mut colorer, instance)?;
    let order = instance.presentation();
    let (regular, point_vertex) = match colorer.state() {
        Some(st) if st.build().n_blocks() > 0 => {
            let b = st.build();
            let pv = (0..b.n_points()).map(|a| order[b.point(a).0]).collect();
            (Some(b.to_regular_instance()?), pv)
        }
        _ => (None, Vec::new()),
    };
    Ok(CompositeOutcome {
        run,
        regular,
        point_vertex,
        point_colors: colorer.point_colors().to_vec(),
    })
}
