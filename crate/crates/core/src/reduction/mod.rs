//! Reduction of on-line chain partitioning to regular posets.

mod build;
mod composite;
mod state;

pub use build::RegularBuild;
pub use composite::{composite_color, CompositeColorer, CompositeOutcome, ReductionOptions, DEFAULT_COLOR_CAP};
pub use state::{ReductionState, Routing};
