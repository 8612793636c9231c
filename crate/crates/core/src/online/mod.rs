//! On-line presentations, First-Fit and Grundy colorings.

mod colorer;
mod exact;
mod grundy;
mod instance;

pub use colorer::{run_online, FirstFitColorer, OnlineColorer, OnlineRun, Relation};
pub use exact::{chi_ff_exact, chi_ff_exhaustive, grundy_number, EXHAUSTIVE_LIMIT, GRUNDY_LIMIT};
pub use grundy::{
    first_fit, first_fit_order, grundy_to_presentation, verify_grundy, GrundyColoring, GrundyVerdict,
};
pub use instance::OnlineInstance;
