//! Regular posets: a poset presented as a sequence of disjoint maximum
//! antichains whose consecutive layers form cores.

mod core;
mod instance;
mod ladders;
pub(crate) mod verify;

pub use self::core::is_core;
pub use instance::RegularInstance;
pub use ladders::{canonical_ladder_max, ladder_bound_check, long_ladder_violation};
pub use verify::{derive_ps, verify_p6_p7, verify_regular, P67Verdict, P7Failure, RegularVerdict, Violation};
