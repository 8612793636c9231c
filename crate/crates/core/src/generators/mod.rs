//! Explicit constructions. Every generator is a pure function of its
//! parameters.

mod bounds;
mod cores;
mod qk;
mod regular_ladder;
mod rn;
mod spec;

pub use bounds::{composite_upper_bound, ff_upper_bound};
pub use cores::{gen_core, gen_ladder, CoreKind};
pub use qk::{gen_qk, gen_qk_padded, qk_base, DEFAULT_SIZE_CAP};
pub use regular_ladder::{gen_regular_with_ladder, regular_ladder_vertex};
pub use rn::{gen_rn, rn_vertex};
pub use spec::{Generated, GeneratorSpec};
