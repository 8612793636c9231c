pub mod bitset;
pub mod error;
pub mod poset;
pub mod online;
pub mod regular;
pub mod generators;
pub mod reduction;
pub mod harness;
