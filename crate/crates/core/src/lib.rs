//! Exact computation of vanishing-off subgroups, their central series, and
//! the character tables behind them, for finite groups given by polycyclic
//! presentations or permutation generators.

pub mod chartab;
pub mod error;
pub mod group;
pub mod harness;
pub mod set;
pub mod structure;
pub mod vanishing;

pub use error::{Error, Result};

#[cfg(test)]
mod testutil;
