//! Exact computation of normalized symmetrized poly-Bernoulli numbers, Callan
//! polynomials and weighted alternative tableaux, with three independent
//! routes (closed form, recurrence, model enumeration) and a registry of the
//! identities relating them.

pub mod error;
pub mod exactmath;
pub mod identities;
pub mod memo;
pub mod models;
pub mod oeis;
pub mod polybern;
pub mod recurrences;

pub use error::{Error, Result};
