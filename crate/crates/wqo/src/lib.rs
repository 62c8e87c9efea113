//! Bounded realizers for well quasi-order theorems.
//!
//! The centrepiece is a fuel-bounded recursor over the lexicographic
//! extension of a wellfounded order on letters, together with the learning
//! procedures built on top of it. Instantiated for boolean alphabets, the
//! pipeline yields a functional `pair_bound` that bounds the position of an
//! embedded pair of words in any infinite word sequence, and
//! `find_good_pair` which locates such a pair below the bound.

pub mod cli;
pub mod fuel;
pub mod harness;
pub mod higman;
pub mod learning;
pub mod open_rec;
pub mod orders;
pub mod selection;
pub mod seq;
pub mod zorn;

pub use fuel::{Error, Fuel, Result};
pub use seq::{CanonicalZero, InfSeq, Letter, Settled};
