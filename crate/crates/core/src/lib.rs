//! Exact-arithmetic certificates for group actions on trees and on finite
//! products of trees.

pub mod algebra;
pub mod bass_serre;
pub mod cli;
pub mod coset_trees;
pub mod error;
pub mod matrix2;
pub mod raag;
pub mod report;
pub mod surface;
pub mod valuation_bt;

pub use error::{Error, Result};
