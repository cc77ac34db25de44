//! Lyndon and necklace counting functions, their x-deformed polynomials and
//! Dirichlet series, exact special values through Bernoulli, Apostol-Bernoulli
//! and Eulerian numbers, and Lambert series identities with Eisenstein cusp
//! sums.
//!
//! Exact quantities are [`ExactRational`]s or polynomials over them. Numeric
//! series carry a certified truncation bound, and every identity checker
//! returns an [`IdentityReport`] with a pass, fail or inconclusive verdict.

pub mod bernoulli;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod lambert;
pub mod numth;
pub mod rational;
pub mod series;
pub mod words;

use serde::{Deserialize, Serialize};

pub use error::{Error, Result};
pub use rational::ExactRational;
pub use series::{ComplexValue, IdentityId, IdentityReport, Verdict};

/// Restriction of a sum over `n` to a residue class mod 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    All,
    Odd,
    Even,
}

impl Parity {
    pub const ALL: [Parity; 3] = [Parity::All, Parity::Odd, Parity::Even];

    pub fn contains(self, n: u64) -> bool {
        match self {
            Parity::All => true,
            Parity::Odd => n % 2 == 1,
            Parity::Even => n % 2 == 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::All => "all",
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

impl std::fmt::Display for Parity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
