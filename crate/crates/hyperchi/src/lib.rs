//! Exact combinatorics of labelled hypertrees and the Euler characteristics
//! of Whitehead-type automorphism groups of free products.
//!
//! The crate has three layers:
//!
//! * exact arithmetic: sparse multivariate polynomials over arbitrary-precision
//!   rationals ([`poly`]) and exact counting helpers ([`counting`]);
//! * enumeration: set partitions and planted forests ([`partitions`],
//!   [`forests`]), hypertrees and planted hyperforests ([`hypertrees`]), and
//!   the hypertree poset with order-complex chain counting ([`poset`]);
//! * calculators: mechanical verification of the summation identities
//!   ([`identities`]) and the Euler-characteristic formulas for free products
//!   and their automorphism groups ([`euler`]).
//!
//! All arithmetic is exact; nothing in this crate rounds.

pub mod counting;
pub mod euler;
pub mod forests;
pub mod hypertrees;
pub mod identities;
pub mod partitions;
pub mod poly;
pub mod poset;

pub use euler::{FactorGroup, GroupSystem, PalindromicChi};
pub use forests::PlantedForest;
pub use hypertrees::{Hypertree, PlantedHyperforest, RootedHypertree};
pub use identities::{IdentityReport, VerifyLimits};
pub use partitions::{BlockWeightKind, SetPartition};
pub use poly::{Monomial, Polynomial, Rat};
pub use poset::HypertreePoset;

use thiserror::Error;

/// Errors shared by every module of this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The linear sum of an empty variable set is not defined.
    #[error("the linear sum over an empty variable set is undefined")]
    EmptyVariableSet,

    /// Evaluation was asked for a point that does not assign some variable.
    #[error("no value assigned to variable x_{0}")]
    MissingVariable(u32),

    /// A block count outside 1..=n.
    #[error("block/component count k={k} out of range 1..={n}")]
    KOutOfRange { n: u32, k: u32 },

    /// Vertex counts must be at least 1.
    #[error("vertex count n={0} must be at least 1")]
    BadVertexCount(u32),

    /// A hyperedge with fewer than two vertices.
    #[error("hyperedge {0:?} has fewer than two vertices")]
    EdgeTooSmall(Vec<u32>),

    /// A vertex outside the ground set.
    #[error("vertex {vertex} outside the ground set [{n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },

    /// The edge family is not a hypertree.
    #[error("edge family on [{n}] is not a hypertree: {defect}")]
    NotAHypertree {
        n: u32,
        defect: hypertrees::HypertreeDefect,
    },

    /// A planted hyperforest whose roots do not pick one vertex per component.
    #[error("invalid roots: {0}")]
    InvalidRoots(String),

    /// Objects on different ground sets were compared.
    #[error("ground sets differ: [{0}] vs [{1}]")]
    MismatchedGroundSet(u32, u32),

    /// The hypertree-sum path is capped; use the closed form instead.
    #[error(
        "n={n} exceeds the hypertree-sum ceiling {ceiling}; use the closed form \
         (or raise the ceiling)"
    )]
    SumCeilingExceeded { n: u32, ceiling: u32 },

    /// A calculator that needs finite factors was handed an infinite one.
    #[error("factor {index} ({kind}) is not a finite group with known Inn/Out orders")]
    NonFiniteFactor { index: usize, kind: String },

    /// Whitehead-type calculators need a genuine free product.
    #[error("need at least {needed} free factors, got {got}")]
    TooFewFactors { needed: u32, got: u32 },

    /// A malformed factor token in the group mini-language.
    #[error("cannot parse group token {0:?}")]
    BadGroupToken(String),

    /// A cross-check between two computation routes disagreed.
    #[error("cross-check failed for {what}: sum path {sum} != closed form {closed}")]
    CrossCheckMismatch {
        what: String,
        sum: String,
        closed: String,
    },
}

/// Convenience result alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
