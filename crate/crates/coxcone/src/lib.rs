//! Exact-arithmetic library for finite root systems, their Weyl groups and
//! Coxeter fans, and the cone of support functions that deform the Coxeter
//! permutohedron.
//!
//! Everything is computed over ℚ or ℚ(√5) — see [`field::Scalar`] — so all
//! memberships, counts, and classifications are bit-exact. The high-level
//! entry points are:
//!
//! * [`rootsys::RootSystem::build`] — Cartan/Gram data, weights, positive roots;
//! * [`weyl::WeylGroup::enumerate`] — the Weyl group as exact matrices;
//! * [`coxfan::CoxeterFan`] — rays, walls, chambers, piecewise-linear evaluation;
//! * [`submod`] — facet inequalities of the submodular cone and its membership
//!   oracles, plus the classical set-function encodings;
//! * [`defcone`] — support-function generators, vertex realization,
//!   indecomposability, and Coxeter matroid checks.

pub mod coxfan;
pub mod defcone;
pub mod field;
pub mod linalg;
pub mod lp;
pub mod rootsys;
pub mod selftest;
pub mod submod;
pub mod weyl;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar from {0:?}")]
    ParseScalar(String),
    #[error("invalid root system spec: {0}")]
    InvalidSpec(String),
    #[error("Weyl enumeration cap {cap} exceeded (at least {found} elements)")]
    CapExceeded { cap: usize, found: usize },
    #[error("point is not dominant: pairing with coroot {index} is negative")]
    NotDominant { index: usize },
    #[error("operation requires a classical (A/B/C/D) root system")]
    NonClassical,
    #[error("operation requires a crystallographic root system")]
    NonCrystallographic,
    #[error("{0} is not a positive root of this system")]
    NotPositiveRoot(String),
    #[error("support function is missing rays: {0:?}")]
    MissingRays(Vec<String>),
    #[error("support function has unknown rays: {0:?}")]
    UnknownRays(Vec<String>),
    #[error("support functions live on different ray sets ({0} vs {1} rays)")]
    MismatchedRaySets(usize, usize),
    #[error("support function is not submodular")]
    NotSubmodular,
    #[error("set function is not normalized: {0}")]
    NotNormalized(String),
    #[error("set function domain is incomplete: missing {0}")]
    IncompleteDomain(String),
    #[error("element is not the canonical representative of its coset")]
    NotCanonical,
    #[error("elements are not comparable: u is not below v in Bruhat order")]
    BruhatIncomparable,
    #[error("coefficient must be nonnegative")]
    NegativeCoefficient,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
