//! Exact invariants and Milnor fibre homology of germs `f = g·H·gᵗ`
//! singular along a 3-dimensional complete intersection.
//!
//! The pipeline runs bottom up: [`poly`] and [`standard_basis`] give exact
//! colengths in the local ring, [`icis`] turns them into Milnor numbers,
//! [`hessian`] computes `μ₀`, `μ₁`, `a`, the corank and `#A₁`, and
//! [`homology`] evaluates the closed-form tables and their cross-checks.
//! [`job`] and [`report`] handle the file formats used by the CLI.

pub mod config;
pub mod error;
pub mod poly;
pub mod ring;
pub mod standard_basis;
pub mod check;
pub mod hessian;
pub mod homology;
pub mod icis;
pub mod job;
pub mod report;
pub mod corpus;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/standard-bases.md")]
    mod standard_bases {}
    #[doc = include_str!("../../../book/src/milnor-numbers.md")]
    mod milnor_numbers {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
