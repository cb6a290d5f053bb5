//! Milnor numbers of isolated complete intersection singularities through
//! the Lê–Greuel recursion
//!
//! ```text
//! μ(f1..fk) + μ(f1..f(k-1)) = colength((f1..f(k-1)) + maximal minors of J(f1..fk))
//! ```
//!
//! applied to a seeded generic recombination of the input.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{Budget, Config};
use crate::error::{Error, Result};
use crate::poly::{jacobian, rat, ConstantMatrix, Polynomial};
use crate::ring::Ring;
use crate::standard_basis::{colength, Colength, Ideal};

/// Outcome of [`validate_icis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IcisValidity {
    /// Indices of functions that do not vanish at the origin.
    pub nonvanishing: Vec<usize>,
    /// Colength of the functions together with the maximal minors of their
    /// Jacobian; finite exactly when the singularity is isolated.
    pub singular_colength: Colength,
}

impl IcisValidity {
    pub fn is_valid(&self) -> bool {
        self.nonvanishing.is_empty() && self.singular_colength.is_finite()
    }

    /// Why the input was rejected, if it was.
    pub fn problem(&self) -> Option<String> {
        if let Some(i) = self.nonvanishing.first() {
            return Some(format!("function {} does not vanish at the origin", i + 1));
        }
        if !self.singular_colength.is_finite() {
            return Some("the singular locus is not isolated at the origin".into());
        }
        None
    }
}

fn ring_of(fs: &[Polynomial]) -> Result<Arc<Ring>> {
    let ring = fs
        .first()
        .ok_or_else(|| Error::InvalidInput("empty function sequence".into()))?
        .ring()
        .clone();
    if fs.iter().any(|f| f.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    if fs.len() > ring.n() {
        return Err(Error::InvalidInput(format!("{} functions in {} variables", fs.len(), ring.n())));
    }
    Ok(ring)
}

/// `(prefix) + maximal minors of J(chain)`.
fn minors_ideal(prefix: &[Polynomial], chain: &[Polynomial]) -> Result<Ideal> {
    let ring = chain[0].ring();
    let minors = jacobian(chain)?.minors(chain.len())?;
    let mut gens = prefix.to_vec();
    gens.extend(minors);
    Ideal::new(ring, gens)
}

/// Checks that `fs` vanish at the origin and define an isolated singularity
/// (or a smooth germ).
pub fn validate_icis(fs: &[Polynomial], budget: Budget) -> Result<IcisValidity> {
    ring_of(fs)?;
    let nonvanishing = fs.iter().enumerate().filter(|(_, f)| !f.vanishes_at_origin()).map(|(i, _)| i).collect();
    let singular_colength = colength(&minors_ideal(fs, fs)?, budget)?;
    Ok(IcisValidity { nonvanishing, singular_colength })
}

/// Random integer matrix with entries in `[-9, 9]`, invertible over the
/// rationals.
fn random_invertible(k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    loop {
        let m: Vec<Vec<i64>> = (0..k).map(|_| (0..k).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let c = ConstantMatrix {
            rows: k,
            cols: k,
            entries: m.iter().flatten().map(|&v| rat(v)).collect(),
        };
        if c.rank() == k {
            return m;
        }
    }
}

fn recombine(fs: &[Polynomial], m: &[Vec<i64>]) -> Vec<Polynomial> {
    let ring = fs[0].ring();
    m.iter()
        .map(|row| {
            row.iter()
                .zip(fs)
                .fold(Polynomial::zero(ring), |acc, (&c, f)| &acc + &f.scale(&rat(c)))
        })
        .collect()
}

/// Runs the recursion on a fixed chain; `None` when some step has infinite
/// colength, meaning the chain is not generic enough.
fn recursion(chain: &[Polynomial], budget: Budget) -> Result<Option<u64>> {
    let mut mu_prev: u64 = 0;
    for j in 1..=chain.len() {
        let c = match colength(&minors_ideal(&chain[..j - 1], &chain[..j])?, budget)? {
            Colength::Finite(c) => c,
            Colength::Infinite => return Ok(None),
        };
        mu_prev = c.checked_sub(mu_prev).ok_or_else(|| {
            Error::Inconsistency(format!("negative Milnor number at step {j} of the recursion"))
        })?;
    }
    Ok(Some(mu_prev))
}

/// Milnor number of the complete intersection `fs` at the origin.
///
/// The result does not depend on `seed`; the seed only drives the generic
/// recombination that makes every truncation of the chain admissible.
pub fn milnor_icis(fs: &[Polynomial], seed: u64, config: &Config) -> Result<u64> {
    let validity = validate_icis(fs, config.budget)?;
    if let Some(p) = validity.problem() {
        return Err(Error::NotIcis(p));
    }
    let k = fs.len();
    for attempt in 0..config.retry_cap {
        let derived = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(u64::from(attempt));
        let mut rng = ChaCha8Rng::seed_from_u64(derived);
        let chain = recombine(fs, &random_invertible(k, &mut rng));
        if let Some(mu) = recursion(&chain, config.budget)? {
            return Ok(mu);
        }
    }
    Err(Error::NotIcis(format!("no generic chain found in {} attempts", config.retry_cap)))
}
