//! Invariants of a germ presented as `f = g·H·gᵗ`, with `g = (g1..g(n-3))`
//! cutting out a 3-dimensional complete intersection `Σ` and `H` a
//! symmetric matrix of germs.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::check::Check;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::icis::{milnor_icis, validate_icis};
use crate::poly::{evaluate_at_origin, jacobian, PolyMatrix, Polynomial};
use crate::ring::Ring;
use crate::standard_basis::{colength, is_member, saturate, Colength, Ideal};

/// How the number of Morse points off the singular locus is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum A1Mode {
    Provided(u64),
    #[default]
    AssumeZero,
    /// Colength of `J(f) : I^∞`. Experimental: no theorem backs it.
    Estimate,
}

/// Where the reported `#A₁` came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum A1Provenance {
    #[serde(rename = "provided")]
    Provided,
    #[serde(rename = "assumed")]
    Assumed,
    #[serde(rename = "experimental-saturation")]
    ExperimentalSaturation,
}

impl fmt::Display for A1Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            A1Provenance::Provided => "provided",
            A1Provenance::Assumed => "assumed",
            A1Provenance::ExperimentalSaturation => "experimental-saturation",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SingularityInput {
    ring: Arc<Ring>,
    g: Vec<Polynomial>,
    h: PolyMatrix,
    f_expected: Option<Polynomial>,
    a1_mode: A1Mode,
}

impl SingularityInput {
    /// Checks shapes: `n ≥ 4`, `n - 3` generators vanishing at the origin
    /// and a symmetric `H` of size `n - 3`.
    pub fn new(
        ring: &Arc<Ring>,
        g: Vec<Polynomial>,
        h: PolyMatrix,
        f_expected: Option<Polynomial>,
        a1_mode: A1Mode,
    ) -> Result<Self> {
        let n = ring.n();
        if n < 4 {
            return Err(Error::InvalidInput(format!("need at least 4 variables, got {n}")));
        }
        if g.len() != n - 3 {
            return Err(Error::InvalidInput(format!("expected {} generators g, got {}", n - 3, g.len())));
        }
        if g.iter().chain(f_expected.iter()).any(|p| p.ring() != ring) || h.ring() != ring {
            return Err(Error::RingMismatch);
        }
        if let Some(i) = g.iter().position(|p| !p.vanishes_at_origin()) {
            return Err(Error::InvalidInput(format!("g{} does not vanish at the origin", i + 1)));
        }
        if !h.is_square() {
            return Err(Error::NotSquare { rows: h.rows(), cols: h.cols() });
        }
        if h.rows() != n - 3 {
            return Err(Error::InvalidInput(format!("H must be {0}x{0}, got {1}x{1}", n - 3, h.rows())));
        }
        if !h.is_symmetric() {
            return Err(Error::InvalidInput("H is not symmetric".into()));
        }
        Ok(SingularityInput { ring: ring.clone(), g, h, f_expected, a1_mode })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn g(&self) -> &[Polynomial] {
        &self.g
    }

    pub fn h(&self) -> &PolyMatrix {
        &self.h
    }

    pub fn f_expected(&self) -> Option<&Polynomial> {
        self.f_expected.as_ref()
    }

    pub fn a1_mode(&self) -> A1Mode {
        self.a1_mode
    }

    pub fn with_a1_mode(mut self, mode: A1Mode) -> Self {
        self.a1_mode = mode;
        self
    }

    /// Same input over a ring with the variables listed in another order.
    pub fn to_ring(&self, target: &Arc<Ring>) -> Result<Self> {
        let mv = |p: &Polynomial| p.to_ring(target);
        let g = self.g.iter().map(mv).collect::<Result<Vec<_>>>()?;
        let entries = self.h.entries().iter().map(mv).collect::<Result<Vec<_>>>()?;
        let h = PolyMatrix::new(target, self.h.rows(), self.h.cols(), entries)?;
        let f = self.f_expected.as_ref().map(mv).transpose()?;
        SingularityInput::new(target, g, h, f, self.a1_mode)
    }

    fn ideal_i(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.g.clone())
    }
}

/// Expands `g·H·gᵗ` and compares it with the expected `f`, if one was given.
pub fn verify_decomposition(input: &SingularityInput) -> Result<Polynomial> {
    let k = input.g.len();
    let mut f = Polynomial::zero(&input.ring);
    for i in 0..k {
        for j in 0..k {
            let e = input.h.get(i, j);
            if !e.is_zero() {
                f = &f + &(&(&input.g[i] * e) * &input.g[j]);
            }
        }
    }
    if let Some(expected) = &input.f_expected {
        if expected != &f {
            return Err(Error::DecompositionMismatch { assembled: f.to_string(), expected: expected.to_string() });
        }
    }
    Ok(f)
}

pub fn corank_at_origin(input: &SingularityInput) -> usize {
    evaluate_at_origin(&input.h).corank()
}

/// `I + (det H)`, the ideal of the locus where `H` drops rank on `Σ`.
pub fn sigma1_ideal(input: &SingularityInput) -> Result<Ideal> {
    input.ideal_i()?.with([input.h.determinant()?])
}

pub fn compute_mu0(input: &SingularityInput, seed: u64, config: &Config) -> Result<u64> {
    milnor_icis(&input.g, seed, config)
}

/// Milnor number of `(g, det H)`; `None` when `det H` is a unit, so the
/// locus is empty near the origin and the number is vacuous.
pub fn compute_mu1(input: &SingularityInput, seed: u64, config: &Config) -> Result<Option<u64>> {
    let det = input.h.determinant()?;
    if !det.vanishes_at_origin() {
        return Ok(None);
    }
    let mut chain = input.g.clone();
    chain.push(det);
    milnor_icis(&chain, seed, config).map(Some)
}

/// Colength of `I + (minors of H of size n - 4)`; zero when `H` is 1×1.
pub fn compute_a(input: &SingularityInput, config: &Config) -> Result<u64> {
    let size = input.h.rows();
    if size < 2 {
        return Ok(0);
    }
    let ideal = input.ideal_i()?.with(input.h.minors(size - 1)?)?;
    match colength(&ideal, config.budget)? {
        Colength::Finite(a) => Ok(a),
        Colength::Infinite => Err(Error::Infinite("corank-2 locus not isolated at origin".into())),
    }
}

/// `#A₁` and where it came from.
pub fn a1_count(input: &SingularityInput, config: &Config) -> Result<(u64, A1Provenance)> {
    match input.a1_mode {
        A1Mode::Provided(v) => Ok((v, A1Provenance::Provided)),
        A1Mode::AssumeZero => Ok((0, A1Provenance::Assumed)),
        A1Mode::Estimate => {
            let f = verify_decomposition(input)?;
            let partials = jacobian(&[f])?.entries().to_vec();
            let jf = Ideal::new(&input.ring, partials)?;
            let sat = saturate(&jf, &input.ideal_i()?, config)?;
            match colength(&sat.ideal, config.budget)? {
                Colength::Finite(v) => Ok((v, A1Provenance::ExperimentalSaturation)),
                Colength::Infinite => Err(Error::Infinite("Morse-point estimate has infinite colength".into())),
            }
        }
    }
}

/// Surrogate for finite extended codimension: `(g, det H)` is an isolated
/// complete intersection and the corank-2 locus has finite colength.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteCodimension {
    pub sigma1_icis: bool,
    pub a_finite: bool,
    /// `det H` is a unit: the input is degenerate and treated as corank 0.
    pub degenerate: bool,
    pub detail: String,
}

impl FiniteCodimension {
    pub fn pass(&self) -> bool {
        self.sigma1_icis && self.a_finite
    }
}

pub fn finite_codimension_check(input: &SingularityInput, config: &Config) -> Result<FiniteCodimension> {
    let det = input.h.determinant()?;
    if !det.vanishes_at_origin() {
        return Ok(FiniteCodimension {
            sigma1_icis: true,
            a_finite: true,
            degenerate: true,
            detail: "det H is a unit: empty corank locus, classified as corank 0".into(),
        });
    }
    let mut chain = input.g.clone();
    chain.push(det);
    let validity = validate_icis(&chain, config.budget)?;
    let a_finite = match compute_a(input, config) {
        Ok(_) => true,
        Err(Error::Infinite(_)) => false,
        Err(e) => return Err(e),
    };
    let mut detail = Vec::new();
    if let Some(p) = validity.problem() {
        detail.push(format!("(g, det H): {p}"));
    }
    if !a_finite {
        detail.push("corank-2 locus not isolated at origin".into());
    }
    let detail = if detail.is_empty() { "ok".to_string() } else { detail.join("; ") };
    Ok(FiniteCodimension { sigma1_icis: validity.is_valid(), a_finite, degenerate: false, detail })
}

/// Algebraic invariants of one input.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub n: usize,
    pub f: Polynomial,
    pub mu0: u64,
    pub mu1: u64,
    /// `μ₁` reported as 0 because `det H` is a unit at the origin.
    pub mu1_vacuous: bool,
    pub a: u64,
    pub corank: usize,
    pub a1: u64,
    pub a1_provenance: A1Provenance,
    pub checks: Vec<Check>,
}

/// Full invariant computation; every failed check is an error.
pub fn compute_invariants(input: &SingularityInput, seed: u64, config: &Config) -> Result<InvariantReport> {
    let f = verify_decomposition(input)?;
    let mut checks = Vec::new();
    checks.push(Check::new(
        "decomposition",
        true,
        if input.f_expected.is_some() { "g*H*g^t equals the given f" } else { "no f given" },
    ));

    let i_squared = Ideal::new(
        &input.ring,
        (0..input.g.len())
            .flat_map(|a| (a..input.g.len()).map(move |b| (a, b)))
            .map(|(a, b)| &input.g[a] * &input.g[b])
            .collect(),
    )?;
    let jet_ok = f.terms().iter().all(|(m, _)| m.degree() >= 2);
    let in_i2 = is_member(&f, &i_squared, config.budget)?;
    checks.push(Check::new("f singular along sigma", jet_ok && in_i2, "f has zero 1-jet and lies in I^2"));
    if !(jet_ok && in_i2) {
        return Err(Error::Inconsistency("assembled f is not in I^2".into()));
    }

    let fc = finite_codimension_check(input, config)?;
    checks.push(Check::new("finite codimension", fc.pass(), fc.detail.clone()));
    if !fc.sigma1_icis {
        return Err(Error::NotIcis(fc.detail));
    }
    if !fc.a_finite {
        return Err(Error::Infinite(fc.detail));
    }

    let mu0 = compute_mu0(input, seed, config)?;
    let mu1 = compute_mu1(input, seed, config)?;
    let a = compute_a(input, config)?;
    let corank = if fc.degenerate { 0 } else { corank_at_origin(input) };
    let (a1, a1_provenance) = a1_count(input, config)?;

    let strata = (corank >= 2) == (a >= 1);
    checks.push(Check::new("corank >= 2 iff a >= 1", strata, format!("corank {corank}, a {a}")));
    if !strata {
        return Err(Error::Inconsistency(format!("corank {corank} with a = {a}")));
    }
    let mu1v = mu1.unwrap_or(0);
    if corank >= 2 {
        let (m, a) = (mu1v as i64, a as i64);
        for (name, value) in [("mu1 - 2a + 1 >= 0", m - 2 * a + 1), ("mu1 - a >= 0", m - a), ("2mu1 - 3a + 1 >= 0", 2 * m - 3 * a + 1)] {
            checks.push(Check::new(name, value >= 0, format!("value {value}")));
            if value < 0 {
                return Err(Error::Inconsistency(format!("{name} fails: value {value}")));
            }
        }
    }

    Ok(InvariantReport {
        n: input.n(),
        f,
        mu0,
        mu1: mu1v,
        mu1_vacuous: mu1.is_none(),
        a,
        corank,
        a1,
        a1_provenance,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(r: &Arc<Ring>, s: &str) -> Polynomial {
        parse_polynomial(s, r).unwrap()
    }

    fn input(vars: &[&str], g: &[&str], h: &[&[&str]]) -> SingularityInput {
        let r = Ring::new(vars).unwrap();
        let g = g.iter().map(|s| p(&r, s)).collect();
        let rows = h.iter().map(|row| row.iter().map(|s| p(&r, s)).collect()).collect();
        let h = PolyMatrix::from_rows(&r, rows).unwrap();
        SingularityInput::new(&r, g, h, None, A1Mode::AssumeZero).unwrap()
    }

    const V5: [&str; 5] = ["x1", "x2", "x3", "y1", "y2"];

    #[test]
    fn decomposition_expands() {
        let inp = input(&V5, &["y1", "y2"], &[&["x3", "x2"], &["x2", "x1 - x3"]]);
        let f = verify_decomposition(&inp).unwrap();
        assert_eq!(f, p(inp.ring(), "x3*y1^2 + 2*x2*y1*y2 + (x1 - x3)*y2^2"));
        let zero = input(&V5, &["y1", "y2"], &[&["0", "0"], &["0", "0"]]);
        assert!(verify_decomposition(&zero).unwrap().is_zero());
    }

    #[test]
    fn decomposition_mismatch_is_reported() {
        let r = Ring::new(&V5).unwrap();
        let h = PolyMatrix::identity(&r, 2);
        let g = vec![p(&r, "y1"), p(&r, "y2")];
        let inp = SingularityInput::new(&r, g, h, Some(p(&r, "y1^2")), A1Mode::AssumeZero).unwrap();
        assert!(matches!(verify_decomposition(&inp), Err(Error::DecompositionMismatch { .. })));
    }

    #[test]
    fn rejects_bad_shapes() {
        let r = Ring::new(&V5).unwrap();
        let g = vec![p(&r, "y1"), p(&r, "y2")];
        let h = PolyMatrix::from_rows(&r, vec![vec![p(&r, "x1"), p(&r, "x2")], vec![p(&r, "x3"), p(&r, "x1")]]).unwrap();
        assert!(SingularityInput::new(&r, g.clone(), h, None, A1Mode::AssumeZero).is_err());
        let h = PolyMatrix::identity(&r, 3);
        assert!(SingularityInput::new(&r, g, h, None, A1Mode::AssumeZero).is_err());
    }

    #[test]
    fn family_invariants() {
        for k in 1..=3 {
            let phi = format!("x1^{k} - x3");
            let inp = input(&V5, &["y1", "y2"], &[&["x3", "x2"], &["x2", phi.as_str()]]);
            let rep = compute_invariants(&inp, 0, &Config::default()).unwrap();
            assert_eq!((rep.mu0, rep.mu1, rep.a, rep.corank), (0, 2 * k - 1, k, 2));
        }
    }

    #[test]
    fn sigma1_of_family() {
        let inp = input(&V5, &["y1", "y2"], &[&["x3", "x2"], &["x2", "x1^2 - x3"]]);
        let s = sigma1_ideal(&inp).unwrap();
        assert_eq!(s.generators()[2], p(inp.ring(), "x3*(x1^2 - x3) - x2^2"));
    }

    #[test]
    fn corank_cases() {
        let zero = input(&V5, &["y1", "y2"], &[&["x3", "x2"], &["x2", "x1"]]);
        assert_eq!(corank_at_origin(&zero), 2);
        let one = input(&V5, &["y1", "y2"], &[&["x1", "0"], &["0", "1"]]);
        assert_eq!(corank_at_origin(&one), 1);
        let id = input(&V5, &["y1", "y2"], &[&["1", "0"], &["0", "1"]]);
        assert_eq!(corank_at_origin(&id), 0);
    }

    #[test]
    fn degenerate_identity() {
        let id = input(&V5, &["y1", "y2"], &[&["1", "0"], &["0", "1"]]);
        let fc = finite_codimension_check(&id, &Config::default()).unwrap();
        assert!(fc.pass() && fc.degenerate);
        let rep = compute_invariants(&id, 0, &Config::default()).unwrap();
        assert!(rep.mu1_vacuous);
        assert_eq!((rep.mu1, rep.a, rep.corank), (0, 0, 0));
    }

    #[test]
    fn vanishing_phi_fails_the_check() {
        let inp = input(&V5, &["y1", "y2"], &[&["x3", "x2"], &["x2", "-x3"]]);
        let fc = finite_codimension_check(&inp, &Config::default()).unwrap();
        assert!(!fc.a_finite);
        assert!(!fc.pass());
    }

    #[test]
    fn a1_modes() {
        let inp = input(&V5, &["y1", "y2"], &[&["x3", "x2"], &["x2", "x1 - x3"]]);
        let cfg = Config::default();
        assert_eq!(a1_count(&inp, &cfg).unwrap(), (0, A1Provenance::Assumed));
        let inp = inp.with_a1_mode(A1Mode::Provided(5));
        assert_eq!(a1_count(&inp, &cfg).unwrap(), (5, A1Provenance::Provided));
    }
}
