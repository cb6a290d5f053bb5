use std::sync::Arc;

use num_traits::One;

use super::engine::{self, Counter, SPoly};
use super::{Ideal, MonomialOrder};
use crate::config::{Budget, Config};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::ring::Ring;

/// Local intersection `A ∩ B`, eliminating `t` from `t·A + (1 - t)·B`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: Budget) -> Result<Ideal> {
    let ring = a.ring();
    if b.ring() != ring {
        return Err(Error::RingMismatch);
    }
    let ext = ring.extended(&["t"]);
    let n = ring.n();
    let lift: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&ext, n);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&t * &g.relabel(&ext, &lift));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.relabel(&ext, &lift));
    }
    let ord = MonomialOrder::elimination(&ext, 1);
    let sorted = engine::complete(gens.iter().map(|g| SPoly::from_poly(g, &ord)).collect(), &ord, budget)?;
    let kept = sorted
        .iter()
        .filter(|g| g.lead().exponents()[n] == 0)
        .map(|g| restrict(g, ring, n))
        .collect();
    Ideal::new(ring, kept)
}

fn restrict(g: &SPoly, ring: &Arc<Ring>, n: usize) -> Polynomial {
    let terms = g
        .terms
        .iter()
        .map(|(m, c)| {
            debug_assert_eq!(m.exponents()[n], 0);
            (Monomial::from_exponents(m.exponents()[..n].to_vec()), c.clone())
        })
        .collect::<Vec<_>>();
    Polynomial::from_terms(ring, terms)
}

/// Local ideal quotient `J : f`. Each generator of `J ∩ (f)` is divided by
/// `f` in the local ring with the division representation tracked.
pub fn ideal_quotient(j: &Ideal, f: &Polynomial, budget: Budget) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::InvalidInput("quotient by the zero polynomial".into()));
    }
    let ring = j.ring();
    let fi = Ideal::new(ring, vec![f.clone()])?;
    let inter = intersect(j, &fi, budget)?;
    let ord = MonomialOrder::local(ring);
    let sf = SPoly::from_poly(f, &ord);
    let mut counter = Counter::new(budget);
    let mut quotients = Vec::new();
    for h in inter.generators() {
        let (rem, _alpha, beta) = engine::tracked_division(SPoly::from_poly(h, &ord), &sf, &ord, &mut counter)?;
        if !rem.is_zero() {
            return Err(Error::Inconsistency(format!("{h} lies in (f) but does not reduce to zero")));
        }
        // alpha*h + beta*f = 0 with alpha a unit, so h/f and -beta differ by a unit
        quotients.push(beta.mul_monomial(&Monomial::one(ring.n()), &-Rational::one()).to_poly(ring));
    }
    Ideal::new(ring, quotients)
}

/// `J : I`, the intersection of the quotients by the generators of `I`.
pub fn quotient_by_ideal(j: &Ideal, i: &Ideal, budget: Budget) -> Result<Ideal> {
    let mut gens = i.generators().iter();
    let Some(first) = gens.next() else {
        return Ideal::new(j.ring(), vec![Polynomial::one(j.ring())]);
    };
    let mut acc = ideal_quotient(j, first, budget)?;
    for g in gens {
        let q = ideal_quotient(j, g, budget)?;
        acc = intersect(&acc, &q, budget)?;
    }
    Ok(acc)
}

/// Result of [`saturate`].
#[derive(Clone, Debug)]
pub struct Saturation {
    pub ideal: Ideal,
    /// Quotient rounds that enlarged the ideal.
    pub rounds: u32,
}

/// Local saturation `J : I^∞`, iterating `J ← J : I` until the lead ideal
/// stops growing.
pub fn saturate(j: &Ideal, i: &Ideal, config: &Config) -> Result<Saturation> {
    let budget = config.budget;
    let mut current = j.clone();
    let mut lead = current.local_basis(budget)?.lead_ideal();
    for rounds in 0..config.saturation_cap {
        let next = quotient_by_ideal(&current, i, budget)?;
        let next_lead = next.local_basis(budget)?.lead_ideal();
        if next_lead == lead {
            return Ok(Saturation { ideal: current, rounds });
        }
        current = next;
        lead = next_lead;
    }
    Err(Error::ResourceLimit(format!("saturation did not stabilize within {} rounds", config.saturation_cap)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;
    use crate::standard_basis::is_member;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).unwrap()
    }

    fn same(a: &Ideal, b: &Ideal) -> bool {
        let bud = Budget::default();
        a.generators().iter().all(|g| is_member(g, b, bud).unwrap())
            && b.generators().iter().all(|g| is_member(g, a, bud).unwrap())
    }

    #[test]
    fn simple_quotients() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let x = parse_polynomial("x", &r).unwrap();
        let q = ideal_quotient(&ideal(&r, &["x^2"]), &x, Budget::default()).unwrap();
        assert!(same(&q, &ideal(&r, &["x"])));
        let q = ideal_quotient(&ideal(&r, &["x*y"]), &x, Budget::default()).unwrap();
        assert!(same(&q, &ideal(&r, &["y"])));
    }

    #[test]
    fn quotient_by_unit_is_identity() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let u = parse_polynomial("1 + x + y^2", &r).unwrap();
        let j = ideal(&r, &["x^2 + y^3", "x*y"]);
        assert!(same(&ideal_quotient(&j, &u, Budget::default()).unwrap(), &j));
    }

    #[test]
    fn intersection_of_axes() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), Budget::default()).unwrap();
        assert!(same(&i, &ideal(&r, &["x*y"])));
    }

    #[test]
    fn saturation_reaches_unit_ideal() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let j = ideal(&r, &["x^2*y", "x^3"]);
        let s = saturate(&j, &ideal(&r, &["x"]), &Config::default()).unwrap();
        assert!(s.ideal.local_basis(Budget::default()).unwrap().is_unit());
        assert_eq!(s.rounds, 3);
    }

    #[test]
    fn saturation_cap_is_reported() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let j = ideal(&r, &["x^5*y"]);
        let cfg = Config { saturation_cap: 2, ..Config::default() };
        assert!(matches!(saturate(&j, &ideal(&r, &["x"]), &cfg), Err(Error::ResourceLimit(_))));
    }
}
