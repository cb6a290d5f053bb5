//! Rewriting core: polynomials sorted under a working monomial order,
//! Mora's weak normal form, and pair-driven basis completion.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::order::{MonomialOrder, OrderKind};
use crate::config::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational};
use crate::ring::Ring;

/// Polynomial with terms sorted descending under a working order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SPoly {
    pub terms: Vec<(Monomial, Rational)>,
    /// Highest total degree of any term; drives the ecart.
    pub max_deg: u32,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly { terms: Vec::new(), max_deg: 0 }
    }

    pub fn from_poly(p: &Polynomial, ord: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        terms.sort_by(|a, b| ord.cmp(b.0.exponents(), a.0.exponents()));
        Self::from_sorted(terms)
    }

    fn from_sorted(terms: Vec<(Monomial, Rational)>) -> Self {
        let max_deg = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        SPoly { terms, max_deg }
    }

    pub fn to_poly(&self, ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.clone())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        Self::from_sorted(vec![(m, c)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    pub fn lead_coeff(&self) -> &Rational {
        &self.terms[0].1
    }

    pub fn ecart(&self) -> u32 {
        self.max_deg - self.lead().degree()
    }

    pub fn make_monic(&mut self) {
        if self.is_zero() || self.lead_coeff().is_one() {
            return;
        }
        let inv = Rational::one() / self.lead_coeff();
        for (_, c) in &mut self.terms {
            *c *= &inv;
        }
    }

    /// `self - c * m * g`.
    pub fn sub_mul(&self, c: &Rational, m: &Monomial, g: &SPoly, ord: &MonomialOrder) -> SPoly {
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Monomial> = None;
        while i < a.len() || j < b.len() {
            if j < b.len() && shifted.is_none() {
                shifted = Some(b[j].0.mul(m));
            }
            let ord_ij = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                ord.cmp(a[i].0.exponents(), shifted.as_ref().unwrap().exponents())
            };
            match ord_ij {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((shifted.take().unwrap(), -(c * &b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = &a[i].1 - c * &b[j].1;
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    shifted = None;
                    i += 1;
                    j += 1;
                }
            }
        }
        SPoly::from_sorted(out)
    }

    /// Drops every term of total degree `>= d`.
    pub fn truncate(&mut self, d: u32) {
        if self.max_deg < d {
            return;
        }
        self.terms.retain(|(m, _)| m.degree() < d);
        self.max_deg = self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> SPoly {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly::from_sorted(self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect())
    }
}

pub(crate) fn spoly(f: &SPoly, g: &SPoly, ord: &MonomialOrder) -> SPoly {
    let l = f.lead().lcm(g.lead());
    let mf = l.div(f.lead()).unwrap();
    let mg = l.div(g.lead()).unwrap();
    let cf = Rational::one() / f.lead_coeff();
    let cg = Rational::one() / g.lead_coeff();
    f.mul_monomial(&mf, &cf).sub_mul(&cg, &mg, g, ord)
}

/// Shared reduction counter enforcing a [`Budget`].
pub(crate) struct Counter {
    pub steps: u64,
    budget: Budget,
}

impl Counter {
    pub fn new(budget: Budget) -> Self {
        Counter { steps: 0, budget }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget.max_reductions {
            return Err(Error::ResourceLimit(format!(
                "more than {} reduction steps",
                self.budget.max_reductions
            )));
        }
        Ok(())
    }

    fn check_basis(&self, len: usize) -> Result<()> {
        if len > self.budget.max_basis {
            return Err(Error::ResourceLimit(format!(
                "standard basis grew beyond {} elements",
                self.budget.max_basis
            )));
        }
        Ok(())
    }
}

/// Degree `d` with `m^d` inside the lead ideal of `basis`, for the local
/// order. Every pure power `x_i^e_i` must be a lead; then each monomial of
/// degree `sum(e_i - 1) + 1` is divisible by one of them. Since the
/// elements of `basis` lie in the ideal, Nakayama gives `m^d` inside the
/// ideal too, so terms of degree `>= d` may be dropped.
pub(crate) fn noether_degree(basis: &[SPoly], ord: &MonomialOrder) -> Option<u32> {
    if ord.kind() != OrderKind::LocalAntigradedRevLex {
        return None;
    }
    let n = ord.ring().n();
    let mut power: Vec<Option<u32>> = vec![None; n];
    for g in basis {
        if let Some(i) = g.lead().pure_power_of() {
            let e = g.lead().degree();
            power[i] = Some(power[i].map_or(e, |p| p.min(e)));
        }
    }
    let mut d = 1;
    for p in power {
        d += p? - 1;
    }
    Some(d)
}

/// Mora's weak normal form: returns `h` with `u*f - h` in the ideal for a
/// unit `u`, and `h = 0` or its lead monomial outside the lead ideal of
/// `basis`. Terminates for every monomial order through ecart-minimal
/// reducer selection. With a `cutoff` degree, terms at or above it are
/// dropped as they arise.
pub(crate) fn weak_normal_form(
    f: SPoly,
    basis: &[SPoly],
    ord: &MonomialOrder,
    counter: &mut Counter,
    cutoff: Option<u32>,
) -> Result<SPoly> {
    let mut extra: Vec<SPoly> = Vec::new();
    let mut h = f;
    loop {
        if let Some(d) = cutoff {
            h.truncate(d);
        }
        if h.is_zero() {
            return Ok(h);
        }
        let lm = h.lead();
        let mut best: Option<(u32, bool, usize)> = None;
        for (k, g) in basis.iter().enumerate() {
            if g.lead().divides(lm) {
                let e = g.ecart();
                if best.is_none_or(|(b, _, _)| e < b) {
                    best = Some((e, false, k));
                }
            }
        }
        for (k, g) in extra.iter().enumerate() {
            if g.lead().divides(lm) {
                let e = g.ecart();
                if best.is_none_or(|(b, _, _)| e < b) {
                    best = Some((e, true, k));
                }
            }
        }
        let Some((e, from_extra, k)) = best else { return Ok(h) };
        counter.tick()?;
        let g = if from_extra { extra[k].clone() } else { basis[k].clone() };
        if e > h.ecart() {
            extra.push(h.clone());
        }
        let m = h.lead().div(g.lead()).unwrap();
        let c = h.lead_coeff() / g.lead_coeff();
        h = h.sub_mul(&c, &m, &g, ord);
    }
}

/// Complete division for a well-ordering: no term of the result is
/// divisible by a lead monomial of `basis`.
pub(crate) fn full_normal_form(
    f: SPoly,
    basis: &[SPoly],
    ord: &MonomialOrder,
    counter: &mut Counter,
) -> Result<SPoly> {
    debug_assert!(ord.is_global());
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    let mut h = f;
    while !h.is_zero() {
        match basis.iter().find(|g| g.lead().divides(h.lead())) {
            Some(g) => {
                counter.tick()?;
                let m = h.lead().div(g.lead()).unwrap();
                let c = h.lead_coeff() / g.lead_coeff();
                h = h.sub_mul(&c, &m, g, ord);
            }
            None => {
                let t = h.terms.remove(0);
                rem.push(t);
            }
        }
    }
    Ok(SPoly::from_sorted(rem))
}

/// Normal form appropriate to the order: complete division for the global
/// order, Mora's weak normal form otherwise.
pub(crate) fn normal_form(
    f: SPoly,
    basis: &[SPoly],
    ord: &MonomialOrder,
    counter: &mut Counter,
) -> Result<SPoly> {
    if ord.is_global() {
        full_normal_form(f, basis, ord, counter)
    } else {
        weak_normal_form(f, basis, ord, counter, noether_degree(basis, ord))
    }
}

/// Weak normal form of `h0` against the single element `f`, tracking the
/// representation `h = alpha * h0 + beta * f`. Returns
/// `(h, alpha, beta)`; `alpha` is a unit of the localization.
pub(crate) fn tracked_division(
    h0: SPoly,
    f: &SPoly,
    ord: &MonomialOrder,
    counter: &mut Counter,
) -> Result<(SPoly, SPoly, SPoly)> {
    let n = f.lead().len();
    let one = SPoly::monomial(Monomial::one(n), Rational::one());
    // T-set entries: (element, alpha, beta)
    let mut t: Vec<(SPoly, SPoly, SPoly)> = vec![(f.clone(), SPoly::zero(), one.clone())];
    let (mut h, mut alpha, mut beta) = (h0, one, SPoly::zero());
    loop {
        if h.is_zero() {
            return Ok((h, alpha, beta));
        }
        let lm = h.lead();
        let best = t
            .iter()
            .enumerate()
            .filter(|(_, (g, _, _))| g.lead().divides(lm))
            .min_by_key(|(k, (g, _, _))| (g.ecart(), *k))
            .map(|(k, _)| k);
        let Some(k) = best else { return Ok((h, alpha, beta)) };
        counter.tick()?;
        let (g, ga, gb) = t[k].clone();
        if g.ecart() > h.ecart() {
            t.push((h.clone(), alpha.clone(), beta.clone()));
        }
        let m = h.lead().div(g.lead()).unwrap();
        let c = h.lead_coeff() / g.lead_coeff();
        h = h.sub_mul(&c, &m, &g, ord);
        alpha = alpha.sub_mul(&c, &m, &ga, ord);
        beta = beta.sub_mul(&c, &m, &gb, ord);
    }
}

/// Completes `gens` to a standard basis under `ord` and returns a minimal
/// one (no lead monomial divides another).
pub(crate) fn complete(gens: Vec<SPoly>, ord: &MonomialOrder, budget: Budget) -> Result<Vec<SPoly>> {
    let mut counter = Counter::new(budget);
    let mut basis: Vec<SPoly> = Vec::new();
    let mut pending: Vec<(usize, usize)> = Vec::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let n = ord.ring().n();
    let unit = || vec![SPoly::monomial(Monomial::one(n), Rational::one())];

    let add = |mut h: SPoly,
                   basis: &mut Vec<SPoly>,
                   pending: &mut Vec<(usize, usize)>,
                   pending_set: &mut HashSet<(usize, usize)>,
                   counter: &Counter|
     -> Result<bool> {
        h.make_monic();
        if ord.lead_is_unit(h.lead().exponents()) {
            return Ok(true);
        }
        let j = basis.len();
        for i in 0..j {
            pending.push((i, j));
            pending_set.insert((i, j));
        }
        basis.push(h);
        counter.check_basis(basis.len())?;
        Ok(false)
    };

    for g in gens {
        if g.is_zero() {
            continue;
        }
        if add(g, &mut basis, &mut pending, &mut pending_set, &counter)? {
            return Ok(unit());
        }
    }

    while !pending.is_empty() {
        // normal strategy: smallest lcm degree, ties by generator index
        let (pos, _) = pending
            .iter()
            .enumerate()
            .min_by_key(|(_, &(i, j))| (basis[i].lead().lcm(basis[j].lead()).degree(), j, i))
            .unwrap();
        let (i, j) = pending.swap_remove(pos);
        pending_set.remove(&(i, j));

        let (li, lj) = (basis[i].lead(), basis[j].lead());
        if li.is_coprime(lj) {
            continue;
        }
        let l = li.lcm(lj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], ord);
        let h = normal_form(s, &basis, ord, &mut counter)?;
        if !h.is_zero() && add(h, &mut basis, &mut pending, &mut pending_set, &counter)? {
            return Ok(unit());
        }
    }

    // minimalize
    let mut keep = vec![true; basis.len()];
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            if a != b && keep[b] && basis[b].lead().divides(basis[a].lead()) {
                if basis[a].lead() == basis[b].lead() && a < b {
                    continue;
                }
                keep[a] = false;
                break;
            }
        }
    }
    let mut out: Vec<SPoly> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| g).collect();
    if ord.is_global() {
        out = interreduce(out, ord, &mut counter)?;
    }
    Ok(out)
}

/// Tail-reduces a minimal global basis to the reduced one.
fn interreduce(basis: Vec<SPoly>, ord: &MonomialOrder, counter: &mut Counter) -> Result<Vec<SPoly>> {
    let mut out = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<SPoly> =
            basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
        let g = &basis[k];
        let tail = SPoly::from_sorted(g.terms[1..].to_vec());
        let tail = full_normal_form(tail, &others, ord, counter)?;
        let mut terms = vec![g.terms[0].clone()];
        terms.extend(tail.terms);
        let mut r = SPoly::from_sorted(terms);
        r.make_monic();
        out.push(r);
    }
    Ok(out)
}
