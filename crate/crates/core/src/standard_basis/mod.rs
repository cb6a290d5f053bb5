//! Standard bases in the local ring at the origin (Mora) and Gröbner bases
//! for the global graded order, with colength, membership, ideal quotients
//! and saturation built on top.

mod engine;
mod order;
mod quotient;

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

pub use order::{MonomialOrder, OrderKind};
pub use quotient::{ideal_quotient, intersect, quotient_by_ideal, saturate, Saturation};

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};
use crate::ring::Ring;
use engine::{Counter, SPoly};

/// Ideal of the polynomial ring, read in the localization selected by the
/// order used to compute its basis.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
    local_basis: OnceLock<StandardBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let local_basis = OnceLock::new();
        if let Some(b) = self.local_basis.get() {
            let _ = local_basis.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), local_basis }
    }
}

impl Ideal {
    /// Zero generators are dropped; every generator must live in `ring`.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, local_basis: OnceLock::new() })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Ideal generated by the generators of both.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    /// Standard basis under the local order, computed once.
    pub fn local_basis(&self, budget: Budget) -> Result<&StandardBasis> {
        if let Some(b) = self.local_basis.get() {
            return Ok(b);
        }
        let b = standard_basis(self, &MonomialOrder::local(&self.ring), budget)?;
        Ok(self.local_basis.get_or_init(|| b))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Completed basis under a fixed order.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    order: MonomialOrder,
    sorted: Vec<SPoly>,
    elements: Vec<Polynomial>,
}

impl StandardBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Lead monomials; they generate the lead ideal.
    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|g| g.lead().clone()).collect()
    }

    /// Whether the ideal is the whole (localized) ring.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|g| g.lead().is_one())
    }

    /// Lead ideal as a canonical sorted set of minimal generators.
    pub fn lead_ideal(&self) -> Vec<Monomial> {
        minimal_monomials(self.lead_monomials())
    }
}

/// Vector space dimension of the quotient by an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(v),
            Colength::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Colength::Finite(_))
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(v) => write!(f, "{v}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

/// Completes the generators of `ideal` to a standard basis under `order`.
pub fn standard_basis(ideal: &Ideal, order: &MonomialOrder, budget: Budget) -> Result<StandardBasis> {
    if order.ring() != ideal.ring() {
        return Err(Error::RingMismatch);
    }
    let gens = ideal.generators.iter().map(|g| SPoly::from_poly(g, order)).collect();
    let sorted = engine::complete(gens, order, budget)?;
    Ok(from_sorted(sorted, order))
}

fn from_sorted(sorted: Vec<SPoly>, order: &MonomialOrder) -> StandardBasis {
    let elements = sorted.iter().map(|g| g.to_poly(order.ring())).collect();
    StandardBasis { order: order.clone(), sorted, elements }
}

/// Normal form of `f`: ordinary division remainder for the global order,
/// Mora's weak normal form for local and mixed orders. Against a completed
/// basis it vanishes exactly when `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &StandardBasis, budget: Budget) -> Result<Polynomial> {
    if f.ring() != basis.order.ring() {
        return Err(Error::RingMismatch);
    }
    let mut counter = Counter::new(budget);
    let h = engine::normal_form(SPoly::from_poly(f, &basis.order), &basis.sorted, &basis.order, &mut counter)?;
    Ok(h.to_poly(f.ring()))
}

/// Membership of `f` in the localization of `ideal` at the origin.
pub fn is_member(f: &Polynomial, ideal: &Ideal, budget: Budget) -> Result<bool> {
    let basis = ideal.local_basis(budget)?;
    Ok(normal_form(f, basis, budget)?.is_zero())
}

/// Colength of `ideal` in the local ring at the origin.
pub fn colength(ideal: &Ideal, budget: Budget) -> Result<Colength> {
    let basis = ideal.local_basis(budget)?;
    Ok(staircase_size(&basis.lead_monomials(), ideal.ring().n()))
}

/// Number of monomials outside the monomial ideal generated by `leads`.
pub fn staircase_size(leads: &[Monomial], n: usize) -> Colength {
    if leads.iter().any(|m| m.is_one()) {
        return Colength::Finite(0);
    }
    let mut has_power = vec![false; n];
    for m in leads {
        if let Some(i) = m.pure_power_of() {
            has_power[i] = true;
        }
    }
    if has_power.iter().any(|p| !p) {
        return Colength::Infinite;
    }
    let standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut queue = VecDeque::new();
    let one = Monomial::one(n);
    seen.insert(one.clone());
    queue.push_back(one);
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let next = m.mul(&Monomial::var(n, i, 1));
            if standard(&next) && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Colength::Finite(seen.len() as u64)
}

fn minimal_monomials(mut ms: Vec<Monomial>) -> Vec<Monomial> {
    ms.sort();
    ms.dedup();
    let keep: Vec<bool> = ms
        .iter()
        .enumerate()
        .map(|(i, m)| !ms.iter().enumerate().any(|(j, l)| j != i && l.divides(m)))
        .collect();
    ms.into_iter().zip(keep).filter(|(_, k)| *k).map(|(m, _)| m).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ideal(ring: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(ring, gens.iter().map(|s| parse_polynomial(s, ring).unwrap()).collect()).unwrap()
    }

    fn b() -> Budget {
        Budget::default()
    }

    #[test]
    fn normal_forms() {
        let r = Ring::new(&["x1", "x2"]).unwrap();
        let i = ideal(&r, &["x1"]);
        let sb = i.local_basis(b()).unwrap();
        let x1sq = parse_polynomial("x1^2", &r).unwrap();
        assert!(normal_form(&x1sq, sb, b()).unwrap().is_zero());
        let x2 = parse_polynomial("x2", &r).unwrap();
        assert_eq!(normal_form(&x2, sb, b()).unwrap(), x2);
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = Ring::new(&["x1", "x2"]).unwrap();
        let i = ideal(&r, &["x1^2", "x1*x2", "x2^3"]);
        let sb = i.local_basis(b()).unwrap();
        let mut got = sb.elements().to_vec();
        got.sort_by_key(|p| p.to_string());
        let mut want = i.generators().to_vec();
        want.sort_by_key(|p| p.to_string());
        assert_eq!(got, want);
    }

    #[test]
    fn symmetric_pair_has_maximal_lead_ideal() {
        let r = Ring::new(&["x1", "x2"]).unwrap();
        let i = ideal(&r, &["x1 + x2^2", "x2 + x1^2"]);
        let sb = i.local_basis(b()).unwrap();
        assert_eq!(
            sb.lead_ideal(),
            vec![Monomial::from_exponents(vec![0, 1]), Monomial::from_exponents(vec![1, 0])]
        );
        assert_eq!(colength(&i, b()).unwrap(), Colength::Finite(1));
    }

    #[test]
    fn colengths() {
        let r = Ring::new(&["x", "y"]).unwrap();
        assert_eq!(colength(&ideal(&r, &["x^2", "y^3"]), b()).unwrap(), Colength::Finite(6));
        assert_eq!(colength(&ideal(&r, &["x"]), b()).unwrap(), Colength::Infinite);
        assert_eq!(colength(&ideal(&r, &["1 + x", "y^5"]), b()).unwrap(), Colength::Finite(0));
        let r5 = Ring::new(&["x1", "x2", "x3", "x4", "x5"]).unwrap();
        let i = ideal(&r5, &["x1", "x2", "x3", "x4", "x5^2"]);
        assert_eq!(colength(&i, b()).unwrap(), Colength::Finite(2));
    }

    #[test]
    fn global_order_gives_reduced_groebner_basis() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let i = ideal(&r, &["x^2 - y", "x*y - 1"]);
        let sb = standard_basis(&i, &MonomialOrder::global(&r), b()).unwrap();
        for g in i.generators() {
            assert!(normal_form(g, &sb, b()).unwrap().is_zero());
        }
        let x = parse_polynomial("x", &r).unwrap();
        assert!(!normal_form(&x, &sb, b()).unwrap().is_zero());
        // globally the ideal is the point (1,1)-orbit; locally it is the unit ideal
        assert!(i.local_basis(b()).unwrap().is_unit());
    }

    #[test]
    fn membership() {
        let r = Ring::new(&["x1", "x2"]).unwrap();
        let f = parse_polynomial("x1^3 + x1*x2 - x2^4", &r).unwrap();
        let i = Ideal::new(&r, vec![f.clone()]).unwrap();
        assert!(is_member(&f, &i, b()).unwrap());
        let one = Polynomial::one(&r);
        assert!(!is_member(&one, &ideal(&r, &["x1"]), b()).unwrap());
    }

    #[test]
    fn basis_is_cached() {
        let r = Ring::new(&["x"]).unwrap();
        let i = ideal(&r, &["x^3"]);
        let a = i.local_basis(b()).unwrap() as *const _;
        let c = i.local_basis(b()).unwrap() as *const _;
        assert_eq!(a, c);
    }
}
