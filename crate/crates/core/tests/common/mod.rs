//! Independent oracles. None of them touches the standard basis engine:
//! they work by dense linear algebra on truncated polynomial spaces, by
//! enumeration, or by closed formulas.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use bouquet::poly::{parse_polynomial, Polynomial};
use bouquet::ring::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Zero};

pub fn poly(ring: &Arc<Ring>, s: &str) -> Polynomial {
    parse_polynomial(s, ring).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn polys(ring: &Arc<Ring>, src: &[&str]) -> Vec<Polynomial> {
    src.iter().map(|s| poly(ring, s)).collect()
}

/// Row echelon form over the rationals, built one sparse row at a time.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, BTreeMap<usize, BigRational>>,
}

impl Echelon {
    fn reduce(&self, mut row: BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigRational> {
        loop {
            let Some((&col, _)) = row.iter().find(|(c, _)| self.pivots.contains_key(c)) else { return row };
            let factor = row[&col].clone();
            for (c, v) in &self.pivots[&col] {
                let e = row.entry(*c).or_insert_with(BigRational::zero);
                *e -= &factor * v;
                if e.is_zero() {
                    row.remove(c);
                }
            }
        }
    }

    /// Adds a row; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, row: BTreeMap<usize, BigRational>) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lead_val)) = row.iter().next() else { return false };
        let inv = BigRational::one() / lead_val;
        let row: BTreeMap<usize, BigRational> = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: BTreeMap<usize, BigRational>) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Exponent vectors of total degree below `d` in `n` variables.
pub fn monomials_below(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, budget: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            rec(n, budget - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        rec(n, d - 1, &mut Vec::new(), &mut out);
    }
    out
}

/// `R / (I + m^d)` as a linear algebra problem: the span of `m·g` for
/// monomials `m`, truncated to degree `< d`.
pub struct Truncation {
    pub d: u32,
    index: HashMap<Vec<u32>, usize>,
    span: Echelon,
}

impl Truncation {
    pub fn new(gens: &[Polynomial], d: u32) -> Self {
        let n = gens[0].ring().n();
        let monos = monomials_below(n, d);
        let index: HashMap<Vec<u32>, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let mut t = Truncation { d, index, span: Echelon::default() };
        for g in gens {
            let low = g.terms().iter().map(|(m, _)| m.degree()).min().unwrap_or(0);
            for m in &monos {
                let deg: u32 = m.iter().sum();
                if deg + low >= d {
                    continue;
                }
                let row = t.row_of_product(g, m);
                t.span.insert(row);
            }
        }
        t
    }

    fn row_of_product(&self, g: &Polynomial, shift: &[u32]) -> BTreeMap<usize, BigRational> {
        let mut row = BTreeMap::new();
        for (m, c) in g.terms() {
            let e: Vec<u32> = m.exponents().iter().zip(shift).map(|(a, b)| a + b).collect();
            if let Some(&i) = self.index.get(&e) {
                row.insert(i, c.clone());
            }
        }
        row
    }

    pub fn colength(&self) -> u64 {
        (self.index.len() - self.span.rank()) as u64
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let zero = vec![0; f.ring().n()];
        self.span.contains(self.row_of_product(f, &zero))
    }
}

/// Local colength by truncation: `dim R/(I + m^d)` stops growing exactly
/// when `m^d ⊆ I` locally, at which point it is the colength of `I`.
/// `None` if that does not happen below `d_max`.
pub fn truncated_colength(gens: &[Polynomial], d_max: u32) -> Option<u64> {
    let mut prev = None;
    for d in 1..=d_max {
        let c = Truncation::new(gens, d).colength();
        if prev == Some(c) {
            return Some(c);
        }
        prev = Some(c);
    }
    None
}

/// Monomials outside a monomial ideal, by enumeration. `None` when some
/// variable has no pure power among the generators.
pub fn staircase_count(gens: &[Vec<u32>], n: usize) -> Option<u64> {
    let mut bound = vec![None; n];
    for g in gens {
        let support: Vec<usize> = (0..n).filter(|&i| g[i] > 0).collect();
        if support.len() == 1 {
            let i = support[0];
            bound[i] = Some(bound[i].map_or(g[i], |b: u32| b.min(g[i])));
        }
        if support.is_empty() {
            return Some(0);
        }
    }
    let bound: Vec<u32> = bound.into_iter().collect::<Option<_>>()?;
    let mut count = 0;
    let mut e = vec![0u32; n];
    loop {
        if !gens.iter().any(|g| g.iter().zip(&e).all(|(a, b)| a <= b)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == n {
                return Some(count);
            }
            e[i] += 1;
            if e[i] < bound[i] {
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

/// Rank over the rationals of an integer matrix.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut e = Echelon::default();
    for r in rows {
        let row = r
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (i, BigRational::from_integer(BigInt::from(*v))))
            .collect();
        e.insert(row);
    }
    e.rank()
}

/// Milnor number of an isolated quasi-homogeneous germ with weights
/// `w_i = p_i / q_i` (degree 1): `Π (1/w_i - 1)`.
pub fn weighted_milnor(weights: &[(u32, u32)]) -> u64 {
    let mut acc = BigRational::one();
    for &(p, q) in weights {
        acc *= BigRational::new(BigInt::from(q - p), BigInt::from(p));
    }
    assert!(acc.is_integer(), "weights do not give an integer Milnor number");
    acc.to_integer().try_into().expect("fits in u64")
}

/// Determinant by permutation expansion.
fn det(m: &[Vec<i64>]) -> BigInt {
    fn rec(m: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> BigInt {
        if row == m.len() {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        let mut sign = 1i64;
        for c in 0..m.len() {
            if used[c] {
                continue;
            }
            if m[row][c] != 0 {
                used[c] = true;
                acc += BigInt::from(sign * m[row][c]) * rec(m, row + 1, used);
                used[c] = false;
            }
            sign = -sign;
        }
        acc
    }
    rec(m, 0, &mut vec![false; m.len()])
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `k`-th determinantal divisor: gcd of all `k × k` minors.
pub fn determinantal_divisor(m: &[Vec<i64>], k: usize) -> BigInt {
    let (r, c) = (m.len(), m[0].len());
    let mut g = BigInt::zero();
    for rows in subsets(r, k) {
        for cols in subsets(c, k) {
            let sub: Vec<Vec<i64>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j]).collect()).collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}
