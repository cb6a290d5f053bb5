use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Finitely generated abelian group `Z^rank ⊕ Z/d1 ⊕ … ⊕ Z/dk`, with
/// `d1 | d2 | … | dk` and every `di ≥ 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct FgAbelianGroup {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl FgAbelianGroup {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: u64) -> Self {
        FgAbelianGroup { rank, torsion: Vec::new() }
    }

    /// `(Z/2)^m`.
    pub fn z2_power(m: u64) -> Self {
        FgAbelianGroup { rank: 0, torsion: vec![2; m as usize] }
    }

    /// Normalizes arbitrary cyclic orders: 1 is dropped, 0 counts as a
    /// free summand, the rest is rewritten as invariant factors.
    pub fn new(rank: u64, orders: &[u64]) -> Self {
        let mut rank = rank;
        // prime -> exponents of the prime-power summands
        let mut parts: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &d in orders {
            if d == 0 {
                rank += 1;
                continue;
            }
            for (p, e) in factor(d) {
                parts.entry(p).or_default().push(e);
            }
        }
        let len = parts.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for (p, mut exps) in parts {
            exps.sort_unstable();
            // largest powers go to the last invariant factors
            for (k, e) in exps.iter().rev().enumerate() {
                torsion[len - 1 - k] *= p.pow(*e);
            }
        }
        FgAbelianGroup { rank, torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders = self.torsion.clone();
        orders.extend(&other.torsion);
        FgAbelianGroup::new(self.rank + other.rank, &orders)
    }

    /// Number of even invariant factors; the dimension of both `G ⊗ Z/2`
    /// (minus the rank) and `Tor(G, Z/2)`.
    pub fn even_torsion(&self) -> u64 {
        self.torsion.iter().filter(|d| *d % 2 == 0).count() as u64
    }

    /// `dim (G ⊗ Z/2)`.
    pub fn tensor_z2_dim(&self) -> u64 {
        self.rank + self.even_torsion()
    }

    /// `dim Tor(G, Z/2)`.
    pub fn tor_z2_dim(&self) -> u64 {
        self.even_torsion()
    }

    /// For a group of the form `(Z/2)^m`, returns `m`.
    pub fn z2_dim(&self) -> Option<u64> {
        (self.rank == 0 && self.torsion.iter().all(|&d| d == 2)).then_some(self.torsion.len() as u64)
    }
}

fn factor(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        let mut e = 0;
        while d.is_multiple_of(p) {
            d /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|&&x| x == d).count();
            parts.push(if run == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{run}") });
            i += run;
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        assert_eq!(FgAbelianGroup::new(0, &[2, 3]), FgAbelianGroup { rank: 0, torsion: vec![6] });
        assert_eq!(FgAbelianGroup::new(1, &[4, 2, 1, 0]), FgAbelianGroup { rank: 2, torsion: vec![2, 4] });
        assert_eq!(FgAbelianGroup::new(0, &[12, 18]), FgAbelianGroup { rank: 0, torsion: vec![6, 36] });
    }

    #[test]
    fn mod_two_dimensions() {
        let g = FgAbelianGroup::new(3, &[2, 3, 4]);
        assert_eq!(g.tensor_z2_dim(), 5);
        assert_eq!(g.tor_z2_dim(), 2);
        assert_eq!(FgAbelianGroup::z2_power(3).z2_dim(), Some(3));
        assert_eq!(FgAbelianGroup::free(1).z2_dim(), None);
    }

    #[test]
    fn display() {
        assert_eq!(FgAbelianGroup::zero().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(1).to_string(), "Z");
        assert_eq!(FgAbelianGroup::new(2, &[2, 2]).to_string(), "Z^2 + (Z/2)^2");
        assert_eq!(FgAbelianGroup::z2_power(1).to_string(), "Z/2");
    }
}
