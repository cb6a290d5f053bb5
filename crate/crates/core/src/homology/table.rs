use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::group::FgAbelianGroup;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Coefficients {
    #[serde(rename = "Z")]
    Integral,
    #[serde(rename = "Z/2")]
    Mod2,
}

/// The spaces whose homology is tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Space {
    /// Part of the smoothed corank-1 surface away from the corank-2 points.
    B,
    /// Sphere bundle of fibre `S^(n-4)` over `B`.
    BundleU,
    /// Sphere bundle of fibre `S^(n-3)` over `B`.
    Bundle,
    /// The pair (`Bundle`, `BundleU`).
    Pair,
    /// Universal double cover of `B`.
    Cover,
    /// `Bundle` with the local Milnor fibres at the corank-2 points glued in.
    X,
    /// Milnor fibre minus the contributions of Morse points off the singular
    /// locus.
    M,
    Fibre,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::B => "B",
            Space::BundleU => "bundle_u",
            Space::Bundle => "bundle",
            Space::Pair => "pair",
            Space::Cover => "cover",
            Space::X => "X",
            Space::M => "M",
            Space::Fibre => "fibre",
        })
    }
}

/// Graded groups `H_d`, trivial where absent. Degrees below `lower_bound`
/// are not tabulated at all.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyTable {
    pub space: Space,
    pub coefficients: Coefficients,
    /// Largest degree that may carry homology.
    pub top: usize,
    pub lower_bound: usize,
    groups: BTreeMap<usize, FgAbelianGroup>,
}

impl HomologyTable {
    pub fn new(space: Space, coefficients: Coefficients, top: usize) -> Self {
        HomologyTable { space, coefficients, top, lower_bound: 0, groups: BTreeMap::new() }
    }

    pub fn partial(mut self, lower_bound: usize) -> Self {
        self.lower_bound = lower_bound;
        self
    }

    /// Adds `g` to `H_d` as a direct summand.
    pub fn add(&mut self, d: usize, g: FgAbelianGroup) -> Result<()> {
        if d > self.top {
            return Err(Error::InvalidInput(format!("degree {d} above {} for {}", self.top, self.space)));
        }
        if g.is_trivial() {
            return Ok(());
        }
        let slot = self.groups.entry(d).or_default();
        *slot = slot.direct_sum(&g);
        Ok(())
    }

    pub fn with(mut self, d: usize, g: FgAbelianGroup) -> Result<Self> {
        self.add(d, g)?;
        Ok(self)
    }

    pub fn is_tabulated(&self, d: usize) -> bool {
        d >= self.lower_bound && d <= self.top
    }

    pub fn is_complete(&self) -> bool {
        self.lower_bound == 0
    }

    /// `H_d`; `None` when the degree is not tabulated.
    pub fn get(&self, d: usize) -> Option<FgAbelianGroup> {
        self.is_tabulated(d).then(|| self.groups.get(&d).cloned().unwrap_or_default())
    }

    /// `H_d`, treating untabulated degrees as an error.
    pub fn group(&self, d: usize) -> Result<FgAbelianGroup> {
        self.get(d).ok_or_else(|| Error::InvalidInput(format!("H_{d}({}) is not tabulated", self.space)))
    }

    /// Nontrivial groups in increasing degree.
    pub fn nontrivial(&self) -> impl Iterator<Item = (usize, &FgAbelianGroup)> {
        self.groups.iter().map(|(d, g)| (*d, g))
    }

    /// Rank for integral tables, `Z/2` dimension for mod-2 tables.
    pub fn betti(&self, d: usize) -> Option<u64> {
        let g = self.get(d)?;
        Some(match self.coefficients {
            Coefficients::Integral => g.rank,
            Coefficients::Mod2 => g.z2_dim().expect("mod-2 table holds Z/2 vector spaces"),
        })
    }

    /// Euler characteristic; only defined for complete tables.
    pub fn euler(&self) -> Option<i64> {
        if !self.is_complete() {
            return None;
        }
        Some((0..=self.top).map(|d| sign(d) * self.betti(d).unwrap() as i64).sum())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.values().all(FgAbelianGroup::is_torsion_free)
    }

    /// Mod-2 table predicted by universal coefficients,
    /// `H_d(;Z/2) = H_d ⊗ Z/2 ⊕ Tor(H_(d-1), Z/2)`. The lowest degree of a
    /// partial table is dropped since its `Tor` term is unknown.
    pub fn universal_coefficients_mod2(&self) -> Result<HomologyTable> {
        if self.coefficients != Coefficients::Integral {
            return Err(Error::InvalidInput("universal coefficients need an integral table".into()));
        }
        let lower = if self.is_complete() { 0 } else { self.lower_bound + 1 };
        let top = self.top + 1;
        let mut out = HomologyTable::new(self.space, Coefficients::Mod2, top).partial(lower);
        for d in lower..=top {
            let here = self.get(d).map_or(0, |g| g.tensor_z2_dim());
            let below = if d == 0 { 0 } else { self.get(d - 1).map_or(0, |g| g.tor_z2_dim()) };
            out.add(d, FgAbelianGroup::z2_power(here + below))?;
        }
        Ok(out)
    }

    /// Agreement on every degree tabulated in both tables.
    pub fn agrees_with(&self, other: &HomologyTable) -> bool {
        let lo = self.lower_bound.max(other.lower_bound);
        let hi = self.top.max(other.top);
        (lo..=hi).all(|d| match (self.get(d), other.get(d)) {
            (Some(a), Some(b)) => a == b,
            (Some(a), None) | (None, Some(a)) => a.is_trivial() && d > self.top.min(other.top),
            (None, None) => true,
        })
    }
}

pub(crate) fn sign(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = match self.coefficients {
            Coefficients::Integral => "Z",
            Coefficients::Mod2 => "Z/2",
        };
        write!(f, "H_*({}; {coeff}):", self.space)?;
        let mut any = false;
        for (d, g) in self.nontrivial() {
            write!(f, " H_{d}={g}")?;
            any = true;
        }
        if !any {
            write!(f, " all trivial")?;
        }
        if !self.is_complete() {
            write!(f, " (degrees below {} not tabulated)", self.lower_bound)?;
        }
        Ok(())
    }
}

/// Wedge of spheres: `(dimension, count)` pairs, dimensions increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BouquetDescription {
    pub summands: Vec<BouquetSummand>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BouquetSummand {
    pub dim: usize,
    pub count: u64,
}

impl BouquetDescription {
    pub fn is_contractible(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn sphere_count(&self) -> u64 {
        self.summands.iter().map(|s| s.count).sum()
    }
}

impl fmt::Display for BouquetDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_contractible() {
            return write!(f, "point");
        }
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| if s.count == 1 { format!("S^{}", s.dim) } else { format!("{} x S^{}", s.count, s.dim) })
            .collect();
        write!(f, "{}", parts.join(" v "))
    }
}

/// Reads a wedge of spheres off a complete, torsion-free, connected table.
pub fn bouquet(table: &HomologyTable) -> Result<BouquetDescription> {
    if !table.is_complete() {
        return Err(Error::InvalidInput("not a bouquet by this table: table is partial".into()));
    }
    if !table.is_torsion_free() {
        return Err(Error::InvalidInput("not a bouquet by this table: torsion present".into()));
    }
    if table.get(0) != Some(FgAbelianGroup::free(1)) {
        return Err(Error::InvalidInput("not a bouquet by this table: H_0 is not Z".into()));
    }
    let summands = table
        .nontrivial()
        .filter(|(d, _)| *d >= 1)
        .map(|(dim, g)| BouquetSummand { dim, count: g.rank })
        .collect();
    Ok(BouquetDescription { summands })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_and_uct() {
        let t = HomologyTable::new(Space::B, Coefficients::Integral, 4)
            .with(0, FgAbelianGroup::free(1))
            .unwrap()
            .with(1, FgAbelianGroup::z2_power(1))
            .unwrap()
            .with(2, FgAbelianGroup::free(3))
            .unwrap();
        assert_eq!(t.euler(), Some(4));
        let m = t.universal_coefficients_mod2().unwrap();
        assert_eq!(m.betti(2), Some(4));
        assert_eq!(m.betti(1), Some(1));
        assert_eq!(m.euler(), Some(4));
    }

    #[test]
    fn bouquet_of_table() {
        let t = HomologyTable::new(Space::Fibre, Coefficients::Integral, 5)
            .with(0, FgAbelianGroup::free(1))
            .unwrap()
            .with(5, FgAbelianGroup::free(2))
            .unwrap()
            .with(2, FgAbelianGroup::free(1))
            .unwrap();
        let b = bouquet(&t).unwrap();
        assert_eq!(b.to_string(), "S^2 v 2 x S^5");
        let trivial = HomologyTable::new(Space::Fibre, Coefficients::Integral, 5).with(0, FgAbelianGroup::free(1)).unwrap();
        assert!(bouquet(&trivial).unwrap().is_contractible());
        let torsion = trivial.with(3, FgAbelianGroup::z2_power(1)).unwrap();
        assert!(bouquet(&torsion).is_err());
    }
}
