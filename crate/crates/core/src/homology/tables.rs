//! Closed-form homology tables of the spaces built from a generic
//! deformation, and the cross-checks tying them together.
//!
//! Tables are generated from closed forms. Exact sequences, Euler
//! characteristics and universal coefficients are then used only to test
//! that the forms fit together.

use serde::Serialize;

use super::group::FgAbelianGroup;
use super::table::{sign, Coefficients, HomologyTable, Space};
use crate::check::Check;
use crate::error::{Error, Result};

/// Dimension at which the intermediate tables are evaluated when checking
/// consistency. The sphere bundles only behave uniformly from here on.
pub const STABLE_DIMENSION: usize = 8;

fn exponent(name: &str, value: i64) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Inconsistency(format!("negative exponent: {name} = {value}")))
}

fn z(r: u64) -> FgAbelianGroup {
    FgAbelianGroup::free(r)
}

fn z2(m: u64) -> FgAbelianGroup {
    FgAbelianGroup::z2_power(m)
}

fn check_mu1_a(mu1: u64, a: u64) -> Result<()> {
    if a > mu1 {
        return Err(Error::Inconsistency(format!("a = {a} exceeds mu1 = {mu1}")));
    }
    Ok(())
}

/// Homology of the part `B` of the smoothed corank-1 locus away from the
/// corank-2 points.
pub fn table_b(mu1: u64, a: u64, coefficients: Coefficients) -> Result<HomologyTable> {
    check_mu1_a(mu1, a)?;
    let t = HomologyTable::new(Space::B, coefficients, 4);
    match coefficients {
        Coefficients::Integral => t.with(3, z(a))?.with(2, z(mu1 - a))?.with(1, z2(1))?.with(0, z(1)),
        Coefficients::Mod2 => t.with(3, z2(a))?.with(2, z2(mu1 - a + 1))?.with(1, z2(1))?.with(0, z2(1)),
    }
}

/// Tables of the two sphere bundles over `B`, their pair, and the double
/// cover of the base.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairTables {
    pub bundle_u: HomologyTable,
    pub bundle: HomologyTable,
    pub bundle_mod2: HomologyTable,
    pub pair: HomologyTable,
    pub cover: HomologyTable,
}

/// Requires `n ≥ 8`, where the Gysin sequences decouple.
pub fn table_pair(mu1: u64, a: u64, n: usize) -> Result<PairTables> {
    if n < STABLE_DIMENSION {
        return Err(Error::InvalidInput(format!("pair tables need n >= {STABLE_DIMENSION}, got {n}")));
    }
    check_mu1_a(mu1, a)?;
    let (m, ai) = (mu1 as i64, a as i64);
    let top_free = exponent("mu1 - 2a + 1", m - 2 * ai + 1)?;
    let k = exponent("2mu1 - 3a + 1", 2 * m - 3 * ai + 1)?;
    let low = |t: HomologyTable| -> Result<HomologyTable> {
        t.with(3, z(a))?.with(2, z(mu1 - a))?.with(1, z2(1))?.with(0, z(1))
    };

    let bundle_u = low(HomologyTable::new(Space::BundleU, Coefficients::Integral, n - 1))?
        .with(n - 1, z(a))?
        .with(n - 2, z(mu1 - a))?
        .with(n - 3, z2(1))?
        .with(n - 4, z(1))?;
    let bundle = low(HomologyTable::new(Space::Bundle, Coefficients::Integral, n))?
        .with(n - 1, z2(a).direct_sum(&z(top_free)))?
        .with(n - 3, z2(1))?;
    let bundle_mod2 = HomologyTable::new(Space::Bundle, Coefficients::Mod2, n)
        .with(n, z2(a))?
        .with(n - 1, z2(mu1 - a + 1))?
        .with(n - 2, z2(1))?
        .with(n - 3, z2(1))?
        .with(3, z2(a))?
        .with(2, z2(mu1 - a + 1))?
        .with(1, z2(1))?
        .with(0, z2(1))?;
    let pair = HomologyTable::new(Space::Pair, Coefficients::Integral, n)
        .with(n, z(a))?
        .with(n - 1, z(k))?
        .with(n - 3, z(1))?;
    let cover = HomologyTable::new(Space::Cover, Coefficients::Integral, 4).with(3, z(a))?.with(2, z(k))?.with(0, z(1))?;
    Ok(PairTables { bundle_u, bundle, bundle_mod2, pair, cover })
}

/// Homology of `X`. Only defined when there are corank-2 points; for
/// `a = 0` the space coincides with the bundle of [`table_pair`].
pub fn table_x(mu1: u64, a: u64, n: usize, coefficients: Coefficients) -> Result<HomologyTable> {
    if a == 0 {
        return Err(Error::InvalidInput("X needs a >= 1; for a = 0 use table_b and table_pair".into()));
    }
    if n < 5 {
        return Err(Error::InvalidInput(format!("X needs n >= 5, got {n}")));
    }
    check_mu1_a(mu1, a)?;
    let top = exponent("mu1 - 2a + 1", mu1 as i64 - 2 * a as i64 + 1)?;
    let g = |r: u64| match coefficients {
        Coefficients::Integral => z(r),
        Coefficients::Mod2 => z2(r),
    };
    HomologyTable::new(Space::X, coefficients, n)
        .with(n - 1, g(top))?
        .with(n - 2, g(a))?
        .with(2, g(mu1 - a))?
        .with(0, g(1))
}

/// The `e` of the corank ≥ 2 branch: 1 exactly at corank 2.
pub fn e_rule(corank: usize) -> u64 {
    u64::from(corank == 2)
}

fn check_corank(corank: usize, n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidInput(format!("n must be at least 4, got {n}")));
    }
    if corank > n - 3 {
        return Err(Error::InvalidInput(format!("corank {corank} exceeds matrix size {}", n - 3)));
    }
    if corank >= 1 && n < 5 {
        return Err(Error::InvalidInput(format!("corank {corank} needs n >= 5, got {n}")));
    }
    Ok(())
}

fn corank_two_exponent(mu0: u64, mu1: u64, a: u64) -> i64 {
    mu0 as i64 + 2 * mu1 as i64 - 4 * a as i64 + 1
}

fn check_a_for_corank(a: u64, corank: usize) -> Result<()> {
    if corank >= 2 && a == 0 {
        return Err(Error::Inconsistency(format!("corank {corank} requires a >= 1")));
    }
    if corank < 2 && a != 0 {
        return Err(Error::Inconsistency(format!("corank {corank} requires a = 0, got {a}")));
    }
    Ok(())
}

/// Homology of `M`, the Milnor fibre without the Morse points off the
/// singular locus.
///
/// For corank ≥ 2 only degrees `n-4..=n` are tabulated. The torsion part of
/// `H_(n-2)` vanishes and its free part is `Z^e`.
pub fn table_m(mu0: u64, mu1: u64, a: u64, corank: usize, n: usize, coefficients: Coefficients) -> Result<HomologyTable> {
    check_corank(corank, n)?;
    check_a_for_corank(a, corank)?;
    let g = |r: u64| match coefficients {
        Coefficients::Integral => z(r),
        Coefficients::Mod2 => z2(r),
    };
    let t = HomologyTable::new(Space::M, coefficients, n - 1);
    match corank {
        0 => t.with(n - 1, g(mu0))?.with(n - 4, g(1))?.with(0, g(1)),
        1 => t.with(n - 1, g(2 * mu1 + mu0))?.with(n - 3, g(1))?.with(2, g(mu0))?.with(0, g(1)),
        _ => {
            check_mu1_a(mu1, a)?;
            exponent("mu1 - 2a + 1", mu1 as i64 - 2 * a as i64 + 1)?;
            let e = e_rule(corank);
            let top = exponent("mu0 + 2mu1 - 4a + 1 + e", corank_two_exponent(mu0, mu1, a) + e as i64)?;
            t.partial(n - 4).with(n - 1, g(top))?.with(n - 2, g(e))
        }
    }
}

/// Integral homology of the Milnor fibre.
///
/// `a1` is the number of Morse points splitting off the singular locus; it
/// is added to the top Betti number in every corank branch.
pub fn milnor_fibre_homology(mu0: u64, mu1: u64, a: u64, corank: usize, a1: u64, n: usize) -> Result<HomologyTable> {
    check_corank(corank, n)?;
    check_a_for_corank(a, corank)?;
    let mut t = HomologyTable::new(Space::Fibre, Coefficients::Integral, n - 1);
    t.add(0, z(1))?;
    match corank {
        0 => {
            t.add(n - 1, z(mu0 + a1))?;
            t.add(n - 4, z(1))?;
        }
        1 => {
            t.add(n - 1, z(mu0 + 2 * mu1 + a1))?;
            t.add(n - 3, z(1))?;
        }
        2 => {
            let top = exponent("mu0 + 2mu1 - 4a + 2 + #A1", corank_two_exponent(mu0, mu1, a) + 1 + a1 as i64)?;
            t.add(n - 1, z(top))?;
            t.add(n - 2, z(1))?;
        }
        _ => {
            let top = exponent("mu0 + 2mu1 - 4a + 1 + #A1", corank_two_exponent(mu0, mu1, a) + a1 as i64)?;
            t.add(n - 1, z(top))?;
        }
    }
    Ok(t)
}

/// Dimension of the sphere that the Milnor fibre of a `D(k, p)` singularity
/// in `n` variables is homotopy equivalent to.
pub fn dkp_fibre(k: usize, p: usize, n: usize) -> Result<usize> {
    if p > k || k > n {
        return Err(Error::InvalidInput(format!("D(k, p) needs 0 <= p <= k <= n, got k = {k}, p = {p}, n = {n}")));
    }
    (n + p).checked_sub(k + 1).ok_or_else(|| Error::InvalidInput("sphere of negative dimension".into()))
}

/// Invariants driving the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub mu0: u64,
    pub mu1: u64,
    pub a: u64,
    pub corank: usize,
    pub a1: u64,
    pub n: usize,
}

/// Every table generated for one parameter set, the intermediate ones at
/// `n_stable`.
#[derive(Clone, Debug, Serialize)]
pub struct TableSet {
    pub params: Parameters,
    pub n_stable: usize,
    pub fibre: HomologyTable,
    pub fibre_stable: HomologyTable,
    pub b: Option<HomologyTable>,
    pub b_mod2: Option<HomologyTable>,
    pub pair: Option<PairTables>,
    pub x: Option<HomologyTable>,
    pub x_mod2: Option<HomologyTable>,
    /// Sphere bundle over the corank-1 surface; only for corank 1.
    pub bundle_corank1: Option<HomologyTable>,
    pub m: HomologyTable,
    pub m_mod2: HomologyTable,
    pub checks: Vec<Check>,
}

impl TableSet {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Intermediate tables in a fixed order.
    pub fn intermediate(&self) -> Vec<&HomologyTable> {
        let mut out = Vec::new();
        out.extend(self.b.iter());
        out.extend(self.b_mod2.iter());
        if let Some(p) = &self.pair {
            out.extend([&p.bundle_u, &p.bundle, &p.bundle_mod2, &p.pair, &p.cover]);
        }
        out.extend(self.bundle_corank1.iter());
        out.extend(self.x.iter());
        out.extend(self.x_mod2.iter());
        out.push(&self.m);
        out.push(&self.m_mod2);
        out
    }

    /// Which of the recorded modelling choices the parameters exercise.
    pub fn decision_flags(&self) -> Vec<&'static str> {
        let p = &self.params;
        let mut flags = Vec::new();
        if p.corank == 2 {
            flags.push("H_{n-2}(M) recorded as Z^e (torsion-free), not Z2^e");
        }
        if p.corank <= 1 && p.a1 > 0 {
            flags.push("#A1 added to H_{n-1} in a corank <= 1 branch");
        }
        if p.corank == 0 {
            flags.push("corank 0: H_k trivial for 1 <= k <= n-2 except k = n-4");
        }
        if p.corank >= 2 {
            flags.push("M tabulated only in degrees >= n-4");
        }
        flags
    }
}

/// Alternating sum of ranks along a segment of an exact sequence that
/// starts and ends with zero maps. Zero when the segment is exact.
fn alternating(ranks: &[u64]) -> i64 {
    ranks.iter().enumerate().map(|(i, r)| sign(i) * *r as i64).sum()
}

fn rank(t: &HomologyTable, d: usize) -> u64 {
    t.get(d).map_or(0, |g| g.rank)
}

fn dim2(t: &HomologyTable, d: usize) -> u64 {
    t.betti(d).unwrap_or(0)
}

fn exact_check(name: &str, ranks: &[u64]) -> Check {
    let s = alternating(ranks);
    Check::new(name, s == 0, format!("alternating rank sum {s} over {ranks:?}"))
}

fn uct_check(name: &str, integral: &HomologyTable, mod2: &HomologyTable) -> Result<Check> {
    let predicted = integral.universal_coefficients_mod2()?;
    let lo = predicted.lower_bound.max(mod2.lower_bound);
    let hi = predicted.top.max(mod2.top);
    let bad: Vec<usize> = (lo..=hi).filter(|&d| dim2(&predicted, d) != dim2(mod2, d)).collect();
    Ok(Check::new(
        name,
        bad.is_empty(),
        if bad.is_empty() { format!("degrees {lo}..={hi} agree") } else { format!("disagreement in degrees {bad:?}") },
    ))
}

/// Euler characteristic of the fibre from its Betti numbers, checked
/// against the branch formula.
fn fibre_euler_check(fibre: &HomologyTable, p: &Parameters) -> Check {
    let n = fibre.top + 1;
    let b_top = rank(fibre, n - 1) as i64;
    let middle: i64 = match p.corank {
        0 => sign(n - 4),
        1 => sign(n - 3),
        2 => sign(n - 2),
        _ => 0,
    };
    let expected = 1 + sign(n - 1) * b_top + middle;
    let actual = fibre.euler().unwrap_or(i64::MIN);
    Check::new("euler:fibre", actual == expected, format!("chi = {actual}, branch formula {expected}"))
}

/// Reduced homology in dimension `n + 1` is that of dimension `n` shifted
/// up by one.
fn suspension_check(p: &Parameters) -> Result<Check> {
    let lower = milnor_fibre_homology(p.mu0, p.mu1, p.a, p.corank, p.a1, p.n)?;
    let upper = milnor_fibre_homology(p.mu0, p.mu1, p.a, p.corank, p.a1, p.n + 1)?;
    let reduced = |t: &HomologyTable, d: usize| {
        let r = rank(t, d);
        if d == 0 {
            r - 1
        } else {
            r
        }
    };
    let ok = reduced(&upper, 0) == 0 && (0..p.n).all(|d| reduced(&lower, d) == reduced(&upper, d + 1));
    Ok(Check::new("suspension:fibre", ok, format!("n = {} against n = {}", p.n, p.n + 1)))
}

/// `H_k(F) = H_k(M)` for `k ≥ 4`, except the top degree where `F` gains
/// one sphere per Morse point.
fn homsplit_check(fibre: &HomologyTable, m: &HomologyTable, a1: u64) -> Check {
    let n = fibre.top + 1;
    let lo = 4.max(m.lower_bound);
    let mut bad = Vec::new();
    for d in lo..n {
        let (f, mm) = (fibre.get(d).unwrap_or_default(), m.get(d).unwrap_or_default());
        let ok = if d == n - 1 { f.rank == mm.rank + a1 && f.torsion == mm.torsion } else { f == mm };
        if !ok {
            bad.push(d);
        }
    }
    Check::new(
        "homsplit",
        bad.is_empty(),
        if bad.is_empty() {
            format!("degrees {lo}..{n} agree, top rank differs by #A1 = {a1}")
        } else {
            format!("mismatch in degrees {bad:?}")
        },
    )
}

/// Generates every table for `p` and evaluates the cross-checks.
///
/// A negative exponent anywhere is reported as an inconsistency error; the
/// remaining checks are returned for the caller to inspect.
pub fn table_set(p: Parameters) -> Result<TableSet> {
    let ns = p.n.max(STABLE_DIMENSION);
    let fibre = milnor_fibre_homology(p.mu0, p.mu1, p.a, p.corank, p.a1, p.n)?;
    let fibre_stable = milnor_fibre_homology(p.mu0, p.mu1, p.a, p.corank, p.a1, ns)?;
    let m = table_m(p.mu0, p.mu1, p.a, p.corank, ns, Coefficients::Integral)?;
    let m_mod2 = table_m(p.mu0, p.mu1, p.a, p.corank, ns, Coefficients::Mod2)?;

    let mut checks = vec![
        fibre_euler_check(&fibre, &p),
        suspension_check(&p)?,
        homsplit_check(&fibre_stable, &m, p.a1),
        uct_check("uct:M", &m, &m_mod2)?,
    ];
    let mut set = TableSet {
        params: p,
        n_stable: ns,
        fibre,
        fibre_stable,
        b: None,
        b_mod2: None,
        pair: None,
        x: None,
        x_mod2: None,
        bundle_corank1: None,
        m,
        m_mod2,
        checks: Vec::new(),
    };

    if p.corank == 1 {
        let bundle = HomologyTable::new(Space::Bundle, Coefficients::Integral, ns)
            .with(ns - 1, z(p.mu1))?
            .with(ns - 3, z(1))?
            .with(2, z(p.mu1))?
            .with(0, z(1))?;
        // M = bundle with mu0 + mu1 thimbles attached along S^2 x S^(n-4)
        let t = p.mu0 + p.mu1;
        checks.push(exact_check(
            "exact:mv-M-corank1",
            &[
                0,
                rank(&bundle, ns - 1),
                rank(&set.m, ns - 1),
                t,
                rank(&bundle, ns - 2),
                rank(&set.m, ns - 2),
                0,
                rank(&bundle, ns - 3),
                rank(&set.m, ns - 3),
                t,
                t + rank(&bundle, ns - 4),
                rank(&set.m, ns - 4),
            ],
        ));
        set.bundle_corank1 = Some(bundle);
    }

    if p.corank >= 2 {
        let b = table_b(p.mu1, p.a, Coefficients::Integral)?;
        let b_mod2 = table_b(p.mu1, p.a, Coefficients::Mod2)?;
        let pt = table_pair(p.mu1, p.a, ns)?;
        let x = table_x(p.mu1, p.a, ns, Coefficients::Integral)?;
        let x_mod2 = table_x(p.mu1, p.a, ns, Coefficients::Mod2)?;
        let a = p.a;

        let (chi_cover, chi_base) = (pt.cover.euler().unwrap(), b.euler().unwrap());
        checks.push(Check::new(
            "euler:cover",
            chi_cover == 2 * chi_base,
            format!("chi(cover) = {chi_cover}, chi(base) = {chi_base}"),
        ));
        let (cb, cu, cp) = (pt.bundle.euler().unwrap(), pt.bundle_u.euler().unwrap(), pt.pair.euler().unwrap());
        checks.push(Check::new(
            "euler:pair",
            cb == cu + cp,
            format!("chi(bundle) = {cb}, chi(bundle_u) + chi(pair) = {}", cu + cp),
        ));
        checks.push(Check::new(
            "euler:B-mod2",
            b.euler() == b_mod2.euler(),
            format!("integral {:?}, mod 2 {:?}", b.euler(), b_mod2.euler()),
        ));

        checks.push(uct_check("uct:B", &b, &b_mod2)?);
        checks.push(uct_check("uct:bundle", &pt.bundle, &pt.bundle_mod2)?);
        checks.push(uct_check("uct:X", &x, &x_mod2)?);

        // B and a contractible pieces cover a space with the homology of
        // mu1 - a 2-spheres; the pieces meet B in copies of RP^3
        let d = z(p.mu1 - a);
        checks.push(exact_check(
            "exact:mv-B",
            &[0, a, rank(&b, 3), 0, 0, rank(&b, 2), d.rank, 0, rank(&b, 1), 0],
        ));

        // long exact sequence of the pair, degrees n down to n-4
        let pair_seq = |u: &HomologyTable, w: &HomologyTable, q: &HomologyTable, f: &dyn Fn(&HomologyTable, usize) -> u64| {
            (0..=4).flat_map(|i| [f(u, ns - i), f(w, ns - i), f(q, ns - i)]).collect::<Vec<u64>>()
        };
        checks.push(exact_check("exact:pair", &pair_seq(&pt.bundle_u, &pt.bundle, &pt.pair, &rank)));
        let u2 = pt.bundle_u.universal_coefficients_mod2()?;
        let q2 = pt.pair.universal_coefficients_mod2()?;
        checks.push(exact_check("exact:pair-mod2", &pair_seq(&u2, &pt.bundle_mod2, &q2, &dim2)));

        // X = bundle with a copies of S^(n-2) glued along spaces with
        // Z/2 in degrees 0..3 and n-3..n
        let rows = [ns, ns - 1, ns - 2, ns - 3];
        let mv_x2: Vec<u64> = rows
            .iter()
            .flat_map(|&k| {
                let sphere = if k == ns - 2 { a } else { 0 };
                [a, sphere + dim2(&pt.bundle_mod2, k), dim2(&x_mod2, k)]
            })
            .collect();
        checks.push(exact_check("exact:mv-X-mod2", &mv_x2));
        let mv_x: Vec<u64> = rows
            .iter()
            .flat_map(|&k| {
                let sphere = if k == ns - 2 { a } else { 0 };
                [0, sphere + rank(&pt.bundle, k), rank(&x, k)]
            })
            .collect();
        checks.push(exact_check("exact:mv-X", &mv_x));

        // M = X with mu0 + mu1 - a thimbles attached
        let t = exponent("mu0 + mu1 - a", p.mu0 as i64 + p.mu1 as i64 - a as i64)?;
        let mv_m = |xt: &HomologyTable, mt: &HomologyTable, f: &dyn Fn(&HomologyTable, usize) -> u64| {
            vec![
                0,
                f(xt, ns - 1),
                f(mt, ns - 1),
                t,
                f(xt, ns - 2),
                f(mt, ns - 2),
                0,
                f(xt, ns - 3),
                f(mt, ns - 3),
                t,
                t + f(xt, ns - 4),
                f(mt, ns - 4),
            ]
        };
        checks.push(exact_check("exact:mv-M", &mv_m(&x, &set.m, &rank)));
        checks.push(exact_check("exact:mv-M-mod2", &mv_m(&x_mod2, &set.m_mod2, &dim2)));

        set.b = Some(b);
        set.b_mod2 = Some(b_mod2);
        set.pair = Some(pt);
        set.x = Some(x);
        set.x_mod2 = Some(x_mod2);
    }
    set.checks = checks;
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_examples() {
        let t = table_b(3, 2, Coefficients::Integral).unwrap();
        assert_eq!(t.get(3), Some(z(2)));
        assert_eq!(t.get(2), Some(z(1)));
        assert_eq!(t.get(1), Some(z2(1)));
        let t = table_b(1, 1, Coefficients::Integral).unwrap();
        assert_eq!(t.get(2), Some(FgAbelianGroup::zero()));
        assert!(matches!(table_b(1, 2, Coefficients::Integral), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn pair_examples() {
        let p = table_pair(3, 2, 8).unwrap();
        assert_eq!(p.pair.get(7), Some(z(1)));
        assert_eq!(p.bundle.get(7), Some(z2(2)));
        assert_eq!(p.cover.euler().unwrap(), 2 * table_b(3, 2, Coefficients::Integral).unwrap().euler().unwrap());
        let p = table_pair(1, 1, 8).unwrap();
        assert_eq!(p.pair.get(7), Some(z(0)));
        assert_eq!(p.cover.get(2), Some(z(0)));
        assert_eq!(p.cover.get(3), Some(z(1)));
        let p = table_pair(4, 0, 9).unwrap();
        assert!(p.pair.get(9).unwrap().is_trivial());
        assert_eq!(p.bundle.get(8), Some(z(5)));
        assert!(table_pair(1, 1, 7).is_err());
    }

    #[test]
    fn x_and_m_examples() {
        let x = table_x(3, 2, 8, Coefficients::Integral).unwrap();
        assert_eq!(x.get(7), Some(z(0)));
        assert_eq!(x.get(6), Some(z(2)));
        let x = table_x(1, 1, 8, Coefficients::Integral).unwrap();
        assert_eq!(x.get(6), Some(z(1)));
        assert!(table_x(3, 0, 8, Coefficients::Integral).is_err());

        let m = table_m(0, 3, 2, 2, 5, Coefficients::Integral).unwrap();
        assert_eq!(m.get(4), Some(z(0)));
        assert_eq!(m.get(3), Some(z(1)));
        assert_eq!(m.get(0), None);
        let m = table_m(0, 1, 1, 2, 9, Coefficients::Integral).unwrap();
        assert_eq!(m.get(8), Some(z(0)));
        assert_eq!(m.get(7), Some(z(1)));
        let m = table_m(2, 3, 0, 1, 8, Coefficients::Integral).unwrap();
        assert_eq!(m.get(7), Some(z(8)));
    }

    #[test]
    fn fibre_branches() {
        for k in 1..=4 {
            let f = milnor_fibre_homology(0, 2 * k - 1, k, 2, 0, 5).unwrap();
            assert_eq!(f.get(4), Some(z(0)));
            assert_eq!(f.get(3), Some(z(1)));
            assert_eq!(f.get(0), Some(z(1)));
        }
        let f = milnor_fibre_homology(1, 0, 0, 0, 0, 6).unwrap();
        assert_eq!(f.get(5), Some(z(1)));
        assert_eq!(f.get(2), Some(z(1)));
        let f = milnor_fibre_homology(3, 0, 0, 0, 0, 4).unwrap();
        assert_eq!(f.get(0), Some(z(2)));
        assert!(milnor_fibre_homology(0, 1, 1, 3, 0, 5).is_err());
        assert!(matches!(milnor_fibre_homology(0, 1, 1, 3, 0, 6), Err(Error::Inconsistency(_))));
    }

    #[test]
    fn dkp() {
        assert_eq!(dkp_fibre(3, 2, 9).unwrap(), 7);
        assert_eq!(dkp_fibre(3, 0, 9).unwrap(), 5);
        assert_eq!(dkp_fibre(1, 1, 9).unwrap(), 8);
        assert!(dkp_fibre(2, 3, 9).is_err());
        assert!(dkp_fibre(3, 0, 2).is_err());
    }

    #[test]
    fn checks_pass_on_small_parameters() {
        for corank in 0..=3 {
            for mu0 in 0..=3 {
                for mu1 in 0..=6 {
                    for a in 0..=mu1 {
                        for n in [5, 6, 9] {
                            let p = Parameters { mu0, mu1, a, corank, a1: mu0 % 2, n };
                            match table_set(p) {
                                Ok(set) => {
                                    for c in &set.checks {
                                        assert!(c.pass, "{p:?}: {} {}", c.name, c.detail);
                                    }
                                }
                                Err(Error::Inconsistency(_) | Error::InvalidInput(_)) => {}
                                Err(e) => panic!("{p:?}: {e}"),
                            }
                        }
                    }
                }
            }
        }
    }
}
