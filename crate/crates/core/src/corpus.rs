//! Built-in regression corpus.
//!
//! Every case runs under several seeds and under two variable orders; the
//! invariants must match the expectation and each other.

use rayon::prelude::*;
use serde::Serialize;

use crate::config::Config;
use crate::homology::{dkp_fibre, BouquetSummand};
use crate::job::parse_job;
use crate::report::run_homology;
use crate::ring::Ring;

/// Expected `(mu0, mu1, a, corank)` and bouquet of one case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub mu0: u64,
    pub mu1: u64,
    pub a: u64,
    pub corank: usize,
    pub bouquet: Vec<BouquetSummand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    pub name: String,
    pub job: String,
    pub expected: Expected,
}

fn sphere(dim: usize) -> Vec<BouquetSummand> {
    vec![BouquetSummand { dim, count: 1 }]
}

fn job(vars: &[String], g: &[String], h: &[Vec<String>]) -> String {
    let rows: Vec<String> = h.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!(
        "[ring]\nvars = {}\n[ideal]\ng = {}\n[matrix]\nh = [{}]\n",
        vars.join(" "),
        g.join("; "),
        rows.join(", ")
    )
}

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// `f = y·H·yᵗ` with `H = [[x3, x2], [x2, φ - x3]]` and `φ = x1^k`.
pub fn family_case(k: u32) -> Case {
    let phi = format!("x1^{k} - x3");
    Case {
        name: format!("family phi=x1^{k}"),
        job: job(
            &strings(&["x1", "x2", "x3", "y1", "y2"]),
            &strings(&["y1", "y2"]),
            &[strings(&["x3", "x2"]), vec!["x2".into(), phi]],
        ),
        expected: Expected { mu0: 0, mu1: 2 * k as u64 - 1, a: k as u64, corank: 2, bouquet: sphere(3) },
    }
}

/// Two `D(3,2)` points in a deformation; the fibre is a 3-sphere.
pub fn two_point_case() -> Case {
    Case {
        name: "two D(3,2) points".into(),
        job: job(
            &strings(&["x1", "x2", "x3", "x4", "x5"]),
            &strings(&["x1", "x2"]),
            &[strings(&["x3", "x4"]), strings(&["x4", "x3 - x5^2"])],
        ),
        expected: Expected { mu0: 0, mu1: 3, a: 2, corank: 2, bouquet: sphere(3) },
    }
}

/// Normal form of `D(3, p)` in `n` variables.
pub fn dkp_case(p: usize, n: usize) -> Case {
    assert!(p <= 2 && n >= 5);
    let k = n - 3;
    let xs = ["x1", "x2", "x3"];
    let ys: Vec<String> = (1..=k).map(|i| format!("y{i}")).collect();
    let mut vars = strings(&xs);
    vars.extend(ys.iter().cloned());
    let mut h = vec![vec!["0".to_string(); k]; k];
    for (i, row) in h.iter_mut().enumerate() {
        row[i] = "1".into();
    }
    match p {
        2 => {
            h[0][0] = "x1".into();
            h[0][1] = "x2".into();
            h[1][0] = "x2".into();
            h[1][1] = "x3".into();
        }
        1 => h[0][0] = "x1".into(),
        _ => {}
    }
    let (mu1, a) = if p == 2 { (1, 1) } else { (0, 0) };
    let dim = dkp_fibre(3, p, n).expect("valid D(3,p)");
    Case {
        name: format!("D(3,{p}) n={n}"),
        job: job(&vars, &ys, &h),
        expected: Expected { mu0: 0, mu1, a, corank: p, bouquet: sphere(dim) },
    }
}

pub fn builtin_cases() -> Vec<Case> {
    let mut cases: Vec<Case> = (1..=4).map(family_case).collect();
    cases.push(two_point_case());
    for p in 0..=2 {
        for n in 5..=7 {
            cases.push(dkp_case(p, n));
        }
    }
    cases
}

pub const SEEDS: [u64; 3] = [0, 1, 2];

/// Outcome of one case across every seed and variable order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseOutcome {
    pub name: String,
    pub pass: bool,
    pub runs: usize,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub cases: Vec<CaseOutcome>,
}

impl CorpusSummary {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            s.push_str(&format!("{} {} ({} runs)\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.runs));
            for f in &c.failures {
                s.push_str(&format!("    {f}\n"));
            }
        }
        let passed = self.cases.iter().filter(|c| c.pass).count();
        s.push_str(&format!("{passed}/{} cases passed\n", self.cases.len()));
        s
    }
}

/// Observed `(mu0, mu1, a, corank)` and bouquet of one run.
type Observed = (u64, u64, u64, usize, Vec<BouquetSummand>);

fn run_once(case: &Case, seed: u64, reversed: bool, config: &Config) -> Result<Observed, String> {
    let mut input = parse_job(&case.job).map_err(|e| e.to_string())?;
    if reversed {
        let vars: Vec<String> = input.ring().vars().iter().rev().cloned().collect();
        let ring = Ring::new(&vars).map_err(|e| e.to_string())?;
        input = input.to_ring(&ring).map_err(|e| e.to_string())?;
    }
    let r = run_homology(&input, seed, config).map_err(|e| e.to_string())?;
    if let Some(c) = r.checks.iter().find(|c| !c.pass) {
        return Err(format!("check {} failed: {}", c.name, c.detail));
    }
    let inv = &r.invariants;
    Ok((inv.mu0, inv.mu1, inv.a, inv.corank, r.bouquet.unwrap_or_default()))
}

/// Runs `cases` in parallel; the summary lists cases in input order.
pub fn run_cases(cases: &[Case], config: &Config) -> CorpusSummary {
    let jobs: Vec<(usize, u64, bool)> = (0..cases.len())
        .flat_map(|i| SEEDS.iter().flat_map(move |&s| [(i, s, false), (i, s, true)]))
        .collect();
    let results: Vec<Result<Observed, String>> =
        jobs.par_iter().map(|&(i, seed, rev)| run_once(&cases[i], seed, rev, config)).collect();

    let outcomes = cases
        .iter()
        .enumerate()
        .map(|(i, case)| {
            let e = &case.expected;
            let want: Observed = (e.mu0, e.mu1, e.a, e.corank, e.bouquet.clone());
            let mut failures = Vec::new();
            let mut runs = 0;
            for (&(_, seed, rev), res) in jobs.iter().zip(&results).filter(|((j, _, _), _)| *j == i) {
                runs += 1;
                let order = if rev { "reversed" } else { "given" };
                match res {
                    Ok(got) if *got == want => {}
                    Ok(got) => failures.push(format!(
                        "seed {seed}, {order} order: got (mu0, mu1, a, corank) = ({}, {}, {}, {}), bouquet {:?}; expected ({}, {}, {}, {}), bouquet {:?}",
                        got.0, got.1, got.2, got.3, got.4, want.0, want.1, want.2, want.3, want.4
                    )),
                    Err(msg) => failures.push(format!("seed {seed}, {order} order: {msg}")),
                }
            }
            CaseOutcome { name: case.name.clone(), pass: failures.is_empty(), runs, failures }
        })
        .collect();
    CorpusSummary { cases: outcomes }
}

pub fn run_corpus(config: &Config) -> CorpusSummary {
    run_cases(&builtin_cases(), config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn injected_off_by_one_is_caught() {
        let mut case = family_case(1);
        case.expected.mu1 += 1;
        let summary = run_cases(&[case, dkp_case(0, 5)], &Config::default());
        assert!(!summary.all_pass());
        assert!(!summary.cases[0].pass);
        assert!(summary.cases[1].pass);
        assert_eq!(summary.cases[0].failures.len(), 6);
        assert!(summary.render_text().contains("FAIL family phi=x1^1"));
    }

    #[test]
    fn dkp_jobs_parse() {
        for p in 0..=2 {
            for n in 5..=7 {
                let c = dkp_case(p, n);
                let input = parse_job(&c.job).unwrap();
                assert_eq!(input.n(), n);
            }
        }
    }
}
