//! Orchestration of the pipeline and deterministic report rendering.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::check::Check;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::hessian::{compute_invariants, A1Provenance, InvariantReport, SingularityInput};
use crate::homology::{bouquet, table_set, BouquetSummand, FgAbelianGroup, HomologyTable, Parameters, TableSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// An error together with the pipeline stage that raised it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub stage: &'static str,
    pub error: Error,
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        self.error.exit_code()
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} failed: {}", self.stage, self.error)
    }
}

impl std::error::Error for Failure {}

fn at<T>(stage: &'static str, r: Result<T>) -> std::result::Result<T, Failure> {
    r.map_err(|error| Failure { stage, error })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub n: usize,
    pub f: String,
    pub mu0: u64,
    pub mu1: u64,
    pub a: u64,
    pub corank: usize,
    pub a1: u64,
}

/// Where each reported value came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub seed: u64,
    pub variables: Vec<String>,
    /// Field name to one of `computed`, `provided`, `assumed`,
    /// `experimental-saturation`, `vacuous`.
    pub fields: BTreeMap<String, String>,
    pub decisions: Vec<String>,
    /// Intermediate tables behind the fibre homology, evaluated in
    /// dimension `n_stable`.
    pub n_stable: Option<usize>,
    pub intermediate_tables: Vec<NamedTable>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedTable {
    pub space: String,
    pub coefficients: String,
    pub lower_bound: usize,
    pub groups: BTreeMap<usize, FgAbelianGroup>,
}

impl NamedTable {
    fn of(t: &HomologyTable) -> Self {
        NamedTable {
            space: t.space.to_string(),
            coefficients: coeff_name(t),
            lower_bound: t.lower_bound,
            groups: groups(t),
        }
    }
}

fn coeff_name(t: &HomologyTable) -> String {
    match t.coefficients {
        crate::homology::Coefficients::Integral => "Z".into(),
        crate::homology::Coefficients::Mod2 => "Z/2".into(),
    }
}

fn groups(t: &HomologyTable) -> BTreeMap<usize, FgAbelianGroup> {
    t.nontrivial().map(|(d, g)| (d, g.clone())).collect()
}

/// Full output of one run. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub invariants: Invariants,
    /// Degree to group; `null` for an invariants-only run.
    pub homology: Option<BTreeMap<usize, FgAbelianGroup>>,
    /// `null` for an invariants-only run, `[]` for a contractible fibre.
    pub bouquet: Option<Vec<BouquetSummand>>,
    pub checks: Vec<Check>,
    pub provenance: Provenance,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let inv = &self.invariants;
        let mut s = String::new();
        let _ = writeln!(s, "f = {}", inv.f);
        let _ = writeln!(s, "n = {}", inv.n);
        for (name, v) in [("mu0", inv.mu0), ("mu1", inv.mu1), ("a", inv.a), ("corank", inv.corank as u64), ("#A1", inv.a1)] {
            let key = if name == "#A1" { "a1" } else { name };
            let src = self.provenance.fields.get(key).map_or("computed", String::as_str);
            let _ = writeln!(s, "{name:<7}= {v} ({src})");
        }
        if let Some(h) = &self.homology {
            let _ = writeln!(s, "Milnor fibre homology:");
            if h.is_empty() {
                let _ = writeln!(s, "  all trivial");
            }
            for (d, g) in h {
                let _ = writeln!(s, "  H_{d} = {g}");
            }
        }
        if let Some(b) = &self.bouquet {
            let desc = crate::homology::BouquetDescription { summands: b.clone() };
            let _ = writeln!(s, "bouquet: {desc}");
        }
        if !self.provenance.intermediate_tables.is_empty() {
            let _ = writeln!(s, "intermediate tables (n = {}):", self.provenance.n_stable.unwrap_or(inv.n));
            for t in &self.provenance.intermediate_tables {
                let body: Vec<String> = t.groups.iter().map(|(d, g)| format!("H_{d}={g}")).collect();
                let tail = if t.lower_bound > 0 { format!(" (from degree {})", t.lower_bound) } else { String::new() };
                let _ = writeln!(s, "  {} [{}]: {}{tail}", t.space, t.coefficients, body.join(" "));
            }
        }
        let _ = writeln!(s, "checks:");
        for c in &self.checks {
            let _ = writeln!(s, "  [{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
        }
        if !self.provenance.decisions.is_empty() {
            let _ = writeln!(s, "modelling choices in effect:");
            for d in &self.provenance.decisions {
                let _ = writeln!(s, "  - {d}");
            }
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json() + "\n",
        }
    }
}

fn provenance_of(inv: &InvariantReport, input: &SingularityInput, seed: u64) -> Provenance {
    let mut fields = BTreeMap::new();
    for k in ["mu0", "a", "corank"] {
        fields.insert(k.to_string(), "computed".to_string());
    }
    fields.insert("mu1".into(), if inv.mu1_vacuous { "vacuous" } else { "computed" }.into());
    fields.insert("a1".into(), inv.a1_provenance.to_string());
    let mut decisions = Vec::new();
    if inv.mu1_vacuous {
        decisions.push("det H is a unit: mu1 reported as 0, corank 0".to_string());
    }
    if inv.a1_provenance == A1Provenance::ExperimentalSaturation {
        decisions.push("#A1 estimated: the top Betti number is conditional on it".to_string());
    }
    Provenance {
        seed,
        variables: input.ring().vars().to_vec(),
        fields,
        decisions,
        n_stable: None,
        intermediate_tables: Vec::new(),
    }
}

/// Invariants only.
pub fn run_invariants(input: &SingularityInput, seed: u64, config: &Config) -> std::result::Result<Report, Failure> {
    let inv = at("invariants", compute_invariants(input, seed, config))?;
    let provenance = provenance_of(&inv, input, seed);
    Ok(Report {
        invariants: Invariants {
            n: inv.n,
            f: inv.f.to_string(),
            mu0: inv.mu0,
            mu1: inv.mu1,
            a: inv.a,
            corank: inv.corank,
            a1: inv.a1,
        },
        homology: None,
        bouquet: None,
        checks: inv.checks,
        provenance,
    })
}

/// Parameters of the tables for a computed report.
pub fn parameters(inv: &Invariants) -> Parameters {
    Parameters { mu0: inv.mu0, mu1: inv.mu1, a: inv.a, corank: inv.corank, a1: inv.a1, n: inv.n }
}

/// Invariants, Milnor fibre homology, bouquet and every table cross-check.
///
/// Failed cross-checks are reported in `checks`, not raised; negative
/// exponents in the tables are raised as inconsistencies.
pub fn run_homology(input: &SingularityInput, seed: u64, config: &Config) -> std::result::Result<Report, Failure> {
    let mut report = run_invariants(input, seed, config)?;
    let set: TableSet = at("tables", table_set(parameters(&report.invariants)))?;
    let disconnected = set.fibre.is_complete()
        && set.fibre.is_torsion_free()
        && set.fibre.get(0).is_some_and(|g| g.rank > 1);
    if disconnected {
        // f = u·g² at n = 4: one fibre component per square root
        report.provenance.decisions.push("fibre is disconnected: homology reported, no bouquet".to_string());
    } else {
        let b = at(
            "bouquet",
            bouquet(&set.fibre).map_err(|e| Error::Inconsistency(e.to_string())),
        )?;
        report.bouquet = Some(b.summands);
    }
    report.homology = Some(groups(&set.fibre));
    report.checks.extend(set.checks.iter().cloned());
    report.provenance.decisions.extend(set.decision_flags().into_iter().map(String::from));
    report.provenance.n_stable = Some(set.n_stable);
    report.provenance.intermediate_tables = set.intermediate().into_iter().map(NamedTable::of).collect();
    Ok(report)
}

/// Output of the `tables` verb: every table for a parameter set.
#[derive(Clone, Debug, Serialize)]
pub struct TablesReport {
    pub parameters: Parameters,
    pub n_stable: usize,
    pub fibre: NamedTable,
    pub intermediate: Vec<NamedTable>,
    pub bouquet: Option<Vec<BouquetSummand>>,
    pub checks: Vec<Check>,
    pub decisions: Vec<String>,
}

impl TablesReport {
    pub fn new(set: &TableSet) -> Self {
        TablesReport {
            parameters: set.params,
            n_stable: set.n_stable,
            fibre: NamedTable::of(&set.fibre),
            intermediate: set.intermediate().into_iter().map(NamedTable::of).collect(),
            bouquet: bouquet(&set.fibre).ok().map(|b| b.summands),
            checks: set.checks.clone(),
            decisions: set.decision_flags().into_iter().map(String::from).collect(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("tables serialize") + "\n",
            Format::Text => {
                let mut s = String::new();
                let p = &self.parameters;
                let _ = writeln!(
                    s,
                    "mu0 = {}, mu1 = {}, a = {}, corank = {}, #A1 = {}, n = {}",
                    p.mu0, p.mu1, p.a, p.corank, p.a1, p.n
                );
                for t in std::iter::once(&self.fibre).chain(&self.intermediate) {
                    let body: Vec<String> = t.groups.iter().map(|(d, g)| format!("H_{d}={g}")).collect();
                    let _ = writeln!(s, "{} [{}]: {}", t.space, t.coefficients, body.join(" "));
                }
                if let Some(b) = &self.bouquet {
                    let _ = writeln!(s, "bouquet: {}", crate::homology::BouquetDescription { summands: b.clone() });
                }
                for c in &self.checks {
                    let _ = writeln!(s, "[{}] {}: {}", if c.pass { "pass" } else { "FAIL" }, c.name, c.detail);
                }
                s
            }
        }
    }
}
