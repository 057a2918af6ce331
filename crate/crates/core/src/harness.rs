//! Sweeps that check the closed forms against the exact engines.
//!
//! Every instance produces one [`VerificationRecord`]. A mismatch on a
//! proven formula is a bug; a mismatch on a conjectured one is a finding.
//! With [`EngineChoice::Search`] the branch-and-bound result is also
//! compared with the subset-scan oracle whenever the graph is small enough
//! for it.

use std::fmt;
use std::ops::RangeInclusive;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::engine::{brute_force_dominion, dominion_in, Budget, GammaReport, ORACLE_MAX_N};
use crate::error::{Error, Result};
use crate::formulas::{self, FamilyValue, Status};
use crate::graph::{self, FamilySpec, Graph};
use crate::Zeta;

/// Default vertex cap for the branch-and-bound engine.
pub const SEARCH_MAX_N: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Path,
    Cycle,
    Sun,
    Complete,
    Star,
    Multipartite,
    Join,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 7] = [
        FamilyKind::Path,
        FamilyKind::Cycle,
        FamilyKind::Sun,
        FamilyKind::Complete,
        FamilyKind::Star,
        FamilyKind::Multipartite,
        FamilyKind::Join,
    ];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineChoice {
    Oracle,
    Search,
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub engine: EngineChoice,
    /// Per-instance wall-clock limit for the search engine.
    pub budget: Option<Duration>,
    pub search_max_n: usize,
    /// Worker threads; `None` uses the machine's parallelism.
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { engine: EngineChoice::Search, budget: None, search_max_n: SEARCH_MAX_N, threads: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    Match,
    Mismatch,
    /// The two engines returned different values.
    EngineDisagreement,
    /// Over the chosen engine's capacity.
    Skipped,
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub family: FamilyKind,
    /// Instance in family-spec syntax, e.g. `path:10`.
    pub instance: String,
    /// Vertex count.
    pub n: usize,
    pub formula_gamma: Option<usize>,
    pub engine_gamma: Option<usize>,
    #[serde(serialize_with = "decimal")]
    pub formula_zeta: Zeta,
    #[serde(serialize_with = "decimal_opt")]
    pub engine_zeta: Option<Zeta>,
    pub status: Status,
    pub outcome: Outcome,
    #[serde(rename = "match")]
    pub matched: bool,
    pub elapsed_ms: u64,
}

fn decimal<S: Serializer>(v: &Zeta, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn decimal_opt<S: Serializer>(v: &Option<Zeta>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

impl VerificationRecord {
    /// True for proven mismatches and engine disagreements.
    pub fn is_failure(&self) -> bool {
        match self.outcome {
            Outcome::EngineDisagreement => true,
            Outcome::Mismatch => self.status == Status::Proven,
            _ => false,
        }
    }

    pub fn is_finding(&self) -> bool {
        self.outcome == Outcome::Mismatch && self.status == Status::Conjectured
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    ConjectureFinding,
    ProvenMismatch,
}

pub fn verdict(records: &[VerificationRecord]) -> Verdict {
    if records.iter().any(VerificationRecord::is_failure) {
        Verdict::ProvenMismatch
    } else if records.iter().any(VerificationRecord::is_finding) {
        Verdict::ConjectureFinding
    } else {
        Verdict::Pass
    }
}

/// One graph to check and the formula value it should have.
struct Instance {
    family: FamilyKind,
    spec: FamilySpec,
    graph: Graph,
    formula: FamilyValue<Zeta>,
}

/// Small connected graphs paired up for the join sweep. Their domination
/// numbers are 1, 2 and 3, so pairs hit every case of the join formula.
fn join_catalog() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        Complete(1),
        Complete(2),
        Complete(3),
        Star(3),
        Path(3),
        Complete(4),
        Path(4),
        Cycle(4),
        Path(5),
        Cycle(5),
        Path(6),
        Cycle(6),
        Path(7),
        Cycle(7),
        Path(8),
        Cycle(8),
        Path(9),
        Cycle(9),
    ]
}

/// Sorted part vectors with 2 or 3 parts of size 1..=4.
pub fn multipartite_part_vectors() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 1..=4 {
        for b in a..=4 {
            out.push(vec![a, b]);
            for c in b..=4 {
                out.push(vec![a, b, c]);
            }
        }
    }
    out.sort_by_key(|p| (p.iter().sum::<usize>(), p.clone()));
    out
}

fn instances(kind: FamilyKind, range: RangeInclusive<usize>) -> Result<Vec<Instance>> {
    let make = |spec: FamilySpec, formula: FamilyValue<Zeta>| -> Result<Instance> {
        Ok(Instance { family: kind, graph: spec.build()?, spec, formula })
    };
    let mut out = Vec::new();
    match kind {
        FamilyKind::Path => {
            for n in range.filter(|&n| n >= 2) {
                out.push(make(FamilySpec::Path(n), formulas::path_dominion(n)?)?);
            }
        }
        FamilyKind::Cycle => {
            for n in range.filter(|&n| n >= 3) {
                out.push(make(FamilySpec::Cycle(n), formulas::cycle_dominion(n)?)?);
            }
        }
        FamilyKind::Sun => {
            for n in range.filter(|&n| n >= 3) {
                out.push(make(FamilySpec::Sun(n), formulas::sun_dominion(n)?)?);
            }
        }
        FamilyKind::Complete => {
            for n in range.filter(|&n| n >= 1) {
                // K_n is the n-fold join of K_1
                let zeta = formulas::iterated_join_dominion(1, 1, n)?;
                let formula = FamilyValue {
                    gamma: Some(1),
                    zeta,
                    status: Status::Proven,
                    source: "iterated join closed form",
                };
                out.push(make(FamilySpec::Complete(n), formula)?);
            }
        }
        FamilyKind::Star => {
            for leaves in range.filter(|&l| l >= 1) {
                let formula = formulas::multipartite_dominion(&[1, leaves])?;
                out.push(make(FamilySpec::Star(leaves), formula)?);
            }
        }
        FamilyKind::Multipartite => {
            for parts in multipartite_part_vectors() {
                if range.contains(&parts.iter().sum()) {
                    let formula = formulas::multipartite_dominion(&parts)?;
                    out.push(make(FamilySpec::CompleteMultipartite(parts), formula)?);
                }
            }
        }
        FamilyKind::Join => {
            let catalog: Vec<(FamilySpec, Graph, GammaReport)> = join_catalog()
                .into_iter()
                .map(|s| {
                    let g = s.build()?;
                    let r = crate::engine::dominion(&g)?;
                    Ok((s, g, r))
                })
                .collect::<Result<_>>()?;
            for (i, (s1, g1, r1)) in catalog.iter().enumerate() {
                for (s2, g2, r2) in &catalog[i..] {
                    if range.contains(&(g1.n() + g2.n())) {
                        let formula = formulas::join_dominion(g1, r1, g2, r2)?;
                        let spec = FamilySpec::Join(Box::new(s1.clone()), Box::new(s2.clone()));
                        out.push(make(spec, formula)?);
                    }
                }
            }
            out.sort_by_key(|inst| inst.graph.n());
        }
    }
    Ok(out)
}

fn check(inst: &Instance, config: &SweepConfig) -> VerificationRecord {
    let n = inst.graph.n();
    let start = Instant::now();
    let cap = match config.engine {
        EngineChoice::Oracle => ORACLE_MAX_N,
        EngineChoice::Search => config.search_max_n,
    };
    let run = || -> Result<(GammaReport, Option<GammaReport>)> {
        match config.engine {
            EngineChoice::Oracle => Ok((brute_force_dominion(&inst.graph)?, None)),
            EngineChoice::Search => {
                let budget = config.budget.map_or_else(Budget::unlimited, Budget::within);
                let primary = dominion_in(&inst.graph, budget)?;
                let second = if n <= ORACLE_MAX_N { Some(brute_force_dominion(&inst.graph)?) } else { None };
                Ok((primary, second))
            }
        }
    };
    let result = if n > cap { Err(Error::Capacity { requested: n, max: cap }) } else { run() };

    let (engine_gamma, engine_zeta, outcome) = match result {
        Ok((r, second)) => {
            let agree = second.is_none_or(|o| o.gamma == r.gamma && o.zeta == r.zeta);
            let outcome = if !agree {
                Outcome::EngineDisagreement
            } else if inst.formula.gamma.is_none_or(|g| g == r.gamma) && inst.formula.zeta == r.zeta {
                Outcome::Match
            } else {
                Outcome::Mismatch
            };
            (Some(r.gamma), Some(r.zeta), outcome)
        }
        Err(Error::Timeout) => (None, None, Outcome::Timeout),
        Err(_) => (None, None, Outcome::Skipped),
    };
    VerificationRecord {
        family: inst.family,
        instance: inst.spec.to_string(),
        n,
        formula_gamma: inst.formula.gamma,
        engine_gamma,
        formula_zeta: inst.formula.zeta,
        engine_zeta,
        status: inst.formula.status,
        outcome,
        matched: outcome == Outcome::Match,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn run_all(instances: &[Instance], config: &SweepConfig) -> Result<Vec<VerificationRecord>> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config.threads {
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| Error::InvalidInput(e.to_string()))?;
    // par_iter().collect() keeps parameter order regardless of completion order
    Ok(pool.install(|| instances.par_iter().map(|inst| check(inst, config)).collect()))
}

/// Checks one family over a parameter range: the order `n` for paths,
/// cycles and complete graphs, the cycle length for suns, the leaf count
/// for stars and the total vertex count for multipartite graphs and joins.
pub fn verify_family(
    kind: FamilyKind,
    range: RangeInclusive<usize>,
    config: &SweepConfig,
) -> Result<Vec<VerificationRecord>> {
    run_all(&instances(kind, range)?, config)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureSweep {
    pub records: Vec<VerificationRecord>,
    pub max_n: usize,
}

impl ConjectureSweep {
    pub fn first_counterexample(&self) -> Option<&VerificationRecord> {
        self.records.iter().find(|r| r.outcome == Outcome::Mismatch)
    }

    /// Largest n such that every conjectured cycle order up to n matched.
    pub fn consistent_up_to(&self) -> usize {
        match self.records.iter().position(|r| r.outcome != Outcome::Match) {
            None => self.max_n,
            Some(0) => 3,
            Some(i) => self.records[i].n - 1,
        }
    }
}

impl fmt::Display for ConjectureSweep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.first_counterexample() {
            let engine = r.engine_zeta.map_or("?".to_string(), |z| z.to_string());
            return write!(
                f,
                "counterexample at n = {}: engine zeta = {engine}, conjectured {}",
                r.n, r.formula_zeta
            );
        }
        write!(f, "conjecture consistent up to {}", self.consistent_up_to())?;
        let unresolved: Vec<String> = self
            .records
            .iter()
            .filter(|r| r.outcome != Outcome::Match)
            .map(|r| format!("{} ({:?})", r.n, r.outcome).to_uppercase())
            .collect();
        if !unresolved.is_empty() {
            write!(f, "; unresolved: {}", unresolved.join(", "))?;
        }
        Ok(())
    }
}

/// Compares ζ(C_n) with the conjectured value for every `n <= max_n` with
/// `n ≢ 0 (mod 3)`. The budget applies per instance.
pub fn verify_cycle_conjecture(max_n: usize, budget: Option<Duration>, config: &SweepConfig) -> Result<ConjectureSweep> {
    let instances: Vec<Instance> = (4..=max_n)
        .filter(|n| n % 3 != 0)
        .map(|n| {
            Ok(Instance {
                family: FamilyKind::Cycle,
                spec: FamilySpec::Cycle(n),
                graph: graph::make_cycle(n)?,
                formula: formulas::cycle_dominion(n)?,
            })
        })
        .collect::<Result<_>>()?;
    let config = SweepConfig { budget, ..config.clone() };
    Ok(ConjectureSweep { records: run_all(&instances, &config)?, max_n })
}
