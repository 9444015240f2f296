//! Randomized agreement checks between the kernels, the branching solver
//! and the exhaustive oracle.
//!
//! Trial `i` draws from `ChaCha8Rng::seed_from_u64(seed)` on stream `i`, so
//! any single trial can be reproduced without running the others.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closure::{compute_closure, is_c_closed};
use crate::error::{invalid, Error, Result};
use crate::format::serialize;
use crate::graph::{Bipartition, Color, Coloring, Graph, Side, Vertex};
use crate::instance::{Instance, KernelOutcome, Problem, Rule};
use crate::kernel::{
    dominating_set, independent_set, induced_matching, irredundant_set, kernelize, BipartiteMode,
    KernelOptions,
};
use crate::oracle::{validate_witness, Oracle, HARD_LIMIT};
use crate::solver::{solve_ds, solve_tds};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub problem: Problem,
    pub bipartite: Option<BipartiteMode>,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub r_max: usize,
    pub k_max: usize,
    /// Also run the branching solver on dominating-set problems.
    pub solver: bool,
}

impl VerifyConfig {
    pub fn new(problem: Problem, n_max: usize, trials: usize, seed: u64) -> Self {
        VerifyConfig {
            problem,
            bipartite: None,
            n_max,
            trials,
            seed,
            r_max: 2,
            k_max: 3,
            solver: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_max == 0 {
            return invalid("n-max must be positive");
        }
        if self.r_max == 0 {
            return invalid("r must be positive");
        }
        if self.n_max > HARD_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "n-max {} exceeds the oracle limit {HARD_LIMIT}",
                self.n_max
            )));
        }
        match (self.problem, self.bipartite) {
            (Problem::ThresholdDominatingSet, Some(_)) => {
                invalid("the bipartite kernel supports ds and bwtds only")
            }
            (Problem::IndependentSet | Problem::IrredundantSet, Some(_)) => {
                invalid("no bipartite kernel for this problem")
            }
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub index: usize,
    pub n: usize,
    pub edges: usize,
    pub c: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub oracle: bool,
    /// `"decided"` or `"reduced"`; absent when the kernel failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_answer: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduced_vertices: Option<usize>,
    /// Ids of the trace records, in order.
    pub rules: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver_answer: Option<bool>,
    pub failures: Vec<String>,
}

impl TrialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Reproducer {
    pub index: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub failures: Vec<String>,
    /// Minimized instance in the graph text format.
    pub graph: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub problem: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<String>,
    pub seed: u64,
    pub n_max: usize,
    pub k_max: usize,
    pub r_max: usize,
    pub passed: usize,
    pub failed: usize,
    pub trials: Vec<TrialReport>,
    pub reproducers: Vec<Reproducer>,
}

impl VerifyReport {
    pub fn all_agree(&self) -> bool {
        self.failed == 0
    }
}

pub fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Instance drawn for trial `index`.
pub fn random_instance(cfg: &VerifyConfig, index: usize) -> Instance {
    let mut rng = trial_rng(cfg.seed, index);
    let n = rng.random_range(1..=cfg.n_max);
    let p = rng.random_range(0.15..0.85);
    let k = rng.random_range(0..=cfg.k_max);
    let mut parts = None;
    let g = if cfg.bipartite.is_some() {
        let mut bp = Bipartition::default();
        for v in 0..n as Vertex {
            bp.set(
                v,
                if rng.random_bool(0.5) {
                    Side::Left
                } else {
                    Side::Right
                },
            );
        }
        let mut g = Graph::with_vertices(n);
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                if bp.side(u) != bp.side(v) && rng.random_bool(p) {
                    g.add_edge(u, v).expect("fresh pair");
                }
            }
        }
        parts = Some(bp);
        g
    } else {
        crate::generate::er(n, p, &mut rng)
    };
    let mut inst = Instance::new(cfg.problem, g, k);
    if cfg.problem == Problem::ThresholdDominatingSet {
        inst = inst.with_r(rng.random_range(1..=cfg.r_max));
    }
    if cfg.problem == Problem::BwThresholdDominatingSet {
        let r = if cfg.bipartite.is_some() {
            1
        } else {
            rng.random_range(1..=cfg.r_max)
        };
        let mut col = Coloring::all_black();
        for v in 0..n as Vertex {
            if rng.random_bool(0.3) {
                col.set(v, Color::White);
            }
        }
        inst = inst.with_r(r).with_coloring(col);
    }
    if let Some(bp) = parts {
        inst = inst.with_bipartition(bp);
    }
    inst
}

fn size_bound(cfg: &VerifyConfig, pre_gadget: &Instance, reduced: &Instance, c: usize) -> bool {
    match (cfg.problem, cfg.bipartite) {
        (Problem::IndependentSet, _) => independent_set::size_bound_holds(reduced, c, reduced.k),
        (Problem::IrredundantSet, _) => irredundant_set::size_bound_holds(reduced, c),
        (Problem::InducedMatching, None) => induced_matching::size_bound_holds(reduced, c),
        (Problem::InducedMatching, Some(mode)) => {
            induced_matching::bipartite_size_bound_holds(reduced, c, mode)
        }
        (_, Some(_)) => dominating_set::bipartite_size_bound_holds(reduced, c),
        (_, None) => dominating_set::black_count_bound_holds(pre_gadget, c),
    }
}

/// Runs every check on one instance and returns the report.
pub fn check_instance(cfg: &VerifyConfig, index: usize, inst: &Instance) -> Result<TrialReport> {
    let oracle = Oracle::new(HARD_LIMIT);
    let c = compute_closure(&inst.graph).c;
    let expected = oracle.decide(inst)?;
    let mut report = TrialReport {
        index,
        n: inst.graph.vertex_count(),
        edges: inst.graph.edge_count(),
        c,
        k: inst.k,
        r: inst.problem.has_threshold().then(|| inst.threshold()),
        oracle: expected,
        outcome: None,
        kernel_answer: None,
        reduced_vertices: None,
        rules: Vec::new(),
        solver_answer: None,
        failures: Vec::new(),
    };
    let fail = |report: &mut TrialReport, msg: String| report.failures.push(msg);

    let opts = KernelOptions {
        bipartite: cfg.bipartite,
        ..Default::default()
    };
    match kernelize(inst, c, &opts) {
        Err(e @ Error::ResourceLimit(_)) => return Err(e),
        Err(e) => fail(&mut report, format!("kernel error: {e}")),
        Ok(out) => check_outcome(cfg, inst, c, expected, &oracle, &out, &mut report)?,
    }

    if cfg.solver && cfg.bipartite.is_none() && inst.problem.is_minimization() {
        let solved = match inst.problem {
            Problem::DominatingSet => Some(solve_ds(&inst.graph, c, inst.k)),
            Problem::ThresholdDominatingSet => {
                Some(solve_tds(&inst.graph, c, inst.threshold(), inst.k))
            }
            _ => None,
        };
        match solved {
            Some(Err(e)) => fail(&mut report, format!("solver error: {e}")),
            Some(Ok(sol)) => {
                report.solver_answer = Some(sol.answer);
                if sol.answer != expected {
                    fail(
                        &mut report,
                        format!("solver says {}, oracle says {expected}", sol.answer),
                    );
                }
                if let Some(w) = &sol.witness {
                    if !validate_witness(inst, w)? {
                        fail(&mut report, "solver witness does not validate".into());
                    }
                }
            }
            None => {}
        }
    }
    Ok(report)
}

fn check_outcome(
    cfg: &VerifyConfig,
    inst: &Instance,
    c: usize,
    expected: bool,
    oracle: &Oracle,
    out: &KernelOutcome,
    report: &mut TrialReport,
) -> Result<()> {
    let mut state = inst.clone();
    let mut pre_gadget = inst.clone();
    let mut gadget_seen = false;
    report.rules = out.trace().iter().map(|r| r.rule.id()).collect();
    for rec in out.trace().iter().filter(|r| r.is_structural()) {
        state = match state.apply(rec) {
            Ok(s) => s,
            Err(e) => {
                report
                    .failures
                    .push(format!("{} does not replay: {e}", rec.rule));
                return Ok(());
            }
        };
        if rec.rule == Rule::ColorGadget {
            gadget_seen = true;
            let actual = compute_closure(&state.graph).c;
            if rec.closure_after != Some(actual) {
                report.failures.push(format!(
                    "gadget declares closure {:?}, recomputed {actual}",
                    rec.closure_after
                ));
            }
        } else {
            if !gadget_seen {
                pre_gadget = state.clone();
            }
            if !gadget_seen && !is_c_closed(&state.graph, c)? {
                report
                    .failures
                    .push(format!("{} breaks {c}-closure", rec.rule));
            }
        }
        if state.graph.vertex_count() <= HARD_LIMIT {
            let now = oracle.decide(&state)?;
            if now != expected {
                report.failures.push(format!(
                    "{} changes the answer from {expected} to {now}",
                    rec.rule
                ));
            }
        }
    }
    match out {
        KernelOutcome::Decided {
            answer, witness, ..
        } => {
            report.outcome = Some("decided");
            report.kernel_answer = Some(*answer);
            if *answer != expected {
                report
                    .failures
                    .push(format!("kernel decides {answer}, oracle says {expected}"));
            }
            if let Some(w) = witness {
                if !validate_witness(inst, w)? {
                    report
                        .failures
                        .push("kernel witness does not validate".into());
                }
            }
        }
        KernelOutcome::Reduced { instance, .. } => {
            report.outcome = Some("reduced");
            report.reduced_vertices = Some(instance.graph.vertex_count());
            if state != *instance {
                report
                    .failures
                    .push("trace replay differs from the reduced instance".into());
            }
            if !size_bound(cfg, &pre_gadget, instance, c) {
                report
                    .failures
                    .push("reduced instance exceeds its size bound".into());
            }
        }
    }
    Ok(())
}

/// Greedy vertex deletion while some check still fails.
pub fn minimize(cfg: &VerifyConfig, inst: &Instance) -> Result<(Instance, Vec<String>)> {
    let mut current = inst.clone();
    let mut failures = check_instance(cfg, 0, &current)?.failures;
    'shrink: loop {
        for v in current.graph.vertices().collect::<Vec<_>>() {
            let mut smaller = current.clone();
            smaller.remove_vertex(v)?;
            let f = check_instance(cfg, 0, &smaller)?.failures;
            if !f.is_empty() {
                current = smaller;
                failures = f;
                continue 'shrink;
            }
        }
        return Ok((current, failures));
    }
}

pub fn reproducer_text(inst: &Instance) -> String {
    let mut head = format!("# problem {} k {}", inst.problem, inst.k);
    if inst.problem.has_threshold() {
        head.push_str(&format!(" r {}", inst.threshold()));
    }
    head.push('\n');
    head + &serialize(
        &inst.graph,
        inst.coloring.as_ref(),
        inst.bipartition.as_ref(),
    )
}

/// Runs all trials in parallel; the report lists them by index.
pub fn run(cfg: &VerifyConfig) -> Result<VerifyReport> {
    cfg.validate()?;
    let trials: Vec<TrialReport> = (0..cfg.trials)
        .into_par_iter()
        .map(|i| check_instance(cfg, i, &random_instance(cfg, i)))
        .collect::<Result<_>>()?;
    let reproducers: Vec<Reproducer> = trials
        .par_iter()
        .filter(|t| !t.passed())
        .map(|t| {
            let (small, failures) = minimize(cfg, &random_instance(cfg, t.index))?;
            Ok(Reproducer {
                index: t.index,
                k: small.k,
                r: small.problem.has_threshold().then(|| small.threshold()),
                failures,
                graph: reproducer_text(&small),
            })
        })
        .collect::<Result<_>>()?;
    let failed = trials.iter().filter(|t| !t.passed()).count();
    Ok(VerifyReport {
        schema: SCHEMA,
        problem: cfg.problem.tag().to_owned(),
        bipartite: cfg.bipartite.map(|m| match m {
            BipartiteMode::Delta => "delta".to_owned(),
            BipartiteMode::Closure => "closure".to_owned(),
        }),
        seed: cfg.seed,
        n_max: cfg.n_max,
        k_max: cfg.k_max,
        r_max: cfg.r_max,
        passed: trials.len() - failed,
        failed,
        trials,
        reproducers,
    })
}
