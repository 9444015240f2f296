//! Kernelization pipelines. Every state change goes through a
//! [`RuleRecord`], so replaying the trace on the input reproduces the
//! output exactly.

pub mod dominating_set;
pub mod independent_set;
pub mod induced_matching;
pub mod irredundant_set;

use num_bigint::BigUint;

use crate::closure::require_c_closed;
use crate::error::{invalid, Error, Result};
use crate::instance::{Instance, KernelOutcome, Problem, RuleRecord, Witness};

pub use dominating_set::{
    hitting_set_to_ds, kernelize_bipartite_bwds, kernelize_bwtds, kernelize_ds, kernelize_tds,
    lift_through_trace, lift_witness, random_hitting_set, uncolor_gadget, GadgetInfo,
    HittingSetInstance,
};
pub use independent_set::kernelize_is;
pub use induced_matching::{kernelize_im, kernelize_im_bipartite, kernelize_im_with, ImOptions};
pub use irredundant_set::{extract_irs_witness, kernelize_irs, kernelize_irs_with, IrsOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipartiteMode {
    /// Thresholds in terms of the maximum degree.
    Delta,
    /// Thresholds in terms of the closure.
    Closure,
}

#[derive(Clone, Debug, Default)]
pub struct KernelOptions {
    /// Fail instead of answering Yes without a witness.
    pub require_witness: bool,
    /// Use the bipartite kernel (dominating set, induced matching).
    pub bipartite: Option<BipartiteMode>,
    /// Replaces the `V½` and `V1` thresholds of the induced-matching
    /// kernel. For tests only; the rules are unsound below the real ones.
    pub im_lp_thresholds: Option<(BigUint, BigUint)>,
    /// Replaces `α'` in the irredundant-set threshold. For tests only.
    pub irs_alpha_prime: Option<BigUint>,
}

/// Runs the kernel matching the instance's problem.
pub fn kernelize(inst: &Instance, c: usize, opts: &KernelOptions) -> Result<KernelOutcome> {
    match (inst.problem, opts.bipartite) {
        (Problem::IndependentSet, _) => kernelize_is(inst, c),
        (Problem::DominatingSet | Problem::BwThresholdDominatingSet, Some(_)) => {
            let parts = bipartition_of(inst)?;
            kernelize_bipartite_bwds(inst, &parts, c)
        }
        (Problem::ThresholdDominatingSet, Some(_)) => {
            invalid("the bipartite kernel needs a dominating-set instance with r = 1")
        }
        (Problem::DominatingSet, None) => kernelize_ds(inst, c),
        (Problem::ThresholdDominatingSet, None) => kernelize_tds(inst, c),
        (Problem::BwThresholdDominatingSet, None) => kernelize_bwtds(inst, c),
        (Problem::InducedMatching, Some(mode)) => {
            let parts = bipartition_of(inst)?;
            kernelize_im_bipartite(inst, &parts, c, mode)
        }
        (Problem::InducedMatching, None) => kernelize_im_with(
            inst,
            c,
            &ImOptions {
                require_witness: opts.require_witness,
                lp_thresholds: opts.im_lp_thresholds.clone(),
            },
        ),
        (Problem::IrredundantSet, _) => kernelize_irs_with(
            inst,
            c,
            &IrsOptions {
                require_witness: opts.require_witness,
                alpha_prime: opts.irs_alpha_prime.clone(),
            },
        ),
    }
}

fn bipartition_of(inst: &Instance) -> Result<crate::graph::Bipartition> {
    match &inst.bipartition {
        Some(parts) => {
            parts.validate(&inst.graph)?;
            Ok(parts.clone())
        }
        None => inst
            .graph
            .infer_bipartition()
            .ok_or_else(|| Error::InvalidBipartition("graph is not bipartite".into())),
    }
}

pub(crate) fn require_problem(inst: &Instance, expected: &[Problem]) -> Result<()> {
    if !expected.contains(&inst.problem) {
        return invalid(format!("kernel does not accept {} instances", inst.problem));
    }
    inst.validate()
}

pub(crate) fn require_closure(inst: &Instance, c: usize) -> Result<()> {
    if c == 0 {
        return invalid("closure bound c must be positive");
    }
    require_c_closed(&inst.graph, c)
}

/// Drops a witness that could not be built because an extraction
/// precondition failed, unless the caller insists on one.
pub(crate) fn optional_witness(res: Result<Witness>, require: bool) -> Result<Option<Witness>> {
    match res {
        Ok(w) => Ok(Some(w)),
        Err(Error::Precondition(_)) if !require => Ok(None),
        Err(e) => Err(e),
    }
}

pub(crate) struct Pipeline {
    pub inst: Instance,
    pub trace: Vec<RuleRecord>,
}

impl Pipeline {
    pub fn new(inst: &Instance) -> Self {
        Pipeline {
            inst: inst.clone(),
            trace: Vec::new(),
        }
    }

    pub fn apply(&mut self, rec: RuleRecord) -> Result<()> {
        self.inst = self.inst.apply(&rec)?;
        self.trace.push(rec);
        Ok(())
    }

    pub fn decide(mut self, rec: RuleRecord, witness: Option<Witness>) -> KernelOutcome {
        let answer = rec.decision.expect("deciding record");
        self.trace.push(rec);
        KernelOutcome::Decided {
            answer,
            witness,
            trace: self.trace,
        }
    }

    pub fn reduced(self) -> KernelOutcome {
        KernelOutcome::Reduced {
            instance: self.inst,
            trace: self.trace,
        }
    }
}
