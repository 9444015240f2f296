use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::graph::{Bipartition, Color, Coloring, Graph, Side, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    IndependentSet,
    DominatingSet,
    ThresholdDominatingSet,
    BwThresholdDominatingSet,
    InducedMatching,
    IrredundantSet,
}

impl Problem {
    pub fn tag(self) -> &'static str {
        match self {
            Problem::IndependentSet => "is",
            Problem::DominatingSet => "ds",
            Problem::ThresholdDominatingSet => "tds",
            Problem::BwThresholdDominatingSet => "bwtds",
            Problem::InducedMatching => "im",
            Problem::IrredundantSet => "irs",
        }
    }

    pub fn has_threshold(self) -> bool {
        matches!(
            self,
            Problem::ThresholdDominatingSet | Problem::BwThresholdDominatingSet
        )
    }

    /// Minimization problems ask for a solution of size at most `k`, the
    /// others for one of size at least `k`.
    pub fn is_minimization(self) -> bool {
        matches!(
            self,
            Problem::DominatingSet
                | Problem::ThresholdDominatingSet
                | Problem::BwThresholdDominatingSet
        )
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "is" => Problem::IndependentSet,
            "ds" => Problem::DominatingSet,
            "tds" => Problem::ThresholdDominatingSet,
            "bwtds" | "bw-tds" => Problem::BwThresholdDominatingSet,
            "im" => Problem::InducedMatching,
            "irs" | "ir" => Problem::IrredundantSet,
            other => return invalid(format!("unknown problem {other:?}")),
        })
    }
}

impl Serialize for Problem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for Problem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub problem: Problem,
    pub graph: Graph,
    pub k: usize,
    pub r: Option<usize>,
    pub coloring: Option<Coloring>,
    pub bipartition: Option<Bipartition>,
    pub declared_closure: Option<usize>,
}

impl Instance {
    /// Instance without threshold or coloring. Threshold problems get
    /// `r = 1`; bw-instances start all black.
    pub fn new(problem: Problem, graph: Graph, k: usize) -> Self {
        Instance {
            problem,
            graph,
            k,
            r: problem.has_threshold().then_some(1),
            coloring: (problem == Problem::BwThresholdDominatingSet).then(Coloring::all_black),
            bipartition: None,
            declared_closure: None,
        }
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_coloring(mut self, coloring: Coloring) -> Self {
        self.coloring = Some(coloring);
        self
    }

    pub fn with_bipartition(mut self, parts: Bipartition) -> Self {
        self.bipartition = Some(parts);
        self
    }

    pub fn with_closure(mut self, c: usize) -> Self {
        self.declared_closure = Some(c);
        self
    }

    /// Threshold `r`, defaulting to 1.
    pub fn threshold(&self) -> usize {
        self.r.unwrap_or(1)
    }

    pub fn is_black(&self, v: Vertex) -> bool {
        self.coloring.as_ref().is_none_or(|col| col.is_black(v))
    }

    pub fn black_vertices(&self) -> VertexSet {
        self.graph
            .vertices()
            .filter(|&v| self.is_black(v))
            .collect()
    }

    pub fn white_vertices(&self) -> VertexSet {
        self.graph
            .vertices()
            .filter(|&v| !self.is_black(v))
            .collect()
    }

    /// Checks the structural invariants tying fields to the problem tag.
    pub fn validate(&self) -> Result<()> {
        self.graph.validate()?;
        if self.problem.has_threshold() != self.r.is_some() {
            return invalid(format!(
                "threshold r given inconsistently for {}",
                self.problem
            ));
        }
        if self.r == Some(0) {
            return invalid("threshold r must be positive");
        }
        if (self.problem == Problem::BwThresholdDominatingSet) != self.coloring.is_some() {
            return invalid(format!(
                "coloring given inconsistently for {}",
                self.problem
            ));
        }
        if let Some(parts) = &self.bipartition {
            parts.validate(&self.graph)?;
        }
        if let Some(c) = self.declared_closure {
            crate::closure::require_c_closed(&self.graph, c)?;
        }
        Ok(())
    }

    pub fn remove_vertex(&mut self, v: Vertex) -> Result<()> {
        self.graph.delete_vertex(v)?;
        if let Some(col) = &mut self.coloring {
            col.forget(v);
        }
        if let Some(parts) = &mut self.bipartition {
            parts.forget(v);
        }
        Ok(())
    }

    pub fn set_color(&mut self, v: Vertex, color: Color) {
        if let Some(col) = &mut self.coloring {
            col.set(v, color);
        }
    }

    /// Applies one trace record. Replaying a full trace on the input of a
    /// pipeline reproduces its output.
    pub fn apply(&self, rec: &RuleRecord) -> Result<Instance> {
        let mut next = self.clone();
        for &v in &rec.removed {
            next.remove_vertex(v)?;
        }
        for add in &rec.added {
            next.graph.insert_vertex(add.id)?;
            for &u in &add.neighbors {
                next.graph.add_edge(add.id, u)?;
            }
            if let (Some(col), Some(color)) = (&mut next.coloring, add.color) {
                col.set(add.id, color);
            }
            if let (Some(parts), Some(side)) = (&mut next.bipartition, add.side) {
                parts.set(add.id, side);
            }
        }
        for &(u, v) in &rec.edges_added {
            next.graph.add_edge(u, v)?;
        }
        for &(v, color) in &rec.recolored {
            next.graph.require(v)?;
            next.set_color(v, color);
        }
        let k = next.k as i64 + rec.k_delta;
        if k < 0 {
            return invalid(format!("rule {} drives k negative", rec.rule));
        }
        next.k = k as usize;
        if let Some(retag) = &rec.retag {
            next.problem = retag.problem;
            next.r = retag.r;
            next.coloring = match (&next.coloring, retag.colored) {
                (_, false) => None,
                (Some(col), true) => Some(col.clone()),
                (None, true) => Some(Coloring::all_black()),
            };
            if retag.drop_bipartition {
                next.bipartition = None;
            }
        }
        if rec.closure_after.is_some() {
            next.declared_closure = rec.closure_after;
        }
        Ok(next)
    }

    pub fn replay(&self, trace: &[RuleRecord]) -> Result<Instance> {
        trace
            .iter()
            .try_fold(self.clone(), |inst, rec| inst.apply(rec))
    }
}

pub type Edge = (Vertex, Vertex);

pub fn normalize_edge(u: Vertex, v: Vertex) -> Edge {
    (u.min(v), u.max(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "elements", rename_all = "kebab-case")]
pub enum WitnessSet {
    VertexSet(VertexSet),
    EdgeSet(BTreeSet<Edge>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub problem: Problem,
    #[serde(flatten)]
    pub set: WitnessSet,
}

impl Witness {
    pub fn vertices(problem: Problem, set: VertexSet) -> Self {
        Witness {
            problem,
            set: WitnessSet::VertexSet(set),
        }
    }

    pub fn edges(problem: Problem, edges: impl IntoIterator<Item = Edge>) -> Self {
        Witness {
            problem,
            set: WitnessSet::EdgeSet(
                edges
                    .into_iter()
                    .map(|(u, v)| normalize_edge(u, v))
                    .collect(),
            ),
        }
    }

    pub fn len(&self) -> usize {
        match &self.set {
            WitnessSet::VertexSet(s) => s.len(),
            WitnessSet::EdgeSet(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertex_set(&self) -> Option<&VertexSet> {
        match &self.set {
            WitnessSet::VertexSet(s) => Some(s),
            WitnessSet::EdgeSet(_) => None,
        }
    }

    pub fn edge_set(&self) -> Option<&BTreeSet<Edge>> {
        match &self.set {
            WitnessSet::EdgeSet(s) => Some(s),
            WitnessSet::VertexSet(_) => None,
        }
    }
}

/// Identifiers of the individual reduction rules, as they appear in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Remove a vertex of high degree (independent set).
    HighDegree,
    /// Many independent vertices remain after degree reduction.
    ManyLowDegree,
    /// Attach a black simplicial vertex to a maximal clique with many blacks.
    CliqueManyBlack,
    /// Gadget on a small clique with large common black neighborhood.
    CommonNeighborhood(u8),
    /// Large common black neighborhood when `r ≥ c`.
    CommonNeighborhoodNo,
    /// Too many black vertices.
    BlackCount,
    /// Remove a white vertex dominated `r` times over.
    WhiteRemoval,
    /// Replace colors by a clique gadget.
    ColorGadget,
    /// Reinterpret a plain instance as an all-black one.
    Colorize,
    /// Vertex with many black neighbors in a bipartite graph.
    HighBlackDegree,
    /// Too many black vertices in a bipartite graph.
    BipartiteBlackCount,
    /// White vertex with at most one black neighbor.
    WhiteFewBlack,
    /// Large matching inside a neighborhood.
    NeighborhoodMatching,
    /// Many half-integral LP vertices.
    HalfIntegralCount,
    /// Many LP vertices at value one.
    IntegralCount,
    /// Surplus leaves on one vertex.
    ExtraLeaves,
    /// Attach a leaf to a dominating LP-one vertex.
    AttachLeaf,
    /// Every neighbor already has a leaf.
    NeighborsHaveLeaves,
    DropIsolated,
    /// Clusters counted directly in 1-closed graphs.
    ClusterCount,
    /// Dense bipartite graph.
    DenseBipartite,
    /// Many bipartite vertices of high degree.
    HighDegreeBipartite,
    /// Nonadjacent vertices with identical neighborhoods.
    FalseTwin,
    /// Simplicial twins.
    SimplicialTwin,
    /// Size threshold for irredundant sets.
    IrredundantThreshold,
    /// Budget or size makes the answer immediate.
    Trivial,
}

impl Rule {
    pub fn id(self) -> String {
        match self {
            Rule::HighDegree => "RR1".into(),
            Rule::ManyLowDegree => "RR1.yes".into(),
            Rule::CliqueManyBlack => "RR2".into(),
            Rule::CommonNeighborhood(i) => format!("RR3.{i}"),
            Rule::CommonNeighborhoodNo => "RR4".into(),
            Rule::BlackCount => "RR5".into(),
            Rule::WhiteRemoval => "RR6".into(),
            Rule::ColorGadget => "gadget".into(),
            Rule::Colorize => "colorize".into(),
            Rule::HighBlackDegree => "RR7".into(),
            Rule::BipartiteBlackCount => "RR8".into(),
            Rule::WhiteFewBlack => "RR9".into(),
            Rule::NeighborhoodMatching => "RR10".into(),
            Rule::HalfIntegralCount => "RR11".into(),
            Rule::IntegralCount => "RR12".into(),
            Rule::ExtraLeaves => "RR13".into(),
            Rule::AttachLeaf => "RR14".into(),
            Rule::NeighborsHaveLeaves => "RR15".into(),
            Rule::DropIsolated => "isolated".into(),
            Rule::ClusterCount => "clusters".into(),
            Rule::DenseBipartite => "dense".into(),
            Rule::HighDegreeBipartite => "high-degree".into(),
            Rule::FalseTwin => "im-twin".into(),
            Rule::SimplicialTwin => "RR16".into(),
            Rule::IrredundantThreshold => "irs-threshold".into(),
            Rule::Trivial => "trivial".into(),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(i) = s.strip_prefix("RR3.") {
            return i
                .parse()
                .map(Rule::CommonNeighborhood)
                .map_err(|_| Error::InvalidArgument(format!("bad rule id {s:?}")));
        }
        const FIXED: [Rule; 25] = [
            Rule::HighDegree,
            Rule::ManyLowDegree,
            Rule::CliqueManyBlack,
            Rule::CommonNeighborhoodNo,
            Rule::BlackCount,
            Rule::WhiteRemoval,
            Rule::ColorGadget,
            Rule::Colorize,
            Rule::HighBlackDegree,
            Rule::BipartiteBlackCount,
            Rule::WhiteFewBlack,
            Rule::NeighborhoodMatching,
            Rule::HalfIntegralCount,
            Rule::IntegralCount,
            Rule::ExtraLeaves,
            Rule::AttachLeaf,
            Rule::NeighborsHaveLeaves,
            Rule::DropIsolated,
            Rule::ClusterCount,
            Rule::DenseBipartite,
            Rule::HighDegreeBipartite,
            Rule::FalseTwin,
            Rule::SimplicialTwin,
            Rule::IrredundantThreshold,
            Rule::Trivial,
        ];
        FIXED
            .into_iter()
            .find(|r| r.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown rule id {s:?}")))
    }
}

impl Serialize for Rule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.id())
    }
}

impl<'de> Deserialize<'de> for Rule {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedVertex {
    pub id: Vertex,
    pub neighbors: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Retag {
    pub problem: Problem,
    pub r: Option<usize>,
    /// Keep (or introduce, all black) a coloring; `false` erases it.
    pub colored: bool,
    #[serde(default)]
    pub drop_bipartition: bool,
}

/// One rule application: enough to replay it and to explain it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleRecord {
    pub rule: Rule,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub added: Vec<AddedVertex>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub recolored: Vec<(Vertex, Color)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges_added: Vec<Edge>,
    #[serde(default)]
    pub k_delta: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub retag: Option<Retag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure_after: Option<usize>,
    /// Set when the rule settles the instance.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision: Option<bool>,
    /// Named vertex sets the rule looked at, e.g. the clique and its common
    /// black neighborhood.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub payload: BTreeMap<String, Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RuleRecord {
    pub fn new(rule: Rule) -> Self {
        RuleRecord {
            rule,
            removed: Vec::new(),
            added: Vec::new(),
            recolored: Vec::new(),
            edges_added: Vec::new(),
            k_delta: 0,
            retag: None,
            closure_after: None,
            decision: None,
            payload: BTreeMap::new(),
            note: None,
        }
    }

    pub fn decided(rule: Rule, answer: bool) -> Self {
        RuleRecord {
            decision: Some(answer),
            ..RuleRecord::new(rule)
        }
    }

    pub fn with_payload(mut self, key: &str, set: impl IntoIterator<Item = Vertex>) -> Self {
        self.payload
            .insert(key.to_owned(), set.into_iter().collect());
        self
    }

    /// `true` if the record changes the instance (as opposed to only
    /// deciding it).
    pub fn is_structural(&self) -> bool {
        !self.removed.is_empty()
            || !self.added.is_empty()
            || !self.recolored.is_empty()
            || !self.edges_added.is_empty()
            || self.k_delta != 0
            || self.retag.is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "lowercase")]
pub enum KernelOutcome {
    Decided {
        answer: bool,
        witness: Option<Witness>,
        trace: Vec<RuleRecord>,
    },
    Reduced {
        instance: Instance,
        trace: Vec<RuleRecord>,
    },
}

impl KernelOutcome {
    pub fn trace(&self) -> &[RuleRecord] {
        match self {
            KernelOutcome::Decided { trace, .. } | KernelOutcome::Reduced { trace, .. } => trace,
        }
    }

    pub fn answer(&self) -> Option<bool> {
        match self {
            KernelOutcome::Decided { answer, .. } => Some(*answer),
            KernelOutcome::Reduced { .. } => None,
        }
    }

    pub fn reduced(&self) -> Option<&Instance> {
        match self {
            KernelOutcome::Reduced { instance, .. } => Some(instance),
            KernelOutcome::Decided { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            KernelOutcome::Decided { witness, .. } => witness.as_ref(),
            KernelOutcome::Reduced { .. } => None,
        }
    }
}
