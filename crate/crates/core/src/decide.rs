//! Global dimension, GK dimension, finite generation and Noetherianity of
//! the Yoneda algebra, each with a witness.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Serialize, Serializer};

use crate::automaton::{indecomposable_prefixes_recur, Automaton, Family, Recognition, DEFAULT_STATE_CAP};
use crate::error::Result;
use crate::graph::{CpsGraph, GraphParams, VertexId};
use crate::presentation::Presentation;
use crate::walks::{violates_density_condition, EventuallyPeriodicWalk, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Dimension {
    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn at_most(self, n: usize) -> bool {
        matches!(self, Dimension::Finite(d) if d <= n)
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => write!(f, "∞"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => s.serialize_u64(*d as u64),
            Dimension::Infinite => s.serialize_str("infinity"),
        }
    }
}

fn words(g: &CpsGraph, ids: &[VertexId]) -> Vec<String> {
    ids.iter().map(|&v| g.display(v)).collect()
}

/// Shortest closed walk through some vertex of `allowed`, staying inside it.
fn shortest_cycle(g: &CpsGraph, allowed: &dyn Fn(VertexId) -> bool) -> Option<Vec<VertexId>> {
    let mut best: Option<Vec<VertexId>> = None;
    for s in (0..g.vertex_count()).filter(|&v| allowed(v)) {
        let mut parent: HashMap<VertexId, VertexId> = HashMap::new();
        let mut queue = VecDeque::from([s]);
        let mut seen = BTreeSet::from([s]);
        let mut closing = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for v in g.successors(u) {
                if !allowed(v) {
                    continue;
                }
                if v == s {
                    closing = Some(u);
                    break 'bfs;
                }
                if seen.insert(v) {
                    parent.insert(v, u);
                    queue.push_back(v);
                }
            }
        }
        if let Some(mut u) = closing {
            let mut rev = vec![s, u];
            while u != s {
                u = parent[&u];
                rev.push(u);
            }
            rev.reverse();
            if best.as_ref().is_none_or(|b| rev.len() < b.len()) {
                best = Some(rev);
            }
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalDimension {
    pub value: Dimension,
    /// A circuit when infinite, else a longest anchored walk.
    pub witness: Vec<String>,
    #[serde(skip)]
    pub witness_ids: Vec<VertexId>,
}

/// Infinite iff the graph has a circuit; otherwise one more than the length
/// of the longest anchored walk, since walks of length `n` index `Ext^{n+1}`.
pub fn global_dimension(g: &CpsGraph) -> GlobalDimension {
    if let Some(c) = shortest_cycle(g, &|_| true) {
        return GlobalDimension {
            value: Dimension::Infinite,
            witness: words(g, &c),
            witness_ids: c,
        };
    }
    // acyclic: longest path from a generator, by memoized depth
    let mut order: Vec<VertexId> = Vec::new();
    let mut mark = vec![false; g.vertex_count()];
    fn visit(g: &CpsGraph, v: VertexId, mark: &mut [bool], order: &mut Vec<VertexId>) {
        mark[v] = true;
        for w in g.successors(v) {
            if !mark[w] {
                visit(g, w, mark, order);
            }
        }
        order.push(v);
    }
    for v in 0..g.vertex_count() {
        if !mark[v] {
            visit(g, v, &mut mark, &mut order);
        }
    }
    let mut depth = vec![0usize; g.vertex_count()];
    let mut next: Vec<Option<VertexId>> = vec![None; g.vertex_count()];
    for &v in &order {
        for w in g.successors(v) {
            if depth[w] + 1 > depth[v] {
                depth[v] = depth[w] + 1;
                next[v] = Some(w);
            }
        }
    }
    let start = g.g0().max_by_key(|&x| (depth[x], std::cmp::Reverse(x)));
    let mut path = Vec::new();
    let mut cur = start;
    while let Some(v) = cur {
        path.push(v);
        cur = next[v];
    }
    let longest = path.len().saturating_sub(1);
    GlobalDimension {
        value: Dimension::Finite(longest + 1),
        witness: words(g, &path),
        witness_ids: path,
    }
}

/// Infinite iff two circuits share a vertex; otherwise the largest number
/// of cyclic components met by one path through the condensation.
pub fn gk_dimension(g: &CpsGraph) -> Dimension {
    let report = g.circuits_and_sccs();
    if report.has_shared_vertex() {
        return Dimension::Infinite;
    }
    let k = report.sccs.len();
    let mut dag: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    for e in g.edges() {
        let (a, b) = (report.scc_index[e.source], report.scc_index[e.target]);
        if a != b {
            dag[a].insert(b);
        }
    }
    let mut best: Vec<Option<usize>> = vec![None; k];
    fn longest(c: usize, dag: &[BTreeSet<usize>], cyclic: &[bool], best: &mut [Option<usize>]) -> usize {
        if let Some(b) = best[c] {
            return b;
        }
        let tail = dag[c].iter().map(|&d| longest(d, dag, cyclic, best)).max().unwrap_or(0);
        let b = tail + usize::from(cyclic[c]);
        best[c] = Some(b);
        b
    }
    Dimension::Finite((0..k).map(|c| longest(c, &dag, &report.cyclic, &mut best)).max().unwrap_or(0))
}

/// How a finite generation verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FgMethod {
    /// Finitely many anchored walks.
    FiniteGlobalDimension,
    /// `L = 1`: every circuit passes through a generator.
    CircuitThroughGenerator,
    /// Anchored walks of length `N` and `N+1`.
    LengthBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodicWitness {
    pub prefix: Vec<String>,
    pub cycle: Vec<String>,
    /// `from_indecomposable_walk` or `automaton_cycle`.
    pub construction: &'static str,
    pub violates_density_condition: bool,
    pub indecomposable_prefixes_recur: bool,
    #[serde(skip)]
    pub walk: EventuallyPeriodicWalk,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyWitness {
    pub prefix: Vec<String>,
    pub cycle: Vec<String>,
    pub tail: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteGeneration {
    pub finitely_generated: bool,
    pub method: FgMethod,
    /// The verdict of `method` alone.
    pub method_verdict: bool,
    /// Generators live in cohomological degrees `≤` this bound.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generator_degree_bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub indecomposable_walk: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_circuit: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PeriodicWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyWitness>,
    pub notes: Vec<String>,
}

fn periodic_witness(g: &CpsGraph, w: EventuallyPeriodicWalk, construction: &'static str) -> Result<PeriodicWitness> {
    Ok(PeriodicWitness {
        prefix: words(g, w.prefix().vertices()),
        cycle: words(g, w.cycle().vertices()),
        construction,
        violates_density_condition: violates_density_condition(g, &w)?,
        indecomposable_prefixes_recur: indecomposable_prefixes_recur(g, &w)?,
        walk: w,
    })
}

/// Candidate lassos cut out of an indecomposable anchored walk `q`: first a
/// repeated vertex before the first admissible edge, then repeated pairs of
/// vertices at even distance after it.
fn lassos_from(q: &[VertexId], g: &CpsGraph) -> Vec<(usize, usize)> {
    let n = q.len() - 1;
    let first_adm = (1..n).find(|&k| g.is_admissible_edge(q[k], q[k + 1]));
    let head_end = first_adm.unwrap_or(n);
    let mut out = Vec::new();
    for b in 1..=head_end {
        if let Some(a) = (1..b).find(|&a| q[a] == q[b]) {
            out.push((a, b));
            break;
        }
    }
    if let Some(j) = first_adm {
        for d in 1.. {
            let hi = j + 2 * d;
            if hi + 1 > n {
                break;
            }
            for c in 0..d {
                let lo = j + 2 * c;
                if q[lo] == q[hi] && q[lo + 1] == q[hi + 1] {
                    out.push((lo, hi));
                }
            }
        }
    }
    out
}

/// Decides whether the Yoneda algebra is finitely generated.
///
/// The verdict comes from an exact automaton over indecomposable anchored
/// walks. The classical procedure (finite global dimension, the circuit
/// test when `L = 1`, or the length-`N` check) is run as well and reported
/// in `method_verdict`; a disagreement is recorded in `notes`.
pub fn finitely_generated(g: &CpsGraph) -> Result<FiniteGeneration> {
    finitely_generated_with_cap(g, DEFAULT_STATE_CAP)
}

pub fn finitely_generated_with_cap(g: &CpsGraph, cap: usize) -> Result<FiniteGeneration> {
    let mut notes = Vec::new();
    let auto = Automaton::build(g, cap)?;
    let exact = auto.analyze(g);
    let params = g.params();
    let mut out = FiniteGeneration {
        finitely_generated: matches!(exact, Recognition::Finite { .. }),
        method: FgMethod::LengthBound,
        method_verdict: true,
        generator_degree_bound: None,
        indecomposable_walk: None,
        offending_circuit: None,
        witness: None,
        family: None,
        notes: Vec::new(),
    };
    if let Recognition::Finite { max_indecomposable_length } = exact {
        out.generator_degree_bound = Some(max_indecomposable_length + 1);
    }

    if global_dimension(g).value.is_finite() {
        out.method = FgMethod::FiniteGlobalDimension;
    } else if params.max_leading_path == 1 {
        out.method = FgMethod::CircuitThroughGenerator;
        if let Some(c) = shortest_cycle(g, &|v| !g.in_g0(v)) {
            out.method_verdict = false;
            out.offending_circuit = Some(words(g, &c));
        }
    } else {
        let n = params.bound_n;
        let q = auto
            .indecomposable_of_length(n)
            .or_else(|| auto.indecomposable_of_length(n + 1));
        if let Some(q) = q {
            out.method_verdict = false;
            out.indecomposable_walk = Some(words(g, &q));
            for (lo, hi) in lassos_from(&q, g) {
                let w = EventuallyPeriodicWalk::new(g, Walk::from_ids(q[..=lo].to_vec()), Walk::from_ids(q[lo..=hi].to_vec()))?;
                let pw = periodic_witness(g, w, "from_indecomposable_walk")?;
                if pw.violates_density_condition && pw.indecomposable_prefixes_recur {
                    out.witness = Some(pw);
                    break;
                }
            }
            if out.witness.is_none() {
                notes.push("no lasso cut from the indecomposable walk satisfies both witness checks".to_string());
            }
        }
    }

    if let Recognition::Infinite { periodic, family } = exact {
        if out.witness.is_none() {
            if let Some(w) = periodic {
                out.witness = Some(periodic_witness(g, w, "automaton_cycle")?);
            }
        }
        if let Some(Family { prefix, cycle, tail }) = family {
            out.family = Some(FamilyWitness {
                prefix: words(g, &prefix),
                cycle: words(g, &cycle),
                tail: words(g, &tail),
            });
        }
    }
    if out.method_verdict != out.finitely_generated {
        notes.push(format!(
            "{:?} check says {}, exhaustive automaton says {}; reporting the latter",
            out.method, out.method_verdict, out.finitely_generated
        ));
    }
    out.notes = notes;
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

impl std::str::FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("side must be left or right, got {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoetherianWitness {
    /// A vertex on a circuit with out-degree (left) or in-degree (right) `> 1`.
    Vertex { vertex: String, degree: usize },
    /// A circuit edge that is not admissible.
    Edge { source: String, target: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Noetherian {
    pub side: Side,
    pub noetherian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NoetherianWitness>,
}

/// Every circuit vertex has out-degree (left) or in-degree (right) 1 and
/// every circuit edge is admissible. Degrees are checked first; once they
/// hold, the cyclic components are single circuits and their internal
/// edges are exactly the circuit edges.
pub fn noetherian(g: &CpsGraph, side: Side) -> Noetherian {
    let report = g.circuits_and_sccs();
    for v in (0..g.vertex_count()).filter(|&v| report.on_circuit(v)) {
        let degree = match side {
            Side::Left => g.out_degree(v),
            Side::Right => g.in_degree(v),
        };
        if degree > 1 {
            return Noetherian {
                side,
                noetherian: false,
                witness: Some(NoetherianWitness::Vertex { vertex: g.display(v), degree }),
            };
        }
    }
    for e in g.edges() {
        let same = report.scc_index[e.source] == report.scc_index[e.target];
        if same && report.on_circuit(e.source) && !e.admissible {
            return Noetherian {
                side,
                noetherian: false,
                witness: Some(NoetherianWitness::Edge {
                    source: g.display(e.source),
                    target: g.display(e.target),
                }),
            };
        }
    }
    Noetherian { side, noetherian: true, witness: None }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub gldim: GlobalDimension,
    pub gk_dim: Dimension,
    pub finitely_generated: FiniteGeneration,
    pub noetherian_left: Noetherian,
    pub noetherian_right: Noetherian,
    pub params: GraphParams,
    pub bound_n: usize,
    pub notes: Vec<String>,
}

pub fn analyze_graph(g: &CpsGraph) -> Result<AnalysisReport> {
    let gldim = global_dimension(g);
    let mut notes = vec![
        "gldim is one more than the longest anchored walk: walks of length n index Ext^(n+1), so the longest path alone undercounts by one".to_string(),
    ];
    if gldim.value.is_finite() {
        notes.push("finite global dimension: Ext is finite dimensional, hence finitely generated and Noetherian".into());
    }
    let params = g.params();
    if params.leading_path_defaulted {
        notes.push("no anchored simple path reaches an admissible edge; L defaults to 1".into());
    }
    let fg = finitely_generated(g)?;
    notes.extend(fg.notes.iter().cloned());
    Ok(AnalysisReport {
        gk_dim: gk_dimension(g),
        noetherian_left: noetherian(g, Side::Left),
        noetherian_right: noetherian(g, Side::Right),
        bound_n: params.bound_n,
        params,
        gldim,
        finitely_generated: fg,
        notes,
    })
}

pub fn analyze(p: Presentation) -> Result<AnalysisReport> {
    analyze_graph(&CpsGraph::from_presentation(p))
}
