//! The CPS graph `Γ(A)`.
//!
//! Vertices are the words of `𝔊 = ⋃ 𝔊_i`, where `𝔊_0` is the alphabet and
//! `𝔊_i` collects the annihilator sets `𝔄_w` of the previous generation. There
//! is an edge `m₁ → m₂` whenever `m₂ ∈ 𝔄_{m₁}`; it is admissible when
//! `m₂ ⊗ m₁` is itself a defining relation.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::ideal::MonomialIdeal;
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub word: Word,
    /// First `i` with the word in `𝔊_i`.
    pub generation: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub source: VertexId,
    pub target: VertexId,
    pub admissible: bool,
    /// `target ⊗ source`.
    pub word: Word,
}

#[derive(Debug, Clone)]
pub struct CpsGraph {
    ideal: MonomialIdeal,
    vertices: Vec<Vertex>,
    index: HashMap<Word, VertexId>,
    edges: Vec<Edge>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
}

impl CpsGraph {
    /// Runs the generation fixed point and builds the graph.
    pub fn build(ideal: MonomialIdeal) -> Self {
        let mut generation: BTreeMap<Word, usize> = BTreeMap::new();
        let mut successors: BTreeMap<Word, Vec<Word>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for x in 0..ideal.alphabet_size() as Letter {
            let w = Word::letter(x);
            generation.insert(w.clone(), 0);
            queue.push_back(w);
        }
        while let Some(m) = queue.pop_front() {
            let g = generation[&m];
            let ann = ideal.annihilators(m.letters());
            for a in &ann {
                if !generation.contains_key(a) {
                    generation.insert(a.clone(), g + 1);
                    queue.push_back(a.clone());
                }
            }
            successors.insert(m, ann);
        }

        // BTreeMap iteration is (degree, lex), so generators get ids 0..s.
        let vertices: Vec<Vertex> = generation
            .into_iter()
            .map(|(word, generation)| Vertex { word, generation })
            .collect();
        let index: HashMap<Word, VertexId> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.word.clone(), i))
            .collect();
        let mut edges = Vec::new();
        for (source, v) in vertices.iter().enumerate() {
            let mut targets: Vec<VertexId> = successors[&v.word].iter().map(|w| index[w]).collect();
            targets.sort_unstable();
            for target in targets {
                let word = vertices[target].word.concat(&v.word);
                edges.push(Edge {
                    source,
                    target,
                    admissible: false,
                    word,
                });
            }
        }
        let mut g = CpsGraph::from_parts(ideal, vertices, edges);
        g.mark_admissible_edges();
        g
    }

    pub fn from_presentation(p: Presentation) -> Self {
        CpsGraph::build(MonomialIdeal::new(p))
    }

    fn from_parts(ideal: MonomialIdeal, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        let index = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.word.clone(), i))
            .collect();
        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        let mut edge_index = HashMap::new();
        for (id, e) in edges.iter().enumerate() {
            out_edges[e.source].push(id);
            in_edges[e.target].push(id);
            edge_index.insert((e.source, e.target), id);
        }
        CpsGraph {
            ideal,
            vertices,
            index,
            edges,
            edge_index,
            out_edges,
            in_edges,
        }
    }

    /// Flags `m₁ → m₂` admissible iff `m₂ ⊗ m₁` is a defining relation.
    pub fn mark_admissible_edges(&mut self) {
        for e in &mut self.edges {
            e.admissible = self.ideal.is_minimal_generator(&e.word);
        }
    }

    /// A copy of the graph with one edge deleted. Only meaningful for
    /// mutation tests of the cross-validation machinery.
    pub fn with_edge_removed(&self, edge: EdgeId) -> CpsGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != edge)
            .map(|(_, e)| e.clone())
            .collect();
        CpsGraph::from_parts(self.ideal.clone(), self.vertices.clone(), edges)
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn presentation(&self) -> &Presentation {
        self.ideal.presentation()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn word(&self, v: VertexId) -> &Word {
        &self.vertices[v].word
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.vertices[v].word.degree()
    }

    pub fn vertex_id(&self, w: &Word) -> Option<VertexId> {
        self.index.get(w).copied()
    }

    pub fn vertex_by_letters(&self, letters: &[Letter]) -> Option<VertexId> {
        self.index.get(letters).copied()
    }

    /// Generators have ids `0..s`, in alphabet order.
    pub fn g0(&self) -> std::ops::Range<VertexId> {
        0..self.ideal.alphabet_size()
    }

    pub fn in_g0(&self, v: VertexId) -> bool {
        v < self.ideal.alphabet_size()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, source: VertexId, target: VertexId) -> Option<EdgeId> {
        self.edge_index.get(&(source, target)).copied()
    }

    pub fn has_edge(&self, source: VertexId, target: VertexId) -> bool {
        self.edge_index.contains_key(&(source, target))
    }

    pub fn is_admissible_edge(&self, source: VertexId, target: VertexId) -> bool {
        self.edge(source, target)
            .is_some_and(|e| self.edges[e].admissible)
    }

    /// Successor vertices in ascending id order.
    pub fn successors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.out_edges[v].iter().map(move |&e| self.edges[e].target)
    }

    pub fn predecessors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.in_edges[v].iter().map(move |&e| self.edges[e].source)
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_edges[v].len()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.in_edges[v].len()
    }

    pub fn display(&self, v: VertexId) -> String {
        self.presentation().display(self.word(v))
    }

    pub fn display_word(&self, w: &Word) -> String {
        self.presentation().display(w)
    }

    /// Graphviz rendering: solid arrows for admissible edges, dashed for the
    /// rest. Isolated vertices are kept.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cps {\n");
        for v in 0..self.vertex_count() {
            let _ = writeln!(out, "  {};", quote(&self.display(v)));
        }
        for e in &self.edges {
            let style = if e.admissible { "solid" } else { "dashed" };
            let _ = writeln!(
                out,
                "  {} -> {} [style={style}];",
                quote(&self.display(e.source)),
                quote(&self.display(e.target))
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_export(&self) -> GraphExport {
        GraphExport {
            vertices: (0..self.vertex_count())
                .map(|v| VertexExport {
                    word: self.display(v),
                    degree: self.degree(v),
                    in_g0: self.in_g0(v),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeExport {
                    source: self.display(e.source),
                    target: self.display(e.target),
                    word: self.display_word(&e.word),
                    admissible: e.admissible,
                })
                .collect(),
        }
    }
}

/// The quantities `𝓔`, `M`, `L` and the resulting search bound `N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphParams {
    pub edge_count: usize,
    pub max_edge_class: usize,
    pub max_leading_path: usize,
    /// Set when no anchored path qualified and `L` fell back to 1.
    pub leading_path_defaulted: bool,
    /// Smallest even integer `≥ 2𝓔(M−1)+L+1`.
    pub bound_n: usize,
    /// `2𝓔²+𝓔+1`, reported for comparison only.
    pub weak_bound: usize,
}

impl CpsGraph {
    pub fn params(&self) -> GraphParams {
        let e = self.edge_count();
        let mut classes: HashMap<&Word, usize> = HashMap::new();
        for edge in &self.edges {
            *classes.entry(&edge.word).or_default() += 1;
        }
        let m = classes.values().copied().max().unwrap_or(1);
        let (l, defaulted) = match self.max_leading_path() {
            Some(l) => (l, false),
            None => (1, true),
        };
        let raw = 2 * e * (m - 1) + l + 1;
        GraphParams {
            edge_count: e,
            max_edge_class: m,
            max_leading_path: l,
            leading_path_defaulted: defaulted,
            bound_n: raw + raw % 2,
            weak_bound: 2 * e * e + e + 1,
        }
    }

    /// Longest anchored simple path whose last edge is admissible and whose
    /// edges strictly between the first and the last are not.
    fn max_leading_path(&self) -> Option<usize> {
        fn dfs(g: &CpsGraph, v: VertexId, len: usize, on_path: &mut [bool], best: &mut Option<usize>) {
            for e in &g.out_edges[v] {
                let edge = &g.edges[*e];
                if on_path[edge.target] {
                    continue;
                }
                if edge.admissible {
                    *best = Some(best.map_or(len + 1, |b| b.max(len + 1)));
                    if len > 0 {
                        continue;
                    }
                }
                on_path[edge.target] = true;
                dfs(g, edge.target, len + 1, on_path, best);
                on_path[edge.target] = false;
            }
        }
        let mut best = None;
        let mut on_path = vec![false; self.vertex_count()];
        for x in self.g0() {
            on_path[x] = true;
            dfs(self, x, 0, &mut on_path, &mut best);
            on_path[x] = false;
        }
        best
    }

    /// Strongly connected components, circuits and the shared-vertex test.
    pub fn circuits_and_sccs(&self) -> CircuitReport {
        let comp = self.scc_ids();
        let count = comp.iter().copied().max().map_or(0, |c| c + 1);
        let mut sccs: Vec<Vec<VertexId>> = vec![Vec::new(); count];
        for (v, &c) in comp.iter().enumerate() {
            sccs[c].push(v);
        }
        sccs.sort();
        let mut internal = vec![0usize; sccs.len()];
        let mut index_of = vec![0usize; self.vertex_count()];
        for (i, scc) in sccs.iter().enumerate() {
            for &v in scc {
                index_of[v] = i;
            }
        }
        for e in &self.edges {
            if index_of[e.source] == index_of[e.target] {
                internal[index_of[e.source]] += 1;
            }
        }
        let mut shared_vertex = None;
        let mut cyclic = vec![false; sccs.len()];
        for (i, scc) in sccs.iter().enumerate() {
            cyclic[i] = internal[i] > 0;
            if internal[i] > scc.len() && shared_vertex.is_none() {
                shared_vertex = scc.iter().copied().find(|&v| {
                    self.successors(v).filter(|&t| index_of[t] == i).count() > 1
                        || self.predecessors(v).filter(|&s| index_of[s] == i).count() > 1
                });
            }
        }
        let circuits = if shared_vertex.is_some() {
            None
        } else {
            Some(
                sccs.iter()
                    .zip(&cyclic)
                    .filter(|(_, &c)| c)
                    .map(|(scc, _)| {
                        let start = scc[0];
                        let mut cycle = vec![start];
                        let mut v = start;
                        loop {
                            v = self
                                .successors(v)
                                .find(|&t| index_of[t] == index_of[start])
                                .expect("simple cycle");
                            if v == start {
                                break;
                            }
                            cycle.push(v);
                        }
                        cycle
                    })
                    .collect(),
            )
        };
        CircuitReport {
            scc_index: index_of,
            sccs,
            cyclic,
            circuits,
            shared_vertex,
        }
    }

    /// Tarjan's algorithm, iterative. Component ids are arbitrary.
    fn scc_ids(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comp = vec![usize::MAX; n];
        let mut next_index = 0;
        let mut next_comp = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(VertexId, usize)> = vec![(root, 0)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&e) = self.out_edges[v].get(*pos) {
                    *pos += 1;
                    let w = self.edges[e].target;
                    if index[w] == usize::MAX {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        low[parent] = low[parent].min(low[v]);
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().expect("tarjan stack");
                            on_stack[w] = false;
                            comp[w] = next_comp;
                            if w == v {
                                break;
                            }
                        }
                        next_comp += 1;
                    }
                }
            }
        }
        comp
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitReport {
    /// Vertex → index into `sccs`.
    pub scc_index: Vec<usize>,
    /// A partition of the vertices; each block sorted, blocks sorted.
    pub sccs: Vec<Vec<VertexId>>,
    /// Whether each block carries at least one internal edge.
    pub cyclic: Vec<bool>,
    /// One vertex cycle per cyclic block, or `None` when enumeration was
    /// refused because two circuits meet.
    pub circuits: Option<Vec<Vec<VertexId>>>,
    /// A vertex on two distinct circuits, if any.
    pub shared_vertex: Option<VertexId>,
}

impl CircuitReport {
    pub fn has_shared_vertex(&self) -> bool {
        self.shared_vertex.is_some()
    }

    pub fn has_circuit(&self) -> bool {
        self.cyclic.iter().any(|&c| c)
    }

    pub fn on_circuit(&self, v: VertexId) -> bool {
        self.cyclic[self.scc_index[v]]
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexExport {
    pub word: String,
    pub degree: usize,
    pub in_g0: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeExport {
    pub source: String,
    pub target: String,
    pub word: String,
    pub admissible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphExport {
    pub vertices: Vec<VertexExport>,
    pub edges: Vec<EdgeExport>,
}
