//! Walks in the CPS graph: equivalence, anchored representatives,
//! admissibility, decomposability and density.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CpsGraph, VertexId};
use crate::word::{Letter, Word};

/// Default cap on the number of walks [`enumerate_anchored`] will produce.
pub const DEFAULT_WALK_CAP: usize = 10_000_000;

/// A finite walk `v₀ → v₁ → ⋯ → v_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk {
    vertices: Vec<VertexId>,
}

impl Walk {
    pub fn new(g: &CpsGraph, vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidWalk("empty walk".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::InvalidWalk(format!("unknown vertex id {v}")));
        }
        for pair in vertices.windows(2) {
            if !g.has_edge(pair[0], pair[1]) {
                return Err(Error::InvalidWalk(format!(
                    "no edge {} -> {}",
                    g.display(pair[0]),
                    g.display(pair[1])
                )));
            }
        }
        Ok(Walk { vertices })
    }

    /// Builds a walk from display words, e.g. `["c", "ab", "cd"]`.
    pub fn from_display<S: AsRef<str>>(g: &CpsGraph, words: &[S]) -> Result<Self> {
        let alphabet = g.presentation().alphabet();
        let ids = words
            .iter()
            .map(|s| {
                let w = alphabet.parse_display(s.as_ref())?;
                g.vertex_id(&w)
                    .ok_or_else(|| Error::InvalidWalk(format!("{} is not a vertex", s.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        Walk::new(g, ids)
    }

    pub(crate) fn from_ids(vertices: Vec<VertexId>) -> Self {
        debug_assert!(!vertices.is_empty());
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexId> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        *self.vertices.last().expect("nonempty")
    }

    /// `w_i ⋯ w_n`.
    pub fn suffix_from(&self, i: usize) -> Walk {
        Walk::from_ids(self.vertices[i..].to_vec())
    }

    /// `w_0 ⋯ w_n`, the prefix of length `n`.
    pub fn prefix(&self, n: usize) -> Walk {
        Walk::from_ids(self.vertices[..=n].to_vec())
    }

    pub fn is_anchored(&self, g: &CpsGraph) -> bool {
        g.in_g0(self.first())
    }

    pub fn display(&self, g: &CpsGraph) -> Vec<String> {
        self.vertices.iter().map(|&v| g.display(v)).collect()
    }

    pub fn display_arrow(&self, g: &CpsGraph) -> String {
        self.display(g).join("→")
    }
}

/// An anchored walk, labelling the basis class `ε_w` of `Ext^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnchoredWalk {
    walk: Walk,
    internal_degree: usize,
}

impl AnchoredWalk {
    pub fn new(g: &CpsGraph, walk: Walk) -> Result<Self> {
        if !walk.is_anchored(g) {
            return Err(Error::InvalidWalk(format!(
                "{} does not start at a generator",
                walk.display_arrow(g)
            )));
        }
        Ok(AnchoredWalk::from_walk(g, walk))
    }

    pub(crate) fn from_walk(g: &CpsGraph, walk: Walk) -> Self {
        let internal_degree = walk.vertices.iter().map(|&v| g.degree(v)).sum();
        AnchoredWalk {
            walk,
            internal_degree,
        }
    }

    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    pub fn into_walk(self) -> Walk {
        self.walk
    }

    pub fn len(&self) -> usize {
        self.walk.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walk.is_empty()
    }

    /// `d_w = Σ deg w_i`.
    pub fn internal_degree(&self) -> usize {
        self.internal_degree
    }

    /// `length + 1`.
    pub fn cohomological_degree(&self) -> usize {
        self.walk.len() + 1
    }
}

/// `prefix · cycle^∞`. The prefix ends where the cycle starts; the cycle is
/// closed (first vertex = last vertex) and has at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventuallyPeriodicWalk {
    prefix: Vec<VertexId>,
    cycle: Vec<VertexId>,
}

impl EventuallyPeriodicWalk {
    pub fn new(g: &CpsGraph, prefix: Walk, cycle: Walk) -> Result<Self> {
        if cycle.is_empty() || cycle.first() != cycle.last() {
            return Err(Error::InvalidWalk("cycle must be closed and nonempty".into()));
        }
        if prefix.last() != cycle.first() {
            return Err(Error::InvalidWalk("prefix must end where the cycle starts".into()));
        }
        let _ = g;
        Ok(EventuallyPeriodicWalk {
            prefix: prefix.vertices,
            cycle: cycle.vertices,
        })
    }

    pub fn prefix(&self) -> Walk {
        Walk::from_ids(self.prefix.clone())
    }

    pub fn cycle(&self) -> Walk {
        Walk::from_ids(self.cycle.clone())
    }

    /// Index where the periodic part begins.
    pub fn start(&self) -> usize {
        self.prefix.len() - 1
    }

    pub fn period(&self) -> usize {
        self.cycle.len() - 1
    }

    /// The vertex at position `t`.
    pub fn at(&self, t: usize) -> VertexId {
        let a = self.start();
        if t < a {
            self.prefix[t]
        } else {
            self.cycle[(t - a) % self.period()]
        }
    }

    /// `t` itself before the periodic part, its phase in the cycle after.
    fn phase(&self, t: usize) -> usize {
        let a = self.start();
        if t < a {
            t
        } else {
            a + (t - a) % self.period()
        }
    }

    /// The finite prefix `w_0 ⋯ w_n`.
    pub fn truncate(&self, n: usize) -> Walk {
        Walk::from_ids((0..=n).map(|t| self.at(t)).collect())
    }

    pub fn is_anchored(&self, g: &CpsGraph) -> bool {
        g.in_g0(self.prefix[0])
    }

    pub fn display(&self, g: &CpsGraph) -> String {
        let prefix: Vec<String> = self.prefix.iter().map(|&v| g.display(v)).collect();
        let cycle: Vec<String> = self.cycle.iter().map(|&v| g.display(v)).collect();
        format!("{}({})^∞", prefix[..prefix.len() - 1].iter().map(|s| format!("{s}→")).collect::<String>(), cycle.join("→"))
    }
}

/// `p_n ⊗ ⋯ ⊗ p_0`.
pub fn word_of(g: &CpsGraph, w: &Walk) -> Word {
    let mut letters = Vec::new();
    for &v in w.vertices.iter().rev() {
        letters.extend_from_slice(g.word(v).letters());
    }
    Word::new(letters)
}

/// Equal length and equal word.
pub fn equivalent(g: &CpsGraph, p: &Walk, q: &Walk) -> bool {
    p.len() == q.len() && word_of(g, p) == word_of(g, q)
}

/// Reads `word` from the right. `start` must be a suffix of `word`; each
/// further vertex is the shortest suffix of the unread part annihilating the
/// previous vertex. Succeeds iff exactly `steps` more vertices consume the
/// word, each joined to its predecessor by an edge.
pub(crate) fn greedy_parse(
    g: &CpsGraph,
    word: &[Letter],
    start: VertexId,
    steps: usize,
) -> Option<Vec<VertexId>> {
    let ideal = g.ideal();
    let first = g.word(start).letters();
    if !word.ends_with(first) {
        return None;
    }
    let mut end = word.len() - first.len();
    let mut out = Vec::with_capacity(steps + 1);
    out.push(start);
    for _ in 0..steps {
        let unread = &word[..end];
        let prev = *out.last().expect("nonempty");
        let k = ideal.min_annihilating_suffix_len(unread, g.word(prev).letters())?;
        let s = &unread[end - k..];
        if ideal.contains_factor(s) {
            return None;
        }
        let v = g.vertex_by_letters(s)?;
        if !g.has_edge(prev, v) {
            return None;
        }
        out.push(v);
        end -= k;
    }
    (end == 0).then_some(out)
}

/// The anchored walk equivalent to `w`, if any.
pub fn canonical_anchored(g: &CpsGraph, w: &Walk) -> Option<AnchoredWalk> {
    let word = word_of(g, w);
    let q0 = *word.letters().last().expect("vertex words are nonempty") as VertexId;
    greedy_parse(g, word.letters(), q0, w.len())
        .map(|ids| AnchoredWalk::from_walk(g, Walk::from_ids(ids)))
}

pub fn is_admissible(g: &CpsGraph, w: &Walk) -> bool {
    canonical_anchored(g, w).is_some()
}

/// True iff some suffix `w_{i+1} ⋯ w_n`, `0 ≤ i < n`, is admissible.
pub fn is_decomposable(g: &CpsGraph, w: &AnchoredWalk) -> Result<bool> {
    let n = w.len();
    if n == 0 {
        return Err(Error::Precondition("decomposability needs length ≥ 1".into()));
    }
    Ok((1..=n).any(|i| is_admissible(g, &w.walk.suffix_from(i))))
}

/// All anchored walks of length `0..=max_len`, grouped by length. Fails once
/// more than `cap` walks would be produced.
pub fn enumerate_anchored(g: &CpsGraph, max_len: usize, cap: usize) -> Result<Vec<Vec<AnchoredWalk>>> {
    let mut out: Vec<Vec<AnchoredWalk>> = Vec::with_capacity(max_len + 1);
    let mut layer: Vec<Vec<VertexId>> = g.g0().map(|x| vec![x]).collect();
    let mut total = 0usize;
    for len in 0..=max_len {
        if len > 0 {
            layer = layer
                .iter()
                .flat_map(|w| {
                    g.successors(*w.last().expect("nonempty")).map(move |v| {
                        let mut next = w.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        total += layer.len();
        if total > cap {
            return Err(Error::WalkCapExceeded { cap });
        }
        out.push(
            layer
                .iter()
                .map(|ids| AnchoredWalk::from_walk(g, Walk::from_ids(ids.clone())))
                .collect(),
        );
    }
    Ok(out)
}

/// Anchored walk counts per length, without materializing the walks.
pub fn count_anchored(g: &CpsGraph, max_len: usize) -> Vec<u128> {
    let mut counts = vec![0u128; g.vertex_count()];
    for x in g.g0() {
        counts[x] = 1;
    }
    let mut out = Vec::with_capacity(max_len + 1);
    for len in 0..=max_len {
        if len > 0 {
            let mut next = vec![0u128; g.vertex_count()];
            for e in g.edges() {
                next[e.target] = next[e.target].saturating_add(counts[e.source]);
            }
            counts = next;
        }
        out.push(counts.iter().fold(0u128, |a, &b| a.saturating_add(b)));
    }
    out
}

/// Last vertex of the anchored walk equivalent to the admissible edge
/// `u → v`.
pub(crate) fn edge_partner_end(g: &CpsGraph, u: VertexId, v: VertexId) -> Result<VertexId> {
    let w = Walk::from_ids(vec![u, v]);
    canonical_anchored(g, &w)
        .map(|p| p.walk.last())
        .ok_or_else(|| Error::Invariant(format!("admissible edge {} has no anchored partner", w.display_arrow(g))))
}

/// Advances the anchored partner of an odd extension by two steps along
/// `v1 → v2`, given the partner's last vertex `end`. `None` means the longer
/// odd extension is not admissible, and then neither is any extension of it.
pub(crate) fn advance_partner(g: &CpsGraph, end: VertexId, v1: VertexId, v2: VertexId) -> Option<VertexId> {
    let mut word = g.word(v2).letters().to_vec();
    word.extend_from_slice(g.word(v1).letters());
    // seed the parse with `end` as the already-read right part
    word.extend_from_slice(g.word(end).letters());
    greedy_parse(g, &word, end, 2).map(|ids| ids[2])
}

/// Does the admissible edge `w_i → w_{i+1}` have an admissible even-length
/// extension inside `w`?
///
/// Let `P_k` be the anchored partner of the odd extension `w_i ⋯ w_{i+2k-1}`.
/// The even extension ending at `w_{i+2k}` is admissible iff
/// `last(P_k) → w_{i+2k}` is an edge, and `P_{k+1}` is determined by
/// `last(P_k)` and the next two vertices. The pair (`last(P_k)`, phase of
/// `i+2k-1` in the walk) therefore evolves deterministically over a finite
/// set, and a repeated pair means no later extension can succeed. The odd
/// extensions can also stop being admissible altogether, which ends the
/// search as well.
pub fn is_dense(g: &CpsGraph, w: &EventuallyPeriodicWalk, edge_index: usize) -> Result<bool> {
    let (u, v) = (w.at(edge_index), w.at(edge_index + 1));
    if !g.is_admissible_edge(u, v) {
        return Err(Error::NotAdmissible(format!("{} → {}", g.display(u), g.display(v))));
    }
    let mut end = edge_partner_end(g, u, v)?;
    let mut t = edge_index + 1;
    let mut seen = HashSet::new();
    loop {
        if !seen.insert((end, w.phase(t))) {
            return Ok(false);
        }
        let next = w.at(t + 1);
        if g.has_edge(end, next) {
            return Ok(true);
        }
        match advance_partner(g, end, next, w.at(t + 2)) {
            Some(e) => end = e,
            None => return Ok(false),
        }
        t += 2;
    }
}

/// Positions `k ≥ 1` of admissible edges `w_k → w_{k+1}` in the first
/// `start + period` steps of `w` (one full turn of the cycle).
fn admissible_positions(g: &CpsGraph, w: &EventuallyPeriodicWalk) -> Vec<usize> {
    (1..w.start().max(1) + w.period())
        .filter(|&k| g.is_admissible_edge(w.at(k), w.at(k + 1)))
        .collect()
}

/// The density condition on an anchored walk `w`: after deleting the first
/// edge, `w` has no dense edge and no two admissible edges of opposite
/// parity. Walks passing it are the obstructions to finite generation.
pub fn violates_density_condition(g: &CpsGraph, w: &EventuallyPeriodicWalk) -> Result<bool> {
    if !w.is_anchored(g) {
        return Err(Error::InvalidWalk("walk is not anchored".into()));
    }
    let positions = admissible_positions(g, w);
    let Some(&first) = positions.first() else {
        return Ok(true);
    };
    if positions.iter().any(|&k| k % 2 != first % 2) {
        return Ok(false);
    }
    // an admissible edge inside an odd cycle recurs with both parities
    if w.period() % 2 == 1 && positions.iter().any(|&k| k >= w.start()) {
        return Ok(false);
    }
    for &k in &positions {
        if is_dense(g, w, k)? {
            return Ok(false);
        }
    }
    Ok(true)
}
