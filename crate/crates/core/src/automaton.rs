//! A finite automaton recognizing indecomposable anchored walks.
//!
//! An anchored walk `w_0 ⋯ w_n` is decomposable iff some suffix
//! `w_k ⋯ w_n`, `k ≥ 1`, is admissible. Such a suffix is a single vertex of
//! `𝔊_0`, or starts with an admissible edge. For each admissible edge seen
//! so far the automaton keeps a tracker: the last vertex of the anchored
//! partner of the longest odd-length admissible extension, plus whether the
//! current offset is odd. At an even offset the extension is admissible iff
//! that last vertex has an edge to the current vertex, and then every longer
//! walk is decomposable too. At an odd offset the partner is re-parsed two
//! steps further; if that fails the edge can never again start an
//! admissible suffix and its tracker is dropped.
//!
//! States are `(current vertex, trackers)` for walks of length `≥ 1`. A
//! state accepts iff no tracker sits at an odd offset.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{CpsGraph, VertexId};
use crate::walks::{advance_partner, edge_partner_end, EventuallyPeriodicWalk, Walk};

/// Default ceiling on explored automaton states.
pub const DEFAULT_STATE_CAP: usize = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    pub vertex: VertexId,
    /// `(partner end, offset is odd)`, sorted.
    pub trackers: Vec<(VertexId, bool)>,
}

impl State {
    pub fn accepting(&self) -> bool {
        self.trackers.iter().all(|&(_, odd)| !odd)
    }
}

/// The successor of `s` along the edge `s.vertex → v`, or `None` when every
/// walk through that step is decomposable.
pub fn step(g: &CpsGraph, s: &State, v: VertexId) -> Result<Option<State>> {
    if g.in_g0(v) {
        return Ok(None);
    }
    let cur = s.vertex;
    let mut next: BTreeSet<(VertexId, bool)> = BTreeSet::new();
    for &(end, odd) in &s.trackers {
        if odd {
            if g.has_edge(end, v) {
                return Ok(None);
            }
            next.insert((end, false));
        } else if let Some(e) = advance_partner(g, end, cur, v) {
            next.insert((e, true));
        }
    }
    if g.is_admissible_edge(cur, v) {
        next.insert((edge_partner_end(g, cur, v)?, true));
    }
    Ok(Some(State {
        vertex: v,
        trackers: next.into_iter().collect(),
    }))
}

/// States of walks of length 1, with a generator they can start from.
fn initial_states(g: &CpsGraph) -> Vec<(State, VertexId)> {
    let mut seen = HashMap::new();
    for x in g.g0() {
        for v in g.successors(x) {
            if !g.in_g0(v) {
                seen.entry(v).or_insert(x);
            }
        }
    }
    let mut out: Vec<(State, VertexId)> = seen
        .into_iter()
        .map(|(v, x)| (State { vertex: v, trackers: Vec::new() }, x))
        .collect();
    out.sort();
    out
}

/// The reachable part of the automaton.
#[derive(Debug, Clone)]
pub struct Automaton {
    pub states: Vec<State>,
    /// Initial state ids with a generator to prepend.
    pub initial: Vec<(usize, VertexId)>,
    /// Outgoing transitions `(target state, vertex read)`.
    pub succ: Vec<Vec<(usize, VertexId)>>,
}

impl Automaton {
    pub fn build(g: &CpsGraph, cap: usize) -> Result<Self> {
        let mut states = Vec::new();
        let mut index: HashMap<State, usize> = HashMap::new();
        let mut succ: Vec<Vec<(usize, VertexId)>> = Vec::new();
        let mut queue = VecDeque::new();
        let mut initial = Vec::new();
        let mut intern = |s: State, states: &mut Vec<State>, succ: &mut Vec<Vec<(usize, VertexId)>>, queue: &mut VecDeque<usize>| -> Result<usize> {
            if let Some(&id) = index.get(&s) {
                return Ok(id);
            }
            if states.len() >= cap {
                return Err(Error::Precondition(format!(
                    "indecomposability automaton exceeds {cap} states"
                )));
            }
            let id = states.len();
            index.insert(s.clone(), id);
            states.push(s);
            succ.push(Vec::new());
            queue.push_back(id);
            Ok(id)
        };
        for (s, x) in initial_states(g) {
            let id = intern(s, &mut states, &mut succ, &mut queue)?;
            initial.push((id, x));
        }
        while let Some(id) = queue.pop_front() {
            let s = states[id].clone();
            for v in g.successors(s.vertex) {
                if let Some(t) = step(g, &s, v)? {
                    let tid = intern(t, &mut states, &mut succ, &mut queue)?;
                    succ[id].push((tid, v));
                }
            }
        }
        Ok(Automaton { states, initial, succ })
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// States from which an accepting state is reachable.
    pub fn co_reachable(&self) -> Vec<bool> {
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); self.len()];
        for (s, out) in self.succ.iter().enumerate() {
            for &(t, _) in out {
                pred[t].push(s);
            }
        }
        let mut live: Vec<bool> = self.states.iter().map(State::accepting).collect();
        let mut stack: Vec<usize> = (0..self.len()).filter(|&s| live[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &pred[s] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Tarjan over the subgraph induced by `keep`; returns component ids
    /// and whether each component carries an internal edge.
    fn components(&self, keep: &[bool]) -> (Vec<usize>, Vec<bool>) {
        let n = self.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut comp = vec![usize::MAX; n];
        let mut next_index = 0;
        let mut count = 0;
        for root in (0..n).filter(|&r| keep[r]) {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call = vec![(root, 0usize)];
            index[root] = next_index;
            low[root] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&(w, _)) = self.succ[v].get(*pos) {
                    *pos += 1;
                    if !keep[w] {
                        continue;
                    }
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
                            comp[w] = count;
                            if w == v {
                                break;
                            }
                        }
                        count += 1;
                    }
                }
            }
        }
        let mut cyclic = vec![false; count];
        for s in (0..n).filter(|&s| keep[s]) {
            for &(t, _) in &self.succ[s] {
                if keep[t] && comp[s] == comp[t] {
                    cyclic[comp[s]] = true;
                }
            }
        }
        (comp, cyclic)
    }

    /// Exact answer: are there finitely many indecomposable anchored walks?
    pub fn analyze(&self, g: &CpsGraph) -> Recognition {
        let live = self.co_reachable();
        let (comp, cyclic) = self.components(&live);
        let is_cyclic = |s: usize| live[s] && cyclic[comp[s]];
        if (0..self.len()).any(is_cyclic) {
            let periodic = self.accepting_lasso(g, &live, &comp, &cyclic);
            let family = if periodic.is_none() {
                Some(self.family(g, &live, &comp, &cyclic))
            } else {
                None
            };
            return Recognition::Infinite { periodic, family };
        }
        // live part is a DAG: longest path from an initial state to an
        // accepting state
        let mut order = Vec::new();
        let mut mark = vec![0u8; self.len()];
        for s in (0..self.len()).filter(|&s| live[s]) {
            if mark[s] != 0 {
                continue;
            }
            let mut call = vec![(s, 0usize)];
            mark[s] = 1;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if let Some(&(w, _)) = self.succ[v].get(*pos) {
                    *pos += 1;
                    if live[w] && mark[w] == 0 {
                        mark[w] = 1;
                        call.push((w, 0));
                    }
                } else {
                    mark[v] = 2;
                    order.push(v);
                    call.pop();
                }
            }
        }
        // `order` is a reverse topological order; longest accepting tail
        let mut tail: Vec<Option<usize>> = vec![None; self.len()];
        for &s in &order {
            let mut best = self.states[s].accepting().then_some(0);
            for &(t, _) in &self.succ[s] {
                if let Some(d) = tail[t] {
                    best = Some(best.map_or(d + 1, |b: usize| b.max(d + 1)));
                }
            }
            tail[s] = best;
        }
        let longest = self
            .initial
            .iter()
            .filter_map(|&(s, _)| tail[s].map(|d| d + 1))
            .max()
            .unwrap_or(0);
        Recognition::Finite {
            max_indecomposable_length: longest,
        }
    }

    fn path_from_initial(&self, target: usize, keep: &[bool]) -> Vec<VertexId> {
        let mut parent: HashMap<usize, (usize, VertexId)> = HashMap::new();
        let mut queue = VecDeque::new();
        let mut start_of: HashMap<usize, VertexId> = HashMap::new();
        for &(s, x) in &self.initial {
            if keep[s] && !start_of.contains_key(&s) {
                start_of.insert(s, x);
                queue.push_back(s);
            }
        }
        let mut seen: BTreeSet<usize> = start_of.keys().copied().collect();
        while let Some(s) = queue.pop_front() {
            if s == target {
                break;
            }
            for &(t, v) in &self.succ[s] {
                if keep[t] && seen.insert(t) {
                    parent.insert(t, (s, v));
                    queue.push_back(t);
                }
            }
        }
        let mut rev = vec![self.states[target].vertex];
        let mut s = target;
        while let Some(&(p, _)) = parent.get(&s) {
            rev.push(self.states[p].vertex);
            s = p;
        }
        rev.push(start_of[&s]);
        rev.reverse();
        rev
    }

    /// Shortest cycle through `s` inside its component, as vertex reads.
    fn cycle_through(&self, s: usize, comp: &[usize], keep: &[bool]) -> Vec<VertexId> {
        let mut parent: HashMap<usize, (usize, VertexId)> = HashMap::new();
        let mut queue = VecDeque::from([s]);
        let mut seen = BTreeSet::from([s]);
        let mut closing = None;
        'bfs: while let Some(u) = queue.pop_front() {
            for &(t, v) in &self.succ[u] {
                if !keep[t] || comp[t] != comp[s] {
                    continue;
                }
                if t == s {
                    closing = Some((u, v));
                    break 'bfs;
                }
                if seen.insert(t) {
                    parent.insert(t, (u, v));
                    queue.push_back(t);
                }
            }
        }
        let (mut u, v) = closing.expect("state lies on a cycle");
        let mut rev = vec![v];
        while u != s {
            let (p, pv) = parent[&u];
            rev.push(pv);
            u = p;
        }
        rev.push(self.states[s].vertex);
        rev.reverse();
        rev
    }

    fn accepting_lasso(&self, g: &CpsGraph, live: &[bool], comp: &[usize], cyclic: &[bool]) -> Option<EventuallyPeriodicWalk> {
        let s = (0..self.len()).find(|&s| live[s] && cyclic[comp[s]] && self.states[s].accepting())?;
        let prefix = self.path_from_initial(s, live);
        let cycle = self.cycle_through(s, comp, live);
        EventuallyPeriodicWalk::new(g, Walk::from_ids(prefix), Walk::from_ids(cycle)).ok()
    }

    fn family(&self, g: &CpsGraph, live: &[bool], comp: &[usize], cyclic: &[bool]) -> Family {
        let s = (0..self.len())
            .find(|&s| live[s] && cyclic[comp[s]])
            .expect("a cyclic live state");
        let prefix = self.path_from_initial(s, live);
        let cycle = self.cycle_through(s, comp, live);
        // walk on to the nearest accepting state
        let mut parent: HashMap<usize, (usize, VertexId)> = HashMap::new();
        let mut queue = VecDeque::from([s]);
        let mut seen = BTreeSet::from([s]);
        let mut found = s;
        while let Some(u) = queue.pop_front() {
            if self.states[u].accepting() {
                found = u;
                break;
            }
            for &(t, v) in &self.succ[u] {
                if live[t] && seen.insert(t) {
                    parent.insert(t, (u, v));
                    queue.push_back(t);
                }
            }
        }
        let mut tail = Vec::new();
        let mut u = found;
        while let Some(&(p, v)) = parent.get(&u) {
            tail.push(v);
            u = p;
        }
        tail.reverse();
        let _ = g;
        Family { prefix, cycle, tail }
    }

    /// Does some anchored walk of exactly this length avoid decomposition?
    /// Returns one such walk.
    pub fn indecomposable_of_length(&self, n: usize) -> Option<Vec<VertexId>> {
        if n == 0 {
            return None;
        }
        // layered search keeping one parent per state
        let mut layers: Vec<HashMap<usize, Option<(usize, VertexId)>>> = Vec::with_capacity(n);
        let mut first = HashMap::new();
        for &(s, _) in &self.initial {
            first.entry(s).or_insert(None);
        }
        layers.push(first);
        for _ in 1..n {
            let prev = layers.last().expect("nonempty");
            let mut next = HashMap::new();
            let mut keys: Vec<usize> = prev.keys().copied().collect();
            keys.sort_unstable();
            for s in keys {
                for &(t, v) in &self.succ[s] {
                    next.entry(t).or_insert(Some((s, v)));
                }
            }
            layers.push(next);
        }
        let last = layers.last().expect("nonempty");
        let mut ends: Vec<usize> = last.keys().copied().filter(|&s| self.states[s].accepting()).collect();
        ends.sort_unstable();
        let end = *ends.first()?;
        let mut rev = Vec::with_capacity(n + 1);
        let mut s = end;
        for layer in layers.iter().rev() {
            rev.push(self.states[s].vertex);
            match layer[&s] {
                Some((p, _)) => s = p,
                None => break,
            }
        }
        let x = self
            .initial
            .iter()
            .find(|&&(i, _)| i == s)
            .map(|&(_, x)| x)
            .expect("initial state");
        rev.push(x);
        rev.reverse();
        Some(rev)
    }
}

/// `prefix · cycle^k · tail` is indecomposable for infinitely many `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub prefix: Vec<VertexId>,
    pub cycle: Vec<VertexId>,
    pub tail: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Recognition {
    Finite {
        /// Longest indecomposable anchored walk of length `≥ 1` (0 if none).
        max_indecomposable_length: usize,
    },
    Infinite {
        /// An anchored walk with infinitely many indecomposable prefixes.
        periodic: Option<EventuallyPeriodicWalk>,
        /// Used only when no single walk has that property.
        family: Option<Family>,
    },
}

/// Runs the automaton along an eventually periodic anchored walk. True iff
/// infinitely many of its prefixes are indecomposable.
pub fn indecomposable_prefixes_recur(g: &CpsGraph, w: &EventuallyPeriodicWalk) -> Result<bool> {
    if !w.is_anchored(g) {
        return Err(Error::InvalidWalk("walk is not anchored".into()));
    }
    let v1 = w.at(1);
    if g.in_g0(v1) {
        return Ok(false);
    }
    let mut state = State { vertex: v1, trackers: Vec::new() };
    let mut t = 1;
    let mut seen: HashMap<(State, usize), usize> = HashMap::new();
    let mut accepted_at = Vec::new();
    let a = w.start();
    let m = w.period();
    loop {
        let phase = if t < a { t } else { a + (t - a) % m };
        if let Some(&first) = seen.get(&(state.clone(), phase)) {
            return Ok(accepted_at.iter().any(|&s| s >= first));
        }
        seen.insert((state.clone(), phase), t);
        if state.accepting() {
            accepted_at.push(t);
        }
        match step(g, &state, w.at(t + 1))? {
            Some(s) => state = s,
            None => return Ok(false),
        }
        t += 1;
    }
}
