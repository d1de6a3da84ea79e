//! The Yoneda algebra `E(A) = Ext_A(k, k)` in the basis of anchored walks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{CpsGraph, VertexId};
use crate::poly::{det_bareiss, Poly, RationalFunction};
use crate::walks::{canonical_anchored, enumerate_anchored, greedy_parse, is_decomposable, word_of, AnchoredWalk, Walk};

/// The basis class `ε_w` of an anchored walk `w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtClass {
    walk: AnchoredWalk,
}

impl ExtClass {
    pub fn new(walk: AnchoredWalk) -> Self {
        ExtClass { walk }
    }

    /// Resolves any admissible walk to its anchored representative.
    pub fn from_walk(g: &CpsGraph, w: &Walk) -> Result<Self> {
        canonical_anchored(g, w)
            .map(ExtClass::new)
            .ok_or_else(|| Error::NotAdmissible(w.display_arrow(g)))
    }

    pub fn walk(&self) -> &AnchoredWalk {
        &self.walk
    }

    pub fn cohomological_degree(&self) -> usize {
        self.walk.cohomological_degree()
    }

    pub fn internal_degree(&self) -> usize {
        self.walk.internal_degree()
    }

    pub fn to_export(&self, g: &CpsGraph) -> ClassExport {
        ClassExport {
            walk: self.walk.walk().display(g),
            i: self.cohomological_degree(),
            j: self.internal_degree(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassExport {
    pub walk: Vec<String>,
    pub i: usize,
    pub j: usize,
}

/// `ε_p ⋆ ε_q`, or `None` for zero.
///
/// The product is `ε_{q·p′}` where `p′` is the walk with the same word and
/// length as `p` that starts in `𝔄_{q_n}`. At most one element of `𝔄_{q_n}`
/// is a suffix of the word of `p`, and the rest of `p′` is then forced.
pub fn yoneda_mul(g: &CpsGraph, p: &ExtClass, q: &ExtClass) -> Result<Option<ExtClass>> {
    let p_walk = p.walk.walk();
    let q_walk = q.walk.walk();
    let word = word_of(g, p_walk);
    let seeds: Vec<VertexId> = g
        .successors(q_walk.last())
        .filter(|&a| word.has_suffix(g.word(a).letters()))
        .collect();
    if seeds.len() > 1 {
        return Err(Error::Invariant(format!(
            "several annihilators of {} are suffixes of {}",
            g.display(q_walk.last()),
            g.display_word(&word)
        )));
    }
    let Some(&seed) = seeds.first() else {
        return Ok(None);
    };
    let Some(tail) = greedy_parse(g, word.letters(), seed, p_walk.len()) else {
        return Ok(None);
    };
    let mut ids = q_walk.vertices().to_vec();
    ids.extend(tail);
    let product = AnchoredWalk::new(g, Walk::new(g, ids)?)?;
    if word_of(g, product.walk()) != word.concat(&word_of(g, q_walk)) {
        return Err(Error::Invariant("product word differs from the concatenation".into()));
    }
    Ok(Some(ExtClass::new(product)))
}

/// Indecomposable classes of cohomological degree `≤ max_cohom_degree`.
pub fn generators_up_to(g: &CpsGraph, max_cohom_degree: usize, cap: usize) -> Result<Vec<ExtClass>> {
    if max_cohom_degree == 0 {
        return Err(Error::Precondition("max_cohom_degree must be at least 1".into()));
    }
    let layers = enumerate_anchored(g, max_cohom_degree - 1, cap)?;
    let mut out = Vec::new();
    for w in layers.into_iter().flatten() {
        if w.is_empty() || !is_decomposable(g, &w)? {
            out.push(ExtClass::new(w));
        }
    }
    Ok(out)
}

/// `dim Ext^{i,j}` for `1 ≤ i ≤ max_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedTable {
    pub entries: BTreeMap<(usize, usize), u128>,
    pub max_i: usize,
}

impl BigradedTable {
    pub fn get(&self, i: usize, j: usize) -> u128 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `Σ_j dim Ext^{i,j}`.
    pub fn total(&self, i: usize) -> u128 {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(_, &d)| d).sum()
    }

    pub fn to_export(&self) -> Vec<TableEntry> {
        self.entries
            .iter()
            .map(|(&(i, j), &dim)| TableEntry { i, j, dim })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TableEntry {
    pub i: usize,
    pub j: usize,
    pub dim: u128,
}

/// Anchored walks counted by length and internal degree.
pub fn poincare_table(g: &CpsGraph, max_i: usize) -> BigradedTable {
    let mut entries = BTreeMap::new();
    // state: (vertex, internal degree) -> count
    let mut layer: BTreeMap<(VertexId, usize), u128> = g.g0().map(|x| ((x, 1), 1)).collect();
    for i in 1..=max_i {
        if i > 1 {
            let mut next = BTreeMap::new();
            for (&(v, d), &c) in &layer {
                for t in g.successors(v) {
                    let slot: &mut u128 = next.entry((t, d + g.degree(t))).or_default();
                    *slot = slot.saturating_add(c);
                }
            }
            layer = next;
        }
        for (&(_, d), &c) in &layer {
            let slot: &mut u128 = entries.entry((i, d)).or_default();
            *slot = slot.saturating_add(c);
        }
    }
    BigradedTable { entries, max_i }
}

/// `Σ_i dim E^i y^i` as an exact rational function.
///
/// With `T` the adjacency matrix and `u` the indicator of `𝔊_0`, the series
/// is `1 + y·uᵀ(I − yT)⁻¹𝟙`. The denominator `det(I − yT)` factors over the
/// strongly connected components, each block handled by fraction-free
/// elimination; the numerator is then read off the exact walk counts.
pub fn hilbert_series(g: &CpsGraph) -> RationalFunction {
    let report = g.circuits_and_sccs();
    let mut den = Poly::one();
    for (scc, &cyclic) in report.sccs.iter().zip(&report.cyclic) {
        if !cyclic {
            continue;
        }
        let pos: BTreeMap<VertexId, usize> = scc.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = scc.len();
        let mut m = vec![vec![Poly::zero(); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Poly::one();
        }
        for &v in scc {
            for t in g.successors(v) {
                if let Some(&j) = pos.get(&t) {
                    let i = pos[&v];
                    m[i][j] = m[i][j].sub(&Poly::from_i64(&[0, 1]));
                }
            }
        }
        den = den.mul(&det_bareiss(m));
    }
    // H·den is a polynomial of degree at most |V|.
    let bound = g.vertex_count() + 1;
    let series = series_coefficients(g, bound + den.coeffs().len());
    let h = Poly::new(series);
    let full = h.mul(&den);
    let num = full.truncate(bound + 1);
    debug_assert!(
        (bound + 1..h.coeffs().len()).all(|k| full.coeff(k) == BigInt::from(0)),
        "numerator degree bound"
    );
    RationalFunction::new(num, den)
}

/// `dim E^i` for `0 ≤ i ≤ order`, exactly.
pub fn series_coefficients(g: &CpsGraph, order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(1)];
    let mut counts: Vec<BigInt> = (0..g.vertex_count())
        .map(|v| BigInt::from(u8::from(g.in_g0(v))))
        .collect();
    for i in 1..=order {
        if i > 1 {
            let mut next = vec![BigInt::from(0); g.vertex_count()];
            for e in g.edges() {
                next[e.target] += &counts[e.source];
            }
            counts = next;
        }
        out.push(counts.iter().sum());
    }
    out
}
