//! Betti numbers of `k` over a monomial algebra by linear algebra over
//! `GF(p)`, independent of the graph.
//!
//! A minimal free resolution of `k` is built one word at a time. Only single
//! letters and words whose every pair of adjacent letters lies inside one
//! occurrence of a relation ("linked" words) can carry generators: at any
//! other word the normalized bar complex, which splits by word, is
//! contractible by cutting at the uncovered gap.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::ext::poincare_table;
use crate::graph::CpsGraph;
use crate::ideal::MonomialIdeal;
use crate::word::{Letter, Word};

pub const DEFAULT_MAX_I: usize = 8;
pub const DEFAULT_MAX_J: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedVectorBasis {
    pub degree: usize,
    pub basis: Vec<Word>,
}

/// All words of length `j` avoiding the relations, in lexicographic order.
pub fn algebra_basis(ideal: &MonomialIdeal, j: usize) -> GradedVectorBasis {
    let n = ideal.alphabet_size() as Letter;
    let mut layer = vec![Vec::new()];
    for _ in 0..j {
        let mut next = Vec::new();
        for w in &layer {
            for x in 0..n {
                let mut v: Vec<Letter> = w.clone();
                v.push(x);
                if !ends_with_relation(ideal, &v) {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    GradedVectorBasis {
        degree: j,
        basis: layer.into_iter().map(Word::new).collect(),
    }
}

fn ends_with_relation(ideal: &MonomialIdeal, v: &[Letter]) -> bool {
    let d = ideal.max_relation_degree().min(v.len());
    (1..=d).any(|l| ideal.is_relation(&v[v.len() - l..]))
}

/// `dim A_j` for `j ≤ max_j`, counted without listing the words.
pub fn algebra_dimensions(ideal: &MonomialIdeal, max_j: usize) -> Vec<u128> {
    let n = ideal.alphabet_size() as Letter;
    let keep = ideal.max_relation_degree().saturating_sub(1);
    let mut out = vec![1u128];
    let mut layer: HashMap<Vec<Letter>, u128> = HashMap::from([(Vec::new(), 1)]);
    for _ in 0..max_j {
        let mut next: HashMap<Vec<Letter>, u128> = HashMap::new();
        for (tail, &c) in &layer {
            for x in 0..n {
                let mut v = tail.clone();
                v.push(x);
                if ends_with_relation(ideal, &v) {
                    continue;
                }
                let cut = v.len().saturating_sub(keep);
                *next.entry(v[cut..].to_vec()).or_default() += c;
            }
        }
        out.push(next.values().sum());
        layer = next;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub field_char: u32,
    /// `(i, j) → dim Ext^{i,j}`, zero entries omitted.
    pub entries: BTreeMap<(usize, usize), u64>,
    pub max_i: usize,
    pub max_j: usize,
    /// `Σ_{i ≤ max_i} (−1)^i dim Tor_{i,j}` for `j ≤ max_j`; the full Euler
    /// characteristic once `max_i ≥ max_j`.
    pub euler: Vec<i128>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..(i + 1, 0)).map(|(_, &d)| d).sum()
    }

    /// Rows `i`, columns `j`, Macaulay-style.
    pub fn to_grid(&self) -> String {
        let mut s = format!("{:>4}", "i\\j");
        for j in 0..=self.max_j {
            s.push_str(&format!("{j:>5}"));
        }
        s.push('\n');
        for i in 0..=self.max_i {
            s.push_str(&format!("{i:>4}"));
            for j in 0..=self.max_j {
                match self.get(i, j) {
                    0 => s.push_str(&format!("{:>5}", ".")),
                    d => s.push_str(&format!("{d:>5}")),
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn to_export(&self) -> Vec<(usize, usize, u64)> {
        self.entries.iter().map(|(&(i, j), &d)| (i, j, d)).collect()
    }
}

/// Words of length `2..=max_j` in which every pair of adjacent letters lies
/// inside one occurrence of a relation.
pub fn linked_words(ideal: &MonomialIdeal, max_j: usize) -> Vec<Vec<Letter>> {
    let n = ideal.alphabet_size() as Letter;
    let rels: Vec<&[Letter]> = ideal.presentation().relations().iter().map(|r| r.letters()).collect();
    let prefixes: HashSet<&[Letter]> = rels.iter().flat_map(|r| (1..r.len()).map(move |l| &r[..l])).collect();
    let mut out = Vec::new();
    let mut w = Vec::new();
    // covered[k]: gap between positions k and k+1 lies in an occurrence
    let mut covered = Vec::new();
    extend(&mut w, &mut covered, n, &rels, &prefixes, max_j, &mut out);
    out
}

fn extend(
    w: &mut Vec<Letter>,
    covered: &mut Vec<bool>,
    n: Letter,
    rels: &[&[Letter]],
    prefixes: &HashSet<&[Letter]>,
    max_j: usize,
    out: &mut Vec<Vec<Letter>>,
) {
    if w.len() == max_j {
        return;
    }
    for x in 0..n {
        w.push(x);
        if w.len() > 1 {
            covered.push(false);
        }
        let len = w.len();
        let mut marked = Vec::new();
        for r in rels {
            let l = r.len();
            if l <= len && &w[len - l..] == *r {
                for k in len - l..len - 1 {
                    if !covered[k] {
                        covered[k] = true;
                        marked.push(k);
                    }
                }
            }
        }
        // the first open gap must lie in a relation occurrence still being
        // read, i.e. one starting at or before it whose letters so far match
        let alive = match covered.iter().position(|&c| !c) {
            None => true,
            Some(k) => (0..=k).any(|s| prefixes.contains(&w[s..])),
        };
        if alive {
            if len >= 2 && covered.iter().all(|&c| c) {
                out.push(w.clone());
            }
            extend(w, covered, n, rels, prefixes, max_j, out);
        }
        for k in marked {
            covered[k] = false;
        }
        if len > 1 {
            covered.pop();
        }
        w.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut e, mut b) = (1u64, p - 2, a % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Dense row reduction over `GF(p)`: rows kept in echelon form with
/// normalized pivots.
struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    fn reduce(&self, v: &mut [u64]) {
        for (col, row) in &self.rows {
            let f = v[*col];
            if f != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + self.p - f * r % self.p) % self.p;
                }
            }
        }
    }

    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(col) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[col], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[col];
            if f != 0 {
                for (x, &r) in row.iter_mut().zip(&v) {
                    *x = (*x + self.p - f * r % self.p) % self.p;
                }
            }
        }
        self.rows.push((col, v));
        true
    }
}

/// Kernel of the map sending basis vector `r` to `images[r] ∈ GF(p)^m`.
fn kernel(images: &[Vec<u64>], m: usize, p: u64) -> Vec<Vec<u64>> {
    let n = images.len();
    let mut rows: Vec<Vec<u64>> = images
        .iter()
        .enumerate()
        .map(|(r, img)| {
            let mut row = img.clone();
            row.resize(m, 0);
            row.extend((0..n).map(|c| u64::from(c == r)));
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..m {
        let Some(piv) = (rank..n).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rows.into_iter().skip(rank).map(|row| row[m..].to_vec()).collect()
}

/// A generator of the `i`-th free module, of internal degree `deg`, with its
/// image `Σ c · h · (deg / deg h)` over generators `h` one step down.
#[derive(Debug, Clone)]
struct Generator {
    deg: Vec<Letter>,
    image: Vec<(usize, u64)>,
}

struct Resolution<'a> {
    ideal: &'a MonomialIdeal,
    p: u64,
    gens: Vec<Vec<Generator>>,
    by_degree: Vec<HashMap<Vec<Letter>, Vec<usize>>>,
}

impl Resolution<'_> {
    fn count(&self, i: usize) -> usize {
        self.gens.get(i).map_or(0, Vec::len)
    }

    fn add(&mut self, i: usize, g: Generator) {
        while self.gens.len() <= i {
            self.gens.push(Vec::new());
            self.by_degree.push(HashMap::new());
        }
        self.by_degree[i].entry(g.deg.clone()).or_default().push(self.gens[i].len());
        self.gens[i].push(g);
    }

    /// Basis of the `i`-th free module in degree `w`: pairs (generator,
    /// length of its degree), the cofactor being the rest of `w`.
    fn basis(&self, i: usize, w: &[Letter]) -> Vec<(usize, usize)> {
        let Some(map) = self.by_degree.get(i) else { return Vec::new() };
        let mut out = Vec::new();
        for l in 0..=w.len() {
            if let Some(ids) = map.get(&w[..l]) {
                if !self.ideal.contains_factor(&w[l..]) {
                    out.extend(ids.iter().map(|&g| (g, l)));
                }
            }
        }
        out
    }

    /// Matrix of `d_i` in degree `w`, one row per source basis element.
    fn differential(&self, i: usize, src: &[(usize, usize)], dst: &[(usize, usize)]) -> Vec<Vec<u64>> {
        let pos: HashMap<(usize, usize), usize> = dst.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        src.iter()
            .map(|&(g, _)| {
                let mut row = vec![0u64; dst.len()];
                for &(h, c) in &self.gens[i][g].image {
                    let l = self.gens[i - 1][h].deg.len();
                    if let Some(&k) = pos.get(&(h, l)) {
                        row[k] = (row[k] + c) % self.p;
                    }
                }
                row
            })
            .collect()
    }

    /// New generators in degree `w` for every homological degree.
    fn step(&self, w: &[Letter], max_i: usize, fresh: &mut Vec<(usize, Generator)>) {
        // snapshot of generators created at `w` by lower levels
        let mut local: Vec<Vec<Generator>> = Vec::new();
        let basis_with = |res: &Self, local: &[Vec<Generator>], i: usize| -> Vec<(usize, usize)> {
            let mut b = res.basis(i, w);
            let base = res.count(i);
            if let Some(extra) = local.get(i) {
                b.extend((0..extra.len()).map(|k| (base + k, w.len())));
            }
            b
        };
        for i in 1..=max_i.min(w.len()) {
            // kernel of d_{i-1} in degree w
            let src = basis_with(self, &local, i - 1);
            let kern = if i == 1 {
                (0..src.len())
                    .map(|r| (0..src.len()).map(|c| u64::from(c == r)).collect())
                    .collect()
            } else {
                let dst = basis_with(self, &local, i - 2);
                let images: Vec<Vec<u64>> = src
                    .iter()
                    .map(|&(g, _)| {
                        let gen = if g < self.count(i - 1) {
                            &self.gens[i - 1][g]
                        } else {
                            &local[i - 1][g - self.count(i - 1)]
                        };
                        let mut row = vec![0u64; dst.len()];
                        for &(h, c) in &gen.image {
                            let lh = if h < self.count(i - 2) { self.gens[i - 2][h].deg.len() } else { w.len() };
                            if let Some(k) = dst.iter().position(|&b| b == (h, lh)) {
                                row[k] = (row[k] + c) % self.p;
                            }
                        }
                        row
                    })
                    .collect();
                kernel(&images, dst.len(), self.p)
            };
            // image of d_i from generators in proper prefixes of w
            let top = self.basis(i, w);
            let mut ech = Echelon::new(self.p);
            for row in self.differential(i, &top, &src) {
                ech.insert(row);
            }
            let mut new = Vec::new();
            for v in kern {
                if ech.insert(v.clone()) {
                    // minimality: no unit coefficient on a generator of degree w
                    assert!(
                        src.iter().zip(&v).all(|(&(_, l), &c)| c == 0 || l < w.len()),
                        "non-minimal syzygy"
                    );
                    let image = src
                        .iter()
                        .zip(&v)
                        .filter(|&(_, &c)| c != 0)
                        .map(|(&(g, _), &c)| (g, c))
                        .collect();
                    new.push(Generator { deg: w.to_vec(), image });
                }
            }
            if local.len() <= i {
                local.resize(i + 1, Vec::new());
            }
            local[i] = new;
        }
        for (i, gs) in local.into_iter().enumerate() {
            fresh.extend(gs.into_iter().map(|g| (i, g)));
        }
    }
}

/// `dim Ext^{i,j}(k,k)` over `GF(p)` for `i ≤ max_i`, `j ≤ max_j`, read off
/// a minimal free resolution of `k` built word by word.
///
/// The algebra is graded by words (a product of normal words is their
/// concatenation or zero), so every free module, kernel and image splits by
/// word and each piece is a small matrix. Generators only occur in degrees
/// that are letters or linked words.
pub fn minimal_resolution(ideal: &MonomialIdeal, field_char: u32, max_i: usize, max_j: usize) -> BettiTable {
    resolve(ideal, field_char, max_i, max_j)
}

/// Like [`minimal_resolution`] but resolving through every homological
/// degree `≤ max_j`, which the Euler characteristic needs.
pub fn full_resolution(ideal: &MonomialIdeal, field_char: u32, max_j: usize) -> BettiTable {
    resolve(ideal, field_char, max_j, max_j)
}

fn resolve(ideal: &MonomialIdeal, field_char: u32, max_i: usize, max_j: usize) -> BettiTable {
    let p = u64::from(field_char);
    let mut res = Resolution { ideal, p, gens: Vec::new(), by_degree: Vec::new() };
    res.add(0, Generator { deg: Vec::new(), image: Vec::new() });
    let mut words: Vec<Vec<Letter>> = (0..ideal.alphabet_size() as Letter).map(|x| vec![x]).collect();
    if max_j >= 1 {
        words.extend(linked_words(ideal, max_j));
    } else {
        words.clear();
    }
    let mut by_len: BTreeMap<usize, Vec<Vec<Letter>>> = BTreeMap::new();
    for w in words {
        by_len.entry(w.len()).or_default().push(w);
    }
    for (_, layer) in by_len {
        let fresh: Vec<Vec<(usize, Generator)>> = layer
            .par_iter()
            .map(|w| {
                let mut f = Vec::new();
                res.step(w, max_i, &mut f);
                f
            })
            .collect();
        for (i, g) in fresh.into_iter().flatten() {
            res.add(i, g);
        }
    }
    let mut entries = BTreeMap::new();
    let mut euler = vec![0i128; max_j + 1];
    for (i, gs) in res.gens.iter().enumerate() {
        for g in gs {
            let j = g.deg.len();
            *entries.entry((i, j)).or_insert(0u64) += 1;
            euler[j] += if i % 2 == 0 { 1 } else { -1 };
        }
    }
    BettiTable { field_char, entries, max_i, max_j, euler }
}

/// Coefficients of `1 / H_A(t)` up to `t^max_j`.
pub fn inverse_hilbert(ideal: &MonomialIdeal, max_j: usize) -> Vec<i128> {
    let h: Vec<i128> = algebra_dimensions(ideal, max_j).into_iter().map(|c| c as i128).collect();
    let mut inv = vec![0i128; max_j + 1];
    inv[0] = 1;
    for j in 1..=max_j {
        inv[j] = -(1..=j).map(|k| h[k] * inv[j - k]).sum::<i128>();
    }
    inv
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    pub walks: u64,
    pub betti: u64,
}

/// Bidegrees in the table's window where anchored-walk counts and Betti
/// numbers differ. Walks of internal degree beyond `max_j` are ignored.
pub fn cross_validate(g: &CpsGraph, table: &BettiTable) -> Vec<Mismatch> {
    let walks = poincare_table(g, table.max_i);
    let mut keys: Vec<(usize, usize)> = table.entries.keys().copied().collect();
    keys.extend(walks.entries.keys().copied().filter(|&(i, j)| i <= table.max_i && j <= table.max_j));
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .filter_map(|(i, j)| {
            let w = if (i, j) == (0, 0) { 1 } else { walks.get(i, j) as u64 };
            let b = table.get(i, j);
            (w != b).then_some(Mismatch { i, j, walks: w, betti: b })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::presentation::parse_presentation;
    use crate::walks::tests::graph;

    /// Rank over `GF(p)` of sparse rows given as `(column, value)` lists.
    fn rank_mod(rows: Vec<Vec<(usize, u64)>>, p: u64) -> usize {
        let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
        for row in rows {
            let mut r: BTreeMap<usize, u64> = row.into_iter().filter(|&(_, v)| v % p != 0).collect();
            while let Some((&lead, &val)) = r.iter().next() {
                match pivots.get(&lead) {
                    Some(piv) => {
                        // piv is normalized to leading coefficient 1
                        let f = val;
                        for &(c, v) in piv {
                            let e = r.entry(c).or_insert(0);
                            *e = (*e + p - f * v % p) % p;
                            if *e == 0 {
                                r.remove(&c);
                            }
                        }
                    }
                    None => {
                        let inv = inv_mod(val, p);
                        pivots.insert(lead, r.iter().map(|(&c, &v)| (c, v * inv % p)).collect());
                        break;
                    }
                }
            }
        }
        pivots.len()
    }

    /// `dim Tor_i` of the normalized bar complex restricted to the word `w`,
    /// for every `i`: a second, much slower route to the same numbers.
    fn word_homology(ideal: &MonomialIdeal, w: &[Letter], p: u64) -> Vec<u64> {
        let j = w.len();
        // normal[s][e]: w[s..e] avoids relations
        let mut normal = vec![vec![false; j + 1]; j + 1];
        for (s, row) in normal.iter_mut().enumerate() {
            for (e, slot) in row.iter_mut().enumerate().skip(s + 1) {
                *slot = !ideal.contains_factor(&w[s..e]);
            }
        }
        // compositions as cut positions in 1..j, grouped by piece count
        let mut by_pieces: Vec<Vec<Vec<usize>>> = vec![Vec::new(); j + 1];
        fn compose(s: usize, j: usize, normal: &[Vec<bool>], cuts: &mut Vec<usize>, out: &mut [Vec<Vec<usize>>]) {
            for e in s + 1..=j {
                if !normal[s][e] {
                    break;
                }
                if e == j {
                    out[cuts.len() + 1].push(cuts.clone());
                } else {
                    cuts.push(e);
                    compose(e, j, normal, cuts, out);
                    cuts.pop();
                }
            }
        }
        compose(0, j, &normal, &mut Vec::new(), &mut by_pieces);
        let index: Vec<HashMap<Vec<usize>, usize>> = by_pieces
            .iter()
            .map(|cs| cs.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect())
            .collect();
        // rank of d: C_i → C_{i−1}
        let mut ranks = vec![0usize; j + 2];
        for i in 2..=j {
            let rows: Vec<Vec<(usize, u64)>> = by_pieces[i]
                .iter()
                .map(|cuts| {
                    let mut row = Vec::new();
                    for k in 0..cuts.len() {
                        let lo = if k == 0 { 0 } else { cuts[k - 1] };
                        let hi = if k + 1 == cuts.len() { j } else { cuts[k + 1] };
                        if !normal[lo][hi] {
                            continue;
                        }
                        let mut merged = cuts.clone();
                        merged.remove(k);
                        let col = index[i - 1][&merged];
                        // sign (−1)^{k+1}
                        let v = if k % 2 == 0 { p - 1 } else { 1 };
                        row.push((col, v % p));
                    }
                    row
                })
                .collect();
            ranks[i] = rank_mod(rows, p);
        }
        (0..=j)
            .map(|i| {
                if i == 0 {
                    0
                } else {
                    (by_pieces[i].len() - ranks[i] - ranks[i + 1]) as u64
                }
            })
            .collect()
    }

    fn ideal(src: &str) -> MonomialIdeal {
        MonomialIdeal::new(parse_presentation(src).unwrap())
    }

    #[test]
    fn bases() {
        let a = ideal(fixtures::ABC_CDAB);
        assert_eq!(algebra_basis(&a, 0).basis, vec![Word::empty()]);
        assert_eq!(algebra_basis(&a, 1).basis.len(), 4);
        assert!(algebra_basis(&ideal(fixtures::DUAL_NUMBERS), 2).basis.is_empty());
        for (_, src) in fixtures::ALL {
            let i = ideal(src);
            let dims = algebra_dimensions(&i, 6);
            for (j, &d) in dims.iter().enumerate() {
                let b = algebra_basis(&i, j);
                assert_eq!(b.basis.len() as u128, d);
                assert!(b.basis.iter().all(|w| !i.in_ideal(w)));
            }
        }
    }

    #[test]
    fn small_resolutions() {
        let t = minimal_resolution(&ideal(fixtures::XY), 2, 8, 16);
        let expect: BTreeMap<(usize, usize), u64> = [((0, 0), 1), ((1, 1), 2), ((2, 2), 1)].into();
        assert_eq!(t.entries, expect);
        let t = minimal_resolution(&ideal(fixtures::DUAL_NUMBERS), 2, 8, 16);
        for i in 0..=8 {
            assert_eq!(t.get(i, i), 1);
            assert_eq!(t.total(i), 1);
        }
        let t = minimal_resolution(&ideal(fixtures::ABC_CDAB), 2, 8, 16);
        for (ij, d) in [((2, 3), 1), ((2, 4), 1), ((3, 5), 1), ((3, 6), 1)] {
            assert_eq!(t.get(ij.0, ij.1), d, "{ij:?}");
        }
        for i in 2..=5 {
            assert_eq!(t.total(i), 2);
        }
    }

    /// Bar-complex homology of every short word, linked or not, against
    /// the resolution.
    #[test]
    fn bar_complex_agrees() {
        for (name, src) in fixtures::ALL {
            let i = ideal(src);
            if i.alphabet_size() > 4 {
                continue;
            }
            let linked: std::collections::HashSet<Vec<Letter>> = linked_words(&i, 6).into_iter().collect();
            let n = i.alphabet_size() as Letter;
            let mut bar: BTreeMap<(usize, usize), u64> = [((0, 0), 1), ((1, 1), u64::from(n))].into();
            let mut layer = vec![Vec::new()];
            for _ in 0..6 {
                layer = layer
                    .iter()
                    .flat_map(|w: &Vec<Letter>| (0..n).map(move |x| [w.clone(), vec![x]].concat()))
                    .collect();
                for w in layer.iter().filter(|w| w.len() >= 2) {
                    let h = word_homology(&i, w, 2);
                    if !linked.contains(w) {
                        assert!(h.iter().all(|&d| d == 0), "{name}: {w:?}");
                    }
                    for (k, &d) in h.iter().enumerate().filter(|&(_, &d)| d > 0) {
                        *bar.entry((k, w.len())).or_default() += d;
                    }
                }
            }
            assert_eq!(full_resolution(&i, 2, 6).entries, bar, "{name}");
        }
    }

    #[test]
    fn walks_match_betti_numbers() {
        for (name, src) in fixtures::ALL {
            let g = graph(src);
            let t = minimal_resolution(g.ideal(), 2, 8, 16);
            assert_eq!(cross_validate(&g, &t), vec![], "{name}");
        }
    }

    #[test]
    fn euler_characteristic() {
        for (name, src) in fixtures::ALL {
            let i = ideal(src);
            let t = full_resolution(&i, 2, 12);
            assert_eq!(t.euler, inverse_hilbert(&i, 12), "{name}");
        }
    }

    #[test]
    fn dropped_edge_is_caught() {
        let g = graph(fixtures::ABC_CDAB);
        let t = minimal_resolution(g.ideal(), 2, 8, 16);
        for e in 0..g.edge_count() {
            let m = g.with_edge_removed(e);
            let bad = cross_validate(&m, &t);
            assert!(!bad.is_empty(), "edge {e}");
            assert!(bad.iter().all(|x| x.walks < x.betti));
        }
    }

    #[test]
    fn window_excludes_heavy_walks() {
        // walks of internal degree above max_j are not compared
        let g = graph(fixtures::ABC_CDAB);
        let t = minimal_resolution(g.ideal(), 2, 8, 5);
        assert_eq!(cross_validate(&g, &t), vec![]);
    }

    #[test]
    fn characteristic_free() {
        for (name, src) in fixtures::ALL {
            let i = ideal(src);
            let a = minimal_resolution(&i, 2, 8, 16);
            let b = minimal_resolution(&i, 32003, 8, 16);
            assert_eq!(a.entries, b.entries, "{name}");
        }
    }
}
