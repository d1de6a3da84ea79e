//! Random monomial presentations and brute-force checks of the walk calculus.
#![allow(dead_code)]

use std::collections::HashMap;

use proptest::prelude::*;
use yoneda_cps::ext::{yoneda_mul, ExtClass};
use yoneda_cps::walks::{canonical_anchored, equivalent, is_admissible, word_of, AnchoredWalk, Walk};
use yoneda_cps::{Alphabet, CpsGraph, Presentation, VertexId, Word};

/// Up to 3 generators, up to 4 relations of degree 2 to 4.
pub fn presentation() -> impl Strategy<Value = Presentation> {
    (1usize..=3).prop_flat_map(|n| {
        let word = prop::collection::vec(0..n as u32, 2..=4);
        prop::collection::vec(word, 1..=4).prop_map(move |rels| {
            let names: Vec<String> = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
            let alphabet = Alphabet::new(&names).unwrap();
            Presentation::new(alphabet, rels.into_iter().map(Word::new).collect()).unwrap()
        })
    })
}

pub const MAX_LEN: usize = 5;

/// Every walk with at most `max_len` edges.
pub fn all_walks(g: &CpsGraph, max_len: usize) -> Vec<Vec<VertexId>> {
    let mut out: Vec<Vec<VertexId>> = (0..g.vertex_count()).map(|v| vec![v]).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for v in g.successors(*w.last().unwrap()) {
                let mut x = w.clone();
                x.push(v);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn walk(g: &CpsGraph, ids: &[VertexId]) -> Walk {
    Walk::new(g, ids.to_vec()).unwrap()
}

fn show(g: &CpsGraph, ids: &[VertexId]) -> String {
    ids.iter().map(|&v| g.display(v)).collect::<Vec<_>>().join("→")
}

/// Walks grouped into equivalence classes by (length, word).
fn classes(g: &CpsGraph, walks: &[Vec<VertexId>]) -> HashMap<(usize, Word), Vec<Vec<VertexId>>> {
    let mut out: HashMap<(usize, Word), Vec<Vec<VertexId>>> = HashMap::new();
    for w in walks {
        out.entry((w.len() - 1, word_of(g, &walk(g, w)))).or_default().push(w.clone());
    }
    out
}

/// Equivalent walks of even length end at the same vertex; equivalent walks
/// agree on every pair `p_{2k+1} ⊗ p_{2k}`; each class holds at most one
/// anchored walk.
pub fn check_equivalence(g: &CpsGraph) -> Vec<String> {
    let mut bad = Vec::new();
    let walks = all_walks(g, MAX_LEN);
    for ((n, _), class) in classes(g, &walks) {
        let first = &class[0];
        for other in &class[1..] {
            if !equivalent(g, &walk(g, first), &walk(g, other)) {
                bad.push(format!("grouped but not equivalent: {} / {}", show(g, first), show(g, other)));
            }
            if n % 2 == 0 && first.last() != other.last() {
                bad.push(format!("even length, different ends: {} / {}", show(g, first), show(g, other)));
            }
            for k in 0..n.div_ceil(2) {
                let pair = |w: &[VertexId]| g.word(w[2 * k + 1]).concat(g.word(w[2 * k]));
                if pair(first) != pair(other) {
                    bad.push(format!("pair {k} differs: {} / {}", show(g, first), show(g, other)));
                }
            }
        }
        let anchored = class.iter().filter(|w| g.in_g0(w[0])).count();
        if anchored > 1 {
            bad.push(format!("{anchored} anchored walks with word of {}", show(g, first)));
        }
    }
    bad
}

/// An admissible prefix of length `n` whose extension to length `s` is not
/// admissible although `n` is even (`even_prefix`) or `s − n` is even (the
/// other case).
pub fn check_parity_closure(g: &CpsGraph, even_prefix: bool) -> Vec<String> {
    let mut bad = Vec::new();
    for w in all_walks(g, MAX_LEN) {
        let s = w.len() - 1;
        if is_admissible(g, &walk(g, &w)) {
            continue;
        }
        for n in 1..s {
            let applies = if even_prefix { n % 2 == 0 } else { n % 2 == 1 && (s - n) % 2 == 0 };
            if applies && is_admissible(g, &walk(g, &w[..=n])) {
                bad.push(format!("{} admissible, {} not", show(g, &w[..=n]), show(g, &w)));
                break;
            }
        }
    }
    bad
}

/// `canonical_anchored` against an exhaustive search of anchored walks.
pub fn check_canonical(g: &CpsGraph) -> Vec<String> {
    let mut bad = Vec::new();
    let walks = all_walks(g, MAX_LEN);
    let mut anchored: HashMap<(usize, Word), Vec<VertexId>> = HashMap::new();
    for w in walks.iter().filter(|w| g.in_g0(w[0])) {
        anchored.insert((w.len() - 1, word_of(g, &walk(g, w))), w.clone());
    }
    for w in &walks {
        let key = (w.len() - 1, word_of(g, &walk(g, w)));
        let brute = anchored.get(&key);
        let fast = canonical_anchored(g, &walk(g, w)).map(|a| a.walk().vertices().to_vec());
        if brute != fast.as_ref() {
            bad.push(format!("{}: search {:?}, canonical {:?}", show(g, w), brute.map(|b| show(g, b)), fast.map(|f| show(g, &f))));
        }
    }
    bad
}

fn class(g: &CpsGraph, ids: &[VertexId]) -> ExtClass {
    ExtClass::new(AnchoredWalk::new(g, walk(g, ids)).unwrap())
}

/// Products against an exhaustive search, and associativity, for classes of
/// total cohomological degree `≤ 6`.
pub fn check_products(g: &CpsGraph) -> Vec<String> {
    let mut bad = Vec::new();
    let anchored: Vec<Vec<VertexId>> = all_walks(g, 4).into_iter().filter(|w| g.in_g0(w[0])).collect();
    let mut by_word: HashMap<(usize, Word), Vec<Vec<VertexId>>> = HashMap::new();
    for w in &anchored {
        by_word.entry((w.len() - 1, word_of(g, &walk(g, w)))).or_default().push(w.clone());
    }
    let cohom = |w: &Vec<VertexId>| w.len();
    for p in &anchored {
        for q in anchored.iter().filter(|q| cohom(p) + cohom(q) <= 5) {
            let got = match yoneda_mul(g, &class(g, p), &class(g, q)) {
                Ok(r) => r.map(|c| c.walk().walk().vertices().to_vec()),
                Err(e) => {
                    bad.push(format!("{} ⋆ {}: {e}", show(g, p), show(g, q)));
                    continue;
                }
            };
            // anchored walks of the right length, starting with q, whose
            // word is word(p)·word(q)
            let word = word_of(g, &walk(g, p)).concat(&word_of(g, &walk(g, q)));
            let len = p.len() + q.len() - 1;
            let expect: Vec<&Vec<VertexId>> = by_word
                .get(&(len, word))
                .map(|v| v.iter().filter(|r| r.starts_with(q)).collect())
                .unwrap_or_default();
            if len <= 4 && got.as_ref() != expect.first().copied() {
                bad.push(format!("{} ⋆ {}: got {:?}", show(g, p), show(g, q), got.map(|r| show(g, &r))));
            }
        }
    }
    // (a ⋆ b) ⋆ c = a ⋆ (b ⋆ c)
    for a in &anchored {
        for b in &anchored {
            for c in anchored.iter().filter(|c| cohom(a) + cohom(b) + cohom(c) <= 6) {
                let (a_, b_, c_) = (class(g, a), class(g, b), class(g, c));
                let left = yoneda_mul(g, &a_, &b_).ok().flatten().and_then(|ab| yoneda_mul(g, &ab, &c_).ok().flatten());
                let right = yoneda_mul(g, &b_, &c_).ok().flatten().and_then(|bc| yoneda_mul(g, &a_, &bc).ok().flatten());
                if left != right {
                    bad.push(format!("associativity fails on {}, {}, {}", show(g, a), show(g, b), show(g, c)));
                }
            }
        }
    }
    bad
}
