#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use subset_currents::cylinders::{RationalCurrent, WeightTable};
use subset_currents::stallings::random::{random_finite_cover, random_nontrivial_subgroup};
use subset_currents::{Basis, CoreGraph, Subgroup, Word, Q};

pub fn b(rank: usize) -> Basis {
    Basis::new(rank).unwrap()
}

/// Every reduced word of length at most `r`, shortlex.
pub fn ball(basis: Basis, r: usize) -> Vec<Word> {
    let mut out = vec![Word::identity(basis)];
    let mut layer = out.clone();
    for _ in 0..r {
        let mut next = Vec::new();
        for w in &layer {
            for l in basis.letters() {
                if w.last() != Some(l.inverse()) {
                    next.push(w.right_mul(l));
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

/// Direct check of the round-graph conditions on a vertex set of the Cayley ball,
/// with degrees counted from tree adjacency.
pub fn brute_valid(basis: Basis, set: &BTreeSet<Word>, r: usize) -> bool {
    if !set.contains(&Word::identity(basis)) {
        return false;
    }
    for w in set {
        if w.len() > r {
            return false;
        }
        if let Some(p) = w.parent() {
            if !set.contains(&p) {
                return false;
            }
        }
        if w.len() < r {
            let deg = basis
                .letters()
                .filter(|&l| set.contains(&w.right_mul(l)))
                .count();
            if deg < 2 {
                return false;
            }
        }
    }
    r == 0 || set.iter().filter(|w| w.len() == r).count() >= 2
}

/// All valid vertex sets, found by testing every subset of the ball minus the center.
pub fn brute_round_graphs(basis: Basis, r: usize) -> BTreeSet<Vec<Word>> {
    let rest: Vec<Word> = ball(basis, r)
        .into_iter()
        .filter(|w| !w.is_empty())
        .collect();
    assert!(rest.len() <= 20);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << rest.len()) {
        let mut set: BTreeSet<Word> = BTreeSet::from([Word::identity(basis)]);
        for (i, w) in rest.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.insert(w.clone());
            }
        }
        if brute_valid(basis, &set, r) {
            out.insert(set.into_iter().collect());
        }
    }
    out
}

/// Cylinder values recomputed by tracing every word of the ball from every hull vertex.
pub fn table_oracle(c: &RationalCurrent, r: usize) -> BTreeMap<Vec<Word>, Q> {
    let words = ball(c.basis(), r);
    let mut out: BTreeMap<Vec<Word>, Q> = BTreeMap::new();
    for (coef, h) in c.terms() {
        let hull = h.hull();
        for v in 0..hull.num_vertices() {
            let mut seen: Vec<Word> = words
                .iter()
                .filter(|w| hull.trace(v, w).is_some())
                .cloned()
                .collect();
            seen.sort();
            *out.entry(seen).or_insert_with(Q::zero) += coef;
        }
    }
    out
}

pub fn table_as_map(t: &WeightTable) -> BTreeMap<Vec<Word>, Q> {
    t.entries()
        .iter()
        .map(|(g, v)| (g.vertices().to_vec(), v.clone()))
        .collect()
}

/// `N(H, K)` from the full product of vertex sets, components by union-find.
pub fn product_rank_oracle(a: &CoreGraph, b: &CoreGraph) -> usize {
    let nb = b.num_vertices();
    let n = a.num_vertices() * nb;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut edges = Vec::new();
    for ea in a.edges() {
        for eb in b.edges() {
            if ea.label == eb.label {
                let s = ea.source * nb + eb.source;
                let t = ea.target * nb + eb.target;
                edges.push((s, t));
                let (rs, rt) = (find(&mut parent, s), find(&mut parent, t));
                parent[rs] = rt;
            }
        }
    }
    let mut count: BTreeMap<usize, (i64, i64)> = BTreeMap::new();
    for (s, _) in &edges {
        let root = find(&mut parent, *s);
        count.entry(root).or_default().1 += 1;
    }
    for v in 0..n {
        let root = find(&mut parent, v);
        if let Some(c) = count.get_mut(&root) {
            c.0 += 1;
        }
    }
    count.values().map(|(v, e)| (e - v).max(0) as usize).sum()
}

/// Rank of an integer matrix by rational elimination.
pub fn rational_rank(matrix: &[Vec<BigInt>], columns: usize) -> usize {
    let mut m: Vec<Vec<Q>> = matrix
        .iter()
        .map(|row| row.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect();
    let mut rank = 0;
    for col in 0..columns {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x /= &pivot;
        }
        for i in 0..m.len() {
            if i != rank && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                let row = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn small_positive_rational(rng: &mut ChaCha8Rng) -> Q {
    let num: i64 = rng.gen_range(1..=5);
    let den: i64 = rng.gen_range(1..=4);
    Q::new(num.into(), den.into())
}

/// A current with 1..=3 terms on random nontrivial subgroups.
pub fn random_current(basis: Basis, rng: &mut ChaCha8Rng) -> RationalCurrent {
    let terms = rng.gen_range(1..=3);
    let mut c = RationalCurrent::zero(basis);
    for _ in 0..terms {
        let h = random_nontrivial_subgroup(basis, 3, 4, rng);
        c.push(small_positive_rational(rng), h).unwrap();
    }
    c
}

/// A subgroup of index `k` in `h`: the preimage of a random degree-`k` cover of the
/// rose on `h`'s free basis, pushed into the ambient group by substitution.
pub fn finite_index_subgroup(h: &Subgroup, k: usize, seed: u64) -> Subgroup {
    let images = h.free_basis();
    let cover = random_finite_cover(images.len(), k, seed);
    let words = cover
        .basis_words()
        .iter()
        .map(|w| w.substitute(&images).unwrap())
        .collect();
    Subgroup::new(h.basis(), words).unwrap()
}
