//! Seeded generators of test instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::words::{Basis, Word};

use super::graph::{CoreGraph, Edge};
use super::subgroup::Subgroup;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected full cover of the rose with `degree` vertices: one uniformly
/// random permutation per generator, resampled until connected.
pub fn random_finite_cover(rank: usize, degree: usize, seed: u64) -> CoreGraph {
    assert!(degree >= 1, "degree must be positive");
    let mut rng = rng(seed);
    loop {
        let mut edges = Vec::with_capacity(rank * degree);
        for label in 1..=rank {
            let mut perm: Vec<usize> = (0..degree).collect();
            perm.shuffle(&mut rng);
            edges.extend(perm.iter().enumerate().map(|(source, &target)| Edge {
                source,
                target,
                label,
            }));
        }
        if let Ok(g) = CoreGraph::from_edges(rank, degree, &edges, Some(0)) {
            return g;
        }
    }
}

/// A uniformly random reduced word of the given length.
pub fn random_word<R: Rng + ?Sized>(basis: Basis, len: usize, rng: &mut R) -> Word {
    let letters: Vec<_> = basis.letters().collect();
    let mut out = Word::identity(basis);
    while out.len() < len {
        let l = *letters.choose(rng).unwrap();
        if out.last() != Some(l.inverse()) {
            out = out.right_mul(l);
        }
    }
    out
}

/// Subgroup on 1..=max_generators random words of length 1..=max_len.
pub fn random_subgroup<R: Rng + ?Sized>(
    basis: Basis,
    max_generators: usize,
    max_len: usize,
    rng: &mut R,
) -> Subgroup {
    let count = rng.gen_range(1..=max_generators);
    let words = (0..count)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            random_word(basis, len, rng)
        })
        .collect();
    Subgroup::new(basis, words).expect("same basis")
}

/// Like [`random_subgroup`] but resampled until the subgroup is nontrivial.
pub fn random_nontrivial_subgroup<R: Rng + ?Sized>(
    basis: Basis,
    max_generators: usize,
    max_len: usize,
    rng: &mut R,
) -> Subgroup {
    loop {
        let h = random_subgroup(basis, max_generators, max_len, rng);
        if !h.is_trivial() {
            return h;
        }
    }
}
