use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Basis, Letter, Word};

/// A round-graph centered at the identity: the intersection of the convex
/// hull of a boundary subset (at least two points) with the ball `B(id, r)`.
///
/// Stored as the shortlex-sorted list of its vertex words. A vertex set is a
/// round-graph iff it contains the identity, is prefix-closed, and every
/// vertex strictly inside the ball has degree at least 2 in the subtree;
/// sphere vertices can then be extended to rays to produce the boundary set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoundGraph {
    rank: usize,
    radius: usize,
    vertices: Vec<Word>,
}

/// Bounds on exhaustive enumeration of round-graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub max_radius: usize,
    pub max_count: u128,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_radius: 3,
            max_count: 2_000_000,
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidRoundGraph(msg.into())
}

/// Explains why `vertices` is not a round-graph of radius `r`, if it is not.
fn violation(basis: Basis, vertices: &[Word], r: usize) -> Option<String> {
    let set: BTreeSet<&Word> = vertices.iter().collect();
    if set.len() != vertices.len() {
        return Some("duplicate vertices".into());
    }
    if !set.contains(&Word::identity(basis)) {
        return Some("identity missing".into());
    }
    for w in vertices {
        if w.basis() != basis {
            return Some(format!("vertex {w} has rank {}", w.rank()));
        }
        if w.len() > r {
            return Some(format!("vertex {w} lies outside the radius-{r} ball"));
        }
        if let Some(p) = w.parent() {
            if !set.contains(&p) {
                return Some(format!("vertex {w} is not connected to the identity"));
            }
        }
    }
    for w in vertices.iter().filter(|w| w.len() < r) {
        let children = basis
            .letters()
            .filter(|&l| w.last() != Some(l.inverse()))
            .filter(|&l| set.contains(&w.right_mul(l)))
            .count();
        let degree = children + usize::from(!w.is_empty());
        if degree < 2 {
            return Some(format!("interior vertex {w} has degree {degree}"));
        }
    }
    if r >= 1 && vertices.iter().filter(|w| w.len() == r).count() < 2 {
        return Some("fewer than two sphere vertices".into());
    }
    None
}

/// True iff the four round-graph conditions hold.
pub fn validate_round_graph(basis: Basis, vertices: &[Word], r: usize) -> bool {
    violation(basis, vertices, r).is_none()
}

impl RoundGraph {
    pub fn new(basis: Basis, radius: usize, mut vertices: Vec<Word>) -> Result<Self> {
        vertices.sort();
        if let Some(msg) = violation(basis, &vertices, radius) {
            return Err(invalid(msg));
        }
        Ok(RoundGraph {
            rank: basis.rank(),
            radius,
            vertices,
        })
    }

    pub(crate) fn from_sorted_unchecked(basis: Basis, radius: usize, vertices: Vec<Word>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(validate_round_graph(basis, &vertices, radius));
        RoundGraph {
            rank: basis.rank(),
            radius,
            vertices,
        }
    }

    /// `{ε}`, the only round-graph of radius 0.
    pub fn root(basis: Basis) -> Self {
        RoundGraph {
            rank: basis.rank(),
            radius: 0,
            vertices: vec![Word::identity(basis)],
        }
    }

    /// The whole ball `B(id, r)`.
    pub fn full_ball(basis: Basis, radius: usize) -> Self {
        let mut vertices = vec![Word::identity(basis)];
        let mut frontier = vertices.clone();
        for _ in 0..radius {
            let mut next = Vec::new();
            for w in &frontier {
                for l in basis.letters() {
                    if w.last() != Some(l.inverse()) {
                        next.push(w.right_mul(l));
                    }
                }
            }
            vertices.extend(next.iter().cloned());
            frontier = next;
        }
        vertices.sort();
        RoundGraph {
            rank: basis.rank(),
            radius,
            vertices,
        }
    }

    pub fn basis(&self) -> Basis {
        Basis::new(self.rank).expect("rank >= 1")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.vertices.binary_search(w).is_ok()
    }

    pub fn contains_letter(&self, l: Letter) -> bool {
        self.contains(&Word::letter(self.basis(), l))
    }

    /// `T ∩ B(id, r')`.
    pub fn restrict(&self, radius: usize) -> Result<RoundGraph> {
        if radius > self.radius {
            return Err(Error::RadiusMismatch {
                left: self.radius,
                right: radius,
            });
        }
        let vertices = self
            .vertices
            .iter()
            .filter(|w| w.len() <= radius)
            .cloned()
            .collect();
        Ok(RoundGraph {
            rank: self.rank,
            radius,
            vertices,
        })
    }

    /// `T ∩ B(id, u, r)` for a generator `u ∈ T`.
    pub fn lens(&self, u: Letter) -> Lens {
        Lens::from_words(u, self.radius, self.vertices.iter().cloned())
    }

    /// `(uT) ∩ B(id, u, r)` for a generator `u` with `u⁻¹ ∈ T`.
    pub fn translated_lens(&self, u: Letter) -> Lens {
        Lens::from_words(u, self.radius, self.vertices.iter().map(|w| w.left_mul(u)))
    }

    /// Parses the comma-separated form, e.g. `e,x,X`.
    pub fn parse(basis: Basis, radius: usize, text: &str) -> Result<RoundGraph> {
        let vertices = text
            .split(',')
            .map(|t| Word::parse(basis, t.trim()))
            .collect::<Result<Vec<_>>>()?;
        RoundGraph::new(basis, radius, vertices)
    }
}

impl fmt::Display for RoundGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Is `w` in the lens `B(id, r) ∩ B(u, r)`?
pub fn in_lens(w: &Word, u: Letter, r: usize) -> bool {
    w.len() < r || (w.len() == r && w.first() == Some(u))
}

/// A `(id, u)`-round-graph: the trace of a hull on the lens `B(id, r) ∩ B(u, r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lens {
    generator: usize,
    radius: usize,
    vertices: Vec<Word>,
}

impl Lens {
    fn from_words(u: Letter, radius: usize, words: impl Iterator<Item = Word>) -> Lens {
        let mut vertices: Vec<Word> = words.filter(|w| in_lens(w, u, radius)).collect();
        vertices.sort();
        Lens {
            generator: u.generator(),
            radius,
            vertices,
        }
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }
}

impl fmt::Display for Lens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|w| w.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `#R_r(id)` in the given rank, saturating at `u128::MAX`.
pub fn round_graph_count(rank: usize, r: usize) -> u128 {
    if r == 0 {
        return 1;
    }
    let pow = |base: u128, e: usize| -> u128 {
        (0..e)
            .try_fold(1u128, |acc, _| acc.checked_mul(base))
            .unwrap_or(u128::MAX)
    };
    // below[d]: subtrees hanging below a non-root vertex with d levels left
    let mut below: u128 = 1;
    for _ in 0..r - 1 {
        below = pow(below.saturating_add(1), 2 * rank - 1).saturating_sub(1);
    }
    pow(below.saturating_add(1), 2 * rank)
        .saturating_sub(1)
        .saturating_sub((2 * rank as u128).saturating_mul(below))
}

fn subtree_options(basis: Basis, w: &Word, levels: usize) -> Vec<Vec<Word>> {
    if levels == 0 {
        return vec![vec![w.clone()]];
    }
    let children: Vec<Word> = basis
        .letters()
        .filter(|&l| w.last() != Some(l.inverse()))
        .map(|l| w.right_mul(l))
        .collect();
    let child_options: Vec<Vec<Vec<Word>>> = children
        .iter()
        .map(|c| subtree_options(basis, c, levels - 1))
        .collect();
    let min_children = if w.is_empty() { 2 } else { 1 };
    let mut out = Vec::new();
    for mask in 1u32..(1 << children.len()) {
        if (mask.count_ones() as usize) < min_children {
            continue;
        }
        let mut partial: Vec<Vec<Word>> = vec![vec![w.clone()]];
        for (i, options) in child_options.iter().enumerate() {
            if mask & (1 << i) == 0 {
                continue;
            }
            partial = partial
                .iter()
                .flat_map(|p| {
                    options.iter().map(move |o| {
                        let mut q = p.clone();
                        q.extend(o.iter().cloned());
                        q
                    })
                })
                .collect();
        }
        out.extend(partial);
    }
    out
}

/// All round-graphs of radius `r` centered at the identity, sorted.
pub fn enumerate_round_graphs(
    basis: Basis,
    r: usize,
    limits: &EnumerationLimits,
) -> Result<Vec<RoundGraph>> {
    if r > limits.max_radius {
        return Err(Error::RadiusTooLarge {
            radius: r,
            max: limits.max_radius,
        });
    }
    let count = round_graph_count(basis.rank(), r);
    if count > limits.max_count {
        return Err(Error::EnumerationTooLarge {
            rank: basis.rank(),
            radius: r,
            count,
            limit: limits.max_count,
        });
    }
    let mut graphs: Vec<RoundGraph> = subtree_options(basis, &Word::identity(basis), r)
        .into_iter()
        .map(|mut vertices| {
            vertices.sort();
            RoundGraph::from_sorted_unchecked(basis, r, vertices)
        })
        .collect();
    graphs.sort();
    debug_assert_eq!(graphs.len() as u128, count);
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Basis {
        Basis::new(2).unwrap()
    }

    fn words(s: &[&str]) -> Vec<Word> {
        s.iter().map(|t| Word::parse(b2(), t).unwrap()).collect()
    }

    #[test]
    fn validity_examples() {
        assert!(validate_round_graph(b2(), &words(&["e"]), 0));
        assert!(!validate_round_graph(b2(), &words(&["e", "x"]), 1));
        assert!(validate_round_graph(b2(), &words(&["e", "x", "X"]), 1));
        assert!(!validate_round_graph(b2(), &words(&["x", "X"]), 1));
        // xy without its parent x
        assert!(!validate_round_graph(
            b2(),
            &words(&["e", "X", "x", "xy", "Xy", "y"]),
            2
        ));
        // x is interior with no child
        assert!(!validate_round_graph(
            b2(),
            &words(&["e", "X", "x", "Xy"]),
            2
        ));
        assert!(validate_round_graph(
            b2(),
            &words(&["e", "X", "x", "Xy", "xx"]),
            2
        ));
    }

    #[test]
    fn enumeration_counts() {
        let lim = EnumerationLimits::default();
        assert_eq!(enumerate_round_graphs(b2(), 0, &lim).unwrap().len(), 1);
        assert_eq!(enumerate_round_graphs(b2(), 1, &lim).unwrap().len(), 11);
        assert_eq!(round_graph_count(2, 2), 4067);
        assert_eq!(round_graph_count(3, 1), 57);
    }

    #[test]
    fn enumeration_limits() {
        let lim = EnumerationLimits::default();
        assert!(matches!(
            enumerate_round_graphs(b2(), 4, &lim),
            Err(Error::RadiusTooLarge { radius: 4, max: 3 })
        ));
        assert!(matches!(
            enumerate_round_graphs(b2(), 3, &lim),
            Err(Error::EnumerationTooLarge { .. })
        ));
    }

    #[test]
    fn restrict_examples() {
        let full2 = RoundGraph::full_ball(b2(), 2);
        assert_eq!(full2.vertices().len(), 17);
        assert_eq!(full2.restrict(2).unwrap(), full2);
        assert_eq!(full2.restrict(0).unwrap(), RoundGraph::root(b2()));
        assert_eq!(full2.restrict(1).unwrap(), RoundGraph::full_ball(b2(), 1));
        assert!(full2.restrict(3).is_err());
    }

    #[test]
    fn restriction_of_every_graph_is_valid() {
        let lim = EnumerationLimits::default();
        for t in enumerate_round_graphs(b2(), 2, &lim).unwrap() {
            for r in 0..=2 {
                let s = t.restrict(r).unwrap();
                assert!(validate_round_graph(b2(), s.vertices(), r));
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let t = RoundGraph::parse(b2(), 1, "X,e,x").unwrap();
        assert_eq!(t.to_string(), "e,x,X");
        assert_eq!(RoundGraph::parse(b2(), 1, &t.to_string()).unwrap(), t);
        assert!(RoundGraph::parse(b2(), 1, "e,x").is_err());
    }

    #[test]
    fn lens_of_axis() {
        let t = RoundGraph::parse(b2(), 1, "e,x,X").unwrap();
        let x = Letter::new(1);
        assert_eq!(t.lens(x).to_string(), "e,x");
        assert_eq!(t.translated_lens(x).to_string(), "e,x");
    }
}
