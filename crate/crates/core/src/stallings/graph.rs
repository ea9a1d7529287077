use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::words::{Basis, Letter, Word};

/// A directed edge labeled by a generator (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub label: usize,
}

/// Index of a subgroup in the ambient free group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Index {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Finite(n) => write!(f, "{n}"),
            Index::Infinite => write!(f, "infinite"),
        }
    }
}

/// A finite, connected, folded graph labeled by the generators of a free basis.
///
/// Folding is structural: each vertex stores at most one outgoing and one
/// incoming edge per label. Every constructor renumbers vertices canonically
/// (breadth-first from the basepoint, or from the start vertex with the least
/// canonical code when there is no basepoint), so `==` is label-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoreGraph {
    rank: usize,
    out: Vec<Vec<Option<usize>>>,
    inc: Vec<Vec<Option<usize>>>,
    basepoint: Option<usize>,
}

impl CoreGraph {
    /// Builds a folded graph from explicit edges, renumbering canonically.
    pub fn from_edges(
        rank: usize,
        num_vertices: usize,
        edges: &[Edge],
        basepoint: Option<usize>,
    ) -> Result<Self> {
        Basis::new(rank)?;
        let g = Self::raw(rank, num_vertices, edges, basepoint)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g.canonicalize())
    }

    fn raw(
        rank: usize,
        num_vertices: usize,
        edges: &[Edge],
        basepoint: Option<usize>,
    ) -> Result<Self> {
        let mut out = vec![vec![None; rank]; num_vertices];
        let mut inc = vec![vec![None; rank]; num_vertices];
        if let Some(b) = basepoint {
            if b >= num_vertices {
                return Err(Error::NoSuchVertex { vertex: b });
            }
        }
        for e in edges {
            if e.label == 0 || e.label > rank {
                return Err(Error::LetterOutOfRange {
                    index: e.label as i64,
                    rank,
                });
            }
            for v in [e.source, e.target] {
                if v >= num_vertices {
                    return Err(Error::NoSuchVertex { vertex: v });
                }
            }
            let slot = &mut out[e.source][e.label - 1];
            if slot.is_some_and(|t| t != e.target) {
                return Err(Error::NotFolded {
                    vertex: e.source,
                    label: e.label,
                    direction: "outgoing",
                });
            }
            *slot = Some(e.target);
            let slot = &mut inc[e.target][e.label - 1];
            if slot.is_some_and(|s| s != e.source) {
                return Err(Error::NotFolded {
                    vertex: e.target,
                    label: e.label,
                    direction: "incoming",
                });
            }
            *slot = Some(e.source);
        }
        Ok(CoreGraph {
            rank,
            out,
            inc,
            basepoint,
        })
    }

    /// The one-vertex graph with no edges, based at its vertex.
    pub fn trivial(rank: usize) -> Self {
        CoreGraph {
            rank,
            out: vec![vec![None; rank]],
            inc: vec![vec![None; rank]],
            basepoint: Some(0),
        }
    }

    pub fn empty(rank: usize) -> Self {
        CoreGraph {
            rank,
            out: Vec::new(),
            inc: Vec::new(),
            basepoint: None,
        }
    }

    /// The rose: one vertex with a loop for every generator.
    pub fn rose(rank: usize) -> Self {
        CoreGraph {
            rank,
            out: vec![(0..rank).map(|_| Some(0)).collect()],
            inc: vec![(0..rank).map(|_| Some(0)).collect()],
            basepoint: Some(0),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis(&self) -> Basis {
        Basis::new(self.rank).expect("rank >= 1")
    }

    pub fn num_vertices(&self) -> usize {
        self.out.len()
    }

    pub fn num_edges(&self) -> usize {
        self.out.iter().flatten().filter(|t| t.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.out.is_empty()
    }

    pub fn basepoint(&self) -> Option<usize> {
        self.basepoint
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(self.num_edges());
        for (source, row) in self.out.iter().enumerate() {
            for (g, t) in row.iter().enumerate() {
                if let Some(target) = *t {
                    edges.push(Edge {
                        source,
                        target,
                        label: g + 1,
                    });
                }
            }
        }
        edges
    }

    /// Endpoint of the edge leaving `v` that reads `l`, if any.
    pub fn follow(&self, v: usize, l: Letter) -> Option<usize> {
        let g = l.generator() - 1;
        if l.is_inverse() {
            self.inc[v][g]
        } else {
            self.out[v][g]
        }
    }

    /// Total degree; a loop contributes two.
    pub fn degree(&self, v: usize) -> usize {
        self.out[v].iter().filter(|t| t.is_some()).count()
            + self.inc[v].iter().filter(|t| t.is_some()).count()
    }

    /// Endpoint of the path reading `w` from `v`.
    pub fn trace(&self, v: usize, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(v, |at, &l| self.follow(at, l))
    }

    /// True iff `w` reads a closed path at the basepoint (false without a basepoint).
    pub fn contains(&self, w: &Word) -> bool {
        match self.basepoint {
            Some(b) if w.rank() == self.rank => self.trace(b, w) == Some(b),
            _ => false,
        }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return true;
        }
        self.reachable_from(0).iter().all(|&r| r)
    }

    fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.num_vertices()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for t in self.out[v].iter().chain(self.inc[v].iter()).flatten() {
                if !seen[*t] {
                    seen[*t] = true;
                    stack.push(*t);
                }
            }
        }
        seen
    }

    /// Every vertex (other than the basepoint, when present) has degree at least 2.
    pub fn is_core(&self) -> bool {
        (0..self.num_vertices()).all(|v| Some(v) == self.basepoint || self.degree(v) >= 2)
    }

    /// `max(E - V, 0)`; zero for empty graphs and trees.
    pub fn reduced_rank(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.num_edges().saturating_sub(self.num_vertices()))
    }

    /// Rank of the fundamental group, `E - V + 1` (0 for an empty graph).
    pub fn free_rank(&self) -> usize {
        if self.is_empty() {
            0
        } else {
            self.num_edges() + 1 - self.num_vertices()
        }
    }

    /// Number of vertices when the graph covers the rose, `Infinite` otherwise.
    pub fn finite_index(&self) -> Index {
        let full = !self.is_empty()
            && self
                .out
                .iter()
                .chain(self.inc.iter())
                .all(|row| row.iter().all(|t| t.is_some()));
        if full {
            Index::Finite(self.num_vertices())
        } else {
            Index::Infinite
        }
    }

    /// Iteratively removes vertices of degree at most one. The basepoint is
    /// pruned like any other vertex and dropped from the result.
    pub fn hull_core(&self) -> CoreGraph {
        let keep = self.prune(None);
        self.induced(&keep, None)
    }

    /// Prunes degree-at-most-one vertices except the basepoint.
    pub fn trim(&self) -> CoreGraph {
        let keep = self.prune(self.basepoint);
        self.induced(&keep, self.basepoint)
    }

    fn prune(&self, protected: Option<usize>) -> Vec<bool> {
        let n = self.num_vertices();
        let mut keep = vec![true; n];
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut stack: Vec<usize> = (0..n)
            .filter(|&v| degree[v] <= 1 && Some(v) != protected)
            .collect();
        while let Some(v) = stack.pop() {
            if !keep[v] {
                continue;
            }
            keep[v] = false;
            for t in self.out[v].iter().chain(self.inc[v].iter()).flatten() {
                let t = *t;
                if keep[t] {
                    degree[t] -= 1;
                    if degree[t] <= 1 && Some(t) != protected {
                        stack.push(t);
                    }
                }
            }
        }
        keep
    }

    fn induced(&self, keep: &[bool], basepoint: Option<usize>) -> CoreGraph {
        let mut id = vec![usize::MAX; keep.len()];
        let mut n = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                id[v] = n;
                n += 1;
            }
        }
        let edges: Vec<Edge> = self
            .edges()
            .into_iter()
            .filter(|e| keep[e.source] && keep[e.target])
            .map(|e| Edge {
                source: id[e.source],
                target: id[e.target],
                label: e.label,
            })
            .collect();
        let basepoint = basepoint.filter(|&b| keep[b]).map(|b| id[b]);
        Self::raw(self.rank, n, &edges, basepoint)
            .expect("subgraph of a folded graph is folded")
            .canonicalize()
    }

    /// Same graph with the basepoint moved to `v` (or removed).
    pub fn rebased(&self, v: Option<usize>) -> Result<CoreGraph> {
        if let Some(v) = v {
            if v >= self.num_vertices() {
                return Err(Error::NoSuchVertex { vertex: v });
            }
        }
        let mut g = self.clone();
        g.basepoint = v;
        Ok(g.canonicalize())
    }

    /// Core graph of `g H g⁻¹`, where `H` is the subgroup read at the basepoint.
    pub fn conjugate(&self, g: &Word) -> Result<CoreGraph> {
        let base = self
            .basepoint
            .ok_or_else(|| Error::InvalidArgument("conjugate needs a basepointed core".into()))?;
        if g.rank() != self.rank {
            return Err(Error::BasisMismatch {
                left: self.rank,
                right: g.rank(),
            });
        }
        if g.is_empty() {
            return Ok(self.clone());
        }
        let mut raw = LabeledGraph::from_core(self);
        let start = raw.add_vertex();
        raw.add_path(start, g, Some(base));
        raw.set_basepoint(Some(start));
        raw.fold()
    }

    /// Free basis of the subgroup at the basepoint: one word per edge outside
    /// a breadth-first spanning tree.
    pub fn basis_words(&self) -> Vec<Word> {
        let Some(base) = self.basepoint else {
            return Vec::new();
        };
        let basis = self.basis();
        let n = self.num_vertices();
        let mut path: Vec<Option<Word>> = vec![None; n];
        let mut tree_edge = vec![vec![false; self.rank]; n];
        path[base] = Some(Word::identity(basis));
        let mut queue = VecDeque::from([base]);
        while let Some(v) = queue.pop_front() {
            for l in basis.letters() {
                if let Some(t) = self.follow(v, l) {
                    if path[t].is_none() {
                        path[t] = Some(path[v].as_ref().unwrap().right_mul(l));
                        let src = if l.is_inverse() { t } else { v };
                        tree_edge[src][l.generator() - 1] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        self.edges()
            .into_iter()
            .filter(|e| !tree_edge[e.source][e.label - 1])
            .map(|e| {
                let head = path[e.source].as_ref().unwrap();
                let tail = path[e.target].as_ref().unwrap().invert();
                head.right_mul(Letter::new(e.label as i32)).mul(&tail)
            })
            .collect()
    }

    /// Breadth-first code of the graph as seen from `start`.
    pub fn canonical_code(&self, start: usize) -> Vec<(usize, usize, usize)> {
        let (order, _) = self.bfs_order(start);
        let mut code: Vec<(usize, usize, usize)> = self
            .edges()
            .iter()
            .map(|e| (order[e.source], e.label, order[e.target]))
            .collect();
        code.sort_unstable();
        code
    }

    fn bfs_order(&self, start: usize) -> (Vec<usize>, usize) {
        let n = self.num_vertices();
        let mut order = vec![usize::MAX; n];
        let mut next = 0;
        order[start] = next;
        next += 1;
        let mut queue = VecDeque::from([start]);
        let basis = self.basis();
        while let Some(v) = queue.pop_front() {
            for l in basis.letters() {
                if let Some(t) = self.follow(v, l) {
                    if order[t] == usize::MAX {
                        order[t] = next;
                        next += 1;
                        queue.push_back(t);
                    }
                }
            }
        }
        (order, next)
    }

    /// Vertex whose canonical code is least; ties resolved by vertex id.
    pub fn least_signature_vertex(&self) -> Option<usize> {
        (0..self.num_vertices()).min_by_key(|&v| self.canonical_code(v))
    }

    fn canonicalize(self) -> CoreGraph {
        let start = match self.basepoint {
            Some(b) => b,
            None => match self.least_signature_vertex() {
                Some(v) => v,
                None => return self,
            },
        };
        let (order, reached) = self.bfs_order(start);
        debug_assert_eq!(reached, self.num_vertices());
        let edges: Vec<Edge> = self
            .edges()
            .iter()
            .map(|e| Edge {
                source: order[e.source],
                target: order[e.target],
                label: e.label,
            })
            .collect();
        let basepoint = self.basepoint.map(|b| order[b]);
        Self::raw(self.rank, self.num_vertices(), &edges, basepoint).expect("relabeling")
    }
}

/// A labeled graph that need not be folded; input to [`LabeledGraph::fold`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    rank: usize,
    num_vertices: usize,
    edges: Vec<Edge>,
    basepoint: Option<usize>,
}

impl LabeledGraph {
    pub fn new(rank: usize) -> Self {
        LabeledGraph {
            rank,
            num_vertices: 0,
            edges: Vec::new(),
            basepoint: None,
        }
    }

    pub fn from_core(core: &CoreGraph) -> Self {
        LabeledGraph {
            rank: core.rank,
            num_vertices: core.num_vertices(),
            edges: core.edges(),
            basepoint: core.basepoint,
        }
    }

    /// Wedge of one loop per word at a single basepoint.
    pub fn wedge(rank: usize, words: &[Word]) -> Self {
        let mut g = LabeledGraph::new(rank);
        let base = g.add_vertex();
        g.set_basepoint(Some(base));
        for w in words {
            g.add_path(base, w, Some(base));
        }
        g
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn add_vertex(&mut self) -> usize {
        self.num_vertices += 1;
        self.num_vertices - 1
    }

    pub fn set_basepoint(&mut self, v: Option<usize>) {
        self.basepoint = v;
    }

    pub fn add_edge(&mut self, source: usize, target: usize, label: usize) {
        assert!(source < self.num_vertices && target < self.num_vertices);
        assert!(label >= 1 && label <= self.rank);
        self.edges.push(Edge {
            source,
            target,
            label,
        });
    }

    /// Adds a path reading `w` from `from`, ending at `to` if given (else at a
    /// fresh vertex). Returns the end vertex. An empty word with `to` given
    /// identifies nothing and returns `from`.
    pub fn add_path(&mut self, from: usize, w: &Word, to: Option<usize>) -> usize {
        let n = w.len();
        if n == 0 {
            return from;
        }
        let mut at = from;
        for (i, l) in w.letters().iter().enumerate() {
            let next = match to {
                Some(t) if i + 1 == n => t,
                _ => self.add_vertex(),
            };
            let label = l.generator();
            if l.is_inverse() {
                self.add_edge(next, at, label);
            } else {
                self.add_edge(at, next, label);
            }
            at = next;
        }
        at
    }

    /// Stallings folding by worklist identification, followed by trimming.
    ///
    /// The result is the folded component of the basepoint with hanging trees
    /// removed (basepoint protected). Without a basepoint the folded graph
    /// must be connected and the result is its hull-core.
    pub fn fold(&self) -> Result<CoreGraph> {
        let n = self.num_vertices;
        if n == 0 {
            return Ok(CoreGraph::empty(self.rank));
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        // adjacency entries (signed label, other endpoint)
        let mut adj: Vec<Vec<(i32, usize)>> = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.source].push((e.label as i32, e.target));
            adj[e.target].push((-(e.label as i32), e.source));
        }
        let mut work: Vec<usize> = (0..n).collect();
        while let Some(v) = work.pop() {
            let v = find(&mut parent, v);
            let mut entries = std::mem::take(&mut adj[v]);
            for entry in entries.iter_mut() {
                entry.1 = find(&mut parent, entry.1);
            }
            entries.sort_unstable();
            entries.dedup();
            let clash = entries
                .windows(2)
                .find(|w| w[0].0 == w[1].0)
                .map(|w| (w[0].1, w[1].1));
            adj[v] = entries;
            if let Some((a, b)) = clash {
                // merge the smaller adjacency list into the larger
                let (keep, gone) = if adj[a].len() >= adj[b].len() {
                    (a, b)
                } else {
                    (b, a)
                };
                parent[gone] = keep;
                let moved = std::mem::take(&mut adj[gone]);
                adj[keep].extend(moved);
                work.push(keep);
                work.push(v);
            }
        }
        let reps: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let mut id = vec![usize::MAX; n];
        let mut count = 0;
        for v in 0..n {
            if reps[v] == v {
                id[v] = count;
                count += 1;
            }
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .map(|e| Edge {
                source: id[reps[e.source]],
                target: id[reps[e.target]],
                label: e.label,
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let basepoint = self.basepoint.map(|b| id[reps[b]]);
        let folded = CoreGraph::raw(self.rank, count, &edges, basepoint)?;
        let start = basepoint.unwrap_or(0);
        let seen = folded.reachable_from(start);
        if basepoint.is_none() && !seen.iter().all(|&s| s) {
            return Err(Error::Disconnected);
        }
        let component = folded.induced(&seen, basepoint);
        Ok(match basepoint {
            Some(_) => component.trim(),
            None => component.hull_core(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b2() -> Basis {
        Basis::new(2).unwrap()
    }

    fn word(s: &str) -> Word {
        Word::parse(b2(), s).unwrap()
    }

    fn core_of(gens: &[&str]) -> CoreGraph {
        let words: Vec<Word> = gens.iter().map(|s| word(s)).collect();
        LabeledGraph::wedge(2, &words).fold().unwrap()
    }

    #[test]
    fn single_loop_and_rose() {
        let c = core_of(&["x"]);
        assert_eq!((c.num_vertices(), c.num_edges()), (1, 1));
        let r = core_of(&["x", "y"]);
        assert_eq!(r, CoreGraph::rose(2));
    }

    #[test]
    fn fold_identifies_parallel_loops() {
        let mut g = LabeledGraph::new(2);
        let v = g.add_vertex();
        g.set_basepoint(Some(v));
        g.add_edge(v, v, 1);
        g.add_edge(v, v, 1);
        let c = g.fold().unwrap();
        assert_eq!((c.num_vertices(), c.num_edges()), (1, 1));
    }

    #[test]
    fn fold_idempotent_on_rose() {
        let rose = CoreGraph::rose(2);
        assert_eq!(LabeledGraph::from_core(&rose).fold().unwrap(), rose);
    }

    #[test]
    fn fold_xy_xy_inverse() {
        let c = core_of(&["xy", "xY"]);
        assert_eq!((c.num_vertices(), c.num_edges()), (2, 3));
        assert!(c.contains(&word("xy")));
        assert!(c.contains(&word("xY")));
        assert!(!c.contains(&word("x")));
    }

    #[test]
    fn hull_of_conjugated_loop() {
        let c = core_of(&["xyX"]);
        assert_eq!((c.num_vertices(), c.num_edges()), (2, 2));
        let h = c.hull_core();
        assert_eq!(
            (h.num_vertices(), h.num_edges(), h.basepoint()),
            (1, 1, None)
        );
        assert_eq!(h, core_of(&["y"]).hull_core());
    }

    #[test]
    fn hull_of_trivial_is_empty() {
        let t = core_of(&[]);
        assert_eq!(t, CoreGraph::trivial(2));
        assert!(t.hull_core().is_empty());
        assert_eq!(t.hull_core().reduced_rank().unwrap(), 0);
    }

    #[test]
    fn reduced_rank_examples() {
        assert_eq!(CoreGraph::rose(2).reduced_rank().unwrap(), 1);
        assert_eq!(core_of(&["x"]).reduced_rank().unwrap(), 0);
        assert_eq!(core_of(&[]).reduced_rank().unwrap(), 0);
    }

    #[test]
    fn reduced_rank_rejects_disconnected() {
        let g = CoreGraph::raw(
            2,
            2,
            &[
                Edge {
                    source: 0,
                    target: 0,
                    label: 1,
                },
                Edge {
                    source: 1,
                    target: 1,
                    label: 1,
                },
            ],
            None,
        )
        .unwrap();
        assert_eq!(g.reduced_rank(), Err(Error::Disconnected));
        assert!(CoreGraph::from_edges(2, 2, &[], None).is_err());
    }

    #[test]
    fn from_edges_rejects_unfolded() {
        let err = CoreGraph::from_edges(
            2,
            2,
            &[
                Edge {
                    source: 0,
                    target: 0,
                    label: 1,
                },
                Edge {
                    source: 0,
                    target: 1,
                    label: 1,
                },
            ],
            Some(0),
        );
        assert!(matches!(err, Err(Error::NotFolded { .. })));
    }

    #[test]
    fn finite_index_examples() {
        assert_eq!(CoreGraph::rose(2).finite_index(), Index::Finite(1));
        assert_eq!(core_of(&["x"]).finite_index(), Index::Infinite);
        // x swaps the two sheets, y fixes them
        let double = CoreGraph::from_edges(
            2,
            2,
            &[
                Edge {
                    source: 0,
                    target: 1,
                    label: 1,
                },
                Edge {
                    source: 1,
                    target: 0,
                    label: 1,
                },
                Edge {
                    source: 0,
                    target: 0,
                    label: 2,
                },
                Edge {
                    source: 1,
                    target: 1,
                    label: 2,
                },
            ],
            Some(0),
        )
        .unwrap();
        assert_eq!(double.finite_index(), Index::Finite(2));
        assert_eq!(double.reduced_rank().unwrap(), 2);
        let basis = double.basis_words();
        assert_eq!(basis.len(), 3);
        for w in &basis {
            assert!(double.contains(w));
        }
        assert_eq!(LabeledGraph::wedge(2, &basis).fold().unwrap(), double);
    }

    #[test]
    fn conjugate_examples() {
        let y = core_of(&["y"]);
        assert_eq!(y.conjugate(&word("x")).unwrap(), core_of(&["xyX"]));
        assert_eq!(y.conjugate(&word("")).unwrap(), y);
        assert_eq!(y.conjugate(&word("x")).unwrap().hull_core(), y.hull_core());
    }

    #[test]
    fn basis_of_rose_and_loop() {
        let mut b: Vec<String> = CoreGraph::rose(2)
            .basis_words()
            .iter()
            .map(|w| w.to_string())
            .collect();
        b.sort();
        assert_eq!(b, vec!["x", "y"]);
        let b: Vec<String> = core_of(&["x"])
            .basis_words()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(b, vec!["x"]);
    }

    #[test]
    fn canonical_numbering_makes_equality_isomorphism() {
        // same graph, different generator order and spelling
        let a = core_of(&["xy", "xY"]);
        let b = core_of(&["xY", "xyyX", "xy"]);
        assert_eq!(a, b);
        let h1 = core_of(&["yxY", "yyy"]).hull_core();
        let h2 = core_of(&["Yxy", "yyy"]).hull_core();
        assert_eq!(h1, h2);
    }
}
