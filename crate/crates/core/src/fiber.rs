//! Fiber products of core graphs, intersections, and the product
//! `N(H, K) = Σ rk(H ∩ gKg⁻¹)` over double cosets `HgK`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::stallings::{io::write_dot, CoreGraph, Edge, LabeledGraph, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductComponent {
    /// Indices into [`ProductGraph::vertices`].
    pub vertices: Vec<usize>,
    /// Indices into [`ProductGraph::edges`].
    pub edges: Vec<usize>,
}

impl ProductComponent {
    /// `max(E - V, 0)`.
    pub fn reduced_rank(&self) -> usize {
        self.edges.len().saturating_sub(self.vertices.len())
    }
}

/// The part of `A ×_rose B` reachable from matched edge pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    pub rank: usize,
    pub vertices: Vec<(usize, usize)>,
    pub edges: Vec<Edge>,
    pub components: Vec<ProductComponent>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub total: usize,
    /// Components with `E < V`.
    pub trees: usize,
    /// Components with `E = V` (a single cycle).
    pub cycles: usize,
    /// Components with `E > V`.
    pub positive: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShncMargin {
    pub product: usize,
    pub bound: usize,
}

impl ShncMargin {
    pub fn holds(&self) -> bool {
        self.product <= self.bound
    }
}

fn check_ranks(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::BasisMismatch { left: a, right: b });
    }
    Ok(())
}

/// Explores one component of the product from `seed`, appending to `p`.
fn explore(
    a: &CoreGraph,
    b: &CoreGraph,
    seed: (usize, usize),
    index: &mut HashMap<(usize, usize), usize>,
    p: &mut ProductGraph,
) {
    let basis = a.basis();
    let mut component = ProductComponent {
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    let mut queue = VecDeque::new();
    let mut visit = |pair: (usize, usize),
                     p: &mut ProductGraph,
                     queue: &mut VecDeque<(usize, usize)>,
                     component: &mut ProductComponent| {
        *index.entry(pair).or_insert_with(|| {
            p.vertices.push(pair);
            component.vertices.push(p.vertices.len() - 1);
            queue.push_back(pair);
            p.vertices.len() - 1
        })
    };
    visit(seed, p, &mut queue, &mut component);
    while let Some((u, v)) = queue.pop_front() {
        let here = visit((u, v), p, &mut queue, &mut component);
        for l in basis.generators() {
            if let (Some(u2), Some(v2)) = (a.follow(u, l), b.follow(v, l)) {
                let there = visit((u2, v2), p, &mut queue, &mut component);
                p.edges.push(Edge {
                    source: here,
                    target: there,
                    label: l.generator(),
                });
                component.edges.push(p.edges.len() - 1);
            }
            if let (Some(u2), Some(v2)) = (a.follow(u, l.inverse()), b.follow(v, l.inverse())) {
                visit((u2, v2), p, &mut queue, &mut component);
            }
        }
    }
    p.components.push(component);
}

/// Fiber product over the rose. Only vertices incident to a matched edge pair
/// appear; components are materialized one at a time by breadth-first search.
pub fn fiber_product(a: &CoreGraph, b: &CoreGraph) -> Result<ProductGraph> {
    check_ranks(a.rank(), b.rank())?;
    let mut p = ProductGraph {
        rank: a.rank(),
        vertices: Vec::new(),
        edges: Vec::new(),
        components: Vec::new(),
    };
    let mut index = HashMap::new();
    let b_edges = b.edges();
    for ea in a.edges() {
        for eb in b_edges.iter().filter(|eb| eb.label == ea.label) {
            let seed = (ea.source, eb.source);
            if !index.contains_key(&seed) {
                explore(a, b, seed, &mut index, &mut p);
            }
        }
    }
    Ok(p)
}

pub fn component_census(p: &ProductGraph) -> Census {
    let mut census = Census {
        total: p.components.len(),
        trees: 0,
        cycles: 0,
        positive: 0,
    };
    for c in &p.components {
        match c.edges.len().cmp(&c.vertices.len()) {
            std::cmp::Ordering::Less => census.trees += 1,
            std::cmp::Ordering::Equal => census.cycles += 1,
            std::cmp::Ordering::Greater => census.positive += 1,
        }
    }
    census
}

/// Sum of reduced ranks of the components.
pub fn product_graph_rank(p: &ProductGraph) -> usize {
    p.components.iter().map(|c| c.reduced_rank()).sum()
}

/// `N(H, K)` via the fiber product of hull-cores.
pub fn product_rank(h: &Subgroup, k: &Subgroup) -> Result<usize> {
    let p = fiber_product(h.hull(), k.hull())?;
    Ok(product_graph_rank(&p))
}

/// `(N(H, K), rk(H)·rk(K))`.
pub fn shnc_margin(h: &Subgroup, k: &Subgroup) -> Result<ShncMargin> {
    Ok(ShncMargin {
        product: product_rank(h, k)?,
        bound: h.reduced_rank() * k.reduced_rank(),
    })
}

/// `H ∩ K`, read from the component of the basepoint pair in the product of cores.
pub fn intersection(h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    check_ranks(h.rank(), k.rank())?;
    let (a, b) = (h.core(), k.core());
    let seed = (a.basepoint().unwrap(), b.basepoint().unwrap());
    let mut p = ProductGraph {
        rank: a.rank(),
        vertices: Vec::new(),
        edges: Vec::new(),
        components: Vec::new(),
    };
    explore(a, b, seed, &mut HashMap::new(), &mut p);
    let mut raw = LabeledGraph::new(a.rank());
    for _ in &p.vertices {
        raw.add_vertex();
    }
    for e in &p.edges {
        raw.add_edge(e.source, e.target, e.label);
    }
    raw.set_basepoint(Some(0));
    Subgroup::from_core(&raw.fold()?)
}

pub fn component_to_dot(p: &ProductGraph, component: usize) -> String {
    let c = &p.components[component];
    let local: HashMap<usize, usize> = c
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i))
        .collect();
    let labels: Vec<String> = c
        .vertices
        .iter()
        .map(|&v| format!("({},{})", p.vertices[v].0, p.vertices[v].1))
        .collect();
    let edges: Vec<Edge> = c
        .edges
        .iter()
        .map(|&e| {
            let e = p.edges[e];
            Edge {
                source: local[&e.source],
                target: local[&e.target],
                label: e.label,
            }
        })
        .collect();
    write_dot(
        &format!("component{component}"),
        p.rank,
        &labels,
        &edges,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Basis;

    fn b2() -> Basis {
        Basis::new(2).unwrap()
    }

    fn sg(gens: &[&str]) -> Subgroup {
        Subgroup::parse(b2(), gens).unwrap()
    }

    #[test]
    fn rose_is_terminal() {
        let c = sg(&["xy", "yyX", "xxx"]);
        let rose = CoreGraph::rose(2).hull_core();
        let p = fiber_product(&rose, c.hull()).unwrap();
        assert_eq!(p.components.len(), 1);
        assert_eq!(p.vertices.len(), c.hull().num_vertices());
        assert_eq!(p.edges.len(), c.hull().num_edges());
        let census = component_census(&p);
        assert_eq!((census.total, census.trees), (1, 0));
    }

    #[test]
    fn disjoint_labels_give_empty_product() {
        let p = fiber_product(sg(&["x"]).hull(), sg(&["y"]).hull()).unwrap();
        assert!(p.vertices.is_empty());
        assert_eq!(
            component_census(&p),
            Census {
                total: 0,
                trees: 0,
                cycles: 0,
                positive: 0
            }
        );
    }

    #[test]
    fn product_rank_examples() {
        assert_eq!(product_rank(&sg(&["x"]), &sg(&["y"])).unwrap(), 0);
        let k = sg(&["xy", "xY", "yyX"]);
        assert_eq!(
            product_rank(&Subgroup::full(b2()), &k).unwrap(),
            k.reduced_rank()
        );
        let m = shnc_margin(&Subgroup::full(b2()), &Subgroup::full(b2())).unwrap();
        assert_eq!((m.product, m.bound), (1, 1));
        let m = shnc_margin(&sg(&["x"]), &k).unwrap();
        assert_eq!((m.product, m.bound), (0, 0));
    }

    #[test]
    fn rank_mismatch() {
        let h3 = Subgroup::full(Basis::new(3).unwrap());
        assert!(matches!(
            product_rank(&sg(&["x"]), &h3),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn intersection_examples() {
        let i = intersection(&sg(&["x"]), &sg(&["xx"])).unwrap();
        assert_eq!(i.core(), sg(&["xx"]).core());
        let k = sg(&["xy", "Yx"]);
        let i = intersection(&Subgroup::full(b2()), &k).unwrap();
        assert_eq!(i.core(), k.core());
        let t = intersection(&sg(&["x"]), &sg(&["y"])).unwrap();
        assert!(t.is_trivial());
    }

    #[test]
    fn dot_export_of_component() {
        let p = fiber_product(sg(&["x", "y"]).hull(), sg(&["x"]).hull()).unwrap();
        let dot = component_to_dot(&p, 0);
        assert!(dot.contains("(0,0)"));
        assert_eq!(dot.matches("->").count(), 1);
    }
}
