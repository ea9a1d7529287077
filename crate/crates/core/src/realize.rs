//! Realizing admissible integral weight systems by finite unions of counting
//! currents.
//!
//! Given weights `θ(T)` on round-graphs at the identity that satisfy every
//! matching equation, [`realize`] builds the quotient of an SC-graph: one
//! vertex per copy `(T, i)`, `1 ≤ i ≤ θ(T)`, and for each generator `u` and
//! lens class `J` a bijection between the copies with `T ∩ L = J` and those
//! with `(uT) ∩ L = J`. Each connected component is the hull-core of a
//! subgroup, and the counting current of their union takes the value `θ(T)`
//! on the cylinder of `T`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::cylinders::{
    cylinder_table, enumerate_round_graphs, EnumerationLimits, Lens, RationalCurrent, RoundGraph,
    WeightTable,
};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::stallings::{io::write_dot, CoreGraph, Edge, Subgroup};
use crate::words::Basis;

/// Nonnegative integer weights on round-graphs satisfying the matching equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    basis: Basis,
    radius: usize,
    weights: BTreeMap<RoundGraph, u64>,
}

impl WeightSystem {
    /// Checks integrality, positivity of at least one weight, and admissibility.
    pub fn from_table(table: &WeightTable) -> Result<Self> {
        let mut weights = BTreeMap::new();
        for (t, v) in table.entries() {
            if !v.is_integer() {
                return Err(Error::InvalidWeightSystem(format!(
                    "weight {v} at {t} is not an integer"
                )));
            }
            let w = v.to_integer().to_u64().ok_or_else(|| {
                Error::InvalidWeightSystem(format!("weight {v} at {t} out of range"))
            })?;
            weights.insert(t.clone(), w);
        }
        let system = WeightSystem {
            basis: table.basis(),
            radius: table.radius(),
            weights,
        };
        if system.weights.is_empty() {
            return Err(Error::InvalidWeightSystem("all weights are zero".into()));
        }
        system.check_admissible()?;
        Ok(system)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn weights(&self) -> &BTreeMap<RoundGraph, u64> {
        &self.weights
    }

    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn to_table(&self) -> WeightTable {
        let mut t = WeightTable::new(self.basis, self.radius);
        for (g, &w) in &self.weights {
            t.add(g.clone(), Q::from_integer(BigInt::from(w)))
                .expect("same shape");
        }
        t
    }

    fn check_admissible(&self) -> Result<()> {
        let table = self.to_table();
        match crate::cylinders::check_matching(&table).into_iter().next() {
            None => Ok(()),
            Some(v) => Err(Error::Inadmissible {
                generator: v.generator,
                lens: v.lens.to_string(),
                lhs: v.lhs.to_string(),
                rhs: v.rhs.to_string(),
            }),
        }
    }
}

/// The matching equations as an integer matrix: one row per `(u, J)`, one
/// column per round-graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingSystem {
    pub basis: Basis,
    pub radius: usize,
    pub columns: Vec<RoundGraph>,
    pub rows: Vec<(usize, Lens)>,
    pub matrix: Vec<Vec<i64>>,
}

impl MatchingSystem {
    pub fn column_index(&self, t: &RoundGraph) -> Option<usize> {
        self.columns.binary_search(t).ok()
    }

    /// `A·x`.
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        assert_eq!(x.len(), self.columns.len());
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, _)| **a != 0)
                    .fold(Q::zero(), |acc, (a, v)| {
                        acc + v * Q::from_integer((*a).into())
                    })
            })
            .collect()
    }

    /// Column vector of a table; `None` if the table has support outside the columns.
    pub fn vector_of(&self, t: &WeightTable) -> Option<Vec<Q>> {
        let mut x = vec![Q::zero(); self.columns.len()];
        for (g, v) in t.entries() {
            x[self.column_index(g)?] = v.clone();
        }
        Some(x)
    }

    pub fn table_of(&self, x: &[Q]) -> Result<WeightTable> {
        let mut t = WeightTable::new(self.basis, self.radius);
        for (g, v) in self.columns.iter().zip(x) {
            t.add(g.clone(), v.clone())?;
        }
        Ok(t)
    }
}

/// Matching rows restricted to the given columns (rows vanishing on them are omitted).
pub fn matching_system_for(
    basis: Basis,
    radius: usize,
    mut columns: Vec<RoundGraph>,
) -> MatchingSystem {
    columns.sort();
    columns.dedup();
    let mut rows: BTreeMap<(usize, Lens), BTreeMap<usize, i64>> = BTreeMap::new();
    if radius > 0 {
        for (j, t) in columns.iter().enumerate() {
            for u in basis.generators() {
                if t.contains_letter(u) {
                    *rows
                        .entry((u.generator(), t.lens(u)))
                        .or_default()
                        .entry(j)
                        .or_insert(0) += 1;
                }
                if t.contains_letter(u.inverse()) {
                    *rows
                        .entry((u.generator(), t.translated_lens(u)))
                        .or_default()
                        .entry(j)
                        .or_insert(0) -= 1;
                }
            }
        }
    }
    let n = columns.len();
    let (keys, matrix): (Vec<_>, Vec<_>) = rows
        .into_iter()
        .map(|(key, entries)| {
            let mut row = vec![0i64; n];
            for (j, a) in entries {
                row[j] = a;
            }
            (key, row)
        })
        .unzip();
    MatchingSystem {
        basis,
        radius,
        columns,
        rows: keys,
        matrix,
    }
}

/// The full system over all of `R_r(id)`.
pub fn matching_system(
    basis: Basis,
    radius: usize,
    limits: &EnumerationLimits,
) -> Result<MatchingSystem> {
    let columns = enumerate_round_graphs(basis, radius, limits)?;
    Ok(matching_system_for(basis, radius, columns))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct QuotientVertex {
    pub graph: RoundGraph,
    /// 1-based copy index.
    pub copy: u64,
}

/// Quotient of an SC-graph by the free group: a labeled graph immersed in the rose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCGraphQuotient {
    pub basis: Basis,
    pub radius: usize,
    pub vertices: Vec<QuotientVertex>,
    pub edges: Vec<Edge>,
    pub components: Vec<Vec<usize>>,
}

impl SCGraphQuotient {
    /// Immersion, edge-presence and degree invariants.
    pub fn check_invariants(&self) -> Result<()> {
        let rank = self.basis.rank();
        let n = self.vertices.len();
        let mut out = vec![vec![0usize; rank]; n];
        let mut inc = vec![vec![0usize; rank]; n];
        for e in &self.edges {
            out[e.source][e.label - 1] += 1;
            inc[e.target][e.label - 1] += 1;
        }
        for (v, qv) in self.vertices.iter().enumerate() {
            let mut degree = 0;
            for u in self.basis.generators() {
                let g = u.generator() - 1;
                if out[v][g] > 1 || inc[v][g] > 1 {
                    return Err(Error::InvalidQuotient(format!(
                        "vertex {v} has two g{} edges in one direction",
                        g + 1
                    )));
                }
                if (out[v][g] == 1) != qv.graph.contains_letter(u)
                    || (inc[v][g] == 1) != qv.graph.contains_letter(u.inverse())
                {
                    return Err(Error::InvalidQuotient(format!(
                        "edges at vertex {v} disagree with its round-graph {}",
                        qv.graph
                    )));
                }
                degree += out[v][g] + inc[v][g];
            }
            if degree < 2 {
                return Err(Error::InvalidQuotient(format!(
                    "vertex {v} has degree {degree}"
                )));
            }
        }
        Ok(())
    }

    pub fn to_dot(&self) -> String {
        let labels: Vec<String> = self
            .vertices
            .iter()
            .map(|v| format!("{}#{}", v.graph, v.copy))
            .collect();
        write_dot("quotient", self.basis.rank(), &labels, &self.edges, None)
    }
}

fn components(n: usize, edges: &[Edge]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.source].push(e.target);
        adj[e.target].push(e.source);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &t in &adj[v] {
                if !seen[t] {
                    seen[t] = true;
                    comp.push(t);
                    stack.push(t);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Builds the quotient SC-graph for `θ`. Each `(u, J)` bijection pairs both
/// sides in sorted `(T, i)` order.
pub fn realize(theta: &WeightSystem) -> Result<SCGraphQuotient> {
    if theta.radius == 0 {
        return Err(Error::InvalidWeightSystem(
            "radius 0 carries no adjacency information; realization needs radius >= 1".into(),
        ));
    }
    theta.check_admissible()?;
    let vertices: Vec<QuotientVertex> = theta
        .weights
        .iter()
        .flat_map(|(t, &w)| {
            (1..=w).map(move |copy| QuotientVertex {
                graph: t.clone(),
                copy,
            })
        })
        .collect();
    let mut edges = Vec::new();
    for u in theta.basis.generators() {
        let mut sides: BTreeMap<Lens, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if v.graph.contains_letter(u) {
                sides.entry(v.graph.lens(u)).or_default().0.push(i);
            }
            if v.graph.contains_letter(u.inverse()) {
                sides
                    .entry(v.graph.translated_lens(u))
                    .or_default()
                    .1
                    .push(i);
            }
        }
        for (lens, (left, right)) in sides {
            if left.len() != right.len() {
                return Err(Error::Inadmissible {
                    generator: u.generator(),
                    lens: lens.to_string(),
                    lhs: left.len().to_string(),
                    rhs: right.len().to_string(),
                });
            }
            edges.extend(left.iter().zip(&right).map(|(&source, &target)| Edge {
                source,
                target,
                label: u.generator(),
            }));
        }
    }
    let components = components(vertices.len(), &edges);
    let q = SCGraphQuotient {
        basis: theta.basis,
        radius: theta.radius,
        vertices,
        edges,
        components,
    };
    q.check_invariants()?;
    Ok(q)
}

/// One counting current per component, each with coefficient 1.
pub fn decompose(q: &SCGraphQuotient) -> Result<RationalCurrent> {
    q.check_invariants()?;
    let mut current = RationalCurrent::zero(q.basis);
    let subgroups = q
        .components
        .par_iter()
        .map(|comp| component_subgroup(q, comp))
        .collect::<Result<Vec<_>>>()?;
    for h in subgroups {
        current.push(Q::from_integer(1.into()), h)?;
    }
    Ok(current)
}

/// Subgroup of a component, based at its least-signature vertex.
fn component_subgroup(q: &SCGraphQuotient, comp: &[usize]) -> Result<Subgroup> {
    let local: BTreeMap<usize, usize> = comp.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<Edge> = q
        .edges
        .iter()
        .filter(|e| local.contains_key(&e.source))
        .map(|e| Edge {
            source: local[&e.source],
            target: local[&e.target],
            label: e.label,
        })
        .collect();
    let hull = CoreGraph::from_edges(q.basis.rank(), comp.len(), &edges, None)
        .map_err(|e| Error::InvalidQuotient(e.to_string()))?;
    if !hull.is_core() {
        return Err(Error::InvalidQuotient(
            "component has a vertex of degree < 2".into(),
        ));
    }
    // canonical numbering puts the least-signature vertex at 0
    let based = hull.rebased(Some(0))?;
    let h = Subgroup::from_core(&based)?;
    debug_assert_eq!(h.hull(), &hull);
    Ok(h)
}

/// True iff the cylinder table of `c` at `θ`'s radius equals `θ` exactly.
pub fn verify_realization(theta: &WeightSystem, c: &RationalCurrent) -> Result<bool> {
    if c.basis() != theta.basis {
        return Err(Error::BasisMismatch {
            left: theta.basis.rank(),
            right: c.basis().rank(),
        });
    }
    Ok(cylinder_table(c, theta.radius)? == theta.to_table())
}
