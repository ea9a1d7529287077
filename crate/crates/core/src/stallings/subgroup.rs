use crate::error::{Error, Result};
use crate::words::{Basis, Word};

use super::graph::{CoreGraph, Index, LabeledGraph};

/// A finitely generated subgroup together with its core graph and hull-core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    basis: Basis,
    generators: Vec<Word>,
    core: CoreGraph,
    hull: CoreGraph,
}

impl Subgroup {
    pub fn new(basis: Basis, generators: Vec<Word>) -> Result<Self> {
        for g in &generators {
            if g.basis() != basis {
                return Err(Error::BasisMismatch {
                    left: basis.rank(),
                    right: g.rank(),
                });
            }
        }
        let core = LabeledGraph::wedge(basis.rank(), &generators).fold()?;
        let hull = core.hull_core();
        Ok(Subgroup {
            basis,
            generators,
            core,
            hull,
        })
    }

    /// Parses generator words in text form.
    pub fn parse(basis: Basis, generators: &[&str]) -> Result<Self> {
        let words = generators
            .iter()
            .map(|s| Word::parse(basis, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(basis, words)
    }

    /// Subgroup read at the basepoint of a core graph; generators are a spanning-tree basis.
    pub fn from_core(core: &CoreGraph) -> Result<Self> {
        if core.basepoint().is_none() {
            return Err(Error::InvalidArgument(
                "subgroup needs a basepointed core".into(),
            ));
        }
        let generators = core.basis_words();
        Self::new(core.basis(), generators)
    }

    /// The whole free group.
    pub fn full(basis: Basis) -> Self {
        let generators = basis.generators().map(|l| Word::letter(basis, l)).collect();
        Self::new(basis, generators).expect("rose")
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn core(&self) -> &CoreGraph {
        &self.core
    }

    pub fn hull(&self) -> &CoreGraph {
        &self.hull
    }

    pub fn is_trivial(&self) -> bool {
        self.core.num_edges() == 0
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.core.contains(w)
    }

    pub fn reduced_rank(&self) -> usize {
        self.core.reduced_rank().expect("cores are connected")
    }

    /// Rank of the subgroup as a free group.
    pub fn free_rank(&self) -> usize {
        self.core.free_rank()
    }

    pub fn finite_index(&self) -> Index {
        self.core.finite_index()
    }

    pub fn free_basis(&self) -> Vec<Word> {
        self.core.basis_words()
    }

    /// `g H g⁻¹`.
    pub fn conjugate(&self, g: &Word) -> Result<Subgroup> {
        let generators = self
            .generators
            .iter()
            .map(|h| g.concat(h)?.concat(&g.invert()))
            .collect::<Result<Vec<_>>>()?;
        let core = self.core.conjugate(g)?;
        let hull = core.hull_core();
        Ok(Subgroup {
            basis: self.basis,
            generators,
            core,
            hull,
        })
    }
}
