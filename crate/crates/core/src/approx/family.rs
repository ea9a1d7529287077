//! The subgroups `G_n = ⟨x, yⁿ, yxy⁻¹, …, yⁿ⁻¹xy⁻ⁿ⁺¹⟩` and
//! `H_n = ⟨yⁿ, yxy⁻¹, …, yⁿ⁻¹xy⁻ⁿ⁺¹⟩` of the rank-2 free group, and the
//! convergence of `(1/n)·η_{H_n}` to `η_F` on cylinders.

use rayon::prelude::*;

use crate::cylinders::{cylinder_table, distance, RationalCurrent};
use crate::error::{Error, Result};
use crate::rational::Q;
use crate::stallings::Subgroup;
use crate::words::{Basis, Letter, Word};

fn family_words(n: usize) -> Result<(Basis, Vec<Word>)> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "n must be at least 2, got {n}"
        )));
    }
    let basis = Basis::new(2)?;
    let x = Word::letter(basis, Letter::new(1));
    let y = Word::letter(basis, Letter::new(2));
    let mut words = vec![y.power(n as i64)];
    for k in 1..n as i64 {
        words.push(y.power(k).mul(&x).mul(&y.power(-k)));
    }
    Ok((basis, words))
}

/// `H_n`: a y-cycle of length n with x-loops at n - 1 of its vertices.
pub fn subgroup_hn(n: usize) -> Result<Subgroup> {
    let (basis, words) = family_words(n)?;
    Subgroup::new(basis, words)
}

/// `G_n`: the normal subgroup of index n whose quotient graph is the full y-cycle
/// with an x-loop at every vertex.
pub fn subgroup_gn(n: usize) -> Result<Subgroup> {
    let (basis, mut words) = family_words(n)?;
    words.insert(0, Word::letter(basis, Letter::new(1)));
    Subgroup::new(basis, words)
}

/// `d_r((1/n)·η_{H_n}, η_F)` for each n, in input order.
pub fn convergence_run(r: usize, ns: &[usize]) -> Result<Vec<(usize, Q)>> {
    let basis = Basis::new(2)?;
    let target = cylinder_table(&RationalCurrent::counting(&Subgroup::full(basis)), r)?;
    ns.par_iter()
        .map(|&n| {
            let h = subgroup_hn(n)?;
            let scaled =
                RationalCurrent::zero(basis).with_term(Q::new(1.into(), (n as i64).into()), h)?;
            let d = distance(&cylinder_table(&scaled, r)?, &target)?;
            Ok((n, d))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};
    use crate::stallings::Index;

    #[test]
    fn hn_shapes() {
        let h2 = subgroup_hn(2).unwrap();
        let gens: Vec<String> = h2.generators().iter().map(|w| w.to_string()).collect();
        assert_eq!(gens, vec!["yy", "yxY"]);
        assert_eq!(h2.reduced_rank(), 1);
        assert_eq!(subgroup_hn(3).unwrap().reduced_rank(), 2);
        for n in 2..=8 {
            let h = subgroup_hn(n).unwrap();
            assert_eq!(h.hull().num_vertices(), n);
            assert_eq!(h.hull().num_edges(), 2 * n - 1);
            assert_eq!(h.reduced_rank(), n - 1);
        }
        assert!(subgroup_hn(1).is_err());
    }

    #[test]
    fn gn_shapes() {
        assert_eq!(subgroup_gn(2).unwrap().finite_index(), Index::Finite(2));
        assert_eq!(subgroup_gn(2).unwrap().reduced_rank(), 2);
        let g5 = subgroup_gn(5).unwrap();
        assert_eq!(g5.finite_index(), Index::Finite(5));
        assert_eq!(g5.reduced_rank(), 5);
        assert!(subgroup_gn(0).is_err());
        for n in 2..=6 {
            let g = subgroup_gn(n).unwrap();
            for w in subgroup_hn(n).unwrap().generators() {
                assert!(g.contains(w));
            }
        }
    }

    #[test]
    fn radius_one_distances() {
        let run = convergence_run(1, &[2, 4, 8]).unwrap();
        assert_eq!(run, vec![(2, q(1, 2)), (4, q(1, 4)), (8, q(1, 8))]);
        let run = convergence_run(0, &[2, 3, 7]).unwrap();
        assert!(run.iter().all(|(_, d)| *d == qi(0)));
    }
}
