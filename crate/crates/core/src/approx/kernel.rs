use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cylinders::WeightTable;
use crate::error::{Error, Result};
use crate::rational::{lcm_of_denominators, Q};
use crate::realize::{matching_system_for, WeightSystem};

/// Integer basis of the kernel of an integer matrix, by fraction-free
/// Gauss–Jordan elimination.
///
/// After elimination every pivot equals the last pivot `d`, so for each free
/// column `f` the vector with `d` at `f` and `-R[i][f]` at pivot `i` spans
/// one kernel direction.
#[allow(clippy::needless_range_loop)]
pub fn kernel_basis(matrix: &[Vec<BigInt>], columns: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = matrix
        .iter()
        .filter(|row| row.iter().any(|a| !a.is_zero()))
        .cloned()
        .collect();
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..columns {
        if row == rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for i in 0..rows {
            if i == row {
                continue;
            }
            let factor = m[i][col].clone();
            for j in 0..columns {
                if j == col {
                    continue;
                }
                let num = &pivot * &m[i][j] - &factor * &m[row][j];
                let (quo, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "fraction-free step must divide exactly");
                m[i][j] = quo;
            }
            m[i][col] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(col);
        row += 1;
    }
    let mut is_pivot = vec![false; columns];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..columns)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigInt::zero(); columns];
            v[f] = prev.clone();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = -m[i][f].clone();
            }
            let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in v.iter_mut() {
                    *x /= &g;
                }
            }
            v
        })
        .collect()
}

/// Solves `G c = b` for a nonsingular rational matrix.
#[allow(clippy::needless_range_loop)]
fn solve(mut g: Vec<Vec<Q>>, mut b: Vec<Q>) -> Vec<Q> {
    let n = b.len();
    for col in 0..n {
        let p = (col..n)
            .find(|&i| !g[i][col].is_zero())
            .expect("Gram matrix of independent vectors is nonsingular");
        g.swap(col, p);
        b.swap(col, p);
        let pivot = g[col][col].clone();
        for i in 0..n {
            if i == col || g[i][col].is_zero() {
                continue;
            }
            let f = &g[i][col] / &pivot;
            for j in col..n {
                let sub = &f * &g[col][j];
                g[i][j] -= sub;
            }
            let sub = &f * &b[col];
            b[i] -= sub;
        }
    }
    (0..n).map(|i| &b[i] / &g[i][i]).collect()
}

/// Orthogonal projection of `u` onto the span of `basis`.
fn project(basis: &[Vec<BigInt>], u: &[Q]) -> Vec<Q> {
    let k = basis.len();
    let w: Vec<Vec<Q>> = basis
        .iter()
        .map(|v| v.iter().map(|x| Q::from_integer(x.clone())).collect())
        .collect();
    let dot = |a: &[Q], b: &[Q]| a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y);
    let gram: Vec<Vec<Q>> = (0..k)
        .map(|i| (0..k).map(|j| dot(&w[i], &w[j])).collect())
        .collect();
    let rhs: Vec<Q> = w.iter().map(|wi| dot(wi, u)).collect();
    let c = solve(gram, rhs);
    let mut v = vec![Q::zero(); u.len()];
    for (ci, wi) in c.iter().zip(&w) {
        for (vj, x) in v.iter_mut().zip(wi) {
            *vj += ci * x;
        }
    }
    v
}

/// Target vector near the kernel of an integer matrix, with a max-norm tolerance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelProblem {
    matrix: Vec<Vec<i64>>,
    target: Vec<Q>,
    tolerance: Q,
}

impl KernelProblem {
    pub fn new(matrix: Vec<Vec<i64>>, target: Vec<Q>, tolerance: Q) -> Result<Self> {
        if !tolerance.is_positive() {
            return Err(Error::InvalidArgument("tolerance must be positive".into()));
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != target.len()) {
            return Err(Error::InvalidArgument(format!(
                "matrix row has {} columns, target has {}",
                row.len(),
                target.len()
            )));
        }
        if target.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidArgument(
                "target has a negative coordinate".into(),
            ));
        }
        Ok(KernelProblem {
            matrix,
            target,
            tolerance,
        })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn target(&self) -> &[Q] {
        &self.target
    }

    pub fn tolerance(&self) -> &Q {
        &self.tolerance
    }
}

/// Max-norm distance.
pub fn max_norm_distance(a: &[Q], b: &[Q]) -> Q {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(Q::zero)
}

/// A nonnegative rational `v` with `A·v = 0` and `‖u - v‖∞ < ε`, zero wherever
/// `u` is zero.
///
/// The target is projected orthogonally onto the kernel of `A` restricted to
/// the support of `u`. If the projection has a negative coordinate, the most
/// negative one is forced to zero and the projection repeated on the smaller
/// support.
pub fn rational_kernel_point(p: &KernelProblem) -> Result<Vec<Q>> {
    let n = p.target.len();
    let mut support: Vec<usize> = (0..n).filter(|&j| p.target[j].is_positive()).collect();
    loop {
        let mut v = vec![Q::zero(); n];
        if support.is_empty() {
            if p.target.iter().all(|x| x.is_zero()) {
                return Ok(v);
            }
            return Err(Error::Infeasible);
        }
        let sub: Vec<Vec<BigInt>> = p
            .matrix
            .iter()
            .map(|row| support.iter().map(|&j| BigInt::from(row[j])).collect())
            .collect();
        let basis = kernel_basis(&sub, support.len());
        if basis.is_empty() {
            return Err(Error::Infeasible);
        }
        let u_s: Vec<Q> = support.iter().map(|&j| p.target[j].clone()).collect();
        let v_s = project(&basis, &u_s);
        let most_negative = v_s
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_negative())
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i);
        if let Some(i) = most_negative {
            support.remove(i);
            continue;
        }
        for (&j, x) in support.iter().zip(v_s) {
            v[j] = x;
        }
        let achieved = max_norm_distance(&p.target, &v);
        if achieved >= p.tolerance {
            return Err(Error::ToleranceNotMet {
                achieved: achieved.to_string(),
                tolerance: p.tolerance.to_string(),
            });
        }
        return Ok(v);
    }
}

/// `(M·v, M)` with `M` the least common denominator of `v`.
pub fn integerize_vector(v: &[Q]) -> (Vec<BigInt>, BigInt) {
    let m = lcm_of_denominators(v.iter());
    let scaled = v
        .iter()
        .map(|x| (x * Q::from_integer(m.clone())).to_integer())
        .collect();
    (scaled, m)
}

/// Scales an admissible rational table to the smallest integral weight system.
pub fn integerize(table: &WeightTable) -> Result<(WeightSystem, u64)> {
    let (_, m) = integerize_vector(&table.entries().values().cloned().collect::<Vec<_>>());
    let scaled = table.scaled(&Q::from_integer(m.clone()))?;
    let m = m
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("scale {m} out of range")))?;
    Ok((WeightSystem::from_table(&scaled)?, m))
}

/// Replaces a nearly admissible table by an exactly admissible one on the same
/// support, within `tolerance` in every entry.
pub fn approximate_table(table: &WeightTable, tolerance: &Q) -> Result<WeightTable> {
    let columns: Vec<_> = table.entries().keys().cloned().collect();
    let system = matching_system_for(table.basis(), table.radius(), columns);
    let target = system.vector_of(table).expect("columns cover the support");
    let problem = KernelProblem::new(system.matrix.clone(), target, tolerance.clone())?;
    let v = rational_kernel_point(&problem)?;
    system.table_of(&v)
}
