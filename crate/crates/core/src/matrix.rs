//! Exact integer matrices: products with overflow detection, permutation
//! actions, 2x2 block splits and fraction-free rank.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![1; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidArgument("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn adjacency(g: &Graph) -> Self {
        IntMatrix::from_fn(g.n(), g.n(), |i, j| g.has_edge(i, j) as i64)
    }

    /// Permutation matrix with `P[p(v)][v] = 1`, so that `(P x)_{p(v)} = x_v`.
    pub fn permutation(p: &Permutation) -> Self {
        let mut m = IntMatrix::zeros(p.len(), p.len());
        for v in 0..p.len() {
            m[(p.apply(v), v)] = 1;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    /// Interprets a symmetric 0/1 matrix with zero diagonal as a graph.
    pub fn to_graph(&self) -> Result<Graph> {
        if !self.is_square() {
            return Err(Error::Construction(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        if let Some(i) = (0..self.rows).find(|&i| self[(i, i)] != 0) {
            return Err(Error::Construction(format!("non-zero diagonal entry at {i}")));
        }
        if let Some(&x) = self.data.iter().find(|&&x| x != 0 && x != 1) {
            return Err(Error::Construction(format!("entry {x} is not 0/1")));
        }
        if !self.is_symmetric() {
            return Err(Error::Construction("matrix is not symmetric".into()));
        }
        Ok(Graph::from_fn(self.rows, |i, j| self[(i, j)] == 1))
    }

    fn same_shape(&self, other: &IntMatrix, op: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::InvalidArgument(format!(
                "{op}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_shape(other, "add")?;
        self.zip_with(other, i64::checked_add)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        self.same_shape(other, "sub")?;
        self.zip_with(other, i64::checked_sub)
    }

    fn zip_with(&self, other: &IntMatrix, f: fn(i64, i64) -> Option<i64>) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, c: i64) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|&a| a.checked_mul(c).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self - c I`.
    pub fn shift_diagonal(&self, c: i64) -> Result<IntMatrix> {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] = m[(i, i)].checked_sub(c).ok_or(Error::Overflow)?;
        }
        Ok(m)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::InvalidArgument(format!(
                "mul: {}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.checked_mul(other[(k, j)]).ok_or(Error::Overflow)?;
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = cell.checked_add(prod).ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> Result<IntMatrix> {
        self.mul(self)
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> IntMatrix {
        assert!(r0 <= r1 && r1 <= self.rows && c0 <= c1 && c1 <= self.cols);
        IntMatrix::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn split(&self, t: usize) -> Result<BlockSplit> {
        if !self.is_square() || t > self.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot split a {}x{} matrix at {t}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        Ok(BlockSplit {
            t,
            m11: self.submatrix(0, t, 0, t),
            m12: self.submatrix(0, t, t, n),
            m21: self.submatrix(t, n, 0, t),
            m22: self.submatrix(t, n, t, n),
        })
    }

    pub fn off_diagonal_values(&self) -> Vec<i64> {
        let mut values: Vec<i64> = (0..self.rows)
            .flat_map(|i| (0..self.cols).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|ij| self[ij])
            .collect();
        values.sort_unstable();
        values.dedup();
        values
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;

    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// The four blocks of a square matrix split after its first `t` rows and columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSplit {
    pub t: usize,
    pub m11: IntMatrix,
    pub m12: IntMatrix,
    pub m21: IntMatrix,
    pub m22: IntMatrix,
}

impl BlockSplit {
    pub fn join(&self) -> IntMatrix {
        let n = self.t + self.m22.rows();
        let t = self.t;
        IntMatrix::from_fn(n, n, |i, j| match (i < t, j < t) {
            (true, true) => self.m11[(i, j)],
            (true, false) => self.m12[(i, j - t)],
            (false, true) => self.m21[(i - t, j)],
            (false, false) => self.m22[(i - t, j - t)],
        })
    }
}

/// `P M`: row `v` of `m` moves to row `p(v)`.
pub fn apply_perm_left(p: &Permutation, m: &IntMatrix) -> Result<IntMatrix> {
    if p.len() != m.rows() {
        return Err(Error::InvalidArgument(format!(
            "permutation of size {} acting on {} rows",
            p.len(),
            m.rows()
        )));
    }
    let inv = p.inverse();
    Ok(IntMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(inv.apply(i), j)]))
}

/// `M P`: column `p(v)` of `m` moves to column `v`.
pub fn apply_perm_right(m: &IntMatrix, p: &Permutation) -> Result<IntMatrix> {
    if p.len() != m.cols() {
        return Err(Error::InvalidArgument(format!(
            "permutation of size {} acting on {} columns",
            p.len(),
            m.cols()
        )));
    }
    Ok(IntMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, p.apply(j))]))
}

/// `P M P^T`, which is `P M P` whenever `p` is an involution.
pub fn conjugate(p: &Permutation, m: &IntMatrix) -> Result<IntMatrix> {
    if !m.is_square() || p.len() != m.rows() {
        return Err(Error::InvalidArgument(format!(
            "permutation of size {} cannot conjugate a {}x{} matrix",
            p.len(),
            m.rows(),
            m.cols()
        )));
    }
    let inv = p.inverse();
    Ok(IntMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        m[(inv.apply(i), inv.apply(j))]
    }))
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn exact_rank(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(m[(i, j)])).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot_row);
        let (top, bottom) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in bottom.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = (&row[j] * pivot - &lead * &pivot_row[j]) / &prev;
                row[j] = v;
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{lattice_graph, triangular_graph};
    use proptest::prelude::*;

    fn c4() -> IntMatrix {
        IntMatrix::adjacency(&lattice_graph(2).unwrap())
    }

    #[test]
    fn square_of_c4() {
        // C4 as 0-1-3-2-0 in lattice order
        let sq = c4().square().unwrap();
        let expected = IntMatrix::from_rows(&[
            vec![2, 0, 0, 2],
            vec![0, 2, 2, 0],
            vec![0, 2, 2, 0],
            vec![2, 0, 0, 2],
        ])
        .unwrap();
        assert_eq!(sq, expected);
    }

    #[test]
    fn identity_is_neutral() {
        let m = IntMatrix::adjacency(&lattice_graph(3).unwrap());
        assert_eq!(m.mul(&IntMatrix::identity(9)).unwrap(), m);
        assert!(matches!(
            m.mul(&IntMatrix::identity(4)),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn triangular_7_srg_identity() {
        let m = IntMatrix::adjacency(&triangular_graph(7).unwrap());
        let i = IntMatrix::identity(21);
        let j = IntMatrix::ones(21, 21);
        let rhs = i
            .scale(10)
            .unwrap()
            .add(&m.scale(5).unwrap())
            .unwrap()
            .add(&j.sub(&i).unwrap().sub(&m).unwrap().scale(4).unwrap())
            .unwrap();
        assert_eq!(m.square().unwrap(), rhs);
    }

    #[test]
    fn overflow_detected() {
        let m = IntMatrix::from_rows(&[vec![i64::MAX, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.square(), Err(Error::Overflow));
    }

    #[test]
    fn ranks() {
        assert_eq!(exact_rank(&IntMatrix::ones(3, 3)), 1);
        assert_eq!(exact_rank(&IntMatrix::identity(5)), 5);
        assert_eq!(exact_rank(&IntMatrix::zeros(4, 2)), 0);
        let m = IntMatrix::adjacency(&triangular_graph(7).unwrap());
        assert_eq!(exact_rank(&m.shift_diagonal(-2).unwrap()), 7);
        let m = IntMatrix::from_rows(&[vec![0, 2, 4], vec![0, 1, 2], vec![1, 0, 0]]).unwrap();
        assert_eq!(exact_rank(&m), 2);
    }

    #[test]
    fn permutation_actions_match_matrix_products() {
        let g = lattice_graph(3).unwrap();
        let m = IntMatrix::adjacency(&g);
        let p = Permutation::new(vec![3, 0, 1, 2, 8, 4, 5, 7, 6]).unwrap();
        let pm = IntMatrix::permutation(&p);
        assert_eq!(apply_perm_left(&p, &m).unwrap(), pm.mul(&m).unwrap());
        assert_eq!(apply_perm_right(&m, &p).unwrap(), m.mul(&pm).unwrap());
        assert_eq!(
            conjugate(&p, &m).unwrap(),
            pm.mul(&m).unwrap().mul(&pm.transpose()).unwrap()
        );
        assert_eq!(conjugate(&Permutation::identity(9), &m).unwrap(), m);
        let inv = crate::families::lattice_transpose(3);
        assert_eq!(apply_perm_left(&inv, &apply_perm_left(&inv, &m).unwrap()).unwrap(), m);
    }

    #[test]
    fn conjugate_block_form() {
        let m = IntMatrix::adjacency(&triangular_graph(6).unwrap());
        let p11 = Permutation::new(vec![2, 1, 0, 4, 3]).unwrap();
        let p = p11.lift(&[0, 1, 2, 3, 4], 15).unwrap();
        let conj = conjugate(&p, &m).unwrap().split(5).unwrap();
        let s = m.split(5).unwrap();
        let p11m = IntMatrix::permutation(&p11);
        assert_eq!(conj.m11, p11m.mul(&s.m11).unwrap().mul(&p11m).unwrap());
        assert_eq!(conj.m12, p11m.mul(&s.m12).unwrap());
        assert_eq!(conj.m21, s.m21.mul(&p11m).unwrap());
        assert_eq!(conj.m22, s.m22);
    }

    fn arb_symmetric(max_n: usize) -> impl Strategy<Value = IntMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(0i64..2, n * n).prop_map(move |bits| {
                IntMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        0
                    } else {
                        bits[i.min(j) * n + i.max(j)]
                    }
                })
            })
        })
    }

    proptest! {
        #[test]
        fn split_join_round_trip(m in arb_symmetric(12), t_frac in 0.0f64..=1.0) {
            let t = (t_frac * m.rows() as f64).round() as usize;
            prop_assert_eq!(m.split(t).unwrap().join(), m);
        }

        #[test]
        fn conjugated_square(m in arb_symmetric(10), seed in any::<u64>()) {
            let n = m.rows();
            let mut image: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                image.swap(i, (s >> 33) as usize % (i + 1));
            }
            let p = Permutation::new(image).unwrap();
            let lhs = conjugate(&p, &m).unwrap().square().unwrap();
            let rhs = conjugate(&p, &m.square().unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
