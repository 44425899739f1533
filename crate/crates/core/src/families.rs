//! Graph families and the fixed vertex orderings, subgraphs and symmetries used
//! by the constructions.
//!
//! Orderings:
//! * `L2(m)`: vertex `(i, j)` is `i * m + j`; adjacent iff exactly one coordinate agrees.
//! * `T(n)`: 2-subsets `{i, j}` of `{1, .., n}` in lexicographic order; adjacent iff they meet.
//! * rook `2 x m`: vertex `(r, c)` is `r * m + c`; adjacent iff same row or same column.

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};

pub fn lattice_graph(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("lattice graph needs m >= 2, got {m}")));
    }
    Ok(Graph::from_fn(m * m, |u, v| {
        let (ui, uj) = (u / m, u % m);
        let (vi, vj) = (v / m, v % m);
        (ui == vi) != (uj == vj)
    }))
}

pub fn triangular_graph(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("triangular graph needs n >= 4, got {n}")));
    }
    let pairs = triangular_pairs(n);
    Ok(Graph::from_fn(pairs.len(), |u, v| {
        let (a, b) = pairs[u];
        let (c, d) = pairs[v];
        a == c || a == d || b == c || b == d
    }))
}

/// The strongly regular graph `(16, 10, 6, 6)`: complement of the folded 5-cube on 4-bit words.
pub fn clebsch_16_10() -> Graph {
    clebsch_16_5().complement()
}

/// The folded 5-cube `(16, 5, 0, 2)`: `u ~ v` iff `u ^ v` is a unit vector or all-ones.
pub fn clebsch_16_5() -> Graph {
    Graph::from_fn(16, |u, v| matches!(u ^ v, 1 | 2 | 4 | 8 | 15))
}

pub fn rook_2xm(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("2 x m rook graph needs m >= 2, got {m}")));
    }
    Ok(Graph::from_fn(2 * m, |u, v| u / m == v / m || u % m == v % m))
}

/// Ground-set pairs of `T(n)` in vertex order, 1-based.
pub fn triangular_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect()
}

/// Vertex index of the 2-subset `{i, j}` (1-based, any order) in `T(n)`.
pub fn triangular_vertex(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs starting with 1..i-1 come first
    let before: usize = (1..i).map(|a| n - a).sum();
    before + (j - i - 1)
}

/// Transpose `(i, j) -> (j, i)` of `L2(m)`.
pub fn lattice_transpose(m: usize) -> Permutation {
    Permutation::new((0..m * m).map(|v| (v % m) * m + v / m).collect())
        .expect("transpose is a bijection")
}

/// Central symmetry `(i, j) -> (m-1-i, m-1-j)` of `L2(m)`.
pub fn lattice_central(m: usize) -> Permutation {
    Permutation::new((0..m * m).map(|v| m * m - 1 - v).collect()).expect("reversal is a bijection")
}

/// Central symmetry `(r, c) -> (1-r, m-1-c)` of the `2 x m` rook graph.
pub fn rook_2xm_central(m: usize) -> Permutation {
    Permutation::new((0..2 * m).map(|v| 2 * m - 1 - v).collect()).expect("reversal is a bijection")
}

/// Lift of the ground reflection `i -> n+1-i` to the 2-subsets of `T(n)`.
pub fn triangular_reflection(n: usize) -> Permutation {
    let image = triangular_pairs(n)
        .into_iter()
        .map(|(i, j)| triangular_vertex(n, n + 1 - i, n + 1 - j))
        .collect();
    Permutation::new(image).expect("reflection is a bijection")
}

/// Vertices `(i, j)`, `i, j < k`, of `L2(m)` in row-major order: an induced `L2(k)`.
pub fn lattice_sublattice(m: usize, k: usize) -> Result<Vec<usize>> {
    if k == 0 || k > m {
        return Err(Error::InvalidParameter(format!("sublattice size {k} not in 1..={m}")));
    }
    Ok((0..k).flat_map(|i| (0..k).map(move |j| i * m + j)).collect())
}

/// The rows listed, in row-major order; two rows give an induced `2 x m` rook graph.
pub fn lattice_rows(m: usize, rows: &[usize]) -> Result<Vec<usize>> {
    if let Some(&r) = rows.iter().find(|&&r| r >= m) {
        return Err(Error::InvalidParameter(format!("row {r} out of range for L2({m})")));
    }
    Ok(rows.iter().flat_map(|&r| (0..m).map(move |c| r * m + c)).collect())
}

/// Induced `L2(m)` inside `T(n)`: `(a, b)` is the 2-subset `{a+1, m+b+1}`, row-major.
pub fn lattice_in_triangular(n: usize, m: usize) -> Result<Vec<usize>> {
    if m == 0 || 2 * m > n {
        return Err(Error::InvalidParameter(format!("L2({m}) does not embed this way in T({n})")));
    }
    Ok((0..m)
        .flat_map(|a| (0..m).map(move |b| triangular_vertex(n, a + 1, m + b + 1)))
        .collect())
}

/// Induced `T(k)` on the ground subset `{1, .., k}` of `T(n)`, in `T(k)` vertex order.
pub fn triangular_sub(n: usize, k: usize) -> Result<Vec<usize>> {
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!("T({k}) does not embed in T({n})")));
    }
    Ok(triangular_pairs(k)
        .into_iter()
        .map(|(i, j)| triangular_vertex(n, i, j))
        .collect())
}

/// Neighbourhood of `w = {1, 2}` in `T(n)` as a `2 x (n-2)` rook graph:
/// `(r, c)` is the 2-subset `{r+1, c+3}`.
pub fn triangular_neighbourhood_rook(n: usize) -> Result<Vec<usize>> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("T({n}) is too small")));
    }
    Ok((0..2)
        .flat_map(|r| (0..n - 2).map(move |c| triangular_vertex(n, r + 1, c + 3)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(g: &Graph) -> (Vec<usize>, Vec<usize>) {
        let mut adjacent = vec![];
        let mut non_adjacent = vec![];
        for v in 0..g.n() {
            for u in 0..v {
                let c = g.common_neighbours(u, v);
                if g.has_edge(u, v) {
                    adjacent.push(c)
                } else {
                    non_adjacent.push(c)
                }
            }
        }
        for list in [&mut adjacent, &mut non_adjacent] {
            list.sort_unstable();
            list.dedup();
        }
        (adjacent, non_adjacent)
    }

    #[test]
    fn lattice_small_cases() {
        let c4 = lattice_graph(2).unwrap();
        assert_eq!(c4.regular_degree(), Some(2));
        assert_eq!(c4.edge_count(), 4);
        assert!(matches!(lattice_graph(1), Err(Error::InvalidParameter(_))));
        for m in 3..=7 {
            let g = lattice_graph(m).unwrap();
            assert_eq!(g.n(), m * m);
            assert_eq!(g.regular_degree(), Some(2 * (m - 1)));
            assert_eq!(profile(&g), (vec![m - 2], vec![2]));
        }
    }

    #[test]
    fn triangular_profiles() {
        assert!(triangular_graph(3).is_err());
        let t4 = triangular_graph(4).unwrap();
        assert_eq!(t4.regular_degree(), Some(4));
        assert_eq!(profile(&t4), (vec![2], vec![4]));
        for n in 5..=9 {
            let g = triangular_graph(n).unwrap();
            assert_eq!(g.n(), n * (n - 1) / 2);
            assert_eq!(g.regular_degree(), Some(2 * (n - 2)));
            assert_eq!(profile(&g), (vec![n - 2], vec![4]));
        }
        let t7 = triangular_graph(7).unwrap();
        assert_eq!(t7.complement().regular_degree(), Some(10));
    }

    #[test]
    fn triangular_vertex_matches_pair_order() {
        for n in 4..9 {
            for (idx, (i, j)) in triangular_pairs(n).into_iter().enumerate() {
                assert_eq!(triangular_vertex(n, i, j), idx);
                assert_eq!(triangular_vertex(n, j, i), idx);
            }
        }
    }

    #[test]
    fn clebsch_parameters() {
        let g = clebsch_16_10();
        assert_eq!(g.regular_degree(), Some(10));
        assert_eq!(profile(&g), (vec![6], vec![6]));
        let h = clebsch_16_5();
        assert_eq!(h.regular_degree(), Some(5));
        assert_eq!(profile(&h), (vec![0], vec![2]));
    }

    #[test]
    fn rook_graphs() {
        assert_eq!(rook_2xm(2).unwrap(), lattice_graph(2).unwrap());
        let r6 = rook_2xm(6).unwrap();
        assert_eq!(r6.n(), 12);
        assert_eq!(r6.regular_degree(), Some(6));
        for m in 2..8 {
            let l = lattice_graph(m).unwrap();
            let rows = lattice_rows(m, &[0, 1]).unwrap();
            assert_eq!(l.induced(&rows), rook_2xm(m).unwrap());
        }
    }

    #[test]
    fn named_subgraphs_have_expected_shape() {
        let t7 = triangular_graph(7).unwrap();
        let h = t7.induced(&lattice_in_triangular(7, 3).unwrap());
        assert_eq!(h, lattice_graph(3).unwrap());
        let l5 = lattice_graph(5).unwrap();
        assert_eq!(l5.induced(&lattice_sublattice(5, 3).unwrap()), lattice_graph(3).unwrap());
        let t8 = triangular_graph(8).unwrap();
        assert_eq!(t8.induced(&triangular_sub(8, 6).unwrap()), triangular_graph(6).unwrap());
        let nbhd = triangular_neighbourhood_rook(8).unwrap();
        let w = triangular_vertex(8, 1, 2);
        let mut sorted = nbhd.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, t8.neighbours(w).collect::<Vec<_>>());
        assert_eq!(t8.induced(&nbhd), rook_2xm(6).unwrap());
    }

    #[test]
    fn named_symmetries_are_automorphisms() {
        for m in 2..7 {
            let l = lattice_graph(m).unwrap();
            assert!(lattice_transpose(m).is_automorphism(&l));
            assert!(lattice_central(m).is_automorphism(&l));
            assert!(rook_2xm_central(m).is_automorphism(&rook_2xm(m).unwrap()));
        }
        for n in 4..10 {
            assert!(triangular_reflection(n).is_automorphism(&triangular_graph(n).unwrap()));
        }
    }
}
