//! Recognition of Deza and strongly regular graphs from first principles, and
//! extraction of the two children of a Deza graph.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{exact_rank, IntMatrix};

/// `(n, k, b, a)` with `b >= a`: every two distinct vertices share `a` or `b` neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DezaParameters {
    pub n: usize,
    pub k: usize,
    pub b: usize,
    pub a: usize,
}

impl DezaParameters {
    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }
}

impl fmt::Display for DezaParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.b, self.a)
    }
}

/// A restricted eigenvalue of a strongly regular graph. `exact` is set when the
/// value is an integer.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SrgEigenvalue {
    pub value: f64,
    pub exact: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
    /// Restricted eigenvalue `r >= 0`.
    pub r: SrgEigenvalue,
    /// Restricted eigenvalue `s <= 0`.
    pub s: SrgEigenvalue,
    /// Multiplicity of `r` among the restricted eigenvalues.
    pub f: usize,
    /// Multiplicity of `s`.
    pub g: usize,
}

impl SrgParameters {
    pub fn tuple(&self) -> (usize, usize, usize, usize) {
        (self.n, self.k, self.lambda, self.mu)
    }
}

impl fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// The children of a Deza graph: `a_child` joins pairs with `a` common
/// neighbours, `b_child` pairs with `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Children {
    pub a_child: Graph,
    pub b_child: Graph,
}

pub fn recognize_deza(g: &Graph) -> Result<DezaParameters> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("Deza recognition needs at least two vertices".into()));
    }
    let k = g.regular_degree().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let sq = IntMatrix::adjacency(g).square()?;
    let values = sq.off_diagonal_values();
    match values[..] {
        [a] => Ok(DezaParameters { n, k, b: a as usize, a: a as usize }),
        [a, b] => Ok(DezaParameters {
            n,
            k,
            b: b as usize,
            a: a as usize,
        }),
        _ => Err(Error::MoreThanTwoValues(values)),
    }
}

pub fn recognize_srg(g: &Graph) -> Option<SrgParameters> {
    let n = g.n();
    let k = g.regular_degree()?;
    if n < 3 || k == 0 || k + 1 == n {
        return None;
    }
    let m = IntMatrix::adjacency(g);
    let sq = m.square().ok()?;
    let mut lambda = None;
    let mut mu = None;
    for v in 0..n {
        for u in 0..v {
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            let c = sq[(u, v)];
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    let (lambda, mu) = (lambda? as i64, mu? as i64);
    let (r, s, f, g_mult) = srg_restricted_eigenvalues(&m, n as i64, k as i64, lambda, mu);
    Some(SrgParameters {
        n,
        k,
        lambda: lambda as usize,
        mu: mu as usize,
        r,
        s,
        f,
        g: g_mult,
    })
}

/// Roots of `x^2 - (lambda - mu) x - (k - mu)`; integral roots get their
/// multiplicities certified by exact rank, irrational ones (conference graphs)
/// split the restricted spectrum evenly.
fn srg_restricted_eigenvalues(
    m: &IntMatrix,
    n: i64,
    k: i64,
    lambda: i64,
    mu: i64,
) -> (SrgEigenvalue, SrgEigenvalue, usize, usize) {
    let d = lambda - mu;
    let disc = d * d + 4 * (k - mu);
    let root = integer_sqrt(disc);
    if let Some(root) = root.filter(|rt| (d + rt) % 2 == 0) {
        let (r, s) = ((d + root) / 2, (d - root) / 2);
        let mult = |theta: i64| {
            let kernel = m.rows() - exact_rank(&m.shift_diagonal(theta).expect("small entries"));
            kernel - usize::from(theta == k)
        };
        (
            SrgEigenvalue { value: r as f64, exact: Some(r) },
            SrgEigenvalue { value: s as f64, exact: Some(s) },
            mult(r),
            mult(s),
        )
    } else {
        let sq = (disc as f64).sqrt();
        let half = ((n - 1) / 2) as usize;
        (
            SrgEigenvalue { value: (d as f64 + sq) / 2.0, exact: None },
            SrgEigenvalue { value: (d as f64 - sq) / 2.0, exact: None },
            half,
            half,
        )
    }
}

pub(crate) fn integer_sqrt(x: i64) -> Option<i64> {
    if x < 0 {
        return None;
    }
    let mut r = (x as f64).sqrt() as i64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    (r * r == x).then_some(r)
}

pub fn children(g: &Graph, p: &DezaParameters) -> Result<Children> {
    if p.is_degenerate() {
        return Err(Error::ChildrenUndefined);
    }
    if g.n() != p.n {
        return Err(Error::InvalidArgument(format!(
            "parameters are for {} vertices, graph has {}",
            p.n,
            g.n()
        )));
    }
    let sq = IntMatrix::adjacency(g).square()?;
    let (a, b) = (p.a as i64, p.b as i64);
    if let Some(&x) = sq.off_diagonal_values().iter().find(|&&x| x != a && x != b) {
        return Err(Error::InvalidArgument(format!(
            "pair with {x} common neighbours does not match parameters {p}"
        )));
    }
    Ok(Children {
        a_child: Graph::from_fn(g.n(), |u, v| sq[(u, v)] == a),
        b_child: Graph::from_fn(g.n(), |u, v| sq[(u, v)] == b),
    })
}

pub fn diameter(g: &Graph) -> Result<usize> {
    let mut diam = 0;
    for v in 0..g.n() {
        for d in g.bfs_distances(v) {
            diam = diam.max(d.ok_or(Error::InfiniteDiameter)?);
        }
    }
    Ok(diam)
}

pub fn is_strictly_deza(g: &Graph) -> bool {
    recognize_deza(g).is_ok() && diameter(g) == Ok(2) && recognize_srg(g).is_none()
}

/// Both children strongly regular and at least one of them disconnected.
pub fn is_divisible_design_flag(c: &Children) -> bool {
    recognize_srg(&c.a_child).is_some()
        && recognize_srg(&c.b_child).is_some()
        && (!c.a_child.is_connected() || !c.b_child.is_connected())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn lattice_as_deza() {
        let p = recognize_deza(&lattice_graph(3).unwrap()).unwrap();
        assert_eq!(p, DezaParameters { n: 9, k: 4, b: 2, a: 1 });
    }

    #[test]
    fn recognition_errors_are_distinct() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(recognize_deza(&path), Err(Error::NotRegular));
        let two_squares = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        assert_eq!(recognize_deza(&two_squares), Err(Error::NotConnected));
        // triangular prism: 0, 1 or 2 common neighbours
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert_eq!(recognize_deza(&prism), Err(Error::MoreThanTwoValues(vec![0, 1, 2])));
        let c6 = Graph::from_fn(6, |u, v| v - u == 1 || v - u == 5);
        assert_eq!(recognize_deza(&c6), Ok(DezaParameters { n: 6, k: 2, b: 1, a: 0 }));
    }

    #[test]
    fn srg_parameters_of_families() {
        let l6 = recognize_srg(&lattice_graph(6).unwrap()).unwrap();
        assert_eq!(l6.tuple(), (36, 10, 4, 2));
        assert_eq!((l6.r.exact, l6.s.exact, l6.f, l6.g), (Some(4), Some(-2), 10, 25));
        let t8 = recognize_srg(&triangular_graph(8).unwrap()).unwrap();
        assert_eq!(t8.tuple(), (28, 12, 6, 4));
        let t7 = recognize_srg(&triangular_graph(7).unwrap()).unwrap();
        assert_eq!((t7.r.exact, t7.s.exact, t7.f, t7.g), (Some(3), Some(-2), 6, 14));
        assert!(recognize_srg(&Graph::complete(5)).is_none());
        assert!(recognize_srg(&Graph::empty(5)).is_none());
    }

    #[test]
    fn srg_trace_identity() {
        for g in [
            lattice_graph(4).unwrap(),
            triangular_graph(9).unwrap(),
            clebsch_16_10(),
            clebsch_16_5(),
        ] {
            let p = recognize_srg(&g).unwrap();
            let (r, s) = (p.r.exact.unwrap(), p.s.exact.unwrap());
            assert_eq!(p.k as i64 + p.f as i64 * r + p.g as i64 * s, 0);
            assert_eq!(p.f + p.g + 1, p.n);
        }
    }

    #[test]
    fn conference_graph_eigenvalues() {
        // the 5-cycle is the (5,2,0,1) conference graph
        let c5 = Graph::from_fn(5, |u, v| v - u == 1 || v - u == 4);
        let p = recognize_srg(&c5).unwrap();
        assert_eq!(p.tuple(), (5, 2, 0, 1));
        assert!(p.r.exact.is_none());
        assert!((p.r.value - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12);
        assert_eq!((p.f, p.g), (2, 2));
    }

    #[test]
    fn imprimitive_srg() {
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let p = recognize_srg(&two_triangles).unwrap();
        assert_eq!(p.tuple(), (6, 2, 1, 0));
        assert_eq!((p.r.exact, p.s.exact, p.f, p.g), (Some(2), Some(-1), 1, 4));
    }

    #[test]
    fn srg_children_are_graph_and_complement() {
        let g = lattice_graph(4).unwrap();
        let p = recognize_deza(&g).unwrap();
        assert!(p.is_degenerate());
        assert_eq!(children(&g, &p), Err(Error::ChildrenUndefined));
        let g = triangular_graph(7).unwrap();
        let p = recognize_deza(&g).unwrap();
        let c = children(&g, &p).unwrap();
        assert_eq!(c.b_child, g);
        assert_eq!(c.a_child, g.complement());
        assert!(!is_divisible_design_flag(&c));
    }

    #[test]
    fn divisible_design_flag_cases() {
        // K_{3,3}: complete multipartite, its complement is 2K3
        let k33 = Graph::from_fn(6, |u, v| (u < 3) != (v < 3));
        let p = recognize_deza(&k33).unwrap();
        let c = children(&k33, &p).unwrap();
        assert!(is_divisible_design_flag(&c));
        let c6 = Graph::from_fn(6, |u, v| (v - u) % 6 == 1 || (v - u) % 6 == 5);
        let path_children = Children {
            a_child: c6.clone(),
            b_child: c6.complement(),
        };
        assert!(!is_divisible_design_flag(&path_children));
    }

    #[test]
    fn diameter_and_strictness() {
        assert_eq!(diameter(&lattice_graph(2).unwrap()), Ok(2));
        assert_eq!(diameter(&Graph::empty(2)), Err(Error::InfiniteDiameter));
        assert!(!is_strictly_deza(&lattice_graph(4).unwrap()));
    }

    #[test]
    fn integer_sqrt_exactness() {
        assert_eq!(integer_sqrt(0), Some(0));
        assert_eq!(integer_sqrt(49), Some(7));
        assert_eq!(integer_sqrt(50), None);
        assert_eq!(integer_sqrt(-4), None);
    }
}
