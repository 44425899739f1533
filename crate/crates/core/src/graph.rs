//! Dense simple graphs, vertex permutations and ordered subgraph embeddings.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph stored as a dense symmetric adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_fn(n, |_, _| true)
    }

    /// Builds a graph from a symmetric predicate; `f` is only evaluated for `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            for u in 0..v {
                if f(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v || !present);
        self.adj[u * self.n + v] = present;
        self.adj[v * self.n + u] = present;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&b| b)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common valency if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|v| self.degree(v));
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |v| (0..v).filter(move |&u| self.has_edge(u, v)).map(move |u| (u, v)))
    }

    pub fn common_neighbours(&self, u: usize, v: usize) -> usize {
        let (ru, rv) = (self.row(u), self.row(v));
        ru.iter().zip(rv).filter(|(a, b)| **a && **b).count()
    }

    pub(crate) fn row(&self, v: usize) -> &[bool] {
        &self.adj[v * self.n..(v + 1) * self.n]
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Induced subgraph on `subset`, with vertex `i` of the result being `subset[i]`.
    pub fn induced(&self, subset: &[usize]) -> Graph {
        Graph::from_fn(subset.len(), |i, j| self.has_edge(subset[i], subset[j]))
    }

    /// Image of the graph under `p`: `u ~ v` becomes `p(u) ~ p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Graph {
        assert_eq!(p.len(), self.n, "permutation size mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(p.apply(u), p.apply(v), true);
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub(crate) fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap_or(0);
            for u in self.neighbours(v) {
                if dist[u].is_none() {
                    dist[u] = Some(d + 1);
                    queue.push_back(u);
                }
            }
        }
        dist
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {})", self.n, crate::graph6::to_graph6(self))
    }
}

/// A bijection on `{0, .., n-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for (v, &w) in image.iter().enumerate() {
            if w >= n {
                return Err(Error::InvalidArgument(format!(
                    "image of {v} is {w}, out of range for size {n}"
                )));
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::InvalidArgument(format!("{w} occurs twice in the image")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Involution that swaps each listed pair and fixes everything else.
    pub fn from_swaps(n: usize, swaps: &[(usize, usize)]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        for &(u, v) in swaps {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!("swap ({u}, {v}) out of range")));
            }
            if image[u] != u || image[v] != v {
                return Err(Error::InvalidArgument(format!("swap ({u}, {v}) overlaps another swap")));
            }
            image[u] = v;
            image[v] = u;
        }
        Permutation::new(image)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (v, &w) in self.image.iter().enumerate() {
            inv[w] = v;
        }
        Permutation { image: inv }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// `p ∘ p = id`, with `p` itself not the identity.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.image.iter().enumerate().all(|(v, &w)| self.image[w] == v)
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.image[v] == v).collect()
    }

    /// Two-element orbits `{v, p(v)}` with `v < p(v)`; meaningful for involutions.
    pub fn moved_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&v| self.image[v] > v)
            .map(|v| (v, self.image[v]))
            .collect()
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.len() == g.n()
            && g.edges().all(|(u, v)| g.has_edge(self.apply(u), self.apply(v)))
    }

    /// Extends a permutation of the positions of `subset` to the whole vertex set,
    /// fixing every vertex outside `subset`.
    pub fn lift(&self, subset: &[usize], n: usize) -> Result<Permutation> {
        if self.len() != subset.len() {
            return Err(Error::InvalidArgument(format!(
                "permutation of size {} cannot act on a subset of size {}",
                self.len(),
                subset.len()
            )));
        }
        let mut image: Vec<usize> = (0..n).collect();
        for (i, &v) in subset.iter().enumerate() {
            image[v] = subset[self.apply(i)];
        }
        Permutation::new(image)
    }
}

/// A parent graph with an ordered vertex subset `H` placed first in block order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedSubgraph {
    parent: Graph,
    subset: Vec<usize>,
    order: Vec<usize>,
}

impl EmbeddedSubgraph {
    pub fn parent(&self) -> &Graph {
        &self.parent
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// Size of `H`.
    pub fn t(&self) -> usize {
        self.subset.len()
    }

    /// Parent vertex at each block position: the subset first, then the rest ascending.
    pub fn block_order(&self) -> &[usize] {
        &self.order
    }

    pub fn induced(&self) -> Graph {
        self.parent.induced(&self.subset)
    }

    /// Parent graph relabelled into block order (vertex `i` is `block_order()[i]`).
    pub fn reordered_parent(&self) -> Graph {
        self.parent.induced(&self.order)
    }

    /// Maps a graph given in block coordinates back onto the parent's labels.
    pub fn from_block_coords(&self, g: &Graph) -> Graph {
        let to_parent = Permutation {
            image: self.order.clone(),
        };
        g.relabel(&to_parent)
    }
}

/// Records the block order for `subset` inside `g`.
pub fn induced_embedding(g: &Graph, subset: &[usize]) -> Result<EmbeddedSubgraph> {
    let n = g.n();
    if subset.is_empty() {
        return Err(Error::InvalidSubset("subset must be non-empty".into()));
    }
    let mut used = vec![false; n];
    for &v in subset {
        if v >= n {
            return Err(Error::InvalidSubset(format!("vertex {v} out of range for {n} vertices")));
        }
        if std::mem::replace(&mut used[v], true) {
            return Err(Error::InvalidSubset(format!("vertex {v} listed twice")));
        }
    }
    let mut order = subset.to_vec();
    order.extend((0..n).filter(|&v| !used[v]));
    Ok(EmbeddedSubgraph {
        parent: g.clone(),
        subset: subset.to_vec(),
        order,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn complement_of_c4_is_two_edges() {
        let c = c4().complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(c.complement(), c4());
    }

    #[test]
    fn permutation_validation() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        let p = Permutation::new(vec![1, 2, 0]).unwrap();
        assert!(!p.is_involution());
        assert!(p.compose(&p.inverse()).is_identity());
        let q = Permutation::from_swaps(4, &[(0, 2)]).unwrap();
        assert!(q.is_involution());
        assert_eq!(q.fixed_points(), vec![1, 3]);
        assert_eq!(q.moved_pairs(), vec![(0, 2)]);
        assert!(q.is_automorphism(&c4()));
    }

    #[test]
    fn embedding_rejects_bad_subsets() {
        let g = c4();
        assert!(matches!(induced_embedding(&g, &[0, 0]), Err(Error::InvalidSubset(_))));
        assert!(matches!(induced_embedding(&g, &[7]), Err(Error::InvalidSubset(_))));
        let e = induced_embedding(&g, &[2, 0]).unwrap();
        assert_eq!(e.block_order(), &[2, 0, 1, 3]);
        assert_eq!(e.from_block_coords(&e.reordered_parent()), g);
    }

    #[test]
    fn lift_fixes_outside() {
        let p11 = Permutation::from_swaps(2, &[(0, 1)]).unwrap();
        let p = p11.lift(&[3, 1], 5).unwrap();
        assert_eq!(p.image(), &[0, 3, 2, 1, 4]);
    }

    #[test]
    fn disconnected_detected() {
        assert!(c4().is_connected());
        assert!(!c4().complement().is_connected());
    }
}
