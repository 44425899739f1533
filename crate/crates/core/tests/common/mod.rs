//! Independent oracles shared by the integration tests: plain loops and a
//! floating-point eigensolver, none of which go through the library's own
//! recognition, rank or canonical-form code.
#![allow(dead_code)]

use deza::Graph;
use nalgebra::DMatrix;

pub fn adjacency_f64(g: &Graph) -> DMatrix<f64> {
    DMatrix::from_fn(g.n(), g.n(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

/// Eigenvalues rounded to integers with multiplicities, in decreasing order;
/// `None` if some eigenvalue is farther than `1e-6` from an integer.
pub fn integer_spectrum(g: &Graph) -> Option<Vec<(i64, usize)>> {
    let eig = adjacency_f64(g).symmetric_eigenvalues();
    let mut values = vec![];
    for x in eig.iter() {
        let r = x.round();
        if (x - r).abs() > 1e-6 {
            return None;
        }
        values.push(r as i64);
    }
    values.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<(i64, usize)> = vec![];
    for v in values {
        match out.last_mut() {
            Some((w, m)) if *w == v => *m += 1,
            _ => out.push((v, 1)),
        }
    }
    Some(out)
}

pub fn common(g: &Graph, u: usize, v: usize) -> usize {
    (0..g.n()).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count()
}

pub fn degree(g: &Graph, v: usize) -> usize {
    (0..g.n()).filter(|&w| g.has_edge(v, w)).count()
}

pub fn connected(g: &Graph) -> bool {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..g.n() {
            if g.has_edge(v, w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// `(n, k, b, a)` by direct counting, if the graph is a connected regular
/// graph with at most two common-neighbour counts.
pub fn deza_by_counting(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    if n < 2 || !connected(g) {
        return None;
    }
    let k = degree(g, 0);
    if (0..n).any(|v| degree(g, v) != k) {
        return None;
    }
    let mut counts = vec![];
    for u in 0..n {
        for v in u + 1..n {
            counts.push(common(g, u, v));
        }
    }
    counts.sort_unstable();
    counts.dedup();
    (counts.len() <= 2).then(|| (n, k, *counts.last().unwrap(), counts[0]))
}

/// `(n, k, lambda, mu)` by direct counting; complete and edgeless graphs excluded.
pub fn srg_by_counting(g: &Graph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let k = degree(g, 0);
    if n < 2 || k == 0 || k + 1 == n || (0..n).any(|v| degree(g, v) != k) {
        return None;
    }
    let (mut lambda, mut mu) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let c = common(g, u, v);
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    Some((n, k, lambda?, mu?))
}

/// The graph whose edges are the pairs with exactly `count` common neighbours.
pub fn pairs_with(g: &Graph, count: usize) -> Graph {
    Graph::from_fn(g.n(), |u, v| common(g, u, v) == count)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Tries every bijection; only for small graphs.
pub fn isomorphic_by_search(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut p: Vec<usize> = (0..g.n()).collect();
    loop {
        if g.edges().all(|(u, v)| h.has_edge(p[u], p[v])) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}
