//! Canonical labelling by individualization-refinement, and isomorphism tests.
//!
//! The search refines an ordered partition to the coarsest equitable partition,
//! branches on the first largest non-singleton cell, and keeps the leaf whose
//! relabelled upper triangle (graph6 bit order) is lexicographically least.
//! Leaves with equal certificates yield automorphisms, which prune sibling
//! branches lying in the same orbit of the pointwise stabiliser of the path.

use crate::error::{Error, Result};
use crate::graph::{Graph, Permutation};
use crate::graph6::to_graph6;
use crate::matrix::IntMatrix;
use crate::spectra::{spectrum, CLUSTER_TOLERANCE};

/// Largest order accepted by the canonical labeller.
pub const MAX_CANONICAL_ORDER: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// graph6 encoding of the canonically relabelled graph.
    pub graph6: String,
    /// Maps each input vertex to its canonical position.
    pub relabeling: Permutation,
}

type Cells = Vec<Vec<usize>>;

/// Refines `cells` in place to the coarsest equitable partition finer than it.
/// New cells are ordered by their neighbour-count signatures, so the result is
/// label-invariant.
fn refine(g: &Graph, cells: &mut Cells) {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        let nc = cells.len();
        for (ci, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = ci;
            }
        }
        let mut counts = vec![0u32; n * nc];
        for v in 0..n {
            for (u, &adj) in g.row(v).iter().enumerate() {
                if adj {
                    counts[v * nc + cell_of[u]] += 1;
                }
            }
        }
        let sig = |v: usize| &counts[v * nc..(v + 1) * nc];
        let mut next: Cells = Vec::with_capacity(nc);
        for c in cells.iter() {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut members = c.clone();
            members.sort_by(|&x, &y| sig(x).cmp(sig(y)).then(x.cmp(&y)));
            let mut start = 0;
            for i in 1..=members.len() {
                if i == members.len() || sig(members[i]) != sig(members[start]) {
                    next.push(members[start..i].to_vec());
                    start = i;
                }
            }
        }
        let done = next.len() == nc;
        *cells = next;
        if done {
            return;
        }
    }
}

/// Cell index of each vertex in the coarsest equitable partition.
pub fn equitable_colours(g: &Graph) -> Vec<usize> {
    let mut cells: Cells = vec![(0..g.n()).collect()];
    if g.n() == 0 {
        return vec![];
    }
    refine(g, &mut cells);
    let mut colour = vec![0; g.n()];
    for (ci, c) in cells.iter().enumerate() {
        for &v in c {
            colour[v] = ci;
        }
    }
    colour
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (ci, c) in cells.iter().enumerate() {
        if ci == target {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&u| u != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    out
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Permutation>,
    prefix: Vec<usize>,
    explored: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            first: None,
            best: None,
            autos: vec![],
            prefix: vec![],
            explored: vec![],
        }
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let n = lab.len();
        let bits = n * n.saturating_sub(1) / 2;
        let mut words = vec![0u64; bits.div_ceil(64)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.g.has_edge(lab[i], lab[j]) {
                    words[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        words
    }

    /// Orbits of the group generated by the known automorphisms fixing `fixed` pointwise.
    fn orbits(&self, fixed: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.g.n());
        for a in &self.autos {
            if fixed.iter().all(|&v| a.apply(v) == v) {
                for v in 0..self.g.n() {
                    uf.union(v, a.apply(v));
                }
            }
        }
        uf
    }

    fn visit(&mut self, mut cells: Cells) -> Option<usize> {
        refine(self.g, &mut cells);
        if cells.len() == self.g.n() {
            let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            return self.leaf(lab);
        }
        let level = self.prefix.len();
        let largest = cells.iter().map(Vec::len).max().unwrap_or(0);
        let target = cells.iter().position(|c| c.len() == largest).unwrap_or(0);
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        self.explored.push(vec![]);
        for v in candidates {
            let mut uf = self.orbits(&self.prefix);
            if self.explored[level].iter().any(|&u| uf.find(u) == uf.find(v)) {
                continue;
            }
            self.explored[level].push(v);
            let child = individualize(&cells, target, v);
            self.prefix.push(v);
            let abort = self.visit(child);
            self.prefix.pop();
            if let Some(l) = abort {
                if l < level {
                    self.explored.pop();
                    return Some(l);
                }
            }
        }
        self.explored.pop();
        None
    }

    fn leaf(&mut self, lab: Vec<usize>) -> Option<usize> {
        let cert = self.certificate(&lab);
        let (Some(first), Some(best)) = (&self.first, &self.best) else {
            self.first = Some(Leaf {
                cert: cert.clone(),
                lab: lab.clone(),
            });
            self.best = Some(Leaf { cert, lab });
            return None;
        };
        let matched = if cert == first.cert {
            Some(&first.lab)
        } else if cert == best.cert {
            Some(&best.lab)
        } else {
            None
        };
        if let Some(other) = matched {
            let mut image = vec![0; lab.len()];
            for (i, &v) in other.iter().enumerate() {
                image[v] = lab[i];
            }
            let gamma = Permutation::new(image).expect("leaf labellings are bijections");
            debug_assert!(gamma.is_automorphism(self.g));
            if !gamma.is_identity() {
                self.autos.push(gamma);
            }
            return self.abort_level();
        }
        if cert < best.cert {
            self.best = Some(Leaf { cert, lab });
        }
        None
    }

    /// Shallowest level whose current branch is now known to be equivalent to
    /// an already explored sibling.
    fn abort_level(&self) -> Option<usize> {
        (0..self.prefix.len()).find(|&l| {
            let mut uf = self.orbits(&self.prefix[..l]);
            let v = self.prefix[l];
            self.explored[l]
                .iter()
                .any(|&u| u != v && uf.find(u) == uf.find(v))
        })
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANONICAL_ORDER {
        return Err(Error::UnsupportedSize {
            n: g.n(),
            max: MAX_CANONICAL_ORDER,
        });
    }
    Ok(())
}

fn run_search(g: &Graph) -> Search<'_> {
    let mut search = Search::new(g);
    if g.n() > 0 {
        search.visit(vec![(0..g.n()).collect()]);
    }
    search
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_size(g)?;
    let search = run_search(g);
    let lab = search.best.map(|b| b.lab).unwrap_or_default();
    let relabeling = Permutation::new(lab)
        .expect("leaf labelling is a bijection")
        .inverse();
    Ok(CanonicalForm {
        graph6: to_graph6(&g.relabel(&relabeling)),
        relabeling,
    })
}

/// Non-identity automorphisms discovered while canonically labelling `g`.
/// They generate a subgroup of the automorphism group (in practice usually all of it).
pub fn automorphism_generators(g: &Graph) -> Result<Vec<Permutation>> {
    check_size(g)?;
    Ok(run_search(g).autos)
}

fn common_neighbour_profile(g: &Graph) -> Result<Vec<(bool, i64)>> {
    let sq = IntMatrix::adjacency(g).square()?;
    let mut profile: Vec<(bool, i64)> = (0..g.n())
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .map(|(u, v)| (g.has_edge(u, v), sq[(u, v)]))
        .collect();
    profile.sort_unstable();
    Ok(profile)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    check_size(g1)?;
    check_size(g2)?;
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let sorted_degrees = |g: &Graph| {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    };
    if sorted_degrees(g1) != sorted_degrees(g2) {
        return Ok(false);
    }
    if common_neighbour_profile(g1)? != common_neighbour_profile(g2)? {
        return Ok(false);
    }
    if !spectrum(g1)?.matches(&spectrum(g2)?, CLUSTER_TOLERANCE) {
        return Ok(false);
    }
    Ok(canonical_form(g1)?.graph6 == canonical_form(g2)?.graph6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn shuffled(g: &Graph, seed: u64) -> Graph {
        let n = g.n();
        let mut image: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            image.swap(i, (s >> 33) as usize % (i + 1));
        }
        g.relabel(&Permutation::new(image).unwrap())
    }

    #[test]
    fn relabeling_reproduces_canonical_graph() {
        let g = triangular_graph(6).unwrap();
        let c = canonical_form(&g).unwrap();
        assert_eq!(to_graph6(&g.relabel(&c.relabeling)), c.graph6);
    }

    #[test]
    fn invariant_under_relabeling() {
        for g in [
            lattice_graph(4).unwrap(),
            rook_2xm(5).unwrap(),
            clebsch_16_10(),
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (4, 5)]).unwrap(),
        ] {
            let c = canonical_form(&g).unwrap().graph6;
            for seed in 0..20 {
                assert_eq!(canonical_form(&shuffled(&g, seed)).unwrap().graph6, c);
            }
        }
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // K_{1,4} and C4 + K1 share the spectrum {2, 0^3, -2}
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_ne!(canonical_form(&star).unwrap(), canonical_form(&c4k1).unwrap());
        assert!(!is_isomorphic(&star, &c4k1).unwrap());
    }

    #[test]
    fn lattice_automorphisms_found() {
        let gens = automorphism_generators(&lattice_graph(4).unwrap()).unwrap();
        assert!(!gens.is_empty());
        let g = lattice_graph(4).unwrap();
        assert!(gens.iter().all(|p| p.is_automorphism(&g)));
    }

    #[test]
    fn size_bound() {
        let g = Graph::empty(MAX_CANONICAL_ORDER + 1);
        assert!(matches!(canonical_form(&g), Err(Error::UnsupportedSize { .. })));
        assert!(matches!(is_isomorphic(&g, &g), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn equitable_colours_of_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = equitable_colours(&p4);
        assert_eq!(c[0], c[3]);
        assert_eq!(c[1], c[2]);
        assert_ne!(c[0], c[1]);
    }
}
