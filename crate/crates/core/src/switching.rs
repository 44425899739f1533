//! Seidel automorphisms and the switching constructions that turn a strongly
//! regular graph (or a Deza graph with strongly regular children) into a Deza
//! graph whose children are strongly regular.
//!
//! Every construction returns the new graph together with a [`SwitchCertificate`]
//! holding the exact matrix checks that were performed. Block computations use
//! the block order of an [`EmbeddedSubgraph`]: the vertices of `H` first, so that
//!
//! ```text
//!     M = | M11 M12 |      P = | P11 0 |
//!         | M21 M22 |          | 0   I |
//! ```

use serde::Serialize;

use crate::classify::{
    children, is_strictly_deza, recognize_deza, recognize_srg, DezaParameters, SrgParameters,
};
use crate::error::{Error, Result};
use crate::families::{lattice_graph, lattice_rows, rook_2xm_central};
use crate::graph::{induced_embedding, EmbeddedSubgraph, Graph, Permutation};
use crate::graph6::to_graph6;
use crate::iso::equitable_colours;
use crate::matrix::{apply_perm_left, conjugate, BlockSplit, IntMatrix};

/// A non-identity involutive automorphism whose moved pairs are all non-adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeidelWitness {
    pub perm: Permutation,
    pub fixed_points: Vec<usize>,
    pub moved_pairs: Vec<(usize, usize)>,
}

impl SeidelWitness {
    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_points.is_empty()
    }
}

pub fn is_seidel_automorphism(g: &Graph, p: &Permutation, require_fpf: bool) -> Option<SeidelWitness> {
    if p.len() != g.n() || !p.is_involution() || !p.is_automorphism(g) {
        return None;
    }
    let moved_pairs = p.moved_pairs();
    if moved_pairs.iter().any(|&(u, v)| g.has_edge(u, v)) {
        return None;
    }
    let fixed_points = p.fixed_points();
    if require_fpf && !fixed_points.is_empty() {
        return None;
    }
    Some(SeidelWitness {
        perm: p.clone(),
        fixed_points,
        moved_pairs,
    })
}

/// Practical order bound for [`find_seidel_automorphisms`].
pub const SEIDEL_SEARCH_MAX_ORDER: usize = 40;

/// Enumerates Seidel automorphisms in lexicographic order of their image arrays,
/// stopping after `limit` results.
pub fn find_seidel_automorphisms(g: &Graph, require_fpf: bool, limit: usize) -> Vec<SeidelWitness> {
    let n = g.n();
    let mut out = vec![];
    if n == 0 || limit == 0 {
        return out;
    }
    let colours = equitable_colours(g);
    let mut image: Vec<Option<usize>> = vec![None; n];
    seidel_backtrack(g, &colours, require_fpf, limit, &mut image, &mut out);
    out
}

fn seidel_backtrack(
    g: &Graph,
    colours: &[usize],
    require_fpf: bool,
    limit: usize,
    image: &mut Vec<Option<usize>>,
    out: &mut Vec<SeidelWitness>,
) {
    if out.len() >= limit {
        return;
    }
    let Some(v) = image.iter().position(Option::is_none) else {
        let perm = Permutation::new(image.iter().map(|x| x.expect("complete")).collect())
            .expect("involution built from disjoint swaps");
        if let Some(w) = is_seidel_automorphism(g, &perm, require_fpf) {
            out.push(w);
        }
        return;
    };
    let consistent = |image: &[Option<usize>], v: usize, w: usize| {
        image.iter().enumerate().all(|(x, y)| match *y {
            Some(y) => g.has_edge(v, x) == g.has_edge(w, y) && g.has_edge(w, x) == g.has_edge(v, y),
            None => true,
        })
    };
    if !require_fpf && consistent(image, v, v) {
        image[v] = Some(v);
        seidel_backtrack(g, colours, require_fpf, limit, image, out);
        image[v] = None;
    }
    for w in v + 1..g.n() {
        if out.len() >= limit {
            return;
        }
        if image[w].is_some() || g.has_edge(v, w) || colours[v] != colours[w] {
            continue;
        }
        if !consistent(image, v, w) {
            continue;
        }
        image[v] = Some(w);
        image[w] = Some(v);
        seidel_backtrack(g, colours, require_fpf, limit, image, out);
        image[v] = None;
        image[w] = None;
    }
}

/// Which of the two switched matrices to return.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `P11 M11` in the top-left block, everything else unchanged.
    N1,
    /// `P11 M11`, `P11 M12`, `M21 P11`, `M22`.
    N2,
}

/// Block condition under which the generalised switching applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GdssMode {
    /// Strongly regular parent and `P11 M12 M22 = M12 M22`; then `N2^2 = M^2`, `N1^2 = (PMP)^2`.
    Gdss1,
    /// Deza parent with strongly regular children (or a strongly regular parent) and
    /// `P11 M11 M12 = M11 M12`; then `N1^2 = M^2`, `N2^2 = (PMP)^2`.
    Gdss2,
}

/// A construction together with its inputs, so that it can be replayed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    /// `P M` for a Seidel automorphism of the whole graph.
    DualSeidel { parent: Graph, perm: Permutation },
    /// Generalised switching on the induced subgraph `H` of an embedding.
    Gdss {
        embedding: EmbeddedSubgraph,
        p11: Permutation,
        variant: Variant,
        mode: GdssMode,
    },
    /// `M + P` for a fixed-point-free Seidel automorphism, `lambda = mu`.
    AddPermutation { parent: Graph, perm: Permutation },
    /// `P (M + I)` for a fixed-point-free Seidel automorphism.
    PermutationShift { parent: Graph, perm: Permutation },
}

impl Construction {
    pub fn kind(&self) -> &'static str {
        match self {
            Construction::DualSeidel { .. } => "dual-seidel",
            Construction::Gdss { mode: GdssMode::Gdss1, .. } => "gdss1",
            Construction::Gdss { mode: GdssMode::Gdss2, .. } => "gdss2",
            Construction::AddPermutation { .. } => "add-perm",
            Construction::PermutationShift { .. } => "perm-shift",
        }
    }

    pub fn run(&self) -> Result<(Graph, SwitchCertificate)> {
        match self {
            Construction::DualSeidel { parent, perm } => run_dual_seidel(parent, perm),
            Construction::Gdss {
                embedding,
                p11,
                variant,
                mode,
            } => run_gdss(embedding, p11, *variant, *mode),
            Construction::AddPermutation { parent, perm } => run_add_perm(parent, perm),
            Construction::PermutationShift { parent, perm } => run_perm_shift(parent, perm),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

impl Check {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        Check {
            name: name.into(),
            holds,
        }
    }
}

/// Strongly regular parameters of the two children, when defined.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChildParameters {
    pub a: Option<SrgParameters>,
    pub b: Option<SrgParameters>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SwitchCertificate {
    pub construction: Construction,
    pub parent_srg: Option<SrgParameters>,
    pub parent_deza: Option<DezaParameters>,
    pub conditions: Vec<Check>,
    pub square_identities: Vec<Check>,
    pub output: DezaParameters,
    pub output_graph6: String,
    pub children: Option<ChildParameters>,
    pub strict: bool,
}

impl SwitchCertificate {
    /// Re-runs the recorded construction and compares every verdict.
    pub fn replay(&self) -> Result<bool> {
        let (_, again) = self.construction.run()?;
        Ok(again == *self)
    }

    pub fn all_checks_hold(&self) -> bool {
        self.conditions.iter().chain(&self.square_identities).all(|c| c.holds)
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.conditions
            .iter()
            .chain(&self.square_identities)
            .find(|c| c.name == name)
            .map(|c| c.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "construction": self.construction.kind(),
            "parent_srg": self.parent_srg.map(|p| p.tuple()),
            "parent_deza": self.parent_deza.map(|p| (p.n, p.k, p.b, p.a)),
            "conditions": self.conditions,
            "square_identities": self.square_identities,
            "output": (self.output.n, self.output.k, self.output.b, self.output.a),
            "graph6": self.output_graph6,
            "children": self.children.as_ref().map(|c| serde_json::json!({
                "a": c.a.map(|p| p.tuple()),
                "b": c.b.map(|p| p.tuple()),
            })),
            "strict": self.strict,
        })
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolation(msg.into())
}

fn require_srg(g: &Graph) -> Result<SrgParameters> {
    recognize_srg(g).ok_or_else(|| precondition("parent graph is not strongly regular"))
}

fn require_seidel(g: &Graph, p: &Permutation, require_fpf: bool, what: &str) -> Result<()> {
    if p.len() != g.n() {
        return Err(precondition(format!(
            "permutation of size {} does not act on the {} vertices of {what}",
            p.len(),
            g.n()
        )));
    }
    if p.is_identity() {
        return Err(precondition(format!("the identity is not a Seidel automorphism of {what}")));
    }
    if is_seidel_automorphism(g, p, false).is_none() {
        return Err(precondition(format!("permutation is not a Seidel automorphism of {what}")));
    }
    if require_fpf && !p.fixed_points().is_empty() {
        return Err(precondition(format!(
            "Seidel automorphism of {what} has fixed points {:?}",
            p.fixed_points()
        )));
    }
    Ok(())
}

fn child_parameters(g: &Graph, p: &DezaParameters) -> Option<ChildParameters> {
    let c = children(g, p).ok()?;
    Some(ChildParameters {
        a: recognize_srg(&c.a_child),
        b: recognize_srg(&c.b_child),
    })
}

/// `k I + lambda X + mu (J - I - X)`.
fn srg_combination(n: usize, k: i64, lambda: i64, mu: i64, x: &IntMatrix) -> Result<IntMatrix> {
    let i = IntMatrix::identity(n);
    let rest = IntMatrix::ones(n, n).sub(&i)?.sub(x)?;
    i.scale(k)?.add(&x.scale(lambda)?)?.add(&rest.scale(mu)?)
}

fn finish(
    construction: Construction,
    graph: Graph,
    parent_srg: Option<SrgParameters>,
    parent_deza: Option<DezaParameters>,
    conditions: Vec<Check>,
    square_identities: Vec<Check>,
) -> Result<(Graph, SwitchCertificate)> {
    let output = recognize_deza(&graph)
        .map_err(|e| Error::Construction(format!("output is not a Deza graph: {e}")))?;
    let children = child_parameters(&graph, &output);
    let strict = is_strictly_deza(&graph);
    let cert = SwitchCertificate {
        construction,
        parent_srg,
        parent_deza,
        conditions,
        square_identities,
        output,
        output_graph6: to_graph6(&graph),
        children,
        strict,
    };
    Ok((graph, cert))
}

/// Dual Seidel switching: the graph of `P M`.
pub fn dual_seidel_switch(g: &Graph, w: &SeidelWitness) -> Result<(Graph, SwitchCertificate)> {
    run_dual_seidel(g, &w.perm)
}

fn run_dual_seidel(g: &Graph, perm: &Permutation) -> Result<(Graph, SwitchCertificate)> {
    let srg = require_srg(g)?;
    if srg.lambda == srg.mu {
        return Err(precondition(format!("lambda = mu = {}", srg.mu)));
    }
    if srg.k == srg.mu {
        return Err(precondition(format!("k = mu = {}", srg.mu)));
    }
    require_seidel(g, perm, false, "the parent graph")?;
    let m = IntMatrix::adjacency(g);
    let pm = apply_perm_left(perm, &m)?;
    let graph = pm.to_graph()?;
    let squares = vec![Check::new("(PM)^2 = M^2", pm.square()? == m.square()?)];
    let (graph, mut cert) = finish(
        Construction::DualSeidel {
            parent: g.clone(),
            perm: perm.clone(),
        },
        graph,
        Some(srg),
        None,
        vec![
            Check::new("k != mu", true),
            Check::new("lambda != mu", true),
            Check::new("Seidel automorphism", true),
        ],
        squares,
    )?;
    let predicted = srg.lambda != 0 && srg.mu != 0;
    cert.conditions
        .push(Check::new("strict iff lambda != 0 and mu != 0", cert.strict == predicted));
    Ok((graph, cert))
}

fn block_split(e: &EmbeddedSubgraph) -> Result<BlockSplit> {
    IntMatrix::adjacency(&e.reordered_parent()).split(e.t())
}

fn require_subgraph_automorphism(e: &EmbeddedSubgraph, p11: &Permutation) -> Result<()> {
    if p11.len() != e.t() || !p11.is_automorphism(&e.induced()) {
        return Err(precondition("permutation is not an automorphism of the induced subgraph H"));
    }
    Ok(())
}

/// `P11 M12 M21 P11^T = M12 M21` for an automorphism `P11` of `H`.
pub fn check_lemma_mm(e: &EmbeddedSubgraph, p11: &Permutation) -> Result<bool> {
    require_subgraph_automorphism(e, p11)?;
    let s = block_split(e)?;
    let prod = s.m12.mul(&s.m21)?;
    let lhs = conjugate(p11, &prod)?;
    Ok(lhs == prod)
}

/// Number of common neighbours of parent vertices `x` and `v` among vertices
/// inside (`inside = true`) or outside `H`.
fn common_in(e: &EmbeddedSubgraph, in_h: &[bool], x: usize, v: usize, inside: bool) -> usize {
    let g = e.parent();
    (0..g.n())
        .filter(|&w| in_h[w] == inside && g.has_edge(x, w) && g.has_edge(w, v))
        .count()
}

fn combinatorial_condition(e: &EmbeddedSubgraph, p11: &Permutation, inside: bool) -> bool {
    let n = e.parent().n();
    let subset = e.subset();
    let mut in_h = vec![false; n];
    for &v in subset {
        in_h[v] = true;
    }
    (0..n).filter(|&v| !in_h[v]).all(|v| {
        (0..subset.len()).all(|i| {
            let x = subset[i];
            let y = subset[p11.apply(i)];
            common_in(e, &in_h, x, v, inside) == common_in(e, &in_h, y, v, inside)
        })
    })
}

fn gdss_condition(e: &EmbeddedSubgraph, p11: &Permutation, mode: GdssMode) -> Result<bool> {
    require_subgraph_automorphism(e, p11)?;
    let s = block_split(e)?;
    let prod = match mode {
        GdssMode::Gdss1 => s.m12.mul(&s.m22)?,
        GdssMode::Gdss2 => s.m11.mul(&s.m12)?,
    };
    let matrix = apply_perm_left(p11, &prod)? == prod;
    let counted = combinatorial_condition(e, p11, mode == GdssMode::Gdss2);
    if matrix != counted {
        return Err(Error::InternalInconsistency(format!(
            "{mode:?}: matrix condition gives {matrix}, common-neighbour count gives {counted}"
        )));
    }
    Ok(matrix)
}

/// `P11 M12 M22 = M12 M22`, cross-checked against common-neighbour counts in `G \ H`.
pub fn gdss1_condition(e: &EmbeddedSubgraph, p11: &Permutation) -> Result<bool> {
    gdss_condition(e, p11, GdssMode::Gdss1)
}

/// `P11 M11 M12 = M11 M12`, cross-checked against common-neighbour counts in `H`.
pub fn gdss2_condition(e: &EmbeddedSubgraph, p11: &Permutation) -> Result<bool> {
    gdss_condition(e, p11, GdssMode::Gdss2)
}

/// Identity on the outer block: the block-order permutation `P`.
fn block_perm(e: &EmbeddedSubgraph, p11: &Permutation) -> Result<Permutation> {
    let positions: Vec<usize> = (0..e.t()).collect();
    p11.lift(&positions, e.parent().n())
}

/// The graph of `P M P` together with whether it is strongly regular with the
/// parent's parameters.
pub fn pmp_conjugate_check(e: &EmbeddedSubgraph, p11: &Permutation) -> Result<(Graph, bool)> {
    let srg = require_srg(e.parent())?;
    require_subgraph_automorphism(e, p11)?;
    let m = IntMatrix::adjacency(&e.reordered_parent());
    let pmp = conjugate(&block_perm(e, p11)?, &m)?;
    let graph = e.from_block_coords(&pmp.to_graph()?);
    let same = recognize_srg(&graph).is_some_and(|p| p.tuple() == srg.tuple());
    Ok((graph, same))
}

pub fn gdss_switch(
    e: &EmbeddedSubgraph,
    p11: &Permutation,
    variant: Variant,
    mode: GdssMode,
) -> Result<(Graph, SwitchCertificate)> {
    run_gdss(e, p11, variant, mode)
}

fn run_gdss(
    e: &EmbeddedSubgraph,
    p11: &Permutation,
    variant: Variant,
    mode: GdssMode,
) -> Result<(Graph, SwitchCertificate)> {
    let parent = e.parent();
    require_seidel(&e.induced(), p11, false, "the induced subgraph H")?;
    let parent_srg = recognize_srg(parent);
    let mut parent_deza = None;
    let mut conditions = vec![Check::new("Seidel automorphism of H", true)];
    match mode {
        GdssMode::Gdss1 => {
            if parent_srg.is_none() {
                return Err(precondition("parent graph is not strongly regular"));
            }
            conditions.push(Check::new("parent strongly regular", true));
            if !gdss1_condition(e, p11)? {
                return Err(precondition("P11 M12 M22 != M12 M22"));
            }
            conditions.push(Check::new("P11 M12 M22 = M12 M22", true));
        }
        GdssMode::Gdss2 => {
            if parent_srg.is_none() {
                let p = recognize_deza(parent).map_err(|err| {
                    precondition(format!("parent is neither strongly regular nor Deza: {err}"))
                })?;
                let kids = child_parameters(parent, &p);
                if !kids.is_some_and(|c| c.a.is_some() && c.b.is_some()) {
                    return Err(precondition("parent Deza graph does not have strongly regular children"));
                }
                parent_deza = Some(p);
                conditions.push(Check::new("parent Deza with strongly regular children", true));
            } else {
                conditions.push(Check::new("parent strongly regular", true));
            }
            if !gdss2_condition(e, p11)? {
                return Err(precondition("P11 M11 M12 != M11 M12"));
            }
            conditions.push(Check::new("P11 M11 M12 = M11 M12", true));
        }
    }
    conditions.push(Check::new("P11 M12 M21 P11 = M12 M21", check_lemma_mm(e, p11)?));

    let s = block_split(e)?;
    let m = s.join();
    let p11m = IntMatrix::permutation(p11);
    let top_left = p11m.mul(&s.m11)?;
    let n1 = BlockSplit {
        t: s.t,
        m11: top_left.clone(),
        m12: s.m12.clone(),
        m21: s.m21.clone(),
        m22: s.m22.clone(),
    }
    .join();
    let n2 = BlockSplit {
        t: s.t,
        m11: top_left,
        m12: p11m.mul(&s.m12)?,
        m21: s.m21.mul(&p11m)?,
        m22: s.m22.clone(),
    }
    .join();
    let pmp = conjugate(&block_perm(e, p11)?, &m)?;
    let (m_sq, pmp_sq) = (m.square()?, pmp.square()?);
    let (n1_sq, n2_sq) = (n1.square()?, n2.square()?);
    let squares = match mode {
        GdssMode::Gdss1 => vec![
            Check::new("N2^2 = M^2", n2_sq == m_sq),
            Check::new("N1^2 = (PMP)^2", n1_sq == pmp_sq),
        ],
        GdssMode::Gdss2 => vec![
            Check::new("N1^2 = M^2", n1_sq == m_sq),
            Check::new("N2^2 = (PMP)^2", n2_sq == pmp_sq),
        ],
    };
    if let Some(c) = squares.iter().find(|c| !c.holds) {
        return Err(Error::InternalInconsistency(format!("{} fails", c.name)));
    }

    let chosen = match variant {
        Variant::N1 => n1,
        Variant::N2 => n2,
    };
    let graph = e.from_block_coords(&chosen.to_graph()?);
    let (graph, mut cert) = finish(
        Construction::Gdss {
            embedding: e.clone(),
            p11: p11.clone(),
            variant,
            mode,
        },
        graph,
        parent_srg,
        parent_deza,
        conditions,
        squares,
    )?;
    if let Some(srg) = parent_srg {
        let predicted = srg.lambda != 0 && srg.mu != 0;
        cert.conditions
            .push(Check::new("strict iff lambda != 0 and mu != 0", cert.strict == predicted));
    }
    Ok((graph, cert))
}

/// Repeated generalised switching of `L2(m)` on the row bands `{0,1}, {2,3}, ...`,
/// each with the central symmetry of its `2 x m` rook graph, producing `m/2` graphs.
pub fn chain_gdss2(g: &Graph, m: usize) -> Result<Vec<(Graph, SwitchCertificate)>> {
    if m < 6 || m % 2 != 0 {
        return Err(Error::InvalidParameter(format!("chain needs an even m >= 6, got {m}")));
    }
    if *g != lattice_graph(m)? {
        return Err(Error::InvalidArgument(format!("input is not L2({m}) in row-major order")));
    }
    let p11 = rook_2xm_central(m);
    let mut current = g.clone();
    let mut out = Vec::with_capacity(m / 2);
    for step in 0..m / 2 {
        let broken = |e: Error| Error::ChainBroken {
            step,
            reason: e.to_string(),
        };
        let rows = lattice_rows(m, &[2 * step, 2 * step + 1]).map_err(broken)?;
        let e = induced_embedding(&current, &rows).map_err(broken)?;
        let (next, cert) = gdss_switch(&e, &p11, Variant::N1, GdssMode::Gdss2).map_err(broken)?;
        current = next.clone();
        out.push((next, cert));
    }
    Ok(out)
}

/// The graph of `M + P` for a strongly regular graph with `lambda = mu` and a
/// fixed-point-free Seidel automorphism.
pub fn add_perm_construction(g: &Graph, w: &SeidelWitness) -> Result<(Graph, SwitchCertificate)> {
    run_add_perm(g, &w.perm)
}

fn run_add_perm(g: &Graph, perm: &Permutation) -> Result<(Graph, SwitchCertificate)> {
    let srg = require_srg(g)?;
    if srg.lambda != srg.mu {
        return Err(precondition(format!("lambda = {} != mu = {}", srg.lambda, srg.mu)));
    }
    require_seidel(g, perm, true, "the parent graph")?;
    let n = g.n();
    let m = IntMatrix::adjacency(g);
    let p = IntMatrix::permutation(perm);
    let pm = apply_perm_left(perm, &m)?;
    let sum = m.add(&p)?;
    let graph = sum.to_graph()?;
    let (k, lambda) = (srg.k as i64, srg.lambda as i64);
    let expected = srg_combination(n, k + 1, lambda + 2, lambda, &pm)?;
    let squares = vec![Check::new(
        "(M+P)^2 = (k+1)I + (lambda+2)PM + lambda(J-I-PM)",
        sum.square()? == expected,
    )];
    let (graph, mut cert) = finish(
        Construction::AddPermutation {
            parent: g.clone(),
            perm: perm.clone(),
        },
        graph,
        Some(srg),
        None,
        vec![
            Check::new("lambda = mu", true),
            Check::new("fixed-point-free Seidel automorphism", true),
        ],
        squares,
    )?;
    let pm_graph = pm.to_graph()?;
    let kids = children(&graph, &cert.output)?;
    cert.conditions
        .push(Check::new("b-child = graph of PM", kids.b_child == pm_graph));
    cert.conditions.push(Check::new(
        "a-child = graph of J-I-PM",
        kids.a_child == pm_graph.complement(),
    ));
    Ok((graph, cert))
}

/// The graph of `P (M + I)` for a strongly regular graph and a fixed-point-free
/// Seidel automorphism.
pub fn perm_shift_construction(g: &Graph, w: &SeidelWitness) -> Result<(Graph, SwitchCertificate)> {
    run_perm_shift(g, &w.perm)
}

fn run_perm_shift(g: &Graph, perm: &Permutation) -> Result<(Graph, SwitchCertificate)> {
    let srg = require_srg(g)?;
    require_seidel(g, perm, true, "the parent graph")?;
    let n = g.n();
    let m = IntMatrix::adjacency(g);
    let shifted = apply_perm_left(perm, &m.add(&IntMatrix::identity(n))?)?;
    let graph = shifted.to_graph()?;
    let (k, lambda, mu) = (srg.k as i64, srg.lambda as i64, srg.mu as i64);
    let expected = srg_combination(n, k + 1, lambda + 2, mu, &m)?;
    let squares = vec![Check::new(
        "(P(M+I))^2 = (k+1)I + (lambda+2)M + mu(J-I-M)",
        shifted.square()? == expected,
    )];
    let (graph, mut cert) = finish(
        Construction::PermutationShift {
            parent: g.clone(),
            perm: perm.clone(),
        },
        graph,
        Some(srg),
        None,
        vec![Check::new("fixed-point-free Seidel automorphism", true)],
        squares,
    )?;
    let mut ab = [cert.output.a, cert.output.b];
    ab.sort_unstable();
    let mut expected_ab = [srg.lambda + 2, srg.mu];
    expected_ab.sort_unstable();
    cert.conditions
        .push(Check::new("{a, b} = {lambda+2, mu}", ab == expected_ab));
    if let Ok(kids) = children(&graph, &cert.output) {
        let (gc, g0) = (g.complement(), g.clone());
        let as_expected = (kids.b_child == g0 && kids.a_child == gc)
            || (kids.b_child == gc && kids.a_child == g0);
        cert.conditions
            .push(Check::new("children = {G, complement of G}", as_expected));
    }
    Ok((graph, cert))
}
