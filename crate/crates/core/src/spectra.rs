//! Adjacency spectra with exact multiplicity certificates for integer
//! eigenvalues, and the spectral relations between a Deza graph and its children.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::classify::{recognize_deza, recognize_srg, DezaParameters, SrgParameters};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matrix::{exact_rank, IntMatrix};

pub const JACOBI_THRESHOLD: f64 = 1e-12;
pub const CLUSTER_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumConfig {
    /// Sweeps stop once the off-diagonal Frobenius norm falls below this
    /// fraction of the matrix norm (or below it in absolute terms for tiny matrices).
    pub jacobi_threshold: f64,
    pub cluster_tolerance: f64,
    pub max_sweeps: usize,
}

impl Default for SpectrumConfig {
    fn default() -> Self {
        SpectrumConfig {
            jacobi_threshold: JACOBI_THRESHOLD,
            cluster_tolerance: CLUSTER_TOLERANCE,
            max_sweeps: 100,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub value: f64,
    /// Set when the eigenvalue is an integer whose multiplicity was verified by exact rank.
    pub exact: Option<i64>,
    pub multiplicity: usize,
}

/// Distinct eigenvalues in strictly decreasing order with multiplicities.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Spectrum {
    entries: Vec<SpectrumEntry>,
}

impl Spectrum {
    /// A fully certified spectrum from integer `(eigenvalue, multiplicity)` pairs.
    pub fn from_integers(pairs: &[(i64, usize)]) -> Spectrum {
        Spectrum::merged(
            pairs
                .iter()
                .map(|&(v, m)| SpectrumEntry {
                    value: v as f64,
                    exact: Some(v),
                    multiplicity: m,
                })
                .collect(),
            CLUSTER_TOLERANCE,
        )
    }

    /// Sorts descending and merges entries with equal exact values or values within `tol`.
    fn merged(mut raw: Vec<SpectrumEntry>, tol: f64) -> Spectrum {
        raw.retain(|e| e.multiplicity > 0);
        raw.sort_by(|x, y| y.value.total_cmp(&x.value));
        let mut entries: Vec<SpectrumEntry> = Vec::with_capacity(raw.len());
        for e in raw {
            match entries.last_mut() {
                Some(last) if same_value(last, &e, tol) => last.multiplicity += e.multiplicity,
                _ => entries.push(e),
            }
        }
        Spectrum { entries }
    }

    pub fn entries(&self) -> &[SpectrumEntry] {
        &self.entries
    }

    pub fn order(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_certified(&self) -> bool {
        self.entries.iter().all(|e| e.exact.is_some())
    }

    /// `(eigenvalue, multiplicity)` pairs if every eigenvalue is a certified integer.
    pub fn integer_pairs(&self) -> Option<Vec<(i64, usize)>> {
        self.entries
            .iter()
            .map(|e| e.exact.map(|v| (v, e.multiplicity)))
            .collect()
    }

    pub fn multiplicity_of(&self, value: i64) -> usize {
        self.entries
            .iter()
            .find(|e| e.exact == Some(value))
            .map_or(0, |e| e.multiplicity)
    }

    fn multiplicity_near(&self, value: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - value).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Spectrum with one copy of `k` removed.
    pub fn restricted(&self, k: i64) -> Result<Spectrum> {
        let mut entries = self.entries.clone();
        let top = entries
            .iter_mut()
            .find(|e| e.exact == Some(k))
            .ok_or_else(|| Error::InvalidArgument(format!("{k} is not a certified eigenvalue")))?;
        top.multiplicity -= 1;
        entries.retain(|e| e.multiplicity > 0);
        Ok(Spectrum { entries })
    }

    pub fn trace(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    pub fn trace_of_square(&self) -> f64 {
        self.entries
            .iter()
            .map(|e| e.value * e.value * e.multiplicity as f64)
            .sum()
    }

    /// Equal as multisets: certified values compared exactly, others within `tol`.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.entries.len() == other.entries.len()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(x, y)| x.multiplicity == y.multiplicity && same_value(x, y, tol))
    }

    /// Every distinct eigenvalue is one of `allowed`.
    pub fn values_within(&self, allowed: &[i64]) -> bool {
        self.entries
            .iter()
            .all(|e| e.exact.is_some_and(|v| allowed.contains(&v)))
    }
}

fn same_value(x: &SpectrumEntry, y: &SpectrumEntry, tol: f64) -> bool {
    match (x.exact, y.exact) {
        (Some(a), Some(b)) => a == b,
        _ => (x.value - y.value).abs() <= tol,
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match e.exact {
                Some(v) => write!(f, "{v}^{}", e.multiplicity)?,
                None => write!(f, "{:.6}^{}", e.value, e.multiplicity)?,
            }
        }
        write!(f, "}}")
    }
}

/// Eigenvalues of a real symmetric matrix (row-major, `n x n`) by cyclic Jacobi rotations.
pub fn jacobi_eigenvalues(matrix: &[f64], n: usize, config: &SpectrumConfig) -> Vec<f64> {
    assert_eq!(matrix.len(), n * n);
    let mut a = matrix.to_vec();
    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = config.jacobi_threshold * norm.max(1.0);
    for _ in 0..config.max_sweeps {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off < target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.total_cmp(x));
    eig
}

pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum_of_matrix(&IntMatrix::adjacency(g), &SpectrumConfig::default())
}

pub fn spectrum_with(g: &Graph, config: &SpectrumConfig) -> Result<Spectrum> {
    spectrum_of_matrix(&IntMatrix::adjacency(g), config)
}

/// Spectrum of a symmetric integer matrix. Each cluster lying within the
/// clustering tolerance of an integer `theta` is certified with multiplicity
/// `n - rank(M - theta I)`.
pub fn spectrum_of_matrix(m: &IntMatrix, config: &SpectrumConfig) -> Result<Spectrum> {
    if !m.is_symmetric() {
        return Err(Error::InvalidArgument("spectrum needs a symmetric matrix".into()));
    }
    let n = m.rows();
    let dense: Vec<f64> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|ij| m[ij] as f64)
        .collect();
    let eig = jacobi_eigenvalues(&dense, n, config);

    let mut clusters: Vec<Vec<f64>> = vec![];
    for x in eig {
        match clusters.last_mut() {
            Some(c) if (c[c.len() - 1] - x).abs() <= config.cluster_tolerance => c.push(x),
            _ => clusters.push(vec![x]),
        }
    }

    let mut entries = Vec::with_capacity(clusters.len());
    for c in clusters {
        let mean = c.iter().sum::<f64>() / c.len() as f64;
        let nearest = mean.round();
        if (mean - nearest).abs() <= config.cluster_tolerance {
            let theta = nearest as i64;
            let certified = n - exact_rank(&m.shift_diagonal(theta)?);
            if certified != c.len() {
                return Err(Error::CertificationConflict {
                    eigenvalue: theta,
                    clustered: c.len(),
                    certified,
                });
            }
            entries.push(SpectrumEntry {
                value: theta as f64,
                exact: Some(theta),
                multiplicity: certified,
            });
        } else {
            entries.push(SpectrumEntry {
                value: mean,
                exact: None,
                multiplicity: c.len(),
            });
        }
    }
    Ok(Spectrum { entries })
}

/// Exact value of `num / den`, or the float quotient when `num` is not integral.
fn child_eigenvalue(num: Numerator, den: i64) -> Result<SpectrumEntry> {
    match num {
        Numerator::Exact(x) => {
            if x % den != 0 {
                return Err(Error::PredictionInconsistency(format!(
                    "{x}/{den} is rational but not an integer, so it cannot be an eigenvalue \
                     of an integer matrix"
                )));
            }
            Ok(SpectrumEntry {
                value: (x / den) as f64,
                exact: Some(x / den),
                multiplicity: 0,
            })
        }
        Numerator::Approx(x) => Ok(SpectrumEntry {
            value: x / den as f64,
            exact: None,
            multiplicity: 0,
        }),
    }
}

enum Numerator {
    Exact(i64),
    Approx(f64),
}

/// Squared eigenvalue, exact when it is (within tolerance) an integer.
fn squared(e: &SpectrumEntry) -> Numerator {
    match e.exact {
        Some(v) => Numerator::Exact(v * v),
        None => {
            let sq = e.value * e.value;
            if (sq - sq.round()).abs() <= CLUSTER_TOLERANCE {
                Numerator::Exact(sq.round() as i64)
            } else {
                Numerator::Approx(sq)
            }
        }
    }
}

fn offset(base: i64, sq: Numerator) -> Numerator {
    match sq {
        Numerator::Exact(x) => Numerator::Exact(base - x),
        Numerator::Approx(x) => Numerator::Approx(base as f64 - x),
    }
}

/// Spectra of the `a`-child and the `b`-child predicted from the spectrum of a
/// Deza graph with parameters `p`.
pub fn predict_child_spectra(p: &DezaParameters, s: &Spectrum) -> Result<(Spectrum, Spectrum)> {
    if p.b <= p.a {
        return Err(Error::ChildrenUndefined);
    }
    if s.order() != p.n {
        return Err(Error::InvalidArgument(format!(
            "spectrum has {} eigenvalues, parameters have n = {}",
            s.order(),
            p.n
        )));
    }
    let (n, k, b, a) = (p.n as i64, p.k as i64, p.b as i64, p.a as i64);
    let restricted = s.restricted(k)?;

    let alpha = child_eigenvalue(Numerator::Exact(b * (n - 1) - k * (k - 1)), b - a)?;
    let beta = child_eigenvalue(Numerator::Exact(a * (n - 1) - k * (k - 1)), a - b)?;
    let mut a_raw = vec![SpectrumEntry { multiplicity: 1, ..alpha }];
    let mut b_raw = vec![SpectrumEntry { multiplicity: 1, ..beta }];
    for e in restricted.entries() {
        let ai = child_eigenvalue(offset(k - b, squared(e)), b - a)?;
        let bi = child_eigenvalue(offset(k - a, squared(e)), a - b)?;
        a_raw.push(SpectrumEntry { multiplicity: e.multiplicity, ..ai });
        b_raw.push(SpectrumEntry { multiplicity: e.multiplicity, ..bi });
    }
    Ok((
        Spectrum::merged(a_raw, CLUSTER_TOLERANCE),
        Spectrum::merged(b_raw, CLUSTER_TOLERANCE),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChildRole {
    /// The child joining pairs with `a` common neighbours.
    A,
    /// The child joining pairs with `b` common neighbours.
    B,
}

/// One predicted pair `±sqrt(square)` of restricted Deza eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenPair {
    /// The child eigenvalue (`r` or `s`) this pair comes from.
    pub child_eigenvalue: f64,
    pub square: f64,
    /// `square` when it is an integer.
    pub square_exact: Option<i64>,
}

impl EigenPair {
    pub fn magnitude(&self) -> f64 {
        self.square.max(0.0).sqrt()
    }

    /// `sqrt(square)` when it is an integer.
    pub fn exact_magnitude(&self) -> Option<i64> {
        self.square_exact.and_then(crate::classify::integer_sqrt)
    }
}

/// Candidate restricted eigenvalues `±rho` (from `r`) and `±sigma` (from `s`) of a
/// Deza graph with a strongly regular child.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DezaEigPrediction {
    pub role: ChildRole,
    /// `None` when the predicted square is negative.
    pub rho: Option<EigenPair>,
    pub sigma: Option<EigenPair>,
    /// Valency the child must have.
    pub expected_child_valency: f64,
    pub child_valency_matches: bool,
    /// Child multiplicities of `r` and `s`.
    pub f: usize,
    pub g: usize,
}

/// Observed multiplicities of `+rho, -rho, +sigma, -sigma` in a Deza spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenAccounting {
    pub f1: usize,
    pub f2: usize,
    pub g1: usize,
    pub g2: usize,
    /// `f = f1 + f2`, `g = g1 + g2`, and nothing else in the restricted spectrum.
    pub holds: bool,
}

impl DezaEigPrediction {
    pub fn account(&self, deza_spectrum: &Spectrum, k: usize) -> Result<EigenAccounting> {
        let restricted = deza_spectrum.restricted(k as i64)?;
        let count = |pair: &Option<EigenPair>| -> (usize, usize) {
            match pair {
                None => (0, 0),
                Some(p) => {
                    let m = p.magnitude();
                    let plus = restricted.multiplicity_near(m, CLUSTER_TOLERANCE);
                    let minus = if m <= CLUSTER_TOLERANCE {
                        0
                    } else {
                        restricted.multiplicity_near(-m, CLUSTER_TOLERANCE)
                    };
                    (plus, minus)
                }
            }
        };
        let (f1, f2) = count(&self.rho);
        let (g1, g2) = count(&self.sigma);
        let holds = f1 + f2 == self.f
            && g1 + g2 == self.g
            && f1 + f2 + g1 + g2 == restricted.order();
        Ok(EigenAccounting { f1, f2, g1, g2, holds })
    }
}

pub fn predict_deza_eigs(
    child: &SrgParameters,
    p: &DezaParameters,
    role: ChildRole,
) -> Result<DezaEigPrediction> {
    if p.b <= p.a {
        return Err(Error::ChildrenUndefined);
    }
    let (n, k, b, a) = (p.n as i64, p.k as i64, p.b as i64, p.a as i64);
    let pair = |t: &crate::classify::SrgEigenvalue| -> Option<EigenPair> {
        let (square, square_exact) = match (role, t.exact) {
            (ChildRole::A, Some(t)) => ((k - b - t * (b - a)) as f64, Some(k - b - t * (b - a))),
            (ChildRole::B, Some(t)) => ((k - a + t * (b - a)) as f64, Some(k - a + t * (b - a))),
            (ChildRole::A, None) => ((k - b) as f64 - t.value * (b - a) as f64, None),
            (ChildRole::B, None) => ((k - a) as f64 + t.value * (b - a) as f64, None),
        };
        (square >= -CLUSTER_TOLERANCE).then_some(EigenPair {
            child_eigenvalue: t.value,
            square,
            square_exact,
        })
    };
    let rho = pair(&child.r);
    let sigma = pair(&child.s);
    if rho.is_none() && sigma.is_none() {
        return Err(Error::InconsistentParameters(format!(
            "both predicted squares are negative for child {child} of {p}"
        )));
    }
    let expected = match role {
        ChildRole::A => (b * (n - 1) - k * (k - 1)) as f64 / (b - a) as f64,
        ChildRole::B => (k * (k - 1) - a * (n - 1)) as f64 / (b - a) as f64,
    };
    Ok(DezaEigPrediction {
        role,
        rho,
        sigma,
        expected_child_valency: expected,
        child_valency_matches: (expected - child.k as f64).abs() <= CLUSTER_TOLERANCE,
        f: child.f,
        g: child.g,
    })
}

/// Outcome of comparing the square of a Deza graph with the square of one of its children.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SquareReport {
    pub squares_equal: bool,
    /// Deza valency equals the child's valency; only evaluated when squares are equal.
    pub valency_matches: Option<bool>,
    /// Every restricted Deza eigenvalue is `±r` or `±s` of the child.
    pub eigenvalues_match: Option<bool>,
}

impl SquareReport {
    pub fn passed(&self) -> bool {
        self.squares_equal && self.valency_matches == Some(true) && self.eigenvalues_match == Some(true)
    }
}

pub fn verify_square_equality(m: &Graph, child: &Graph) -> Result<SquareReport> {
    let deza = recognize_deza(m)?;
    let srg = recognize_srg(child).ok_or_else(|| {
        Error::PreconditionViolation("the child graph is not strongly regular".into())
    })?;
    if child.n() != m.n() {
        return Err(Error::InvalidArgument("graphs have different orders".into()));
    }
    let msq = IntMatrix::adjacency(m).square()?;
    let nsq = IntMatrix::adjacency(child).square()?;
    if msq != nsq {
        return Ok(SquareReport {
            squares_equal: false,
            valency_matches: None,
            eigenvalues_match: None,
        });
    }
    let spec = spectrum(m)?.restricted(deza.k as i64)?;
    let allowed = [srg.r.value, srg.s.value];
    let eigenvalues_match = spec.entries().iter().all(|e| {
        allowed
            .iter()
            .any(|t| (e.value.abs() - t.abs()).abs() <= CLUSTER_TOLERANCE)
    });
    Ok(SquareReport {
        squares_equal: true,
        valency_matches: Some(deza.k == srg.k),
        eigenvalues_match: Some(eigenvalues_match),
    })
}
