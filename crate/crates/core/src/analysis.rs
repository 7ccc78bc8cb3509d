//! Decision procedures on point sets: goodness, loop certificates, explicit
//! additive decompositions, hereditary spot-checks, and loop search in full
//! product sets.
//!
//! A set is *good* exactly when its incidence matrix has full row rank; a
//! failing set certifies itself through a *loop*: a minimal subset of points
//! carrying nonzero primitive integer coefficients whose signed per-axis
//! indicator sums all vanish. For a concrete function table, goodness of the
//! linear system `M a = z` is decided exactly, and inconsistency localizes
//! to a loop whose signed value sum against the function is nonzero.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{
    fundamental_circuit, integerize, rank_exact, solve_exact, CircuitOutcome, SolveOutcome,
};
use crate::matrix::IncidenceMatrix;
use crate::set::{FunctionTable, Point, PointSet, Symbol};
use crate::{Int, Rational};

/// Errors from the analysis layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    /// A point or symbol is outside the relevant domain.
    DomainError(String),
    /// Supplied certificate data is structurally malformed.
    InvalidCertificate(String),
    /// The hereditary check requires a good set.
    NotGood,
    /// Subset size for the hereditary check is out of range.
    InvalidSubsetSize {
        subset_size: usize,
        cardinality: usize,
    },
    /// A stated precondition does not hold.
    PreconditionViolated(String),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::DomainError(msg) => write!(f, "domain error: {msg}"),
            AnalysisError::InvalidCertificate(msg) => write!(f, "invalid certificate: {msg}"),
            AnalysisError::NotGood => write!(f, "the point set is not good"),
            AnalysisError::InvalidSubsetSize {
                subset_size,
                cardinality,
            } => write!(
                f,
                "subset size {subset_size} out of range for a set of {cardinality} points"
            ),
            AnalysisError::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for AnalysisError {}

/// A subset of points plus primitive nonzero integer coefficients whose
/// signed per-axis indicator sums vanish, with no proper subset admitting
/// such coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopCertificate {
    points: Vec<Point>,
    coefficients: Vec<Int>,
}

impl LoopCertificate {
    /// Bundles points and coefficients after structural validation: equal
    /// lengths, at least one point, consistent arity, distinct points, and
    /// nonzero coefficients. Whether the data actually witnesses a loop is
    /// the job of [`verify_loop`].
    pub fn new(points: Vec<Point>, coefficients: Vec<Int>) -> Result<Self, AnalysisError> {
        if points.is_empty() {
            return Err(AnalysisError::InvalidCertificate(
                "certificate has no points".into(),
            ));
        }
        if points.len() != coefficients.len() {
            return Err(AnalysisError::InvalidCertificate(format!(
                "{} points but {} coefficients",
                points.len(),
                coefficients.len()
            )));
        }
        let n = points[0].len();
        if n == 0 {
            return Err(AnalysisError::InvalidCertificate(
                "points must have at least one coordinate".into(),
            ));
        }
        for (j, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(AnalysisError::InvalidCertificate(format!(
                    "point {j} has arity {}, expected {n}",
                    p.len()
                )));
            }
        }
        for a in 0..points.len() {
            for b in a + 1..points.len() {
                if points[a] == points[b] {
                    return Err(AnalysisError::InvalidCertificate(format!(
                        "points {a} and {b} are identical"
                    )));
                }
            }
        }
        if coefficients.iter().any(Zero::is_zero) {
            return Err(AnalysisError::InvalidCertificate(
                "coefficients must be nonzero".into(),
            ));
        }
        Ok(LoopCertificate {
            points,
            coefficients,
        })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coefficients
    }

    /// Number of points in the loop.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Axis count of the certificate's points.
    pub fn axes(&self) -> usize {
        self.points[0].len()
    }
}

/// Per-axis value tables of an additive decomposition `u1 + u2 + ... + un`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    tables: Vec<BTreeMap<Symbol, Rational>>,
}

impl Decomposition {
    /// Wraps per-axis tables; at least one axis is required.
    pub fn new(tables: Vec<BTreeMap<Symbol, Rational>>) -> Result<Self, AnalysisError> {
        if tables.is_empty() {
            return Err(AnalysisError::DomainError(
                "decomposition needs at least one axis table".into(),
            ));
        }
        Ok(Decomposition { tables })
    }

    /// Axis count.
    pub fn axes(&self) -> usize {
        self.tables.len()
    }

    /// The per-axis tables, axis order.
    pub fn tables(&self) -> &[BTreeMap<Symbol, Rational>] {
        &self.tables
    }

    /// Evaluates `u1(x1) + ... + un(xn)` at a point.
    pub fn evaluate(&self, point: &[Symbol]) -> Result<Rational, AnalysisError> {
        evaluate(self, point)
    }
}

/// The verdict of the goodness decision, with enough context to audit it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodnessVerdict {
    /// Whether every function on the set decomposes additively.
    pub good: bool,
    /// Exact rank of the incidence matrix.
    pub rank: usize,
    /// Point count `k`.
    pub cardinality: usize,
    /// `m1 + ... + mn - (n - 1)`; `good` implies `cardinality <= bound`.
    pub bound: usize,
    /// A loop witnessing failure; present exactly when `good` is false.
    pub certificate: Option<LoopCertificate>,
}

/// Outcome of [`decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecomposeOutcome {
    /// The function splits additively; tables realize it exactly.
    Decomposed(Decomposition),
    /// No additive form exists: the loop's signed value sum is the nonzero
    /// rational payload.
    Obstructed(LoopCertificate, Rational),
}

/// Result of the randomized hereditary check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HereditaryReport {
    pub trials: usize,
    pub subset_size: usize,
    pub seed: u64,
    pub passed: bool,
    /// First sampled subset that failed, if any. A failure falsifies the
    /// implementation, not the theory.
    pub counterexample: Option<Vec<Point>>,
}

/// Decides goodness: rank of the incidence matrix equals the cardinality.
/// When the set is not good, the verdict carries a loop certificate.
pub fn is_good(s: &PointSet) -> GoodnessVerdict {
    let m = IncidenceMatrix::from_set(s);
    let rank = rank_exact(&m.to_rational());
    let cardinality = s.len();
    let good = rank == cardinality;
    let bound = s.cardinality_bound();
    // Full rank forces the cardinality bound: the kernel witnesses leave
    // rank at most the bound, and rank equals k here.
    assert!(!good || cardinality <= bound);
    let certificate = if good {
        None
    } else {
        let cert = find_loop(s);
        assert!(cert.is_some(), "rank-deficient sets must contain a loop");
        cert
    };
    GoodnessVerdict {
        good,
        rank,
        cardinality,
        bound,
        certificate,
    }
}

/// Finds the canonical loop of a set, if any: the fundamental circuit of the
/// first incidence row dependent on earlier rows, with primitive integer
/// coefficients and points in ascending row order.
pub fn find_loop(s: &PointSet) -> Option<LoopCertificate> {
    let m = IncidenceMatrix::from_set(s).to_rational();
    match fundamental_circuit(&m) {
        CircuitOutcome::IndependentRows => None,
        CircuitOutcome::Circuit(w) => {
            let points = w
                .support()
                .iter()
                .map(|&j| s.point(j).clone())
                .collect::<Vec<_>>();
            let coefficients =
                integerize(w.coefficients()).expect("circuit coefficients are nonzero");
            Some(
                LoopCertificate::new(points, coefficients)
                    .expect("circuit induces a structurally valid certificate"),
            )
        }
    }
}

/// Checks a claimed loop: all signed per-axis indicator sums vanish, and the
/// point set is minimal, i.e. its incidence rows form a circuit (rank one
/// less than the point count, with a full-support dependency).
pub fn verify_loop(c: &LoopCertificate) -> bool {
    let n = c.axes();
    for axis in 0..n {
        let mut sums: BTreeMap<&Symbol, Int> = BTreeMap::new();
        for (p, coeff) in c.points().iter().zip(c.coefficients()) {
            *sums.entry(&p[axis]).or_insert_with(Int::zero) += coeff;
        }
        if sums.values().any(|v| !v.is_zero()) {
            return false;
        }
    }
    let s = PointSet::new(n, c.points().to_vec())
        .expect("certificate points are distinct tuples of equal arity");
    let m = IncidenceMatrix::from_set(&s).to_rational();
    match fundamental_circuit(&m) {
        CircuitOutcome::Circuit(w) => w.support().len() == c.len(),
        CircuitOutcome::IndependentRows => false,
    }
}

/// The signed sum of function values over a loop. A nonzero result proves
/// the function admits no additive decomposition on any superset of the
/// loop's points.
pub fn loop_functional(c: &LoopCertificate, f: &FunctionTable) -> Result<Rational, AnalysisError> {
    let mut total = Rational::zero();
    for (p, coeff) in c.points().iter().zip(c.coefficients()) {
        let value = f.get(p).ok_or_else(|| {
            AnalysisError::DomainError(format!("point {p:?} is not in the function's domain"))
        })?;
        total += value * Rational::from_integer(coeff.clone());
    }
    Ok(total)
}

/// Splits `f` into per-axis tables when possible, or extracts a loop on
/// which `f` has a nonzero signed sum. Free variables of the underlying
/// linear system are pinned to zero, so the output is canonical.
pub fn decompose(s: &PointSet, f: &FunctionTable) -> Result<DecomposeOutcome, AnalysisError> {
    let z = f.aligned_values(s).ok_or_else(|| {
        AnalysisError::DomainError(
            "function table domain does not match the point set exactly".into(),
        )
    })?;
    let incidence = IncidenceMatrix::from_set(s);
    let m = incidence.to_rational();
    match solve_exact(&m, &z).expect("aligned right-hand side has matching length") {
        SolveOutcome::Solution(alpha) => {
            let mut tables = Vec::with_capacity(s.axes());
            for axis in 0..s.axes() {
                let mut table = BTreeMap::new();
                for (idx, sym) in s.alphabet(axis).iter().enumerate() {
                    let col = incidence.column_of(axis, idx);
                    table.insert(sym.clone(), alpha[col].clone());
                }
                tables.push(table);
            }
            Ok(DecomposeOutcome::Decomposed(Decomposition { tables }))
        }
        SolveOutcome::Inconsistent(c) => {
            // The dual certificate's support rows are dependent; their
            // circuit is the reported loop, and the certificate localizes
            // the nonzero residual to that circuit.
            let support: Vec<usize> = (0..s.len()).filter(|&j| !c[j].is_zero()).collect();
            let sub = m.select_rows(&support);
            let CircuitOutcome::Circuit(w) = fundamental_circuit(&sub) else {
                unreachable!("dual certificate support is a dependent row set");
            };
            let points: Vec<Point> = w
                .support()
                .iter()
                .map(|&local| s.point(support[local]).clone())
                .collect();
            let coefficients =
                integerize(w.coefficients()).expect("circuit coefficients are nonzero");
            let cert = LoopCertificate::new(points, coefficients)
                .expect("circuit induces a structurally valid certificate");
            let functional = loop_functional(&cert, f)?;
            assert!(
                !functional.is_zero(),
                "obstruction loop must have nonzero signed value sum"
            );
            Ok(DecomposeOutcome::Obstructed(cert, functional))
        }
    }
}

/// Evaluates a decomposition at a point: the sum of per-axis table entries.
pub fn evaluate(d: &Decomposition, point: &[Symbol]) -> Result<Rational, AnalysisError> {
    if point.len() != d.axes() {
        return Err(AnalysisError::DomainError(format!(
            "point has arity {}, decomposition has {} axes",
            point.len(),
            d.axes()
        )));
    }
    let mut total = Rational::zero();
    for (table, sym) in d.tables().iter().zip(point) {
        let value = table.get(sym).ok_or_else(|| {
            AnalysisError::DomainError(format!("symbol {sym:?} is not in the axis table"))
        })?;
        total += value;
    }
    Ok(total)
}

/// Samples `trials` random subsets of the given size from a good set and
/// confirms each one is good again. Randomness is fully determined by
/// `seed`.
pub fn check_hereditary(
    s: &PointSet,
    trials: usize,
    subset_size: usize,
    seed: u64,
) -> Result<HereditaryReport, AnalysisError> {
    if !is_good(s).good {
        return Err(AnalysisError::NotGood);
    }
    if subset_size == 0 || subset_size > s.len() {
        return Err(AnalysisError::InvalidSubsetSize {
            subset_size,
            cardinality: s.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let mut indices = rand::seq::index::sample(&mut rng, s.len(), subset_size).into_vec();
        indices.sort_unstable();
        let sub = s
            .subset(&indices)
            .expect("sampled indices are distinct and in range");
        if !is_good(&sub).good {
            return Ok(HereditaryReport {
                trials,
                subset_size,
                seed,
                passed: false,
                counterexample: Some(sub.points().to_vec()),
            });
        }
    }
    Ok(HereditaryReport {
        trials,
        subset_size,
        seed,
        passed: true,
        counterexample: None,
    })
}

/// Builds the full product of `n` two-symbol axes and returns a loop inside
/// it. Such a product always contains one for `n >= 2`: the product has
/// `2^n` points but the cardinality bound is only `n + 1`.
pub fn product_loop(axis_pairs: &[(Symbol, Symbol)]) -> Result<LoopCertificate, AnalysisError> {
    let n = axis_pairs.len();
    if n < 2 {
        return Err(AnalysisError::PreconditionViolated(
            "product loop needs at least two axes".into(),
        ));
    }
    if n > 16 {
        return Err(AnalysisError::PreconditionViolated(
            "product set of more than 16 axes is too large to enumerate".into(),
        ));
    }
    for (i, (a, b)) in axis_pairs.iter().enumerate() {
        if a == b {
            return Err(AnalysisError::PreconditionViolated(format!(
                "axis {i} pair must have two distinct symbols"
            )));
        }
    }
    let mut points = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        let point: Point = (0..n)
            .map(|i| {
                let bit = (mask >> (n - 1 - i)) & 1;
                if bit == 0 {
                    axis_pairs[i].0.clone()
                } else {
                    axis_pairs[i].1.clone()
                }
            })
            .collect();
        points.push(point);
    }
    let s = PointSet::new(n, points).expect("product points are distinct");
    Ok(find_loop(&s).expect("two-symbol products always contain a loop"))
}
