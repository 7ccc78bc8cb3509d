//! Exact rational linear algebra: rank, linear solve with dual certificates,
//! fundamental circuits of row sets, and primitive-integer normalization.
//!
//! Everything here is exact arithmetic over arbitrary-precision integers.
//! The decision criteria downstream are algebraic identities, so a single
//! floating-point rounding would make verdicts and certificates unsound.
//! Rank uses fraction-free (Bareiss) elimination to control coefficient
//! growth, with a checked `i128` fast path that falls back to big integers
//! on overflow. Solving and circuit extraction track row combinations, so a
//! failed solve yields a dual certificate and a dependent row set yields the
//! fundamental circuit of its first dependent row.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Int, Rational};

/// Errors from the linear-algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinalgError {
    /// Operand dimensions do not line up.
    DimensionError { expected: usize, found: usize },
    /// The input vector is identically zero.
    ZeroVector,
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::DimensionError { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            LinalgError::ZeroVector => write!(f, "vector is identically zero"),
        }
    }
}

impl core::error::Error for LinalgError {}

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    /// All-zero matrix. Dimensions must be positive.
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let height = rows.len();
        if height == 0 {
            return Err(LinalgError::DimensionError {
                expected: 1,
                found: 0,
            });
        }
        let width = rows[0].len();
        if width == 0 {
            return Err(LinalgError::DimensionError {
                expected: 1,
                found: 0,
            });
        }
        let mut data = Vec::with_capacity(height * width);
        for row in rows {
            if row.len() != width {
                return Err(LinalgError::DimensionError {
                    expected: width,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RationalMatrix {
            rows: height,
            cols: width,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    /// The `r`-th row as a slice.
    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// The submatrix of the selected rows, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> RationalMatrix {
        assert!(!indices.is_empty(), "row selection must be nonempty");
        let mut data = Vec::with_capacity(indices.len() * self.cols);
        for &r in indices {
            data.extend_from_slice(self.row(r));
        }
        RationalMatrix {
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }
}

/// Multiplies each row by the least common multiple of its denominators,
/// which preserves rank and dependency supports.
fn integer_rows(m: &RationalMatrix) -> Vec<Vec<Int>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let scale = row
                .iter()
                .fold(Int::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .map(|v| v.numer() * (&scale / v.denom()))
                .collect()
        })
        .collect()
}

fn bareiss_rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = m[rank][col]
                    .checked_mul(m[r][c])?
                    .checked_sub(m[r][col].checked_mul(m[rank][c])?)?;
                debug_assert_eq!(num % prev, 0);
                m[r][c] = num / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(mut m: Vec<Vec<Int>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut prev = Int::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero());
                m[r][c] = q;
            }
            m[r][col] = Int::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over the rationals via fraction-free elimination; exact, no floats.
pub fn rank_exact(m: &RationalMatrix) -> usize {
    let big = integer_rows(m);
    let small: Option<Vec<Vec<i128>>> = big
        .iter()
        .map(|row| row.iter().map(|v| i128::try_from(v).ok()).collect())
        .collect();
    if let Some(small) = small {
        if let Some(rank) = bareiss_rank_i128(small) {
            return rank;
        }
    }
    bareiss_rank_big(big)
}

/// A row in echelon position, together with the combination of original rows
/// that produced it.
struct PivotRow {
    col: usize,
    values: Vec<Rational>,
    rhs: Rational,
    comb: Vec<Rational>,
}

/// Incremental Gaussian eliminator over the rationals that remembers, for
/// every reduced row, which combination of original rows it is.
struct Eliminator {
    total_rows: usize,
    pivots: Vec<PivotRow>,
}

/// Outcome of feeding one row to the [`Eliminator`].
enum Fed {
    Independent,
    /// The row is a combination of earlier pivot rows. `comb` expresses the
    /// vanishing combination (entry 1 at the fed row itself); `rhs` is the
    /// residual right-hand side of that combination.
    Dependent { rhs: Rational, comb: Vec<Rational> },
}

impl Eliminator {
    fn new(total_rows: usize) -> Self {
        Eliminator {
            total_rows,
            pivots: Vec::new(),
        }
    }

    fn feed(&mut self, index: usize, mut row: Vec<Rational>, mut rhs: Rational) -> Fed {
        let mut comb = vec![Rational::zero(); self.total_rows];
        comb[index] = Rational::one();
        for p in &self.pivots {
            if row[p.col].is_zero() {
                continue;
            }
            let factor = &row[p.col] / &p.values[p.col];
            for (c, v) in p.values.iter().enumerate() {
                if !v.is_zero() {
                    row[c] -= &factor * v;
                }
            }
            rhs -= &factor * &p.rhs;
            for (j, v) in p.comb.iter().enumerate() {
                if !v.is_zero() {
                    comb[j] -= &factor * v;
                }
            }
        }
        match row.iter().position(|v| !v.is_zero()) {
            Some(col) => {
                self.pivots.push(PivotRow {
                    col,
                    values: row,
                    rhs,
                    comb,
                });
                Fed::Independent
            }
            None => Fed::Dependent { rhs, comb },
        }
    }

    /// The canonical solution with all free variables pinned to zero.
    /// Pivot rows are triangular in insertion order, so back-substitution
    /// runs newest-first.
    fn solve_pinned(&self, cols: usize) -> Vec<Rational> {
        let mut solution = vec![Rational::zero(); cols];
        for p in self.pivots.iter().rev() {
            let mut acc = p.rhs.clone();
            for (c, v) in p.values.iter().enumerate() {
                if c != p.col && !v.is_zero() && !solution[c].is_zero() {
                    acc -= v * &solution[c];
                }
            }
            solution[p.col] = acc / &p.values[p.col];
        }
        solution
    }
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// One exact solution, with all elimination-free variables set to zero.
    Solution(Vec<Rational>),
    /// The system is inconsistent; the payload `c` is a dual certificate
    /// with `c^t M = 0` and `c^t z != 0`, normalized to the primitive
    /// integer representative with positive leading support entry. Its
    /// support is always a minimal dependent row set.
    Inconsistent(Vec<Rational>),
}

/// Solves `M a = z` exactly, or produces a dual infeasibility certificate.
pub fn solve_exact(m: &RationalMatrix, z: &[Rational]) -> Result<SolveOutcome, LinalgError> {
    if z.len() != m.rows() {
        return Err(LinalgError::DimensionError {
            expected: m.rows(),
            found: z.len(),
        });
    }
    let mut elim = Eliminator::new(m.rows());
    for r in 0..m.rows() {
        if let Fed::Dependent { rhs, comb } = elim.feed(r, m.row(r).to_vec(), z[r].clone()) {
            if !rhs.is_zero() {
                let primitive = integerize(&comb).expect("dependency combination is nonzero");
                let certificate = primitive.into_iter().map(Rational::from_integer).collect();
                return Ok(SolveOutcome::Inconsistent(certificate));
            }
        }
    }
    Ok(SolveOutcome::Solution(elim.solve_pinned(m.cols())))
}

/// A minimal linearly dependent row set: the coefficient-weighted sum of the
/// supported rows vanishes and every proper subset is independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitWitness {
    support: Vec<usize>,
    coefficients: Vec<Rational>,
}

impl CircuitWitness {
    /// Row indices of the circuit, ascending.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// Nonzero dependency coefficients aligned with [`Self::support`].
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }
}

/// Outcome of a fundamental-circuit search over a row set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CircuitOutcome {
    /// The rows are linearly independent.
    IndependentRows,
    /// The fundamental circuit of the first row dependent on earlier rows.
    Circuit(CircuitWitness),
}

/// Greedily builds a row basis in index order and returns the fundamental
/// circuit of the first dependent row: that row plus the basis rows carrying
/// nonzero coefficients in its unique expression over the basis.
pub fn fundamental_circuit(m: &RationalMatrix) -> CircuitOutcome {
    let mut elim = Eliminator::new(m.rows());
    for r in 0..m.rows() {
        if let Fed::Dependent { comb, .. } = elim.feed(r, m.row(r).to_vec(), Rational::zero()) {
            let support: Vec<usize> = (0..=r).filter(|&j| !comb[j].is_zero()).collect();
            let coefficients: Vec<Rational> =
                support.iter().map(|&j| comb[j].clone()).collect();
            let witness = CircuitWitness {
                support,
                coefficients,
            };
            assert!(
                circuit_is_minimal(m, &witness),
                "fundamental circuit failed its minimality post-invariant"
            );
            return CircuitOutcome::Circuit(witness);
        }
    }
    CircuitOutcome::IndependentRows
}

/// Post-invariant for circuits: the weighted row sum vanishes, and the
/// supported rows have rank exactly `|support| - 1`.
fn circuit_is_minimal(m: &RationalMatrix, w: &CircuitWitness) -> bool {
    for c in 0..m.cols() {
        let sum = w
            .support
            .iter()
            .zip(&w.coefficients)
            .fold(Rational::zero(), |acc, (&r, coeff)| {
                acc + coeff * m.get(r, c)
            });
        if !sum.is_zero() {
            return false;
        }
    }
    if w.coefficients.iter().any(Zero::is_zero) {
        return false;
    }
    rank_exact(&m.select_rows(&w.support)) == w.support.len() - 1
}

/// Scales a rational vector to its unique primitive integer representative:
/// clear denominators, divide by the numerator gcd, and flip signs so the
/// lowest-index support entry is positive.
pub fn integerize(coeffs: &[Rational]) -> Result<Vec<Int>, LinalgError> {
    if coeffs.iter().all(Zero::is_zero) {
        return Err(LinalgError::ZeroVector);
    }
    let scale = coeffs
        .iter()
        .fold(Int::one(), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<Int> = coeffs
        .iter()
        .map(|v| v.numer() * (&scale / v.denom()))
        .collect();
    let gcd = ints
        .iter()
        .filter(|v| !v.is_zero())
        .fold(Int::zero(), |acc, v| acc.gcd(v));
    for v in &mut ints {
        *v = &*v / &gcd;
    }
    if ints
        .iter()
        .find(|v| !v.is_zero())
        .is_some_and(Signed::is_negative)
    {
        for v in &mut ints {
            *v = -&*v;
        }
    }
    Ok(ints)
}
