//! The 0/1 incidence matrix of a point set.
//!
//! The matrix has one row per point and one column per `(axis, symbol)`
//! pair, columns laid out axis block by axis block with offsets
//! `0, m1, m1+m2, ...`. Row `j` carries a single 1 in each axis block, at the
//! column of point `j`'s symbol on that axis. Linear dependencies among rows
//! are exactly the signed multi-sets of points whose per-axis indicator sums
//! vanish, which is what the whole analysis layer runs on.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::One;

use crate::linalg::RationalMatrix;
use crate::set::PointSet;
use crate::Rational;

/// Sparse row-indexed view of the incidence matrix of a [`PointSet`].
///
/// Stored as the `n` column indices of each row; the interface exposes
/// indexed access, row supports, and a dense rational copy for elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    /// Column offset of each axis block.
    offsets: Vec<usize>,
    /// For each row, the `n` one-entries' column indices in axis order.
    row_support: Vec<Vec<usize>>,
}

impl IncidenceMatrix {
    /// Builds the incidence matrix of `s`. Deterministic given `s`: columns
    /// follow the set's first-occurrence alphabet order.
    pub fn from_set(s: &PointSet) -> Self {
        let n = s.axes();
        let mut offsets = Vec::with_capacity(n);
        let mut cols = 0;
        for i in 0..n {
            offsets.push(cols);
            cols += s.alphabet_size(i);
        }
        let row_support = (0..s.len())
            .map(|j| (0..n).map(|i| offsets[i] + s.coord_index(j, i)).collect())
            .collect();
        IncidenceMatrix {
            rows: s.len(),
            cols,
            offsets,
            row_support,
        }
    }

    /// Row count `k`.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Column count `m1 + m2 + ... + mn`.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Column offsets of the axis blocks.
    pub fn block_offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Column of symbol index `sym_idx` in axis `i`'s block.
    pub fn column_of(&self, axis: usize, sym_idx: usize) -> usize {
        self.offsets[axis] + sym_idx
    }

    /// The 0/1 entry at `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        u8::from(self.row_support[row].contains(&col))
    }

    /// The columns holding the ones of `row`, one per axis block, ascending.
    pub fn row_support(&self, row: usize) -> &[usize] {
        &self.row_support[row]
    }

    /// Dense rational copy of the matrix, for exact elimination.
    pub fn to_rational(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zero(self.rows, self.cols);
        for (j, support) in self.row_support.iter().enumerate() {
            for &c in support {
                m.set(j, c, Rational::one());
            }
        }
        m
    }

    /// The `n - 1` displayed kernel witnesses: for each axis `i >= 2` the
    /// vector with `+1` over the whole first block, `-1` over block `i`, and
    /// zeros elsewhere. Each one multiplies the matrix to zero because every
    /// row has exactly one 1 per block. Empty for `n = 1`.
    pub fn kernel_witnesses(&self) -> Vec<Vec<i64>> {
        let n = self.offsets.len();
        let mut witnesses = Vec::new();
        for i in 1..n {
            let mut v = vec![0i64; self.cols];
            let first_len = if n > 1 { self.offsets[1] } else { self.cols };
            v[..first_len].fill(1);
            let end = if i + 1 < n { self.offsets[i + 1] } else { self.cols };
            v[self.offsets[i]..end].fill(-1);
            witnesses.push(v);
        }
        witnesses
    }

    /// `M * v` over the integers, for checking kernel membership exactly.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        self.row_support
            .iter()
            .map(|support| support.iter().map(|&c| v[c]).sum())
            .collect()
    }
}
