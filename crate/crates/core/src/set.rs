//! Finite point sets over opaque symbol alphabets, and exact function tables
//! on them.
//!
//! A [`PointSet`] is an ordered list of `k` distinct `n`-tuples of symbols.
//! Symbols are compared only for equality; per-axis alphabets are derived
//! from the points themselves in first-occurrence order, so every axis
//! alphabet equals the projection of the set onto that axis and all
//! downstream column layouts and certificates are reproducible.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Rational;

/// An opaque coordinate symbol. Only equality is meaningful.
pub type Symbol = String;

/// An `n`-tuple of symbols.
pub type Point = Vec<Symbol>;

/// Errors from point-set and function-table construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetError {
    /// The point list is empty.
    EmptySet,
    /// The axis count is zero.
    ZeroAxes,
    /// A point's arity differs from the declared axis count.
    ArityMismatch {
        point_index: usize,
        expected: usize,
        found: usize,
    },
    /// Two entries are the same tuple; the payload is the offending index pair.
    DuplicatePoint(usize, usize),
    /// A subset selector referenced a point index out of range.
    IndexOutOfRange(usize),
}

impl fmt::Display for SetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetError::EmptySet => write!(f, "point list is empty"),
            SetError::ZeroAxes => write!(f, "axis count must be at least 1"),
            SetError::ArityMismatch {
                point_index,
                expected,
                found,
            } => write!(
                f,
                "point {point_index} has {found} coordinates, expected {expected}"
            ),
            SetError::DuplicatePoint(a, b) => {
                write!(f, "points {a} and {b} are identical")
            }
            SetError::IndexOutOfRange(i) => write!(f, "point index {i} out of range"),
        }
    }
}

impl core::error::Error for SetError {}

/// A finite set of distinct points in `X1 x X2 x ... x Xn`, with per-axis
/// alphabets in first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    n: usize,
    points: Vec<Point>,
    alphabets: Vec<Vec<Symbol>>,
    /// Points as alphabet indices: `coords[j][i]` is the position of the
    /// `i`-th coordinate of point `j` in `alphabets[i]`.
    coords: Vec<Vec<usize>>,
}

impl PointSet {
    /// Builds a point set from an ordered list of tuples.
    ///
    /// Rejects an empty list, tuples whose arity differs from `n`, and
    /// duplicate tuples. Alphabets are collected per axis in first-occurrence
    /// order over the point list.
    pub fn new(n: usize, points: Vec<Point>) -> Result<Self, SetError> {
        if n == 0 {
            return Err(SetError::ZeroAxes);
        }
        if points.is_empty() {
            return Err(SetError::EmptySet);
        }
        for (j, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(SetError::ArityMismatch {
                    point_index: j,
                    expected: n,
                    found: p.len(),
                });
            }
        }
        let mut seen: BTreeMap<&[Symbol], usize> = BTreeMap::new();
        for (j, p) in points.iter().enumerate() {
            if let Some(&first) = seen.get(p.as_slice()) {
                return Err(SetError::DuplicatePoint(first, j));
            }
            seen.insert(p.as_slice(), j);
        }

        let mut alphabets: Vec<Vec<Symbol>> = (0..n).map(|_| Vec::new()).collect();
        let mut coords: Vec<Vec<usize>> = Vec::with_capacity(points.len());
        {
            let mut lookup: Vec<BTreeMap<&Symbol, usize>> =
                (0..n).map(|_| BTreeMap::new()).collect();
            for p in &points {
                let mut row = Vec::with_capacity(n);
                for (i, sym) in p.iter().enumerate() {
                    let next = alphabets[i].len();
                    let idx = *lookup[i].entry(sym).or_insert(next);
                    if idx == next {
                        alphabets[i].push(sym.clone());
                    }
                    row.push(idx);
                }
                coords.push(row);
            }
        }

        Ok(PointSet {
            n,
            points,
            alphabets,
            coords,
        })
    }

    /// Axis count `n`.
    pub fn axes(&self) -> usize {
        self.n
    }

    /// Point count `k`.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// A point set is never empty; provided for idiom completeness.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The points, in input order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The `j`-th point.
    pub fn point(&self, j: usize) -> &Point {
        &self.points[j]
    }

    /// All per-axis alphabets.
    pub fn alphabets(&self) -> &[Vec<Symbol>] {
        &self.alphabets
    }

    /// The alphabet of axis `i`, in first-occurrence order.
    pub fn alphabet(&self, i: usize) -> &[Symbol] {
        &self.alphabets[i]
    }

    /// `m_i`, the alphabet size of axis `i`.
    pub fn alphabet_size(&self, i: usize) -> usize {
        self.alphabets[i].len()
    }

    /// `m1 + m2 + ... + mn`, the total symbol count over all axes.
    pub fn symbol_count(&self) -> usize {
        self.alphabets.iter().map(Vec::len).sum()
    }

    /// `m1 + ... + mn - (n - 1)`: the cardinality every good set respects.
    pub fn cardinality_bound(&self) -> usize {
        self.symbol_count() - (self.n - 1)
    }

    /// Alphabet index of the `i`-th coordinate of point `j`.
    pub fn coord_index(&self, j: usize, i: usize) -> usize {
        self.coords[j][i]
    }

    /// Position of `sym` in the alphabet of axis `i`, if it occurs there.
    pub fn symbol_index(&self, i: usize, sym: &str) -> Option<usize> {
        self.alphabets[i].iter().position(|s| s == sym)
    }

    /// Index of a point in the set, if present.
    pub fn position(&self, p: &[Symbol]) -> Option<usize> {
        self.points.iter().position(|q| q.as_slice() == p)
    }

    /// The sub-point-set selected by `indices` (kept in the given order).
    ///
    /// Alphabets are re-derived from the selected points, so the subset again
    /// has full projections.
    pub fn subset(&self, indices: &[usize]) -> Result<PointSet, SetError> {
        let mut selected = Vec::with_capacity(indices.len());
        for &i in indices {
            let p = self.points.get(i).ok_or(SetError::IndexOutOfRange(i))?;
            selected.push(p.clone());
        }
        PointSet::new(self.n, selected)
    }
}

/// An exact rational value for each point of a set: the table of a function
/// `f` on the set, with no floating point anywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    values: BTreeMap<Point, Rational>,
}

impl FunctionTable {
    /// Builds a table from `(point, value)` pairs; duplicate points are
    /// rejected with the offending index pair.
    pub fn new(entries: Vec<(Point, Rational)>) -> Result<Self, SetError> {
        let mut values = BTreeMap::new();
        let mut first_at: BTreeMap<Point, usize> = BTreeMap::new();
        for (j, (point, value)) in entries.into_iter().enumerate() {
            if let Some(&first) = first_at.get(&point) {
                return Err(SetError::DuplicatePoint(first, j));
            }
            first_at.insert(point.clone(), j);
            values.insert(point, value);
        }
        Ok(FunctionTable { values })
    }

    /// Tabulates `f` over all points of `s`.
    pub fn from_fn(s: &PointSet, mut f: impl FnMut(&[Symbol]) -> Rational) -> Self {
        let values = s
            .points()
            .iter()
            .map(|p| (p.clone(), f(p)))
            .collect::<BTreeMap<_, _>>();
        FunctionTable { values }
    }

    /// Number of tabulated points.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The value at `p`, if tabulated.
    pub fn get(&self, p: &[Symbol]) -> Option<&Rational> {
        self.values.get(p)
    }

    /// Iterates over `(point, value)` entries in lexicographic point order.
    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Rational)> {
        self.values.iter()
    }

    /// True when the table's domain is exactly the point list of `s`.
    pub fn matches_domain(&self, s: &PointSet) -> bool {
        self.values.len() == s.len() && s.points().iter().all(|p| self.values.contains_key(p))
    }

    /// The values aligned with the point order of `s`, when domains match.
    pub fn aligned_values(&self, s: &PointSet) -> Option<Vec<Rational>> {
        if !self.matches_domain(s) {
            return None;
        }
        Some(
            s.points()
                .iter()
                .map(|p| self.values[p].clone())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use num_traits::Zero;

    fn pt(syms: &[&str]) -> Point {
        syms.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn singleton() {
        let s = PointSet::new(2, vec![pt(&["a", "b"])]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.alphabet_size(0), 1);
        assert_eq!(s.alphabet_size(1), 1);
        assert_eq!(s.cardinality_bound(), 1);
    }

    #[test]
    fn alphabets_in_first_occurrence_order() {
        let s = PointSet::new(3, vec![pt(&["0", "0", "0"]), pt(&["0", "0", "1"])]).unwrap();
        assert_eq!(s.alphabets(), &[vec!["0"], vec!["0"], vec!["0", "1"]]);
        assert_eq!(s.coord_index(1, 2), 1);

        let s = PointSet::new(2, vec![pt(&["z", "b"]), pt(&["a", "b"]), pt(&["z", "a"])]).unwrap();
        assert_eq!(s.alphabet(0), &["z".to_string(), "a".to_string()]);
        assert_eq!(s.alphabet(1), &["b".to_string(), "a".to_string()]);
    }

    #[test]
    fn duplicate_points_rejected() {
        let err = PointSet::new(2, vec![pt(&["a", "b"]), pt(&["a", "b"])]).unwrap_err();
        assert_eq!(err, SetError::DuplicatePoint(0, 1));
    }

    #[test]
    fn ragged_and_empty_rejected() {
        let err = PointSet::new(2, vec![pt(&["a", "b", "c"])]).unwrap_err();
        assert_eq!(
            err,
            SetError::ArityMismatch {
                point_index: 0,
                expected: 2,
                found: 3
            }
        );
        assert_eq!(PointSet::new(2, vec![]).unwrap_err(), SetError::EmptySet);
        assert_eq!(
            PointSet::new(0, vec![vec![]]).unwrap_err(),
            SetError::ZeroAxes
        );
    }

    #[test]
    fn subset_rederives_alphabets() {
        let s = PointSet::new(
            2,
            vec![pt(&["a", "x"]), pt(&["b", "y"]), pt(&["c", "x"])],
        )
        .unwrap();
        let t = s.subset(&[0, 2]).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.alphabet(0), &["a".to_string(), "c".to_string()]);
        assert_eq!(t.alphabet(1), &["x".to_string()]);
        assert_eq!(s.subset(&[5]).unwrap_err(), SetError::IndexOutOfRange(5));
        assert_eq!(
            s.subset(&[1, 1]).unwrap_err(),
            SetError::DuplicatePoint(0, 1)
        );
    }

    #[test]
    fn function_table_domain_checks() {
        let s = PointSet::new(2, vec![pt(&["a", "x"]), pt(&["b", "y"])]).unwrap();
        let f = FunctionTable::from_fn(&s, |_| Rational::zero());
        assert!(f.matches_domain(&s));
        assert_eq!(f.aligned_values(&s).unwrap().len(), 2);

        let g = FunctionTable::new(vec![(pt(&["a", "x"]), Rational::zero())]).unwrap();
        assert!(!g.matches_domain(&s));
        assert!(g.aligned_values(&s).is_none());

        let err = FunctionTable::new(vec![
            (pt(&["a", "x"]), Rational::zero()),
            (pt(&["a", "x"]), Rational::zero()),
        ])
        .unwrap_err();
        assert_eq!(err, SetError::DuplicatePoint(0, 1));
    }
}
