//! Brute-force reference oracles, deliberately independent of the exact
//! linear-algebra path they cross-check.
//!
//! [`brute_force_good`] decides goodness by exhaustive search: a set is good
//! exactly when no subset of its points admits nonzero integer coefficients
//! (bounded here by `coeff_bound`) whose signed per-axis indicator sums all
//! vanish. That is only feasible at desk scale, which is the point: the
//! production decision runs on rank, and the two must agree on every small
//! instance.

use addsep_core::{Point, PointSet};

/// Enumerates every subset with `1 <= k <= max_k` points of the full product
/// over per-axis alphabet sizes `dims`, as point sets. Cells are ordered
/// with the last axis fastest; subsets follow ascending bitmask order.
pub fn enumerate_product_subsets(dims: &[usize], max_k: usize) -> Vec<PointSet> {
    let n = dims.len();
    let total: usize = dims.iter().product();
    assert!(total <= 20, "universe too large to enumerate");
    let mut cells: Vec<Point> = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut cell = vec![String::new(); n];
        for axis in (0..n).rev() {
            cell[axis] = (idx % dims[axis]).to_string();
            idx /= dims[axis];
        }
        cells.push(cell);
    }
    let mut sets = Vec::new();
    for mask in 1usize..(1 << total) {
        if mask.count_ones() as usize > max_k {
            continue;
        }
        let points: Vec<Point> = (0..total)
            .filter(|&c| mask & (1 << c) != 0)
            .map(|c| cells[c].clone())
            .collect();
        sets.push(PointSet::new(n, points).expect("cells are distinct"));
    }
    sets
}

/// Brute-force goodness: searches all subsets and all coefficient vectors
/// with entries in `[-coeff_bound, coeff_bound] \ {0}` for a vanishing
/// signed indicator combination. Sign symmetry lets the first coefficient
/// stay positive.
pub fn brute_force_good(s: &PointSet, coeff_bound: i64) -> bool {
    assert!(s.len() <= 16, "brute force is for desk-scale sets");
    assert!(coeff_bound >= 1);
    let k = s.len();
    for mask in 1usize..(1 << k) {
        let subset: Vec<usize> = (0..k).filter(|&j| mask & (1 << j) != 0).collect();
        if has_vanishing_combination(s, &subset, coeff_bound) {
            return false;
        }
    }
    true
}

/// Whether some coefficient vector over the given points makes every
/// per-axis indicator sum vanish.
fn has_vanishing_combination(s: &PointSet, subset: &[usize], bound: i64) -> bool {
    let n = s.axes();
    let offsets: Vec<usize> = {
        let mut acc = 0;
        (0..n)
            .map(|i| {
                let o = acc;
                acc += s.alphabet_size(i);
                o
            })
            .collect()
    };
    let total_symbols: usize = (0..n).map(|i| s.alphabet_size(i)).sum();
    let columns: Vec<Vec<usize>> = subset
        .iter()
        .map(|&j| (0..n).map(|i| offsets[i] + s.coord_index(j, i)).collect())
        .collect();
    // Magnitude-ascending alternating-sign value order finds small witnesses
    // first; the leading slot stays positive.
    let mut values = Vec::with_capacity(2 * bound as usize);
    for v in 1..=bound {
        values.push(v);
        values.push(-v);
    }
    let mut sums = vec![0i64; total_symbols];
    search(&columns, &values, 0, &mut sums)
}

fn search(columns: &[Vec<usize>], values: &[i64], slot: usize, sums: &mut [i64]) -> bool {
    if slot == columns.len() {
        return sums.iter().all(|&v| v == 0);
    }
    for &v in values {
        // Negating a whole witness is again a witness, so the leading slot
        // only takes positive values.
        if slot == 0 && v < 0 {
            continue;
        }
        for &c in &columns[slot] {
            sums[c] += v;
        }
        if search(columns, values, slot + 1, sums) {
            return true;
        }
        for &c in &columns[slot] {
            sums[c] -= v;
        }
    }
    false
}
