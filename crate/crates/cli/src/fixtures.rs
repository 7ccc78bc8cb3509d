//! The named fixture corpus: small sets with known verdicts and stored
//! certificates, used by the CLI self-test, the test suites, and the JSON
//! files under `fixtures/`.

use addsep_core::{FunctionTable, Int, LoopCertificate, Point, PointSet, Rational};

fn pts(raw: &[&[&str]]) -> Vec<Point> {
    raw.iter()
        .map(|p| p.iter().map(|s| s.to_string()).collect())
        .collect()
}

fn ints(raw: &[i64]) -> Vec<Int> {
    raw.iter().map(|&v| Int::from(v)).collect()
}

/// The five-point subset of a binary cube that forms a loop whose
/// coefficients cannot all be chosen in `{-1, +1}`; the canonical
/// coefficients are `(2, -1, -1, -1, 1)`.
pub fn loop5() -> (PointSet, LoopCertificate) {
    let points = pts(&[
        &["0", "0", "0"],
        &["0", "0", "1"],
        &["0", "1", "0"],
        &["1", "0", "0"],
        &["1", "1", "1"],
    ]);
    let set = PointSet::new(3, points.clone()).expect("fixture is well formed");
    let cert = LoopCertificate::new(points, ints(&[2, -1, -1, -1, 1]))
        .expect("fixture certificate is well formed");
    (set, cert)
}

/// The twenty-six-point loop that forces a coefficient of five: one point
/// weighted `+5`, fifteen weighted `-1`, ten weighted `+1`, listed rows
/// top-to-bottom and left-to-right as displayed.
pub fn loop26() -> (PointSet, LoopCertificate) {
    const RAW: [[i64; 3]; 26] = [
        [1, 1, 1],
        [2, 3, 1],
        [12, 1, 13],
        [1, 22, 23],
        [4, 5, 1],
        [14, 1, 15],
        [1, 24, 25],
        [6, 7, 1],
        [16, 1, 17],
        [1, 26, 27],
        [8, 9, 1],
        [18, 1, 19],
        [1, 28, 29],
        [10, 11, 1],
        [20, 1, 21],
        [1, 30, 31],
        [2, 5, 13],
        [12, 22, 25],
        [4, 7, 15],
        [14, 24, 27],
        [6, 9, 17],
        [16, 26, 29],
        [8, 11, 19],
        [18, 28, 31],
        [10, 3, 21],
        [20, 30, 23],
    ];
    let points: Vec<Point> = RAW
        .iter()
        .map(|p| p.iter().map(|v| v.to_string()).collect())
        .collect();
    let mut coefficients = vec![Int::from(5)];
    coefficients.extend(std::iter::repeat_n(Int::from(-1), 15));
    coefficients.extend(std::iter::repeat_n(Int::from(1), 10));
    let set = PointSet::new(3, points.clone()).expect("fixture is well formed");
    let cert = LoopCertificate::new(points, coefficients)
        .expect("fixture certificate is well formed");
    (set, cert)
}

/// Four points forming two uniquely linked components that nevertheless do
/// not make a good set: the componentwise criterion fails for three axes.
pub fn two_components() -> PointSet {
    PointSet::new(
        3,
        pts(&[
            &["0", "0", "0"],
            &["0", "0", "1"],
            &["1", "1", "0"],
            &["1", "1", "1"],
        ]),
    )
    .expect("fixture is well formed")
}

/// Union of one full axis line per coordinate through a common base point:
/// a good set of the maximum cardinality `m1 + ... + mn - (n - 1)`.
pub fn axes_union(sizes: &[usize]) -> PointSet {
    assert!(!sizes.is_empty() && sizes.iter().all(|&m| m >= 1));
    let n = sizes.len();
    let base: Point = vec!["0".to_string(); n];
    let mut points = vec![base.clone()];
    for (axis, &m) in sizes.iter().enumerate() {
        for sym in 1..m {
            let mut p = base.clone();
            p[axis] = sym.to_string();
            points.push(p);
        }
    }
    PointSet::new(n, points).expect("axes-union points are distinct")
}

/// The full `a x b` product grid, row-major.
pub fn grid(a: usize, b: usize) -> PointSet {
    assert!(a >= 1 && b >= 1);
    let mut points = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            points.push(vec![i.to_string(), j.to_string()]);
        }
    }
    PointSet::new(2, points).expect("grid points are distinct")
}

/// The coordinate-product function on the five-point loop: zero everywhere
/// except `1` at the all-ones point. Its signed sum over the loop is `1`.
pub fn xyz_on_loop5() -> FunctionTable {
    let (set, _) = loop5();
    FunctionTable::from_fn(&set, |p| {
        let product: i64 = p.iter().map(|sym| sym.parse::<i64>().unwrap()).product();
        Rational::from_integer(product.into())
    })
}
