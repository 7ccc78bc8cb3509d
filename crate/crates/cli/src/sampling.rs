//! Seeded random instance generators for the randomized suites. All
//! randomness flows through a caller-supplied ChaCha generator, so every
//! suite is reproducible from its seed alone.

use std::collections::BTreeSet;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use addsep_core::{is_good, FunctionTable, Point, PointSet, Rational};

/// Shape limits for random point sets.
#[derive(Debug, Clone, Copy)]
pub struct SetShape {
    pub max_axes: usize,
    pub max_points: usize,
    pub max_alphabet: usize,
}

impl SetShape {
    pub fn new(max_axes: usize, max_points: usize, max_alphabet: usize) -> Self {
        assert!(max_axes >= 1 && max_points >= 1 && max_alphabet >= 1);
        SetShape {
            max_axes,
            max_points,
            max_alphabet,
        }
    }
}

/// A random point set within the shape limits: axis count, per-axis
/// alphabet sizes and a target cardinality are drawn uniformly, then points
/// are sampled with duplicates discarded.
pub fn random_point_set(rng: &mut ChaCha8Rng, shape: SetShape) -> PointSet {
    let axes = rng.gen_range(1..=shape.max_axes);
    random_point_set_with_axes(rng, axes, shape)
}

/// Like [`random_point_set`] but with a fixed axis count.
pub fn random_point_set_with_axes(
    rng: &mut ChaCha8Rng,
    axes: usize,
    shape: SetShape,
) -> PointSet {
    loop {
        let sizes: Vec<usize> = (0..axes)
            .map(|_| rng.gen_range(1..=shape.max_alphabet))
            .collect();
        let target = rng.gen_range(1..=shape.max_points);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut points: Vec<Point> = Vec::new();
        for _ in 0..target {
            let tuple: Vec<usize> = sizes.iter().map(|&m| rng.gen_range(0..m)).collect();
            if seen.insert(tuple.clone()) {
                points.push(tuple.iter().map(|v| v.to_string()).collect());
            }
        }
        if points.is_empty() {
            continue;
        }
        return PointSet::new(axes, points).expect("sampled points are distinct");
    }
}

/// Rejection-samples until the set is good.
pub fn random_good_set(rng: &mut ChaCha8Rng, shape: SetShape) -> PointSet {
    loop {
        let s = random_point_set(rng, shape);
        if is_good(&s).good {
            return s;
        }
    }
}

/// Rejection-samples until the set is not good.
pub fn random_bad_set(rng: &mut ChaCha8Rng, shape: SetShape) -> PointSet {
    loop {
        let s = random_point_set(rng, shape);
        if !is_good(&s).good {
            return s;
        }
    }
}

/// A random exact-rational function table over the whole set, with
/// numerators in `[-99, 99]` and denominators in `[1, 12]`.
pub fn random_function(rng: &mut ChaCha8Rng, s: &PointSet) -> FunctionTable {
    FunctionTable::from_fn(s, |_| {
        Rational::new(rng.gen_range(-99i64..=99).into(), rng.gen_range(1i64..=12).into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn sampling_is_seed_deterministic() {
        let shape = SetShape::new(4, 10, 5);
        let mut a = ChaCha8Rng::seed_from_u64(11);
        let mut b = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            assert_eq!(random_point_set(&mut a, shape), random_point_set(&mut b, shape));
        }
    }

    #[test]
    fn rejection_samplers_deliver_the_requested_verdict() {
        let shape = SetShape::new(3, 8, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            assert!(is_good(&random_good_set(&mut rng, shape)).good);
            assert!(!is_good(&random_bad_set(&mut rng, shape)).good);
        }
    }

    #[test]
    fn random_functions_cover_the_domain() {
        let shape = SetShape::new(3, 8, 3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = random_point_set(&mut rng, shape);
        let f = random_function(&mut rng, &s);
        assert!(f.matches_domain(&s));
    }
}
