#![allow(dead_code)]

use fsdist_core::{Bool, Dist, FunTable, Rational};
use proptest::collection::{btree_map, vec};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=8).prop_map(|(n, d)| Rational::new(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=8, 1i64..=8, any::<bool>())
        .prop_map(|(n, d, neg)| Rational::new(if neg { -n } else { n }, d))
}

pub fn step() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(Rational::new(1, 1)),
        Just(Rational::new(1, 2)),
        Just(Rational::new(2, 3)),
        Just(Rational::new(-1, 3)),
    ]
}

/// Distribution over a small alphabet `0..6`.
pub fn dist() -> impl Strategy<Value = Dist<u8>> {
    btree_map(0u8..6, nonzero_rational(), 0..=4).prop_map(Dist::from_weights)
}

pub fn dist_over(points: std::ops::Range<u8>) -> impl Strategy<Value = Dist<u8>> {
    btree_map(points, nonzero_rational(), 0..=4).prop_map(Dist::from_weights)
}

pub fn nested() -> impl Strategy<Value = Dist<Dist<u8>>> {
    btree_map(dist(), nonzero_rational(), 0..=3).prop_map(Dist::from_weights)
}

pub fn line_point() -> impl Strategy<Value = Rational> {
    (-12i64..=12, prop_oneof![Just(1i64), Just(2), Just(3), Just(6)])
        .prop_map(|(n, d)| Rational::new(n, d))
}

pub fn line_dist() -> impl Strategy<Value = Dist<Rational>> {
    btree_map(line_point(), nonzero_rational(), 0..=4).prop_map(Dist::from_weights)
}

/// A total test function on `0..6`.
pub fn test_fn() -> impl Strategy<Value = FunTable<u8, Rational>> {
    vec(rational(), 6).prop_map(|vs| FunTable::from_pairs((0u8..6).zip(vs)))
}

pub fn bool_dist() -> impl Strategy<Value = Dist<u8, Bool>> {
    proptest::collection::btree_set(0u8..6, 0..=4)
        .prop_map(|s| Dist::from_weights(s.into_iter().map(|x| (x, Bool(true)))))
}

/// Independent definition of the product measure: `(x, y) ↦ P(x)·Q(y)`.
pub fn product_oracle<X: Ord + Clone, Y: Ord + Clone>(
    p: &Dist<X>,
    q: &Dist<Y>,
) -> Dist<(X, Y)> {
    let mut pairs = Vec::new();
    for (x, a) in p {
        for (y, b) in q {
            pairs.push(((x.clone(), y.clone()), a * b));
        }
    }
    Dist::from_weights(pairs)
}

/// `Σ P(x)·φ(x)` by direct summation.
pub fn sum_oracle<X: Ord>(p: &Dist<X>, phi: impl Fn(&X) -> Rational) -> Rational {
    p.iter().fold(Rational::zero(), |acc, (x, w)| acc + w * &phi(x))
}
