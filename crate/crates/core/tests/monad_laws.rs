mod common;

use common::*;
use fsdist_core::dist::{biproduct_merge, biproduct_split};
use fsdist_core::strength::{
    check_2linear, check_bilinear, check_linear, extend_bilin, extend_bilin_staged, t1, t2, tensor,
    tensor_tilde,
};
use fsdist_core::{Bool, Dist, Module, Rational, Tagged};
use proptest::prelude::*;

fn shift(x: &u8) -> u8 {
    (x + 1) % 6
}

fn fold(x: &u8) -> u8 {
    x / 2
}

fn kernel(x: &u8) -> Dist<u8> {
    Dist::from_weights([(*x, Rational::new(1, 2)), ((x + 3) % 6, Rational::from_integer(*x as i64 - 2))])
}

fn kernel2(x: &u8) -> Dist<u8> {
    Dist::from_weights([(x / 3, Rational::from_integer(3)), (5 - x % 6, Rational::new(-1, 4))])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn left_unit(x in 0u8..6) {
        prop_assert_eq!(Dist::dirac(x).bind(kernel), kernel(&x));
    }

    #[test]
    fn right_unit(p in dist()) {
        prop_assert_eq!(p.bind(|x| Dist::dirac(*x)), p.clone());
        prop_assert_eq!(p.pushforward(|x| Dist::<u8>::dirac(*x)).flatten(), p.clone());
        prop_assert_eq!(Dist::dirac(p.clone()).flatten(), p);
    }

    #[test]
    fn associativity(p in dist()) {
        prop_assert_eq!(
            p.bind(kernel).bind(kernel2),
            p.bind(|x| kernel(x).bind(kernel2))
        );
    }

    #[test]
    fn flatten_associative(ppp in proptest::collection::btree_map(nested(), nonzero_rational(), 0..=2)) {
        let ppp = Dist::from_weights(ppp);
        prop_assert_eq!(ppp.flatten().flatten(), ppp.pushforward(|pp| pp.flatten()).flatten());
    }

    #[test]
    fn functor_laws(p in dist()) {
        prop_assert_eq!(p.pushforward(|x| *x), p.clone());
        prop_assert_eq!(p.pushforward(shift).pushforward(fold), p.pushforward(|x| fold(&shift(x))));
    }

    #[test]
    fn naturality_of_unit_and_flatten(x in 0u8..6, pp in nested()) {
        prop_assert_eq!(Dist::<u8>::dirac(x).pushforward(shift), Dist::dirac(shift(&x)));
        prop_assert_eq!(
            pp.flatten().pushforward(shift),
            pp.pushforward(|p| p.pushforward(shift)).flatten()
        );
    }

    #[test]
    fn total_is_multiplicative_under_tensor(p in dist(), q in dist()) {
        prop_assert_eq!(tensor(&p, &q).total(), p.total() * q.total());
        prop_assert_eq!(Dist::<u8>::dirac(3).total(), Rational::one());
    }

    #[test]
    fn fubini_matches_product_oracle(p in dist(), q in dist_over(0..4)) {
        let oracle = product_oracle(&p, &q);
        prop_assert_eq!(tensor(&p, &q), oracle.clone());
        prop_assert_eq!(tensor_tilde(&p, &q), oracle);
    }

    #[test]
    fn strength_units(x in 0u8..6, y in 0u8..6, p in dist()) {
        prop_assert_eq!(t2(&x, &Dist::<u8>::dirac(y)), Dist::dirac((x, y)));
        prop_assert_eq!(t1(&Dist::<u8>::dirac(x), &y), Dist::dirac((x, y)));
        prop_assert_eq!(t2(&(), &p).pushforward(|((), y)| *y), p.clone());
        prop_assert_eq!(t1(&p, &()).pushforward(|(x, ())| *x), p);
    }

    #[test]
    fn strength_pentagons(x in 0u8..6, pp in nested()) {
        prop_assert!(check_2linear(|x: &u8, q: &Dist<u8>| t2(x, q), [(x, pp.clone())]).holds());
        let lhs = t1(&pp.flatten(), &x);
        let rhs = t1(&pp, &x).pushforward(|(p, y)| t1(p, y)).flatten();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_symmetric_and_associative(p in dist(), q in dist(), r in dist_over(0..3)) {
        prop_assert_eq!(tensor(&q, &p), tensor(&p, &q).pushforward(|(x, y)| (*y, *x)));
        let left = tensor(&tensor(&p, &q), &r).pushforward(|((x, y), z)| (*x, (*y, *z)));
        prop_assert_eq!(left, tensor(&p, &tensor(&q, &r)));
    }

    #[test]
    fn tensor_is_bilinear(pp in nested(), qq in nested()) {
        prop_assert!(check_bilinear(|p: &Dist<u8>, q: &Dist<u8>| tensor(p, q), [(pp, qq)]).holds());
    }

    #[test]
    fn bilinear_extension_agrees(p in dist(), q in dist()) {
        let f = |x: &u8, y: &u8| Dist::<u8>::dirac((x * y) % 6).scale(&Rational::from_integer(*x as i64 + 1));
        let direct = extend_bilin(f)(&p, &q);
        prop_assert_eq!(direct.clone(), extend_bilin_staged(f)(&p, &q));
        let mut oracle = Dist::empty();
        for (x, a) in &p {
            for (y, b) in &q {
                oracle = oracle.add(&f(x, y).scale(&(a * b)));
            }
        }
        prop_assert_eq!(direct, oracle);
    }

    #[test]
    fn combined_linear_maps_stay_linear(pp in nested(), c in nonzero_rational()) {
        let f = |p: &Dist<u8>| p.pushforward(shift);
        let g = |p: &Dist<u8>| p.bind(kernel);
        let h = |p: &Dist<u8>| f(p).plus(&g(p).scaled(&c));
        prop_assert!(check_linear(f, [pp.clone()]).holds());
        prop_assert!(check_linear(h, [pp]).holds());
    }

    #[test]
    fn biproduct_round_trip(a in dist(), b in dist_over(0..3)) {
        let merged = biproduct_merge(&a, &b);
        prop_assert_eq!(biproduct_split(&merged), (a.clone(), b.clone()));
        let tagged_total: Rational = merged.total();
        prop_assert_eq!(tagged_total, a.total() + b.total());
        prop_assert!(merged.support().all(|t| matches!(t, Tagged::L(_) | Tagged::R(_))));
    }

    #[test]
    fn boolean_monad_laws(p in bool_dist(), q in bool_dist(), x in 0u8..6) {
        let k = |x: &u8| Dist::<u8, Bool>::from_weights([(*x, Bool(true)), ((x + 2) % 6, Bool(true))]);
        prop_assert_eq!(Dist::<u8, Bool>::dirac(x).bind(k), k(&x));
        prop_assert_eq!(p.bind(|x| Dist::dirac(*x)), p.clone());
        prop_assert_eq!(p.bind(k).bind(k), p.bind(|x| k(x).bind(k)));
        prop_assert_eq!(tensor(&p, &q), tensor_tilde(&p, &q));
        let expected: Vec<(u8, u8)> = p.support().flat_map(|x| q.support().map(move |y| (*x, *y))).collect();
        let got: Vec<(u8, u8)> = tensor(&p, &q).support().copied().collect();
        prop_assert_eq!(got, expected);
    }
}

#[test]
fn non_bilinear_map_is_refuted() {
    let pp = Dist::from_weights([(Dist::dirac(0u8), Rational::one()), (Dist::dirac(1u8), Rational::one())]);
    let qq = Dist::dirac(Dist::dirac(0u8));
    let diag = |p: &Dist<u8>, _: &Dist<u8>| tensor(p, p);
    assert!(!check_bilinear(diag, [(pp, qq)]).holds());
}
