//! Strengths, the two Fubini maps, partially linear extensions and
//! refutation-based linearity checks.
//!
//! For this monad the tensorial strength `t″(x, Q)` lets the point `x` ride
//! along `Q`, and `t′(P, y)` is its mirror image. The Fubini maps are
//! assembled from them exactly as composites of strengths and the monad
//! multiplication; their agreement is what makes the monad commutative.

use crate::dist::{Dist, Module};
use crate::scalars::Semiring;
use crate::space::{FiniteSpace, FunTable};
use crate::Error;

/// `t″ : X × T(Y) → T(X × Y)`.
pub fn t2<X, Y, S>(x: &X, q: &Dist<Y, S>) -> Dist<(X, Y), S>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    q.pushforward(|y| (x.clone(), y.clone()))
}

/// `t′ : T(X) × Y → T(X × Y)`.
pub fn t1<X, Y, S>(p: &Dist<X, S>, y: &Y) -> Dist<(X, Y), S>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    p.pushforward(|x| (x.clone(), y.clone()))
}

/// `⊗ = μ ∘ T(t′) ∘ t″`: the 2-linear extension of `t′`.
pub fn tensor<X, Y, S>(p: &Dist<X, S>, q: &Dist<Y, S>) -> Dist<(X, Y), S>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    t2(p, q).pushforward(|(p, y)| t1(p, y)).flatten()
}

/// `⊗̃ = μ ∘ T(t″) ∘ t′`: the 1-linear extension of `t″`.
pub fn tensor_tilde<X, Y, S>(p: &Dist<X, S>, q: &Dist<Y, S>) -> Dist<(X, Y), S>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    t1(p, q).pushforward(|(x, q)| t2(x, q)).flatten()
}

/// The cotensorial strength `λ` evaluated at one point of the common domain:
/// the distribution of `g(x)` for `g` drawn from `pf`.
pub fn cotensor_lambda<X, Y, S>(pf: &Dist<FunTable<X, Y>, S>, x: &X) -> Result<Dist<Y, S>, Error>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    if pf.support().any(|g| g.get(x).is_none()) {
        return Err(Error::Domain);
    }
    Ok(pf.pushforward(|g| g.get(x).cloned().expect("domain checked")))
}

/// `λ : T(X ⋔ Y) → X ⋔ T(Y)` over an explicit domain.
pub fn lambda<X, Y, S>(
    pf: &Dist<FunTable<X, Y>, S>,
    domain: &FiniteSpace<X>,
) -> Result<FunTable<X, Dist<Y, S>>, Error>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    let mut pairs = alloc::vec::Vec::with_capacity(domain.len());
    for x in domain.elements() {
        pairs.push((x.clone(), cotensor_lambda(pf, x)?));
    }
    Ok(FunTable::from_pairs(pairs))
}

/// The unique 2-linear extension of `f : X × Y → B` over `X × η`,
/// computed as `β ∘ T(f) ∘ t″`.
pub fn extend_2lin<X, Y, S, B, F>(f: F) -> impl Fn(&X, &Dist<Y, S>) -> B
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S>,
    F: Fn(&X, &Y) -> B,
{
    move |x, q| t2(x, q).extend(|(x, y)| f(x, y))
}

/// The unique 1-linear extension of `f : X × Y → B` over `η × Y`,
/// computed as `β ∘ T(f) ∘ t′`.
pub fn extend_1lin<X, Y, S, B, F>(f: F) -> impl Fn(&Dist<X, S>, &Y) -> B
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S>,
    F: Fn(&X, &Y) -> B,
{
    move |p, y| t1(p, y).extend(|(x, y)| f(x, y))
}

/// The unique bilinear extension of `f : X × Y → B` over `η × η`,
/// computed as `β ∘ T(f) ∘ ⊗`.
pub fn extend_bilin<X, Y, S, B, F>(f: F) -> impl Fn(&Dist<X, S>, &Dist<Y, S>) -> B
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S>,
    F: Fn(&X, &Y) -> B,
{
    move |p, q| tensor(p, q).extend(|(x, y)| f(x, y))
}

/// Bilinear extension in two stages: first 1-linearly over `η × Y`, then
/// 2-linearly over `T(X) × η`. Agrees with [`extend_bilin`] because the
/// monad is commutative.
pub fn extend_bilin_staged<X, Y, S, B, F>(f: F) -> impl Fn(&Dist<X, S>, &Dist<Y, S>) -> B
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S>,
    F: Fn(&X, &Y) -> B,
{
    let first = extend_1lin(f);
    move |p, q| t2(p, q).extend(|(p, y)| first(p, y))
}

/// Outcome of a randomized linearity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearityCheck {
    pub cases: usize,
    /// Index of the first sample violating the law.
    pub witness: Option<usize>,
}

impl LinearityCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    fn run<T, I, P>(samples: I, mut law: P) -> Self
    where
        I: IntoIterator<Item = T>,
        P: FnMut(&T) -> bool,
    {
        let mut cases = 0;
        for (i, sample) in samples.into_iter().enumerate() {
            cases += 1;
            if !law(&sample) {
                return LinearityCheck {
                    cases,
                    witness: Some(i),
                };
            }
        }
        LinearityCheck {
            cases,
            witness: None,
        }
    }
}

/// `f : T(X) → B` is T-linear: `f ∘ μ = β ∘ T(f)` on each sample.
pub fn check_linear<X, S, B, F, I>(f: F, samples: I) -> LinearityCheck
where
    X: Ord + Clone,
    S: Semiring,
    B: Module<S> + PartialEq,
    F: Fn(&Dist<X, S>) -> B,
    I: IntoIterator<Item = Dist<Dist<X, S>, S>>,
{
    LinearityCheck::run(samples, |pp| f(&pp.flatten()) == pp.extend(&f))
}

/// `f : X × T(Y) → B` is 2-linear: the pentagon
/// `f ∘ (X × μ) = β ∘ T(f) ∘ t″` holds on each sample.
pub fn check_2linear<X, Y, S, B, F, I>(f: F, samples: I) -> LinearityCheck
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S> + PartialEq,
    F: Fn(&X, &Dist<Y, S>) -> B,
    I: IntoIterator<Item = (X, Dist<Dist<Y, S>, S>)>,
{
    LinearityCheck::run(samples, |(x, qq)| {
        f(x, &qq.flatten()) == t2(x, qq).extend(|(x, q)| f(x, q))
    })
}

/// Mirror of [`check_2linear`] in the first variable, through `t′`.
pub fn check_1linear<X, Y, S, B, F, I>(f: F, samples: I) -> LinearityCheck
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S> + PartialEq,
    F: Fn(&Dist<X, S>, &Y) -> B,
    I: IntoIterator<Item = (Dist<Dist<X, S>, S>, Y)>,
{
    LinearityCheck::run(samples, |(pp, y)| {
        f(&pp.flatten(), y) == t1(pp, y).extend(|(p, y)| f(p, y))
    })
}

/// `f : T(X) × T(Y) → B` is linear in each variable separately.
///
/// Each sample `(PP, QQ)` tests 1-linearity at `(PP, μ(QQ))` and
/// 2-linearity at `(μ(PP), QQ)`.
pub fn check_bilinear<X, Y, S, B, F, I>(f: F, samples: I) -> LinearityCheck
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    B: Module<S> + PartialEq,
    F: Fn(&Dist<X, S>, &Dist<Y, S>) -> B,
    I: IntoIterator<Item = (Dist<Dist<X, S>, S>, Dist<Dist<Y, S>, S>)>,
{
    LinearityCheck::run(samples, |(pp, qq)| {
        let p = pp.flatten();
        let q = qq.flatten();
        let value = f(&p, &q);
        value == t1(pp, &q).extend(|(p, q)| f(p, q)) && value == t2(&p, qq).extend(|(p, q)| f(p, q))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use alloc::vec;
    use alloc::vec::Vec;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn sample_mixtures() -> Vec<Dist<Dist<char>>> {
        let a: Dist<char> = Dist::from_weights([('a', r(2)), ('b', r(-1))]);
        let b: Dist<char> = Dist::from_weights([('b', r(3))]);
        vec![
            Dist::from_weights([(a.clone(), r(2)), (b.clone(), Rational::new(1, 3))]),
            Dist::from_weights([(a, r(-1))]),
            Dist::dirac(b),
            Dist::empty(),
        ]
    }

    #[test]
    fn strength_examples() {
        let q: Dist<char> = Dist::from_weights([('u', r(2)), ('v', r(3))]);
        assert_eq!(t2(&'x', &Dist::<char>::dirac('y')), Dist::dirac(('x', 'y')));
        assert_eq!(
            t2(&'x', &q),
            Dist::from_weights([(('x', 'u'), r(2)), (('x', 'v'), r(3))])
        );
        assert!(t2(&'x', &Dist::<char>::empty()).is_empty());
        assert_eq!(
            t1(&q, &'x'),
            Dist::from_weights([(('u', 'x'), r(2)), (('v', 'x'), r(3))])
        );
    }

    #[test]
    fn tensor_examples() {
        let x: Dist<char> = Dist::dirac('x');
        let y: Dist<char> = Dist::dirac('y');
        assert_eq!(tensor(&x, &y), Dist::dirac(('x', 'y')));
        let a: Dist<char> = Dist::from_weights([('a', r(2))]);
        let b: Dist<char> = Dist::from_weights([('b', r(3))]);
        assert_eq!(tensor(&a, &b), Dist::from_weights([(('a', 'b'), r(6))]));
        let half: Dist<char> = Dist::uniform(['a', 'b']);
        let c: Dist<char> = Dist::from_weights([('c', r(3))]);
        assert_eq!(tensor(&half, &c).total(), r(3));
        assert_eq!(tensor_tilde(&x, &b), t2(&'x', &b));
        assert!(tensor_tilde(&Dist::<char>::empty(), &b).is_empty());
    }

    #[test]
    fn lambda_examples() {
        let dom = FiniteSpace::new(['x', 'y']);
        let g = FunTable::from_pairs([('x', 'u'), ('y', 'v')]);
        let h = FunTable::from_pairs([('x', 'u'), ('y', 'w')]);
        let pg: Dist<FunTable<char, char>> = Dist::dirac(g.clone());
        assert_eq!(cotensor_lambda(&pg, &'y').unwrap(), Dist::dirac('v'));
        let pf: Dist<FunTable<char, char>> = Dist::from_weights([(g, r(2)), (h, r(3))]);
        assert_eq!(cotensor_lambda(&pf, &'x').unwrap(), Dist::from_weights([('u', r(5))]));
        let table = lambda(&pf, &dom).unwrap();
        assert_eq!(table.get(&'y').unwrap().len(), 2);
        let empty: Dist<FunTable<char, char>> = Dist::empty();
        assert!(cotensor_lambda(&empty, &'x').unwrap().is_empty());
        assert_eq!(cotensor_lambda(&pf, &'z'), Err(Error::Domain));
    }

    #[test]
    fn extensions_through_units() {
        let f = |x: &char, y: &char| Dist::<(char, char)>::dirac((*x, *y));
        let q: Dist<char> = Dist::from_weights([('u', r(2)), ('v', r(-3))]);
        let p: Dist<char> = Dist::from_weights([('a', r(5)), ('b', Rational::new(1, 2))]);
        assert_eq!(extend_2lin(f)(&'x', &q), t2(&'x', &q));
        assert_eq!(extend_1lin(f)(&p, &'y'), t1(&p, &'y'));
        assert_eq!(extend_1lin(f)(&Dist::dirac('x'), &'y'), f(&'x', &'y'));
        assert_eq!(extend_bilin(f)(&p, &q), tensor(&p, &q));
        assert_eq!(extend_bilin_staged(f)(&p, &q), tensor(&p, &q));
    }

    #[test]
    fn linearity_checks() {
        let mixtures = sample_mixtures();
        let pairs: Vec<_> = mixtures
            .iter()
            .flat_map(|pp| mixtures.iter().map(move |qq| (pp.clone(), qq.clone())))
            .collect();
        assert!(check_bilinear(|p: &Dist<char>, q: &Dist<char>| tensor(p, q), pairs.clone()).holds());
        let ignores_q = check_bilinear(|p: &Dist<char>, _q: &Dist<char>| tensor(p, p), pairs.clone());
        assert!(!ignores_q.holds());
        assert!(check_bilinear(|_: &Dist<char>, _: &Dist<char>| Dist::<char>::empty(), pairs).holds());
        assert!(check_2linear(|x: &char, q: &Dist<char>| t2(x, q), mixtures.iter().map(|qq| ('x', qq.clone()))).holds());
        assert!(check_1linear(|p: &Dist<char>, y: &char| t1(p, y), mixtures.iter().map(|pp| (pp.clone(), 'y'))).holds());
        let check = check_linear(|p: &Dist<char>| p.total(), mixtures.clone());
        assert_eq!(check, LinearityCheck { cases: 4, witness: None });
        let squared = check_linear(|p: &Dist<char>| p.total().times(&p.total()), mixtures);
        assert_eq!(squared.witness, Some(0));
    }
}
