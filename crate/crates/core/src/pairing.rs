//! Integration of test functions against distributions, and the action
//! `P ⊢ φ` of scalar functions on distributions.

use alloc::vec::Vec;
use core::marker::PhantomData;

use crate::dist::{from_scalar, Dist, Module};
use crate::scalars::{Field, Semiring};
use crate::space::{FunTable, TestFn};
use crate::strength::t1;
use crate::Error;

fn require_defined<X, B, P>(p: &Dist<X, impl Semiring>, phi: &P) -> Result<(), Error>
where
    X: Ord,
    P: TestFn<X, B>,
{
    if p.support().all(|x| phi.eval(x).is_some()) {
        Ok(())
    } else {
        Err(Error::Domain)
    }
}

/// `⟨P, φ⟩ = Σ P(x)·φ(x)`, the linear extension of `φ` applied to `P`.
pub fn pair<X, S, B, P>(p: &Dist<X, S>, phi: &P) -> Result<B, Error>
where
    X: Ord,
    S: Semiring,
    B: Module<S>,
    P: TestFn<X, B>,
{
    require_defined(p, phi)?;
    Ok(p.extend(|x| phi.eval(x).expect("domain checked")))
}

/// Pointwise product `(φ·ψ)(x) = φ(x)·ψ(x)` of a scalar function with a
/// module-valued one.
pub struct Product<'a, S, P: ?Sized, Q: ?Sized> {
    scalar: &'a P,
    value: &'a Q,
    _scalar: PhantomData<S>,
}

impl<X, S, B, P, Q> TestFn<X, B> for Product<'_, S, P, Q>
where
    S: Semiring,
    B: Module<S>,
    P: TestFn<X, S> + ?Sized,
    Q: TestFn<X, B> + ?Sized,
{
    fn eval(&self, x: &X) -> Option<B> {
        let c = self.scalar.eval(x)?;
        Some(self.value.eval(x)?.scaled(&c))
    }
}

pub fn product<'a, S, P: ?Sized, Q: ?Sized>(scalar: &'a P, value: &'a Q) -> Product<'a, S, P, Q> {
    Product {
        scalar,
        value,
        _scalar: PhantomData,
    }
}

/// The semantics `τ(P)`: the functional "integrate against `P`".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semantics<X, S> {
    dist: Dist<X, S>,
}

impl<X: Ord, S: Semiring> Semantics<X, S> {
    pub fn apply<B, P>(&self, phi: &P) -> Result<B, Error>
    where
        B: Module<S>,
        P: TestFn<X, B>,
    {
        pair(&self.dist, phi)
    }
}

pub fn semantics<X: Ord + Clone, S: Semiring>(p: &Dist<X, S>) -> Semantics<X, S> {
    Semantics { dist: p.clone() }
}

/// Evaluate a functional at the single test function `η : X → T(X)`.
pub fn eval_at_eta<X: Ord + Clone, S: Semiring>(f: &Semantics<X, S>) -> Dist<X, S> {
    f.apply(&|x: &X| Dist::dirac(x.clone()))
        .expect("η is total")
}

/// `P ⊢ φ`: the 1-linear extension of `(x, φ) ↦ t′(φ(x), x)`, i.e. the
/// pointwise reweighting `x ↦ P(x)·φ(x)`.
pub fn fn_action<X, S, P>(p: &Dist<X, S>, phi: &P) -> Result<Dist<X, S>, Error>
where
    X: Ord + Clone,
    S: Semiring,
    P: TestFn<X, S> + ?Sized,
{
    if p.support().any(|x| phi.eval(x).is_none()) {
        return Err(Error::Domain);
    }
    Ok(p.extend(|x| {
        let c = phi.eval(x).expect("domain checked");
        t1(&from_scalar(c), x).pushforward(|((), x)| x.clone())
    }))
}

/// A density of `q` with respect to `p`: `φ` with `q = p ⊢ φ`, given as a
/// table over `supp(p)`. Points outside `supp(p)` are not in the table;
/// callers treating the density as total should read them as 0.
pub fn density<X, S>(q: &Dist<X, S>, p: &Dist<X, S>) -> Result<FunTable<X, S>, Error>
where
    X: Ord + Clone,
    S: Field,
{
    if q.support().any(|x| !p.contains(x)) {
        return Err(Error::NoDensity);
    }
    let mut pairs = Vec::with_capacity(p.len());
    for (x, w) in p {
        let ratio = q.weight(x).divide(w).ok_or(Error::NoDensity)?;
        pairs.push((x.clone(), ratio));
    }
    Ok(FunTable::from_pairs(pairs))
}

/// `⟨P ⊢ φ, ψ⟩ = ⟨P, φ·ψ⟩`.
pub fn check_switch<X, S, B, P, Q>(p: &Dist<X, S>, phi: &P, psi: &Q) -> Result<bool, Error>
where
    X: Ord + Clone,
    S: Semiring,
    B: Module<S> + PartialEq,
    P: TestFn<X, S>,
    Q: TestFn<X, B>,
{
    let lhs: B = pair(&fn_action(p, phi)?, psi)?;
    let rhs: B = pair(p, &product(phi, psi))?;
    Ok(lhs == rhs)
}

/// Frobenius reciprocity `f_*(P) ⊢ φ = f_*(P ⊢ f^*φ)`.
pub fn check_frobenius<X, Y, S, F, P>(f: F, p: &Dist<Y, S>, phi: &P) -> Result<bool, Error>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
    F: Fn(&Y) -> X,
    P: TestFn<X, S>,
{
    let lhs = fn_action(&p.pushforward(&f), phi)?;
    let pulled = |y: &Y| phi.eval(&f(y));
    let reweighted = fn_action(p, &Pulled(&pulled))?;
    Ok(lhs == reweighted.pushforward(&f))
}

struct Pulled<'a, G>(&'a G);

impl<Y, S, G> TestFn<Y, S> for Pulled<'_, G>
where
    G: Fn(&Y) -> Option<S>,
{
    fn eval(&self, y: &Y) -> Option<S> {
        (self.0)(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn ab(a: i64, b: i64) -> Dist<char> {
        Dist::from_weights([('a', r(a)), ('b', r(b))])
    }

    #[test]
    fn pairing_examples() {
        let phi = FunTable::from_pairs([('a', r(5)), ('b', r(7))]);
        assert_eq!(pair(&Dist::dirac('b'), &phi), Ok(r(7)));
        assert_eq!(pair(&ab(2, 3), &phi), Ok(r(31)));
        assert_eq!(pair(&ab(2, 3), &|_: &char| r(1)), Ok(ab(2, 3).total()));
        let partial = FunTable::from_pairs([('a', r(1))]);
        assert_eq!(pair::<_, _, Rational, _>(&ab(2, 3), &partial), Err(Error::Domain));
    }

    #[test]
    fn semantics_examples() {
        let phi = |x: &char| if *x == 'a' { r(4) } else { r(9) };
        assert_eq!(semantics(&Dist::dirac('a')).apply(&phi), Ok(r(4)));
        let p = ab(2, -3);
        assert_eq!(eval_at_eta(&semantics(&p)), p);
        let empty: Dist<char> = Dist::empty();
        assert_eq!(semantics(&empty).apply(&phi), Ok(Rational::zero()));
    }

    #[test]
    fn action_examples() {
        let phi = FunTable::from_pairs([('a', Rational::new(1, 2)), ('b', r(0))]);
        assert_eq!(fn_action(&ab(2, 4), &phi), Ok(Dist::from_weights([('a', r(1))])));
        assert_eq!(
            fn_action(&Dist::dirac('a'), &phi),
            Ok(Dist::dirac('a').scale(&Rational::new(1, 2)))
        );
        assert_eq!(fn_action(&ab(2, 4), &|_: &char| r(1)), Ok(ab(2, 4)));
    }

    #[test]
    fn density_examples() {
        let phi = density(&ab(2, 3), &ab(1, 1)).unwrap();
        assert_eq!(phi.get(&'a'), Some(&r(2)));
        assert_eq!(phi.get(&'b'), Some(&r(3)));
        let unit = density(&ab(2, 3), &ab(2, 3)).unwrap();
        assert!(unit.iter().all(|(_, v)| *v == r(1)));
        let q: Dist<char> = Dist::dirac('c');
        assert_eq!(density(&q, &Dist::dirac('a')), Err(Error::NoDensity));
        assert_eq!(fn_action(&ab(1, 1), &phi), Ok(ab(2, 3)));
    }

    #[test]
    fn switch_and_frobenius() {
        let phi = FunTable::from_pairs([('a', r(3)), ('b', r(-1))]);
        let psi = |x: &char| Dist::<u8>::from_weights([(*x as u8, r(2)), (0, r(1))]);
        assert_eq!(check_switch(&ab(2, 5), &phi, &psi), Ok(true));
        assert_eq!(check_switch(&Dist::empty(), &phi, &psi), Ok(true));
        let f = |x: &char| *x == 'a';
        let bool_phi = FunTable::from_pairs([(true, r(7)), (false, r(2))]);
        assert_eq!(check_frobenius(f, &ab(2, 5), &bool_phi), Ok(true));
        assert_eq!(check_frobenius(f, &Dist::empty(), &bool_phi), Ok(true));
    }
}
