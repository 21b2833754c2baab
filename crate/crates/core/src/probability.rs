//! Total-one distributions: normalization, conditioning, joints and
//! marginals.
//!
//! Weights are not required to be nonnegative; `ProbDist` only pins the
//! total to exactly one.

use core::ops::Deref;

use crate::dist::Dist;
use crate::line::LineDist;
use crate::pairing::{fn_action, pair};
use crate::scalars::{Field, Rational, Semiring};
use crate::space::{FiniteSpace, FunTable, TestFn};
use crate::strength::tensor;
use crate::Error;

pub fn is_probability<X: Ord, S: Semiring>(p: &Dist<X, S>) -> bool {
    p.total() == S::one()
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProbDist<X, S = Rational>(Dist<X, S>);

impl<X: Ord, S: Semiring> TryFrom<Dist<X, S>> for ProbDist<X, S> {
    type Error = Error;

    fn try_from(p: Dist<X, S>) -> Result<Self, Error> {
        if is_probability(&p) {
            Ok(ProbDist(p))
        } else {
            Err(Error::NotProbability)
        }
    }
}

impl<X, S> ProbDist<X, S> {
    pub fn as_dist(&self) -> &Dist<X, S> {
        &self.0
    }

    pub fn into_dist(self) -> Dist<X, S> {
        self.0
    }
}

impl<X: Ord + Clone, S: Semiring> ProbDist<X, S> {
    pub fn dirac(x: X) -> Self {
        ProbDist(Dist::dirac(x))
    }

    /// True when no weight lies below zero.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|(_, w)| *w >= S::zero())
    }
}

impl<X, S> Deref for ProbDist<X, S> {
    type Target = Dist<X, S>;

    fn deref(&self) -> &Dist<X, S> {
        &self.0
    }
}

/// `P / tot(P)`.
pub fn normalize<X: Ord + Clone, S: Field>(p: &Dist<X, S>) -> Result<ProbDist<X, S>, Error> {
    let inv = p.total().inverse().ok_or(Error::ZeroTotal)?;
    Ok(ProbDist(p.scale(&inv)))
}

/// A scalar function taking only the values 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event<X, S = Rational>(FunTable<X, S>);

impl<X: Ord + Clone, S: Semiring> Event<X, S> {
    pub fn from_table(table: FunTable<X, S>) -> Result<Self, Error> {
        let idempotent = table.iter().all(|(_, v)| v.times(v) == *v);
        let binary = table.iter().all(|(_, v)| v.is_zero() || *v == S::one());
        if idempotent && binary {
            Ok(Event(table))
        } else {
            Err(Error::NotAnEvent)
        }
    }

    pub fn indicator<F: FnMut(&X) -> bool>(space: &FiniteSpace<X>, mut pred: F) -> Self {
        Event(FunTable::tabulate(space, |x| {
            if pred(x) {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    pub fn sure(space: &FiniteSpace<X>) -> Self {
        Event::indicator(space, |_| true)
    }

    pub fn table(&self) -> &FunTable<X, S> {
        &self.0
    }

    pub fn holds(&self, x: &X) -> Option<bool> {
        self.0.get(x).map(|v| !v.is_zero())
    }
}

impl<X: Ord, S: Clone> TestFn<X, S> for Event<X, S> {
    fn eval(&self, x: &X) -> Option<S> {
        self.0.get(x).cloned()
    }
}

/// `P∣φ = ⟨P, φ⟩⁻¹ · (P ⊢ φ)`.
pub fn condition<X, S, E>(p: &Dist<X, S>, event: &E) -> Result<ProbDist<X, S>, Error>
where
    X: Ord + Clone,
    S: Field,
    E: TestFn<X, S>,
{
    let mass: S = pair(p, event)?;
    let inv = mass.inverse().ok_or(Error::NullEvent)?;
    Ok(ProbDist(fn_action(p, event)?.scale(&inv)))
}

/// `P ⊗ Q`; totals multiply, so the result has total one.
pub fn joint<X, Y, S>(p: &ProbDist<X, S>, q: &ProbDist<Y, S>) -> ProbDist<(X, Y), S>
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    ProbDist(tensor(p, q))
}

/// Pushforwards along the two projections.
pub fn marginals<X, Y, S>(j: &Dist<(X, Y), S>) -> (Dist<X, S>, Dist<Y, S>)
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    (
        j.pushforward(|(x, _)| x.clone()),
        j.pushforward(|(_, y)| y.clone()),
    )
}

/// `J = J₁ ⊗ J₂` for the marginals `J₁, J₂`.
pub fn is_independent<X, Y, S>(j: &Dist<(X, Y), S>) -> bool
where
    X: Ord + Clone,
    Y: Ord + Clone,
    S: Semiring,
{
    let (a, b) = marginals(j);
    tensor(&a, &b) == *j
}

/// The distribution of `X + Y` for a joint distribution of `(X, Y)`.
pub fn rv_sum(j: &Dist<(Rational, Rational), Rational>) -> LineDist {
    j.pushforward(|(x, y)| x + y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::line::{convolve, expectation};

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn d6() -> Dist<Rational> {
        Dist::uniform((1..=6).map(r))
    }

    fn faces() -> FiniteSpace<Rational> {
        FiniteSpace::new((1..=6).map(r))
    }

    #[test]
    fn normalization() {
        let p: Dist<char> = Dist::from_weights([('a', r(2)), ('b', r(2))]);
        let n = normalize(&p).unwrap();
        assert_eq!(n.weight(&'a'), Rational::new(1, 2));
        assert!(is_probability(&Dist::<char>::dirac('x')));
        assert_eq!(normalize(&Dist::<char>::empty()), Err(Error::ZeroTotal));
        let signed: Dist<char> = Dist::from_weights([('a', r(2)), ('b', r(-1))]);
        let s = ProbDist::try_from(signed).unwrap();
        assert!(!s.is_nonnegative());
        assert!(!is_probability(&n.scale(&r(2))));
        assert_eq!(
            ProbDist::try_from(Dist::dirac('a').scale(&r(2))),
            Err(Error::NotProbability)
        );
    }

    #[test]
    fn events() {
        let even: Event<Rational> = Event::indicator(&faces(), |x| (x * &Rational::new(1, 2)).is_integer());
        assert_eq!(even.holds(&r(4)), Some(true));
        assert_eq!(even.holds(&r(7)), None);
        let bad = FunTable::from_pairs([('a', Rational::new(1, 2))]);
        assert_eq!(Event::from_table(bad), Err(Error::NotAnEvent));
        let two = FunTable::from_pairs([('a', r(2))]);
        assert_eq!(Event::from_table(two), Err(Error::NotAnEvent));
    }

    #[test]
    fn conditioning_examples() {
        let even = Event::indicator(&faces(), |x| *x == r(2) || *x == r(4) || *x == r(6));
        let c = condition(&d6(), &even).unwrap();
        assert_eq!(*c, Dist::uniform([r(2), r(4), r(6)]));
        let high = |x: &Rational| if *x >= r(4) { r(1) } else { r(0) };
        assert_eq!(pair(&c, &high), Ok(Rational::new(2, 3)));
        assert_eq!(*condition(&d6(), &Event::sure(&faces())).unwrap(), d6());
        let never = Event::indicator(&faces(), |_| false);
        assert_eq!(condition(&d6(), &never), Err(Error::NullEvent));
    }

    #[test]
    fn joint_and_marginals() {
        let p = ProbDist::try_from(d6()).unwrap();
        let coin = ProbDist::try_from(Dist::uniform([r(0), r(1)])).unwrap();
        let j = joint(&p, &coin);
        assert!(is_probability(&j));
        assert_eq!(marginals(&j), (d6(), coin.as_dist().clone()));
        assert!(is_independent(&j));
        let corr = Dist::from_weights([
            ((r(0), r(0)), Rational::new(1, 2)),
            ((r(1), r(1)), Rational::new(1, 2)),
        ]);
        assert!(!is_independent(&corr));
    }

    #[test]
    fn sums_of_random_variables() {
        let p = ProbDist::try_from(d6()).unwrap();
        let two = rv_sum(&joint(&p, &p));
        assert_eq!(two, convolve(&d6(), &d6()));
        assert_eq!(two.weight(&r(7)), Rational::new(6, 36));
        let corr = Dist::from_weights([
            ((r(0), r(0)), Rational::new(1, 2)),
            ((r(1), r(1)), Rational::new(1, 2)),
        ]);
        let s = rv_sum(&corr);
        assert_eq!(s, Dist::from_weights([(r(0), Rational::new(1, 2)), (r(2), Rational::new(1, 2))]));
        let (a, b) = marginals(&corr);
        assert_eq!(expectation(&s), expectation(&a) + expectation(&b));
        assert_eq!(rv_sum(&Dist::dirac((r(2), r(3)))), Dist::dirac(r(5)));
    }
}
