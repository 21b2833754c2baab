//! Distributions on the rational line: convolution, moments, affine maps,
//! and the finite-difference calculus for a fixed nonzero step `d`.
//!
//! The derivative of `P` is the unique `P′` with `d·P′ = α_*(P) − P`, where
//! `α` is translation by `d`. Because `d` is invertible this is simply the
//! difference quotient, and differentiation of test functions is the
//! forward difference `(φ(x+d) − φ(x))/d`. Primitives exist for exactly
//! those distributions whose weights sum to zero on every coset `x + dℤ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::dist::{from_scalar, to_scalar, Dist};
use crate::pairing::{fn_action, pair};
use crate::scalars::Rational;
use crate::space::TestFn;
use crate::strength::tensor;
use crate::Error;

/// A distribution on the rational line.
pub type LineDist = Dist<Rational, Rational>;

/// `P ∗ Q`: the pushforward of `P ⊗ Q` along addition.
pub fn convolve(p: &LineDist, q: &LineDist) -> LineDist {
    tensor(p, q).pushforward(|(x, y)| x + y)
}

/// `P^{∗k}`, with `P^{∗0} = δ₀`.
pub fn convolve_power(p: &LineDist, k: u32) -> LineDist {
    let mut acc = Dist::dirac(Rational::zero());
    for _ in 0..k {
        acc = convolve(&acc, p);
    }
    acc
}

/// `⟨P, xⁿ⟩`.
pub fn moment(p: &LineDist, n: u32) -> Rational {
    pair(p, &|x: &Rational| x.pow(n)).expect("monomials are total")
}

/// `E(P) = ⟨P, x⟩`.
pub fn expectation(p: &LineDist) -> Rational {
    moment(p, 1)
}

/// Expectation computed as the monad multiplication at the one-point
/// space: each point `x` is read as the scalar `x ∈ T(1)`, so `P` becomes
/// an element of `T(T(1))`, which is then flattened.
pub fn expectation_as_mu(p: &LineDist) -> Rational {
    to_scalar(&p.pushforward(|x| from_scalar(x.clone())).flatten())
}

/// Pushforward along `x ↦ x + a`.
pub fn translate(p: &LineDist, a: &Rational) -> LineDist {
    p.pushforward(|x| x + a)
}

/// Pushforward along `x ↦ b·x`.
pub fn homothety(p: &LineDist, b: &Rational) -> LineDist {
    p.pushforward(|x| b * x)
}

/// `x ↦ slope·x + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub slope: Rational,
    pub offset: Rational,
}

impl AffineMap {
    pub fn new(slope: Rational, offset: Rational) -> Self {
        AffineMap { slope, offset }
    }

    pub fn apply(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.offset
    }

    pub fn is_invertible(&self) -> bool {
        !self.slope.is_zero()
    }
}

pub fn affine_push(p: &LineDist, f: &AffineMap) -> LineDist {
    p.pushforward(|x| f.apply(x))
}

/// `cg(P) = E(P / tot(P))`.
pub fn center_of_gravity(p: &LineDist) -> Result<Rational, Error> {
    let inv = p.total().recip().ok_or(Error::ZeroTotal)?;
    Ok(expectation(&p.scale(&inv)))
}

/// A nonzero difference step.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step(Rational);

impl Step {
    pub fn new(d: Rational) -> Result<Self, Error> {
        if d.is_zero() {
            Err(Error::ZeroStep)
        } else {
            Ok(Step(d))
        }
    }

    pub fn get(&self) -> &Rational {
        &self.0
    }

    fn inverse(&self) -> Rational {
        self.0.recip().expect("step is nonzero")
    }
}

/// `P′ = (α_*(P) − P) / d`.
pub fn derivative(p: &LineDist, step: &Step) -> LineDist {
    translate(p, step.get()).sub(p).scale(&step.inverse())
}

/// `φ′(x) = (φ(x + d) − φ(x)) / d`, defined where both values are.
pub fn fn_derivative<'a, P>(phi: &'a P, step: &'a Step) -> impl Fn(&Rational) -> Option<Rational> + 'a
where
    P: TestFn<Rational, Rational> + ?Sized,
{
    move |x| {
        let ahead = phi.eval(&(x + step.get()))?;
        let here = phi.eval(x)?;
        Some((ahead - here) * step.inverse())
    }
}

/// Adapter turning an `Option`-valued closure into a [`TestFn`].
pub struct Partial<F>(pub F);

impl<X, B, F: Fn(&X) -> Option<B>> TestFn<X, B> for Partial<F> {
    fn eval(&self, x: &X) -> Option<B> {
        (self.0)(x)
    }
}

/// Coset `x + dℤ` of a point: `(representative, index)` with
/// `x = representative + index·d` and `representative / d ∈ [0, 1)`.
fn coset(x: &Rational, step: &Step) -> (Rational, BigInt) {
    let k = (x * &step.inverse()).floor();
    let rep = x - &(Rational::from(k.clone()) * step.get());
    (rep, k)
}

/// The unique finitely supported `P` with `P′ = Q`.
///
/// On each coset `r + dℤ` the recurrence `P(x) = P(x − d) − d·Q(x)` is run
/// upward from the lowest index of `Q`; it terminates with zero exactly when
/// the coset's weights of `Q` sum to zero.
pub fn primitive(q: &LineDist, step: &Step) -> Result<LineDist, Error> {
    let mut orbits: BTreeMap<Rational, BTreeMap<BigInt, Rational>> = BTreeMap::new();
    for (x, w) in q {
        let (rep, k) = coset(x, step);
        orbits.entry(rep).or_default().insert(k, w.clone());
    }
    let d = step.get();
    let mut out = Vec::new();
    for (rep, weights) in orbits {
        let orbit_total = weights.values().fold(Rational::zero(), |acc, w| acc + w);
        if !orbit_total.is_zero() {
            return Err(Error::NoPrimitive);
        }
        let lo = weights.keys().next().expect("nonempty orbit").clone();
        let hi = weights.keys().next_back().expect("nonempty orbit").clone();
        let span = (&hi - &lo).to_u64().ok_or(Error::NoPrimitive)?;
        let mut running = Rational::zero();
        for offset in 0..span {
            let k = &lo + BigInt::from(offset);
            if let Some(w) = weights.get(&k) {
                running = running - &(d * w);
            }
            if !running.is_zero() {
                out.push((&rep + &(Rational::from(k) * d), running.clone()));
            }
        }
    }
    Ok(Dist::from_weights(out))
}

/// The interval `[a, b]`: the primitive of `δ_b − δ_a` for the step.
pub fn interval(a: &Rational, b: &Rational, step: &Step) -> Result<LineDist, Error> {
    let n = (b - a) * step.inverse();
    if !n.is_integer() {
        return Err(Error::NoPrimitive);
    }
    let ends = Dist::dirac(b.clone()).sub(&Dist::dirac(a.clone()));
    primitive(&ends, step)
}

/// The defect of the Leibniz rule for the difference calculus:
/// `(P′ ⊢ φ − P ⊢ φ′) − (P ⊢ φ)′`.
///
/// For a point mass `δ_x` this equals
/// `(φ(x+d) − φ(x))·(δ_{x+d} − δ_x)/d`, which vanishes only when the
/// product `d·φ′(x)·δ′_x` does.
pub fn leibniz_residual<P>(p: &LineDist, phi: &P, step: &Step) -> Result<LineDist, Error>
where
    P: TestFn<Rational, Rational> + ?Sized,
{
    let lhs = derivative(&fn_action(p, phi)?, step);
    let dphi = Partial(fn_derivative(phi, step));
    let rhs = fn_action(&derivative(p, step), phi)?.sub(&fn_action(p, &dphi)?);
    Ok(rhs.sub(&lhs))
}

impl LineDist {
    /// Sum of weights over each coset `x + dℤ`.
    pub fn coset_totals(&self, step: &Step) -> BTreeMap<Rational, Rational> {
        let mut totals: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (x, w) in self {
            let (rep, _) = coset(x, step);
            let slot = totals.entry(rep).or_insert_with(Rational::zero);
            *slot = &*slot + w;
        }
        totals.retain(|_, v| !v.is_zero());
        totals
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn line(pairs: &[(&str, &str)]) -> LineDist {
        Dist::from_weights(pairs.iter().map(|(x, w)| (q(x), q(w))))
    }

    fn step(s: &str) -> Step {
        Step::new(q(s)).unwrap()
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(
            convolve(&Dist::dirac(q("2")), &Dist::dirac(q("5/2"))),
            Dist::dirac(q("9/2"))
        );
        let die: LineDist = Dist::uniform((1..=6).map(Rational::from_integer));
        assert_eq!(convolve(&die, &die).weight(&q("7")), q("6/36"));
        let p = line(&[("1", "2"), ("-1/2", "3")]);
        assert_eq!(convolve(&p, &Dist::dirac(q("0"))), p);
        assert_eq!(convolve_power(&p, 0), Dist::dirac(q("0")));
        assert_eq!(convolve_power(&p, 2), convolve(&p, &p));
    }

    #[test]
    fn moment_examples() {
        assert_eq!(expectation(&Dist::dirac(q("7/3"))), q("7/3"));
        let p = line(&[("1", "2"), ("-1/2", "3")]);
        assert_eq!(moment(&p, 0), p.total());
        assert_eq!(moment(&p, 2), q("2") + q("3/4"));
        let sum = convolve(&Dist::dirac(q("1")), &Dist::dirac(q("2")));
        assert_eq!(expectation(&sum), q("3"));
        assert_eq!(expectation_as_mu(&p), expectation(&p));
        assert_eq!(expectation_as_mu(&Dist::empty()), q("0"));
        assert_eq!(expectation_as_mu(&Dist::dirac(q("5"))), q("5"));
    }

    #[test]
    fn affine_examples() {
        let p = line(&[("1", "1/4"), ("3", "3/4")]);
        assert_eq!(translate(&p, &q("2")), convolve(&p, &Dist::dirac(q("2"))));
        assert_eq!(homothety(&Dist::dirac(q("3")), &q("-2")), Dist::dirac(q("-6")));
        let f = AffineMap::new(q("-3"), q("1/2"));
        assert_eq!(expectation(&affine_push(&p, &f)), f.apply(&expectation(&p)));
        assert!(!AffineMap::new(q("0"), q("1")).is_invertible());
    }

    #[test]
    fn center_of_gravity_examples() {
        assert_eq!(center_of_gravity(&line(&[("0", "1"), ("1", "3")])), Ok(q("3/4")));
        assert_eq!(center_of_gravity(&Dist::dirac(q("-5"))), Ok(q("-5")));
        assert_eq!(
            center_of_gravity(&line(&[("0", "1"), ("1", "-1")])),
            Err(Error::ZeroTotal)
        );
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(
            derivative(&Dist::dirac(q("0")), &step("1")),
            line(&[("1", "1"), ("0", "-1")])
        );
        let p = line(&[("1", "2"), ("-1/2", "3"), ("4/3", "-1")]);
        for d in ["1", "1/2", "2/3", "-1/3"] {
            let dp = derivative(&p, &step(d));
            assert_eq!(dp.total(), q("0"));
            assert_eq!(expectation(&dp), p.total());
        }
        assert_eq!(Step::new(q("0")), Err(Error::ZeroStep));
    }

    #[test]
    fn fn_derivative_examples() {
        let square = |x: &Rational| x * x;
        let s = step("1");
        let d_square = fn_derivative(&square, &s);
        assert_eq!(d_square(&q("0")), Some(q("1")));
        assert_eq!(d_square(&q("3")), Some(q("7")));
        let constant = |_: &Rational| q("4");
        assert_eq!(fn_derivative(&constant, &s)(&q("-9/2")), Some(q("0")));
    }

    #[test]
    fn primitive_examples() {
        let ends = line(&[("1", "1"), ("0", "-1")]);
        let half = step("1/2");
        let p = primitive(&ends, &half).unwrap();
        assert_eq!(p, line(&[("0", "1/2"), ("1/2", "1/2")]));
        assert_eq!(derivative(&p, &half), ends);
        assert_eq!(primitive(&Dist::empty(), &half), Ok(Dist::empty()));
        let split = line(&[("1/3", "1"), ("0", "-1")]);
        assert_eq!(split.total(), q("0"));
        assert_eq!(primitive(&split, &half), Err(Error::NoPrimitive));
        assert_eq!(primitive(&Dist::dirac(q("0")), &half), Err(Error::NoPrimitive));
    }

    #[test]
    fn primitive_with_negative_step() {
        let ends = line(&[("1", "1"), ("0", "-1")]);
        let back = step("-1/2");
        let p = primitive(&ends, &back).unwrap();
        assert_eq!(derivative(&p, &back), ends);
        assert_eq!(p, line(&[("1", "1/2"), ("1/2", "1/2")]));
    }

    #[test]
    fn interval_examples() {
        let half = step("1/2");
        let unit = interval(&q("0"), &q("1"), &half).unwrap();
        assert_eq!(unit, line(&[("0", "1/2"), ("1/2", "1/2")]));
        assert_eq!(unit.total(), q("1"));
        assert!(interval(&q("3"), &q("3"), &half).unwrap().is_empty());
        let backwards = interval(&q("1"), &q("0"), &half).unwrap();
        assert_eq!(backwards, line(&[("0", "-1/2"), ("1/2", "-1/2")]));
        assert_eq!(interval(&q("0"), &q("1/3"), &half), Err(Error::NoPrimitive));
    }

    #[test]
    fn leibniz_residual_examples() {
        let s = step("1");
        let id = |x: &Rational| x.clone();
        assert_eq!(
            leibniz_residual(&Dist::dirac(q("0")), &id, &s),
            Ok(line(&[("1", "1"), ("0", "-1")]))
        );
        let constant = |_: &Rational| q("5/2");
        let p = line(&[("1", "2"), ("-1/2", "3")]);
        assert_eq!(leibniz_residual(&p, &constant, &step("2/3")), Ok(Dist::empty()));
    }

    #[test]
    fn coset_totals_detect_balance() {
        let half = step("1/2");
        let q1 = line(&[("1/3", "1"), ("0", "-1")]);
        assert_eq!(q1.coset_totals(&half).len(), 2);
        let q2 = line(&[("5/2", "2"), ("0", "-2"), ("1/3", "1"), ("-2/3", "-1")]);
        assert!(q2.coset_totals(&half).is_empty());
        assert!(primitive(&q2, &half).is_ok());
    }
}
