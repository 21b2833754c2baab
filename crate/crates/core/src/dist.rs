//! The distribution monad `X ↦ Dist<X, S>`.
//!
//! A `Dist` is stored as a `BTreeMap` with every zero weight removed, so two
//! distributions are equal exactly when their maps are equal, and iteration
//! follows the order of the points.

use alloc::collections::btree_map::{self, BTreeMap, Entry};
use alloc::vec::Vec;
use core::fmt;

use crate::scalars::{Ring, Semiring};

/// A module over the scalar rig `S`, i.e. an algebra for the monad.
///
/// The structure map evaluates a formal finite combination of elements,
/// see [`Module::combine`].
pub trait Module<S: Semiring>: Clone {
    fn zero() -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn scaled(&self, by: &S) -> Self;

    /// The algebra structure map: evaluate `Σ wᵢ·bᵢ`.
    fn combine<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (S, Self)>,
    {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (w, b)| acc.plus(&b.scaled(&w)))
    }
}

impl<S: Semiring> Module<S> for S {
    fn zero() -> Self {
        <S as Semiring>::zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        Semiring::plus(self, rhs)
    }
    fn scaled(&self, by: &S) -> Self {
        by.times(self)
    }
}

impl<S: Semiring, A: Module<S>, B: Module<S>> Module<S> for (A, B) {
    fn zero() -> Self {
        (A::zero(), B::zero())
    }
    fn plus(&self, rhs: &Self) -> Self {
        (self.0.plus(&rhs.0), self.1.plus(&rhs.1))
    }
    fn scaled(&self, by: &S) -> Self {
        (self.0.scaled(by), self.1.scaled(by))
    }
}

/// A finitely supported distribution on `X` with weights in `S`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dist<X, S = crate::Rational> {
    weights: BTreeMap<X, S>,
}

impl<X: Ord, S: Semiring> Default for Dist<X, S> {
    fn default() -> Self {
        Dist::empty()
    }
}

impl<X: fmt::Debug, S: fmt::Debug> fmt::Debug for Dist<X, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.weights.iter()).finish()
    }
}

impl<X: Ord, S: Semiring> Dist<X, S> {
    /// The zero distribution.
    pub fn empty() -> Self {
        Dist {
            weights: BTreeMap::new(),
        }
    }

    /// The unit of the monad: `{x ↦ 1}`.
    pub fn dirac(x: X) -> Self {
        let mut weights = BTreeMap::new();
        weights.insert(x, S::one());
        Dist { weights }
    }

    /// Builds a distribution from `(point, weight)` pairs, summing repeated
    /// points and dropping zero weights.
    pub fn from_weights<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (X, S)>,
    {
        let mut dist = Dist::empty();
        for (x, w) in pairs {
            dist.accumulate(x, &w);
        }
        dist
    }

    /// Weight one on every point given (repeats accumulate).
    pub fn uniform_weights<I: IntoIterator<Item = X>>(points: I) -> Self {
        Dist::from_weights(points.into_iter().map(|x| (x, S::one())))
    }

    fn accumulate(&mut self, x: X, w: &S) {
        if w.is_zero() {
            return;
        }
        match self.weights.entry(x) {
            Entry::Vacant(slot) => {
                slot.insert(w.clone());
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().plus(w);
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn weight(&self, x: &X) -> S {
        self.weights.get(x).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, X, S> {
        self.weights.iter()
    }

    pub fn support(&self) -> btree_map::Keys<'_, X, S> {
        self.weights.keys()
    }

    pub fn contains(&self, x: &X) -> bool {
        self.weights.contains_key(x)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn into_weights(self) -> BTreeMap<X, S> {
        self.weights
    }

    /// `T(f)`: the image distribution, summing weights over each fiber.
    pub fn pushforward<Y: Ord, F>(&self, f: F) -> Dist<Y, S>
    where
        F: Fn(&X) -> Y,
    {
        let mut out = Dist::empty();
        for (x, w) in &self.weights {
            out.accumulate(f(x), w);
        }
        out
    }

    /// The linear extension of `f : X → B` into any module: `Σ P(x)·f(x)`.
    pub fn extend<B, F>(&self, f: F) -> B
    where
        B: Module<S>,
        F: Fn(&X) -> B,
    {
        B::combine(self.weights.iter().map(|(x, w)| (w.clone(), f(x))))
    }

    /// Linear extension of a Kleisli map `f : X → T(Y)`.
    pub fn bind<Y: Ord + Clone, F>(&self, f: F) -> Dist<Y, S>
    where
        F: Fn(&X) -> Dist<Y, S>,
    {
        self.extend(f)
    }

    /// Formation of total: the pushforward to the one-point space, read off
    /// as a scalar.
    pub fn total(&self) -> S {
        to_scalar(&self.pushforward(|_| ()))
    }

    /// The action of the scalar rig.
    pub fn scale(&self, c: &S) -> Self
    where
        X: Clone,
    {
        if c.is_zero() {
            return Dist::empty();
        }
        Dist::from_weights(self.weights.iter().map(|(x, w)| (x.clone(), c.times(w))))
    }

    pub fn add(&self, other: &Self) -> Self
    where
        X: Clone,
    {
        let mut out = self.clone();
        for (x, w) in &other.weights {
            out.accumulate(x.clone(), w);
        }
        out
    }

    /// Pointwise reweighting `x ↦ P(x)·g(x)`.
    pub fn reweight<F>(&self, g: F) -> Self
    where
        X: Clone,
        F: Fn(&X) -> S,
    {
        Dist::from_weights(self.weights.iter().map(|(x, w)| (x.clone(), w.times(&g(x)))))
    }
}

impl<X: Ord + Clone, S: Ring> Dist<X, S> {
    pub fn neg(&self) -> Self {
        Dist {
            weights: self
                .weights
                .iter()
                .map(|(x, w)| (x.clone(), w.negate()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl<X: Ord + Clone, S: Semiring> Dist<Dist<X, S>, S> {
    /// The multiplication of the monad: mixture `Σ w·P` of the inner
    /// distributions.
    pub fn flatten(&self) -> Dist<X, S> {
        self.extend(|inner| inner.clone())
    }
}

impl<X: Ord + Clone, S: Semiring> Module<S> for Dist<X, S> {
    fn zero() -> Self {
        Dist::empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn scaled(&self, by: &S) -> Self {
        self.scale(by)
    }
    fn combine<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (S, Self)>,
    {
        let mut out = Dist::empty();
        for (w, inner) in terms {
            for (x, v) in inner.weights {
                out.accumulate(x, &w.times(&v));
            }
        }
        out
    }
}

impl<X: Ord, S: Semiring> FromIterator<(X, S)> for Dist<X, S> {
    fn from_iter<I: IntoIterator<Item = (X, S)>>(iter: I) -> Self {
        Dist::from_weights(iter)
    }
}

impl<'a, X, S> IntoIterator for &'a Dist<X, S> {
    type Item = (&'a X, &'a S);
    type IntoIter = btree_map::Iter<'a, X, S>;
    fn into_iter(self) -> Self::IntoIter {
        self.weights.iter()
    }
}

impl<X: Ord + Clone> Dist<X> {
    /// Weight `1/n` on each of `n` distinct points.
    pub fn uniform<I: IntoIterator<Item = X>>(points: I) -> Self {
        let ones: Dist<X> = Dist::uniform_weights(points);
        let n = crate::Rational::from_integer(ones.len() as i64);
        match n.recip() {
            Some(inv) => ones.scale(&inv),
            None => ones,
        }
    }
}

/// A scalar viewed as a distribution on the one-point space.
pub fn from_scalar<S: Semiring>(c: S) -> Dist<(), S> {
    Dist::from_weights([((), c)])
}

/// Inverse of [`from_scalar`].
pub fn to_scalar<S: Semiring>(d: &Dist<(), S>) -> S {
    d.weight(&())
}

/// Point of a coproduct `X + Y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tagged<A, B> {
    L(A),
    R(B),
}

/// The comparison map `T(X + Y) → T(X) × T(Y)`, an isomorphism of modules.
pub fn biproduct_split<A, B, S>(p: &Dist<Tagged<A, B>, S>) -> (Dist<A, S>, Dist<B, S>)
where
    A: Ord + Clone,
    B: Ord + Clone,
    S: Semiring,
{
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (x, w) in p {
        match x {
            Tagged::L(a) => left.push((a.clone(), w.clone())),
            Tagged::R(b) => right.push((b.clone(), w.clone())),
        }
    }
    (Dist::from_weights(left), Dist::from_weights(right))
}

/// Inverse of [`biproduct_split`]: `T(inl)(P) + T(inr)(Q)`.
pub fn biproduct_merge<A, B, S>(left: &Dist<A, S>, right: &Dist<B, S>) -> Dist<Tagged<A, B>, S>
where
    A: Ord + Clone,
    B: Ord + Clone,
    S: Semiring,
{
    left.pushforward(|a| Tagged::L(a.clone()))
        .add(&right.pushforward(|b| Tagged::R(b.clone())))
}
