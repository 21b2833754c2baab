use std::fmt;

use fsdist_core::line::Step;
use fsdist_core::probability::Event;
use fsdist_core::{Bool, Dist, FiniteSpace, FunTable, Rational, Semiring};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GenConfig;

/// Scalars the generators know how to draw.
pub trait GenScalar: Semiring {
    /// A nonzero coefficient whose size is governed by `bound`.
    fn coefficient<R: Rng>(rng: &mut R, bound: u32) -> Self;
    /// Any value, zero included.
    fn value<R: Rng>(rng: &mut R, bound: u32) -> Self;
}

impl GenScalar for Rational {
    fn coefficient<R: Rng>(rng: &mut R, bound: u32) -> Self {
        let b = bound as i64;
        let n = rng.gen_range(1..=b);
        let d = rng.gen_range(1..=b);
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        Rational::new(sign * n, d)
    }

    fn value<R: Rng>(rng: &mut R, bound: u32) -> Self {
        let b = bound as i64;
        Rational::new(rng.gen_range(-b..=b), rng.gen_range(1..=b))
    }
}

impl GenScalar for Bool {
    fn coefficient<R: Rng>(_: &mut R, _: u32) -> Self {
        Bool(true)
    }

    fn value<R: Rng>(rng: &mut R, _: u32) -> Self {
        Bool(rng.gen_bool(0.5))
    }
}

/// A polynomial test function on the line, coefficients low degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn eval(&self, x: &Rational) -> Rational {
        self.0
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({c})x^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub struct Gen {
    cfg: GenConfig,
    rng: ChaCha8Rng,
    space: FiniteSpace<u8>,
}

impl Gen {
    pub fn new(cfg: GenConfig, seed: u64) -> Self {
        let space = FiniteSpace::new(0..cfg.space_size as u8);
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
            cfg,
            space,
        }
    }

    pub fn config(&self) -> &GenConfig {
        &self.cfg
    }

    pub fn space(&self) -> &FiniteSpace<u8> {
        &self.space
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coefficient<S: GenScalar>(&mut self) -> S {
        S::coefficient(&mut self.rng, self.cfg.coefficient_bound)
    }

    pub fn value<S: GenScalar>(&mut self) -> S {
        S::value(&mut self.rng, self.cfg.coefficient_bound)
    }

    pub fn point(&mut self) -> u8 {
        self.rng.gen_range(0..self.cfg.space_size as u8)
    }

    pub fn index(&mut self, below: usize) -> usize {
        self.rng.gen_range(0..below)
    }

    /// Support drawn without replacement from `space`, of size
    /// `1..=max_support` (capped by the size of the space).
    pub fn dist_on<X: Ord + Clone, S: GenScalar>(&mut self, space: &FiniteSpace<X>) -> Dist<X, S> {
        let cap = self.cfg.max_support.min(space.len());
        if cap == 0 {
            return Dist::empty();
        }
        let k = self.rng.gen_range(1..=cap);
        let picks = sample(&mut self.rng, space.len(), k).into_vec();
        let mut pairs = Vec::with_capacity(k);
        for i in picks {
            let c = self.coefficient::<S>();
            pairs.push((space.elements()[i].clone(), c));
        }
        Dist::from_weights(pairs)
    }

    pub fn dist<S: GenScalar>(&mut self) -> Dist<u8, S> {
        let space = self.space.clone();
        self.dist_on(&space)
    }

    /// A mixture of up to `max_support` generated distributions.
    pub fn nested<S: GenScalar>(&mut self) -> Dist<Dist<u8, S>, S> {
        let k = self.rng.gen_range(1..=self.cfg.max_support);
        let mut pairs = Vec::with_capacity(k);
        for _ in 0..k {
            let inner = self.dist::<S>();
            pairs.push((inner, self.coefficient::<S>()));
        }
        Dist::from_weights(pairs)
    }

    pub fn line_point(&mut self) -> Rational {
        let b = self.cfg.coefficient_bound as i64;
        let d = [1, 2, 3, 4, 6][self.rng.gen_range(0..5)];
        Rational::new(self.rng.gen_range(-b..=b), d)
    }

    pub fn line_dist(&mut self) -> Dist<Rational> {
        let k = self.rng.gen_range(1..=self.cfg.max_support);
        let mut pairs = Vec::with_capacity(k);
        for _ in 0..k {
            let x = self.line_point();
            pairs.push((x, self.coefficient::<Rational>()));
        }
        Dist::from_weights(pairs)
    }

    pub fn fun_table<S: GenScalar>(&mut self) -> FunTable<u8, S> {
        let space = self.space.clone();
        FunTable::tabulate(&space, |_| self.value::<S>())
    }

    pub fn event(&mut self) -> Event<u8> {
        let space = self.space.clone();
        Event::indicator(&space, |_| self.rng.gen_bool(0.5))
    }

    pub fn step(&mut self) -> Step {
        let choices = [(1, 1), (1, 2), (2, 3), (-1, 3)];
        let (n, d) = choices[self.rng.gen_range(0..choices.len())];
        Step::new(Rational::new(n, d)).expect("nonzero")
    }

    pub fn poly(&mut self) -> Poly {
        let degree = self.rng.gen_range(0..=3);
        Poly((0..=degree).map(|_| self.value::<Rational>()).collect())
    }
}

/// A distribution over the configured space `0..space_size`.
pub fn gen_dist<S: GenScalar>(cfg: &GenConfig, space: &FiniteSpace<u8>) -> Dist<u8, S> {
    Gen::new(cfg.clone(), cfg.seed).dist_on(space)
}

pub fn gen_line_dist(cfg: &GenConfig) -> Dist<Rational> {
    Gen::new(cfg.clone(), cfg.seed).line_dist()
}

pub fn gen_fun_table<S: GenScalar>(cfg: &GenConfig, space: &FiniteSpace<u8>) -> FunTable<u8, S> {
    let mut g = Gen::new(cfg.clone(), cfg.seed);
    FunTable::tabulate(space, |_| g.value::<S>())
}

pub fn gen_event(cfg: &GenConfig, space: &FiniteSpace<u8>) -> Event<u8> {
    let mut g = Gen::new(cfg.clone(), cfg.seed);
    Event::indicator(space, |_| g.rng().gen_bool(0.5))
}
