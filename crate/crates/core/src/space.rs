//! Finite spaces and finite function tables `X ⋔ Y`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use crate::dist::Module;
use crate::scalars::Semiring;
use crate::Error;

/// An explicit, duplicate-free, ordered list of points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteSpace<X> {
    elements: Vec<X>,
}

impl<X: Ord> FiniteSpace<X> {
    pub fn new<I: IntoIterator<Item = X>>(elements: I) -> Self {
        let mut elements: Vec<X> = elements.into_iter().collect();
        elements.sort();
        elements.dedup();
        FiniteSpace { elements }
    }

    pub fn elements(&self) -> &[X] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &X) -> bool {
        self.elements.binary_search(x).is_ok()
    }
}

impl<X: Ord + Clone> FiniteSpace<X> {
    /// Every function from `self` to `codomain`, in lexicographic order.
    ///
    /// Fails when `|codomain|^|self|` exceeds `cap`.
    pub fn functions<Y: Clone>(
        &self,
        codomain: &[Y],
        cap: usize,
    ) -> Result<Vec<FunTable<X, Y>>, Error> {
        let mut count: usize = 1;
        for _ in &self.elements {
            count = count.saturating_mul(codomain.len());
        }
        if count > cap {
            return Err(Error::SpaceTooLarge { size: count, cap });
        }
        let mut tables = Vec::with_capacity(count);
        let mut digits = alloc::vec![0usize; self.elements.len()];
        for _ in 0..count {
            tables.push(FunTable::from_pairs(
                self.elements
                    .iter()
                    .cloned()
                    .zip(digits.iter().map(|&i| codomain[i].clone())),
            ));
            for digit in digits.iter_mut().rev() {
                *digit += 1;
                if *digit < codomain.len() {
                    break;
                }
                *digit = 0;
            }
        }
        Ok(tables)
    }
}

/// A total function on a finite domain, stored as a table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunTable<X, Y> {
    map: BTreeMap<X, Y>,
}

impl<X: fmt::Debug, Y: fmt::Debug> fmt::Debug for FunTable<X, Y> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.map.iter()).finish()
    }
}

impl<X: Ord, Y> FunTable<X, Y> {
    /// Later pairs overwrite earlier ones for the same point.
    pub fn from_pairs<I: IntoIterator<Item = (X, Y)>>(pairs: I) -> Self {
        FunTable {
            map: pairs.into_iter().collect(),
        }
    }

    pub fn tabulate<F: FnMut(&X) -> Y>(domain: &FiniteSpace<X>, mut f: F) -> Self
    where
        X: Clone,
    {
        FunTable::from_pairs(domain.elements().iter().map(|x| (x.clone(), f(x))))
    }

    pub fn get(&self, x: &X) -> Option<&Y> {
        self.map.get(x)
    }

    pub fn domain(&self) -> btree_map::Keys<'_, X, Y> {
        self.map.keys()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, X, Y> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn map_values<Z, F: Fn(&Y) -> Z>(&self, f: F) -> FunTable<X, Z>
    where
        X: Clone,
    {
        FunTable {
            map: self.map.iter().map(|(x, y)| (x.clone(), f(y))).collect(),
        }
    }
}

/// The cotensor `X ⋔ C` is a module pointwise. Tables combined this way
/// must share a domain; missing points count as zero.
impl<X: Ord + Clone, S: Semiring, C: Module<S>> Module<S> for FunTable<X, C> {
    fn zero() -> Self {
        FunTable {
            map: BTreeMap::new(),
        }
    }
    fn plus(&self, rhs: &Self) -> Self {
        let mut map = self.map.clone();
        for (x, c) in &rhs.map {
            let sum = match map.get(x) {
                Some(prev) => prev.plus(c),
                None => c.clone(),
            };
            map.insert(x.clone(), sum);
        }
        FunTable { map }
    }
    fn scaled(&self, by: &S) -> Self {
        self.map_values(|c| c.scaled(by))
    }
}

/// A function `X → B` that may be defined only on part of `X`.
pub trait TestFn<X, B> {
    fn eval(&self, x: &X) -> Option<B>;
}

impl<X, B, F: Fn(&X) -> B> TestFn<X, B> for F {
    fn eval(&self, x: &X) -> Option<B> {
        Some(self(x))
    }
}

impl<X: Ord, B: Clone> TestFn<X, B> for FunTable<X, B> {
    fn eval(&self, x: &X) -> Option<B> {
        self.get(x).cloned()
    }
}
