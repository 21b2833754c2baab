//! Distributions measured in a chosen unit.
//!
//! A `UnitTagged` value records numerals relative to `unit`; its pure
//! reading is `unit · body`. Changing the unit changes the numerals and
//! leaves the pure reading fixed.

use crate::dist::Dist;
use crate::scalars::{Field, Rational};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitTagged<X, S = Rational> {
    unit: S,
    body: Dist<X, S>,
}

impl<X: Ord + Clone, S: Field> UnitTagged<X, S> {
    pub fn new(unit: S, body: Dist<X, S>) -> Result<Self, Error> {
        if unit.is_zero() {
            return Err(Error::ZeroUnit);
        }
        Ok(UnitTagged { unit, body })
    }

    pub fn unit(&self) -> &S {
        &self.unit
    }

    pub fn body(&self) -> &Dist<X, S> {
        &self.body
    }

    pub fn to_pure(&self) -> Dist<X, S> {
        self.body.scale(&self.unit)
    }

    pub fn from_pure(p: &Dist<X, S>, unit: S) -> Result<Self, Error> {
        let inv = unit.inverse().ok_or(Error::ZeroUnit)?;
        Ok(UnitTagged {
            body: p.scale(&inv),
            unit,
        })
    }

    pub fn rescale_unit(&self, unit: S) -> Result<Self, Error> {
        Self::from_pure(&self.to_pure(), unit)
    }

    pub fn pushforward<Y: Ord + Clone, F: Fn(&X) -> Y>(&self, f: F) -> UnitTagged<Y, S> {
        UnitTagged {
            unit: self.unit.clone(),
            body: self.body.pushforward(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn unit_round_trips() {
        let p: Dist<char> = Dist::from_weights([('a', r(3)), ('b', Rational::new(-1, 2))]);
        let m = UnitTagged::from_pure(&p, Rational::new(2, 7)).unwrap();
        assert_eq!(m.to_pure(), p);
        assert_eq!(m.rescale_unit(m.unit().clone()).unwrap(), m);
        assert_eq!(UnitTagged::from_pure(&p, r(0)), Err(Error::ZeroUnit));
        assert_eq!(UnitTagged::new(r(0), p), Err(Error::ZeroUnit));
    }

    #[test]
    fn grams_to_kilograms() {
        let grams = UnitTagged::new(r(1), Dist::from_weights([('x', r(2500)), ('y', r(500))])).unwrap();
        let kilos = grams.rescale_unit(r(1000)).unwrap();
        assert_eq!(kilos.body().weight(&'x'), Rational::new(5, 2));
        assert_eq!(kilos.body().weight(&'y'), Rational::new(1, 2));
        assert_eq!(kilos.to_pure(), grams.to_pure());
    }
}
