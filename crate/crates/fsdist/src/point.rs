//! Points of the distributions read from and written to files.

use std::fmt;

use fsdist_core::Rational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

/// A JSON-representable point.
///
/// Strings that parse as rationals become `Num`; every other string is an
/// `Atom`. Two-element arrays are pairs and `{"L": p}` / `{"R": p}` are the
/// injections into a sum.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Num(Rational),
    Atom(String),
    Pair(Box<Point>, Box<Point>),
    L(Box<Point>),
    R(Box<Point>),
}

impl Point {
    pub fn num(r: Rational) -> Self {
        Point::Num(r)
    }

    pub fn pair(a: Point, b: Point) -> Self {
        Point::Pair(Box::new(a), Box::new(b))
    }

    pub fn as_num(&self) -> Option<&Rational> {
        match self {
            Point::Num(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(&Point, &Point)> {
        match self {
            Point::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn from_text(s: &str) -> Self {
        match s.parse::<Rational>() {
            Ok(r) => Point::Num(r),
            Err(_) => Point::Atom(s.to_owned()),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        match v {
            Value::String(s) => Ok(Point::from_text(s)),
            Value::Number(n) => n
                .as_i64()
                .map(|i| Point::Num(Rational::from_integer(i)))
                .ok_or_else(|| format!("point {n} is not an integer; write fractions as \"p/q\"")),
            Value::Array(items) if items.len() == 2 => Ok(Point::pair(
                Point::from_json(&items[0])?,
                Point::from_json(&items[1])?,
            )),
            Value::Object(map) if map.len() == 1 => {
                let (tag, inner) = map.iter().next().expect("one entry");
                let inner = Box::new(Point::from_json(inner)?);
                match tag.as_str() {
                    "L" => Ok(Point::L(inner)),
                    "R" => Ok(Point::R(inner)),
                    other => Err(format!("unknown point tag {other:?}")),
                }
            }
            other => Err(format!("not a point: {other}")),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Point::Num(r) => Value::String(r.to_string()),
            Point::Atom(s) => Value::String(s.clone()),
            Point::Pair(a, b) => Value::Array(vec![a.to_json(), b.to_json()]),
            Point::L(p) => tagged("L", p),
            Point::R(p) => tagged("R", p),
        }
    }
}

fn tagged(tag: &str, p: &Point) -> Value {
    let mut map = Map::new();
    map.insert(tag.to_owned(), p.to_json());
    Value::Object(map)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Num(r) => write!(f, "{r}"),
            Point::Atom(s) => f.write_str(s),
            Point::Pair(a, b) => write!(f, "({a}, {b})"),
            Point::L(p) => write!(f, "L({p})"),
            Point::R(p) => write!(f, "R({p})"),
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for Point {
    fn from(r: Rational) -> Self {
        Point::Num(r)
    }
}

impl Serialize for Point {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Point::from_json(&v).map_err(D::Error::custom)
    }
}
