//! The JSON file formats.
//!
//! A distribution is `{"points":[{"x": <point>, "w": "p/q"}, ...]}`. On
//! output entries appear in point order and zero weights are omitted.
//! A test function is either an object `{"<point>": "v", ...}` or an
//! array `[{"x": <point>, "v": "v"}, ...]`.

use std::collections::BTreeMap;

use fsdist_core::{Dist, FunTable, Rational};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::FormatError;
use crate::point::Point;

/// A rational written as a canonical `"p/q"` string. Integers may also be
/// given as JSON numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub Rational);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Value::deserialize(d)? {
            Value::String(s) => s
                .parse()
                .map(Scalar)
                .map_err(|e| D::Error::custom(format!("weight {s:?}: {e}"))),
            Value::Number(n) => n
                .as_i64()
                .map(|i| Scalar(Rational::from_integer(i)))
                .ok_or_else(|| D::Error::custom(format!("weight {n} is not an integer"))),
            other => Err(D::Error::custom(format!("not a weight: {other}"))),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Entry {
    x: Point,
    w: Scalar,
}

/// The serialized form of a distribution.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistFile {
    points: Vec<Entry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableEntry {
    x: Point,
    v: Scalar,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TableFile {
    Map(BTreeMap<String, Scalar>),
    List(Vec<TableEntry>),
}

pub type PointDist = Dist<Point, Rational>;
pub type PointTable = FunTable<Point, Rational>;

/// Repeated points accumulate.
pub fn parse_dist(text: &str) -> Result<PointDist, FormatError> {
    let file: DistFile = serde_json::from_str(text)?;
    Ok(Dist::from_weights(file.points.into_iter().map(|e| (e.x, e.w.0))))
}

/// Repeated points are rejected.
pub fn parse_table(text: &str) -> Result<PointTable, FormatError> {
    let pairs: Vec<(Point, Rational)> = match serde_json::from_str(text)? {
        TableFile::Map(m) => m.into_iter().map(|(k, v)| (Point::from_text(&k), v.0)).collect(),
        TableFile::List(l) => l.into_iter().map(|e| (e.x, e.v.0)).collect(),
    };
    let n = pairs.len();
    let table = FunTable::from_pairs(pairs);
    if table.len() != n {
        return Err(FormatError::Invalid("test function lists a point twice".into()));
    }
    Ok(table)
}

pub fn dist_file(p: &PointDist) -> DistFile {
    DistFile {
        points: p
            .iter()
            .map(|(x, w)| Entry {
                x: x.clone(),
                w: Scalar(w.clone()),
            })
            .collect(),
    }
}

pub fn dist_to_json(p: &PointDist) -> String {
    serde_json::to_string(&dist_file(p)).expect("points serialize")
}

/// One `point<TAB>weight` line per support point.
pub fn dist_to_table(p: &PointDist) -> String {
    let mut out = String::new();
    for (x, w) in p {
        out.push_str(&format!("{x}\t{w}\n"));
    }
    out
}

pub fn line_dist(p: &PointDist) -> Result<Dist<Rational>, fsdist_core::Error> {
    let mut pairs = Vec::with_capacity(p.len());
    for (x, w) in p {
        let r = x.as_num().ok_or(fsdist_core::Error::Domain)?;
        pairs.push((r.clone(), w.clone()));
    }
    Ok(Dist::from_weights(pairs))
}

pub fn from_line(p: &Dist<Rational>) -> PointDist {
    p.pushforward(|x| Point::Num(x.clone()))
}
