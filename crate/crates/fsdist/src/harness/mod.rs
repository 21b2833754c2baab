//! Randomized law suite.
//!
//! Every law draws its inputs from its own ChaCha stream, seeded from the
//! configured seed and the law's name, so results do not depend on which
//! other laws run or in what order.

mod gen;
mod laws;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use gen::{gen_dist, gen_event, gen_fun_table, gen_line_dist, Gen, GenScalar, Poly};
pub use laws::{law_names, Law, LAWS};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub cases: usize,
    pub max_support: usize,
    pub coefficient_bound: u32,
    pub space_size: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            seed: 42,
            cases: 100,
            max_support: 4,
            coefficient_bound: 8,
            space_size: 3,
        }
    }
}

impl GenConfig {
    pub fn with_seed(seed: u64, cases: usize) -> Self {
        GenConfig {
            seed,
            cases,
            ..GenConfig::default()
        }
    }

    pub fn validate(&self) -> Result<(), SelectionError> {
        let bad = |what: &str| Err(SelectionError::Config(what.to_owned()));
        if self.cases == 0 {
            return bad("cases must be at least 1");
        }
        if self.max_support == 0 {
            return bad("max_support must be at least 1");
        }
        if self.coefficient_bound == 0 {
            return bad("coefficient_bound must be at least 1");
        }
        if self.space_size == 0 || self.space_size > 64 {
            return bad("space_size must lie in 1..=64");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SelectionError {
    #[error("unknown law {0:?}")]
    UnknownLaw(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LawReport {
    pub law_name: String,
    pub anchor: String,
    pub cases_run: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// FNV-1a, used only to split the seed per law.
fn name_hash(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

pub fn run_law(cfg: &GenConfig, law: &Law) -> LawReport {
    let mut g = Gen::new(cfg.clone(), cfg.seed ^ name_hash(law.name));
    let mut cases_run = 0;
    let mut counterexample = None;
    for _ in 0..cfg.cases {
        cases_run += 1;
        if let Err(inputs) = (law.check)(&mut g) {
            counterexample = Some(inputs);
            break;
        }
    }
    LawReport {
        law_name: law.name.to_owned(),
        anchor: law.anchor.to_owned(),
        cases_run,
        passed: counterexample.is_none(),
        counterexample,
    }
}

/// Runs the selected laws, or all of them for an empty selection. Reports
/// come back in suite order.
pub fn run_suite(cfg: &GenConfig, selection: &[String]) -> Result<Vec<LawReport>, SelectionError> {
    cfg.validate()?;
    let chosen: Vec<&Law> = if selection.is_empty() {
        LAWS.iter().collect()
    } else {
        for name in selection {
            if !LAWS.iter().any(|l| l.name == name) {
                return Err(SelectionError::UnknownLaw(name.clone()));
            }
        }
        LAWS.iter().filter(|l| selection.iter().any(|s| s == l.name)).collect()
    };
    Ok(chosen.par_iter().map(|law| run_law(cfg, law)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_selection() {
        let cfg = GenConfig::with_seed(1, 1);
        assert_eq!(
            run_suite(&cfg, &["nope".into()]),
            Err(SelectionError::UnknownLaw("nope".into()))
        );
        let zero = GenConfig::with_seed(1, 0);
        assert!(matches!(run_suite(&zero, &[]), Err(SelectionError::Config(_))));
    }

    #[test]
    fn single_law_selection() {
        let cfg = GenConfig::with_seed(7, 20);
        let reports = run_suite(&cfg, &["fubini".into()]).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].anchor, "Fubini's Theorem holds");
        assert!(reports[0].passed);
        assert_eq!(reports[0].cases_run, 20);
    }

    #[test]
    fn law_names_are_unique() {
        let mut names = law_names();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn report_serializes_with_camel_case() {
        let r = LawReport {
            law_name: "x".into(),
            anchor: "a".into(),
            cases_run: 1,
            passed: true,
            counterexample: None,
        };
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["lawName"], "x");
        assert_eq!(v["casesRun"], 1);
    }
}
