//! The `fsdist` command line.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use fsdist_core::line::{self, Step};
use fsdist_core::probability::{self, Event, ProbDist};
use fsdist_core::{pairing, strength, Dist, Rational};
use serde::Serialize;

use crate::error::CliError;
use crate::format::{self, PointDist};
use crate::harness::{self, GenConfig};
use crate::point::Point;

#[derive(Debug, Parser)]
#[command(name = "fsdist", version, about = "Exact algebra of finitely supported distributions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Emit a plain `point<TAB>value` listing.
    #[arg(long, global = true)]
    pub table: bool,
}

#[derive(Debug, Args)]
pub struct Inputs {
    /// Distribution file; `-` reads standard input.
    #[arg(long = "in", value_name = "FILE")]
    pub inputs: Vec<String>,
}

#[derive(Debug, Args)]
pub struct StepArg {
    /// Difference step `p/q`, nonzero.
    #[arg(long, value_name = "p/q")]
    pub step: Rational,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convolution of two or more distributions on the line.
    Conv(Inputs),
    /// Product distribution of two or more inputs.
    Tensor(Inputs),
    /// Integrate a test function against a distribution.
    Pair {
        #[command(flatten)]
        inputs: Inputs,
        /// Test function table.
        #[arg(long = "fn", value_name = "FILE")]
        function: String,
    },
    /// Total, moments and center of gravity on the line.
    Moments {
        #[command(flatten)]
        inputs: Inputs,
        /// Highest moment reported.
        #[arg(long, default_value_t = 2)]
        order: u32,
    },
    /// Condition a total-one distribution on a 0/1 event table.
    Cond {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, value_name = "FILE")]
        event: String,
    },
    /// Joint distribution of independent total-one inputs.
    Joint(Inputs),
    /// Both marginals of a distribution on pairs.
    Marginal(Inputs),
    /// Difference quotient with the given step.
    Derive {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        step: StepArg,
    },
    /// Finitely supported primitive with the given step.
    Primitive {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        step: StepArg,
    },
    /// The interval distribution from A to B.
    Interval {
        #[arg(allow_hyphen_values = true)]
        a: Rational,
        #[arg(allow_hyphen_values = true)]
        b: Rational,
        #[command(flatten)]
        step: StepArg,
    },
    /// Run the randomized law suite.
    Laws {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Restrict to the named laws (repeatable).
        #[arg(long = "law", value_name = "NAME")]
        laws: Vec<String>,
        /// List law names and exit.
        #[arg(long)]
        list: bool,
    },
}

/// Parses `args` (program name first) and runs the command. Returns the
/// process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err((e, text)) => {
            if let Some(text) = text {
                let _ = out.write_all(text.as_bytes());
            }
            let _ = writeln!(err, "fsdist: {e}");
            e.exit_code()
        }
    }
}

type Failure = (CliError, Option<String>);

fn fail(e: impl Into<CliError>) -> Failure {
    (e.into(), None)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let mut io = Loader { stdin, used: false };
    match &cli.command {
        Command::Conv(inputs) => {
            let dists = io.lines(inputs, 2)?;
            let mut acc = dists[0].clone();
            for d in &dists[1..] {
                acc = line::convolve(&acc, d);
            }
            Ok(render_dist(&format::from_line(&acc), cli))
        }
        Command::Tensor(inputs) => {
            let dists = io.dists(inputs, 2)?;
            Ok(render_dist(&tensor_all(&dists), cli))
        }
        Command::Pair { inputs, function } => {
            let p = io.dists(inputs, 1)?.remove(0);
            let phi = io.table(function)?;
            let v: Rational = pairing::pair(&p, &phi).map_err(fail)?;
            Ok(render_scalar(&v, cli))
        }
        Command::Moments { inputs, order } => {
            let p = io.lines(inputs, 1)?.remove(0);
            Ok(render_moments(&p, *order, cli))
        }
        Command::Cond { inputs, event } => {
            let p = prob(io.dists(inputs, 1)?.remove(0))?;
            let e = Event::from_table(io.table(event)?).map_err(fail)?;
            let c = probability::condition(&p, &e).map_err(fail)?;
            Ok(render_dist(&c, cli))
        }
        Command::Joint(inputs) => {
            let dists = io.dists(inputs, 2)?;
            let probs = dists.into_iter().map(prob).collect::<Result<Vec<_>, _>>()?;
            let plain: Vec<PointDist> = probs.into_iter().map(ProbDist::into_dist).collect();
            Ok(render_dist(&tensor_all(&plain), cli))
        }
        Command::Marginal(inputs) => {
            let j = io.dists(inputs, 1)?.remove(0);
            let mut pairs = Vec::with_capacity(j.len());
            for (x, w) in &j {
                let (a, b) = x.as_pair().ok_or_else(|| fail(fsdist_core::Error::Domain))?;
                pairs.push(((a.clone(), b.clone()), w.clone()));
            }
            let (first, second) = probability::marginals(&Dist::from_weights(pairs));
            Ok(render_marginals(&first, &second, cli))
        }
        Command::Derive { inputs, step } => {
            let s = step_of(step)?;
            let p = io.lines(inputs, 1)?.remove(0);
            Ok(render_dist(&format::from_line(&line::derivative(&p, &s)), cli))
        }
        Command::Primitive { inputs, step } => {
            let s = step_of(step)?;
            let q = io.lines(inputs, 1)?.remove(0);
            let p = line::primitive(&q, &s).map_err(fail)?;
            Ok(render_dist(&format::from_line(&p), cli))
        }
        Command::Interval { a, b, step } => {
            let s = step_of(step)?;
            let i = line::interval(a, b, &s).map_err(fail)?;
            Ok(render_dist(&format::from_line(&i), cli))
        }
        Command::Laws {
            seed,
            cases,
            laws,
            list,
        } => {
            if *list {
                let mut text = harness::law_names().join("\n");
                text.push('\n');
                return Ok(text);
            }
            let cfg = GenConfig::with_seed(*seed, *cases);
            let reports = harness::run_suite(&cfg, laws).map_err(fail)?;
            let text = render_reports(&reports, cli);
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed > 0 {
                Err((
                    CliError::LawsFailed {
                        failed,
                        total: reports.len(),
                    },
                    Some(text),
                ))
            } else {
                Ok(text)
            }
        }
    }
}

fn step_of(arg: &StepArg) -> Result<Step, Failure> {
    Step::new(arg.step.clone()).map_err(|_| fail(CliError::Usage("--step must be nonzero".into())))
}

fn prob(p: PointDist) -> Result<ProbDist<Point>, Failure> {
    ProbDist::try_from(p).map_err(fail)
}

fn tensor_all(dists: &[PointDist]) -> PointDist {
    let mut acc = dists[0].clone();
    for d in &dists[1..] {
        acc = strength::tensor(&acc, d).pushforward(|(a, b)| Point::pair(a.clone(), b.clone()));
    }
    acc
}

struct Loader<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Loader<'_> {
    fn text(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            if self.used {
                return Err(fail(CliError::Usage("standard input named twice".into())));
            }
            self.used = true;
            let mut s = String::new();
            self.stdin.read_to_string(&mut s).map_err(|source| {
                fail(CliError::Io {
                    path: "<stdin>".into(),
                    source,
                })
            })?;
            Ok(s)
        } else {
            std::fs::read_to_string(path).map_err(|source| {
                fail(CliError::Io {
                    path: path.into(),
                    source,
                })
            })
        }
    }

    fn dists(&mut self, inputs: &Inputs, min: usize) -> Result<Vec<PointDist>, Failure> {
        let n = inputs.inputs.len();
        let ok = if min == 1 { n == 1 } else { n >= min };
        if !ok {
            let want = if min == 1 { "exactly one".to_owned() } else { format!("at least {min}") };
            return Err(fail(CliError::Usage(format!("expected {want} --in, got {n}"))));
        }
        let mut out = Vec::with_capacity(n);
        for path in &inputs.inputs {
            let text = self.text(path)?;
            let d = format::parse_dist(&text).map_err(|source| {
                fail(CliError::Format {
                    path: path.clone(),
                    source,
                })
            })?;
            out.push(d);
        }
        Ok(out)
    }

    fn lines(&mut self, inputs: &Inputs, min: usize) -> Result<Vec<Dist<Rational>>, Failure> {
        self.dists(inputs, min)?
            .iter()
            .map(|d| format::line_dist(d).map_err(fail))
            .collect()
    }

    fn table(&mut self, path: &str) -> Result<format::PointTable, Failure> {
        let text = self.text(path)?;
        format::parse_table(&text).map_err(|source| {
            fail(CliError::Format {
                path: path.into(),
                source,
            })
        })
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("output serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct ScalarDoc {
    value: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct MomentsDoc {
    total: String,
    expectation: String,
    moments: Vec<String>,
    center_of_gravity: Option<String>,
}

#[derive(Serialize)]
struct MarginalsDoc {
    first: format::DistFile,
    second: format::DistFile,
}

fn render_dist(p: &PointDist, cli: &Cli) -> String {
    if table_mode(cli) {
        format::dist_to_table(p)
    } else {
        json_line(&format::dist_file(p))
    }
}

fn render_scalar(v: &Rational, cli: &Cli) -> String {
    if table_mode(cli) {
        format!("{v}\n")
    } else {
        json_line(&ScalarDoc {
            value: v.to_string(),
        })
    }
}

fn render_moments(p: &Dist<Rational>, order: u32, cli: &Cli) -> String {
    let moments: Vec<String> = (0..=order).map(|n| line::moment(p, n).to_string()).collect();
    let cg = line::center_of_gravity(p).ok().map(|c| c.to_string());
    if table_mode(cli) {
        let mut s = String::new();
        for (n, m) in moments.iter().enumerate() {
            s.push_str(&format!("m{n}\t{m}\n"));
        }
        s.push_str(&format!("cg\t{}\n", cg.as_deref().unwrap_or("undefined")));
        s
    } else {
        json_line(&MomentsDoc {
            total: moments[0].clone(),
            expectation: line::expectation(p).to_string(),
            moments,
            center_of_gravity: cg,
        })
    }
}

fn render_marginals(a: &PointDist, b: &PointDist, cli: &Cli) -> String {
    if table_mode(cli) {
        format!("# first\n{}# second\n{}", format::dist_to_table(a), format::dist_to_table(b))
    } else {
        json_line(&MarginalsDoc {
            first: format::dist_file(a),
            second: format::dist_file(b),
        })
    }
}

fn render_reports(reports: &[harness::LawReport], cli: &Cli) -> String {
    if table_mode(cli) {
        let mut s = String::new();
        for r in reports {
            let status = if r.passed { "pass" } else { "FAIL" };
            s.push_str(&format!("{status}\t{}\t{}\t{}\n", r.law_name, r.cases_run, r.anchor));
            if let Some(c) = &r.counterexample {
                s.push_str(&format!("\tcounterexample: {c}\n"));
            }
        }
        s
    } else {
        json_line(&reports)
    }
}

fn table_mode(cli: &Cli) -> bool {
    cli.output.table
}
