//! Command-line front end for `lattice-angles`.
//!
//! Every command prints one JSON document on stdout:
//! `{"status": "ok" | "error", "version": ..., "result" | "error": ...}`.
//! Exit codes: 0 on success (a negative answer or an exhausted search still
//! counts as success), 1 when `verify` reports violations, 2 on bad input.

use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use lattice_angles::angleset::vector_with_norm;
use lattice_angles::{
    angle_between, angle_inventory, classify_by_norm, classify_by_tangent_with, consistency_report,
    excluded_angle, excluded_vector, hilbert_criterion, hilbert_symbol, theta_n_contains,
    theta_n_of_a_contains_with, witness_for_angle, AngleClass, Error, IntVec, Place, Rational,
    SearchBudget, TangentReading,
};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

/// Version of the JSON envelope and result layouts.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Parser)]
#[command(
    name = "lattice-angles",
    version,
    about = "Exact angles between integer vectors"
)]
struct Cli {
    /// Indent the JSON and print a one-line summary on stderr.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Is the angle realized against the vector (or in the dimension at all)?
    Membership {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
        #[command(flatten)]
        angle: AngleArgs,
    },
    /// Find an integer vector making the angle with the given one.
    Witness {
        #[arg(long)]
        dim: usize,
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[command(flatten)]
        angle: AngleArgs,
        /// Coordinate bound for searches (dimension 3 and at least 5).
        #[arg(long)]
        bound: Option<u64>,
    },
    /// An angle a 3-vector misses, or a 3-vector missing an angle.
    Exclude {
        #[arg(
            long,
            allow_hyphen_values = true,
            conflicts_with = "tan2",
            required_unless_present = "tan2"
        )]
        vector: Option<String>,
        #[arg(long)]
        tan2: Option<String>,
    },
    /// Closed-form membership for a squared norm, checked against the
    /// Hilbert-symbol criterion.
    Classify {
        #[arg(long)]
        norm2: u64,
        #[arg(long)]
        tan2: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
        theorem: u8,
    },
    /// Hilbert symbol (a, b) at a place.
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// A prime or `inf`.
        #[arg(long)]
        place: String,
    },
    /// All angles the vector makes with the vectors of a box.
    Inventory {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        #[arg(long = "box")]
        box_bound: u64,
    },
    /// Cross-check predictions against exhaustive search.
    Verify {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        vec_bound: u64,
        #[arg(long)]
        tan2_height: u64,
        #[arg(long = "box")]
        box_bound: u64,
    },
}

#[derive(Debug, Args)]
struct AngleArgs {
    /// Squared tangent as `p` or `p/q`.
    #[arg(
        long,
        conflicts_with = "degenerate",
        required_unless_present = "degenerate"
    )]
    tan2: Option<String>,
    /// Take the obtuse angle `pi - arctan(sqrt(tan2))`.
    #[arg(long, requires = "tan2")]
    obtuse: bool,
    #[arg(long, value_parser = ["zero", "right", "straight"])]
    degenerate: Option<String>,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct InputError {
    kind: &'static str,
    message: String,
}

impl InputError {
    fn parse(message: impl Into<String>) -> Self {
        InputError {
            kind: "parse",
            message: message.into(),
        }
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError {
            kind: "validation",
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(Value, bool), InputError>;

fn reject_float(s: &str) -> Result<(), InputError> {
    if s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(InputError::parse(format!(
            "'{s}' looks like a floating-point number; only exact input is accepted, \
             write integers or fractions such as 3/2"
        )));
    }
    Ok(())
}

fn parse_int(s: &str) -> Result<BigInt, InputError> {
    let s = s.trim();
    reject_float(s)?;
    BigInt::from_str(s).map_err(|_| InputError::parse(format!("'{s}' is not an integer")))
}

fn parse_rational(s: &str) -> Result<Rational, InputError> {
    let s = s.trim();
    reject_float(s)?;
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let (n, d) = (parse_int(n)?, parse_int(d)?);
            if d == BigInt::from(0) {
                return Err(InputError::parse(format!("'{s}' has a zero denominator")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

fn parse_vector(s: &str, dim: Option<usize>) -> Result<IntVec, InputError> {
    let comps = s.split(',').map(parse_int).collect::<Result<Vec<_>, _>>()?;
    let v = IntVec::new(comps);
    if let Some(dim) = dim {
        if v.dim() != dim {
            return Err(InputError::parse(format!(
                "--vector has {} components but --dim is {dim}",
                v.dim()
            )));
        }
    }
    Ok(v)
}

fn parse_angle(args: &AngleArgs) -> Result<AngleClass, InputError> {
    match (&args.tan2, args.degenerate.as_deref()) {
        (Some(t), _) => Ok(AngleClass::oblique(parse_rational(t)?, args.obtuse)?),
        (None, Some("zero")) => Ok(AngleClass::Zero),
        (None, Some("right")) => Ok(AngleClass::Right),
        (None, Some("straight")) => Ok(AngleClass::Straight),
        _ => Err(InputError::parse("give either --tan2 or --degenerate")),
    }
}

fn parse_place(s: &str) -> Result<Place, InputError> {
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Place::Infinity);
    }
    reject_float(s)?;
    let p = s
        .trim()
        .parse::<u64>()
        .map_err(|_| InputError::parse(format!("place '{s}' must be a prime or 'inf'")))?;
    Ok(Place::prime(p)?)
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("core types serialize to JSON")
}

fn budget(dim: usize, bound: Option<u64>) -> Result<SearchBudget, InputError> {
    match bound {
        Some(b) => Ok(SearchBudget::new(b)?),
        None => Ok(SearchBudget::default_for_dim(dim)),
    }
}

fn membership(dim: usize, vector: Option<&str>, angle: &AngleClass) -> CmdResult {
    let Some(vector) = vector else {
        let member = theta_n_contains(dim, angle)?;
        return Ok((
            json!({ "dim": dim, "angle": to_json(angle), "member": member, "method": "closed_form" }),
            true,
        ));
    };
    let a = parse_vector(vector, Some(dim))?;
    let verdict = theta_n_of_a_contains_with(&a, angle, SearchBudget::default_for_dim(dim))?;
    let mut out = json!({ "dim": dim, "vector": to_json(&a), "angle": to_json(angle) });
    merge(&mut out, to_json(&verdict));
    Ok((out, true))
}

fn witness(dim: usize, vector: &str, angle: &AngleClass, bound: Option<u64>) -> CmdResult {
    let a = parse_vector(vector, Some(dim))?;
    let budget = budget(dim, bound)?;
    let mut out = json!({ "dim": dim, "vector": to_json(&a), "angle": to_json(angle) });
    let found = match witness_for_angle(&a, angle, budget) {
        Ok(Some(w)) => {
            debug_assert_eq!(angle_between(&a, &w).ok().as_ref(), Some(angle));
            json!({ "found": true, "witness": to_json(&w) })
        }
        Ok(None) => {
            json!({ "found": false, "not_found": true, "box": budget.bound(), "witness": null })
        }
        Err(Error::OutsideTheta { .. }) => {
            json!({ "found": false, "member": false, "method": "closed_form", "witness": null })
        }
        Err(Error::CriterionFails { .. }) => {
            let norm2 = u64::try_from(a.norm2()).expect("criterion already evaluated the norm");
            let tan2 = angle.tan2().expect("criterion applies to oblique angles");
            let verdict = hilbert_criterion(norm2, tan2)?;
            let mut v = json!({ "found": false, "witness": null });
            merge(&mut v, to_json(&verdict));
            v
        }
        Err(e) => return Err(e.into()),
    };
    merge(&mut out, found);
    Ok((out, true))
}

fn exclude(vector: Option<&str>, tan2: Option<&str>) -> CmdResult {
    if let Some(vector) = vector {
        let a = parse_vector(vector, Some(3))?;
        let e = excluded_angle(&a)?;
        let tan2 = e.angle.tan2().map(ToString::to_string);
        return Ok((
            json!({ "vector": to_json(&a), "angle": to_json(&e.angle), "tan2": tan2, "case": to_json(&e.case) }),
            true,
        ));
    }
    let t = parse_rational(tan2.expect("clap requires --vector or --tan2"))?;
    let angle = AngleClass::acute(t)?;
    let a = excluded_vector(&angle)?;
    let norm2 = u64::try_from(a.norm2()).expect("scan stays below the cap");
    let verdict = hilbert_criterion(norm2, angle.tan2().expect("oblique"))?;
    debug_assert_eq!(vector_with_norm(norm2).ok().as_ref(), Some(&a));
    Ok((
        json!({ "angle": to_json(&angle), "vector": to_json(&a), "norm2": norm2, "verdict": to_json(&verdict) }),
        true,
    ))
}

fn classify(norm2: u64, tan2: &str, theorem: u8) -> CmdResult {
    let t = parse_rational(tan2)?;
    let criterion = hilbert_criterion(norm2, &t)?;
    let closed = if theorem == 3 {
        classify_by_norm(norm2, &t)?
    } else {
        classify_by_tangent_with(norm2, &t, TangentReading::Corrected)?
    };
    let mut out = json!({
        "norm2": norm2,
        "tan2": t.to_string(),
        "theorem": theorem,
        "closed_form": closed,
        "criterion": to_json(&criterion),
        "agree": closed == criterion.member,
    });
    if theorem == 4 {
        let literal = classify_by_tangent_with(norm2, &t, TangentReading::Literal)?;
        out["closed_form_literal"] = json!(literal);
    }
    Ok((out, true))
}

fn hilbert(a: &str, b: &str, place: &str) -> CmdResult {
    let (a, b, place) = (parse_rational(a)?, parse_rational(b)?, parse_place(place)?);
    let value = hilbert_symbol(&a, &b, place)?;
    Ok((
        json!({ "a": a.to_string(), "b": b.to_string(), "place": place.to_string(), "value": to_json(&value) }),
        true,
    ))
}

fn inventory(vector: &str, box_bound: u64) -> CmdResult {
    let a = parse_vector(vector, None)?;
    if box_bound == 0 {
        return Err(InputError::parse("--box must be at least 1"));
    }
    let inv = angle_inventory(&a, box_bound)?;
    Ok((
        json!({ "vector": to_json(&a), "box": box_bound, "count": inv.entries.len(), "angles": to_json(&inv.entries) }),
        true,
    ))
}

fn verify(dim: usize, vec_bound: u64, tan2_height: u64, box_bound: u64) -> CmdResult {
    let report = consistency_report(dim, vec_bound, tan2_height, box_bound)?;
    let clean = report.violations.is_empty();
    Ok((to_json(&report), clean))
}

fn merge(into: &mut Value, from: Value) {
    if let (Value::Object(dst), Value::Object(src)) = (into, from) {
        dst.extend(src);
    }
}

fn summary(result: &Value) -> String {
    let field = |k: &str| result.get(k).map(Value::to_string);
    for key in ["member", "found", "value", "closed_form", "case", "count"] {
        if let Some(v) = field(key) {
            return format!("{key}: {v}");
        }
    }
    match result.get("violations").and_then(Value::as_array) {
        Some(v) => format!("violations: {}", v.len()),
        None => "ok".into(),
    }
}

fn render(doc: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(doc).expect("JSON values render")
    } else {
        doc.to_string()
    }
}

fn dispatch(command: &Command) -> CmdResult {
    match command {
        Command::Membership { dim, vector, angle } => {
            membership(*dim, vector.as_deref(), &parse_angle(angle)?)
        }
        Command::Witness {
            dim,
            vector,
            angle,
            bound,
        } => witness(*dim, vector, &parse_angle(angle)?, *bound),
        Command::Exclude { vector, tan2 } => exclude(vector.as_deref(), tan2.as_deref()),
        Command::Classify {
            norm2,
            tan2,
            theorem,
        } => classify(*norm2, tan2, *theorem),
        Command::Hilbert { a, b, place } => hilbert(a, b, place),
        Command::Inventory { vector, box_bound } => inventory(vector, *box_bound),
        Command::Verify {
            dim,
            vec_bound,
            tan2_height,
            box_bound,
        } => verify(*dim, *vec_bound, *tan2_height, *box_bound),
    }
}

/// Output of one invocation: exit code, stdout text and stderr text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn error_outcome(err: InputError, pretty: bool) -> Outcome {
    let doc = json!({
        "status": "error",
        "version": SCHEMA_VERSION,
        "error": { "kind": err.kind, "message": err.message },
    });
    Outcome {
        code: 2,
        stdout: render(&doc, pretty),
        stderr: format!("error: {}", err.message),
    }
}

/// Runs the command line `argv` (program name first).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: 0,
                    stdout: e.to_string(),
                    stderr: String::new(),
                };
            }
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("invalid arguments");
            let first = first.trim_start_matches("error: ").to_string();
            return error_outcome(InputError::parse(first), false);
        }
    };
    match dispatch(&cli.command) {
        Ok((result, clean)) => {
            let stderr = if cli.pretty {
                summary(&result)
            } else {
                String::new()
            };
            let doc = json!({ "status": "ok", "version": SCHEMA_VERSION, "result": result });
            Outcome {
                code: if clean { 0 } else { 1 },
                stdout: render(&doc, cli.pretty),
                stderr,
            }
        }
        Err(e) => error_outcome(e, cli.pretty),
    }
}
