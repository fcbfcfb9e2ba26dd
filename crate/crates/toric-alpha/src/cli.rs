//! Command-line front end: every capability of the library behind one
//! binary with JSON input and output.
//!
//! Conventions shared by all subcommands:
//!
//! * rationals cross the process boundary as `"p/q"` strings, never floats;
//!   `--approx` appends a sibling `<key>Approx` decimal rendering (6 places,
//!   exact long division) next to each top-level exact value, never
//!   replacing it;
//! * exit code 0 on success with the result object on standard output;
//!   1 on malformed input; 2 on domain or precondition errors — both
//!   failure modes print a machine-readable `{"code", "message", "data"}`
//!   object on standard output;
//! * identical input produces byte-identical output;
//! * `TORIC_ALPHA_THREADS` caps the worker pool used by the parallel
//!   censuses (the default is one worker per available core).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_traits::{ToPrimitive, Zero};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diophantine::{self, Instance};
use crate::error::{Error, Result};
use crate::num::{
    decimal_string, format_rat, format_rat_vec, from_int, int, parse_rat, parse_rat_vec, rat_int,
    ExtRat, Int, Rat,
};
use crate::polytope::{HalfSpace, LatticeMode, Polytope};
use crate::rank1::{self, RankOneFano};
use crate::simplex_bounds::{self, LatticeSimplex};
use crate::sylvester;
use crate::toric::{self, ToricLogPair};

// ---------------------------------------------------------------------------
// argument surface

#[derive(Parser)]
#[command(
    name = "toric-alpha",
    version,
    about = "Exact invariants of polarized toric log Fano pairs",
    long_about = "Exact invariants of polarized toric log Fano pairs: gamma invariants of \
                  rational polytopes, alpha invariants and minimal log discrepancies, sharp \
                  Sylvester-sequence bounds, a prefix-violation Diophantine solver, and \
                  finiteness censuses. All arithmetic is over arbitrary-precision rationals."
)]
struct Cli {
    /// Append decimal renderings (6 places) next to exact values
    #[arg(long, global = true)]
    approx: bool,

    /// Accepted for script stability; every subcommand is deterministic,
    /// so the seed never changes a result
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

/// JSON input carried either in a file or inline on the command line.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct BodyInput {
    /// Path of a JSON input file
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,

    /// Inline JSON input
    #[arg(long, value_name = "JSON")]
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Sequence value u_{p,q} together with the exact identity checks
    Sylvester {
        /// Index in the sequence (1-based)
        #[arg(long)]
        p: u32,
        /// Seed value u_{1,q} = q
        #[arg(long)]
        q: u32,
    },

    /// Gamma invariant of a point inside a polytope
    GammaPoint {
        #[command(flatten)]
        body: BodyInput,
        /// The evaluation point as comma-separated rationals (default: origin)
        #[arg(long, value_name = "p/q,...")]
        point: Option<String>,
    },

    /// Dual polytope of a body with the origin interior
    Dual {
        #[command(flatten)]
        body: BodyInput,
    },

    /// Width of a polytope along an integer direction
    Width {
        #[command(flatten)]
        body: BodyInput,
        /// Direction as comma-separated integers
        #[arg(long, value_name = "n,...")]
        direction: String,
    },

    /// Lattice points of the closed body or of its interior
    LatticePoints {
        #[command(flatten)]
        body: BodyInput,
        /// Enumerate interior points instead of the closed body
        #[arg(long)]
        interior: bool,
    },

    /// Exact volume, plus the d!-scaled value used as a polarized degree
    Volume {
        #[command(flatten)]
        body: BodyInput,
    },

    /// Linear Diophantine solver for prefix-violating target vectors
    LhnSolve {
        /// Denominator parameter (positive integer)
        #[arg(long)]
        q: i64,
        /// Coefficients as comma-separated rationals
        #[arg(long, value_name = "c1,c2,...")]
        c: String,
        /// Targets as comma-separated rationals, descending
        #[arg(long, value_name = "x1,x2,...")]
        x: String,
    },

    /// Sharp gamma bound verification for one simplex
    SimplexVerify {
        #[command(flatten)]
        body: BodyInput,
        /// Interior-point parameter of the bound q/u_{d+1,q}
        #[arg(long, default_value_t = 1)]
        q: u32,
    },

    /// Planar simplex census with equality classification
    Census {
        /// Ambient dimension (2 is the supported value)
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Vertex box radius
        #[arg(long, default_value_t = 4)]
        radius: i64,
        /// Interior-point parameter of the bound
        #[arg(long, default_value_t = 1)]
        q: u32,
    },

    /// Alpha invariant of a toric pair for a divisor (default: -K-B)
    ToricAlpha {
        #[command(flatten)]
        pair: BodyInput,
        /// Path of a divisor JSON file {"l": ["p/q", ...]}
        #[arg(long, value_name = "PATH")]
        divisor_file: Option<PathBuf>,
        /// Inline divisor JSON
        #[arg(long, value_name = "JSON")]
        divisor_json: Option<String>,
    },

    /// Minimal log discrepancy of a toric pair
    ToricMld {
        #[command(flatten)]
        pair: BodyInput,
    },

    /// Threshold, gamma and degree bound report for a toric pair
    ToricCheck {
        #[command(flatten)]
        pair: BodyInput,
        /// Threshold parameter: the hypothesis is mld >= 1/q
        #[arg(long, default_value_t = 1)]
        q: u32,
    },

    /// Alpha invariant of a product pair against the factor minimum
    ProductCheck {
        #[command(flatten)]
        first: BodyInput,
        /// Path of the second pair's JSON file
        #[arg(long, value_name = "PATH")]
        other_file: Option<PathBuf>,
        /// Inline JSON for the second pair
        #[arg(long, value_name = "JSON")]
        other_json: Option<String>,
    },

    /// Invariants of a rank-one pair given by barycentric data
    #[command(name = "rank1-analyze")]
    Rank1Analyze {
        #[command(flatten)]
        body: BodyInput,
        /// Also decide mld >= epsilon and search for a witness below it
        #[arg(long, value_name = "p/q")]
        epsilon: Option<String>,
    },

    /// The sharp rank-one family member for the given dimension and q
    #[command(name = "rank1-extremal")]
    Rank1Extremal {
        /// Dimension (at least 1)
        #[arg(long)]
        d: u32,
        /// Denominator parameter (at least 1)
        #[arg(long)]
        q: u32,
    },

    /// Bounded census of complete fans admitting mld >= epsilon
    FanoCensus {
        /// Ambient dimension (1 or 2)
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Threshold, a rational in (0, 1]
        #[arg(long, default_value = "1")]
        epsilon: String,
        /// Truncate the search box below the derived radius
        #[arg(long)]
        radius: Option<i64>,
    },
}

// ---------------------------------------------------------------------------
// JSON input formats

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HalfSpaceJson {
    normal: Vec<i64>,
    offset: String,
}

/// Either representation is accepted; when both are present the vertices
/// win (that is what the emitter writes).
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeJson {
    dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    halfspaces: Option<Vec<HalfSpaceJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ToricPairJson {
    dim: usize,
    rays: Vec<Vec<i64>>,
    a: Vec<String>,
    #[serde(rename = "maxCones", default, skip_serializing_if = "Option::is_none")]
    max_cones: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DivisorJson {
    l: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Rank1Json {
    x: Vec<String>,
    a: Vec<String>,
}

fn polytope_from_json(p: &PolytopeJson) -> Result<Polytope> {
    if let Some(rows) = &p.vertices {
        let pts = rows
            .iter()
            .map(|row| parse_rat_vec(row))
            .collect::<Result<Vec<_>>>()?;
        return Polytope::from_vertices(p.dim, pts);
    }
    if let Some(hs) = &p.halfspaces {
        let halves = hs
            .iter()
            .map(|h| HalfSpace::new(h.normal.iter().map(|&v| int(v)).collect(), parse_rat(&h.offset)?))
            .collect::<Result<Vec<_>>>()?;
        return Ok(Polytope::from_half_spaces(p.dim, halves)?.polytope);
    }
    Err(Error::Malformed(
        "polytope JSON needs \"vertices\" or \"halfspaces\"".into(),
    ))
}

fn polytope_to_json(p: &Polytope) -> Result<PolytopeJson> {
    let halfspaces = p
        .facets()
        .iter()
        .map(|h| {
            Ok(HalfSpaceJson {
                normal: h.normal.iter().map(int_to_i64).collect::<Result<_>>()?,
                offset: format_rat(&h.offset),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolytopeJson {
        dim: p.dim(),
        halfspaces: Some(halfspaces),
        vertices: Some(p.vertices().iter().map(|v| format_rat_vec(v)).collect()),
    })
}

fn pair_from_json(j: &ToricPairJson) -> Result<ToricLogPair> {
    let rays = j
        .rays
        .iter()
        .map(|r| r.iter().map(|&v| int(v)).collect())
        .collect();
    ToricLogPair::new(j.dim, rays, parse_rat_vec(&j.a)?, j.max_cones.clone())
}

// ---------------------------------------------------------------------------
// plumbing

fn read_source(file: &Option<PathBuf>, inline: &Option<String>) -> Result<String> {
    match (file, inline) {
        (Some(p), None) => std::fs::read_to_string(p)
            .map_err(|e| Error::Malformed(format!("cannot read {}: {e}", p.display()))),
        (None, Some(s)) => Ok(s.clone()),
        _ => Err(Error::Malformed(
            "provide exactly one of the file and inline-JSON inputs".into(),
        )),
    }
}

fn from_json_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))
}

fn body_input(body: &BodyInput) -> Result<String> {
    read_source(&body.file, &body.json)
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

fn parse_int_list(s: &str) -> Result<Vec<Int>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Int>()
                .map_err(|e| Error::Malformed(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}

fn int_to_i64(x: &Int) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Internal(format!("{x} does not fit in a JSON integer")))
}

type Map = serde_json::Map<String, Value>;

fn rat_field(map: &mut Map, key: &str, r: &Rat, approx: bool) {
    map.insert(key.to_string(), Value::String(format_rat(r)));
    if approx {
        map.insert(
            format!("{key}Approx"),
            Value::String(decimal_string(r, 6)),
        );
    }
}

fn ext_field(map: &mut Map, key: &str, e: &ExtRat, approx: bool) {
    map.insert(key.to_string(), Value::String(e.to_string()));
    if approx {
        let rendered = match e {
            ExtRat::Finite(r) => decimal_string(r, 6),
            ExtRat::Infinity => "inf".to_string(),
        };
        map.insert(format!("{key}Approx"), Value::String(rendered));
    }
}

fn rat_vec_value(v: &[Rat]) -> Value {
    Value::Array(format_rat_vec(v).into_iter().map(Value::String).collect())
}

fn int_vec_value(v: &[Int]) -> Result<Value> {
    Ok(Value::Array(
        v.iter()
            .map(|x| Ok(Value::from(int_to_i64(x)?)))
            .collect::<Result<_>>()?,
    ))
}

fn int_matrix_value(rows: &[Vec<Int>]) -> Result<Value> {
    Ok(Value::Array(
        rows.iter().map(|r| int_vec_value(r)).collect::<Result<_>>()?,
    ))
}

/// A failed invocation: the exit code plus the error object to print.
struct Failure {
    exit: i32,
    body: Value,
}

fn failure(e: Error) -> Failure {
    let code = match &e {
        Error::Malformed(_) => "malformed-input",
        Error::DimensionMismatch(_) => "dimension-mismatch",
        Error::NonSquareMatrix { .. } => "non-square-matrix",
        Error::SingularMatrix => "singular-matrix",
        Error::InconsistentSystem => "inconsistent-system",
        Error::ZeroVector => "zero-vector",
        Error::OutOfRange(_) => "out-of-range",
        Error::Unbounded => "unbounded",
        Error::EmptyRegion => "empty-region",
        Error::PointOutside => "point-outside",
        Error::BoundaryPoint => "boundary-point",
        Error::OriginNotInterior => "origin-not-interior",
        Error::DegenerateSimplex => "degenerate-simplex",
        Error::OutsideAffineHull => "outside-affine-hull",
        Error::ExtremalInstance => "extremal-instance",
        Error::HypothesisUnmet => "hypothesis-unmet",
        Error::HypothesisViolated(_) => "hypothesis-violated",
        Error::Internal(_) => "internal",
        Error::NonPrimitiveRay { .. } => "non-primitive-ray",
        Error::CoefficientOutOfRange { .. } => "coefficient-out-of-range",
        Error::NotComplete => "not-complete",
        Error::NotQCartier(_) => "not-q-cartier",
        Error::GuardExceeded(_) => "guard-exceeded",
        Error::Unsupported(_) => "unsupported",
    };
    let data = match &e {
        Error::NonPrimitiveRay {
            index,
            factor,
            suggestion,
        } => json!({"index": index, "factor": factor, "suggestion": suggestion}),
        Error::CoefficientOutOfRange { index, value } => {
            json!({"index": index, "value": value})
        }
        Error::NonSquareMatrix { rows, cols } => json!({"rows": rows, "cols": cols}),
        _ => Value::Null,
    };
    Failure {
        exit: if e.is_malformed() { 1 } else { 2 },
        body: json!({"code": code, "message": e.to_string(), "data": data}),
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var("TORIC_ALPHA_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().map_err(|_| {
        Error::Malformed(format!(
            "TORIC_ALPHA_THREADS must be a positive integer, got {raw:?}"
        ))
    })?;
    if n == 0 {
        return Err(Error::Malformed(
            "TORIC_ALPHA_THREADS must be at least 1".into(),
        ));
    }
    // a second initialization in the same process keeps the first pool
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Parses and dispatches one invocation, printing the result or the error
/// object; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version render here with exit 0
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = configure_threads().and_then(|()| dispatch(cli.command, cli.approx));
    match outcome {
        Ok(v) => {
            println!("{v}");
            0
        }
        Err(e) => {
            let f = failure(e);
            println!("{}", f.body);
            f.exit
        }
    }
}

// ---------------------------------------------------------------------------
// handlers

fn dispatch(cmd: Command, approx: bool) -> Result<Value> {
    match cmd {
        Command::Sylvester { p, q } => {
            let value = sylvester::u(p, q)?;
            let report = sylvester::identity_checks(p, q)?;
            let mut m = Map::new();
            m.insert("u".into(), Value::String(value.to_string()));
            m.insert(
                "identities".into(),
                Value::String(if report.all_pass() { "pass" } else { "fail" }.into()),
            );
            Ok(Value::Object(m))
        }

        Command::GammaPoint { body, point } => {
            let poly = polytope_from_json(&from_json_str(&body_input(&body)?)?)?;
            let p = match point {
                Some(s) => parse_rat_list(&s)?,
                None => vec![Rat::zero(); poly.dim()],
            };
            let gamma = poly.gamma_point(&p)?;
            let mut m = Map::new();
            rat_field(&mut m, "gamma", &gamma, approx);
            Ok(Value::Object(m))
        }

        Command::Dual { body } => {
            let poly = polytope_from_json(&from_json_str(&body_input(&body)?)?)?;
            let dual = poly.dual()?;
            Ok(serde_json::to_value(polytope_to_json(&dual)?)
                .map_err(|e| Error::Internal(e.to_string()))?)
        }

        Command::Width { body, direction } => {
            let poly = polytope_from_json(&from_json_str(&body_input(&body)?)?)?;
            let e = parse_int_list(&direction)?;
            let width = poly.width(&e)?;
            let mut m = Map::new();
            rat_field(&mut m, "width", &width, approx);
            Ok(Value::Object(m))
        }

        Command::LatticePoints { body, interior } => {
            let poly = polytope_from_json(&from_json_str(&body_input(&body)?)?)?;
            let mode = if interior {
                LatticeMode::Interior
            } else {
                LatticeMode::Closed
            };
            let points = poly.lattice_points(mode);
            let mut m = Map::new();
            m.insert("count".into(), Value::from(points.len()));
            m.insert("interior".into(), Value::Bool(interior));
            m.insert("points".into(), int_matrix_value(&points)?);
            Ok(Value::Object(m))
        }

        Command::Volume { body } => {
            let poly = polytope_from_json(&from_json_str(&body_input(&body)?)?)?;
            let volume = poly.normalized_volume();
            let mut scaled = volume.clone();
            for i in 2..=poly.dim() {
                scaled *= rat_int(i as i64);
            }
            let mut m = Map::new();
            rat_field(&mut m, "volume", &volume, approx);
            rat_field(&mut m, "volumeScaled", &scaled, approx);
            Ok(Value::Object(m))
        }

        Command::LhnSolve { q, c, x } => {
            let inst = Instance::new(int(q), parse_rat_list(&c)?, parse_rat_list(&x)?)?;
            let sol = diophantine::solve(&inst)?;
            let mut m = Map::new();
            m.insert("z".into(), int_vec_value(&sol.z)?);
            m.insert(
                "certificate".into(),
                Value::Array(
                    sol.certificate
                        .iter()
                        .map(|line| {
                            let mut entry = Map::new();
                            entry.insert("lhs".into(), Value::String(format_rat(&line.lhs)));
                            entry.insert("rhs".into(), Value::String(format_rat(&line.rhs)));
                            Value::Object(entry)
                        })
                        .collect(),
                ),
            );
            m.insert("hypothesisMet".into(), Value::Bool(sol.hypothesis_met));
            Ok(Value::Object(m))
        }

        Command::SimplexVerify { body, q } => {
            let poly = polytope_from_json(&from_json_str(&body_input(&body)?)?)?;
            let vertices = poly.vertices();
            let report = if vertices.iter().flatten().all(|c| c.is_integer()) {
                let lattice = vertices
                    .iter()
                    .map(|v| v.iter().map(|c| c.to_integer()).collect())
                    .collect();
                simplex_bounds::verify_sharp_simplex(&LatticeSimplex::new(lattice)?, q)?
            } else {
                simplex_bounds::verify_scaled_simplex(vertices, q)?
            };
            let mut m = Map::new();
            rat_field(&mut m, "gamma", &report.gamma, approx);
            rat_field(&mut m, "bound", &report.bound, approx);
            m.insert("equality".into(), Value::Bool(report.equality));
            m.insert(
                "witness".into(),
                match &report.witness {
                    Some(rows) => int_matrix_value(rows)?,
                    None => Value::Null,
                },
            );
            Ok(Value::Object(m))
        }

        Command::Census { d, radius, q } => {
            if d != 2 {
                return Err(Error::Unsupported(format!(
                    "the simplex census is implemented for d = 2 only, got d = {d}"
                )));
            }
            let report = simplex_bounds::enumerate_and_verify(radius, q)?;
            let mut m = Map::new();
            m.insert("radius".into(), Value::from(report.radius));
            m.insert("q".into(), Value::from(report.q));
            m.insert("candidates".into(), Value::from(report.candidates));
            m.insert("admissible".into(), Value::from(report.admissible));
            match &report.min_gamma {
                Some(g) => rat_field(&mut m, "minGamma", g, approx),
                None => {
                    m.insert("minGamma".into(), Value::Null);
                }
            }
            rat_field(&mut m, "bound", &report.bound, approx);
            m.insert(
                "equalityClasses".into(),
                Value::Array(
                    report
                        .equality_classes
                        .iter()
                        .map(|c| int_matrix_value(c))
                        .collect::<Result<_>>()?,
                ),
            );
            m.insert("violated".into(), Value::Bool(report.violated));
            Ok(Value::Object(m))
        }

        Command::ToricAlpha {
            pair,
            divisor_file,
            divisor_json,
        } => {
            let pair = pair_from_json(&from_json_str(&body_input(&pair)?)?)?;
            let l = match (&divisor_file, &divisor_json) {
                (None, None) => pair.anticanonical(),
                _ => {
                    let d: DivisorJson =
                        from_json_str(&read_source(&divisor_file, &divisor_json)?)?;
                    parse_rat_vec(&d.l)?
                }
            };
            let alpha = pair.alpha_invariant(&l)?;
            let mut m = Map::new();
            ext_field(&mut m, "alpha", &alpha, approx);
            Ok(Value::Object(m))
        }

        Command::ToricMld { pair } => {
            let pair = pair_from_json(&from_json_str(&body_input(&pair)?)?)?;
            let mld = pair.mld()?;
            let mut m = Map::new();
            rat_field(&mut m, "mld", &mld, approx);
            Ok(Value::Object(m))
        }

        Command::ToricCheck { pair, q } => {
            let pair = pair_from_json(&from_json_str(&body_input(&pair)?)?)?;
            let report = pair.anticanonical_bound_checks(q)?;
            let mut m = Map::new();
            rat_field(&mut m, "mld", &report.mld, approx);
            rat_field(&mut m, "threshold", &report.threshold, approx);
            m.insert("applicable".into(), Value::Bool(report.applicable));
            match &report.gamma {
                Some(g) => rat_field(&mut m, "gamma", g, approx),
                None => {
                    m.insert("gamma".into(), Value::Null);
                }
            }
            rat_field(&mut m, "gammaBound", &report.gamma_bound, approx);
            m.insert(
                "gammaOk".into(),
                report.gamma_ok.map(Value::Bool).unwrap_or(Value::Null),
            );
            match &report.degree {
                Some(d) => rat_field(&mut m, "degree", d, approx),
                None => {
                    m.insert("degree".into(), Value::Null);
                }
            }
            rat_field(&mut m, "degreeBound", &report.degree_bound, approx);
            m.insert(
                "degreeOk".into(),
                report.degree_ok.map(Value::Bool).unwrap_or(Value::Null),
            );
            m.insert(
                "pass".into(),
                match (report.gamma_ok, report.degree_ok) {
                    (Some(a), Some(b)) => Value::Bool(a && b),
                    _ => Value::Null,
                },
            );
            Ok(Value::Object(m))
        }

        Command::ProductCheck {
            first,
            other_file,
            other_json,
        } => {
            let p1 = pair_from_json(&from_json_str(&body_input(&first)?)?)?;
            let p2 = pair_from_json(&from_json_str(&read_source(&other_file, &other_json)?)?)?;
            let l1 = p1.anticanonical();
            let l2 = p2.anticanonical();
            let report = toric::product_alpha_check(&p1, &l1, &p2, &l2)?;
            let mut m = Map::new();
            ext_field(&mut m, "product", &report.product, approx);
            ext_field(&mut m, "factorMinimum", &report.factor_minimum, approx);
            m.insert("pass".into(), Value::Bool(report.pass));
            Ok(Value::Object(m))
        }

        Command::Rank1Analyze { body, epsilon } => {
            let j: Rank1Json = from_json_str(&body_input(&body)?)?;
            let f = RankOneFano::from_barycentric(parse_rat_vec(&j.x)?, parse_rat_vec(&j.a)?)?;
            let (alpha, cartier) = f.alpha_and_cartier();
            let mld = f.mld_scan();
            let mut m = Map::new();
            m.insert("d".into(), Value::from(f.dim()));
            m.insert("q".into(), Value::String(f.q().to_string()));
            m.insert("x".into(), rat_vec_value(f.x()));
            m.insert("a".into(), rat_vec_value(f.a()));
            m.insert("w".into(), rat_vec_value(f.w()));
            m.insert("gamma".into(), rat_vec_value(f.gamma()));
            rat_field(&mut m, "alpha", &alpha, approx);
            m.insert("cartier".into(), Value::String(cartier.to_string()));
            rat_field(&mut m, "mld", &mld, approx);
            if let Some(e) = epsilon {
                let eps = parse_rat(&e)?;
                let at_least = f.mld_at_least(&eps)?;
                let witness = f.witness_below(&eps)?;
                rat_field(&mut m, "epsilon", &eps, approx);
                m.insert("mldAtLeast".into(), Value::Bool(at_least));
                m.insert(
                    "witness".into(),
                    match &witness {
                        Some(z) => int_vec_value(z)?,
                        None => Value::Null,
                    },
                );
            }
            Ok(Value::Object(m))
        }

        Command::Rank1Extremal { d, q } => {
            let f = rank1::extremal_example(d, q)?;
            let (alpha, _) = f.alpha_and_cartier();
            let mld = f.mld_scan();
            let scaled = from_int(sylvester::u(d + 1, q)?) / rat_int(q as i64);
            let mut m = Map::new();
            rat_field(&mut m, "alpha", &alpha, approx);
            rat_field(&mut m, "mld", &mld, approx);
            rat_field(&mut m, "volumeQScaled", &scaled, approx);
            Ok(Value::Object(m))
        }

        Command::FanoCensus { d, epsilon, radius } => {
            let eps = parse_rat(&epsilon)?;
            let census = toric::fano_census(d, &eps, radius)?;
            let mut m = Map::new();
            m.insert("dim".into(), Value::from(census.dim));
            rat_field(&mut m, "epsilon", &census.epsilon, approx);
            m.insert("q".into(), Value::from(census.q));
            rat_field(&mut m, "gamma", &census.gamma, approx);
            rat_field(
                &mut m,
                "differenceVolumeBound",
                &census.difference_volume_bound,
                approx,
            );
            m.insert(
                "derivedRadius".into(),
                Value::String(census.derived_radius.to_string()),
            );
            m.insert("radius".into(), Value::from(census.radius));
            m.insert(
                "configurationsTested".into(),
                Value::from(census.configurations_tested),
            );
            m.insert("memberCount".into(), Value::from(census.members.len()));
            let members = census
                .members
                .iter()
                .map(|member| {
                    let mut entry = Map::new();
                    entry.insert("rays".into(), int_matrix_value(&member.rays)?);
                    entry.insert("a".into(), rat_vec_value(&member.a));
                    entry.insert("mld".into(), Value::String(format_rat(&member.mld)));
                    entry.insert(
                        "boundaryFree".into(),
                        Value::Bool(member.boundary_free),
                    );
                    Ok(Value::Object(entry))
                })
                .collect::<Result<_>>()?;
            m.insert("members".into(), Value::Array(members));
            Ok(Value::Object(m))
        }
    }
}
