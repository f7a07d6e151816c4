//! Command-line frontend. Every command prints one JSON document on stdout.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors (with an
//! `{"error": {"kind", "message"}}` object on stdout).

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::branch::{
    admissible, branch_irrep, ds_h_mult, h_mult, invariants_dim, Subgroup, DEFAULT_CUTOFF, DEFAULT_TRUNCATION,
};
use crate::error::Error;
use crate::hermitian::{moment_image_on_a, restricted_roots, HermitianPair, XiType};
use crate::mult::{blattner_mult, holo_k_decompose, holo_k_mult, schmid_degree, sym_power_character, tensor_decompose};
use crate::params::{blattner_param, chamber_of, chambers, condition_hc};
use crate::rational::parse_list;
use crate::verify::{verify_paper, GoldenTable};
use crate::weight::{Ambient, Weight};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Parser, Debug)]
#[command(name = "hds", about = "Hermitian symmetric pairs, Kirwan cones and discrete-series branching")]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Emit JSON (the only format; accepted for scripts).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum GroupKind {
    Su,
    Sp,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long, value_enum)]
    group: GroupKind,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct SubgroupArgs {
    /// Preset name: torus, center, full, su-p-block, su-q-block (SU) or su-n (Sp).
    #[arg(long, conflicts_with = "subgroup_file")]
    subgroup: Option<String>,
    /// JSON subgroup description; `-` reads stdin.
    #[arg(long)]
    subgroup_file: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All structural data of the pair.
    Pair(GroupArgs),
    /// Strongly orthogonal cascade.
    Cascade(GroupArgs),
    /// Generators of the Kirwan cone.
    Cone(GroupArgs),
    /// Positive systems containing the compact positive roots.
    Chambers(GroupArgs),
    /// Blattner parameter of a Harish-Chandra parameter.
    BlattnerParam {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Sign condition between λ and its Blattner parameter.
    Condition {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// K-types of the degree-d part of S(p+).
    Schmid {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        degree: u64,
    },
    /// K-multiplicity in a holomorphic discrete series with lowest K-type Λ.
    Kmult {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long = "Lambda", allow_hyphen_values = true)]
        big: String,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "degree")]
        mu: Option<String>,
        /// Decompose the degree-d part instead of a single multiplicity.
        #[arg(long, conflicts_with = "mu")]
        degree: Option<u64>,
    },
    /// K-multiplicity from the Blattner formula.
    Blattner {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Restriction of a K-type to a subgroup.
    Branch {
        #[command(flatten)]
        g: GroupArgs,
        #[command(flatten)]
        s: SubgroupArgs,
        #[arg(long = "Lambda", allow_hyphen_values = true)]
        big: String,
    },
    /// Admissibility of the restriction of holomorphic discrete series.
    Admissible {
        #[command(flatten)]
        g: GroupArgs,
        #[command(flatten)]
        s: SubgroupArgs,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncate: u64,
    },
    /// H-multiplicity in a holomorphic discrete series.
    Hmult {
        #[command(flatten)]
        g: GroupArgs,
        #[command(flatten)]
        s: SubgroupArgs,
        #[arg(long = "Lambda", allow_hyphen_values = true)]
        big: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u64,
    },
    /// H-multiplicity in the discrete series with parameter λ.
    DsHmult {
        #[command(flatten)]
        g: GroupArgs,
        #[command(flatten)]
        s: SubgroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: u64,
    },
    /// Recompute the worked examples against the stored golden values.
    VerifyPaper {
        #[arg(long)]
        item: Vec<String>,
    },
    /// Projection of the holomorphic roots onto the span of the cascade.
    RestrictedRoots(GroupArgs),
    /// Weights of the degree-d symmetric power of p+.
    Sympow {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long)]
        degree: u64,
    },
    /// Tensor product of two K-types.
    Tensor {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Dimension of the H-invariants in the degree-d part of S(p+).
    Invariants {
        #[command(flatten)]
        g: GroupArgs,
        #[command(flatten)]
        s: SubgroupArgs,
        #[arg(long)]
        degree: u64,
    },
    /// Moment image of a cascade combination with coefficients t.
    Moment {
        #[command(flatten)]
        g: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<Value, Failure>;

fn build_pair(g: &GroupArgs) -> std::result::Result<HermitianPair, Failure> {
    let pair = match g.group {
        GroupKind::Su => match (g.p, g.q, g.n) {
            (Some(p), Some(q), None) => HermitianPair::su(p, q),
            _ => return Err(Failure::Usage("--group su needs --p and --q".into())),
        },
        GroupKind::Sp => match (g.p, g.q, g.n) {
            (None, None, Some(n)) => HermitianPair::sp(n),
            _ => return Err(Failure::Usage("--group sp needs --n".into())),
        },
    };
    Ok(pair?)
}

fn parse_in(ambient: Ambient, flag: &str, text: &str) -> std::result::Result<Weight, Failure> {
    let coords = parse_list(text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))?;
    if coords.len() != ambient.dim() {
        return Err(Failure::Usage(format!("--{flag}: expected {} coordinates, got {}", ambient.dim(), coords.len())));
    }
    Ok(Weight::new(ambient, coords)?)
}

fn weight(pair: &HermitianPair, flag: &str, text: &str) -> std::result::Result<Weight, Failure> {
    parse_in(pair.ambient(), flag, text)
}

fn subgroup(pair: &HermitianPair, s: &SubgroupArgs, stdin: &mut dyn Read) -> std::result::Result<Subgroup, Failure> {
    match (&s.subgroup, &s.subgroup_file) {
        (Some(name), None) => Ok(Subgroup::preset(pair, name)?),
        (None, Some(path)) => {
            let mut text = String::new();
            let read = if path == "-" {
                stdin.read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(path).map(|t| text = t)
            };
            read.map_err(|e| Failure::Usage(format!("--subgroup-file {path}: {e}")))?;
            Ok(Subgroup::from_json(pair, &text)?)
        }
        _ => Err(Failure::Usage("one of --subgroup or --subgroup-file is required".into())),
    }
}

fn weights_json(ws: &[Weight]) -> Value {
    json!(ws)
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> std::result::Result<(Value, bool), Failure> {
    let ok = |v: Value| Ok((v, true));
    let v: Outcome = match cmd {
        Command::Pair(g) => Ok(build_pair(&g)?.to_json()),
        Command::Cascade(g) => Ok(json!({ "cascade": weights_json(build_pair(&g)?.cascade()) })),
        Command::Cone(g) => Ok(json!({ "cone_generators": weights_json(build_pair(&g)?.kirwan_cone()) })),
        Command::Chambers(g) => {
            let pair = build_pair(&g)?;
            let list: Vec<Value> = chambers(&pair).iter().map(|c| c.to_json()).collect();
            Ok(json!({ "chambers": list }))
        }
        Command::BlattnerParam { g, lambda } => {
            let pair = build_pair(&g)?;
            let lam = weight(&pair, "lambda", &lambda)?;
            let big = blattner_param(&pair, &lam)?;
            Ok(json!({
                "lambda": lam,
                "Lambda": big,
                "chamber_id": chamber_of(&pair, &lam)?.id.to_string(),
                "condition_1_2": condition_hc(&pair, &lam)?,
            }))
        }
        Command::Condition { g, lambda } => {
            let pair = build_pair(&g)?;
            let lam = weight(&pair, "lambda", &lambda)?;
            Ok(json!({ "lambda": lam, "condition_1_2": condition_hc(&pair, &lam)? }))
        }
        Command::Schmid { g, degree } => Ok(schmid_degree(&build_pair(&g)?, degree).to_json()),
        Command::Kmult { g, big, mu, degree } => {
            let pair = build_pair(&g)?;
            let big = weight(&pair, "Lambda", &big)?;
            match (mu, degree) {
                (Some(mu), _) => {
                    let mu = weight(&pair, "mu", &mu)?;
                    Ok(json!({ "mult": holo_k_mult(&pair, &big, &mu)?.to_string() }))
                }
                (None, Some(d)) => Ok(holo_k_decompose(&pair, &big, d)?.to_json()),
                (None, None) => Err(Failure::Usage("--mu or --degree is required".into())),
            }
        }
        Command::Blattner { g, lambda, mu } => {
            let pair = build_pair(&g)?;
            let lam = weight(&pair, "lambda", &lambda)?;
            let mu = weight(&pair, "mu", &mu)?;
            Ok(json!({ "mult": blattner_mult(&pair, &lam, &mu)?.to_string() }))
        }
        Command::Branch { g, s, big } => {
            let pair = build_pair(&g)?;
            let sub = subgroup(&pair, &s, stdin)?;
            let big = weight(&pair, "Lambda", &big)?;
            Ok(branch_irrep(&pair, &sub, &big)?.to_json())
        }
        Command::Admissible { g, s, truncate } => {
            let pair = build_pair(&g)?;
            let sub = subgroup(&pair, &s, stdin)?;
            Ok(admissible(&pair, &sub, truncate)?.to_json())
        }
        Command::Hmult { g, s, big, mu, cutoff } => {
            let pair = build_pair(&g)?;
            let sub = subgroup(&pair, &s, stdin)?;
            let big = weight(&pair, "Lambda", &big)?;
            let mu = parse_in(sub.target(), "mu", &mu)?;
            Ok(h_mult(&pair, &big, &sub, &mu, cutoff)?.to_json())
        }
        Command::DsHmult { g, s, lambda, mu, cutoff } => {
            let pair = build_pair(&g)?;
            let sub = subgroup(&pair, &s, stdin)?;
            let lam = weight(&pair, "lambda", &lambda)?;
            let mu = parse_in(sub.target(), "mu", &mu)?;
            Ok(ds_h_mult(&pair, &lam, &sub, &mu, cutoff)?.to_json())
        }
        Command::VerifyPaper { item } => {
            let report = verify_paper(&GoldenTable::reference(), &item);
            return Ok((report.to_json(), report.all_pass()));
        }
        Command::RestrictedRoots(g) => {
            let rr = restricted_roots(&build_pair(&g)?)?;
            let xi = match rr.xi_type {
                XiType::Empty => "empty",
                XiType::HalfGammas => "half_gammas",
            };
            Ok(json!({ "roots": rr.half_sums, "xi": xi }))
        }
        Command::Sympow { g, degree } => {
            let ch = sym_power_character(&build_pair(&g)?, degree);
            let terms: Vec<Value> = ch.iter().map(|(w, m)| json!({ "weight": w, "mult": m.to_string() })).collect();
            Ok(json!({ "weights": terms }))
        }
        Command::Tensor { g, lambda, mu } => {
            let pair = build_pair(&g)?;
            let a = weight(&pair, "lambda", &lambda)?;
            let b = weight(&pair, "mu", &mu)?;
            Ok(tensor_decompose(pair.compact_positive_system(), &a, &b)?.to_json())
        }
        Command::Invariants { g, s, degree } => {
            let pair = build_pair(&g)?;
            let sub = subgroup(&pair, &s, stdin)?;
            Ok(json!({ "degree": degree.to_string(), "dim": invariants_dim(&pair, &sub, degree)?.to_string() }))
        }
        Command::Moment { g, t } => {
            let pair = build_pair(&g)?;
            let t = parse_list(&t).map_err(|e| Failure::Usage(format!("--t: {e}")))?;
            if t.len() != pair.rank() {
                return Err(Failure::Usage(format!("--t: expected {} coefficients, got {}", pair.rank(), t.len())));
            }
            Ok(json!({ "image": moment_image_on_a(&pair, &t)? }))
        }
    };
    ok(v?)
}

fn emit(out: &mut dyn Write, v: &Value, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    let _ = writeln!(out, "{}", text.expect("JSON values serialize"));
}

fn version_json() -> Value {
    json!({ "name": "hds", "version": env!("CARGO_PKG_VERSION"), "schema_version": SCHEMA_VERSION })
}

/// Run with an explicit stdin, for `--subgroup-file -`.
pub fn run_with_input(argv: &[String], stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if argv.get(1).is_some_and(|a| a == "--version" || a == "-V") {
        emit(out, &version_json(), argv.iter().any(|a| a == "--pretty"));
        return 0;
    }
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            };
        }
    };
    let _ = cli.json;
    match execute(cli.command, stdin) {
        Ok((v, pass)) => {
            emit(out, &v, cli.pretty);
            if pass {
                0
            } else {
                2
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Domain(e)) => {
            emit(out, &json!({ "error": { "kind": e.kind(), "message": e.to_string() } }), cli.pretty);
            2
        }
    }
}

/// Parse `argv` (including the program name), write JSON to `out` and
/// diagnostics to `err`, and return the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    run_with_input(argv, &mut std::io::stdin().lock(), out, err)
}
