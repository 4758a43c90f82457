//! JSON command-line front end. One binary, subcommand style; matrices,
//! weights and reports travel as the same JSON the library reads and
//! writes. Runs with identical arguments and the same `--seed` produce
//! byte-identical output.
//!
//! Exit codes: 0 success, 1 domain error (structured JSON on stderr),
//! 2 usage error.

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::coordring::{check_bialgebra_axioms, graded_dim, verify_hwc, GradedDimOptions};
use crate::error::{Error, Result};
use crate::exact::{Field, Matrix};
use crate::monoid::{
    classify_orbit, idempotents_in_torus_closure, is_member, is_unit, orbit_witness,
    sample_member, sample_unit, similitude_factor, torus_closure_contains, MonoidKind, MonoidSpec,
};
use crate::repdim::{dim_nabla, DimTable};
use crate::weights::{
    check_xd_plus_saturated, dominance_leq, dominant_predecessors, is_dominant, is_saturated,
    root_datum_for, weight_set_from_json, weight_set_to_json, xd_dominant_enumerate,
    Weight,
};

#[derive(Parser)]
#[command(name = "redmonoid", version, about = "Exact computations in matrix monoids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SpecArgs {
    /// Monoid kind: full, orthogonal or symplectic
    #[arg(long)]
    kind: String,
    /// Matrix size
    #[arg(long)]
    n: usize,
    /// Coefficient field: "q" or "fp:<p>"
    #[arg(long, default_value = "q")]
    field: String,
}

impl SpecArgs {
    fn spec(&self) -> Result<MonoidSpec> {
        MonoidSpec::new(MonoidKind::parse(&self.kind)?, self.n, Field::parse(&self.field)?)
    }
}

#[derive(Args)]
struct InputArg {
    /// Path to the JSON input payload ("-" reads standard input)
    #[arg(long = "in", value_name = "PATH")]
    input: String,
}

impl InputArg {
    fn payload(&self) -> Result<Value> {
        let text = if self.input == "-" {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Json(format!("cannot read stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(&self.input)
                .map_err(|e| Error::Json(format!("cannot read {}: {e}", self.input)))?
        };
        serde_json::from_str(&text).map_err(|e| Error::Json(format!("malformed JSON: {e}")))
    }
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Maximum sampled points (default: 4 x monomial count)
    #[arg(long)]
    point_budget: Option<usize>,
    /// Height bound for sampled Cayley parameters
    #[arg(long, default_value_t = 3)]
    entry_bound: u32,
    /// Worker threads for row evaluation (does not affect the result)
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Orthogonal kind: sample only the identity component
    #[arg(long, default_value_t = false)]
    plus_only: bool,
}

impl OracleArgs {
    fn options(&self) -> GradedDimOptions {
        GradedDimOptions {
            point_budget: self.point_budget,
            entry_bound: self.entry_bound,
            orthogonal_plus_only: self.plus_only,
            jobs: self.jobs,
            ..GradedDimOptions::default()
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Monoid membership of a matrix, with the similitude factor when one exists
    Member {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// The similitude factor c with A^T J A = cJ = A J A^T, or null
    Factor {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Unit-group membership
    Unit {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// All idempotents of the diagonal torus closure
    Idempotents {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Torus-closure membership of a diagonal matrix
    TorusContains {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// G x G orbit class of a member
    Classify {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Exact witness g A h = e for a singular member
    Witness {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Seeded random unit of the spec's group
    SampleUnit {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        entry_bound: u32,
    },
    /// Seeded random monoid member g e h
    SampleMember {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rank of the canonical idempotent (random singular when absent)
        #[arg(long)]
        rank: Option<usize>,
    },
    /// Dominant weights of the torus-closure monoid at one degree
    WeightsEnum {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Dominance test of a single weight
    Dominant {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Dominance-order comparison: payload {"lhs": w, "rhs": w} tests lhs <= rhs
    Dominance {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// All dominant predecessors of a dominant weight
    Predecessors {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Predecessor-closedness of a weight set
    Saturated {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Brute-force saturation check of the dominant weight slice
    CheckSaturation {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Dimension of the induced module of a dominant weight
    DimNabla {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Dimension table and squared-dimension sum of one degree slice
    SquareSum {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        degree: u32,
    },
    /// Graded dimension of the coordinate ring by the evaluation-rank oracle
    GradedDim {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Compare the oracle's graded dimension with the square-sum prediction
    VerifyHwc {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        degree: u32,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Symbolic check of coassociativity and the counit laws
    BialgebraCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
}

fn matrix_payload(input: &InputArg) -> Result<Matrix> {
    Matrix::from_json(&input.payload()?)
}

fn weight_payload(input: &InputArg) -> Result<Weight> {
    Weight::from_json(&input.payload()?)
}

fn dispatch(command: Command) -> Result<Value> {
    match command {
        Command::Member { spec, input } => {
            let spec = spec.spec()?;
            let a = matrix_payload(&input)?;
            let (member, c) = match spec.kind {
                MonoidKind::Full => (is_member(&spec, &a)?, None),
                _ => {
                    let c = similitude_factor(&spec, &a)?;
                    (c.is_some(), c)
                }
            };
            Ok(json!({
                "member": member,
                "c": c.map(|s| s.to_display_string()),
            }))
        }
        Command::Factor { spec, input } => {
            let spec = spec.spec()?;
            let a = matrix_payload(&input)?;
            let c = similitude_factor(&spec, &a)?;
            Ok(json!({"c": c.map(|s| s.to_display_string())}))
        }
        Command::Unit { spec, input } => {
            let spec = spec.spec()?;
            let a = matrix_payload(&input)?;
            Ok(json!({"unit": is_unit(&spec, &a)?}))
        }
        Command::Idempotents { spec } => {
            let spec = spec.spec()?;
            let es = idempotents_in_torus_closure(&spec);
            Ok(Value::Array(es.iter().map(Matrix::to_json).collect()))
        }
        Command::TorusContains { spec, input } => {
            let spec = spec.spec()?;
            let d = matrix_payload(&input)?;
            Ok(json!({"contains": torus_closure_contains(&spec, &d)?}))
        }
        Command::Classify { spec, input } => {
            let spec = spec.spec()?;
            let a = matrix_payload(&input)?;
            Ok(classify_orbit(&spec, &a)?.to_json())
        }
        Command::Witness { spec, input } => {
            let spec = spec.spec()?;
            let a = matrix_payload(&input)?;
            let w = orbit_witness(&spec, &a)?;
            Ok(json!({
                "g": w.g.to_json(),
                "h": w.h.to_json(),
                "e": w.e.to_json(),
            }))
        }
        Command::SampleUnit { spec, seed, entry_bound } => {
            let spec = spec.spec()?;
            Ok(sample_unit(&spec, seed, entry_bound)?.to_json())
        }
        Command::SampleMember { spec, seed, rank } => {
            let spec = spec.spec()?;
            Ok(sample_member(&spec, seed, rank)?.to_json())
        }
        Command::WeightsEnum { spec, degree } => {
            let spec = spec.spec()?;
            Ok(weight_set_to_json(&xd_dominant_enumerate(&spec, degree)?))
        }
        Command::Dominant { spec, input } => {
            let spec = spec.spec()?;
            let rd = root_datum_for(&spec)?;
            let w = weight_payload(&input)?;
            Ok(json!({"dominant": is_dominant(&rd, &w)?}))
        }
        Command::Dominance { spec, input } => {
            let spec = spec.spec()?;
            let rd = root_datum_for(&spec)?;
            let payload = input.payload()?;
            let lhs = Weight::from_json(
                payload
                    .get("lhs")
                    .ok_or_else(|| Error::Json("payload needs \"lhs\"".into()))?,
            )?;
            let rhs = Weight::from_json(
                payload
                    .get("rhs")
                    .ok_or_else(|| Error::Json("payload needs \"rhs\"".into()))?,
            )?;
            Ok(json!({"leq": dominance_leq(&rd, &lhs, &rhs)?}))
        }
        Command::Predecessors { spec, input } => {
            let spec = spec.spec()?;
            let rd = root_datum_for(&spec)?;
            let w = weight_payload(&input)?;
            Ok(weight_set_to_json(&dominant_predecessors(&rd, &w)?))
        }
        Command::Saturated { spec, input } => {
            let spec = spec.spec()?;
            let rd = root_datum_for(&spec)?;
            let ws = weight_set_from_json(&input.payload()?)?;
            Ok(json!({"saturated": is_saturated(&rd, &ws)?}))
        }
        Command::CheckSaturation { spec, degree } => {
            let spec = spec.spec()?;
            let ok = check_xd_plus_saturated(&spec, degree)?;
            Ok(json!({
                "saturated": ok,
                "kind": spec.kind.as_str(),
                "n": spec.n,
                "degree": degree,
            }))
        }
        Command::DimNabla { spec, input } => {
            let spec = spec.spec()?;
            let rd = root_datum_for(&spec)?;
            let w = weight_payload(&input)?;
            Ok(json!({"dim": dim_nabla(&rd, &w)?}))
        }
        Command::SquareSum { spec, degree } => {
            let spec = spec.spec()?;
            let table = DimTable::build(&spec, degree)?;
            let mut out = table.to_json();
            out.as_object_mut()
                .expect("table serializes to an object")
                .insert("square_sum".into(), json!(table.square_sum()));
            Ok(out)
        }
        Command::GradedDim { spec, degree, oracle } => {
            let spec = spec.spec()?;
            let opts = oracle.options();
            let r = graded_dim(&spec, degree, oracle.seed, &opts)?;
            Ok(json!({
                "spec": spec.to_json(),
                "degree": degree,
                "graded_dim": r.rank,
                "monomials": r.monomial_count,
                "points_used": r.points_used,
                "seed": oracle.seed,
            }))
        }
        Command::VerifyHwc { spec, degree, oracle } => {
            let spec = spec.spec()?;
            let opts = oracle.options();
            Ok(verify_hwc(&spec, degree, oracle.seed, &opts)?.to_json())
        }
        Command::BialgebraCheck { n, degree } => {
            let ok = check_bialgebra_axioms(n, degree)?;
            Ok(json!({"ok": ok, "n": n, "max_degree": degree}))
        }
    }
}

/// Parses and runs one invocation; returns the process exit code.
pub fn run(args: Vec<String>) -> i32 {
    let mut argv = vec!["redmonoid".to_string()];
    argv.extend(args);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    let msg = e.render().to_string();
                    eprintln!("{}", json!({"error": msg.trim_end()}));
                    2
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(v) => {
            println!("{v}");
            0
        }
        Err(e) => {
            eprintln!("{}", json!({"error": e.to_string()}));
            1
        }
    }
}
