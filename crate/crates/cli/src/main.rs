//! `symf`: exact Hall-Littlewood / Schur / Schur-Q computations, row-finite
//! field transforms, evaluation oracles and KP/BKP tau verification.
//!
//! Exit codes: 0 computed or verified, 1 mathematically falsified (with a
//! witness document on stdout), 2 usage or input error.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use symf_core::coef::CoefPoly;
use symf_core::fields::{
    check_gamma_cross, check_gamma_gamma, hall_littlewood, iterate_field, phi, psi_minus,
    psi_plus, schur_jt, ChargedState, FieldKind,
};
use symf_core::gallery::{
    cumulative_matrix, grothendieck_dual_matrix, multiparameter_matrix, pascal_matrix,
    toeplitz_matrix, PolySeq,
};
use symf_core::json as sjson;
use symf_core::oracles::{
    bialternant_eval, grothendieck_alternant_eval, hl_symmetrized_eval, schur_tableaux_eval,
    schurq_pfaffian_eval, transformed_symmetrized_eval, EvalPoint,
};
use symf_core::partition::{partitions_up_to, Partition};
use symf_core::rat::{format_rat, parse_rat, Rat};
use symf_core::symfun::SymFun;
use symf_core::tau::{bkp_residue, kp_residue, TensorElt};
use symf_core::transform::{jt_transformed, pf_transformed, transformed_family};

#[derive(Parser)]
#[command(name = "symf", version, about = "exact symmetric-function engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hall-Littlewood family member F_lambda (symbolic t unless --t given)
    Hl(LambdaArgs),
    /// Schur function of an integer vector via the h-determinant
    Schur(LambdaArgs),
    /// Schur-Q function of a strict partition via the Pfaffian
    Schurq(LambdaArgs),
    /// Transformed family for a matrix file
    Transform(TransformArgs),
    /// Jacobi-Trudi analogue for a matrix file
    Jt(MatrixLambdaArgs),
    /// Pfaffian analogue for a matrix file
    Pf(MatrixLambdaArgs),
    /// Verify the bilinear KP or BKP identity on a tau file
    Verify(VerifyArgs),
    /// Run a commutation-relation grid; exits 1 with a witness on failure
    Relations(RelationsArgs),
    /// Evaluate a first-principles oracle at rational points
    Oracle(OracleArgs),
    /// Emit a gallery matrix description
    Gallery(GalleryArgs),
    /// Evaluate a symmetric-function file at rational points
    Eval(EvalArgs),
}

#[derive(Args)]
struct LambdaArgs {
    /// Comma-separated integer parts, e.g. 3,1 or -1,3
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Optional rational specialization of t
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long)]
    matrix: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
}

#[derive(Args)]
struct MatrixLambdaArgs {
    #[arg(long)]
    matrix: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// kp or bkp
    hierarchy: String,
    #[arg(long = "tau-file")]
    tau_file: String,
}

#[derive(Args)]
struct RelationsArgs {
    /// gamma, psi or phi
    #[arg(long)]
    field: String,
    /// index window lo:hi
    #[arg(long, allow_hyphen_values = true, default_value = "-3:3")]
    window: String,
    #[arg(long = "max-degree", default_value_t = 4)]
    max_degree: i64,
}

#[derive(Args)]
struct OracleArgs {
    /// schur-tableaux | hl-eval | transformed-sym | schurq-pf |
    /// grothendieck-alt | bialternant
    name: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Comma-separated rational points
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Matrix file providing the polynomial sequence f_k
    #[arg(long)]
    matrix: Option<String>,
    /// Extra parameter assignments name=value,name=value
    #[arg(long, allow_hyphen_values = true)]
    assign: Option<String>,
}

#[derive(Args)]
struct GalleryArgs {
    /// toeplitz | cumulative | multiparameter | pascal | grothendieck-dual | identity
    kind: String,
    /// Rational parameters for multiparameter, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Toeplitz symbol entries k=value, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    entries: Option<String>,
    /// Strict partition for grothendieck-dual
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    file: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    assign: Option<String>,
}

enum Outcome {
    /// Document printed, exit 0.
    Ok(serde_json::Value),
    /// Mathematical falsification: witness printed, exit 1.
    Falsified(serde_json::Value),
}

fn usage_error(msg: impl Into<String>) -> serde_json::Value {
    json!({ "error": msg.into() })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // library precondition violations (e.g. too few matrix parameters for
    // the requested window) surface as panics; report them as input errors
    std::panic::set_hook(Box::new(|_| {}));
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli.command)));
    match outcome {
        Ok(Ok(Outcome::Ok(doc))) => {
            println!("{doc}");
            ExitCode::SUCCESS
        }
        Ok(Ok(Outcome::Falsified(doc))) => {
            println!("{doc}");
            ExitCode::from(1)
        }
        Ok(Err(msg)) => {
            println!("{}", usage_error(msg));
            ExitCode::from(2)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "internal precondition violated".to_string());
            println!("{}", usage_error(msg));
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<Outcome, String> {
    match cmd {
        Command::Hl(args) => {
            let lambda = parse_lambda(&args.lambda)?;
            let f = match parse_opt_rat(&args.t)? {
                None => hall_littlewood(&lambda),
                Some(t0) => iterate_field(&FieldKind::GammaPlusAt(t0), &lambda),
            };
            Ok(Outcome::Ok(sjson::symfun_to_value(&f)))
        }
        Command::Schur(args) => {
            let lambda = parse_lambda(&args.lambda)?;
            Ok(Outcome::Ok(sjson::symfun_to_value(&schur_jt(&lambda))))
        }
        Command::Schurq(args) => {
            let lambda = parse_lambda(&args.lambda)?;
            let p = Partition::new(lambda).map_err(|e| e.to_string())?;
            if !p.is_strict() {
                return Err(format!("schurq needs a strict partition, got {p}"));
            }
            let ident = symf_core::matrix::RowFiniteMatrix::identity();
            let q = pf_transformed(&ident, p.parts()).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(sjson::symfun_to_value(&q)))
        }
        Command::Transform(args) => {
            let a = load_matrix(&args.matrix)?;
            let lambda = parse_lambda(&args.lambda)?;
            let kind = match parse_opt_rat(&args.t)? {
                None => FieldKind::GammaPlus,
                Some(t0) => FieldKind::GammaPlusAt(t0),
            };
            let f = transformed_family(&a, &lambda, &kind);
            Ok(Outcome::Ok(sjson::symfun_to_value(&f)))
        }
        Command::Jt(args) => {
            let a = load_matrix(&args.matrix)?;
            let lambda = parse_lambda(&args.lambda)?;
            Ok(Outcome::Ok(sjson::symfun_to_value(&jt_transformed(&a, &lambda))))
        }
        Command::Pf(args) => {
            let a = load_matrix(&args.matrix)?;
            let lambda = parse_lambda(&args.lambda)?;
            let f = pf_transformed(&a, &lambda).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(sjson::symfun_to_value(&f)))
        }
        Command::Verify(args) => run_verify(&args),
        Command::Relations(args) => run_relations(&args),
        Command::Oracle(args) => run_oracle(&args),
        Command::Gallery(args) => run_gallery(&args),
        Command::Eval(args) => {
            let text = read_file(&args.file)?;
            let f = sjson::symfun_from_str(&text).map_err(|e| e.to_string())?;
            let xs = parse_rat_list(&args.x)?;
            let assign = parse_assign(args.assign.as_deref())?;
            let v = f.evaluate(&xs, &assign).map_err(|e| e.to_string())?;
            Ok(Outcome::Ok(json!({ "value": format_rat(&v) })))
        }
    }
}

fn run_verify(args: &VerifyArgs) -> Result<Outcome, String> {
    let text = read_file(&args.tau_file)?;
    let residue: TensorElt = match args.hierarchy.as_str() {
        "kp" => {
            let tau = sjson::charged_from_str(&text).map_err(|e| e.to_string())?;
            if tau.is_zero() {
                return Err("the zero element is not a tau-function candidate".into());
            }
            kp_residue(&tau)
        }
        "bkp" => {
            let tau = sjson::symfun_from_str(&text).map_err(|e| e.to_string())?;
            if tau.is_zero() {
                return Err("the zero element is not a tau-function candidate".into());
            }
            bkp_residue(&tau).map_err(|e| e.to_string())?
        }
        other => return Err(format!("unknown hierarchy `{other}` (expected kp or bkp)")),
    };
    if residue.is_zero() {
        Ok(Outcome::Ok(json!({ "tau": true })))
    } else {
        let pairs: Vec<serde_json::Value> = residue
            .terms()
            .map(|(((ml, mu), (mr, nu)), c)| {
                json!({
                    "left": { "charge": ml, "pmono": mu.parts() },
                    "right": { "charge": mr, "pmono": nu.parts() },
                    "coef": sjson::coef_to_value(c),
                })
            })
            .collect();
        let first = pairs.first().cloned().unwrap_or(serde_json::Value::Null);
        Ok(Outcome::Falsified(json!({
            "tau": false,
            "witness": first,
            "residue": pairs,
        })))
    }
}

fn run_relations(args: &RelationsArgs) -> Result<Outcome, String> {
    let (lo, hi) = parse_window(&args.window)?;
    let basis: Vec<Partition> = partitions_up_to(args.max_degree);
    match args.field.as_str() {
        "gamma" => {
            for a in lo..=hi {
                for b in lo..=hi {
                    for mu in &basis {
                        let f = SymFun::monomial(mu.clone());
                        if !check_gamma_gamma(a, b, &f) {
                            return Ok(falsified_relation("gamma-gamma", a, b, mu));
                        }
                        if !check_gamma_cross(a, b, &f) {
                            return Ok(falsified_relation("gamma-cross", a, b, mu));
                        }
                    }
                }
            }
        }
        "psi" => {
            for r in lo..=hi {
                for s in lo..=hi {
                    for m in -2..=2i64 {
                        for mu in &basis {
                            let st = ChargedState::new(m, SymFun::monomial(mu.clone()));
                            let mixed = &psi_minus(s, &psi_plus(r, &st)).body
                                + &psi_plus(r, &psi_minus(s, &st)).body;
                            let expect = if r + s == 1 {
                                st.body.clone()
                            } else {
                                SymFun::zero()
                            };
                            if mixed != expect {
                                return Ok(falsified_relation("psi-anticommutator", r, s, mu));
                            }
                        }
                    }
                }
            }
        }
        "phi" => {
            for m in lo..=hi {
                for n in lo..=hi {
                    for mu in &basis {
                        if !mu.has_only_odd_parts() {
                            continue;
                        }
                        let f = SymFun::monomial(mu.clone());
                        let lhs = &phi(m, &phi(n, &f).map_err(|e| e.to_string())?)
                            .map_err(|e| e.to_string())?
                            + &phi(n, &phi(m, &f).map_err(|e| e.to_string())?)
                                .map_err(|e| e.to_string())?;
                        let rhs = if m + n == 0 {
                            let sign = if m % 2 == 0 { 2 } else { -2 };
                            f.scale_rat(&symf_core::rat::rat(sign))
                        } else {
                            SymFun::zero()
                        };
                        if lhs != rhs {
                            return Ok(falsified_relation("phi-anticommutator", m, n, mu));
                        }
                    }
                }
            }
        }
        other => return Err(format!("unknown field `{other}` (expected gamma, psi or phi)")),
    }
    Ok(Outcome::Ok(json!({ "relations": args.field, "holds": true })))
}

fn falsified_relation(name: &str, a: i64, b: i64, mu: &Partition) -> Outcome {
    Outcome::Falsified(json!({
        "relations": name,
        "holds": false,
        "witness": { "a": a, "b": b, "pmono": mu.parts() },
    }))
}

fn run_oracle(args: &OracleArgs) -> Result<Outcome, String> {
    let lambda = parse_lambda(&args.lambda)?;
    let xs = parse_rat_list(&args.x)?;
    let mut assign = parse_assign(args.assign.as_deref())?;
    if let Some(t) = parse_opt_rat(&args.t)? {
        assign.insert("t".to_string(), t);
    }
    if let Some(beta) = parse_opt_rat(&args.beta)? {
        assign.insert("beta".to_string(), beta);
    }
    let pt = || EvalPoint::new(xs.clone(), assign.clone()).map_err(|e| e.to_string());
    let polys = || -> Result<PolySeq, String> {
        let path = args
            .matrix
            .as_deref()
            .ok_or_else(|| "this oracle needs --matrix".to_string())?;
        let a = load_matrix(path)?;
        let kmax = lambda.iter().copied().max().unwrap_or(0).max(0) as usize;
        PolySeq::from_matrix(&a, kmax).map_err(|e| e.to_string())
    };
    let value = match args.name.as_str() {
        "schur-tableaux" => {
            let p = Partition::new(lambda).map_err(|e| e.to_string())?;
            schur_tableaux_eval(&p, &xs)
        }
        "hl-eval" | "hl-sym" => hl_symmetrized_eval(&lambda, &pt()?).map_err(|e| e.to_string())?,
        "transformed-sym" => {
            transformed_symmetrized_eval(&polys()?, &lambda, &pt()?).map_err(|e| e.to_string())?
        }
        "schurq-pf" => {
            let p = Partition::new(lambda).map_err(|e| e.to_string())?;
            schurq_pfaffian_eval(&p, &pt()?).map_err(|e| e.to_string())?
        }
        "grothendieck-alt" => {
            grothendieck_alternant_eval(&lambda, &pt()?).map_err(|e| e.to_string())?
        }
        "bialternant" => bialternant_eval(&polys()?, &lambda, &pt()?).map_err(|e| e.to_string())?,
        other => return Err(format!("unknown oracle `{other}`")),
    };
    Ok(Outcome::Ok(json!({ "value": format_rat(&value) })))
}

fn run_gallery(args: &GalleryArgs) -> Result<Outcome, String> {
    let a = match args.kind.as_str() {
        "identity" => symf_core::matrix::RowFiniteMatrix::identity(),
        "cumulative" => cumulative_matrix(),
        "pascal" => pascal_matrix(),
        "multiparameter" => {
            let vals = args
                .a
                .as_deref()
                .ok_or_else(|| "multiparameter needs --a".to_string())?;
            multiparameter_matrix(parse_rat_list(vals)?)
        }
        "toeplitz" => {
            let entries = args
                .entries
                .as_deref()
                .ok_or_else(|| "toeplitz needs --entries k=value,...".to_string())?;
            let mut symbol = BTreeMap::new();
            for item in entries.split(',') {
                let (k, v) = item
                    .split_once('=')
                    .ok_or_else(|| format!("bad symbol entry `{item}`"))?;
                let k: i64 = k.trim().parse().map_err(|_| format!("bad index `{k}`"))?;
                symbol.insert(k, CoefPoly::from_rat(parse_rat(v).map_err(|e| e.to_string())?));
            }
            toeplitz_matrix(symbol)
        }
        "grothendieck-dual" => {
            let lam = args
                .lambda
                .as_deref()
                .ok_or_else(|| "grothendieck-dual needs --lambda".to_string())?;
            let lambda = parse_lambda(lam)?;
            let p = Partition::new(lambda).map_err(|e| e.to_string())?;
            if !p.is_strict() {
                return Err("grothendieck-dual needs a strict partition".to_string());
            }
            grothendieck_dual_matrix(p.parts())
        }
        other => return Err(format!("unknown gallery kind `{other}`")),
    };
    Ok(Outcome::Ok(sjson::matrix_to_value(&a)))
}

// ---------------------------------------------------------------------------
// parsing helpers
// ---------------------------------------------------------------------------

fn parse_lambda(s: &str) -> Result<Vec<i64>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<i64>()
                .map_err(|_| format!("bad integer `{p}` in lambda"))
        })
        .collect()
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, String> {
    s.split(',')
        .map(|p| parse_rat(p).map_err(|e| e.to_string()))
        .collect()
}

fn parse_opt_rat(s: &Option<String>) -> Result<Option<Rat>, String> {
    match s {
        None => Ok(None),
        Some(v) => Ok(Some(parse_rat(v).map_err(|e| e.to_string())?)),
    }
}

fn parse_assign(s: Option<&str>) -> Result<BTreeMap<String, Rat>, String> {
    let mut out = BTreeMap::new();
    let Some(s) = s else { return Ok(out) };
    if s.trim().is_empty() {
        return Ok(out);
    }
    for item in s.split(',') {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("bad assignment `{item}` (expected name=value)"))?;
        out.insert(
            name.trim().to_string(),
            parse_rat(value).map_err(|e| e.to_string())?,
        );
    }
    Ok(out)
}

fn parse_window(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("bad window `{s}` (expected lo:hi)"))?;
    let lo: i64 = lo.parse().map_err(|_| format!("bad window bound `{lo}`"))?;
    let hi: i64 = hi.parse().map_err(|_| format!("bad window bound `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty window `{s}`"));
    }
    Ok((lo, hi))
}

fn read_file(path: &str) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))
}

fn load_matrix(path: &str) -> Result<symf_core::matrix::RowFiniteMatrix, String> {
    let text = read_file(path)?;
    sjson::matrix_from_str(&text).map_err(|e| e.to_string())
}
