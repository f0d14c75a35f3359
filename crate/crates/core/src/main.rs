//! `affweyl` command-line front end.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use affweyl::affine::{bruhat_leq_oracle, enumerate_ball, length, ExtAffElt};
use affweyl::criteria::{
    adm_eq_perm_type_check, bruhat_leq_lp, bruhat_leq_datum, default_datum, deodhar_leq, in_admissible,
    in_admissible_oracle, in_permissible, DeodharDatum,
};
use affweyl::demazure::demazure_closed;
use affweyl::format::{
    element_json, format_element, parse_aff_subset, parse_coweight, parse_element, parse_weyl, qvec_json, weyl_json,
};
use affweyl::newton::{generic_newton_point, generic_newton_point_oracle, newton_point, x_infinity, SigmaAut};
use affweyl::rootsys::RootSystem;
use affweyl::semiaffine::AffSubset;
use affweyl::sweep::{run_sweep, Exec, Suite, SweepConfig};
use affweyl::Error;

#[derive(Parser)]
#[command(name = "affweyl", version, about = "Bruhat order, Demazure products, quantum Bruhat graphs and Newton points")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum BruhatMethod {
    Oracle,
    LengthPositive,
    Datum,
    Deodhar,
}

#[derive(Clone, Copy, ValueEnum)]
enum NewtonMethod {
    Formula,
    Xinf,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sigma {
    Id,
    Flip,
}

#[derive(Clone, Copy, ValueEnum)]
enum AdmMethod {
    Criterion,
    Oracle,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide `x <= y` in the Bruhat order.
    Bruhat {
        #[arg(long)]
        rs: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value_t = BruhatMethod::Datum)]
        method: BruhatMethod,
        /// Left subset for the double-coset criterion, e.g. `[1,theta:1]`.
        #[arg(long, default_value = "[]")]
        left: String,
        #[arg(long, default_value = "[]")]
        right: String,
    },
    /// Demazure product with certified length and minimal pairs.
    Demazure {
        #[arg(long)]
        rs: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Quantum Bruhat graph tables, DOT export or a single weight query.
    Qbg {
        #[arg(long)]
        rs: String,
        /// Parabolic subset of simple indices, e.g. `[1]`.
        #[arg(long, default_value = "[]")]
        parabolic: String,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
    },
    /// Generic Newton point.
    Newton {
        #[arg(long)]
        rs: String,
        #[arg(long)]
        x: String,
        #[arg(long, value_enum, default_value_t = Sigma::Id)]
        sigma: Sigma,
        #[arg(long, value_enum, default_value_t = NewtonMethod::Formula)]
        method: NewtonMethod,
    },
    /// Admissible and permissible membership.
    Adm {
        #[arg(long)]
        rs: String,
        /// Dominant coweight as pairings.
        #[arg(long)]
        lambda: Option<String>,
        /// Single element; without it the whole ball is tabulated.
        #[arg(long)]
        x: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_length: u32,
        #[arg(long, default_value_t = 2)]
        max_mu: i32,
        #[arg(long, value_enum, default_value_t = AdmMethod::Criterion)]
        method: AdmMethod,
        /// Report whether admissible and permissible sets agree for the type.
        #[arg(long)]
        type_check: bool,
    },
    /// Run a verification suite.
    Sweep {
        /// TOML file with `suite`, `root_system`, `max_length`, `max_mu`, `max_cases`.
        #[arg(long)]
        config: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        rs: Option<String>,
        #[arg(long)]
        max_length: Option<u32>,
        #[arg(long)]
        max_mu: Option<i32>,
        #[arg(long)]
        max_cases: Option<u64>,
        #[arg(long)]
        sequential: bool,
    },
}

enum Outcome {
    Json(Value, bool),
    Text(String),
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidDatum(msg.into())
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    if cli.format == Format::Dot && !matches!(cli.cmd, Cmd::Qbg { .. }) {
        return Err(usage("dot output is only available for qbg"));
    }
    match &cli.cmd {
        Cmd::Bruhat { rs, x, y, method, left, right } => {
            let rs = RootSystem::build(rs)?;
            let (x, y) = (parse_element(x, &rs)?, parse_element(y, &rs)?);
            let verdict = match method {
                BruhatMethod::Oracle => bruhat_leq_oracle(&rs, &x, &y),
                BruhatMethod::LengthPositive => bruhat_leq_lp(&rs, &x, &y),
                BruhatMethod::Datum => bruhat_leq_datum(&rs, &x, &y, &default_datum(&rs, &x))?,
                BruhatMethod::Deodhar => {
                    let (l, r) = (parse_aff_subset(left, &rs)?, parse_aff_subset(right, &rs)?);
                    let d = DeodharDatum::build(&rs, &x, vec![l], vec![r])?;
                    deodhar_leq(&rs, &x, &y, &d)?
                }
            };
            let out = json!({ "x": element_json(&rs, &x), "y": element_json(&rs, &y), "leq": verdict });
            Ok(Outcome::Json(out, verdict))
        }
        Cmd::Demazure { rs, x, y } => {
            let rs = RootSystem::build(rs)?;
            let (x, y) = (parse_element(x, &rs)?, parse_element(y, &rs)?);
            let p = demazure_closed(&rs, &x, &y);
            let pairs: Vec<Value> = p.pairs.pairs.iter().map(|&(a, b)| json!([weyl_json(&rs, a), weyl_json(&rs, b)])).collect();
            let out = json!({
                "product": element_json(&rs, &p.product),
                "canonical": format_element(&rs, &p.product),
                "length": p.length,
                "min_distance": p.pairs.min_distance,
                "minimal_pairs": pairs,
            });
            Ok(Outcome::Json(out, true))
        }
        Cmd::Qbg { rs, parabolic, from, to } => {
            let rs = RootSystem::build(rs)?;
            let j = parse_weyl_set(parabolic, &rs)?;
            let o = rs.qbg(j);
            match (from, to) {
                (Some(a), Some(b)) => {
                    let (a, b) = (parse_weyl(a, &rs)?, parse_weyl(b, &rs)?);
                    let (a, b) = (rs.min_rep(a, j), rs.min_rep(b, j));
                    let path: Vec<Value> = o.shortest_path(a, b)?.into_iter().map(|w| weyl_json(&rs, w)).collect();
                    let out = json!({
                        "from": weyl_json(&rs, a),
                        "to": weyl_json(&rs, b),
                        "distance": o.distance(a, b)?,
                        "weight": o.weight(a, b)?.to_vec(rs.rank()),
                        "path": path,
                    });
                    Ok(Outcome::Json(out, true))
                }
                (None, None) if cli.format == Format::Dot => Ok(Outcome::Text(o.to_dot(&rs))),
                (None, None) => Ok(Outcome::Json(o.tables_json(&rs), true)),
                _ => Err(usage("--from and --to go together")),
            }
        }
        Cmd::Newton { rs, x, sigma, method } => {
            let rs = RootSystem::build(rs)?;
            let x = parse_element(x, &rs)?;
            let sig = match sigma {
                Sigma::Id => SigmaAut::identity(&rs),
                Sigma::Flip => SigmaAut::flip(&rs)?,
            };
            let mut out = json!({ "x": element_json(&rs, &x) });
            let nu = match method {
                NewtonMethod::Formula => generic_newton_point(&rs, &x, &sig)?,
                NewtonMethod::Xinf => {
                    let s = x_infinity(&rs, &x, &sig)?;
                    out["x_inf"] = element_json(&rs, &s.x_inf);
                    out["x_inf_length"] = json!(length(&rs, &s.x_inf));
                    newton_point(&rs, &s.x_inf, &sig)?
                }
                NewtonMethod::Oracle => generic_newton_point_oracle(&rs, &x, &sig)?,
            };
            out["nu"] = qvec_json(&rs, &nu.nu);
            Ok(Outcome::Json(out, true))
        }
        Cmd::Adm { rs, lambda, x, max_length, max_mu, method, type_check } => {
            let rs = RootSystem::build(rs)?;
            if *type_check {
                let (eq, w) = adm_eq_perm_type_check(&rs);
                let witness = w.map(|(a, b)| json!([weyl_json(&rs, a), weyl_json(&rs, b)]));
                return Ok(Outcome::Json(json!({ "root_system": rs.name(), "adm_eq_perm": eq, "witness": witness }), eq));
            }
            let lam = parse_coweight(lambda.as_deref().ok_or_else(|| usage("--lambda is required"))?, &rs)?;
            let member = |y: &ExtAffElt| -> Result<Value, Error> {
                let adm = match method {
                    AdmMethod::Criterion => in_admissible(&rs, y, &lam)?,
                    AdmMethod::Oracle => in_admissible_oracle(&rs, y, &lam),
                };
                let perm = in_permissible(&rs, y, &lam)?;
                Ok(json!({ "element": format_element(&rs, y), "admissible": adm, "permissible": perm }))
            };
            if let Some(x) = x {
                let x = parse_element(x, &rs)?;
                let row = member(&x)?;
                let ok = row["admissible"] == json!(true);
                return Ok(Outcome::Json(row, ok));
            }
            if !rs.is_dominant(&lam) {
                return Err(Error::NotDominant);
            }
            let ball = enumerate_ball(&rs, *max_length, *max_mu, 1 << 24)?;
            let rows = ball.iter().map(member).collect::<Result<Vec<_>, _>>()?;
            let count = rows.iter().filter(|r| r["admissible"] == json!(true)).count();
            let out = json!({
                "root_system": rs.name(),
                "lambda": lam.to_vec(rs.rank()),
                "max_length": max_length,
                "max_mu": max_mu,
                "admissible_count": count,
                "rows": rows,
            });
            Ok(Outcome::Json(out, true))
        }
        Cmd::Sweep { config, suite, rs, max_length, max_mu, max_cases, sequential } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
                    SweepConfig::from_toml(&text)?
                }
                None => {
                    let suite: Suite = suite.as_deref().ok_or_else(|| usage("--suite or --config is required"))?.parse()?;
                    let rs = rs.as_deref().ok_or_else(|| usage("--rs or --config is required"))?;
                    SweepConfig::new(suite, rs, 4, 2)
                }
            };
            if let Some(s) = suite {
                cfg.suite = s.parse()?;
            }
            if let Some(r) = rs {
                cfg.root_system = r.clone();
            }
            if let Some(l) = max_length {
                cfg.max_length = *l;
            }
            if let Some(m) = max_mu {
                cfg.max_mu = *m;
            }
            if max_cases.is_some() {
                cfg.max_cases = *max_cases;
            }
            let exec = if *sequential { Exec::Sequential } else { Exec::best() };
            let report = run_sweep(&cfg, exec)?;
            let passed = report.passed;
            Ok(Outcome::Json(serde_json::to_value(report).expect("report serializes"), passed))
        }
    }
}

fn parse_weyl_set(s: &str, rs: &RootSystem) -> Result<u32, Error> {
    let j = parse_aff_subset(s, rs)?;
    if j.theta != AffSubset::EMPTY.theta {
        return Err(usage("parabolic subsets are finite"));
    }
    Ok(j.finite)
}

fn table(v: &Value) -> String {
    match v {
        Value::Object(m) => {
            let w = m.keys().map(|k| k.len()).max().unwrap_or(0);
            let mut s = String::new();
            for (k, val) in m {
                match val {
                    Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                        s.push_str(&format!("{k}:\n"));
                        for r in rows {
                            let cells: Vec<String> = r.as_object().unwrap().iter().map(|(a, b)| format!("{a}={b}")).collect();
                            s.push_str(&format!("  {}\n", cells.join("  ")));
                        }
                    }
                    _ => s.push_str(&format!("{k:<w$}  {val}\n")),
                }
            }
            s
        }
        other => format!("{other}\n"),
    }
}

/// Writes to stdout, treating a closed pipe as success.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Json(v, ok)) => {
            match cli.format {
                Format::Table => emit(&table(&v)),
                _ => emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Outcome::Text(t)) => {
            emit(&t);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
