use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fockforge::category::{injective_class, socle_layer};
use fockforge::correspondence::{vertex_X, vertex_Xstar};
use fockforge::partitions::lr_coefficient;
use fockforge::symring::{from_p_basis, to_p_basis, PowerSum};
use fockforge::verifier::jacobi::{bosonic_table, fermionic_table, fock_table};
use fockforge::verifier::{configure_threads, jacobi_check, lookup, IdentityCase, run_all, run_case, Bounds, Report, REGISTRY};
use fockforge::{Error, Partition, Rational, SymFunc};

#[derive(Parser)]
#[command(name = "fockforge", version, about = "Exact checks of boson-fermion identities on bounded windows")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run one registered identity.
    Verify {
        #[arg(long)]
        case: String,
        /// Case parameter as key=value; repeatable.
        #[arg(long = "param", value_parser = parse_param, allow_hyphen_values = true)]
        params: Vec<(String, i64)>,
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        bound: Option<i64>,
    },
    /// Run the whole registry.
    RunAll {
        #[arg(long)]
        window: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        bound: Option<i64>,
    },
    /// List registered identities with their defaults.
    List,
    /// Littlewood-Richardson coefficient N^lam_{mu,nu}.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// A socle layer of V_lam x (V_*)_mu, or the whole class without --layer.
    Socle {
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long)]
        layer: Option<usize>,
    },
    /// Power-sum expansion of s_lam, or Schur expansion of p_rho with --power.
    SchurExpand {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "power", required_unless_present = "power")]
        lam: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        power: Option<String>,
    },
    /// Apply X_a (or X*_a with --star) to s_input.
    VertexApply {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        star: bool,
    },
    /// Jacobi triple product tables.
    Jacobi {
        #[arg(long, default_value_t = 10)]
        q_halves: u64,
        #[arg(long, default_value_t = 5)]
        t_max: i64,
    },
}

fn parse_param(s: &str) -> Result<(String, i64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected key=value, got {s:?}"))?;
    let v = v.trim().parse().map_err(|_| format!("parameter {k:?} needs an integer value, got {v:?}"))?;
    Ok((k.trim().to_string(), v))
}

fn partition(s: &str) -> Result<Partition, Error> {
    s.parse()
}

enum Outcome {
    Pass,
    Fail,
}

fn print_value(format: Format, text: String, json: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(&json).expect("serializable")),
    }
}

fn print_reports(format: Format, reports: &[Report]) -> Outcome {
    let all_pass = reports.iter().all(Report::passed);
    match format {
        Format::Text => {
            for r in reports {
                println!("{}", r.to_text());
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            println!("{} cases, {} failed", reports.len(), failed);
        }
        Format::Json => {
            let body: Vec<Value> = reports.iter().map(Report::to_json).collect();
            let out = if body.len() == 1 { body[0].clone() } else { Value::Array(body) };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    if all_pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn power_sum_json(p: &PowerSum) -> Value {
    let map: serde_json::Map<String, Value> =
        p.terms().map(|(rho, c)| (rho.to_string(), Value::String(c.to_string()))).collect();
    Value::Object(map)
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    match cli.command {
        Command::Verify { case, params, window, bound } => {
            let mut c = IdentityCase::new(&case, lookup(&case)?.window);
            if let Some(w) = window {
                c.window = w;
            }
            if let Some(b) = bound {
                c.params.insert("bound".into(), b);
            }
            c.params.extend(params);
            let report = run_case(&c)?;
            Ok(print_reports(format, std::slice::from_ref(&report)))
        }
        Command::RunAll { window, bound } => {
            let reports = run_all(&Bounds { window, bound })?;
            Ok(print_reports(format, &reports))
        }
        Command::List => {
            let rows: Vec<Value> = REGISTRY
                .iter()
                .map(|e| {
                    let params: serde_json::Map<String, Value> =
                        e.params.iter().map(|p| (p.name.to_string(), json!(p.default))).collect();
                    json!({"id": e.id, "window": e.window, "params": params, "summary": e.summary})
                })
                .collect();
            let text = REGISTRY
                .iter()
                .map(|e| format!("{:<18} window={:<3} {}", e.id, e.window, e.summary))
                .collect::<Vec<_>>()
                .join("\n");
            print_value(format, text, Value::Array(rows));
            Ok(Outcome::Pass)
        }
        Command::Lr { lam, mu, nu } => {
            let c = lr_coefficient(&partition(&lam)?, &partition(&mu)?, &partition(&nu)?);
            print_value(format, c.to_string(), json!(c));
            Ok(Outcome::Pass)
        }
        Command::Socle { lam, mu, layer } => {
            let (lam, mu) = (partition(&lam)?, partition(&mu)?);
            let class = match layer {
                Some(k) => socle_layer(&lam, &mu, k),
                None => injective_class(&lam, &mu),
            };
            print_value(format, class.to_string(), class.to_json());
            Ok(Outcome::Pass)
        }
        Command::SchurExpand { lam, power } => {
            if let Some(rho) = power {
                let f = from_p_basis(&PowerSum::monomial(partition(&rho)?, Rational::from_integer(1.into())));
                print_value(format, f.to_string(), f.to_json());
            } else {
                let lam = partition(lam.as_deref().unwrap_or_default())?;
                let p = to_p_basis(&SymFunc::schur(lam));
                print_value(format, p.to_string(), power_sum_json(&p));
            }
            Ok(Outcome::Pass)
        }
        Command::VertexApply { a, input, star } => {
            let f = SymFunc::schur(partition(&input)?);
            let op = if star { vertex_Xstar(a) } else { vertex_X(a) };
            let out = op.apply(&f);
            print_value(format, out.to_string(), out.to_json());
            Ok(Outcome::Pass)
        }
        Command::Jacobi { q_halves, t_max } => {
            let report = jacobi_check(q_halves, t_max);
            if format == Format::Text {
                let (b, f, c) =
                    (bosonic_table(q_halves, t_max), fermionic_table(q_halves, t_max), fock_table(q_halves, t_max));
                println!("{:>4} {:>5} {:>8} {:>10} {:>6}", "n", "2k", "bosonic", "fermionic", "fock");
                for (key, x) in &b {
                    if *x != 0 || f[key] != 0 || c[key] != 0 {
                        println!("{:>4} {:>5} {:>8} {:>10} {:>6}", key.0, key.1, x, f[key], c[key]);
                    }
                }
            }
            Ok(print_reports(format, std::slice::from_ref(&report)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
