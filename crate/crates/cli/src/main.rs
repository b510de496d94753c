use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schurq_core::fock::{self, FockVector};
use schurq_core::partitions::{self, bar_core, Color, Partition, StrictPartition};
use schurq_core::symfunc;
use schurq_core::verify::{self, CheckResult, Execution, Family, SuiteConfig};

#[derive(Parser)]
#[command(name = "schurq", version, about = "Exact 3-bar combinatorics, Schur Q-functions and fermionic checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity checks.
    Verify(VerifyArgs),
    /// List the strict partitions obtained from a 3-bar core by adding nodes of one color.
    Enumerate {
        /// Core label m of c_m (negative for the 0-colored staircases).
        #[arg(long, allow_hyphen_values = true)]
        core: i64,
        #[arg(long)]
        color: u8,
        #[arg(long)]
        nodes: u32,
        #[arg(long)]
        json: bool,
    },
    /// 3-bar quotient of a strict partition, e.g. `11,9,8,4,3,2,1`.
    Quotient {
        partition: String,
        /// Abacus depth; defaults to the smallest admissible value.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Schur function S_λ(t), optionally substituted or specialized.
    Schur {
        partition: String,
        #[arg(long, value_enum)]
        subst: Option<Subst>,
        /// Specialize t_j to power sums in z_1..z_N.
        #[arg(long)]
        spec_z: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Schur Q-function Q_λ(s) of a strict partition.
    Qfun {
        partition: String,
        #[arg(long)]
        json: bool,
    },
    /// Fock space operations.
    #[command(subcommand)]
    Fock(FockCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Subst {
    #[value(name = "2t2")]
    TwoT2,
    U,
    Odd,
}

#[derive(Args)]
struct VerifyArgs {
    /// main1, main2, trapezoid, prop44, prop51, phi-consistency, symfunc-props or all.
    check: String,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Color for prop44 and phi-consistency.
    #[arg(long)]
    i: Option<u8>,
    #[arg(long, default_value_t = 4)]
    max_m: u32,
    #[arg(long, default_value_t = 4)]
    max_n: u32,
    /// Comma-separated families for `all`; every family by default.
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,
    /// Run the grid on one thread.
    #[arg(long)]
    sequential: bool,
    /// Write the report as a JSON array to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum FockCommand {
    /// Apply f_i^n / n! to a basis state.
    ApplyF {
        #[arg(long)]
        i: u8,
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// `c:M` for the core c_M, a part list such as `7,2`, or `vac`.
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        #[arg(long)]
        json: bool,
    },
    /// Image of a basis state under the boson-fermion correspondence.
    Phi {
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        #[arg(long)]
        json: bool,
    },
    /// Normal form of a basis state relative to |0,-m⟩.
    NormalForm {
        #[arg(long, allow_hyphen_values = true)]
        state: String,
    },
}

enum Outcome {
    Done,
    ChecksFailed,
}

fn parse_strict(s: &str) -> Result<StrictPartition> {
    s.parse().with_context(|| format!("invalid strict partition `{s}`"))
}

fn parse_state(s: &str) -> Result<StrictPartition> {
    if let Some(m) = s.strip_prefix("c:") {
        let m: i64 = m.parse().with_context(|| format!("invalid core label in `{s}`"))?;
        return Ok(bar_core(m));
    }
    if s == "vac" {
        return Ok(StrictPartition::empty());
    }
    parse_strict(s)
}

fn parse_color(i: u8) -> Result<Color> {
    Ok(Color::try_from(i)?)
}

fn emit_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn single_check(args: &VerifyArgs) -> Result<CheckResult> {
    let need = |x: Option<u32>, name: &str| x.with_context(|| format!("`verify {}` needs --{name}", args.check));
    let color = || -> Result<Color> { parse_color(args.i.context("this check needs --i")?) };
    Ok(match args.check.as_str() {
        "main1" => verify::check_main1(need(args.m, "m")?, need(args.n, "n")?)?,
        "main2" => verify::check_main2(need(args.m, "m")?, need(args.n, "n")?)?,
        "trapezoid" => verify::check_trapezoid(need(args.m, "m")?, need(args.n, "n")?)?,
        "prop44" => verify::check_prop44(color()?, need(args.m, "m")?, need(args.n, "n")?),
        "prop51" => verify::check_prop51(need(args.m, "m")?)?,
        "phi-consistency" => verify::check_phi_consistency(color()?, need(args.m, "m")?, need(args.n, "n")?),
        other => bail!("unknown check `{other}`"),
    })
}

fn run_verify(args: VerifyArgs) -> Result<Outcome> {
    let results = match args.check.as_str() {
        "all" | "symfunc-props" => {
            let families = if args.check == "symfunc-props" {
                vec![Family::SymfuncProps]
            } else if args.families.is_empty() {
                Family::ALL.to_vec()
            } else {
                args.families.iter().map(|f| f.parse()).collect::<schurq_core::Result<Vec<_>>>()?
            };
            let cfg = SuiteConfig { max_m: args.max_m, max_n: args.max_n, families };
            let mode = if args.sequential { Execution::Sequential } else { Execution::Parallel };
            verify::run_suite_with(&cfg, mode)
        }
        _ => {
            let r = single_check(&args)?;
            println!("lhs: {}", r.lhs_rendering.trim_end());
            println!("rhs: {}", r.rhs_rendering.trim_end());
            vec![r]
        }
    };
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    println!("{} checks, {} passed, {} failed", results.len(), results.len() - failed, failed);
    if let Some(path) = &args.json {
        std::fs::write(path, serde_json::to_string_pretty(&results)?)
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(if failed == 0 { Outcome::Done } else { Outcome::ChecksFailed })
}

fn print_fock(v: &FockVector, as_json: bool) -> Result<()> {
    if as_json {
        let terms: Vec<Value> =
            v.terms().map(|(w, c)| json!({ "word": w, "state": w.to_string(), "coeff": c.to_string() })).collect();
        return emit_json(&Value::Array(terms));
    }
    print!("{v}");
    Ok(())
}

fn run_fock(cmd: FockCommand) -> Result<Outcome> {
    match cmd {
        FockCommand::ApplyF { i, n, state, json } => {
            let lam = parse_state(&state)?;
            let v = fock::f_power_normalized(parse_color(i)?, n, &FockVector::basis(&lam));
            print_fock(&v, json)?;
        }
        FockCommand::Phi { state, json } => {
            let image = fock::phi(&FockVector::basis(&parse_state(&state)?));
            if json {
                let terms: Vec<Value> = image
                    .terms()
                    .map(|(&(sigma, charge), p)| json!({ "sigma": sigma, "charge": charge, "polynomial": p }))
                    .collect();
                emit_json(&Value::Array(terms))?;
            } else {
                print!("{image}");
            }
        }
        FockCommand::NormalForm { state } => {
            for w in fock::to_normal_words(&parse_state(&state)?) {
                println!("{w}");
            }
        }
    }
    Ok(Outcome::Done)
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Verify(args) => return run_verify(args),
        Command::Enumerate { core, color, nodes, json } => {
            let set = partitions::enumerate_added(&bar_core(core), parse_color(color)?, nodes);
            if json {
                emit_json(&serde_json::to_value(&set)?)?;
            } else {
                for p in set {
                    println!("{p}");
                }
            }
        }
        Command::Quotient { partition, k, json } => {
            let lam = parse_strict(&partition)?;
            let q = match k {
                Some(k) => partitions::bar_quotient_with_k(&lam, k)?,
                None => partitions::bar_quotient(&lam),
            };
            if json {
                emit_json(&json!({ "lambda0": q.q0, "lambda1": q.q1 }))?;
            } else {
                println!("lambda[0] = {}", q.q0);
                println!("lambda[1] = {}", q.q1);
            }
        }
        Command::Schur { partition, subst, spec_z, json } => {
            let lam: Partition = partition.parse().with_context(|| format!("invalid partition `{partition}`"))?;
            let mut p = symfunc::schur(&lam);
            p = match subst {
                Some(Subst::TwoT2) => symfunc::subst_2t2(&p)?,
                Some(Subst::U) => symfunc::subst_u(&p),
                Some(Subst::Odd) => symfunc::subst_odd(&p),
                None => p,
            };
            if let Some(n) = spec_z {
                if subst.is_some() {
                    bail!("--spec-z cannot be combined with --subst");
                }
                p = symfunc::power_sum_specialize(&p, n)?;
            }
            if json {
                emit_json(&json!({ "partition": lam, "polynomial": p }))?;
            } else {
                println!("{p}");
            }
        }
        Command::Qfun { partition, json } => {
            let lam = parse_strict(&partition)?;
            let p = symfunc::schur_q(&lam);
            if json {
                emit_json(&json!({ "partition": lam, "polynomial": p }))?;
            } else {
                println!("{p}");
            }
        }
        Command::Fock(cmd) => return run_fock(cmd),
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
