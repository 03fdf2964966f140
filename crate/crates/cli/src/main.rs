use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use topolab_core::bitop::{bitop_space_report, BitopReport, BitopSpace};
use topolab_core::registry::{
    analyze, mine, revalidate, verify, CheckStatus, Domain, MineOutcome, MiningGoal, VerifyOptions,
    WitnessSpace, NAMED_GOALS,
};
use topolab_core::setcore::{enumerate_topologies, NamedSpace};
use topolab_core::symbolic::{sym_space_report, SymbolicReport, SymbolicSpace};
use topolab_core::{FiniteSpace, TopoError};

#[derive(Parser)]
#[command(name = "topolab", version, about = "Generalized open sets on finite and symbolic spaces")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a JSON space file describes a topology.
    Validate { file: PathBuf },
    /// Space report, sg-T½ table and optional subset flags.
    Analyze {
        file: PathBuf,
        /// Comma-separated point names.
        #[arg(long)]
        set: Option<String>,
    },
    /// List or count the topologies on K points.
    Enumerate {
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        count_only: bool,
        /// One representative per homeomorphism class.
        #[arg(long)]
        modulo_homeo: bool,
    },
    /// Run the theorem checks over every topology on at most K points.
    Verify {
        #[arg(long = "n")]
        n: usize,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        ids: Option<Vec<String>>,
        #[arg(long)]
        workers: Option<usize>,
        /// Skip fixture and symbolic checks.
        #[arg(long)]
        finite_only: bool,
    },
    /// Search for the first witness of a goal.
    Mine {
        /// Named goal; see --list.
        #[arg(long, required_unless_present_any = ["expr", "list"])]
        goal: Option<String>,
        /// Custom conjunction, e.g. "sg_closed(A) & !semi_closed(A)".
        #[arg(long, conflicts_with = "goal")]
        expr: Option<String>,
        /// Interpret --expr over pairs of topologies.
        #[arg(long, requires = "expr")]
        bitop: bool,
        #[arg(long = "n", default_value_t = 4)]
        n: usize,
        #[arg(long)]
        list: bool,
    },
    /// Report on one of the infinite families.
    Symbolic {
        /// cofinite, pp, opc, indiscrete, lray or rray.
        family: String,
        #[arg(long)]
        report: bool,
    },
    /// Baire flags of the bitopological space (X, τ₁, τ₂).
    Bitop {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        report: bool,
    },
}

/// Exit code 1: a check failed or no witness exists.
struct Negative;

enum Failure {
    Negative,
    Input(String),
}

impl From<TopoError> for Failure {
    fn from(e: TopoError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Negative> for Failure {
    fn from(_: Negative) -> Self {
        Failure::Negative
    }
}

type Outcome = Result<(), Failure>;

fn read_space(path: &Path) -> Result<NamedSpace, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    NamedSpace::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("reports serialize"));
}

fn opens_line(s: &FiniteSpace) -> String {
    s.opens().iter().map(|u| u.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_validate(file: &Path, as_json: bool) -> Outcome {
    let named = read_space(file)?;
    if as_json {
        print_json(&json!({"valid": true, "points": named.names.len(), "opens": named.space.opens().len()}));
    } else {
        println!("valid: {} points, {} open sets", named.names.len(), named.space.opens().len());
    }
    Ok(())
}

fn cmd_analyze(file: &Path, set: Option<&str>, as_json: bool) -> Outcome {
    let named = read_space(file)?;
    let a = analyze(&named, set)?;
    if as_json {
        print_json(&json!(a));
    } else {
        print!("{a}");
    }
    Ok(())
}

fn cmd_enumerate(n: usize, count_only: bool, modulo_homeo: bool, as_json: bool) -> Outcome {
    let spaces = enumerate_topologies(n, modulo_homeo)?;
    if as_json {
        if count_only {
            print_json(&json!({"n": n, "modulo_homeo": modulo_homeo, "count": spaces.len()}));
        } else {
            let opens: Vec<_> = spaces.iter().map(|s| s.opens().to_vec()).collect();
            print_json(&json!({"n": n, "modulo_homeo": modulo_homeo, "count": spaces.len(), "spaces": opens}));
        }
    } else if count_only {
        println!("{}", spaces.len());
    } else {
        for s in &spaces {
            println!("{}", opens_line(s));
        }
    }
    Ok(())
}

fn cmd_verify(options: VerifyOptions, as_json: bool) -> Outcome {
    let report = verify(&options)?;
    if as_json {
        print_json(&json!(report));
    } else {
        for c in &report.checks {
            match &c.status {
                CheckStatus::Pass { note: None } => println!("{:<4} pass", c.id),
                CheckStatus::Pass { note: Some(n) } => println!("{:<4} pass  {n}", c.id),
                CheckStatus::Fail { witness } => println!("{:<4} FAIL  {witness}", c.id),
                CheckStatus::Skipped => println!("{:<4} skipped", c.id),
            }
        }
        let failed = report.checks.iter().filter(|c| matches!(c.status, CheckStatus::Fail { .. })).count();
        println!(
            "{} checks, {} failed, {} spaces with at most {} points, {} ms",
            report.checks.len(),
            failed,
            report.spaces_examined,
            report.n_max,
            report.wall_time_ms.unwrap_or_default()
        );
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Negative.into())
    }
}

fn cmd_mine(goal: MiningGoal, as_json: bool) -> Outcome {
    let outcome = mine(&goal)?;
    let revalidated = match &outcome {
        MineOutcome::Found(w) => Some(revalidate(&goal, w)?),
        MineOutcome::NoWitnessUpTo { .. } => None,
    };
    if as_json {
        print_json(&json!({"goal": goal, "result": outcome, "revalidated": revalidated}));
    } else {
        println!("goal {}: {}", goal.id, goal.expr);
        match &outcome {
            MineOutcome::Found(w) => {
                let name = w.fixture.as_deref().map(|f| format!(" ({f})")).unwrap_or_default();
                match &w.space {
                    WitnessSpace::Single(s) => println!("witness on {} points{name}: {}", w.n, opens_line(s)),
                    WitnessSpace::Pair { tau1, tau2 } => {
                        println!("witness on {} points{name}", w.n);
                        println!("  τ₁: {}", opens_line(tau1));
                        println!("  τ₂: {}", opens_line(tau2));
                    }
                }
                for line in &w.certificate {
                    println!("  {line}");
                }
                println!("revalidated: {}", revalidated.unwrap_or(false));
            }
            MineOutcome::NoWitnessUpTo { n_max } => {
                println!("no witness on {}..={n_max} points", goal.n_min)
            }
        }
    }
    match (outcome, revalidated) {
        (MineOutcome::Found(_), Some(true)) => Ok(()),
        _ => Err(Negative.into()),
    }
}

fn cmd_list_goals(as_json: bool) -> Outcome {
    if as_json {
        let goals: Vec<_> = NAMED_GOALS
            .iter()
            .map(|g| json!({"id": g.id, "expr": g.expr, "domain": g.domain, "n_min": g.n_min, "description": g.description}))
            .collect();
        print_json(&json!(goals));
    } else {
        for g in NAMED_GOALS {
            println!("{:<36} {}", g.id, g.expr);
        }
    }
    Ok(())
}

fn print_symbolic(r: &SymbolicReport) {
    println!("family: {}", r.family);
    for name in SymbolicReport::BOOL_NAMES {
        println!("{name:<24} {}", r.get(name).unwrap_or_default());
    }
    let by_covers = |v: Option<bool>| v.map_or("undecided".to_string(), |b| b.to_string());
    println!("{:<24} {}", "sg_compact_by_covers", by_covers(r.sg_compact_by_covers));
    println!("{:<24} {}", "semi_compact_by_covers", by_covers(r.semi_compact_by_covers));
    println!("{:<24} {}", "X1", r.x1);
    println!("{:<24} {}", "isolated", r.isolated);
    println!("{:<24} {}", "N(τ)", r.ideal_descriptions.n);
    println!("{:<24} {}", "S(τ)", r.ideal_descriptions.s);
    println!("{:<24} {}", "hsg-closed sets", r.ideal_descriptions.hsg_closed);
}

fn cmd_symbolic(family: &str, as_json: bool) -> Outcome {
    let family: SymbolicSpace = family.parse()?;
    let r = sym_space_report(family);
    if as_json {
        print_json(&json!(r));
    } else {
        print_symbolic(&r);
    }
    Ok(())
}

fn cmd_bitop(file1: &Path, file2: &Path, as_json: bool) -> Outcome {
    let a = read_space(file1)?;
    let b = read_space(file2)?;
    if a.names != b.names {
        return Err(Failure::Input("the two files must list the same points in the same order".into()));
    }
    let pair = BitopSpace::new(a.space, b.space)?;
    let r = bitop_space_report(&pair);
    if as_json {
        print_json(&json!(r));
    } else {
        for name in BitopReport::BOOL_NAMES {
            println!("{name:<12} {}", r.get(name).unwrap_or_default());
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let as_json = cli.json;
    match cli.command {
        Command::Validate { file } => cmd_validate(&file, as_json),
        Command::Analyze { file, set } => cmd_analyze(&file, set.as_deref(), as_json),
        Command::Enumerate {
            n,
            count_only,
            modulo_homeo,
        } => cmd_enumerate(n, count_only, modulo_homeo, as_json),
        Command::Verify {
            n,
            ids,
            workers,
            finite_only,
        } => cmd_verify(
            VerifyOptions {
                n_max: n,
                ids,
                workers,
                finite_only,
            },
            as_json,
        ),
        Command::Mine { list: true, .. } => cmd_list_goals(as_json),
        Command::Mine {
            goal, expr, bitop, n, ..
        } => {
            let goal = match (goal, expr) {
                (Some(id), _) => MiningGoal::named(&id, n)?,
                (None, Some(expr)) => {
                    let domain = if bitop { Domain::Bitop } else { Domain::Finite };
                    MiningGoal::custom(&expr, domain, n)
                }
                (None, None) => unreachable!("clap requires --goal, --expr or --list"),
            };
            cmd_mine(goal, as_json)
        }
        Command::Symbolic { family, .. } => cmd_symbolic(&family, as_json),
        Command::Bitop { file1, file2, .. } => cmd_bitop(&file1, &file2, as_json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
