//! Command-line entry point: check scene files, run the built-in suite,
//! inspect ring bases, and evaluate expressions.
//!
//! Exit codes: 0 = all pass, 1 = assertion failures or evaluation errors,
//! 2 = usage, I/O, or parse/resolution errors.

use chow::corpus;
use chow::scene::{
    eval_scene_full, format_report, parse_expr_str, parse_scene, resolve_names, EvalOptions,
    ReportMode, SceneEnv,
};
use clap::{Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "chow",
    about = "Exact intersection-theory workbench and scene verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and evaluate a scene file, printing its report.
    Check {
        /// Path to a .chow scene file.
        path: String,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in case suite (all cases, or one selected case).
    PaperSuite {
        /// Select a single case by name (unique prefixes allowed).
        #[arg(long)]
        case: Option<String>,
        /// Emit reports as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the canonical basis monomials of a ring in one degree.
    Basis {
        /// Ring name (from the built-in suite, or from --file).
        ring: String,
        #[arg(long)]
        degree: usize,
        /// Scene file defining the ring (defaults to the built-in suite).
        #[arg(long)]
        file: Option<String>,
    },
    /// Print the normal form of an expression in a ring.
    Eval {
        /// Ring name (from the built-in suite, or from --file).
        ring: String,
        /// Expression, e.g. "H^4".
        expr: String,
        /// Scene file defining the ring (defaults to the built-in suite).
        #[arg(long)]
        file: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { path, json } => cmd_check(&path, json),
        Command::PaperSuite { case, json } => cmd_paper_suite(case.as_deref(), json),
        Command::Basis { ring, degree, file } => cmd_basis(&ring, degree, file.as_deref()),
        Command::Eval { ring, expr, file } => cmd_eval(&ring, &expr, file.as_deref()),
    }
}

fn cmd_check(path: &str, json: bool) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read `{path}`: {e}");
            return ExitCode::from(2);
        }
    };
    let scene = match parse_scene(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {path}:{e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = resolve_names(&scene) {
        eprintln!("error: {path}:{e}");
        return ExitCode::from(2);
    }
    let opts = EvalOptions {
        file_name: path.to_string(),
    };
    let (report, _) = eval_scene_full(&scene, &opts);
    let mode = if json { ReportMode::Json } else { ReportMode::Text };
    print!("{}", format_report(&report, mode));
    if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_paper_suite(filter: Option<&str>, json: bool) -> ExitCode {
    let all = corpus::cases();
    let selected: Vec<_> = match filter {
        None => all.iter().collect(),
        Some(f) => {
            let exact: Vec<_> = all.iter().filter(|c| c.name == f).collect();
            let matched = if exact.is_empty() {
                all.iter().filter(|c| c.name.starts_with(f)).collect()
            } else {
                exact
            };
            if matched.is_empty() {
                eprintln!("error: unknown case `{f}`; available cases:");
                for c in &all {
                    eprintln!("  {}", c.name);
                }
                return ExitCode::from(2);
            }
            matched
        }
    };
    let mode = if json { ReportMode::Json } else { ReportMode::Text };
    let mut ok = true;
    for case in selected {
        let result = corpus::run_case(case);
        if json {
            println!("=== {} ===", result.name);
            print!("{}", format_report(&result.report, mode));
            println!();
        } else {
            println!("=== {} ===", result.name);
            print!("{}", format_report(&result.report, mode));
        }
        if result.mismatches.is_empty() {
            println!("case {}: OK\n", result.name);
        } else {
            ok = false;
            println!(
                "case {}: MISMATCH on {}\n",
                result.name,
                result.mismatches.join("; ")
            );
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

/// Find a ring by name in a scene file or across the built-in cases.
fn find_ring(name: &str, file: Option<&str>) -> Result<(SceneEnv, String), String> {
    let sources: Vec<(String, String)> = match file {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read `{path}`: {e}"))?;
            vec![(path.to_string(), text)]
        }
        None => corpus::cases()
            .into_iter()
            .map(|c| (format!("{}.chow", c.name), c.scene.to_string()))
            .collect(),
    };
    for (fname, text) in sources {
        let scene = parse_scene(&text).map_err(|e| format!("{fname}:{e}"))?;
        resolve_names(&scene).map_err(|e| format!("{fname}:{e}"))?;
        let opts = EvalOptions {
            file_name: fname.clone(),
        };
        let (_, env) = eval_scene_full(&scene, &opts);
        if env.ring(name).is_some() {
            return Ok((env, fname));
        }
    }
    Err(format!("no ring named `{name}` found"))
}

fn cmd_basis(ring: &str, degree: usize, file: Option<&str>) -> ExitCode {
    let (env, _) = match find_ring(ring, file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let r = env.ring(ring).unwrap();
    if degree > r.top_degree() {
        eprintln!(
            "error: degree {degree} beyond the truncation degree {}",
            r.top_degree()
        );
        return ExitCode::from(2);
    }
    let names: Vec<String> = r.basis(degree).iter().map(|m| r.fmt_mono(m)).collect();
    println!("{}", names.join(", "));
    ExitCode::SUCCESS
}

fn cmd_eval(ring: &str, expr: &str, file: Option<&str>) -> ExitCode {
    let (env, _) = match find_ring(ring, file) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let r = env.ring(ring).unwrap();
    let parsed = match parse_expr_str(expr) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let classes = env.classes_of(&r);
    match chow::scene::eval_expr(&parsed, &r, &classes) {
        Ok(v) => {
            println!("{}", r.fmt_element(&v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
