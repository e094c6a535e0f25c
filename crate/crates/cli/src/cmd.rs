use std::fs;
use std::io::Read;
use std::path::Path;
use std::time::Duration;

use butson::format::{parse_matrix, write_grid, write_json, FORMAT_VERSION};
use butson::petrescu::{
    check_system_a, check_system_b, compute_x_plus_y, extract_blocks, BlockReport,
};
use butson::search::{assign_xy, enumerate_t, pair_options};
use butson::{fixtures, EngineRegistry, Error, ExponentMatrix, SearchConfig};
use serde_json::json;

use crate::cli::{BlocksArgs, DephaseArgs, GenTArgs, MatrixArgs, SearchArgs};
use crate::error::{CliError, EXIT_FAIL, EXIT_OK, EXIT_TRUNCATED};

type CmdResult = Result<i32, CliError>;

fn read_matrix(args: &MatrixArgs) -> Result<ExponentMatrix, CliError> {
    if let Some(name) = args.input.strip_prefix('@') {
        return fixtures::builtin(name)
            .ok_or_else(|| CliError::Usage(format!("unknown built-in matrix `@{name}`")));
    }
    let text = if args.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        buf
    } else {
        fs::read_to_string(&args.input)
            .map_err(|source| CliError::Io { path: args.input.clone(), source })?
    };
    Ok(parse_matrix(&text, Some(args.q))?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn to_json(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize")
}

pub fn verify(args: &MatrixArgs) -> CmdResult {
    let m = read_matrix(args)?;
    if !m.is_square() {
        println!("FAIL: a {}x{} matrix is not square", m.n_rows(), m.n_cols());
        return Ok(EXIT_FAIL);
    }
    let report = m.verify_bh()?;
    if args.json {
        println!("{}", to_json(&json!(report)));
    } else {
        let verdict = if report.is_hadamard { "PASS" } else { "FAIL" };
        println!("BH({},{}): {verdict}", report.order, report.q);
        if !report.violations.is_empty() {
            println!("{} non-orthogonal row pairs:", report.violations.len());
            for v in &report.violations {
                println!("  rows {} and {}: inner product {}", v.i, v.k, v.residual);
            }
        }
    }
    Ok(if report.is_hadamard { EXIT_OK } else { EXIT_FAIL })
}

pub fn dephase(args: &DephaseArgs) -> CmdResult {
    let m = read_matrix(&args.matrix)?.dephase();
    let text = if args.matrix.json { write_json(&m) } else { write_grid(&m) };
    match &args.out {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(EXIT_OK)
}

fn print_report(title: &str, report: &BlockReport) {
    println!("{title}");
    for check in &report.checks {
        let verdict = if check.passed() { "PASS" } else { "FAIL" };
        println!("  {:<34} {verdict}", check.equation.label());
        for v in check.violations.iter().take(5) {
            println!("      at {:?}: residual {}", v.location, v.residual);
        }
        if check.violations.len() > 5 {
            println!("      ... {} more", check.violations.len() - 5);
        }
    }
}

pub fn blocks(args: &BlocksArgs) -> CmdResult {
    let m = read_matrix(&args.matrix)?;
    let b = extract_blocks(&m, args.s)?;
    let a = check_system_a(&b)?;
    let bb = check_system_b(&b)?;
    let passed = a.passed() && bb.passed();
    if args.matrix.json {
        let doc = json!({
            "format_version": FORMAT_VERSION,
            "s": args.s,
            "q": b.q,
            "passed": passed,
            "system_a": a,
            "system_b": bb,
        });
        println!("{}", to_json(&doc));
    } else {
        print_report("system A", &a);
        print_report("system B", &bb);
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAIL })
}

pub fn decompose(args: &BlocksArgs) -> CmdResult {
    let m = read_matrix(&args.matrix)?;
    let s = args.s;
    let b = extract_blocks(&m, s)?;
    let sum = match compute_x_plus_y(&b.t, &b.d, s) {
        Ok(sum) => sum,
        Err(Error::NotDivisible { divisor }) => {
            println!("-T D* T* is not divisible by {divisor}: no X, Y exist for this T and D");
            return Ok(EXIT_FAIL);
        }
        Err(e) => return Err(e.into()),
    };
    println!("X + Y:");
    for i in 0..s {
        let row: Vec<String> = (0..s).map(|k| format!("{:>8}", sum.get(i, k).to_string())).collect();
        println!("  {}", row.join(" "));
    }
    let Some(options) = pair_options(&sum) else {
        println!("some entry is not a sum of two roots of unity");
        return Ok(EXIT_FAIL);
    };
    let choices: usize = options.iter().map(Vec::len).product();
    println!("ordered (x, y) choices per entry multiply to {choices}");
    let splits = assign_xy(&sum, s)?;
    let own = splits.iter().any(|(x, y)| *x == b.x && *y == b.y);
    println!("{} splits satisfy (X-Y)(X-Y)* = {}I", splits.len(), 3 * s + 1);
    println!("the matrix's own X, Y {} among them", if own { "are" } else { "are not" });
    Ok(if splits.is_empty() { EXIT_FAIL } else { EXIT_OK })
}

pub fn search(args: &SearchArgs) -> CmdResult {
    let cfg = SearchConfig {
        s: args.s,
        q: args.q,
        max_d_candidates: args.max_d,
        max_t_candidates: args.max_t,
        max_solutions: args.max_solutions,
        deterministic_order: !args.unordered,
        time_budget: match args.budget {
            Some(secs) if !(secs.is_finite() && secs >= 0.0) => {
                return Err(CliError::Usage(format!("invalid budget {secs}")));
            }
            other => other.map(Duration::from_secs_f64),
        },
        threads: args.threads,
        pruning: !args.no_prune,
        engine: args.engine.clone(),
    };
    cfg.validate()?;
    let registry = EngineRegistry::default();
    let engine = registry.select(&cfg.engine, cfg.q)?;
    let outcome = engine.run(&cfg)?;

    let summary = json!({
        "format_version": FORMAT_VERSION,
        "s": cfg.s,
        "q": cfg.q,
        "engine": engine.name(),
        "truncated": outcome.truncated,
        "stats": outcome.stats,
    });
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)
            .map_err(|source| CliError::Io { path: dir.display().to_string(), source })?;
        for (k, sol) in outcome.solutions.iter().enumerate() {
            write_file(&dir.join(format!("solution_{}.json", k + 1)), &write_json(&sol.matrix))?;
        }
        write_file(&dir.join("stats.json"), &(to_json(&summary) + "\n"))?;
    } else if !args.json {
        for sol in &outcome.solutions {
            print!("{}", write_grid(&sol.matrix));
            println!();
        }
    }
    if args.json {
        println!("{}", to_json(&summary));
    } else {
        let st = &outcome.stats;
        eprintln!(
            "{} solution(s) of order {}, engine {}, {} D and {} T candidates, {} ms{}",
            st.solutions,
            3 * cfg.s + 1,
            engine.name(),
            st.d_candidates,
            st.t_candidates,
            st.elapsed_ms,
            if outcome.truncated { ", stopped by the time budget" } else { "" }
        );
    }
    if outcome.truncated && outcome.solutions.is_empty() {
        return Ok(EXIT_TRUNCATED);
    }
    Ok(EXIT_OK)
}

pub fn gen_t(args: &GenTArgs) -> CmdResult {
    if args.s == 0 || args.q < 2 {
        return Err(CliError::Usage("need s >= 1 and q >= 2".into()));
    }
    let all = enumerate_t(args.s, args.q, args.limit)?;
    if args.count {
        println!("{}", all.len());
        return Ok(EXIT_OK);
    }
    for t in &all {
        print!("{}", write_grid(t));
        println!();
    }
    eprintln!("{} normalized T blocks", all.len());
    Ok(EXIT_OK)
}
