//! Command-line front end.
//!
//! ```text
//! auslab validate <file>
//! auslab analyze <file> --max-degree N [--cap C] [--seed S] [--strict]
//! auslab check <file> (gnk --n N --k K | lnop --l L --n N | dominant --max N) [--cap C]
//! auslab tri <file> --t T -o <out>
//! auslab verify <file> (thm36 --t T --max-degree N | thm37 --n N --k K --t T | cor38 --l L --n N --t T) [--cap C]
//! auslab corpus run [--filter GLOB] [--jobs J]
//! ```
//!
//! Exit codes: 0 success / condition holds / verified; 1 condition fails /
//! refuted / corpus failure; 2 usage, I/O or parse error; 3 inconclusive or
//! consistent-under-cap (and strict-mode censoring).

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use auslab::check::{
    dominant_numbers, is_gnk, is_ln_op, triangular_session, verify_cor38, verify_thm36,
    verify_thm37, TheoremVerdict, Verdict,
};
use auslab::corpus::{builtin_entries, run_corpus};
use auslab::homology::AnalysisSession;
use auslab::rng::DEFAULT_SEED;
use auslab::textio::{load_algebra_file, serialize_algebra};
use auslab::{lower_triangular, AlgebraRef};

const USAGE: &str = "usage:
  auslab validate <file>
  auslab analyze <file> --max-degree N [--cap C] [--seed S] [--strict]
  auslab check <file> (gnk --n N --k K | lnop --l L --n N | dominant --max N) [--cap C]
  auslab tri <file> --t T -o <out>
  auslab verify <file> (thm36 --t T --max-degree N | thm37 --n N --k K --t T | cor38 --l L --n N --t T) [--cap C]
  auslab corpus run [--filter GLOB] [--jobs J]";

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("auslab: {msg}");
            eprintln!("{USAGE}");
            ExitCode::from(2)
        }
    }
}

/// Flags plus positional arguments, in order.
struct Parsed {
    positional: Vec<String>,
    flags: HashMap<String, String>,
    switches: Vec<String>,
}

fn parse_args(
    args: &[String],
    value_flags: &[&str],
    switch_flags: &[&str],
) -> Result<Parsed, String> {
    let mut positional = Vec::new();
    let mut flags = HashMap::new();
    let mut switches = Vec::new();
    let mut it = args.iter();
    while let Some(a) = it.next() {
        let name = a
            .strip_prefix("--")
            .or_else(|| a.strip_prefix('-').filter(|s| s.len() == 1));
        if let Some(name) = name {
            if switch_flags.contains(&name) {
                switches.push(name.to_string());
            } else if value_flags.contains(&name) {
                let v = it
                    .next()
                    .ok_or_else(|| format!("flag --{name} needs a value"))?;
                flags.insert(name.to_string(), v.clone());
            } else {
                return Err(format!("unknown flag {a:?}"));
            }
        } else {
            positional.push(a.clone());
        }
    }
    Ok(Parsed {
        positional,
        flags,
        switches,
    })
}

fn get_num<T: std::str::FromStr>(p: &Parsed, name: &str) -> Result<T, String> {
    p.flags
        .get(name)
        .ok_or_else(|| format!("missing --{name}"))?
        .parse()
        .map_err(|_| format!("invalid value for --{name}"))
}

fn get_num_or<T: std::str::FromStr>(p: &Parsed, name: &str, default: T) -> Result<T, String> {
    match p.flags.get(name) {
        None => Ok(default),
        Some(v) => v.parse().map_err(|_| format!("invalid value for --{name}")),
    }
}

fn run(args: &[String]) -> Result<ExitCode, String> {
    let Some(cmd) = args.first() else {
        return Err("missing command".to_string());
    };
    match cmd.as_str() {
        "validate" => cmd_validate(&args[1..]),
        "analyze" => cmd_analyze(&args[1..]),
        "check" => cmd_check(&args[1..]),
        "tri" => cmd_tri(&args[1..]),
        "verify" => cmd_verify(&args[1..]),
        "corpus" => cmd_corpus(&args[1..]),
        other => Err(format!("unknown command {other:?}")),
    }
}

fn load(path_str: &str) -> Result<AlgebraRef, String> {
    load_algebra_file(Path::new(path_str))
}

fn cmd_validate(args: &[String]) -> Result<ExitCode, String> {
    let p = parse_args(args, &[], &[])?;
    let [file] = p.positional.as_slice() else {
        return Err("validate takes exactly one file".to_string());
    };
    let algebra = match load(file) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("auslab: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    let violations = algebra.validate();
    if violations.is_empty() {
        println!("ok\t{}", algebra.name());
        Ok(ExitCode::SUCCESS)
    } else {
        for v in &violations {
            eprintln!("auslab: {file}: {v}");
        }
        Ok(ExitCode::from(2))
    }
}

fn cmd_analyze(args: &[String]) -> Result<ExitCode, String> {
    let p = parse_args(args, &["max-degree", "cap", "seed"], &["strict"])?;
    let [file] = p.positional.as_slice() else {
        return Err("analyze takes exactly one file".to_string());
    };
    let max_degree: usize = get_num(&p, "max-degree")?;
    let cap: u32 = get_num_or(&p, "cap", max_degree as u32 + 4)?;
    let seed: u64 = get_num_or(&p, "seed", DEFAULT_SEED)?;
    let strict = p.switches.iter().any(|s| s == "strict");
    let algebra = match load(file) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("auslab: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    let ctx = AnalysisSession::new(algebra, seed);
    let mut censored = false;
    for i in 0..=max_degree {
        let entry = ctx.profile_entry(i, cap).map_err(|e| e.to_string())?;
        let dim = ctx.injective_term(i).map_err(|e| e.to_string())?.mdim();
        censored |= entry.is_censored();
        println!("{i}\t{entry}\t{dim}");
    }
    if strict && censored {
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_code(v: Verdict) -> ExitCode {
    match v {
        Verdict::Holds => ExitCode::SUCCESS,
        Verdict::Fails => ExitCode::from(1),
        Verdict::Inconclusive => ExitCode::from(3),
    }
}

fn cmd_check(args: &[String]) -> Result<ExitCode, String> {
    let p = parse_args(args, &["n", "k", "l", "max", "cap", "seed"], &[])?;
    let [file, sub] = p.positional.as_slice() else {
        return Err("check takes a file and one of: gnk, lnop, dominant".to_string());
    };
    let seed: u64 = get_num_or(&p, "seed", DEFAULT_SEED)?;
    let algebra = match load(file) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("auslab: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    let ctx = AnalysisSession::new(algebra, seed);
    match sub.as_str() {
        "gnk" => {
            let n: u32 = get_num(&p, "n")?;
            let k: u32 = get_num(&p, "k")?;
            let cap: u32 = get_num_or(&p, "cap", n + k + 3)?;
            let report = is_gnk(&ctx, n, k, cap).map_err(|e| e.to_string())?;
            print!("{}", report.serialize());
            Ok(verdict_code(report.verdict))
        }
        "lnop" => {
            let l: u32 = get_num(&p, "l")?;
            let n: u32 = get_num(&p, "n")?;
            let cap: u32 = get_num_or(&p, "cap", l + n + 3)?;
            let report = is_ln_op(&ctx, l, n, cap).map_err(|e| e.to_string())?;
            print!("{}", report.serialize());
            Ok(verdict_code(report.verdict))
        }
        "dominant" => {
            let max_n: usize = get_num(&p, "max")?;
            let cap: u32 = get_num_or(&p, "cap", max_n as u32 + 4)?;
            let report = dominant_numbers(&ctx, max_n, cap).map_err(|e| e.to_string())?;
            print!("{}", report.serialize());
            let any_inconclusive = report
                .per_n
                .iter()
                .any(|(_, v)| *v == Verdict::Inconclusive);
            Ok(if any_inconclusive {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            })
        }
        other => Err(format!("unknown check {other:?}")),
    }
}

fn cmd_tri(args: &[String]) -> Result<ExitCode, String> {
    let p = parse_args(args, &["t", "o"], &[])?;
    let [file] = p.positional.as_slice() else {
        return Err("tri takes exactly one input file".to_string());
    };
    let t: usize = get_num(&p, "t")?;
    if t < 1 {
        return Err("--t must be at least 1".to_string());
    }
    let out: PathBuf = PathBuf::from(p.flags.get("o").ok_or("missing -o <out>")?);
    let algebra = match load(file) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("auslab: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    let tri = lower_triangular(&algebra, t);
    let text = serialize_algebra(&tri);
    if let Err(e) = std::fs::write(&out, text) {
        eprintln!("auslab: {}: {e}", out.display());
        return Ok(ExitCode::from(2));
    }
    Ok(ExitCode::SUCCESS)
}

fn theorem_code(v: TheoremVerdict) -> ExitCode {
    match v {
        TheoremVerdict::Verified => ExitCode::SUCCESS,
        TheoremVerdict::Refuted => ExitCode::from(1),
        TheoremVerdict::ConsistentUnderCap => ExitCode::from(3),
    }
}

fn cmd_verify(args: &[String]) -> Result<ExitCode, String> {
    let p = parse_args(
        args,
        &["t", "max-degree", "n", "k", "l", "cap", "seed"],
        &[],
    )?;
    let [file, sub] = p.positional.as_slice() else {
        return Err("verify takes a file and one of: thm36, thm37, cor38".to_string());
    };
    let seed: u64 = get_num_or(&p, "seed", DEFAULT_SEED)?;
    let algebra = match load(file) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("auslab: {e}");
            return Ok(ExitCode::from(2));
        }
    };
    let ctx = AnalysisSession::new(algebra, seed);
    match sub.as_str() {
        "thm36" => {
            let t: usize = get_num(&p, "t")?;
            let max_degree: usize = get_num(&p, "max-degree")?;
            let cap: u32 = get_num_or(&p, "cap", max_degree as u32 + 4)?;
            let tri = triangular_session(&ctx, t);
            let report = verify_thm36(&ctx, &tri, t, max_degree, cap).map_err(|e| e.to_string())?;
            print!("{}", report.serialize());
            Ok(theorem_code(report.verdict))
        }
        "thm37" => {
            let n: u32 = get_num(&p, "n")?;
            let k: u32 = get_num(&p, "k")?;
            let t: usize = get_num(&p, "t")?;
            let cap: u32 = get_num_or(&p, "cap", n + k + 3)?;
            let tri = triangular_session(&ctx, t);
            let report = verify_thm37(&ctx, &tri, n, k, t, cap).map_err(|e| e.to_string())?;
            print!("{}", report.serialize());
            Ok(theorem_code(report.verdict))
        }
        "cor38" => {
            let l: u32 = get_num(&p, "l")?;
            let n: u32 = get_num(&p, "n")?;
            let t: usize = get_num(&p, "t")?;
            let cap: u32 = get_num_or(&p, "cap", l + n + 3)?;
            let max_n = n as usize;
            let tri = triangular_session(&ctx, t);
            let report =
                verify_cor38(&ctx, &tri, l, n, t, max_n, cap).map_err(|e| e.to_string())?;
            print!("{}", report.serialize());
            Ok(theorem_code(report.verdict))
        }
        other => Err(format!("unknown verification {other:?}")),
    }
}

fn cmd_corpus(args: &[String]) -> Result<ExitCode, String> {
    let p = parse_args(args, &["filter", "jobs", "seed"], &[])?;
    if p.positional.as_slice() != ["run"] {
        return Err("corpus takes the subcommand: run".to_string());
    }
    let jobs: usize = get_num_or(&p, "jobs", 1)?;
    let seed: u64 = get_num_or(&p, "seed", DEFAULT_SEED)?;
    let filter = p.flags.get("filter").map(String::as_str);
    let entries = builtin_entries();
    let start = std::time::Instant::now();
    let outcomes = run_corpus(&entries, filter, jobs, seed);
    let mut all_pass = true;
    for o in &outcomes {
        println!("{}\t{}", o.name, if o.passed() { "pass" } else { "fail" });
        for f in &o.failures {
            println!("{}\tdetail\t{}", o.name, f);
        }
        all_pass &= o.passed();
    }
    // timing is a comment so output comparisons can ignore it
    println!("# wall_ms {}", start.elapsed().as_millis());
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
