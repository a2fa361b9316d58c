//! The built-in analysis corpus: a declarative manifest of algebras with
//! frozen expectations, and a runner that checks them together with the
//! cross-cutting invariant suite.
//!
//! The manifest is data (see `corpus.manifest`): each entry holds a
//! constructor expression, analysis parameters, and expected results, each
//! annotated with how the expectation was obtained.

use std::sync::Arc;
use std::time::Instant;

use crate::algebra::{
    local_rad_square_zero, lower_triangular, matrix_algebra, path_algebra_a2, prime_field_algebra,
    product, truncated_polynomial, AlgebraRef, StructureAlgebra,
};
use crate::check::{
    dominant_numbers, is_gnk, is_ln_op, triangular_session, verify_cor38, verify_thm36,
    verify_thm37, TheoremVerdict, Verdict,
};
use crate::chop::chop;
use crate::homology::AnalysisSession;
use crate::module::{is_isomorphic, socle, top, RightModule};
use crate::textio::{parse_algebra, serialize_algebra};

/// The manifest shipped with the binary.
pub const BUILTIN_MANIFEST: &str = include_str!("corpus.manifest");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constructor {
    Field(u64),
    Trunc(u64, usize),
    Matrix(u64, usize),
    Lrsz(u64),
    PathA2(u64),
    Product(Box<Constructor>, Box<Constructor>),
    Tri(usize, Box<Constructor>),
    Op(Box<Constructor>),
}

impl Constructor {
    pub fn build(&self) -> StructureAlgebra {
        match self {
            Constructor::Field(p) => prime_field_algebra(*p),
            Constructor::Trunc(p, n) => truncated_polynomial(*p, *n),
            Constructor::Matrix(p, n) => matrix_algebra(*p, *n),
            Constructor::Lrsz(p) => local_rad_square_zero(*p),
            Constructor::PathA2(p) => path_algebra_a2(*p),
            Constructor::Product(a, b) => product(&a.build(), &b.build()),
            Constructor::Tri(t, a) => lower_triangular(&a.build(), *t),
            Constructor::Op(a) => a.build().opposite(),
        }
    }

    fn parse(tokens: &mut std::slice::Iter<'_, String>) -> Result<Constructor, String> {
        let head = tokens.next().ok_or("constructor expression ended early")?;
        let mut num = |what: &str| -> Result<u64, String> {
            tokens
                .next()
                .ok_or_else(|| format!("missing {what}"))?
                .parse()
                .map_err(|_| format!("invalid {what}"))
        };
        match head.as_str() {
            "field" => Ok(Constructor::Field(num("prime")?)),
            "trunc" => Ok(Constructor::Trunc(num("prime")?, num("degree")? as usize)),
            "matrix" => Ok(Constructor::Matrix(num("prime")?, num("size")? as usize)),
            "lrsz" => Ok(Constructor::Lrsz(num("prime")?)),
            "patha2" => Ok(Constructor::PathA2(num("prime")?)),
            "product" => {
                let a = Constructor::parse(tokens)?;
                let b = Constructor::parse(tokens)?;
                Ok(Constructor::Product(Box::new(a), Box::new(b)))
            }
            "tri" => {
                let t = num("degree")? as usize;
                let a = Constructor::parse(tokens)?;
                Ok(Constructor::Tri(t, Box::new(a)))
            }
            "op" => Ok(Constructor::Op(Box::new(Constructor::parse(tokens)?))),
            other => Err(format!("unknown constructor {other:?}")),
        }
    }
}

/// One expectation with its recorded provenance note.
#[derive(Debug, Clone)]
pub enum Expectation {
    /// Rendered profile entries, degree 0 upward.
    Profile(Vec<String>),
    Gnk {
        n: u32,
        k: u32,
        verdict: Verdict,
    },
    Lnop {
        l: u32,
        n: u32,
        verdict: Verdict,
    },
    Dominant {
        max_n: usize,
        expected: Vec<usize>,
    },
    Thm36 {
        t: usize,
        max_degree: usize,
        verdict: TheoremVerdict,
    },
    Thm37 {
        n: u32,
        k: u32,
        t: usize,
        verdict: TheoremVerdict,
    },
    Cor38 {
        l: u32,
        n: u32,
        t: usize,
        max_n: usize,
        verdict: TheoremVerdict,
    },
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub constructor: Constructor,
    pub max_degree: usize,
    pub cap: u32,
    pub expectations: Vec<(Expectation, String)>,
}

fn parse_verdict(s: &str) -> Result<Verdict, String> {
    match s {
        "holds" => Ok(Verdict::Holds),
        "fails" => Ok(Verdict::Fails),
        "inconclusive" => Ok(Verdict::Inconclusive),
        other => Err(format!("unknown verdict {other:?}")),
    }
}

fn parse_theorem_verdict(s: &str) -> Result<TheoremVerdict, String> {
    match s {
        "verified" => Ok(TheoremVerdict::Verified),
        "consistent-under-cap" => Ok(TheoremVerdict::ConsistentUnderCap),
        "refuted" => Ok(TheoremVerdict::Refuted),
        other => Err(format!("unknown theorem verdict {other:?}")),
    }
}

/// Parses a manifest. Lines: `entry <name>`, `construct <expr>`,
/// `max-degree <n>`, `cap <c>`, expectation lines (optionally followed by
/// `| <provenance>`), and `end`.
pub fn parse_manifest(text: &str) -> Result<Vec<CorpusEntry>, String> {
    let mut entries = Vec::new();
    let mut current: Option<CorpusEntry> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (body, provenance) = match line.split_once('|') {
            Some((b, p)) => (b.trim(), p.trim().to_string()),
            None => (line, String::new()),
        };
        let fields: Vec<String> = body.split_whitespace().map(str::to_string).collect();
        let ctx = |m: String| format!("manifest line {}: {m}", idx + 1);
        match fields[0].as_str() {
            "entry" => {
                if current.is_some() {
                    return Err(ctx("entry before previous end".into()));
                }
                current = Some(CorpusEntry {
                    name: fields
                        .get(1)
                        .ok_or_else(|| ctx("entry needs a name".into()))?
                        .clone(),
                    constructor: Constructor::Field(2),
                    max_degree: 3,
                    cap: 6,
                    expectations: Vec::new(),
                });
            }
            "end" => {
                entries.push(
                    current
                        .take()
                        .ok_or_else(|| ctx("end without entry".into()))?,
                );
            }
            _ => {
                let entry = current
                    .as_mut()
                    .ok_or_else(|| ctx("directive outside entry".into()))?;
                match fields[0].as_str() {
                    "construct" => {
                        let mut it = fields[1..].iter();
                        entry.constructor = Constructor::parse(&mut it).map_err(ctx)?;
                        if it.next().is_some() {
                            return Err(ctx("trailing tokens after constructor".into()));
                        }
                    }
                    "max-degree" => {
                        entry.max_degree = fields[1]
                            .parse()
                            .map_err(|_| ctx("bad max-degree".into()))?;
                    }
                    "cap" => {
                        entry.cap = fields[1].parse().map_err(|_| ctx("bad cap".into()))?;
                    }
                    "profile" => {
                        entry
                            .expectations
                            .push((Expectation::Profile(fields[1..].to_vec()), provenance));
                    }
                    "gnk" => {
                        entry.expectations.push((
                            Expectation::Gnk {
                                n: fields[1].parse().map_err(|_| ctx("bad n".into()))?,
                                k: fields[2].parse().map_err(|_| ctx("bad k".into()))?,
                                verdict: parse_verdict(&fields[3]).map_err(ctx)?,
                            },
                            provenance,
                        ));
                    }
                    "lnop" => {
                        entry.expectations.push((
                            Expectation::Lnop {
                                l: fields[1].parse().map_err(|_| ctx("bad l".into()))?,
                                n: fields[2].parse().map_err(|_| ctx("bad n".into()))?,
                                verdict: parse_verdict(&fields[3]).map_err(ctx)?,
                            },
                            provenance,
                        ));
                    }
                    "dominant" => {
                        let max_n = fields[1].parse().map_err(|_| ctx("bad max".into()))?;
                        let expected = if fields.len() > 2 && fields[2] != "-" {
                            fields[2]
                                .split(',')
                                .map(|s| s.parse().map_err(|_| ctx("bad dominant list".into())))
                                .collect::<Result<_, _>>()?
                        } else {
                            Vec::new()
                        };
                        entry
                            .expectations
                            .push((Expectation::Dominant { max_n, expected }, provenance));
                    }
                    "thm36" => {
                        entry.expectations.push((
                            Expectation::Thm36 {
                                t: fields[1].parse().map_err(|_| ctx("bad t".into()))?,
                                max_degree: fields[2]
                                    .parse()
                                    .map_err(|_| ctx("bad degree".into()))?,
                                verdict: parse_theorem_verdict(&fields[3]).map_err(ctx)?,
                            },
                            provenance,
                        ));
                    }
                    "thm37" => {
                        entry.expectations.push((
                            Expectation::Thm37 {
                                n: fields[1].parse().map_err(|_| ctx("bad n".into()))?,
                                k: fields[2].parse().map_err(|_| ctx("bad k".into()))?,
                                t: fields[3].parse().map_err(|_| ctx("bad t".into()))?,
                                verdict: parse_theorem_verdict(&fields[4]).map_err(ctx)?,
                            },
                            provenance,
                        ));
                    }
                    "cor38" => {
                        entry.expectations.push((
                            Expectation::Cor38 {
                                l: fields[1].parse().map_err(|_| ctx("bad l".into()))?,
                                n: fields[2].parse().map_err(|_| ctx("bad n".into()))?,
                                t: fields[3].parse().map_err(|_| ctx("bad t".into()))?,
                                max_n: fields[4].parse().map_err(|_| ctx("bad max_n".into()))?,
                                verdict: parse_theorem_verdict(&fields[5]).map_err(ctx)?,
                            },
                            provenance,
                        ));
                    }
                    other => return Err(ctx(format!("unknown directive {other:?}"))),
                }
            }
        }
    }
    if current.is_some() {
        return Err("manifest ends inside an entry".to_string());
    }
    Ok(entries)
}

#[derive(Debug, Clone)]
pub struct EntryOutcome {
    pub name: String,
    pub failures: Vec<String>,
    pub millis: u128,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs one corpus entry: its frozen expectations plus the per-entry
/// invariant suite (validation, serialization round trip, seed-independent
/// composition factors, socle/top duality).
pub fn run_entry(entry: &CorpusEntry, seed: u64) -> EntryOutcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let algebra: AlgebraRef = Arc::new(entry.constructor.build());
    // invariant: constructor output validates
    let violations = algebra.validate();
    if !violations.is_empty() {
        failures.push(format!("algebra fails validation: {}", violations[0]));
    }
    // invariant: serialize -> parse -> serialize is byte-identical
    let text = serialize_algebra(&algebra);
    match parse_algebra(&text, algebra.name()) {
        Ok(reparsed) => {
            if serialize_algebra(&reparsed) != text {
                failures.push("serialization round trip is not byte-identical".to_string());
            }
        }
        Err(e) => failures.push(format!("serialized algebra fails to parse: {e}")),
    }
    // invariant: composition factors are seed-independent
    let reg = RightModule::regular(algebra.clone());
    let a = chop(&reg, seed);
    let b = chop(&reg, seed ^ 0x5EED);
    if a.len() != b.len() {
        failures.push("composition factor count depends on the seed".to_string());
    } else {
        let mut used = vec![false; b.len()];
        for fa in &a {
            let mut found = false;
            for (i, fb) in b.iter().enumerate() {
                if !used[i] && is_isomorphic(fa, fb).unwrap_or(false) {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if !found {
                failures.push("composition factor multiset depends on the seed".to_string());
                break;
            }
        }
    }
    let ctx = AnalysisSession::new(algebra.clone(), seed);
    // invariant: duality exchanges socle and top of the regular module
    {
        let op = ctx.op_algebra();
        let op_ctx = ctx.op_session();
        let rad = ctx.radical();
        let rad_op = op_ctx.radical();
        let dual = reg.dual(&op);
        let (soc_dual, _) = socle(&dual, &rad_op.elements);
        let (top_reg, _) = top(&reg, &rad.elements);
        if !is_isomorphic(&soc_dual, &top_reg.dual(&op)).unwrap_or(false) {
            failures.push("socle of the dual does not match the dual of the top".to_string());
        }
    }
    // frozen expectations
    for (expectation, provenance) in &entry.expectations {
        let tag = if provenance.is_empty() {
            String::new()
        } else {
            format!(" [{provenance}]")
        };
        match expectation {
            Expectation::Profile(expected) => {
                match ctx.rfd_profile(expected.len().saturating_sub(1), entry.cap) {
                    Ok(prof) => {
                        let got: Vec<String> = prof.entries.iter().map(|e| e.to_string()).collect();
                        if &got != expected {
                            failures.push(format!(
                                "profile mismatch: expected {expected:?}, got {got:?}{tag}"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("profile computation failed: {e}{tag}")),
                }
            }
            Expectation::Gnk { n, k, verdict } => match is_gnk(&ctx, *n, *k, entry.cap) {
                Ok(r) => {
                    if r.verdict != *verdict {
                        failures.push(format!(
                            "gnk({n},{k}): expected {verdict}, got {}{tag}",
                            r.verdict
                        ));
                    }
                }
                Err(e) => failures.push(format!("gnk({n},{k}) failed: {e}{tag}")),
            },
            Expectation::Lnop { l, n, verdict } => match is_ln_op(&ctx, *l, *n, entry.cap) {
                Ok(r) => {
                    if r.verdict != *verdict {
                        failures.push(format!(
                            "lnop({l},{n}): expected {verdict}, got {}{tag}",
                            r.verdict
                        ));
                    }
                }
                Err(e) => failures.push(format!("lnop({l},{n}) failed: {e}{tag}")),
            },
            Expectation::Dominant { max_n, expected } => {
                match dominant_numbers(&ctx, *max_n, entry.cap) {
                    Ok(r) => {
                        let got = r.dominant();
                        if &got != expected {
                            failures.push(format!(
                                "dominant numbers: expected {expected:?}, got {got:?}{tag}"
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("dominant check failed: {e}{tag}")),
                }
            }
            Expectation::Thm36 {
                t,
                max_degree,
                verdict,
            } => {
                let tri = triangular_session(&ctx, *t);
                match verify_thm36(&ctx, &tri, *t, *max_degree, entry.cap) {
                    Ok(r) => {
                        if r.verdict != *verdict {
                            failures.push(format!(
                                "thm36 t={t}: expected {verdict}, got {}{tag}",
                                r.verdict
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("thm36 t={t} failed: {e}{tag}")),
                }
            }
            Expectation::Thm37 { n, k, t, verdict } => {
                let tri = triangular_session(&ctx, *t);
                match verify_thm37(&ctx, &tri, *n, *k, *t, entry.cap) {
                    Ok(r) => {
                        if r.verdict != *verdict {
                            failures.push(format!(
                                "thm37 n={n} k={k} t={t}: expected {verdict}, got {}{tag}",
                                r.verdict
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("thm37 failed: {e}{tag}")),
                }
            }
            Expectation::Cor38 {
                l,
                n,
                t,
                max_n,
                verdict,
            } => {
                let tri = triangular_session(&ctx, *t);
                match verify_cor38(&ctx, &tri, *l, *n, *t, *max_n, entry.cap) {
                    Ok(r) => {
                        if r.verdict != *verdict {
                            failures.push(format!(
                                "cor38 l={l} n={n} t={t}: expected {verdict}, got {}{tag}",
                                r.verdict
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("cor38 failed: {e}{tag}")),
                }
            }
        }
    }
    EntryOutcome {
        name: entry.name.clone(),
        failures,
        millis: start.elapsed().as_millis(),
    }
}

/// Runs entries matching the filter, on up to `jobs` threads. Outcomes are
/// returned sorted by entry name regardless of scheduling.
pub fn run_corpus(
    entries: &[CorpusEntry],
    filter: Option<&str>,
    jobs: usize,
    seed: u64,
) -> Vec<EntryOutcome> {
    let selected: Vec<&CorpusEntry> = entries
        .iter()
        .filter(|e| filter.map(|f| glob_match(f, &e.name)).unwrap_or(true))
        .collect();
    let jobs = jobs.max(1).min(selected.len().max(1));
    let mut outcomes: Vec<EntryOutcome> = if jobs <= 1 {
        selected.iter().map(|e| run_entry(e, seed)).collect()
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let results = std::sync::Mutex::new(Vec::new());
        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let idx = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                    if idx >= selected.len() {
                        break;
                    }
                    let outcome = run_entry(selected[idx], seed);
                    results.lock().unwrap().push(outcome);
                });
            }
        });
        results.into_inner().unwrap()
    };
    outcomes.sort_by(|a, b| a.name.cmp(&b.name));
    outcomes
}

/// Minimal glob matching: `*` matches any run of characters.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    fn rec(p: &[u8], t: &[u8]) -> bool {
        match p.first() {
            None => t.is_empty(),
            Some(b'*') => (0..=t.len()).any(|i| rec(&p[1..], &t[i..])),
            Some(&c) => t.first() == Some(&c) && rec(&p[1..], &t[1..]),
        }
    }
    rec(pattern.as_bytes(), text.as_bytes())
}

pub fn builtin_entries() -> Vec<CorpusEntry> {
    parse_manifest(BUILTIN_MANIFEST).expect("builtin manifest parses")
}
