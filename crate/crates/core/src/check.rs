//! Decidable condition checks on dimension profiles, and the bundled
//! theorem verifications relating a base algebra to its lower triangular
//! matrix algebras.
//!
//! Verdicts are three-valued: censored profile entries can leave a bound
//! genuinely undecided at the configured cap, and the reports say so rather
//! than guessing.

use std::sync::Arc;

use crate::algebra::lower_triangular;
use crate::extdim::{ExtDim, MatchKind, Truth};
use crate::homology::{AnalysisSession, HomologyError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails => write!(f, "fails"),
            Verdict::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

/// Report for a single profile-bound condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: String,
    pub algebra: String,
    pub params: Vec<(String, String)>,
    pub cap: u32,
    pub verdict: Verdict,
    /// Profile entries examined, in order.
    pub witness: Vec<(usize, ExtDim)>,
    /// First violated index with its entry, when the verdict is `Fails`.
    pub violated: Option<(usize, ExtDim)>,
}

impl ConditionReport {
    /// Deterministic key-ordered serialization: one `key<TAB>value` line.
    pub fn serialize(&self) -> String {
        let mut pairs: Vec<(String, String)> = vec![
            ("algebra".to_string(), self.algebra.clone()),
            ("cap".to_string(), self.cap.to_string()),
            ("condition".to_string(), self.condition.clone()),
            ("verdict".to_string(), self.verdict.to_string()),
            (
                "witness".to_string(),
                self.witness
                    .iter()
                    .map(|(i, e)| format!("{i}:{e}"))
                    .collect::<Vec<_>>()
                    .join(","),
            ),
        ];
        for (k, v) in &self.params {
            pairs.push((format!("param.{k}"), v.clone()));
        }
        if let Some((i, e)) = &self.violated {
            pairs.push(("violated_index".to_string(), i.to_string()));
            pairs.push(("violated_value".to_string(), e.to_string()));
        }
        serialize_kv(pairs)
    }
}

pub fn serialize_kv(mut pairs: Vec<(String, String)>) -> String {
    pairs.sort();
    let mut out = String::new();
    for (k, v) in pairs {
        out.push_str(&k);
        out.push('\t');
        out.push_str(&v);
        out.push('\n');
    }
    out
}

/// Scans profile entries `0..range` against per-index bounds.
fn bound_scan(
    ctx: &Arc<AnalysisSession>,
    range: usize,
    bound: impl Fn(usize) -> i64,
    cap: u32,
) -> Result<(Verdict, Vec<(usize, ExtDim)>, Option<(usize, ExtDim)>), HomologyError> {
    let mut witness = Vec::new();
    let mut unknown = false;
    for i in 0..range {
        let e = ctx.profile_entry(i, cap)?;
        witness.push((i, e));
        match e.leq(bound(i)) {
            Truth::False => return Ok((Verdict::Fails, witness, Some((i, e)))),
            Truth::Unknown => unknown = true,
            Truth::True => {}
        }
    }
    if unknown {
        Ok((Verdict::Inconclusive, witness, None))
    } else {
        Ok((Verdict::Holds, witness, None))
    }
}

/// The condition `r.fd I^i <= i + k` for `0 <= i <= n-1`.
pub fn is_gnk(
    ctx: &Arc<AnalysisSession>,
    n: u32,
    k: u32,
    cap: u32,
) -> Result<ConditionReport, HomologyError> {
    let (verdict, witness, violated) = bound_scan(ctx, n as usize, |i| i as i64 + k as i64, cap)?;
    Ok(ConditionReport {
        condition: "gnk".to_string(),
        algebra: ctx.algebra().name().to_string(),
        params: vec![
            ("n".to_string(), n.to_string()),
            ("k".to_string(), k.to_string()),
        ],
        cap,
        verdict,
        witness,
        violated,
    })
}

/// The condition `r.fd I^i <= l - 1` for `0 <= i <= n-1`.
pub fn is_ln_op(
    ctx: &Arc<AnalysisSession>,
    l: u32,
    n: u32,
    cap: u32,
) -> Result<ConditionReport, HomologyError> {
    let (verdict, witness, violated) = bound_scan(ctx, n as usize, |_| l as i64 - 1, cap)?;
    Ok(ConditionReport {
        condition: "lnop".to_string(),
        algebra: ctx.algebra().name().to_string(),
        params: vec![
            ("l".to_string(), l.to_string()),
            ("n".to_string(), n.to_string()),
        ],
        cap,
        verdict,
        witness,
        violated,
    })
}

/// Report on which `n <= max_n` are dominant: `entry_i < entry_n` for all
/// `i < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantReport {
    pub algebra: String,
    pub cap: u32,
    pub per_n: Vec<(usize, Verdict)>,
    pub entries: Vec<ExtDim>,
}

impl DominantReport {
    pub fn dominant(&self) -> Vec<usize> {
        self.per_n
            .iter()
            .filter(|(_, v)| *v == Verdict::Holds)
            .map(|(n, _)| *n)
            .collect()
    }

    pub fn serialize(&self) -> String {
        let mut pairs = vec![
            ("algebra".to_string(), self.algebra.clone()),
            ("cap".to_string(), self.cap.to_string()),
            ("condition".to_string(), "dominant".to_string()),
            (
                "dominant".to_string(),
                self.dominant()
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            (
                "witness".to_string(),
                self.entries
                    .iter()
                    .enumerate()
                    .map(|(i, e)| format!("{i}:{e}"))
                    .collect::<Vec<_>>()
                    .join(","),
            ),
        ];
        for (n, v) in &self.per_n {
            pairs.push((format!("n.{n}"), v.to_string()));
        }
        serialize_kv(pairs)
    }
}

pub fn dominant_numbers(
    ctx: &Arc<AnalysisSession>,
    max_n: usize,
    cap: u32,
) -> Result<DominantReport, HomologyError> {
    let entries: Vec<ExtDim> = (0..=max_n)
        .map(|i| ctx.profile_entry(i, cap))
        .collect::<Result<_, _>>()?;
    let mut per_n = Vec::new();
    for n in 0..=max_n {
        let mut verdict = Verdict::Holds; // vacuous at n = 0
        for i in 0..n {
            match entries[i].lt(entries[n]) {
                Truth::False => {
                    verdict = Verdict::Fails;
                    break;
                }
                Truth::Unknown => verdict = Verdict::Inconclusive,
                Truth::True => {}
            }
        }
        per_n.push((n, verdict));
    }
    Ok(DominantReport {
        algebra: ctx.algebra().name().to_string(),
        cap,
        per_n,
        entries,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremVerdict {
    Verified,
    ConsistentUnderCap,
    Refuted,
}

impl std::fmt::Display for TheoremVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TheoremVerdict::Verified => write!(f, "verified"),
            TheoremVerdict::ConsistentUnderCap => write!(f, "consistent-under-cap"),
            TheoremVerdict::Refuted => write!(f, "refuted"),
        }
    }
}

impl TheoremVerdict {
    fn and(self, other: TheoremVerdict) -> TheoremVerdict {
        use TheoremVerdict::*;
        match (self, other) {
            (Refuted, _) | (_, Refuted) => Refuted,
            (ConsistentUnderCap, _) | (_, ConsistentUnderCap) => ConsistentUnderCap,
            _ => Verified,
        }
    }
}

/// Report of one theorem verification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem: String,
    pub algebra: String,
    pub params: Vec<(String, String)>,
    pub cap: u32,
    /// Per-index `(i, lhs, rhs, status)` rows where applicable.
    pub rows: Vec<(usize, ExtDim, ExtDim, MatchKind)>,
    pub notes: Vec<(String, String)>,
    pub verdict: TheoremVerdict,
}

impl TheoremReport {
    pub fn serialize(&self) -> String {
        let mut pairs = vec![
            ("algebra".to_string(), self.algebra.clone()),
            ("cap".to_string(), self.cap.to_string()),
            ("theorem".to_string(), self.theorem.clone()),
            ("verdict".to_string(), self.verdict.to_string()),
        ];
        for (k, v) in &self.params {
            pairs.push((format!("param.{k}"), v.clone()));
        }
        for (i, lhs, rhs, status) in &self.rows {
            let s = match status {
                MatchKind::Exact => "exact",
                MatchKind::ConsistentUnderCap => "consistent-under-cap",
                MatchKind::Mismatch => "mismatch",
            };
            pairs.push((format!("index.{i}"), format!("lhs={lhs} rhs={rhs} {s}")));
        }
        for (k, v) in &self.notes {
            pairs.push((format!("note.{k}"), v.clone()));
        }
        serialize_kv(pairs)
    }
}

/// Builds the analysis session for `T_t(base)`, sharing the seed.
pub fn triangular_session(base: &Arc<AnalysisSession>, t: usize) -> Arc<AnalysisSession> {
    let alg = Arc::new(lower_triangular(base.algebra(), t));
    AnalysisSession::new(alg, base.seed())
}

/// Per-index comparison of the profile of `T_t(base)` against the shifted
/// maximum of the base profile: `max { base_i, base_(i-1) + 1 }`.
pub fn verify_thm36(
    base: &Arc<AnalysisSession>,
    tri: &Arc<AnalysisSession>,
    t: usize,
    max_degree: usize,
    cap: u32,
) -> Result<TheoremReport, HomologyError> {
    let base_prof = base.rfd_profile(max_degree, cap)?;
    let tri_prof = tri.rfd_profile(max_degree, cap)?;
    let mut rows = Vec::new();
    let mut verdict = TheoremVerdict::Verified;
    for i in 0..=max_degree {
        let lhs = tri_prof.entry(i as isize);
        // The shifted-maximum identity concerns a genuine extension; at
        // t = 1 the triangular algebra is the base algebra and the claim
        // degenerates to profile equality.
        let rhs = if t == 1 {
            base_prof.entry(i as isize)
        } else {
            base_prof
                .entry(i as isize)
                .max(base_prof.entry(i as isize - 1).plus_one())
        };
        let status = lhs.matches(rhs);
        verdict = verdict.and(match status {
            MatchKind::Exact => TheoremVerdict::Verified,
            MatchKind::ConsistentUnderCap => TheoremVerdict::ConsistentUnderCap,
            MatchKind::Mismatch => TheoremVerdict::Refuted,
        });
        rows.push((i, lhs, rhs, status));
    }
    Ok(TheoremReport {
        theorem: "thm36".to_string(),
        algebra: base.algebra().name().to_string(),
        params: vec![
            ("t".to_string(), t.to_string()),
            ("max_degree".to_string(), max_degree.to_string()),
        ],
        cap,
        rows,
        notes: Vec::new(),
        verdict,
    })
}

fn agreement(a: Verdict, b: Verdict) -> TheoremVerdict {
    match (a, b) {
        (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => {
            TheoremVerdict::ConsistentUnderCap
        }
        (x, y) if x == y => TheoremVerdict::Verified,
        _ => TheoremVerdict::Refuted,
    }
}

/// Equivalence of the bound condition between the base algebra and
/// `T_t(base)`.
pub fn verify_thm37(
    base: &Arc<AnalysisSession>,
    tri: &Arc<AnalysisSession>,
    n: u32,
    k: u32,
    t: usize,
    cap: u32,
) -> Result<TheoremReport, HomologyError> {
    let r_base = is_gnk(base, n, k, cap)?;
    let r_tri = is_gnk(tri, n, k, cap)?;
    let verdict = agreement(r_base.verdict, r_tri.verdict);
    Ok(TheoremReport {
        theorem: "thm37".to_string(),
        algebra: base.algebra().name().to_string(),
        params: vec![
            ("n".to_string(), n.to_string()),
            ("k".to_string(), k.to_string()),
            ("t".to_string(), t.to_string()),
        ],
        cap,
        rows: Vec::new(),
        notes: vec![
            ("base_verdict".to_string(), r_base.verdict.to_string()),
            ("tri_verdict".to_string(), r_tri.verdict.to_string()),
        ],
        verdict,
    })
}

/// The equivalence between the indexed bound condition and the family of
/// fixed-bound conditions with parameters `(k + i, i)` for `1 <= i <= n`.
pub fn gnk_iff_lnop(
    ctx: &Arc<AnalysisSession>,
    n: u32,
    k: u32,
    cap: u32,
) -> Result<TheoremReport, HomologyError> {
    assert!(n >= 1);
    let gnk = is_gnk(ctx, n, k, cap)?;
    let mut all = Verdict::Holds;
    let mut notes = vec![("gnk_verdict".to_string(), gnk.verdict.to_string())];
    for i in 1..=n {
        let r = is_ln_op(ctx, k + i, i, cap)?;
        notes.push((format!("lnop_{}_{}", k + i, i), r.verdict.to_string()));
        all = match (all, r.verdict) {
            (Verdict::Fails, _) | (_, Verdict::Fails) => Verdict::Fails,
            (Verdict::Inconclusive, _) | (_, Verdict::Inconclusive) => Verdict::Inconclusive,
            _ => Verdict::Holds,
        };
    }
    let verdict = agreement(gnk.verdict, all);
    Ok(TheoremReport {
        theorem: "gnk_lnop".to_string(),
        algebra: ctx.algebra().name().to_string(),
        params: vec![
            ("n".to_string(), n.to_string()),
            ("k".to_string(), k.to_string()),
        ],
        cap,
        rows: Vec::new(),
        notes,
        verdict,
    })
}

fn implication(premise: Verdict, conclusion: Verdict) -> TheoremVerdict {
    match premise {
        Verdict::Fails => TheoremVerdict::Verified, // vacuous
        Verdict::Inconclusive => TheoremVerdict::ConsistentUnderCap,
        Verdict::Holds => match conclusion {
            Verdict::Holds => TheoremVerdict::Verified,
            Verdict::Fails => TheoremVerdict::Refuted,
            Verdict::Inconclusive => TheoremVerdict::ConsistentUnderCap,
        },
    }
}

/// Transfer of the fixed-bound condition (forward with `l + 1`, converse
/// with the same `l`) and the shift of dominant numbers `n -> n + 1`.
pub fn verify_cor38(
    base: &Arc<AnalysisSession>,
    tri: &Arc<AnalysisSession>,
    l: u32,
    n: u32,
    t: usize,
    max_n: usize,
    cap: u32,
) -> Result<TheoremReport, HomologyError> {
    let mut notes = Vec::new();
    // part 1 forward: base (l, n) => tri (l+1, n)
    let p_base = is_ln_op(base, l, n, cap)?;
    let c_tri = is_ln_op(tri, l + 1, n, cap)?;
    let forward = implication(p_base.verdict, c_tri.verdict);
    notes.push(("part1_forward".to_string(), forward.to_string()));
    notes.push((
        "part1_forward_premise".to_string(),
        p_base.verdict.to_string(),
    ));
    notes.push((
        "part1_forward_conclusion".to_string(),
        c_tri.verdict.to_string(),
    ));
    // part 1 converse: tri (l, n) => base (l, n)
    let p_tri = is_ln_op(tri, l, n, cap)?;
    let c_base = is_ln_op(base, l, n, cap)?;
    let converse = implication(p_tri.verdict, c_base.verdict);
    notes.push(("part1_converse".to_string(), converse.to_string()));
    notes.push((
        "part1_converse_premise".to_string(),
        p_tri.verdict.to_string(),
    ));
    notes.push((
        "part1_converse_conclusion".to_string(),
        c_base.verdict.to_string(),
    ));
    // part 2: each dominant n0 of the base makes n0 + 1 dominant upstairs
    let dom_base = dominant_numbers(base, max_n, cap)?;
    let dom_tri = dominant_numbers(tri, max_n + 1, cap)?;
    let mut part2 = TheoremVerdict::Verified;
    for &n0 in &dom_base.dominant() {
        let v = dom_tri
            .per_n
            .iter()
            .find(|(m, _)| *m == n0 + 1)
            .map(|(_, v)| *v)
            .unwrap_or(Verdict::Inconclusive);
        notes.push((format!("part2_shift_{n0}"), v.to_string()));
        part2 = part2.and(match v {
            Verdict::Holds => TheoremVerdict::Verified,
            Verdict::Fails => TheoremVerdict::Refuted,
            Verdict::Inconclusive => TheoremVerdict::ConsistentUnderCap,
        });
    }
    notes.push((
        "base_dominant".to_string(),
        dom_base
            .dominant()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
    ));
    let verdict = forward.and(converse).and(part2);
    Ok(TheoremReport {
        theorem: "cor38".to_string(),
        algebra: base.algebra().name().to_string(),
        params: vec![
            ("l".to_string(), l.to_string()),
            ("n".to_string(), n.to_string()),
            ("t".to_string(), t.to_string()),
            ("max_n".to_string(), max_n.to_string()),
        ],
        cap,
        rows: Vec::new(),
        notes,
        verdict,
    })
}
