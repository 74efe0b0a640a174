//! Comparing two knots through their presentation summaries: the
//! (tb, rot) dichotomy for isomorphic fundamental GL-racks, permutation
//! rack witnesses of non-isomorphism, and the slice genus refinement.

use std::fmt;

use thiserror::Error;

use crate::coloring::closed_form_permutation;
use crate::presentation::PresentationSummary;

/// The `(a, b)` exponents tried by the witness search, in order.
pub const WITNESS_FAMILIES: [(i64, i64); 3] = [(1, 0), (0, 1), (2, -1)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    SameInvariants,
    OppositeInvariants,
    CertifiedDistinct,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::SameInvariants => "SameInvariants",
            Verdict::OppositeInvariants => "OppositeInvariants",
            Verdict::CertifiedDistinct => "CertifiedDistinct",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

/// Permutation rack `(Z_k, σ, σ^-a, σ^-b)` with differing counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub k: u64,
    pub a: i64,
    pub b: i64,
    pub counts: (u64, u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub verdict: Verdict,
    pub tb_pair: (i64, i64),
    pub rot_pair: (i64, i64),
    pub witness: Option<Witness>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AuditError {
    #[error("summary {0} has an odd cusp count")]
    OddCusps(usize),
}

fn tb_rot(s: &PresentationSummary, side: usize) -> Result<(i64, i64), AuditError> {
    match (s.tb(), s.rot()) {
        (Some(tb), Some(rot)) => Ok((tb, rot)),
        _ => Err(AuditError::OddCusps(side)),
    }
}

fn t_value(s: &PresentationSummary, a: i64, b: i64) -> i64 {
    s.omega - a * s.p as i64 - b * s.q as i64
}

/// For each family with `|t1| != |t2|` tries `k = max |t|`, or `max |t| + 1`
/// when one side is 0, and keeps the smallest `k` whose counts differ.
/// Ties go to the earlier family.
pub fn witness_search(s1: &PresentationSummary, s2: &PresentationSummary) -> Option<Witness> {
    let mut best: Option<Witness> = None;
    for (a, b) in WITNESS_FAMILIES {
        let (t1, t2) = (t_value(s1, a, b).unsigned_abs(), t_value(s2, a, b).unsigned_abs());
        if t1 == t2 {
            continue;
        }
        let (small, big) = (t1.min(t2), t1.max(t2));
        let k = if small == 0 { big + 1 } else { big };
        let c1 = closed_form_permutation(s1, k, a, b).ok()?;
        let c2 = closed_form_permutation(s2, k, a, b).ok()?;
        if c1 == c2 {
            continue;
        }
        if best.map_or(true, |w| k < w.k) {
            best = Some(Witness { k, a, b, counts: (c1, c2) });
        }
    }
    best
}

pub fn theorem1_gate(s1: &PresentationSummary, s2: &PresentationSummary) -> Result<AuditReport, AuditError> {
    let (tb1, rot1) = tb_rot(s1, 1)?;
    let (tb2, rot2) = tb_rot(s2, 2)?;
    let mut report = AuditReport {
        verdict: Verdict::Inconclusive,
        tb_pair: (tb1, tb2),
        rot_pair: (rot1, rot2),
        witness: None,
    };
    if tb1 == tb2 && rot1 == rot2 {
        report.verdict = Verdict::SameInvariants;
    } else if tb1 == -tb2 && rot1 == -rot2 {
        report.verdict = Verdict::OppositeInvariants;
    } else if let Some(w) = witness_search(s1, s2) {
        report.verdict = Verdict::CertifiedDistinct;
        report.witness = Some(w);
    }
    Ok(report)
}

/// `tb + |rot| <= 2 g_s − 1` for one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BennequinCheck {
    pub lhs: i64,
    pub bound: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub report: AuditReport,
    pub slice_genus: u64,
    pub bennequin: [BennequinCheck; 2],
    /// The opposite case was ruled out by `g_s = 0`.
    pub opposite_eliminated: bool,
}

impl CorollaryReport {
    /// Both summaries satisfy the inequality for the given genus.
    pub fn consistent(&self) -> bool {
        self.bennequin.iter().all(|b| b.holds)
    }
}

pub fn corollary_gate(
    s1: &PresentationSummary,
    s2: &PresentationSummary,
    slice_genus: u64,
) -> Result<CorollaryReport, AuditError> {
    let mut report = theorem1_gate(s1, s2)?;
    let bound = 2 * slice_genus as i64 - 1;
    let check = |tb: i64, rot: i64| {
        let lhs = tb + rot.abs();
        BennequinCheck { lhs, bound, holds: lhs <= bound }
    };
    let bennequin = [
        check(report.tb_pair.0, report.rot_pair.0),
        check(report.tb_pair.1, report.rot_pair.1),
    ];
    // tb <= -1 for both knots when g_s = 0, so tb1 = -tb2 cannot hold
    let mut opposite_eliminated = false;
    if slice_genus == 0 && report.verdict == Verdict::OppositeInvariants && report.tb_pair.0 != report.tb_pair.1 {
        report.verdict = Verdict::CertifiedDistinct;
        opposite_eliminated = true;
    }
    Ok(CorollaryReport { report, slice_genus, bennequin, opposite_eliminated })
}

impl AuditReport {
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "verdict {}\ntb {} {}\nrot {} {}\n",
            self.verdict, self.tb_pair.0, self.tb_pair.1, self.rot_pair.0, self.rot_pair.1
        );
        if let Some(w) = self.witness {
            s += &format!("witness k={} a={} b={} counts={},{}\n", w.k, w.a, w.b, w.counts.0, w.counts.1);
        }
        match self.verdict {
            Verdict::SameInvariants | Verdict::OppositeInvariants => {
                s += "note not refuted: the invariants allow isomorphic GL-racks but do not prove it\n"
            }
            Verdict::Inconclusive => s += "note no permutation witness found\n",
            Verdict::CertifiedDistinct => {}
        }
        s
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl CorollaryReport {
    pub fn to_text(&self) -> String {
        let mut s = self.report.to_text();
        for (i, b) in self.bennequin.iter().enumerate() {
            s += &format!(
                "bennequin {} tb+|rot|={} bound={} {}\n",
                i + 1,
                b.lhs,
                b.bound,
                if b.holds { "ok" } else { "violated" }
            );
        }
        if self.opposite_eliminated {
            s += &format!("eliminated OppositeInvariants slice-genus={}\n", self.slice_genus);
        }
        s
    }
}
