//! The catalog of inequalities between gamma, gamma_t, and gamma_c that
//! the harness checks on every graph it processes.
//!
//! Identifiers B1 through B9, in catalog order:
//!
//! * B1: gamma <= gamma_t <= 2 gamma (isolated-free graphs)
//! * B2: gamma <= gamma_c <= 3 gamma - 2 (connected graphs)
//! * B3: gamma_t <= gamma_c (needs gamma > 1)
//! * B4: gamma_t <= gamma + gamma_c / 2 (needs gamma > 1)
//! * B5: gamma_t <= 5 gamma - gamma_c - 2
//! * B6: gamma_t <= ceil(2 (gamma + gamma_c) / 3)
//! * B7: gamma_t >= 2 gamma - gamma_c
//! * B8: gamma_t >= ceil((3 gamma + 2 gamma_c) / 6), a conjecture; the
//!   harness hunts for counterexamples rather than treating violations as
//!   bugs
//! * B9: gamma_t >= ceil((3 gamma + gamma_c) / 6), the proved weakening
//!   of B8
//!
//! B1 through B7 and B9 are theorems, so a violated verdict on any of them
//! means the solver (or this catalog) is broken, and the harness treats it
//! that way.
//!
//! All arithmetic is exact integer arithmetic. B4's half-integer right side
//! is evaluated as 2 gamma_t <= 2 gamma + gamma_c, and the verdict stores
//! lhs, rhs, and slack in those doubled units, marked by the `doubled`
//! flag. Ceilings are computed as (num + den - 1) / den.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::solve::ParameterTriple;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BoundId {
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
}

impl BoundId {
    pub const ALL: [BoundId; 9] = [
        BoundId::B1,
        BoundId::B2,
        BoundId::B3,
        BoundId::B4,
        BoundId::B5,
        BoundId::B6,
        BoundId::B7,
        BoundId::B8,
        BoundId::B9,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BoundId::B1 => "B1",
            BoundId::B2 => "B2",
            BoundId::B3 => "B3",
            BoundId::B4 => "B4",
            BoundId::B5 => "B5",
            BoundId::B6 => "B6",
            BoundId::B7 => "B7",
            BoundId::B8 => "B8",
            BoundId::B9 => "B9",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            BoundId::B1 => "gamma <= gamma_t <= 2*gamma",
            BoundId::B2 => "gamma <= gamma_c <= 3*gamma - 2",
            BoundId::B3 => "gamma_t <= gamma_c",
            BoundId::B4 => "2*gamma_t <= 2*gamma + gamma_c",
            BoundId::B5 => "gamma_t <= 5*gamma - gamma_c - 2",
            BoundId::B6 => "gamma_t <= ceil(2*(gamma + gamma_c)/3)",
            BoundId::B7 => "gamma_t >= 2*gamma - gamma_c",
            BoundId::B8 => "gamma_t >= ceil((3*gamma + 2*gamma_c)/6)",
            BoundId::B9 => "gamma_t >= ceil((3*gamma + gamma_c)/6)",
        }
    }

    /// Whether a violation indicts the solver (true for everything proved)
    /// or is a reportable discovery (false, B8 only).
    pub fn violation_is_bug(self) -> bool {
        self != BoundId::B8
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BoundId {
    type Err = String;

    fn from_str(s: &str) -> Result<BoundId, String> {
        BoundId::ALL
            .iter()
            .copied()
            .find(|b| b.label().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown bound {s:?}, expected B1..B9"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundStatus {
    Holds,
    Tight,
    Violated,
    NotApplicable,
}

impl BoundStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundStatus::Holds => "holds",
            BoundStatus::Tight => "tight",
            BoundStatus::Violated => "violated",
            BoundStatus::NotApplicable => "not_applicable",
        }
    }
}

/// Outcome of one bound on one triple.
///
/// `slack` is how much room the inequality has: rhs - lhs for upper
/// bounds, lhs - rhs for lower bounds, so zero always means equality and
/// negative always means violated. For the two-sided B1 and B2 the stored
/// lhs/rhs/slack describe whichever side is binding (smaller slack, upper
/// side on ties); `status` reflects both sides. On `NotApplicable` the
/// numeric fields are absent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundVerdict {
    pub bound: BoundId,
    pub status: BoundStatus,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub slack: Option<i64>,
    /// True only for B4, whose fields are in units of half a vertex.
    pub doubled: bool,
}

impl BoundVerdict {
    fn not_applicable(bound: BoundId) -> BoundVerdict {
        BoundVerdict {
            bound,
            status: BoundStatus::NotApplicable,
            lhs: None,
            rhs: None,
            slack: None,
            doubled: false,
        }
    }

    fn single(bound: BoundId, lhs: i64, rhs: i64, upper: bool, doubled: bool) -> BoundVerdict {
        let slack = if upper { rhs - lhs } else { lhs - rhs };
        let status = match slack {
            s if s < 0 => BoundStatus::Violated,
            0 => BoundStatus::Tight,
            _ => BoundStatus::Holds,
        };
        BoundVerdict {
            bound,
            status,
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            doubled,
        }
    }

    /// Chain lower <= mid <= upper, e.g. gamma <= gamma_t <= 2 gamma.
    fn two_sided(bound: BoundId, lower: i64, mid: i64, upper: i64) -> BoundVerdict {
        let upper_slack = upper - mid;
        let lower_slack = mid - lower;
        let (lhs, rhs, slack) = if upper_slack <= lower_slack {
            (mid, upper, upper_slack)
        } else {
            (lower, mid, lower_slack)
        };
        let status = if upper_slack < 0 || lower_slack < 0 {
            BoundStatus::Violated
        } else if slack == 0 {
            BoundStatus::Tight
        } else {
            BoundStatus::Holds
        };
        BoundVerdict {
            bound,
            status,
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(slack),
            doubled: false,
        }
    }
}

fn ceil_div(num: i64, den: i64) -> i64 {
    (num + den - 1) / den
}

/// Evaluates one bound on a triple. Bounds whose hypotheses the triple
/// does not meet (a missing component, or gamma = 1 for B3 and B4) come
/// back `NotApplicable`.
pub fn evaluate_bound(bound: BoundId, t: &ParameterTriple) -> BoundVerdict {
    let gamma = t.gamma as i64;
    let gt = t.gamma_t.map(|v| v as i64);
    let gc = t.gamma_c.map(|v| v as i64);
    match bound {
        BoundId::B1 => match gt {
            Some(gt) => BoundVerdict::two_sided(bound, gamma, gt, 2 * gamma),
            None => BoundVerdict::not_applicable(bound),
        },
        BoundId::B2 => match gc {
            Some(gc) => BoundVerdict::two_sided(bound, gamma, gc, 3 * gamma - 2),
            None => BoundVerdict::not_applicable(bound),
        },
        BoundId::B3 => match (gt, gc) {
            (Some(gt), Some(gc)) if gamma > 1 => BoundVerdict::single(bound, gt, gc, true, false),
            _ => BoundVerdict::not_applicable(bound),
        },
        BoundId::B4 => match (gt, gc) {
            (Some(gt), Some(gc)) if gamma > 1 => {
                BoundVerdict::single(bound, 2 * gt, 2 * gamma + gc, true, true)
            }
            _ => BoundVerdict::not_applicable(bound),
        },
        BoundId::B5 => match (gt, gc) {
            (Some(gt), Some(gc)) => {
                BoundVerdict::single(bound, gt, 5 * gamma - gc - 2, true, false)
            }
            _ => BoundVerdict::not_applicable(bound),
        },
        BoundId::B6 => match (gt, gc) {
            (Some(gt), Some(gc)) => {
                BoundVerdict::single(bound, gt, ceil_div(2 * (gamma + gc), 3), true, false)
            }
            _ => BoundVerdict::not_applicable(bound),
        },
        BoundId::B7 => match (gt, gc) {
            (Some(gt), Some(gc)) => BoundVerdict::single(bound, gt, 2 * gamma - gc, false, false),
            _ => BoundVerdict::not_applicable(bound),
        },
        BoundId::B8 => match (gt, gc) {
            (Some(gt), Some(gc)) => {
                BoundVerdict::single(bound, gt, ceil_div(3 * gamma + 2 * gc, 6), false, false)
            }
            _ => BoundVerdict::not_applicable(bound),
        },
        BoundId::B9 => match (gt, gc) {
            (Some(gt), Some(gc)) => {
                BoundVerdict::single(bound, gt, ceil_div(3 * gamma + gc, 6), false, false)
            }
            _ => BoundVerdict::not_applicable(bound),
        },
    }
}

/// All nine verdicts in catalog order.
pub fn evaluate_all(t: &ParameterTriple) -> [BoundVerdict; 9] {
    BoundId::ALL.map(|bound| evaluate_bound(bound, t))
}

/// For gamma = 2 the total and connected domination numbers coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Gamma2Identity {
    Confirmed,
    Refuted,
    NotApplicable,
}

pub fn check_gamma2_identity(t: &ParameterTriple) -> Gamma2Identity {
    match (t.gamma, t.gamma_t, t.gamma_c) {
        (2, Some(gt), Some(gc)) => {
            if gt == gc {
                Gamma2Identity::Confirmed
            } else {
                Gamma2Identity::Refuted
            }
        }
        _ => Gamma2Identity::NotApplicable,
    }
}

/// Relations between gamma_t and gamma_c under which B8 is proved: the two
/// values are equal, or gamma_t is exactly one below gamma_c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum B8ProvedCase {
    Equal,
    OneBelow,
    Neither,
}

pub fn classify_b8_proved_case(t: &ParameterTriple) -> B8ProvedCase {
    match (t.gamma_t, t.gamma_c) {
        (Some(gt), Some(gc)) if gt == gc => B8ProvedCase::Equal,
        (Some(gt), Some(gc)) if gt + 1 == gc => B8ProvedCase::OneBelow,
        _ => B8ProvedCase::Neither,
    }
}
