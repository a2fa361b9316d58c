//! Extended homological dimension values.
//!
//! Dimensions here take the value `-inf` (the zero module), an exact
//! non-negative integer, or a censored lower bound `>=c` produced when a
//! resolution is cut off at a configured cap. Comparisons against censored
//! values are three-valued: a bound check can be definitely true, definitely
//! false, or undecidable at the given cap.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtDim {
    /// Dimension of the zero module.
    MinusInfinity,
    Finite(u32),
    /// Censored: the true value lies in `[c, infinity]`.
    AtLeast(u32),
}

/// Outcome of a comparison that may be undecidable under censoring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truth {
    True,
    False,
    Unknown,
}

/// How two extended dimensions relate when checked for equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchKind {
    /// Both sides exact and equal.
    Exact,
    /// At least one side censored, and the intervals are compatible.
    ConsistentUnderCap,
    /// Definitely different.
    Mismatch,
}

impl ExtDim {
    /// Shift by one: absorbing on `-inf`.
    pub fn plus_one(self) -> ExtDim {
        match self {
            ExtDim::MinusInfinity => ExtDim::MinusInfinity,
            ExtDim::Finite(n) => ExtDim::Finite(n + 1),
            ExtDim::AtLeast(c) => ExtDim::AtLeast(c + 1),
        }
    }

    /// Lattice join, treating `>=c` as the interval `[c, infinity]`.
    pub fn max(self, other: ExtDim) -> ExtDim {
        use ExtDim::*;
        match (self, other) {
            (MinusInfinity, x) | (x, MinusInfinity) => x,
            (Finite(a), Finite(b)) => Finite(a.max(b)),
            (Finite(a), AtLeast(c)) | (AtLeast(c), Finite(a)) => AtLeast(a.max(c)),
            (AtLeast(c), AtLeast(d)) => AtLeast(c.max(d)),
        }
    }

    /// Is the dimension `<= bound`? (`bound` may be negative: only `-inf`
    /// passes then.)
    pub fn leq(self, bound: i64) -> Truth {
        match self {
            ExtDim::MinusInfinity => Truth::True,
            ExtDim::Finite(n) => {
                if (n as i64) <= bound {
                    Truth::True
                } else {
                    Truth::False
                }
            }
            ExtDim::AtLeast(c) => {
                if (c as i64) > bound {
                    Truth::False
                } else {
                    Truth::Unknown
                }
            }
        }
    }

    /// Strict comparison `self < other` under interval semantics.
    pub fn lt(self, other: ExtDim) -> Truth {
        use ExtDim::*;
        match (self, other) {
            (MinusInfinity, MinusInfinity) => Truth::False,
            (MinusInfinity, _) => Truth::True,
            (_, MinusInfinity) => Truth::False,
            (Finite(a), Finite(b)) => {
                if a < b {
                    Truth::True
                } else {
                    Truth::False
                }
            }
            (Finite(a), AtLeast(c)) => {
                if a < c {
                    Truth::True
                } else {
                    Truth::Unknown
                }
            }
            (AtLeast(c), Finite(b)) => {
                if b <= c {
                    Truth::False
                } else {
                    Truth::Unknown
                }
            }
            (AtLeast(_), AtLeast(_)) => Truth::Unknown,
        }
    }

    /// Equality check distinguishing exact agreement from agreement that is
    /// merely consistent with the censoring.
    pub fn matches(self, other: ExtDim) -> MatchKind {
        use ExtDim::*;
        match (self, other) {
            (MinusInfinity, MinusInfinity) => MatchKind::Exact,
            (Finite(a), Finite(b)) => {
                if a == b {
                    MatchKind::Exact
                } else {
                    MatchKind::Mismatch
                }
            }
            (MinusInfinity, _) | (_, MinusInfinity) => MatchKind::Mismatch,
            (AtLeast(c), Finite(b)) | (Finite(b), AtLeast(c)) => {
                if b >= c {
                    MatchKind::ConsistentUnderCap
                } else {
                    MatchKind::Mismatch
                }
            }
            (AtLeast(_), AtLeast(_)) => MatchKind::ConsistentUnderCap,
        }
    }

    pub fn is_censored(self) -> bool {
        matches!(self, ExtDim::AtLeast(_))
    }

    /// Rendering with the zero module printed as `-1` instead of `-inf`,
    /// for consumers expecting that convention.
    pub fn render_compat(self) -> String {
        match self {
            ExtDim::MinusInfinity => "-1".to_string(),
            other => other.to_string(),
        }
    }

    pub fn parse(s: &str) -> Option<ExtDim> {
        if s == "-inf" {
            return Some(ExtDim::MinusInfinity);
        }
        if let Some(rest) = s.strip_prefix(">=") {
            return rest.parse().ok().map(ExtDim::AtLeast);
        }
        s.parse().ok().map(ExtDim::Finite)
    }
}

impl fmt::Display for ExtDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDim::MinusInfinity => write!(f, "-inf"),
            ExtDim::Finite(n) => write!(f, "{n}"),
            ExtDim::AtLeast(c) => write!(f, ">={c}"),
        }
    }
}
