//! Link parameter types.
//!
//! A twisted torus link `T(p,q;r,s)` is the closure of the `p`-strand braid
//! `(s1 s2 ... s_{p-1})^q (s1 s2 ... s_{r-1})^s`. A three-block T-link
//! `T(p1,q1;p2,q2;p3,q3)` is the closure of `B1 B2 B3` on `max(p_i)` strands,
//! where block `B_i = (s1 ... s_{p_i - 1})^{q_i}`. Twist exponents may be any
//! integer; negative exponents twist in the opposite sense.

use std::fmt;

use crate::error::{Error, Result};

/// Parameters of a twisted torus link `T(p,q;r,s)`.
///
/// Constraints: `p >= 1` and `0 <= r <= p`. `r = 0` and `r = 1` are allowed
/// and make the second block trivial, so the link degenerates to the torus
/// link `T(p,q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistedTorusLink {
    p: i64,
    q: i64,
    r: i64,
    s: i64,
}

impl TwistedTorusLink {
    pub fn new(p: i64, q: i64, r: i64, s: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::InvalidParam {
                field: "p",
                message: format!("strand count must be at least 1, got {p}"),
            });
        }
        if r < 0 {
            return Err(Error::InvalidParam {
                field: "r",
                message: format!("inner block width must be non-negative, got {r}"),
            });
        }
        if r > p {
            return Err(Error::InvalidParam {
                field: "r",
                message: format!("inner block width {r} exceeds strand count {p}"),
            });
        }
        Ok(Self { p, q, r, s })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }
}

impl fmt::Display for TwistedTorusLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{};{},{})", self.p, self.q, self.r, self.s)
    }
}

/// Parameters of a three-block T-link `T(p1,q1;p2,q2;p3,q3)`.
///
/// Each block width must satisfy `p_i >= 1`; widths need not be ordered and
/// exponents may be any integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TLink3 {
    pairs: [(i64, i64); 3],
}

impl TLink3 {
    pub fn new(pairs: [(i64, i64); 3]) -> Result<Self> {
        const FIELDS: [&str; 3] = ["p1", "p2", "p3"];
        for (i, &(p, _)) in pairs.iter().enumerate() {
            if p < 1 {
                return Err(Error::InvalidParam {
                    field: FIELDS[i],
                    message: format!("block width must be at least 1, got {p}"),
                });
            }
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> [(i64, i64); 3] {
        self.pairs
    }

    /// Number of strands the defining braid runs on: the widest block.
    pub fn strands(&self) -> i64 {
        self.pairs.iter().map(|&(p, _)| p).max().unwrap()
    }
}

impl fmt::Display for TLink3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(p1, q1), (p2, q2), (p3, q3)] = self.pairs;
        write!(f, "T({p1},{q1};{p2},{q2};{p3},{q3})")
    }
}
