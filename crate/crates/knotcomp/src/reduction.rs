//! Strand-reduction engine for twisted torus links.
//!
//! The component count of `T(p,q;r,s)` is computed by rewriting the quadruple
//! with two count-preserving moves until one of the twist exponents becomes
//! zero, at which point the link degenerates to a torus link plus unknots and
//! the count can be read off directly.
//!
//! Every state `(p_i, q_i, r_i, s_i)` along the way satisfies
//! `p_i > q_i >= 0` and `p_i >= r_i > s_i >= 0`, and `p_i` never increases;
//! it strictly decreases except on a step whose successor is terminal.

use crate::arith::{gcd_nn, residue};
use crate::error::{Error, Result};
use crate::link::TwistedTorusLink;

/// How a reduction state was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// First state, straight from the input residues.
    Initial,
    /// Applied when `q_i >= r_i`: the outer block swaps roles with its
    /// exponent, `(q_i, [p_i]_{q_i}, r_i, [-s_i]_{r_i})`.
    Swap,
    /// Applied when `q_i < r_i`: the inner block becomes the braid,
    /// `(r_i, [s_i+q_i]_{r_i}, q_i, [r_i-p_i]_{q_i})`.
    Forming,
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::Initial => "initial",
            Branch::Swap => "swap",
            Branch::Forming => "forming",
        }
    }
}

/// One state of the reduction, tagged with the move that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionState {
    pub p: i64,
    pub q: i64,
    pub r: i64,
    pub s: i64,
    pub branch: Branch,
}

/// Which exponent hit zero, and therefore which count formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    /// `q = 0`: count is `p - r + gcd(r, s)`.
    QZero,
    /// `s = 0`: count is `gcd(p, q)`.
    SZero,
}

impl Terminal {
    pub fn name(&self) -> &'static str {
        match self {
            Terminal::QZero => "QZero",
            Terminal::SZero => "SZero",
        }
    }
}

/// Outcome of one reduction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Next(ReductionState),
    Done(Terminal),
}

/// Complete reduction record: every state visited, the terminal rule, and
/// the resulting component count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub states: Vec<ReductionState>,
    pub terminal: Terminal,
    pub count: i64,
}

fn check_state(st: &ReductionState) -> Result<()> {
    let ok = st.p >= 1
        && (0..st.p).contains(&st.q)
        && (1..=st.p).contains(&st.r)
        && (0..st.r).contains(&st.s);
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant {
            context: "reduction state out of range",
        })
    }
}

/// Initial reduction state of a link: both exponents replaced by their least
/// non-negative residues. Requires `r >= 1`; for `r = 0` there is no second
/// block and no reduction sequence (see [`TwistedTorusLink::component_count`]).
pub fn normalize(link: &TwistedTorusLink) -> Result<ReductionState> {
    if link.r() < 1 {
        return Err(Error::Unsupported {
            message: format!(
                "{link} has no inner block; the reduction needs r >= 1 \
                 (the count is gcd(p, q))"
            ),
        });
    }
    Ok(ReductionState {
        p: link.p(),
        q: residue(link.q(), link.p())?,
        r: link.r(),
        s: residue(link.s(), link.r())?,
        branch: Branch::Initial,
    })
}

/// One move of the reduction. Returns the successor state, or the terminal
/// rule if an exponent is already zero (`QZero` wins when both are).
pub fn reduce_step(st: &ReductionState) -> Result<Step> {
    check_state(st)?;
    if st.q == 0 {
        return Ok(Step::Done(Terminal::QZero));
    }
    if st.s == 0 {
        return Ok(Step::Done(Terminal::SZero));
    }
    let next = if st.q >= st.r {
        ReductionState {
            p: st.q,
            q: residue(st.p, st.q)?,
            r: st.r,
            s: residue(-st.s, st.r)?,
            branch: Branch::Swap,
        }
    } else {
        // q < r here, so r >= 2 and both exponents are small, but their sum
        // can still overflow when p is near i64::MAX.
        let lifted = st.s.checked_add(st.q).ok_or(Error::Overflow {
            context: "forming step exponent",
        })?;
        ReductionState {
            p: st.r,
            q: residue(lifted, st.r)?,
            r: st.q,
            s: residue(st.r - st.p, st.q)?,
            branch: Branch::Forming,
        }
    };
    Ok(Step::Next(next))
}

/// Component count read off a terminal state.
pub fn terminal_count(st: &ReductionState) -> Result<i64> {
    check_state(st)?;
    if st.q == 0 {
        // Torus link T(r,s) plus p - r unknots.
        Ok(st.p - st.r + gcd_nn(st.r, st.s))
    } else if st.s == 0 {
        // Torus link T(p,q).
        Ok(gcd_nn(st.p, st.q))
    } else {
        Err(Error::NotTerminal)
    }
}

/// Full reduction of a link, recording every intermediate state.
/// Requires `r >= 1`, like [`normalize`].
pub fn trace(link: &TwistedTorusLink) -> Result<ReductionTrace> {
    let mut st = normalize(link)?;
    let mut states = vec![st];
    let terminal = loop {
        match reduce_step(&st)? {
            Step::Done(t) => break t,
            Step::Next(next) => {
                st = next;
                states.push(next);
            }
        }
    };
    let count = terminal_count(&st)?;
    Ok(ReductionTrace {
        states,
        terminal,
        count,
    })
}

impl TwistedTorusLink {
    /// Number of components of the link.
    ///
    /// `r = 0` and `r = 1` make the inner block trivial, so the count is that
    /// of the torus link `T(p,q)`, namely `gcd(p, q)`; otherwise the link is
    /// reduced until an exponent vanishes.
    pub fn component_count(&self) -> Result<i64> {
        if self.r() <= 1 {
            return Ok(gcd_nn(self.p(), residue(self.q(), self.p())?));
        }
        let mut st = normalize(self)?;
        loop {
            match reduce_step(&st)? {
                Step::Done(_) => return terminal_count(&st),
                Step::Next(next) => st = next,
            }
        }
    }

    /// Full reduction record; see [`trace`].
    pub fn reduction_trace(&self) -> Result<ReductionTrace> {
        trace(self)
    }
}
