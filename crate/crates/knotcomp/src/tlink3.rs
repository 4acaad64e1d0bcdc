//! Component counting for three-block T-links by iterated braid rewriting.
//!
//! Each round puts the link into a standard form (block widths
//! non-increasing, exponents reduced mod their widths) and then rewrites the
//! braid to one on strictly fewer strands:
//!
//! * if the leading exponent reaches the second width, the braid word is a
//!   power of a full cycle times a tail, and reading it on `q1` strands
//!   swaps the roles of width and exponent in the leading block — inverting
//!   the tail reverses the order of its two blocks, giving
//!   `(q1, p1; p3, -q3; p2, -q2)`;
//! * otherwise the two leading blocks merge after absorbing the leading
//!   block into full twists: `(q1, p2 - p1; p2, q1 + q2; p3, q3)`.
//!
//! Once some exponent vanishes its block is trivial and the count follows
//! from the remaining two-block link. The strand count drops every round
//! (except possibly straight into a terminal form), so the loop finishes.

use std::fmt;

use crate::arith::residue;
use crate::error::{Error, Result};
use crate::link::{TLink3, TwistedTorusLink};

/// A three-block T-link with non-increasing widths `p1 >= p2 >= p3 >= 1`
/// and reduced exponents `0 <= qi < pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StandardTLink3 {
    pairs: [(i64, i64); 3],
}

impl StandardTLink3 {
    /// Wraps pre-reduced pairs, verifying the standard-form invariants.
    pub fn new(pairs: [(i64, i64); 3]) -> Result<Self> {
        for &(p, q) in &pairs {
            if p < 1 {
                return Err(Error::Invariant {
                    context: "standard form requires positive block widths",
                });
            }
            if q < 0 || q >= p {
                return Err(Error::Invariant {
                    context: "standard form requires exponents reduced mod the width",
                });
            }
        }
        if pairs[0].0 < pairs[1].0 || pairs[1].0 < pairs[2].0 {
            return Err(Error::Invariant {
                context: "standard form requires non-increasing block widths",
            });
        }
        Ok(Self { pairs })
    }

    pub fn pairs(&self) -> [(i64, i64); 3] {
        self.pairs
    }

    /// Width of the defining braid (the leading block width).
    pub fn strands(&self) -> i64 {
        self.pairs[0].0
    }

    /// Index of the first vanishing exponent, if any.
    pub fn zero_exponent_index(&self) -> Option<usize> {
        self.pairs.iter().position(|&(_, q)| q == 0)
    }

    /// The same parameters as an unconstrained link.
    pub fn link(&self) -> TLink3 {
        TLink3::new(self.pairs).expect("standard form is a valid link")
    }
}

impl fmt::Display for StandardTLink3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.link().fmt(f)
    }
}

/// Puts a link into standard form without changing its closure.
///
/// Exponents are reduced mod their widths (adding full twists), and among
/// the block orderings reachable by cyclic rotation and by reversal with
/// negated exponents — both of which preserve the closure up to mirror
/// image — the lexicographically smallest one with non-increasing widths
/// is chosen. At least one rotation of the pairs or of their reversal
/// sorts any three widths, so a candidate always exists.
pub fn standard_form(link: &TLink3) -> Result<StandardTLink3> {
    let mut reduced = [(0i64, 0i64); 3];
    for (slot, (p, q)) in reduced.iter_mut().zip(link.pairs()) {
        *slot = (p, residue(q, p)?);
    }
    let mut reversed_negated = [(0i64, 0i64); 3];
    for (slot, &(p, q)) in reversed_negated.iter_mut().zip(reduced.iter().rev()) {
        *slot = (p, (p - q) % p);
    }

    let mut best: Option<[(i64, i64); 3]> = None;
    for base in [reduced, reversed_negated] {
        for start in 0..3 {
            let candidate = [base[start], base[(start + 1) % 3], base[(start + 2) % 3]];
            if candidate[0].0 >= candidate[1].0 && candidate[1].0 >= candidate[2].0 {
                let smaller = match best {
                    None => true,
                    Some(current) => flatten(&candidate) < flatten(&current),
                };
                if smaller {
                    best = Some(candidate);
                }
            }
        }
    }
    let pairs = best.ok_or(Error::Invariant {
        context: "no block ordering with non-increasing widths",
    })?;
    StandardTLink3::new(pairs)
}

fn flatten(pairs: &[(i64, i64); 3]) -> [i64; 6] {
    [
        pairs[0].0, pairs[0].1, pairs[1].0, pairs[1].1, pairs[2].0, pairs[2].1,
    ]
}

/// Outcome of one rewriting round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step3 {
    /// The link continues as this (unnormalized) successor.
    Next(TLink3),
    /// The exponent at this index vanishes; count via [`terminal_count3`].
    Done(usize),
}

/// Applies one rewriting round to a standard form.
pub fn reduce_step3(std: &StandardTLink3) -> Result<Step3> {
    if let Some(index) = std.zero_exponent_index() {
        return Ok(Step3::Done(index));
    }
    let [(p1, q1), (p2, q2), (p3, q3)] = std.pairs();
    if q1 >= p2 {
        Ok(Step3::Next(TLink3::new([
            (q1, p1),
            (p3, -q3),
            (p2, -q2),
        ])?))
    } else {
        let merged = q1.checked_add(q2).ok_or(Error::Overflow {
            context: "merged block exponent",
        })?;
        Ok(Step3::Next(TLink3::new([
            (q1, p2 - p1),
            (p2, merged),
            (p3, q3),
        ])?))
    }
}

/// Component count of a standard form whose first vanishing exponent is at
/// `index`: the trivial block either contributes straight strands (index 0)
/// or disappears, leaving a two-block link.
pub fn terminal_count3(std: &StandardTLink3) -> Result<i64> {
    let index = std.zero_exponent_index().ok_or(Error::NotTerminal)?;
    let [(p1, q1), (p2, q2), (p3, q3)] = std.pairs();
    match index {
        0 => {
            let rest = TwistedTorusLink::new(p2, q2, p3, q3)?;
            Ok(p1 - p2 + rest.component_count()?)
        }
        1 => TwistedTorusLink::new(p1, q1, p3, q3)?.component_count(),
        _ => TwistedTorusLink::new(p1, q1, p2, q2)?.component_count(),
    }
}

/// One round of the rewriting loop: the link as it arrived and its
/// standard form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round3 {
    pub raw: TLink3,
    pub standard: StandardTLink3,
}

/// Full record of a rewriting run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trace3 {
    /// Every round in order; the last round's standard form is terminal.
    pub rounds: Vec<Round3>,
    /// Index of the vanishing exponent in the final standard form.
    pub terminal_index: usize,
    /// The component count.
    pub count: i64,
}

fn run(link: &TLink3, mut record: Option<&mut Vec<Round3>>) -> Result<(usize, i64)> {
    let mut current = *link;
    let mut previous_strands: Option<i64> = None;
    loop {
        let std = standard_form(&current)?;
        if let Some(rounds) = record.as_deref_mut() {
            rounds.push(Round3 {
                raw: current,
                standard: std,
            });
        }
        let terminal = std.zero_exponent_index().is_some();
        if let Some(previous) = previous_strands {
            // Strand count must drop every round, except straight into a
            // terminal form (merging equal leading widths zeroes the first
            // exponent without shedding strands).
            if std.strands() >= previous && !terminal {
                return Err(Error::Invariant {
                    context: "rewriting round failed to reduce the strand count",
                });
            }
        }
        previous_strands = Some(std.strands());
        match reduce_step3(&std)? {
            Step3::Done(index) => return Ok((index, terminal_count3(&std)?)),
            Step3::Next(next) => current = next,
        }
    }
}

impl TLink3 {
    /// Number of components of the link's closure.
    pub fn component_count(&self) -> Result<i64> {
        Ok(run(self, None)?.1)
    }

    /// Runs the rewriting loop, recording every round.
    pub fn reduction_trace(&self) -> Result<Trace3> {
        let mut rounds = Vec::new();
        let (terminal_index, count) = run(self, Some(&mut rounds))?;
        Ok(Trace3 {
            rounds,
            terminal_index,
            count,
        })
    }
}
