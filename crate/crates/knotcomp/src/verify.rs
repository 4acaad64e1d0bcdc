//! Exhaustive self-checks over bounded parameter sweeps.
//!
//! Every suite compares independent ways of computing the same quantity —
//! the reduction engine against brute-force cycle counting, closed forms
//! against both, and the engine against itself under parameter changes
//! that do not change the link. Suites run shards in parallel (one shard
//! per leading parameter) and merge results in order, so reports are
//! deterministic.

use rayon::prelude::*;

use crate::arith::{gcd_all, gcd_nn, residue};
use crate::error::{Error, Result};
use crate::formulas::{formula_gcd_ge_r, formula_r2, s_eq_q_matches, Sign};
use crate::link::{TLink3, TwistedTorusLink};

/// At most this many failures are kept per report (the count is exact).
pub const MAX_RECORDED_FAILURES: usize = 100;

/// One failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: &'static str,
    pub params: String,
    pub expected: String,
    pub got: String,
}

/// Outcome of one suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub suite: &'static str,
    pub checked: u64,
    pub failure_count: u64,
    /// The first [`MAX_RECORDED_FAILURES`] failures, in sweep order.
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Checker {
    checked: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl Checker {
    fn expect_eq(
        &mut self,
        check: &'static str,
        params: impl FnOnce() -> String,
        expected: i64,
        got: i64,
    ) {
        self.checked += 1;
        if expected == got {
            return;
        }
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                check,
                params: params(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    fn fail(&mut self, check: &'static str, params: String, expected: String, got: String) {
        self.checked += 1;
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                check,
                params,
                expected,
                got,
            });
        }
    }
}

fn run_shards<F>(suite: &'static str, shards: Vec<i64>, per_shard: F) -> Result<Report>
where
    F: Fn(i64, &mut Checker) -> Result<()> + Sync + Send,
{
    let checkers = shards
        .into_par_iter()
        .map(|shard| {
            let mut checker = Checker::default();
            per_shard(shard, &mut checker)?;
            Ok(checker)
        })
        .collect::<Result<Vec<Checker>>>()?;
    let mut report = Report {
        suite,
        checked: 0,
        failure_count: 0,
        failures: Vec::new(),
    };
    for checker in checkers {
        report.checked += checker.checked;
        report.failure_count += checker.failure_count;
        for failure in checker.failures {
            if report.failures.len() < MAX_RECORDED_FAILURES {
                report.failures.push(failure);
            }
        }
    }
    Ok(report)
}

/// Visits `T(p, q; r, s)` for `2 <= p <= p_max`, `1 <= r <= p`,
/// `-p <= q <= 2p`, `-r <= s <= 2r`.
fn for_each_twisted<F>(p: i64, mut body: F) -> Result<()>
where
    F: FnMut(TwistedTorusLink) -> Result<()>,
{
    for r in 1..=p {
        for q in -p..=2 * p {
            for s in -r..=2 * r {
                body(TwistedTorusLink::new(p, q, r, s)?)?;
            }
        }
    }
    Ok(())
}

/// Reduction engine vs brute-force cycle counting, twisted torus links.
pub fn oracle_ttl(p_max: i64) -> Result<Report> {
    run_shards("oracle-ttl", (2..=p_max).collect(), |p, checker| {
        for_each_twisted(p, |link| {
            checker.expect_eq(
                "count-vs-brute-force",
                || link.to_string(),
                link.oracle_count()?,
                link.component_count()?,
            );
            Ok(())
        })
    })
}

/// Rewriting loop vs brute-force cycle counting, three-block T-links with
/// `1 <= pi <= p_max` and `-pi <= qi <= pi`.
pub fn oracle_tlink(p_max: i64) -> Result<Report> {
    run_shards("oracle-tlink", (1..=p_max).collect(), move |p1, checker| {
        for q1 in -p1..=p1 {
            for p2 in 1..=p_max {
                for q2 in -p2..=p2 {
                    for p3 in 1..=p_max {
                        for q3 in -p3..=p3 {
                            let link = TLink3::new([(p1, q1), (p2, q2), (p3, q3)])?;
                            checker.expect_eq(
                                "count-vs-brute-force",
                                || link.to_string(),
                                link.oracle_count()?,
                                link.component_count()?,
                            );
                        }
                    }
                }
            }
        }
        Ok(())
    })
}

/// Engine self-consistency under parameter changes that preserve the link:
/// full twists, mirror image, exponent/width swap, block merging, and the
/// two trivial-block evaluations.
pub fn identities(p_max: i64) -> Result<Report> {
    fn nc(p: i64, q: i64, r: i64, s: i64) -> Result<i64> {
        TwistedTorusLink::new(p, q, r, s)?.component_count()
    }
    run_shards("identities", (2..=p_max).collect(), |p, checker| {
        for_each_twisted(p, |link| {
            let (q, r, s) = (link.q(), link.r(), link.s());
            let base = link.component_count()?;
            for (k, l) in [(1, 0), (0, 1), (-2, 3)] {
                checker.expect_eq(
                    "full-twist-invariance",
                    || format!("{link} with k={k}, l={l}"),
                    base,
                    nc(p, q + k * p, r, s + l * r)?,
                );
            }
            checker.expect_eq("mirror-invariance", || link.to_string(), base, nc(p, -q, r, -s)?);
            if residue(q, p)? == 0 {
                checker.expect_eq(
                    "trivial-outer-block",
                    || link.to_string(),
                    p - r + gcd_nn(r, s),
                    base,
                );
            }
            if residue(s, r)? == 0 {
                checker.expect_eq(
                    "trivial-inner-block",
                    || link.to_string(),
                    gcd_nn(p, q),
                    base,
                );
            }
            if q >= r && q <= p {
                checker.expect_eq("exponent-width-swap", || link.to_string(), base, nc(q, p, r, -s)?);
                checker.expect_eq("exponent-width-swap", || link.to_string(), base, nc(q, -p, r, s)?);
            }
            if q > 0 && q < r {
                checker.expect_eq("block-merge", || link.to_string(), base, nc(r, s + q, q, r - p)?);
            }
            Ok(())
        })
    })
}

/// Closed forms vs the engine and vs brute force, over their parameter
/// families.
pub fn formulas(p_max: i64) -> Result<Report> {
    run_shards("formulas", (1..=p_max).collect(), |p, checker| {
        let compare = |checker: &mut Checker,
                           rule: &'static str,
                           count: i64,
                           link: &TwistedTorusLink|
         -> Result<()> {
            checker.expect_eq(rule, || format!("{link} vs engine"), count, link.component_count()?);
            checker.expect_eq(rule, || format!("{link} vs brute force"), count, link.oracle_count()?);
            Ok(())
        };
        if p >= 2 {
            for q in -p..=2 * p {
                for s in -p..=2 * p {
                    let m = formula_r2(p, q, s)?;
                    let link = TwistedTorusLink::new(p, q, 2, s)?;
                    compare(checker, m.rule.name(), m.count, &link)?;
                }
            }
        }
        for r in 1..=p {
            for q in -p..=2 * p {
                for s in -r..=2 * r {
                    if let Some(m) = formula_gcd_ge_r(p, q, r, s)? {
                        let link = TwistedTorusLink::new(p, q, r, s)?;
                        compare(checker, m.rule.name(), m.count, &link)?;
                    }
                }
            }
        }
        for r in 1..=p {
            for q in 1..=2 * p {
                for sign in [Sign::Plus, Sign::Minus] {
                    match s_eq_q_matches(p, q, r, sign) {
                        Ok(matches) => {
                            if let Some(m) = matches.first() {
                                let link = TwistedTorusLink::new(p, q, r, sign.apply(q))?;
                                compare(checker, m.rule.name(), m.count, &link)?;
                            }
                        }
                        Err(Error::FormulaMismatch { message }) => checker.fail(
                            "rule-agreement",
                            format!("T({p},{q};{r},{})", sign.apply(q)),
                            "agreeing closed forms".to_string(),
                            message,
                        ),
                        Err(other) => return Err(other),
                    }
                }
            }
        }
        Ok(())
    })
}

/// The gcd of all parameters divides the component count.
pub fn gcd_divisibility(p_max: i64, tlink_p_max: i64) -> Result<Report> {
    let twisted = run_shards("gcd-divisibility", (2..=p_max).collect(), |p, checker| {
        for_each_twisted(p, |link| {
            let d = gcd_all(&[p, link.q(), link.r(), link.s()]);
            checker.expect_eq(
                "twisted-torus",
                || format!("{link} with gcd {d}"),
                0,
                link.component_count()? % d,
            );
            Ok(())
        })
    })?;
    let three_block = run_shards(
        "gcd-divisibility",
        (1..=tlink_p_max).collect(),
        move |p1, checker| {
            for q1 in -p1..=p1 {
                for p2 in 1..=tlink_p_max {
                    for q2 in -p2..=p2 {
                        for p3 in 1..=tlink_p_max {
                            for q3 in -p3..=p3 {
                                let link = TLink3::new([(p1, q1), (p2, q2), (p3, q3)])?;
                                let d = gcd_all(&[p1, q1, p2, q2, p3, q3]);
                                checker.expect_eq(
                                    "three-block",
                                    || format!("{link} with gcd {d}"),
                                    0,
                                    link.component_count()? % d,
                                );
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    )?;
    let mut failures = twisted.failures;
    for failure in three_block.failures {
        if failures.len() < MAX_RECORDED_FAILURES {
            failures.push(failure);
        }
    }
    Ok(Report {
        suite: "gcd-divisibility",
        checked: twisted.checked + three_block.checked,
        failure_count: twisted.failure_count + three_block.failure_count,
        failures,
    })
}

/// `T(2n+3, 2n+2; 2n+1, 2n)` is a knot for every `n >= 1`.
pub fn knot_family(n_max: i64) -> Result<Report> {
    run_shards("knot-family", (1..=n_max).collect(), |n, checker| {
        let link = TwistedTorusLink::new(2 * n + 3, 2 * n + 2, 2 * n + 1, 2 * n)?;
        checker.expect_eq("single-component", || link.to_string(), 1, link.component_count()?);
        Ok(())
    })
}

/// Runs every suite with the given bounds.
pub fn all_suites(p_max: i64, tlink_p_max: i64, n_max: i64) -> Result<Vec<Report>> {
    Ok(vec![
        oracle_ttl(p_max)?,
        oracle_tlink(tlink_p_max)?,
        identities(p_max)?,
        formulas(p_max)?,
        gcd_divisibility(p_max, tlink_p_max)?,
        knot_family(n_max)?,
    ])
}
