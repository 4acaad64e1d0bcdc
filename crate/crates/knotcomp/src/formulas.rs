//! Closed-form component counts for special parameter families.
//!
//! Each formula is a shortcut past the reduction loop for a family of
//! twisted torus links: inner blocks of width two, widths dividing
//! `gcd(p, q)`, and twist exponents `s = ±q`. The `s = ±q` family splits
//! into sub-rules keyed on the residues `[p]_q` and `[r]_{2q}`; several
//! sub-rules can apply to the same parameters, so every applicable one is
//! evaluated and they are required to agree before a count is reported.

use crate::arith::{gcd_nn, residue};
use crate::error::{Error, Result};

/// Which closed form produced a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Inner block of width two.
    WidthTwo,
    /// Inner width at most `gcd(p, q)`.
    GcdAtLeastR,
    /// `s = q`, `r` one or a half twist away from a multiple of `2q`.
    RUnitOrHalfTwist,
    /// `s = -q` with the inner block wider than `q`.
    NegQWideR,
    /// `s = q`, `p ≡ 1 (mod q)`, `r` in the low half of its period.
    ResidueOneLowTwist,
    /// `s = q`, `p ≡ 1 (mod q)`, `r` in the high half of its period.
    ResidueOneHighTwist,
    /// `s = -q`, `p ≡ 1 (mod q)`, inner block no wider than `q`.
    ResidueOneNegQ,
    /// `s = q`, `p ≡ -1 (mod q)`, `r` in the low half of its period.
    ResidueNegOneLowTwist,
    /// `s = q`, `p ≡ -1 (mod q)`, `r` in the high half of its period.
    ResidueNegOneHighTwist,
    /// `s = -q`, `p ≡ -1 (mod q)`, inner block narrower than `q`.
    ResidueNegOneNegQ,
    /// `q` divides `p`.
    PMultipleOfQ,
    /// `2q` divides `r` (and `q` does not divide `p`).
    RMultipleOfTwoQ,
    /// `[p]_q` and `[r]_{2q}` coincide.
    EqualResidues,
}

impl Rule {
    /// Stable kebab-case identifier for output.
    pub fn name(&self) -> &'static str {
        match self {
            Rule::WidthTwo => "width-two",
            Rule::GcdAtLeastR => "gcd-at-least-r",
            Rule::RUnitOrHalfTwist => "r-unit-or-half-twist",
            Rule::NegQWideR => "neg-q-wide-r",
            Rule::ResidueOneLowTwist => "residue-one-low-twist",
            Rule::ResidueOneHighTwist => "residue-one-high-twist",
            Rule::ResidueOneNegQ => "residue-one-neg-q",
            Rule::ResidueNegOneLowTwist => "residue-neg-one-low-twist",
            Rule::ResidueNegOneHighTwist => "residue-neg-one-high-twist",
            Rule::ResidueNegOneNegQ => "residue-neg-one-neg-q",
            Rule::PMultipleOfQ => "p-multiple-of-q",
            Rule::RMultipleOfTwoQ => "r-multiple-of-two-q",
            Rule::EqualResidues => "equal-residues",
        }
    }
}

impl std::fmt::Display for Rule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Sign of the twist exponent in the `s = ±q` family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The twist exponent this sign selects for a given `q`.
    pub fn apply(&self, q: i64) -> i64 {
        match self {
            Sign::Plus => q,
            Sign::Minus => -q,
        }
    }
}

/// A closed form together with the count it produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaMatch {
    pub rule: Rule,
    pub count: i64,
}

/// Component count of `T(p, q; 2, s)`. Applies to every such link.
pub fn formula_r2(p: i64, q: i64, s: i64) -> Result<FormulaMatch> {
    if p < 2 {
        return Err(Error::InvalidParam {
            field: "p",
            message: format!("width-two inner block requires p >= 2, got {p}"),
        });
    }
    let g = gcd_nn(p, q);
    let count = if s % 2 == 0 {
        g
    } else if g == 1 {
        2
    } else {
        g - 1
    };
    Ok(FormulaMatch {
        rule: Rule::WidthTwo,
        count,
    })
}

/// Component count of `T(p, q; r, s)` when `gcd(p, q) >= r`, else `None`.
pub fn formula_gcd_ge_r(p: i64, q: i64, r: i64, s: i64) -> Result<Option<FormulaMatch>> {
    if r < 1 || r > p {
        return Err(Error::InvalidParam {
            field: "r",
            message: format!("inner width must be in 1..={p}, got {r}"),
        });
    }
    let g = gcd_nn(p, q);
    if g < r {
        return Ok(None);
    }
    Ok(Some(FormulaMatch {
        rule: Rule::GcdAtLeastR,
        count: g - r + gcd_nn(r, s),
    }))
}

/// Every closed form applying to `T(p, q; r, ±q)`, in a fixed order.
///
/// Requires `q >= 1` and `1 <= r <= p`. The sub-rules overlap; when several
/// apply they must produce the same count, and a disagreement is reported
/// as an error rather than silently picking one.
pub fn s_eq_q_matches(p: i64, q: i64, r: i64, sign: Sign) -> Result<Vec<FormulaMatch>> {
    if q < 1 {
        return Err(Error::InvalidParam {
            field: "q",
            message: format!("the s = ±q family requires q >= 1, got {q}"),
        });
    }
    if r < 1 || r > p {
        return Err(Error::InvalidParam {
            field: "r",
            message: format!("inner width must be in 1..={p}, got {r}"),
        });
    }
    let two_q = q.checked_mul(2).ok_or(Error::Overflow {
        context: "doubled exponent",
    })?;
    let pq = residue(p, q)?;
    let k = residue(r, two_q)?;
    let res_one = residue(1, q)?;
    let res_neg_one = q - 1;

    let mut matches = Vec::new();
    let mut push = |rule: Rule, count: i64| matches.push(FormulaMatch { rule, count });

    match sign {
        Sign::Plus => {
            if pq != 0 && (k == 1 || k == q || k == two_q - 1) {
                push(Rule::RUnitOrHalfTwist, gcd_nn(p, q));
            }
            if pq == res_one && (1..=q).contains(&k) {
                push(Rule::ResidueOneLowTwist, gcd_nn(k, 1 - q));
            }
            if pq == res_one && (q + 1..=two_q - 1).contains(&k) {
                // 2q is even, hence at most i64::MAX - 1, so k + 2 fits.
                push(Rule::ResidueOneHighTwist, gcd_nn(k + 2, q + 1));
            }
            if pq == res_neg_one && (1..=q).contains(&k) {
                push(Rule::ResidueNegOneLowTwist, gcd_nn(k, q + 1));
            }
            if pq == res_neg_one && (q + 1..=two_q - 1).contains(&k) {
                push(Rule::ResidueNegOneHighTwist, gcd_nn(k - 2, q - 1));
            }
            if pq == 0 {
                push(Rule::PMultipleOfQ, (q - k).abs() + gcd_nn(k, q));
            }
            if k == 0 && pq != 0 {
                push(Rule::RMultipleOfTwoQ, q + gcd_nn(q, p));
            }
            if pq == k {
                push(Rule::EqualResidues, gcd_nn(r, two_q));
            }
        }
        Sign::Minus => {
            if pq != 0 && r > q {
                push(Rule::NegQWideR, r - q + gcd_nn(q, r - p));
            }
            if pq == res_one && r > 1 && r <= q {
                push(Rule::ResidueOneNegQ, gcd_nn(r, q + 1));
            }
            if pq == res_neg_one && r < q {
                push(Rule::ResidueNegOneNegQ, gcd_nn(r, 1 - q));
            }
            if pq == 0 {
                push(Rule::PMultipleOfQ, (r - q).abs() + gcd_nn(k, q));
            }
            if k == 0 && pq != 0 {
                push(Rule::RMultipleOfTwoQ, r - q + gcd_nn(q, p));
            }
            if pq == k {
                push(Rule::EqualResidues, r);
            }
        }
    }

    if let Some(first) = matches.first() {
        for m in &matches[1..] {
            if m.count != first.count {
                return Err(Error::FormulaMismatch {
                    message: format!(
                        "rules {} and {} disagree on T({p},{q};{r},{}): {} vs {}",
                        first.rule,
                        m.rule,
                        sign.apply(q),
                        first.count,
                        m.count
                    ),
                });
            }
        }
    }
    Ok(matches)
}

/// First applicable closed form for `T(p, q; r, ±q)`, or `None`.
pub fn formula_s_eq_q(p: i64, q: i64, r: i64, sign: Sign) -> Result<Option<FormulaMatch>> {
    Ok(s_eq_q_matches(p, q, r, sign)?.into_iter().next())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::TwistedTorusLink;
    use proptest::prelude::*;

    fn engine(p: i64, q: i64, r: i64, s: i64) -> i64 {
        TwistedTorusLink::new(p, q, r, s)
            .unwrap()
            .component_count()
            .unwrap()
    }

    #[test]
    fn width_two_examples() {
        assert_eq!(formula_r2(5, 3, 1).unwrap().count, 2);
        assert_eq!(formula_r2(6, 4, 2).unwrap().count, 2);
        assert_eq!(formula_r2(4, 2, 1).unwrap().count, 1);
        assert_eq!(formula_r2(5, 3, 1).unwrap().rule, Rule::WidthTwo);
        assert!(formula_r2(1, 3, 1).is_err());
    }

    #[test]
    fn gcd_bound_examples() {
        assert_eq!(formula_gcd_ge_r(6, 3, 3, 2).unwrap().unwrap().count, 1);
        assert_eq!(formula_gcd_ge_r(6, 4, 2, 2).unwrap().unwrap().count, 2);
        assert_eq!(formula_gcd_ge_r(8, 4, 3, 1).unwrap().unwrap().count, 2);
        assert_eq!(formula_gcd_ge_r(7, 3, 2, 1).unwrap(), None);
        assert!(formula_gcd_ge_r(5, 2, 0, 1).is_err());
        assert!(formula_gcd_ge_r(3, 1, 4, 1).is_err());
    }

    #[test]
    fn twist_family_examples() {
        let m = formula_s_eq_q(7, 3, 5, Sign::Plus).unwrap().unwrap();
        assert_eq!((m.rule, m.count), (Rule::RUnitOrHalfTwist, 1));
        let m = formula_s_eq_q(8, 3, 5, Sign::Minus).unwrap().unwrap();
        assert_eq!((m.rule, m.count), (Rule::NegQWideR, 5));
        let m = formula_s_eq_q(7, 3, 7, Sign::Plus).unwrap().unwrap();
        assert_eq!((m.rule, m.count), (Rule::RUnitOrHalfTwist, 1));
        assert_eq!(formula_s_eq_q(7, 5, 3, Sign::Plus).unwrap(), None);
    }

    #[test]
    fn overlapping_rules_agree() {
        let matches = s_eq_q_matches(7, 3, 5, Sign::Plus).unwrap();
        let summary: Vec<_> = matches.iter().map(|m| (m.rule, m.count)).collect();
        assert_eq!(
            summary,
            vec![
                (Rule::RUnitOrHalfTwist, 1),
                (Rule::ResidueOneHighTwist, 1)
            ]
        );

        let matches = s_eq_q_matches(5, 1, 3, Sign::Plus).unwrap();
        let summary: Vec<_> = matches.iter().map(|m| (m.rule, m.count)).collect();
        assert_eq!(
            summary,
            vec![
                (Rule::ResidueOneLowTwist, 1),
                (Rule::ResidueNegOneLowTwist, 1),
                (Rule::PMultipleOfQ, 1)
            ]
        );
    }

    #[test]
    fn twist_family_rejects_bad_parameters() {
        assert!(formula_s_eq_q(5, 0, 3, Sign::Plus).is_err());
        assert!(formula_s_eq_q(5, 2, 0, Sign::Plus).is_err());
        assert!(formula_s_eq_q(5, 2, 6, Sign::Minus).is_err());
    }

    #[test]
    fn doubled_exponent_overflow_is_reported() {
        assert_eq!(
            formula_s_eq_q(i64::MAX, i64::MAX / 2 + 1, 1, Sign::Plus),
            Err(Error::Overflow {
                context: "doubled exponent"
            })
        );
    }

    proptest! {
        #[test]
        fn width_two_matches_the_engine(
            p in 2i64..60,
            q in -100i64..100,
            s in -100i64..100,
        ) {
            prop_assert_eq!(formula_r2(p, q, s).unwrap().count, engine(p, q, 2, s));
        }

        #[test]
        fn gcd_bound_matches_the_engine(
            (p, r) in (1i64..50).prop_flat_map(|p| (Just(p), 1i64..=p)),
            q in -100i64..100,
            s in -100i64..100,
        ) {
            if let Some(m) = formula_gcd_ge_r(p, q, r, s).unwrap() {
                prop_assert_eq!(m.count, engine(p, q, r, s));
            }
        }

        #[test]
        fn twist_family_matches_the_engine(
            (p, r) in (1i64..40).prop_flat_map(|p| (Just(p), 1i64..=p)),
            q in 1i64..20,
            minus in any::<bool>(),
        ) {
            let sign = if minus { Sign::Minus } else { Sign::Plus };
            if let Some(m) = formula_s_eq_q(p, q, r, sign).unwrap() {
                prop_assert_eq!(m.count, engine(p, q, r, sign.apply(q)));
            }
        }
    }
}
