//! Residue and gcd helpers shared by every counting routine.

use crate::error::{Error, Result};

/// Least non-negative residue of `x` modulo `m`: the unique value in
/// `[0, m)` congruent to `x`. The modulus must be positive.
pub fn residue(x: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidParam {
            field: "m",
            message: format!("modulus must be positive, got {m}"),
        });
    }
    Ok(x.rem_euclid(m))
}

/// Greatest common divisor of `|a|` and `|b|`.
///
/// `gcd_nn(x, 0) == |x|` and `gcd_nn(0, 0) == 0`.
///
/// # Panics
///
/// If the result exceeds `i64::MAX`, which requires both arguments to be
/// `i64::MIN` or zero/`i64::MIN`. No link parameter set reaches this.
pub fn gcd_nn(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a.unsigned_abs(), b.unsigned_abs());
    while y != 0 {
        (x, y) = (y, x % y);
    }
    i64::try_from(x).expect("gcd magnitude exceeds i64::MAX")
}

/// gcd of every value in the slice (absolute values; 0 for an empty slice).
pub fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0, |g, &v| gcd_nn(g, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn residue_examples() {
        assert_eq!(residue(-2, 3).unwrap(), 1);
        assert_eq!(residue(7, 5).unwrap(), 2);
        assert_eq!(residue(0, 4).unwrap(), 0);
        assert_eq!(residue(i64::MIN, 3).unwrap(), 1);
    }

    #[test]
    fn residue_rejects_nonpositive_modulus() {
        assert!(matches!(
            residue(1, 0),
            Err(Error::InvalidParam { field: "m", .. })
        ));
        assert!(residue(1, -4).is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_nn(6, 4), 2);
        assert_eq!(gcd_nn(5, 0), 5);
        assert_eq!(gcd_nn(3, -3), 3);
        assert_eq!(gcd_nn(0, 0), 0);
        assert_eq!(gcd_nn(-12, -18), 6);
    }

    #[test]
    fn gcd_all_folds_over_slice() {
        assert_eq!(gcd_all(&[12, 8, -20]), 4);
        assert_eq!(gcd_all(&[7]), 7);
        assert_eq!(gcd_all(&[]), 0);
    }

    proptest! {
        #[test]
        fn residue_is_in_range(x in any::<i64>(), m in 1i64..1_000_000) {
            let r = residue(x, m).unwrap();
            prop_assert!(0 <= r && r < m);
        }

        #[test]
        fn residue_is_idempotent(x in any::<i64>(), m in 1i64..1_000_000) {
            let r = residue(x, m).unwrap();
            prop_assert_eq!(residue(r, m).unwrap(), r);
        }

        #[test]
        fn residue_ignores_multiples_of_m(x in -1_000_000i64..1_000_000, k in -1000i64..1000, m in 1i64..10_000) {
            prop_assert_eq!(residue(x + k * m, m).unwrap(), residue(x, m).unwrap());
        }

        #[test]
        fn gcd_divides_both(a in -100_000i64..100_000, b in -100_000i64..100_000) {
            let g = gcd_nn(a, b);
            if g != 0 {
                prop_assert_eq!(a % g, 0);
                prop_assert_eq!(b % g, 0);
            } else {
                prop_assert_eq!((a, b), (0, 0));
            }
        }

        #[test]
        fn gcd_is_symmetric(a in any::<i64>(), b in any::<i64>()) {
            prop_assume!(a != i64::MIN && b != i64::MIN);
            prop_assert_eq!(gcd_nn(a, b), gcd_nn(b, a));
        }
    }
}
