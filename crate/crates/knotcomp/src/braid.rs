//! Explicit braid words for the defining braids.
//!
//! Letters are signed generator indices: `i` crosses strands `i - 1` and
//! `i` (0-based positions) positively, `-i` negatively. A block of width
//! `p` and exponent `q >= 0` contributes `(1 2 .. p-1)` repeated `q` times;
//! a negative exponent contributes the inverse word, i.e. the reversed
//! letters negated.

use crate::error::{Error, Result};
use crate::link::{TLink3, TwistedTorusLink};

/// Refuse to materialize words longer than this (memory guard).
pub const MAX_BRAID_LETTERS: i64 = 1 << 22;

/// A braid word on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: i64,
    pub letters: Vec<i64>,
}

fn block_letter_count(width: i64, exponent: i64) -> u128 {
    if width <= 1 {
        return 0;
    }
    (width as u128 - 1) * exponent.unsigned_abs() as u128
}

fn check_length(blocks: &[(i64, i64)]) -> Result<()> {
    let total: u128 = blocks
        .iter()
        .map(|&(width, exponent)| block_letter_count(width, exponent))
        .sum();
    if total > MAX_BRAID_LETTERS as u128 {
        return Err(Error::Unsupported {
            message: format!(
                "braid word needs {total} letters, above the limit of {MAX_BRAID_LETTERS}"
            ),
        });
    }
    Ok(())
}

fn push_block(letters: &mut Vec<i64>, width: i64, exponent: i64) {
    if width <= 1 || exponent == 0 {
        return;
    }
    if exponent > 0 {
        for _ in 0..exponent {
            letters.extend(1..width);
        }
    } else {
        for _ in 0..exponent.unsigned_abs() {
            letters.extend((1..width).rev().map(|g| -g));
        }
    }
}

fn word(strands: i64, blocks: &[(i64, i64)]) -> Result<BraidWord> {
    check_length(blocks)?;
    let mut letters = Vec::new();
    for &(width, exponent) in blocks {
        push_block(&mut letters, width, exponent);
    }
    Ok(BraidWord { strands, letters })
}

impl TwistedTorusLink {
    /// The defining braid word on `p` strands: the outer block, then the
    /// inner block (absent when `r = 0`).
    pub fn braid_word(&self) -> Result<BraidWord> {
        word(self.p(), &[(self.p(), self.q()), (self.r(), self.s())])
    }
}

impl TLink3 {
    /// The defining braid word, blocks in order.
    pub fn braid_word(&self) -> Result<BraidWord> {
        word(self.strands(), &self.pairs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ttl(p: i64, q: i64, r: i64, s: i64) -> TwistedTorusLink {
        TwistedTorusLink::new(p, q, r, s).unwrap()
    }

    #[test]
    fn positive_blocks() {
        let w = ttl(3, 2, 2, 1).braid_word().unwrap();
        assert_eq!(w.strands, 3);
        assert_eq!(w.letters, vec![1, 2, 1, 2, 1]);
    }

    #[test]
    fn negative_exponent_inverts_the_block() {
        let w = ttl(3, -1, 2, 0).braid_word().unwrap();
        assert_eq!(w.letters, vec![-2, -1]);
        let w = ttl(5, -1, 3, 5).braid_word().unwrap();
        assert_eq!(
            w.letters,
            vec![-4, -3, -2, -1, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2]
        );
    }

    #[test]
    fn trivial_blocks_emit_nothing() {
        assert_eq!(ttl(2, 0, 1, 5).braid_word().unwrap().letters, Vec::<i64>::new());
        assert_eq!(ttl(5, 3, 0, 0).braid_word().unwrap().letters, {
            let mut v = Vec::new();
            for _ in 0..3 {
                v.extend(1..5);
            }
            v
        });
    }

    #[test]
    fn three_block_word() {
        let link = TLink3::new([(4, 2), (3, 1), (2, 1)]).unwrap();
        let w = link.braid_word().unwrap();
        assert_eq!(w.strands, 4);
        assert_eq!(w.letters, vec![1, 2, 3, 1, 2, 3, 1, 2, 1]);
    }

    #[test]
    fn oversized_words_are_refused() {
        assert!(matches!(
            ttl(3, i64::MAX, 2, 1).braid_word(),
            Err(Error::Unsupported { .. })
        ));
    }

    /// Applies the word to strand positions, letter by letter, returning
    /// where each starting position ends up. Crossing sign is irrelevant
    /// to the permutation.
    fn word_permutation(w: &BraidWord) -> Vec<usize> {
        let mut images: Vec<usize> = (0..w.strands as usize).collect();
        for &letter in &w.letters {
            let i = letter.unsigned_abs() as usize;
            assert!(i >= 1 && i < w.strands as usize, "letter {letter} out of range");
            for img in images.iter_mut() {
                if *img == i - 1 {
                    *img = i;
                } else if *img == i {
                    *img = i - 1;
                }
            }
        }
        images
    }

    proptest! {
        #[test]
        fn word_agrees_with_the_strand_permutation(
            (p, r) in (2i64..8).prop_flat_map(|p| (Just(p), 0i64..=p)),
            q in -6i64..6,
            s in -6i64..6,
        ) {
            let link = ttl(p, q, r, s);
            let perm = link.strand_permutation().unwrap();
            prop_assert_eq!(
                word_permutation(&link.braid_word().unwrap()),
                perm.images()
            );
        }

        #[test]
        fn three_block_word_agrees_with_the_strand_permutation(
            pairs in proptest::array::uniform3((1i64..6, -5i64..5)),
        ) {
            let link = TLink3::new(pairs).unwrap();
            let perm = link.strand_permutation().unwrap();
            prop_assert_eq!(
                word_permutation(&link.braid_word().unwrap()),
                perm.images()
            );
        }
    }
}
