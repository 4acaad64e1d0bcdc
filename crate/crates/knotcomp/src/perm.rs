//! Brute-force component counting via strand permutations.
//!
//! Closing a braid joins each top strand position to the same bottom
//! position, so the components of the closure correspond exactly to the
//! cycles of the braid's strand permutation. A full cycle of `p` strands
//! twisted `q` times sends strand `i` to `[i - q]_p`; strands are 0-based
//! and blocks are applied left to right (first block first).
//!
//! This is independent of the reduction engine and serves as its test oracle.

use crate::arith::residue;
use crate::error::{Error, Result};
use crate::link::{TLink3, TwistedTorusLink};

/// Refuse to materialize image tables above this many strands (memory guard;
/// verification sweeps use well under a hundred).
pub const MAX_ORACLE_STRANDS: i64 = 1 << 24;

/// A bijection on strand indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrandPermutation {
    images: Vec<usize>,
}

impl StrandPermutation {
    /// Wraps an image table, verifying it is a bijection on `0..len`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img >= n || seen[img] {
                return Err(Error::NotBijective);
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Composite permutation applying `self` first, then `next`.
    pub fn then(&self, next: &StrandPermutation) -> Result<StrandPermutation> {
        if self.len() != next.len() {
            return Err(Error::Invariant {
                context: "composed permutations must act on the same strands",
            });
        }
        Ok(StrandPermutation {
            images: self.images.iter().map(|&i| next.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> StrandPermutation {
        let mut inv = vec![0; self.len()];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img] = i;
        }
        StrandPermutation { images: inv }
    }

    /// Number of disjoint cycles, counting fixed points as 1-cycles.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.len()];
        let mut cycles = 0;
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }

    /// The cycles as sorted index sets, ordered by smallest member.
    pub fn cycle_partition(&self) -> ComponentPartition {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut members = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                members.push(i);
                i = self.images[i];
            }
            members.sort_unstable();
            cycles.push(members);
        }
        ComponentPartition { cycles }
    }
}

/// Disjoint strand-index sets, one per link component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    cycles: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

fn checked_strand_count(n: i64) -> Result<usize> {
    if n > MAX_ORACLE_STRANDS {
        return Err(Error::Unsupported {
            message: format!(
                "{n} strands exceed the brute-force limit of {MAX_ORACLE_STRANDS}"
            ),
        });
    }
    Ok(n as usize)
}

/// Permutation of a single block: strand `i` goes to `[i - q]_p` for
/// `i < p`, and strands at or beyond `p` are fixed. Requires
/// `1 <= p <= strands`.
pub fn torus_block_perm(p: i64, q: i64, strands: i64) -> Result<StrandPermutation> {
    if p < 1 || p > strands {
        return Err(Error::InvalidParam {
            field: "p",
            message: format!("block width must be in 1..={strands}, got {p}"),
        });
    }
    let n = checked_strand_count(strands)?;
    let width = p as usize;
    let shift = residue(-q, p)? as usize; // [i - q]_p == (i + shift) mod p
    let images = (0..n)
        .map(|i| if i < width { (i + shift) % width } else { i })
        .collect();
    Ok(StrandPermutation { images })
}

impl TwistedTorusLink {
    /// Strand permutation of the defining braid: outer block first, then the
    /// inner block (absent when `r = 0`).
    pub fn strand_permutation(&self) -> Result<StrandPermutation> {
        let outer = torus_block_perm(self.p(), self.q(), self.p())?;
        if self.r() == 0 {
            return Ok(outer);
        }
        let inner = torus_block_perm(self.r(), self.s(), self.p())?;
        outer.then(&inner)
    }

    /// Component count by brute force: cycles of the strand permutation.
    pub fn oracle_count(&self) -> Result<i64> {
        Ok(self.strand_permutation()?.cycle_count() as i64)
    }
}

impl TLink3 {
    /// Strand permutation of the defining braid, blocks applied left to right.
    pub fn strand_permutation(&self) -> Result<StrandPermutation> {
        let n = self.strands();
        let mut perm = StrandPermutation::identity(checked_strand_count(n)?);
        for (p, q) in self.pairs() {
            perm = perm.then(&torus_block_perm(p, q, n)?)?;
        }
        Ok(perm)
    }

    /// Component count by brute force: cycles of the strand permutation.
    pub fn oracle_count(&self) -> Result<i64> {
        Ok(self.strand_permutation()?.cycle_count() as i64)
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
    fn block_perm_examples() {
        assert_eq!(
            torus_block_perm(5, 4, 5).unwrap().images(),
            &[1, 2, 3, 4, 0]
        );
        assert_eq!(
            torus_block_perm(3, 0, 5).unwrap(),
            StrandPermutation::identity(5)
        );
        assert_eq!(torus_block_perm(2, 1, 4).unwrap().images(), &[1, 0, 2, 3]);
    }

    #[test]
    fn block_perm_rejects_bad_width() {
        assert!(torus_block_perm(0, 1, 4).is_err());
        assert!(torus_block_perm(5, 1, 4).is_err());
    }

    #[test]
    fn rejects_absurd_strand_counts() {
        assert!(matches!(
            ttl(i64::MAX, 1, 2, 1).strand_permutation(),
            Err(Error::Unsupported { .. })
        ));
    }

    #[test]
    fn bijection_check() {
        assert!(StrandPermutation::new(vec![1, 2, 0]).is_ok());
        assert_eq!(
            StrandPermutation::new(vec![1, 1, 0]),
            Err(Error::NotBijective)
        );
        assert_eq!(StrandPermutation::new(vec![3]), Err(Error::NotBijective));
    }

    #[test]
    fn twisted_torus_permutations() {
        assert_eq!(
            ttl(5, 4, 3, 2).strand_permutation().unwrap().images(),
            &[2, 0, 3, 4, 1]
        );
        assert_eq!(
            ttl(4, 2, 2, 0).strand_permutation().unwrap().images(),
            &[2, 3, 0, 1]
        );
        assert_eq!(
            ttl(4, 0, 2, 0).strand_permutation().unwrap(),
            StrandPermutation::identity(4)
        );
    }

    #[test]
    fn tlink_permutation_and_cycles() {
        let link = TLink3::new([(4, 2), (3, 1), (2, 1)]).unwrap();
        let perm = link.strand_permutation().unwrap();
        assert_eq!(perm.images(), &[0, 3, 2, 1]);
        assert_eq!(perm.cycle_count(), 3);
        assert_eq!(
            perm.cycle_partition().cycles(),
            &[vec![0], vec![1, 3], vec![2]]
        );
    }

    #[test]
    fn cycle_count_examples() {
        assert_eq!(StrandPermutation::identity(5).cycle_count(), 5);
        assert_eq!(
            StrandPermutation::new(vec![1, 2, 3, 4, 0])
                .unwrap()
                .cycle_count(),
            1
        );
        assert_eq!(ttl(9, 6, 7, 4).oracle_count().unwrap(), 3);
    }

    #[test]
    fn partition_examples() {
        let p = StrandPermutation::new(vec![1, 0, 2]).unwrap();
        assert_eq!(p.cycle_partition().cycles(), &[vec![0, 1], vec![2]]);
        assert_eq!(
            ttl(5, 4, 3, 2)
                .strand_permutation()
                .unwrap()
                .cycle_partition()
                .cycles(),
            &[vec![0, 1, 2, 3, 4]]
        );
    }

    #[test]
    fn single_strand_blocks_are_trivial() {
        let link = TLink3::new([(5, 3), (1, 0), (1, 0)]).unwrap();
        assert_eq!(
            link.strand_permutation().unwrap(),
            torus_block_perm(5, 3, 5).unwrap()
        );
    }

    fn small_perm() -> impl Strategy<Value = StrandPermutation> {
        (1usize..40).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| StrandPermutation::new(v).unwrap())
        })
    }

    proptest! {
        #[test]
        fn block_perm_is_bijective(p in 1i64..200, q in -500i64..500, extra in 0i64..20) {
            let perm = torus_block_perm(p, q, p + extra).unwrap();
            prop_assert!(StrandPermutation::new(perm.images().to_vec()).is_ok());
        }

        #[test]
        fn full_cycle_block_has_gcd_many_cycles(p in 1i64..200, q in -500i64..500) {
            let perm = torus_block_perm(p, q, p).unwrap();
            let g = crate::arith::gcd_nn(p, q);
            let expected = if g == 0 { p } else { g };
            prop_assert_eq!(perm.cycle_count() as i64, expected);
        }

        #[test]
        fn inverse_preserves_cycle_count(perm in small_perm()) {
            prop_assert_eq!(perm.inverse().cycle_count(), perm.cycle_count());
        }

        #[test]
        fn composition_order_does_not_change_cycle_count(
            a in small_perm(),
            seed in any::<u64>(),
        ) {
            // b drawn on the same strand set as a, derived from the seed
            let n = a.len();
            let mut images: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                images.swap(i, (state % (i as u64 + 1)) as usize);
            }
            let b = StrandPermutation::new(images).unwrap();
            // a.then(b) and b.then(a) are conjugate, so cycle structure agrees
            prop_assert_eq!(
                a.then(&b).unwrap().cycle_count(),
                b.then(&a).unwrap().cycle_count()
            );
        }

        #[test]
        fn partition_sizes_sum_to_strands(perm in small_perm()) {
            let partition = perm.cycle_partition();
            prop_assert_eq!(partition.len(), perm.cycle_count());
            let total: usize = partition.cycles().iter().map(Vec::len).sum();
            prop_assert_eq!(total, perm.len());
        }
    }
}
