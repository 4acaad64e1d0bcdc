//! Component counts for twisted torus links and three-block T-links.
//!
//! A twisted torus link `T(p, q; r, s)` is the closure of the braid on `p`
//! strands in which all strands twist `q` times and the first `r` of them
//! twist another `s` times; a three-block T-link stacks three such blocks.
//! The number of components of the closure is computed three independent
//! ways:
//!
//! * [`reduction`] and [`tlink3`] shrink the braid step by step until a
//!   block becomes trivial, which is fast even for very large parameters;
//! * [`perm`] counts cycles of the braid's strand permutation directly,
//!   serving as the brute-force reference;
//! * [`formulas`] evaluates closed forms on special parameter families.
//!
//! [`verify`] sweeps bounded parameter ranges and checks that all three
//! agree, and [`braid`] writes out the defining braid words.
//!
//! ```
//! use knotcomp::TwistedTorusLink;
//!
//! let link = TwistedTorusLink::new(5, -1, 3, 5)?;
//! assert_eq!(link.component_count()?, 1);
//! assert_eq!(link.oracle_count()?, 1);
//! # Ok::<(), knotcomp::Error>(())
//! ```

pub mod arith;
pub mod braid;
pub mod error;
pub mod formulas;
pub mod link;
pub mod perm;
pub mod reduction;
pub mod tlink3;
pub mod verify;

pub use braid::BraidWord;
pub use error::{Error, Result};
pub use link::{TLink3, TwistedTorusLink};
pub use perm::{ComponentPartition, StrandPermutation};
pub use reduction::ReductionTrace;
pub use tlink3::{StandardTLink3, Trace3};
pub use verify::Report;
