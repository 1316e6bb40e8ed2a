//! Exact integer arithmetic for the Beatty sequence ⌊n√2⌋ and the family of
//! parity conditions attached to it.
//!
//! Everything here runs on arbitrary-precision naturals; no floating point is
//! involved anywhere. The main entry points:
//!
//! - [`beatty_sqrt2`] and [`beatty_inv_sqrt2`] evaluate ⌊n√2⌋ and ⌊n/√2⌋
//!   through integer square roots.
//! - [`condition_vector`] evaluates six equivalent formulations of
//!   "⌊n√2⌋ is even" on exact reductions, and [`check_equivalence`] sweeps a
//!   range confirming they never disagree.
//! - [`sequences`] generates the parity bit stream and the two index
//!   sequences it induces, with OEIS b-file parsing for cross-checks.
//! - [`walk`] and [`render`] turn bit streams into turtle walks and then into
//!   SVG or PGM images.
//! - [`floor_n_sqrt2_oracle`] is an independent fixed-point route to ⌊n√2⌋,
//!   kept deliberately separate from the square-root route so each can audit
//!   the other.
//!
//! ```
//! use beatty_lab::{beatty_sqrt2, condition_vector, Natural};
//!
//! let terms: Vec<u64> = (1u64..=5)
//!     .map(|n| u64::try_from(beatty_sqrt2(&Natural::from(n))).unwrap())
//!     .collect();
//! assert_eq!(terms, [1, 2, 4, 5, 7]);
//!
//! let v = condition_vector(&Natural::from(2u32));
//! assert!(v.unanimous());
//! assert!(v.a);
//! ```

#![forbid(unsafe_code)]

pub mod beatty;
pub mod error;
pub mod exact;
mod jobs;
pub mod render;
pub mod sequences;
pub mod walk;

pub use beatty::{
    beatty_inv_sqrt2, beatty_sqrt2, check_equivalence, check_equivalence_jobs,
    complement_partner, complementarity_check, complementarity_check_jobs, condition_a,
    condition_b, condition_c, condition_d, condition_e, condition_f, condition_vector,
    condition_vector_with_sigma, eq1_residue, lemma1_holds, sigma_decimal,
    ComplementarityReport, ConditionVector, EquivalenceReport, RationalValue,
};
pub use error::{Error, Result};
pub use exact::{floor_n_sqrt2_oracle, floor_n_sqrt2_oracle_auto, isqrt, sqrt2_fixed, Natural};
pub use render::{render_pgm, render_svg, MAX_RASTER_SIDE};
pub use sequences::{
    compare_with_bfile, parity_bits, parse_bfile, satisfying_indices, satisfying_indices_jobs,
    serialize_bfile, shift_identity_check, BFileComparison, BFileEntry, BitStream, Mismatch,
    SequenceId, SequenceSpec,
};
pub use walk::{cloitre_walk, walk_stats, BoundingBox, Heading, Walk, WalkStats};
