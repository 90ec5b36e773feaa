//! Non-binary Varshamov-Tenengolts codes defined over the differential vector.
//!
//! A word `x` over the alphabet `{0, .., q-1}` belongs to `VT*_a(n; q)` when the
//! weighted sum `Σ i·y_i` of its differential vector `y = Diff(x)` is congruent
//! to `a` modulo `q·n`. Every such code corrects one deletion or one insertion,
//! and the crate ships:
//!
//! * [`transform`]: `Diff`, its inverse, and the scaled `Γ_p` variant.
//! * [`code`]: syndrome arithmetic, membership, enumeration and size bounds.
//! * [`baseline`]: binary VT and Tenengolts `T_{a,b}` membership for comparison.
//! * [`decoder`]: the linear-time deletion corrector, the insertion corrector
//!   and the length-dispatching decoder.
//! * [`encoder`]: the non-systematic encoder with `⌈log_q n⌉ + 1` redundant
//!   symbols, and the systematic marker-framed encoder.
//! * [`channel`]: indel injection, error balls, brute-force oracles and fuzzing.
//! * [`cli`]: the batch command-line front end.

pub mod baseline;
pub mod channel;
pub mod cli;
pub mod code;
pub mod decoder;
pub mod encoder;
mod error;
pub mod math;
pub mod transform;
mod word;

pub use code::{CodeParams, Syndrome, VtStarCode, DEFAULT_ENUM_BUDGET};
pub use decoder::{CaseTag, DecodeReport, DecodeTrace, ErrorKind};
pub use error::{Error, Result};
pub use transform::{DiffVector, Multiplier};
pub use word::Word;
