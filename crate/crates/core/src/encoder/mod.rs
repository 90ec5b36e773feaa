//! Message encoders.
//!
//! [`NonSystematicEncoder`] maps `k = n - ⌈log_q n⌉ - 1` symbols straight into
//! `VT*_a(n; q)`. [`SystematicCodec`] keeps the message verbatim and appends a
//! marker, the syndrome digits and a comma.

mod nonsystematic;
mod systematic;

pub use nonsystematic::{decode2, encode2, EncoderTrace, NonSystematicEncoder};
pub use systematic::{decode1, encode1, frame_len, SystematicCodec, SystematicFrame};
