use crate::channel::is_single_indel;
use crate::code::weighted_sum;
use crate::math::{ceil_log, digits_lsb_first};
use crate::transform::diff_symbols;
use crate::{CodeParams, Error, Result, VtStarCode, Word};

/// Trailing symbols that separate consecutive frames.
pub const COMMA: [u32; 3] = [0, 1, 1];

/// `msg ∥ p p ∥ z_1 .. z_{t+1} ∥ 0 1 1` with `p = msg_k + 1 (mod q)`,
/// `t = ⌈log_q k⌉` and `z` the base-q digits (most significant first) of
/// `Syn(Diff(msg)) mod qk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystematicFrame {
    pub data: Word,
    pub marker: u32,
    pub syndrome_digits: Vec<u32>,
}

impl SystematicFrame {
    pub fn to_word(&self) -> Word {
        let q = self.data.q();
        let mut s = Vec::with_capacity(self.data.len() + self.syndrome_digits.len() + 5);
        s.extend_from_slice(self.data.symbols());
        s.extend([self.marker, self.marker]);
        s.extend_from_slice(&self.syndrome_digits);
        s.extend(COMMA);
        Word::from_raw(s, q)
    }
}

/// Total frame length `k + ⌈log_q k⌉ + 6`.
pub fn frame_len(q: u32, k: usize) -> usize {
    k + ceil_log(q as u64, k as u64) as usize + 6
}

/// Which parse of the received frame was accepted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameHypothesis {
    Intact,
    /// The first `k` symbols were taken verbatim.
    ErrorInRedundancy,
    /// The data segment was corrected with the syndrome read from the tail.
    ErrorInData,
}

/// Systematic codec for messages of length `k`.
///
/// Decoding tries both placements of the error: outside the data (then the
/// first `k` symbols are the message) and inside it (then the last `t + 6`
/// symbols are intact and carry the syndrome for a `VT*_a(k; q)` correction
/// of the data segment). A parse is accepted only when re-encoding its
/// message gives a frame one indel away from what was received.
#[derive(Debug, Clone)]
pub struct SystematicCodec {
    q: u32,
    k: usize,
    t: usize,
}

impl SystematicCodec {
    pub fn new(q: u32, k: usize) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParams { field: "q", reason: format!("must be at least 2, got {q}") });
        }
        if k < 2 {
            return Err(Error::InvalidParams { field: "k", reason: format!("must be at least 2, got {k}") });
        }
        Ok(SystematicCodec { q, k, t: ceil_log(q as u64, k as u64) as usize })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn message_len(&self) -> usize {
        self.k
    }

    pub fn frame_len(&self) -> usize {
        self.k + self.t + 6
    }

    /// Marker, syndrome digits and comma: `t + 6` symbols.
    pub fn redundancy(&self) -> usize {
        self.t + 6
    }

    fn modulus(&self) -> u64 {
        self.q as u64 * self.k as u64
    }

    pub fn frame(&self, msg: &Word) -> Result<SystematicFrame> {
        msg.require_shape(self.k, self.q)?;
        Ok(self.frame_unchecked(msg.symbols()))
    }

    fn frame_unchecked(&self, msg: &[u32]) -> SystematicFrame {
        let syn = (weighted_sum(&diff_symbols(msg, self.q)) % self.modulus() as u128) as u64;
        let mut digits = digits_lsb_first(syn, self.q as u64, self.t + 1);
        digits.reverse();
        SystematicFrame {
            data: Word::from_raw(msg.to_vec(), self.q),
            marker: (msg[self.k - 1] + 1) % self.q,
            syndrome_digits: digits,
        }
    }

    pub fn encode(&self, msg: &Word) -> Result<Word> {
        Ok(self.frame(msg)?.to_word())
    }

    pub fn decode(&self, received: &Word) -> Result<Word> {
        self.decode_detailed(received).map(|(m, _)| m)
    }

    pub fn decode_detailed(&self, received: &Word) -> Result<(Word, FrameHypothesis)> {
        if received.q() != self.q {
            return Err(Error::ShapeMismatch(format!(
                "alphabet size {} where {} was expected",
                received.q(),
                self.q
            )));
        }
        let frame_len = self.frame_len();
        let r = received.symbols();
        let len = r.len();
        if len == frame_len {
            let msg = &r[..self.k];
            if self.frame_unchecked(msg).to_word().symbols() == r {
                return Ok((Word::from_raw(msg.to_vec(), self.q), FrameHypothesis::Intact));
            }
            return Err(Error::Uncorrectable("frame of full length does not verify".into()));
        }
        if len + 1 != frame_len && len != frame_len + 1 {
            return Err(Error::ShapeMismatch(format!(
                "received length {len} is not within one of the frame length {frame_len}"
            )));
        }

        let redundancy = self.verified(&r[..self.k], r);
        if cfg!(not(debug_assertions)) {
            if let Some(msg) = redundancy {
                return Ok((msg, FrameHypothesis::ErrorInRedundancy));
            }
        }
        let data = self.data_hypothesis(r);
        match (redundancy, data) {
            (Some(a), Some(b)) => {
                debug_assert_eq!(a, b, "both frame parses verify with different messages");
                if a != b {
                    return Err(Error::Uncorrectable("ambiguous frame parse".into()));
                }
                Ok((a, FrameHypothesis::ErrorInRedundancy))
            }
            (Some(a), None) => Ok((a, FrameHypothesis::ErrorInRedundancy)),
            (None, Some(b)) => Ok((b, FrameHypothesis::ErrorInData)),
            (None, None) => Err(Error::Uncorrectable("no frame parse verifies".into())),
        }
    }

    fn data_hypothesis(&self, r: &[u32]) -> Option<Word> {
        let tail = self.redundancy();
        let data = &r[..r.len() - tail];
        let digits = &r[r.len() - tail + 2..r.len() - 3];
        let syn = digits.iter().fold(0u64, |acc, &d| acc * self.q as u64 + d as u64);
        let params = CodeParams::new(self.q, self.k, syn).ok()?;
        let report = VtStarCode::new(params)
            .decode(&Word::from_raw(data.to_vec(), self.q))
            .ok()?;
        self.verified(report.codeword.symbols(), r)
    }

    fn verified(&self, msg: &[u32], r: &[u32]) -> Option<Word> {
        let frame = self.frame_unchecked(msg).to_word();
        is_single_indel(frame.symbols(), r).then(|| Word::from_raw(msg.to_vec(), self.q))
    }
}

pub fn encode1(q: u32, k: usize, msg: &Word) -> Result<Word> {
    SystematicCodec::new(q, k)?.encode(msg)
}

pub fn decode1(q: u32, k: usize, received: &Word) -> Result<Word> {
    SystematicCodec::new(q, k)?.decode(received)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::{delete_at, insert_at};

    fn w(text: &str, q: u32) -> Word {
        Word::parse(text, q).unwrap()
    }

    #[test]
    fn frame_layout() {
        // Diff(220011) = 020201, Syn = 2·2 + 4·2 + 6·1 = 18 ≡ 0 (mod 18).
        let codec = SystematicCodec::new(3, 6).unwrap();
        let f = codec.frame(&w("220011", 3)).unwrap();
        assert_eq!(f.marker, 2);
        assert_eq!(f.syndrome_digits, vec![0, 0, 0]);
        assert_eq!(f.to_word(), w("22001122000011", 3));
        assert_eq!(codec.frame_len(), 14);
        assert_eq!(frame_len(3, 6), 14);
        assert_eq!(codec.redundancy(), 8);
    }

    #[test]
    fn zero_message_frame() {
        let codec = SystematicCodec::new(4, 5).unwrap();
        let f = codec.encode(&Word::zeros(5, 4).unwrap()).unwrap();
        assert_eq!(f, w("0000011000011", 4));
    }

    #[test]
    fn nonzero_syndrome_digits() {
        // Diff(0102) over q=3 = 2 1 1 2, Syn = 2 + 2 + 3 + 8 = 15 ≡ 3 (mod 12),
        // t = 2, so three base-3 digits of 3: 010.
        let codec = SystematicCodec::new(3, 4).unwrap();
        let f = codec.frame(&w("0102", 3)).unwrap();
        assert_eq!(f.syndrome_digits, vec![0, 1, 0]);
        assert_eq!(f.marker, 0);
    }

    #[test]
    fn marker_differs_from_last_symbol() {
        for q in 2..6 {
            let codec = SystematicCodec::new(q, 3).unwrap();
            for last in 0..q {
                let f = codec.frame(&Word::new(vec![0, 0, last], q).unwrap()).unwrap();
                assert_ne!(f.marker, last);
            }
        }
    }

    #[test]
    fn recovers_from_every_single_indel() {
        let codec = SystematicCodec::new(3, 6).unwrap();
        let msg = w("220011", 3);
        let frame = codec.encode(&msg).unwrap();
        assert_eq!(codec.decode_detailed(&frame).unwrap(), (msg.clone(), FrameHypothesis::Intact));
        for i in 1..=frame.len() {
            assert_eq!(codec.decode(&delete_at(&frame, i).unwrap()).unwrap(), msg, "del {i}");
        }
        for i in 1..=frame.len() + 1 {
            for v in 0..3 {
                assert_eq!(codec.decode(&insert_at(&frame, i, v).unwrap()).unwrap(), msg);
            }
        }
    }

    #[test]
    fn systematic_prefix() {
        let codec = SystematicCodec::new(4, 7).unwrap();
        let msg = w("3102231", 4);
        let frame = codec.encode(&msg).unwrap();
        assert_eq!(&frame.symbols()[..7], msg.symbols());
        for i in 8..=frame.len() {
            let r = delete_at(&frame, i).unwrap();
            assert_eq!(&r.symbols()[..7], msg.symbols());
        }
    }

    #[test]
    fn rejects_bad_input() {
        let codec = SystematicCodec::new(3, 6).unwrap();
        assert!(matches!(codec.decode(&w("2200", 3)), Err(Error::ShapeMismatch(_))));
        assert!(matches!(codec.decode(&w("22001122000012", 3)), Err(Error::Uncorrectable(_))));
        assert!(SystematicCodec::new(3, 1).is_err());
        assert!(matches!(encode1(3, 6, &w("22001", 3)), Err(Error::ShapeMismatch(_))));
    }
}
