use crate::code::weighted_sum;
use crate::math::digits_lsb_first;
use crate::{CodeParams, DecodeReport, DiffVector, Error, Multiplier, Result, VtStarCode, Word};

/// Intermediate values of one encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncoderTrace {
    /// Redundant positions (1-based, ascending): `q^0, .., q^{t-1}` and `n`.
    pub support: Vec<usize>,
    /// Message positions (1-based, ascending), the complement of `support`.
    pub info: Vec<usize>,
    /// `Syn(y)` with the redundant positions still zero.
    pub prefill_syndrome: u128,
    /// `a' = a - Syn(y) mod qn`.
    pub a_prime: u64,
    /// `⌊a' / n⌋`, written to `y_n`.
    pub alpha: u64,
    /// `a'' = a' - α·n < n`.
    pub a_dprime: u64,
    /// Base-q digits of `a''`, least significant first: `z_0 .. z_{t-1}`.
    pub digits: Vec<u32>,
    /// The completed transform-domain word.
    pub y: Word,
}

impl EncoderTrace {
    /// Digits in reading order `z_{t-1} .. z_0`.
    pub fn digits_msb_first(&self) -> Vec<u32> {
        self.digits.iter().rev().copied().collect()
    }
}

/// Non-systematic encoder into `VT*_a(n; q)` with `⌈log_q n⌉ + 1` redundant
/// symbols.
///
/// The message fills the transform-domain word `y` everywhere except at the
/// powers of `q` and at `n`. Those `t + 1` positions are then chosen so that
/// `Σ_{j<t} q^j·y_{q^j} + n·y_n = a' (mod qn)`, which is just the base-q
/// expansion of `a' mod n` plus `⌊a'/n⌋` at position `n`. The codeword is
/// the inverse transform of `y`.
#[derive(Debug, Clone)]
pub struct NonSystematicEncoder {
    code: VtStarCode,
    powers: Vec<usize>,
    support: Vec<usize>,
    info: Vec<usize>,
}

impl NonSystematicEncoder {
    pub fn new(params: CodeParams) -> Result<Self> {
        Self::with_code(VtStarCode::new(params))
    }

    pub fn with_multiplier(params: CodeParams, mult: Multiplier) -> Result<Self> {
        Self::with_code(VtStarCode::with_multiplier(params, mult)?)
    }

    fn with_code(code: VtStarCode) -> Result<Self> {
        let p = code.params();
        let (q, n, t) = (p.q() as usize, p.n(), p.t());
        if p.k() < 1 {
            return Err(Error::InvalidParams {
                field: "n",
                reason: format!("n = {n} leaves no room for a message when q = {q}"),
            });
        }
        let powers: Vec<usize> = (0..t as u32).map(|j| q.pow(j)).collect();
        // q^{t-1} < n, so the powers and n are distinct.
        debug_assert!(powers.last().is_none_or(|&last| last < n));
        let mut support = powers.clone();
        support.push(n);
        let mut is_support = vec![false; n + 1];
        for &s in &support {
            is_support[s] = true;
        }
        let info: Vec<usize> = (1..=n).filter(|&i| !is_support[i]).collect();
        debug_assert_eq!(info.len(), p.k());
        Ok(NonSystematicEncoder { code, powers, support, info })
    }

    pub fn code(&self) -> &VtStarCode {
        &self.code
    }

    pub fn params(&self) -> &CodeParams {
        self.code.params()
    }

    pub fn message_len(&self) -> usize {
        self.info.len()
    }

    pub fn redundancy(&self) -> usize {
        self.support.len()
    }

    pub fn encode(&self, msg: &Word) -> Result<Word> {
        self.encode_traced(msg).map(|(c, _)| c)
    }

    pub fn encode_traced(&self, msg: &Word) -> Result<(Word, EncoderTrace)> {
        let p = *self.params();
        msg.require_shape(self.message_len(), p.q())?;
        let n = p.n();
        let modulus = p.modulus();

        let mut y = vec![0u32; n];
        for (&pos, &s) in self.info.iter().zip(msg.symbols()) {
            y[pos - 1] = s;
        }
        let prefill = weighted_sum(&y);
        let a_prime = ((p.a() as u128 + modulus as u128 - prefill % modulus as u128)
            % modulus as u128) as u64;
        let alpha = a_prime / n as u64;
        let a_dprime = a_prime - alpha * n as u64;
        let digits = digits_lsb_first(a_dprime, p.q() as u64, self.powers.len());
        for (&pos, &z) in self.powers.iter().zip(&digits) {
            y[pos - 1] = z;
        }
        y[n - 1] = alpha as u32;
        assert_eq!(
            weighted_sum(&y) % modulus as u128,
            p.a() as u128,
            "encoded transform misses the target syndrome"
        );

        let y = Word::from_raw(y, p.q());
        let codeword = self.code.inverse_transform(&DiffVector::from_word(y.clone()));
        let trace = EncoderTrace {
            support: self.support.clone(),
            info: self.info.clone(),
            prefill_syndrome: prefill,
            a_prime,
            alpha,
            a_dprime,
            digits,
            y,
        };
        Ok((codeword, trace))
    }

    pub fn decode(&self, received: &Word) -> Result<Word> {
        self.decode_with_report(received).map(|(m, _)| m)
    }

    pub fn decode_with_report(&self, received: &Word) -> Result<(Word, DecodeReport)> {
        let report = self.code.decode(received)?;
        Ok((self.extract(&report.codeword), report))
    }

    /// Reads the message back out of a codeword.
    pub fn extract(&self, codeword: &Word) -> Word {
        let y = self.code.transform(codeword);
        let msg = self.info.iter().map(|&i| y.symbols()[i - 1]).collect();
        Word::from_raw(msg, codeword.q())
    }
}

pub fn encode2(p: &CodeParams, msg: &Word) -> Result<Word> {
    NonSystematicEncoder::new(*p)?.encode(msg)
}

pub fn decode2(p: &CodeParams, received: &Word) -> Result<Word> {
    NonSystematicEncoder::new(*p)?.decode(received)
}
