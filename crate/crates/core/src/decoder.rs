//! Single deletion and single insertion correction for `VT*_a(n; q)`.
//!
//! Deletions are located from two integers computed on the received word's
//! transform `y'`: `Δ = a - Syn(y') (mod qn)` and `s = Σ y'_j`. Removing `x_i`
//! merges `y_{i-1} y_i` into one entry; the merge either stays below `q`
//! (then `Δ` is the suffix sum from the merged entry on and `Δ <= s`) or
//! wraps (then `Δ = q·(i-1) + suffix` and `Δ >= s + q + 1`). Removing `x_1`
//! drops `y_1` and gives `Δ = y_1 + s ∈ [s, s+q-1]`. Both localisation
//! functions are monotone in the index, so the position is found by binary
//! search over the suffix sums.

use std::fmt;

use crate::code::weighted_sum;
use crate::transform::gamma_symbols;
use crate::{CodeParams, Error, Result, VtStarCode, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    None,
    Deletion,
    Insertion,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ErrorKind::None => "none",
            ErrorKind::Deletion => "deletion",
            ErrorKind::Insertion => "insertion",
        })
    }
}

/// Which branch of the deletion decoder fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// First symbol deleted: `s <= Δ <= s + q - 1`.
    Case1,
    /// Merged entry did not wrap: `Δ < s`.
    Case2a,
    /// Merged entry wrapped modulo `q`: `Δ > s + q`.
    Case2b,
    /// Received word was already a codeword.
    Identity,
    /// Insertion located by the candidate scan.
    Scan,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::Case1 => "1",
            CaseTag::Case2a => "2a",
            CaseTag::Case2b => "2b",
            CaseTag::Identity => "identity",
            CaseTag::Scan => "scan",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeTrace {
    /// Deletions: `a - Syn(y') mod qn`. Insertions: `Syn(y') - a mod qn`.
    pub delta: u64,
    /// Sum of the received word's transform-domain symbols.
    pub s: u64,
    pub case: CaseTag,
    /// Localisation index `h` in the transform domain (deletions only).
    pub h: Option<usize>,
    /// Comparisons spent locating the error.
    pub comparisons: u32,
    /// Unreduced `Syn(y')` of the received word.
    pub received_syndrome: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub codeword: Word,
    pub kind: ErrorKind,
    /// 1-based. Deletion: where `symbol` goes back into the received word.
    /// Insertion: which received symbol was dropped.
    pub position: Option<usize>,
    pub symbol: Option<u32>,
    pub trace: DecodeTrace,
}

impl VtStarCode {
    /// Corrects one deletion. `received` must have length `n - 1`.
    pub fn decode_deletion(&self, received: &Word) -> Result<DecodeReport> {
        let (q, n) = (self.params().q(), self.params().n());
        received.require_shape(n - 1, q)?;
        let qq = q as u64;
        let a = self.params().a();
        let modulus = self.params().modulus();
        let r = received.symbols();

        let symbol = ((self.parity_residue() as u64 + qq - received.symbol_sum() % qq) % qq) as u32;

        let y = gamma_symbols(r, self.multiplier());
        // suffix[h - 1] = Σ_{j=h}^{n-1} y'_j for 1-based h; suffix[n - 1] = 0.
        let mut suffix = vec![0u64; n];
        for j in (0..n - 1).rev() {
            suffix[j] = suffix[j + 1] + y[j] as u64;
        }
        let s = suffix[0];
        let raw = weighted_sum(&y);
        let delta = ((a as u128 + modulus as u128 - raw % modulus as u128) % modulus as u128) as u64;

        let mut comparisons = 0u32;
        let (case, h) = if delta < s {
            let h = last_true(1, n - 1, &mut comparisons, |h| suffix[h - 1] > delta);
            (CaseTag::Case2a, Some(h))
        } else if delta < s + qq {
            (CaseTag::Case1, None)
        } else if delta > s + qq {
            let h = last_true(1, n - 1, &mut comparisons, |h| qq * h as u64 + suffix[h - 1] < delta);
            (CaseTag::Case2b, Some(h))
        } else {
            return Err(Error::Uncorrectable(format!(
                "delta = s + q = {delta} cannot arise from a single deletion"
            )));
        };

        let index = h.unwrap_or(0);
        let mut x = Vec::with_capacity(n);
        x.extend_from_slice(&r[..index]);
        x.push(symbol);
        x.extend_from_slice(&r[index..]);
        if !self.is_member_unchecked(&x) {
            return Err(Error::Uncorrectable(
                "deletion hypothesis does not yield a codeword".into(),
            ));
        }
        Ok(DecodeReport {
            codeword: Word::from_raw(x, q),
            kind: ErrorKind::Deletion,
            position: Some(index + 1),
            symbol: Some(symbol),
            trace: DecodeTrace {
                delta,
                s,
                case,
                h,
                comparisons,
                received_syndrome: raw,
            },
        })
    }

    /// Corrects one insertion. `received` must have length `n + 1`.
    ///
    /// Every candidate removal is scored in O(1) from prefix and suffix sums of
    /// the received transform, so the whole scan is linear.
    pub fn decode_insertion(&self, received: &Word) -> Result<DecodeReport> {
        let (q, n) = (self.params().q(), self.params().n());
        received.require_shape(n + 1, q)?;
        let a = self.params().a() as u128;
        let modulus = self.params().modulus() as u128;
        let r = received.symbols();
        let m = n + 1;

        let u = gamma_symbols(r, self.multiplier());
        // prefix_w[j] = Σ_{l<j} (l+1)·u[l]; suffix_u[j] = Σ_{l>=j} u[l];
        // suffix_w[j] = Σ_{l>=j} (l+1)·u[l].
        let mut prefix_w = vec![0u128; m + 1];
        for l in 0..m {
            prefix_w[l + 1] = prefix_w[l] + (l as u128 + 1) * u[l] as u128;
        }
        let mut suffix_u = vec![0u128; m + 1];
        let mut suffix_w = vec![0u128; m + 1];
        for l in (0..m).rev() {
            suffix_u[l] = suffix_u[l + 1] + u[l] as u128;
            suffix_w[l] = suffix_w[l + 1] + (l as u128 + 1) * u[l] as u128;
        }
        // Syndrome of the transform after dropping r[j] (0-based).
        let candidate = |j: usize| -> u128 {
            let tail = suffix_w[j + 1] - suffix_u[j + 1];
            if j == 0 {
                tail
            } else {
                let merged = (u[j - 1] + u[j]) % q;
                prefix_w[j - 1] + j as u128 * merged as u128 + tail
            }
        };

        let mut comparisons = 0u32;
        let mut found = None;
        for j in 0..m {
            comparisons += 1;
            if candidate(j) % modulus == a {
                found = Some(j);
                break;
            }
        }
        let j = found.ok_or_else(|| {
            Error::Uncorrectable("no single insertion explains the received word".into())
        })?;

        // Any other passing removal must lie in the same run and so give the
        // same codeword.
        #[cfg(debug_assertions)]
        for other in j + 1..m {
            if candidate(other) % modulus == a {
                assert!(
                    r[j..=other].iter().all(|&v| v == r[j]),
                    "insertion candidates {j} and {other} disagree"
                );
            }
        }

        let mut x = Vec::with_capacity(n);
        x.extend_from_slice(&r[..j]);
        x.extend_from_slice(&r[j + 1..]);
        debug_assert!(self.is_member_unchecked(&x));

        let raw = prefix_w[m];
        Ok(DecodeReport {
            codeword: Word::from_raw(x, q),
            kind: ErrorKind::Insertion,
            position: Some(j + 1),
            symbol: Some(r[j]),
            trace: DecodeTrace {
                delta: ((raw % modulus + modulus - a) % modulus) as u64,
                s: suffix_u[0] as u64,
                case: CaseTag::Scan,
                h: None,
                comparisons,
                received_syndrome: raw,
            },
        })
    }

    /// Dispatches on length: `n - 1` deletion, `n + 1` insertion, `n` must
    /// already be a codeword.
    pub fn decode(&self, received: &Word) -> Result<DecodeReport> {
        let (q, n) = (self.params().q(), self.params().n());
        if received.q() != q {
            return Err(Error::ShapeMismatch(format!(
                "alphabet size {} where {q} was expected",
                received.q()
            )));
        }
        match received.len() {
            len if len + 1 == n => self.decode_deletion(received),
            len if len == n + 1 => self.decode_insertion(received),
            len if len == n => {
                let y = gamma_symbols(received.symbols(), self.multiplier());
                let raw = weighted_sum(&y);
                let modulus = self.params().modulus() as u128;
                if raw % modulus != self.params().a() as u128 {
                    return Err(Error::Uncorrectable(
                        "word of code length is not a codeword".into(),
                    ));
                }
                Ok(DecodeReport {
                    codeword: received.clone(),
                    kind: ErrorKind::None,
                    position: None,
                    symbol: None,
                    trace: DecodeTrace {
                        delta: 0,
                        s: y.iter().map(|&v| v as u64).sum(),
                        case: CaseTag::Identity,
                        h: None,
                        comparisons: 0,
                        received_syndrome: raw,
                    },
                })
            }
            len => Err(Error::ShapeMismatch(format!(
                "received length {len} is not one of {}, {n}, {}",
                n - 1,
                n + 1
            ))),
        }
    }
}

/// Largest `h` in `[lo, hi]` with `pred(h)`, given `pred(lo)` holds and `pred`
/// is true on a prefix of the range.
fn last_true(mut lo: usize, mut hi: usize, comparisons: &mut u32, pred: impl Fn(usize) -> bool) -> usize {
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        *comparisons += 1;
        if pred(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

pub fn decode_deletion(p: &CodeParams, received: &Word) -> Result<DecodeReport> {
    VtStarCode::new(*p).decode_deletion(received)
}

pub fn decode_insertion(p: &CodeParams, received: &Word) -> Result<DecodeReport> {
    VtStarCode::new(*p).decode_insertion(received)
}

pub fn decode(p: &CodeParams, received: &Word) -> Result<DecodeReport> {
    VtStarCode::new(*p).decode(received)
}
