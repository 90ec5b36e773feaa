//! The code family `VT*_a(n; q)`.

use crate::math::{ceil_log, checked_pow};
use crate::transform::{gamma_symbols, inv_gamma_symbols};
use crate::{DiffVector, Error, Multiplier, Result, Word};

/// Largest `q^n` that exhaustive operations will walk through by default.
pub const DEFAULT_ENUM_BUDGET: u64 = 10_000_000;

/// Parameters `(q, n, a)` of one code, with `a ∈ Z_{qn}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    q: u32,
    n: usize,
    a: u64,
}

impl CodeParams {
    pub fn new(q: u32, n: usize, a: u64) -> Result<Self> {
        if q < 2 {
            return Err(invalid("q", format!("must be at least 2, got {q}")));
        }
        if n < 2 {
            return Err(invalid("n", format!("must be at least 2, got {n}")));
        }
        let modulus = (q as u64)
            .checked_mul(n as u64)
            .filter(|m| *m <= u64::MAX / 4)
            .ok_or_else(|| invalid("n", format!("q*n overflows for q={q}, n={n}")))?;
        if a >= modulus {
            return Err(invalid("a", format!("must be below q*n = {modulus}, got {a}")));
        }
        Ok(CodeParams { q, n, a })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// The syndrome modulus `q·n`.
    pub fn modulus(&self) -> u64 {
        self.q as u64 * self.n as u64
    }

    /// `t = ⌈log_q n⌉`.
    pub fn t(&self) -> usize {
        ceil_log(self.q as u64, self.n as u64) as usize
    }

    /// Message length `k = n - t - 1` of the non-systematic encoder; zero when
    /// the code is too short to carry a message.
    pub fn k(&self) -> usize {
        self.n.saturating_sub(self.t() + 1)
    }

    pub fn with_a(&self, a: u64) -> Result<Self> {
        Self::new(self.q, self.n, a)
    }
}

fn invalid(field: &'static str, reason: String) -> Error {
    Error::InvalidParams { field, reason }
}

/// Weighted sum `Σ i·y_i` (1-based) together with its residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Syndrome {
    pub raw: u128,
    pub value: u64,
    pub modulus: u64,
}

impl Syndrome {
    /// Syndrome modulo `q·len` of a transform-domain word.
    pub fn of(y: &Word) -> Self {
        Self::with_modulus(y, y.q() as u64 * y.len() as u64)
    }

    pub fn with_modulus(y: &Word, modulus: u64) -> Self {
        let raw = weighted_sum(y.symbols());
        let value = if modulus == 0 { 0 } else { (raw % modulus as u128) as u64 };
        Syndrome { raw, value, modulus }
    }
}

pub fn weighted_sum(symbols: &[u32]) -> u128 {
    symbols
        .iter()
        .enumerate()
        .map(|(i, &s)| (i as u128 + 1) * s as u128)
        .sum()
}

/// One code `VT*_a(n; q)` built over `Γ_p` (the plain differential vector by
/// default).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VtStarCode {
    params: CodeParams,
    mult: Multiplier,
}

impl VtStarCode {
    pub fn new(params: CodeParams) -> Self {
        let mult = Multiplier::identity(params.q()).expect("q >= 2");
        VtStarCode { params, mult }
    }

    pub fn with_multiplier(params: CodeParams, mult: Multiplier) -> Result<Self> {
        if mult.q() != params.q() {
            return Err(Error::ShapeMismatch(format!(
                "multiplier is modulo {} but the code has q={}",
                mult.q(),
                params.q()
            )));
        }
        Ok(VtStarCode { params, mult })
    }

    pub fn params(&self) -> &CodeParams {
        &self.params
    }

    pub fn multiplier(&self) -> Multiplier {
        self.mult
    }

    pub fn transform(&self, x: &Word) -> DiffVector {
        DiffVector::from_word(Word::from_raw(gamma_symbols(x.symbols(), self.mult), x.q()))
    }

    pub fn inverse_transform(&self, y: &DiffVector) -> Word {
        Word::from_raw(inv_gamma_symbols(y.symbols(), self.mult), self.params.q())
    }

    pub fn is_member(&self, x: &Word) -> Result<bool> {
        x.require_shape(self.params.n(), self.params.q())?;
        Ok(self.is_member_unchecked(x.symbols()))
    }

    pub(crate) fn is_member_unchecked(&self, x: &[u32]) -> bool {
        let y = gamma_symbols(x, self.mult);
        weighted_sum(&y) % self.params.modulus() as u128 == self.params.a() as u128
    }

    /// Residue `r` with `Σ x_i ≡ r (mod q)` for every member `x`.
    ///
    /// For `Γ_p` this is `p⁻¹·a`; with `p = 1` it is `a mod q`.
    pub fn parity_residue(&self) -> u32 {
        self.mult.unscale(self.params.a())
    }

    /// All members in lexicographic order.
    pub fn enumerate(&self, budget: u64) -> Result<Vec<Word>> {
        let (q, n) = (self.params.q(), self.params.n());
        check_budget(q, n, budget)?;
        let mut out = Vec::new();
        for_each_word(q, n, |x| {
            if self.is_member_unchecked(x) {
                out.push(Word::from_raw(x.to_vec(), q));
            }
        });
        Ok(out)
    }
}

pub fn is_member(p: &CodeParams, x: &Word) -> Result<bool> {
    VtStarCode::new(*p).is_member(x)
}

pub fn parity_residue(p: &CodeParams) -> u32 {
    VtStarCode::new(*p).parity_residue()
}

pub fn enumerate_code(p: &CodeParams, budget: u64) -> Result<Vec<Word>> {
    VtStarCode::new(*p).enumerate(budget)
}

/// Every word of length `n` split by syndrome class: entry `a` holds
/// `VT*_a(n; q)` in lexicographic order.
pub fn partition_by_syndrome(q: u32, n: usize, budget: u64) -> Result<Vec<Vec<Word>>> {
    let params = CodeParams::new(q, n, 0)?;
    check_budget(q, n, budget)?;
    let modulus = params.modulus();
    let one = Multiplier::identity(q)?;
    let mut classes = vec![Vec::new(); modulus as usize];
    for_each_word(q, n, |x| {
        let a = (weighted_sum(&gamma_symbols(x, one)) % modulus as u128) as usize;
        classes[a].push(Word::from_raw(x.to_vec(), q));
    });
    Ok(classes)
}

/// A syndrome `a` maximising `|VT*_a(n; q)|` (smallest on ties) and that size.
pub fn best_syndrome(n: usize, q: u32, budget: u64) -> Result<(u64, usize)> {
    let params = CodeParams::new(q, n, 0)?;
    check_budget(q, n, budget)?;
    let modulus = params.modulus();
    let one = Multiplier::identity(q)?;
    let mut counts = vec![0usize; modulus as usize];
    for_each_word(q, n, |x| {
        counts[(weighted_sum(&gamma_symbols(x, one)) % modulus as u128) as usize] += 1;
    });
    let (a, size) = counts
        .iter()
        .enumerate()
        .fold((0, 0), |best, (a, &c)| if c > best.1 { (a, c) } else { best });
    Ok((a as u64, size))
}

pub(crate) fn check_budget(q: u32, n: usize, budget: u64) -> Result<()> {
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| checked_pow(q as u64, e))
        .unwrap_or(u128::MAX);
    if size > budget as u128 {
        return Err(Error::EnumerationTooLarge { size, budget });
    }
    Ok(())
}

/// Calls `f` on every word of `Σ_q^n` in lexicographic order.
pub(crate) fn for_each_word(q: u32, n: usize, mut f: impl FnMut(&[u32])) {
    let mut x = vec![0u32; n];
    loop {
        f(&x);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            x[i] += 1;
            if x[i] < q {
                break;
            }
            x[i] = 0;
        }
    }
}
