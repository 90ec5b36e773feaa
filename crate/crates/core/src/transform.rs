//! The differential transform and its scaled generalisation.
//!
//! For `x` of length `n` over `Z_q` the differential vector is
//! `y_i = x_i - x_{i+1} (mod q)` for `i < n` and `y_n = x_n`. The inverse is a
//! suffix sum. `Γ_p` multiplies every entry by a unit `p` of `Z_q`; `Γ_1` is
//! `Diff`.

use crate::math::{gcd, mod_inverse};
use crate::{Error, Result, Word};

/// A word that lives in the transform domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffVector(Word);

impl DiffVector {
    pub fn from_word(word: Word) -> Self {
        DiffVector(word)
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn symbols(&self) -> &[u32] {
        self.0.symbols()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A multiplier `p` with `1 <= p <= q-1` and `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Multiplier {
    p: u32,
    inverse: u32,
    q: u32,
}

impl Multiplier {
    pub fn new(p: u32, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParams {
                field: "q",
                reason: format!("must be at least 2, got {q}"),
            });
        }
        if p == 0 || p >= q || gcd(p as u64, q as u64) != 1 {
            return Err(Error::NotInvertible { p, q });
        }
        let inverse = mod_inverse(p as u64, q as u64).expect("unit has an inverse") as u32;
        Ok(Multiplier { p, inverse, q })
    }

    /// `p = 1`, which makes `Γ_p` the plain differential transform.
    pub fn identity(q: u32) -> Result<Self> {
        Self::new(1, q)
    }

    pub fn value(&self) -> u32 {
        self.p
    }

    pub fn inverse(&self) -> u32 {
        self.inverse
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub(crate) fn scale(&self, v: u64) -> u32 {
        ((v % self.q as u64) * self.p as u64 % self.q as u64) as u32
    }

    pub(crate) fn unscale(&self, v: u64) -> u32 {
        ((v % self.q as u64) * self.inverse as u64 % self.q as u64) as u32
    }
}

pub fn diff(x: &Word) -> Result<DiffVector> {
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(DiffVector(Word::from_raw(diff_symbols(x.symbols(), x.q()), x.q())))
}

pub fn inv_diff(y: &DiffVector) -> Result<Word> {
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    let q = y.as_word().q();
    Ok(Word::from_raw(suffix_sums_mod(y.symbols(), q), q))
}

pub fn gamma_p(x: &Word, p: Multiplier) -> Result<DiffVector> {
    check_multiplier(x, p)?;
    if x.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(DiffVector(Word::from_raw(gamma_symbols(x.symbols(), p), x.q())))
}

pub fn inv_gamma_p(y: &DiffVector, p: Multiplier) -> Result<Word> {
    check_multiplier(y.as_word(), p)?;
    if y.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(Word::from_raw(inv_gamma_symbols(y.symbols(), p), p.q()))
}

fn check_multiplier(w: &Word, p: Multiplier) -> Result<()> {
    if w.q() != p.q() {
        return Err(Error::ShapeMismatch(format!(
            "multiplier is modulo {} but the word has q={}",
            p.q(),
            w.q()
        )));
    }
    Ok(())
}

pub(crate) fn diff_symbols(x: &[u32], q: u32) -> Vec<u32> {
    let mut y: Vec<u32> = x
        .windows(2)
        .map(|w| (w[0] + q - w[1]) % q)
        .collect();
    if let Some(&last) = x.last() {
        y.push(last);
    }
    y
}

pub(crate) fn gamma_symbols(x: &[u32], p: Multiplier) -> Vec<u32> {
    if p.value() == 1 {
        return diff_symbols(x, p.q());
    }
    diff_symbols(x, p.q())
        .into_iter()
        .map(|d| p.scale(d as u64))
        .collect()
}

pub(crate) fn inv_gamma_symbols(y: &[u32], p: Multiplier) -> Vec<u32> {
    let mut x = suffix_sums_mod(y, p.q());
    if p.value() != 1 {
        for s in &mut x {
            *s = p.unscale(*s as u64);
        }
    }
    x
}

fn suffix_sums_mod(y: &[u32], q: u32) -> Vec<u32> {
    let mut x = vec![0; y.len()];
    let mut acc = 0u32;
    for (i, &v) in y.iter().enumerate().rev() {
        acc = (acc + v) % q;
        x[i] = acc;
    }
    x
}
