//! Membership tests for the classical codes the new family is compared with:
//! binary VT codes and Tenengolts' q-ary codes built on the signature vector.
//! Error correction for these goes through
//! [`brute_force_indel_decode`](crate::channel::brute_force_indel_decode).

use crate::code::{check_budget, for_each_word, weighted_sum};
use crate::{Error, Result, Word};

/// Binary VT code `VT_a(n)`: `Σ i·x_i ≡ a (mod n+1)`.
pub fn binary_vt_member(n: usize, a: u64, x: &Word) -> Result<bool> {
    if a > n as u64 {
        return Err(Error::InvalidParams {
            field: "a",
            reason: format!("must be at most n = {n}, got {a}"),
        });
    }
    x.require_shape(n, 2)?;
    Ok(weighted_sum(x.symbols()) % (n as u128 + 1) == a as u128)
}

/// Sizes `|VT_a(n)|` for every `a ∈ Z_{n+1}`.
pub fn binary_vt_sizes(n: usize, budget: u64) -> Result<Vec<usize>> {
    check_budget(2, n, budget)?;
    let mut sizes = vec![0; n + 1];
    for_each_word(2, n, |x| sizes[(weighted_sum(x) % (n as u128 + 1)) as usize] += 1);
    Ok(sizes)
}

/// `α(x)_i = 1` iff `x_{i+1} >= x_i`.
pub fn signature(x: &Word) -> Result<Word> {
    if x.len() < 2 {
        return Err(Error::TooShort { needed: 2, got: x.len() });
    }
    Ok(Word::from_raw(signature_symbols(x.symbols()), 2))
}

fn signature_symbols(x: &[u32]) -> Vec<u32> {
    x.windows(2).map(|w| u32::from(w[1] >= w[0])).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TenengoltsParams {
    q: u32,
    n: usize,
    a: u64,
    b: u32,
}

impl TenengoltsParams {
    pub fn new(q: u32, n: usize, a: u64, b: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParams { field: "q", reason: format!("must be at least 2, got {q}") });
        }
        if n < 2 {
            return Err(Error::InvalidParams { field: "n", reason: format!("must be at least 2, got {n}") });
        }
        if a >= n as u64 {
            return Err(Error::InvalidParams { field: "a", reason: format!("must be below n = {n}, got {a}") });
        }
        if b >= q {
            return Err(Error::InvalidParams { field: "b", reason: format!("must be below q = {q}, got {b}") });
        }
        Ok(TenengoltsParams { q, n, a, b })
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

    pub fn b(&self) -> u32 {
        self.b
    }
}

/// `x ∈ T_{a,b}(n; q)`: `α(x) ∈ VT_a(n-1)` and `Σ x_i ≡ b (mod q)`.
pub fn tenengolts_member(tp: &TenengoltsParams, x: &Word) -> Result<bool> {
    x.require_shape(tp.n, tp.q)?;
    let sig = signature(x)?;
    Ok(binary_vt_member(tp.n - 1, tp.a, &sig)? && x.symbol_sum() % tp.q as u64 == tp.b as u64)
}

/// Sizes `|T_{a,b}(n; q)|` indexed `[a][b]`.
pub fn tenengolts_sizes(n: usize, q: u32, budget: u64) -> Result<Vec<Vec<usize>>> {
    TenengoltsParams::new(q, n, 0, 0)?;
    check_budget(q, n, budget)?;
    let mut sizes = vec![vec![0; q as usize]; n];
    for_each_word(q, n, |x| {
        let a = (weighted_sum(&signature_symbols(x)) % n as u128) as usize;
        let b = (x.iter().map(|&s| s as u64).sum::<u64>() % q as u64) as usize;
        sizes[a][b] += 1;
    });
    Ok(sizes)
}

/// Members of `T_{a,b}(n; q)` in lexicographic order.
pub fn enumerate_tenengolts(tp: &TenengoltsParams, budget: u64) -> Result<Vec<Word>> {
    check_budget(tp.q, tp.n, budget)?;
    let mut out = Vec::new();
    for_each_word(tp.q, tp.n, |x| {
        let w = Word::from_raw(x.to_vec(), tp.q);
        if tenengolts_member(tp, &w).expect("shape matches") {
            out.push(w);
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_ENUM_BUDGET;

    fn w(text: &str, q: u32) -> Word {
        Word::parse(text, q).unwrap()
    }

    #[test]
    fn binary_vt_examples() {
        assert!(binary_vt_member(4, 0, &w("0000", 2)).unwrap());
        assert!(binary_vt_member(4, 3, &w("0010", 2)).unwrap());
        assert!(!binary_vt_member(4, 2, &w("0010", 2)).unwrap());
        assert!(matches!(binary_vt_member(4, 0, &w("0020", 3)), Err(Error::ShapeMismatch(_))));
        assert!(binary_vt_member(4, 5, &w("0000", 2)).is_err());
    }

    #[test]
    fn binary_vt_sizes_n4() {
        // Enumerated by hand over the 16 binary words of length 4.
        let sizes = binary_vt_sizes(4, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(sizes.iter().sum::<usize>(), 16);
        assert_eq!(sizes, vec![4, 3, 3, 3, 3]);
        assert!(*sizes.iter().max().unwrap() >= 4);
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&Word::zeros(5, 3).unwrap()).unwrap(), w("1111", 2));
        assert_eq!(signature(&w("0211301", 4)).unwrap(), w("101101", 2));
        assert_eq!(signature(&w("3210", 4)).unwrap(), w("000", 2));
        assert_eq!(
            signature(&w("3", 4)),
            Err(Error::TooShort { needed: 2, got: 1 })
        );
    }

    #[test]
    fn tenengolts_examples() {
        let tp = TenengoltsParams::new(3, 4, 2, 0).unwrap();
        assert!(tenengolts_member(&tp, &Word::zeros(4, 3).unwrap()).unwrap());
        let wrong_b = TenengoltsParams::new(3, 4, 2, 1).unwrap();
        assert!(!tenengolts_member(&wrong_b, &Word::zeros(4, 3).unwrap()).unwrap());
        assert!(TenengoltsParams::new(3, 4, 4, 0).is_err());
        assert!(TenengoltsParams::new(3, 4, 0, 3).is_err());
    }

    #[test]
    fn tenengolts_sizes_meet_pigeonhole() {
        let sizes = tenengolts_sizes(5, 3, DEFAULT_ENUM_BUDGET).unwrap();
        let max = sizes.iter().flatten().copied().max().unwrap();
        assert!(max * 15 >= 243);
        assert_eq!(sizes.iter().flatten().sum::<usize>(), 243);
        let tp = TenengoltsParams::new(3, 5, 1, 2).unwrap();
        assert_eq!(enumerate_tenengolts(&tp, DEFAULT_ENUM_BUDGET).unwrap().len(), sizes[1][2]);
    }
}
