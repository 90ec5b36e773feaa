use std::fmt;

use crate::{Error, Result};

/// A finite sequence of symbols over `{0, .., q-1}`.
///
/// The alphabet size travels with the symbols; operations that combine two
/// words reject mismatched alphabets instead of reducing silently.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<u32>,
    q: u32,
}

impl Word {
    pub fn new(symbols: Vec<u32>, q: u32) -> Result<Self> {
        check_alphabet(q)?;
        if let Some(&bad) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::SymbolOutOfAlphabet { symbol: bad as u64, q });
        }
        Ok(Word { symbols, q })
    }

    /// Builds a word without re-checking symbols. Callers guarantee `s < q`.
    pub(crate) fn from_raw(symbols: Vec<u32>, q: u32) -> Self {
        debug_assert!(q >= 2 && symbols.iter().all(|&s| s < q));
        Word { symbols, q }
    }

    pub fn zeros(len: usize, q: u32) -> Result<Self> {
        check_alphabet(q)?;
        Ok(Word { symbols: vec![0; len], q })
    }

    /// Parses either a contiguous digit string (`q <= 10`) or comma-separated
    /// decimal integers. The empty string is the empty word.
    pub fn parse(text: &str, q: u32) -> Result<Self> {
        check_alphabet(q)?;
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word { symbols: Vec::new(), q });
        }
        let symbols = if text.contains(',') || q > 10 {
            text.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(Error::Parse(format!("bad token {tok:?}")));
                    }
                    tok.parse::<u64>()
                        .map_err(|e| Error::Parse(format!("bad token {tok:?}: {e}")))
                })
                .collect::<Result<Vec<u64>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(u64::from)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<Vec<u64>>>()?
        };
        let symbols = symbols
            .into_iter()
            .map(|s| {
                if s < q as u64 {
                    Ok(s as u32)
                } else {
                    Err(Error::SymbolOutOfAlphabet { symbol: s, q })
                }
            })
            .collect::<Result<Vec<u32>>>()?;
        Ok(Word { symbols, q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u32> {
        self.symbols
    }

    /// Sum of all symbols as an integer (no reduction).
    pub fn symbol_sum(&self) -> u64 {
        self.symbols.iter().map(|&s| s as u64).sum()
    }

    pub(crate) fn require_shape(&self, len: usize, q: u32) -> Result<()> {
        if self.q != q {
            return Err(Error::ShapeMismatch(format!(
                "alphabet size {} where {q} was expected",
                self.q
            )));
        }
        if self.len() != len {
            return Err(Error::ShapeMismatch(format!(
                "length {} where {len} was expected",
                self.len()
            )));
        }
        Ok(())
    }
}

fn check_alphabet(q: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::InvalidParams {
            field: "q",
            reason: format!("must be at least 2, got {q}"),
        });
    }
    Ok(())
}

/// Canonical text form: digits for `q <= 10`, comma-separated otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_digit_strings() {
        let w = Word::parse("0103112013", 4).unwrap();
        assert_eq!(w.symbols(), &[0, 1, 0, 3, 1, 1, 2, 0, 1, 3]);
        assert_eq!(w.q(), 4);
    }

    #[test]
    fn parses_csv() {
        let w = Word::parse("0,0,0", 2).unwrap();
        assert_eq!(w.symbols(), &[0, 0, 0]);
        let w = Word::parse("11, 0", 12).unwrap();
        assert_eq!(w.symbols(), &[11, 0]);
        // A lone token is a one-symbol word when q > 10.
        assert_eq!(Word::parse("11", 12).unwrap().symbols(), &[11]);
    }

    #[test]
    fn rejects_out_of_alphabet() {
        assert!(matches!(
            Word::parse("0104", 4),
            Err(Error::SymbolOutOfAlphabet { symbol: 4, q: 4 })
        ));
        assert!(matches!(Word::new(vec![2], 2), Err(Error::SymbolOutOfAlphabet { .. })));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(Word::parse("0,,1", 3), Err(Error::Parse(_))));
        assert!(matches!(Word::parse("01a", 3), Err(Error::Parse(_))));
        assert!(matches!(Word::parse("1,-1", 3), Err(Error::Parse(_))));
        assert!(matches!(Word::parse("0", 1), Err(Error::InvalidParams { field: "q", .. })));
    }

    #[test]
    fn formats() {
        assert_eq!(Word::new(vec![2, 1, 0, 2, 3, 3, 1], 4).unwrap().to_string(), "2102331");
        assert_eq!(Word::zeros(0, 3).unwrap().to_string(), "");
        assert_eq!(Word::new(vec![11, 0], 12).unwrap().to_string(), "11,0");
    }

    #[test]
    fn round_trip_exhaustive_small() {
        for q in [2u32, 3, 10, 11] {
            for len in 0..=4u32 {
                for idx in 0..q.pow(len) {
                    let mut v = idx;
                    let syms: Vec<u32> = (0..len)
                        .map(|_| {
                            let s = v % q;
                            v /= q;
                            s
                        })
                        .collect();
                    let w = Word::new(syms, q).unwrap();
                    assert_eq!(Word::parse(&w.to_string(), q).unwrap(), w);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn round_trip_random(q in 2u32..40, raw in proptest::collection::vec(any::<u32>(), 0..200)) {
            let w = Word::new(raw.into_iter().map(|s| s % q).collect(), q).unwrap();
            prop_assert_eq!(Word::parse(&w.to_string(), q).unwrap(), w);
        }
    }
}
