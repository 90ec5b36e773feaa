//! Single-indel channel: error injection, error balls, reference decoders
//! and the randomized round-trip harness.
//!
//! Randomness comes from ChaCha8 (`rand_chacha`), seeded with
//! `seed_from_u64`. Fuzz trial `i` uses stream `i` of the generator seeded
//! with the run seed, so any trial can be replayed on its own and results do
//! not depend on thread scheduling.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::encoder::NonSystematicEncoder;
use crate::{CodeParams, Error, Result, Word};

pub fn delete_at(w: &Word, i: usize) -> Result<Word> {
    if i == 0 || i > w.len() {
        return Err(Error::IndexOutOfRange { index: i, max: w.len() });
    }
    let mut s = w.symbols().to_vec();
    s.remove(i - 1);
    Ok(Word::from_raw(s, w.q()))
}

pub fn insert_at(w: &Word, i: usize, v: u32) -> Result<Word> {
    if i == 0 || i > w.len() + 1 {
        return Err(Error::IndexOutOfRange { index: i, max: w.len() + 1 });
    }
    if v >= w.q() {
        return Err(Error::SymbolOutOfAlphabet { symbol: v as u64, q: w.q() });
    }
    let mut s = w.symbols().to_vec();
    s.insert(i - 1, v);
    Ok(Word::from_raw(s, w.q()))
}

/// All distinct words one deletion or one insertion away from `w`.
pub fn indel_ball(w: &Word) -> BTreeSet<Word> {
    let mut ball = BTreeSet::new();
    for i in 1..=w.len() {
        ball.insert(delete_at(w, i).expect("index in range"));
    }
    for i in 1..=w.len() + 1 {
        for v in 0..w.q() {
            ball.insert(insert_at(w, i, v).expect("index in range"));
        }
    }
    ball
}

/// True when `received` is `original` with exactly one symbol deleted or
/// inserted. Linear time.
pub fn is_single_indel(original: &[u32], received: &[u32]) -> bool {
    if received.len() + 1 == original.len() {
        is_one_longer(original, received)
    } else if received.len() == original.len() + 1 {
        is_one_longer(received, original)
    } else {
        false
    }
}

fn is_one_longer(long: &[u32], short: &[u32]) -> bool {
    let split = long.iter().zip(short).take_while(|(a, b)| a == b).count();
    long[split + 1..] == short[split..]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Disjointness {
    Ok,
    Witness { x: Word, y: Word, common: Word },
}

/// Checks that the indel balls of all codewords are pairwise disjoint and
/// reports the first collision found otherwise. Codewords are visited in the
/// given order and ball elements in sorted order.
pub fn check_code_disjointness(code: &[Word]) -> Disjointness {
    let mut owner: HashMap<Word, usize> = HashMap::new();
    for (idx, x) in code.iter().enumerate() {
        for v in indel_ball(x) {
            match owner.get(&v) {
                Some(&prev) if prev != idx => {
                    return Disjointness::Witness {
                        x: code[prev].clone(),
                        y: x.clone(),
                        common: v,
                    };
                }
                Some(_) => {}
                None => {
                    owner.insert(v, idx);
                }
            }
        }
    }
    Disjointness::Ok
}

/// The unique codeword equal to `received` or having it in its indel ball.
pub fn brute_force_indel_decode(code: &[Word], received: &Word) -> Result<Word> {
    let mut hits = code.iter().filter(|c| {
        c.q() == received.q()
            && (c.symbols() == received.symbols() || is_single_indel(c.symbols(), received.symbols()))
    });
    match (hits.next(), hits.next()) {
        (Some(c), None) => Ok(c.clone()),
        (None, _) => Err(Error::NotDecodable("received word is outside every error ball".into())),
        (Some(a), Some(b)) => Err(Error::NotDecodable(format!(
            "received word lies in the balls of both {a} and {b}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorruptionMode {
    Deletion,
    Insertion,
    Either,
}

impl std::str::FromStr for CorruptionMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "deletion" => Ok(CorruptionMode::Deletion),
            "insertion" => Ok(CorruptionMode::Insertion),
            "either" => Ok(CorruptionMode::Either),
            other => Err(Error::Parse(format!("unknown corruption mode {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndelKind {
    Deletion,
    Insertion,
}

impl fmt::Display for IndelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IndelKind::Deletion => "deletion",
            IndelKind::Insertion => "insertion",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corruption {
    pub kind: IndelKind,
    /// 1-based position in the original (deletion) or the result (insertion).
    pub position: usize,
    pub symbol: Option<u32>,
    pub seed: u64,
}

impl Corruption {
    pub fn apply(&self, w: &Word) -> Result<Word> {
        match self.kind {
            IndelKind::Deletion => delete_at(w, self.position),
            IndelKind::Insertion => insert_at(w, self.position, self.symbol.unwrap_or(0)),
        }
    }
}

/// One uniformly drawn indel. The choice set is every deletion position
/// and/or every (insert position, symbol) pair, depending on `mode`.
pub fn random_corrupt(w: &Word, seed: u64, mode: CorruptionMode) -> Result<(Word, Corruption)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let corruption = draw_corruption(&mut rng, w.len(), w.q(), mode, seed)?;
    Ok((corruption.apply(w)?, corruption))
}

fn draw_corruption(
    rng: &mut impl Rng,
    len: usize,
    q: u32,
    mode: CorruptionMode,
    seed: u64,
) -> Result<Corruption> {
    let deletions = match mode {
        CorruptionMode::Insertion => 0,
        _ => len as u64,
    };
    let insertions = match mode {
        CorruptionMode::Deletion => 0,
        _ => (len as u64 + 1) * q as u64,
    };
    if deletions + insertions == 0 {
        return Err(Error::EmptyWord);
    }
    let pick = rng.gen_range(0..deletions + insertions);
    Ok(if pick < deletions {
        Corruption { kind: IndelKind::Deletion, position: pick as usize + 1, symbol: None, seed }
    } else {
        let rest = pick - deletions;
        Corruption {
            kind: IndelKind::Insertion,
            position: (rest / q as u64) as usize + 1,
            symbol: Some((rest % q as u64) as u32),
            seed,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzFailure {
    pub trial: u64,
    pub message: Word,
    pub received: Word,
    pub corruption: Corruption,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzReport {
    pub params: CodeParams,
    pub seed: u64,
    pub trials: u64,
    pub failures: u64,
    pub witnesses: Vec<FuzzFailure>,
}

/// One summary line, then one line per failure.
impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fuzz q={} n={} a={} seed={} trials={} failures={}",
            self.params.q(),
            self.params.n(),
            self.params.a(),
            self.seed,
            self.trials,
            self.failures
        )?;
        for w in &self.witnesses {
            writeln!(
                f,
                "failure trial={} kind={} position={} symbol={} message={} received={} outcome={:?}",
                w.trial,
                w.corruption.kind,
                w.corruption.position,
                w.corruption.symbol.map_or("-".to_string(), |s| s.to_string()),
                w.message,
                w.received,
                w.outcome
            )?;
        }
        Ok(())
    }
}

/// Random message, random single indel, decode, compare. Runs trials in
/// parallel; the report is independent of thread count.
pub fn fuzz_roundtrip(p: &CodeParams, trials: u64, seed: u64) -> Result<FuzzReport> {
    let encoder = NonSystematicEncoder::new(*p)?;
    let (q, k) = (p.q(), p.k());
    let mut witnesses: Vec<FuzzFailure> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let msg: Vec<u32> = (0..k).map(|_| rng.gen_range(0..q)).collect();
            let message = Word::from_raw(msg, q);
            let codeword = encoder.encode(&message).expect("message has length k");
            let corrupt_seed = rng.next_u64();
            let (received, corruption) = random_corrupt(&codeword, corrupt_seed, CorruptionMode::Either)
                .expect("codeword is non-empty");
            let outcome = match encoder.decode(&received) {
                Ok(m) if m == message => return None,
                Ok(m) => format!("decoded {m}"),
                Err(e) => e.to_string(),
            };
            Some(FuzzFailure { trial, message, received, corruption, outcome })
        })
        .collect();
    witnesses.sort_by_key(|w| w.trial);
    Ok(FuzzReport {
        params: *p,
        seed,
        trials,
        failures: witnesses.len() as u64,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::enumerate_code;
    use crate::{VtStarCode, DEFAULT_ENUM_BUDGET};

    fn w(text: &str, q: u32) -> Word {
        Word::parse(text, q).unwrap()
    }

    #[test]
    fn delete_examples() {
        assert_eq!(delete_at(&w("0103112013", 4), 3).unwrap(), w("013112013", 4));
        assert_eq!(delete_at(&w("0", 2), 1).unwrap(), Word::zeros(0, 2).unwrap());
        let run = w("0111102", 3);
        for i in 2..=5 {
            assert_eq!(delete_at(&run, i).unwrap(), w("011102", 3));
        }
        assert_eq!(
            delete_at(&w("01", 2), 3),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
        assert!(delete_at(&w("01", 2), 0).is_err());
    }

    #[test]
    fn insert_examples() {
        assert_eq!(insert_at(&w("13", 4), 2, 2).unwrap(), w("123", 4));
        assert_eq!(insert_at(&Word::zeros(0, 3).unwrap(), 1, 2).unwrap(), w("2", 3));
        assert!(insert_at(&w("13", 4), 4, 0).is_err());
        assert!(insert_at(&w("13", 4), 1, 4).is_err());
    }

    #[test]
    fn insert_then_delete_is_identity() {
        for len in 0..=4u32 {
            for idx in 0..3u32.pow(len) {
                let mut v = idx;
                let syms = (0..len)
                    .map(|_| {
                        let s = v % 3;
                        v /= 3;
                        s
                    })
                    .collect();
                let x = Word::new(syms, 3).unwrap();
                for i in 1..=x.len() + 1 {
                    for s in 0..3 {
                        let longer = insert_at(&x, i, s).unwrap();
                        assert_eq!(delete_at(&longer, i).unwrap(), x);
                        assert!(is_single_indel(x.symbols(), longer.symbols()));
                        assert!(is_single_indel(longer.symbols(), x.symbols()));
                    }
                }
                for i in 1..=x.len() {
                    let shorter = delete_at(&x, i).unwrap();
                    assert_eq!(insert_at(&shorter, i, x.symbols()[i - 1]).unwrap(), x);
                }
            }
        }
    }

    #[test]
    fn balls() {
        let b = indel_ball(&w("01", 2));
        let dels: BTreeSet<Word> = b.iter().filter(|v| v.len() == 1).cloned().collect();
        assert_eq!(dels, [w("0", 2), w("1", 2)].into_iter().collect());

        let b = indel_ball(&w("0", 2));
        let ins: BTreeSet<Word> = b.iter().filter(|v| v.len() == 2).cloned().collect();
        assert_eq!(ins, [w("00", 2), w("10", 2), w("01", 2)].into_iter().collect());

        // 0^n over q=2: one deletion result; insertions give 0^{n+1} plus
        // the n+1 placements of a single 1.
        for n in 1..6 {
            assert_eq!(indel_ball(&Word::zeros(n, 2).unwrap()).len(), 1 + 1 + (n + 1));
        }
    }

    #[test]
    fn single_indel_relation_matches_ball() {
        let x = w("01120", 3);
        let ball = indel_ball(&x);
        for len in 4..=6u32 {
            for idx in 0..3u32.pow(len) {
                let mut v = idx;
                let syms = (0..len)
                    .map(|_| {
                        let s = v % 3;
                        v /= 3;
                        s
                    })
                    .collect();
                let y = Word::new(syms, 3).unwrap();
                assert_eq!(ball.contains(&y), is_single_indel(x.symbols(), y.symbols()), "{y}");
            }
        }
    }

    #[test]
    fn plain_syndrome_counterexample() {
        let code = [w("213", 4), w("132", 4)];
        match check_code_disjointness(&code) {
            Disjointness::Witness { common, .. } => assert_eq!(common, w("13", 4)),
            Disjointness::Ok => panic!("balls of 213 and 132 intersect"),
        }
        assert_eq!(check_code_disjointness(&[w("213", 4)]), Disjointness::Ok);
    }

    #[test]
    fn vt_star_code_is_disjoint() {
        for a in 0..15 {
            let code = enumerate_code(&CodeParams::new(3, 5, a).unwrap(), DEFAULT_ENUM_BUDGET).unwrap();
            assert_eq!(check_code_disjointness(&code), Disjointness::Ok);
        }
    }

    #[test]
    fn brute_force_agrees_with_decoder() {
        for a in 0..18 {
            let p = CodeParams::new(3, 6, a).unwrap();
            let vt = VtStarCode::new(p);
            let code = vt.enumerate(DEFAULT_ENUM_BUDGET).unwrap();
            for x in &code {
                assert_eq!(&brute_force_indel_decode(&code, x).unwrap(), x);
                for r in indel_ball(x) {
                    assert_eq!(&brute_force_indel_decode(&code, &r).unwrap(), x);
                    assert_eq!(&vt.decode(&r).unwrap().codeword, x);
                }
            }
        }
        let code = [w("000", 2)];
        assert!(matches!(
            brute_force_indel_decode(&code, &w("11", 2)),
            Err(Error::NotDecodable(_))
        ));
        let clash = [w("213", 4), w("132", 4)];
        assert!(brute_force_indel_decode(&clash, &w("13", 4)).is_err());
    }

    #[test]
    fn corruption_is_deterministic() {
        let x = w("0103112013", 4);
        let (a, ca) = random_corrupt(&x, 42, CorruptionMode::Either).unwrap();
        let (b, cb) = random_corrupt(&x, 42, CorruptionMode::Either).unwrap();
        assert_eq!((a.clone(), ca.clone()), (b, cb));
        assert_eq!(ca.apply(&x).unwrap(), a);

        for seed in 0..50 {
            let (d, c) = random_corrupt(&x, seed, CorruptionMode::Deletion).unwrap();
            assert_eq!(d.len(), 9);
            assert_eq!(c.kind, IndelKind::Deletion);
            let (i, c) = random_corrupt(&x, seed, CorruptionMode::Insertion).unwrap();
            assert_eq!(i.len(), 11);
            assert_eq!(c.kind, IndelKind::Insertion);
        }
        assert_eq!(
            random_corrupt(&Word::zeros(0, 2).unwrap(), 1, CorruptionMode::Deletion),
            Err(Error::EmptyWord)
        );
        assert!("sideways".parse::<CorruptionMode>().is_err());
    }

    #[test]
    fn deletion_positions_are_uniform() {
        let x = w("0123012301", 4);
        let draws = 10_000u64;
        let mut counts = [0u64; 10];
        for seed in 0..draws {
            let (_, c) = random_corrupt(&x, seed, CorruptionMode::Deletion).unwrap();
            counts[c.position - 1] += 1;
        }
        let expected = draws as f64 / 10.0;
        let sigma = (draws as f64 * 0.1 * 0.9).sqrt();
        for c in counts {
            assert!((c as f64 - expected).abs() < 5.0 * sigma, "{counts:?}");
        }
    }

    #[test]
    fn fuzz_small() {
        let rep = fuzz_roundtrip(&CodeParams::new(4, 10, 0).unwrap(), 2000, 7).unwrap();
        assert_eq!(rep.failures, 0);
        assert_eq!(rep.trials, 2000);
        for a in 0..12 {
            let rep = fuzz_roundtrip(&CodeParams::new(2, 6, a).unwrap(), 1000, a).unwrap();
            assert_eq!(rep.failures, 0, "{rep}");
        }
        let rep = fuzz_roundtrip(&CodeParams::new(4, 10, 0).unwrap(), 0, 1).unwrap();
        assert_eq!((rep.trials, rep.failures), (0, 0));
        assert_eq!(rep.to_string(), "fuzz q=4 n=10 a=0 seed=1 trials=0 failures=0\n");
    }
}
