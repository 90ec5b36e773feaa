use proptest::prelude::*;

use vtstar::channel::{delete_at, insert_at, is_single_indel};
use vtstar::encoder::{decode1, decode2, encode1, encode2, NonSystematicEncoder};
use vtstar::transform::{diff, gamma_p, inv_diff, inv_gamma_p, Multiplier};
use vtstar::{CodeParams, Word};

fn word_strategy(q: u32, len: std::ops::Range<usize>) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..q, len).prop_map(move |s| Word::new(s, q).unwrap())
}

/// (q, n, a, message) with the message sized for the non-systematic encoder.
fn vt2_case() -> impl Strategy<Value = (CodeParams, Word)> {
    (2u32..=9, 4usize..=300)
        .prop_flat_map(|(q, n)| (Just(q), Just(n), 0..q as u64 * n as u64))
        .prop_filter_map("room for a message", |(q, n, a)| {
            let p = CodeParams::new(q, n, a).ok()?;
            NonSystematicEncoder::new(p).ok().map(|e| (p, e.message_len()))
        })
        .prop_flat_map(|(p, k)| (Just(p), word_strategy(p.q(), k..k + 1)))
}

proptest! {
    #[test]
    fn diff_roundtrip(x in (2u32..=16).prop_flat_map(|q| word_strategy(q, 1..64))) {
        let y = diff(&x).unwrap();
        prop_assert_eq!(inv_diff(&y).unwrap(), x);
    }

    #[test]
    fn gamma_roundtrip(x in word_strategy(7, 1..64), p in 1u32..7) {
        let m = Multiplier::new(p, 7).unwrap();
        prop_assert_eq!(inv_gamma_p(&gamma_p(&x, m).unwrap(), m).unwrap(), x);
    }

    #[test]
    fn vt2_roundtrip_through_one_deletion(((p, msg), i) in (vt2_case(), any::<prop::sample::Index>())) {
        let c = encode2(&p, &msg).unwrap();
        prop_assert_eq!(c.len() - msg.len(), p.t() + 1);
        let r = delete_at(&c, i.index(c.len()) + 1).unwrap();
        prop_assert_eq!(decode2(&p, &r).unwrap(), msg.clone());
        prop_assert_eq!(decode2(&p, &c).unwrap(), msg);
    }

    #[test]
    fn vt2_roundtrip_through_one_insertion(((p, msg), i, v) in (vt2_case(), any::<prop::sample::Index>(), any::<u32>())) {
        let c = encode2(&p, &msg).unwrap();
        let r = insert_at(&c, i.index(c.len() + 1) + 1, v % p.q()).unwrap();
        prop_assert_eq!(decode2(&p, &r).unwrap(), msg);
    }

    #[test]
    fn vt2_output_has_target_parity((p, msg) in vt2_case()) {
        let c = encode2(&p, &msg).unwrap();
        prop_assert_eq!(c.symbol_sum() % p.q() as u64, p.a() % p.q() as u64);
    }

    #[test]
    fn sys1_roundtrip(
        (q, msg) in (2u32..=6).prop_flat_map(|q| (Just(q), word_strategy(q, 2..40))),
        i in any::<prop::sample::Index>(),
        v in any::<u32>(),
        insert in any::<bool>(),
    ) {
        let k = msg.len();
        let frame = encode1(q, k, &msg).unwrap();
        prop_assert_eq!(&frame.symbols()[..k], msg.symbols());
        let r = if insert {
            insert_at(&frame, i.index(frame.len() + 1) + 1, v % q).unwrap()
        } else {
            delete_at(&frame, i.index(frame.len()) + 1).unwrap()
        };
        prop_assert!(is_single_indel(frame.symbols(), r.symbols()));
        prop_assert_eq!(decode1(q, k, &r).unwrap(), msg);
    }
}
