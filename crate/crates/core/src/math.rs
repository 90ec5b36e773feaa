//! Small integer helpers shared by the codecs and the comparison tables.

/// Smallest `t` with `q^t >= n`, i.e. `⌈log_q n⌉` computed exactly.
///
/// Returns 0 for `n <= 1`. Panics if `q < 2`.
pub fn ceil_log(q: u64, n: u64) -> u32 {
    assert!(q >= 2, "ceil_log needs a base of at least 2");
    let mut t = 0;
    let mut power: u128 = 1;
    while power < n as u128 {
        power *= q as u128;
        t += 1;
    }
    t
}

/// `q^e` if it fits in a `u128`.
pub fn checked_pow(q: u64, e: u32) -> Option<u128> {
    (q as u128).checked_pow(e)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `p` modulo `q`, if `gcd(p, q) = 1`.
pub fn mod_inverse(p: u64, q: u64) -> Option<u64> {
    let (mut old_r, mut r) = (p as i128, q as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(q as i128) as u64)
}

/// Base-`q` digits of `value`, least significant first, padded to `len`.
///
/// Panics if `value` needs more than `len` digits.
pub fn digits_lsb_first(mut value: u64, q: u64, len: usize) -> Vec<u32> {
    let mut digits = Vec::with_capacity(len);
    for _ in 0..len {
        digits.push((value % q) as u32);
        value /= q;
    }
    assert_eq!(value, 0, "value does not fit in {len} base-{q} digits");
    digits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_log_matches_float_on_small_values() {
        assert_eq!(ceil_log(4, 10), 2);
        assert_eq!(ceil_log(3, 10), 3);
        assert_eq!(ceil_log(3, 9), 2);
        assert_eq!(ceil_log(2, 1), 0);
        assert_eq!(ceil_log(2, 2), 1);
        assert_eq!(ceil_log(4, 1 << 20), 10);
        assert_eq!(ceil_log(4, (1 << 20) + 1), 11);
        for q in 2..7u64 {
            for n in 2..2000u64 {
                let t = ceil_log(q, n);
                assert!(q.pow(t) >= n && q.pow(t - 1) < n, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn inverses() {
        assert_eq!(mod_inverse(3, 4), Some(3));
        assert_eq!(mod_inverse(2, 5), Some(3));
        assert_eq!(mod_inverse(2, 4), None);
        assert_eq!(mod_inverse(1, 2), Some(1));
        assert_eq!(gcd(12, 18), 6);
    }

    #[test]
    fn digits() {
        assert_eq!(digits_lsb_first(3, 3, 3), vec![0, 1, 0]);
        assert_eq!(digits_lsb_first(0, 5, 2), vec![0, 0]);
    }

    #[test]
    #[should_panic]
    fn digits_overflow_panics() {
        digits_lsb_first(9, 3, 2);
    }
}
