//! Deterministic input generators for benchmarks, examples, and tests.
//!
//! Everything here is seeded ChaCha, so a given seed always produces the
//! same bytes on every platform. Generated inputs are test harness data,
//! not construction state, and are not charged to the memory counter.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::text::Text;

/// splitmix64 step, for deriving independent seed streams.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    let mut z = seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Uniform random text over byte values `[0, sigma)`.
pub fn uniform_text(n: usize, sigma: u16, seed: u64) -> Text {
    assert!((2..=256).contains(&sigma));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Text::new((0..n).map(|_| rng.random_range(0..sigma) as u8).collect())
}

/// The unary text a^n, worst case for LCP lengths.
pub fn repeat_a(n: usize) -> Text {
    Text::new(vec![b'a'; n])
}

/// (ab)^(n/2): period-2 text with deep shared prefixes.
pub fn alternating_ab(n: usize) -> Text {
    Text::new(
        (0..n)
            .map(|i| if i.is_multiple_of(2) { b'a' } else { b'b' })
            .collect(),
    )
}

/// Prefix of the infinite Fibonacci word over {a, b}.
pub fn fibonacci_word(n: usize) -> Text {
    let mut prev: Vec<u8> = vec![b'b'];
    let mut cur: Vec<u8> = vec![b'a'];
    while cur.len() < n {
        let next = [cur.as_slice(), prev.as_slice()].concat();
        prev = cur;
        cur = next;
    }
    cur.truncate(n);
    Text::new(cur)
}

/// Prefix of the Thue-Morse word over {a, b}.
pub fn thue_morse_word(n: usize) -> Text {
    Text::new(
        (0..n)
            .map(|i| {
                if (i as u64).count_ones().is_multiple_of(2) {
                    b'a'
                } else {
                    b'b'
                }
            })
            .collect(),
    )
}

/// `b` distinct positions drawn uniformly from `[1, n]`.
pub fn distinct_positions(n: usize, b: usize, seed: u64) -> Vec<usize> {
    assert!(b <= n, "cannot draw {b} distinct positions from [1,{n}]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if b * 2 <= n {
        // sparse case: rejection sampling
        let mut seen = std::collections::HashSet::with_capacity(b);
        let mut out = Vec::with_capacity(b);
        while out.len() < b {
            let p = rng.random_range(1..=n);
            if seen.insert(p) {
                out.push(p);
            }
        }
        out
    } else {
        // dense case: partial Fisher-Yates over the whole range
        let mut all: Vec<usize> = (1..=n).collect();
        for k in 0..b {
            let j = rng.random_range(k..n);
            all.swap(k, j);
        }
        all.truncate(b);
        all
    }
}

/// `count` position pairs drawn uniformly (sides independent).
pub fn random_pairs(n: usize, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(uniform_text(64, 256, 9), uniform_text(64, 256, 9));
        assert_eq!(
            distinct_positions(100, 30, 4),
            distinct_positions(100, 30, 4)
        );
        assert_eq!(random_pairs(100, 10, 4), random_pairs(100, 10, 4));
    }

    #[test]
    fn positions_are_distinct_and_in_range() {
        for &(n, b) in &[(10usize, 10usize), (100, 3), (50, 40)] {
            let ps = distinct_positions(n, b, 1);
            assert_eq!(ps.len(), b);
            let set: std::collections::HashSet<_> = ps.iter().collect();
            assert_eq!(set.len(), b);
            assert!(ps.iter().all(|&p| (1..=n).contains(&p)));
        }
    }

    #[test]
    fn classic_words() {
        assert_eq!(fibonacci_word(8).bytes(), b"abaababa");
        assert_eq!(thue_morse_word(8).bytes(), b"abbabaab");
        assert_eq!(alternating_ab(5).bytes(), b"ababa");
        assert_eq!(repeat_a(3).bytes(), b"aaa");
    }
}
