//! Batched LCP queries via rounds of fingerprint comparisons.
//!
//! Given `b` suffix pairs, the LCP of every pair is found by a shared
//! alpha-ary search over prefix lengths. Each round halves (or divides by
//! alpha) a global uncertainty window: one left-to-right scan of the text
//! computes prefix fingerprints, deposits them at the O(alpha*b) positions
//! any pair needs, and each pair then advances both of its positions by the
//! longest probed prefix whose fingerprints agree on every repetition.
//! Once the window is small, the residue is scanned character by character,
//! which makes the reported LCPs exact except for fingerprint false
//! positives (probability n^-O(1)).
//!
//! Auxiliary memory is O(alpha*b) words regardless of the text length; the
//! number of rounds is at most ceil(log b / log alpha) + 1.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fingerprint::FingerprintContext;
use crate::mem;
use crate::text::Text;

/// Words tracked per pair: origin index, both original and both current
/// positions, and the resolution slot.
const PAIR_WORDS: usize = 6;

/// In debug builds, rounds are cross-checked against the brute-force
/// oracle whenever n*b is at most this (desk scale).
#[cfg(debug_assertions)]
const DESK_CHECK_LIMIT: usize = 1 << 22;

#[cfg(debug_assertions)]
thread_local! {
    static SANDWICH_CHECKS: std::cell::Cell<u64> = const { std::cell::Cell::new(0) };
}

/// Number of per-pair sandwich-invariant assertions executed on this
/// thread (debug builds only; used by the acceptance suite to prove the
/// checks were live).
#[cfg(debug_assertions)]
pub fn sandwich_checks_performed() -> u64 {
    SANDWICH_CHECKS.with(|c| c.get())
}

/// Exact LCP values for a batch, in input-pair order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpBatchResult {
    pub lcps: Vec<usize>,
    /// Fingerprint rounds executed before the final scan phase.
    pub rounds: usize,
}

/// Progress record for one tracked pair.
#[derive(Debug, Clone)]
pub struct PairState {
    /// Index into the caller's pair list.
    pub origin: usize,
    pub i0: usize,
    pub j0: usize,
    /// Current positions; both sides always advance equally, so
    /// `i - i0 == j - j0` holds for every unresolved pair.
    pub i: usize,
    pub j: usize,
    /// Final `LCP(i0, j0)` once known.
    pub resolved: Option<usize>,
}

/// The evolving pair set together with the global uncertainty window.
///
/// Invariant (assuming no fingerprint false positive): for every
/// unresolved pair, `i - i0 <= LCP(i0, j0) <= i - i0 + window`.
#[derive(Debug)]
pub struct PairTracker {
    pairs: Vec<PairState>,
    window: usize,
    round: usize,
    threshold: usize,
    n: usize,
    _charge: mem::Charge,
    #[cfg(debug_assertions)]
    oracle_lcps: Option<Vec<usize>>,
}

impl PairTracker {
    /// Validates positions and seeds the tracker: the window starts at the
    /// smallest power of two >= n, and pairs with `i == j` resolve
    /// immediately to the suffix length.
    pub fn new(text: &Text, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = text.len();
        let mut states = Vec::with_capacity(pairs.len());
        for (origin, &(i, j)) in pairs.iter().enumerate() {
            text.check_pos(i)?;
            text.check_pos(j)?;
            let resolved = (i == j).then(|| text.suffix_len(i));
            states.push(PairState {
                origin,
                i0: i,
                j0: j,
                i,
                j,
                resolved,
            });
        }
        let b = pairs.len().max(1);
        Ok(PairTracker {
            pairs: states,
            window: n.next_power_of_two(),
            round: 0,
            threshold: 1.max(n.div_ceil(b)),
            n,
            _charge: mem::charge(PAIR_WORDS * pairs.len()),
            #[cfg(debug_assertions)]
            oracle_lcps: None,
        })
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn round(&self) -> usize {
        self.round
    }

    /// True once the window is small enough for the exact scan phase
    /// (window <= max(1, ceil(n/b))).
    pub fn in_final_phase(&self) -> bool {
        self.window <= self.threshold
    }

    pub fn unresolved_count(&self) -> usize {
        self.pairs.iter().filter(|p| p.resolved.is_none()).count()
    }

    pub fn pairs(&self) -> &[PairState] {
        &self.pairs
    }

    #[cfg(test)]
    fn force_window(&mut self, window: usize) {
        self.window = window;
        self.threshold = 1;
    }

    /// Debug-only: every unresolved pair must sandwich its true LCP within
    /// the current window, and every resolved pair must equal it.
    #[cfg(debug_assertions)]
    fn check_sandwich(&mut self, text: &Text) {
        if self.n.saturating_mul(self.pairs.len()) > DESK_CHECK_LIMIT {
            return;
        }
        let oracle = self.oracle_lcps.get_or_insert_with(|| {
            self.pairs
                .iter()
                .map(|p| {
                    text.suffix(p.i0)
                        .iter()
                        .zip(text.suffix(p.j0))
                        .take_while(|(a, b)| a == b)
                        .count()
                })
                .collect()
        });
        for (pair, &lcp) in self.pairs.iter().zip(oracle.iter()) {
            match pair.resolved {
                Some(r) => assert_eq!(
                    r, lcp,
                    "resolved LCP diverges from oracle for pair {:?}",
                    pair
                ),
                None => {
                    let advanced = pair.i - pair.i0;
                    assert_eq!(
                        advanced,
                        pair.j - pair.j0,
                        "sides advanced unequally for pair {:?}",
                        pair
                    );
                    assert!(
                        advanced <= lcp && lcp <= advanced + self.window,
                        "sandwich violated for pair {:?}: advanced {} window {} oracle {}",
                        pair,
                        advanced,
                        self.window,
                        lcp
                    );
                }
            }
            SANDWICH_CHECKS.with(|c| c.set(c.get() + 1));
        }
    }
}

/// Prefix fingerprints collected at the positions a round needs.
struct PositionSet {
    index: HashMap<usize, usize>,
    /// Sorted distinct positions in [0, n].
    keys: Vec<usize>,
    /// One residue per repetition per key, keyed by slot.
    values: Vec<u64>,
    reps: usize,
    _charge: mem::Charge,
}

impl PositionSet {
    fn build(mut wanted: Vec<usize>, reps: usize) -> Self {
        wanted.sort_unstable();
        wanted.dedup();
        let index: HashMap<usize, usize> =
            wanted.iter().enumerate().map(|(s, &k)| (k, s)).collect();
        let values = vec![0u64; wanted.len() * reps];
        // key + map slot + one word per repetition, per entry
        let charge = mem::charge(wanted.len() * (3 + reps));
        PositionSet {
            index,
            keys: wanted,
            values,
            reps,
            _charge: charge,
        }
    }

    #[inline]
    fn store(&mut self, slot: usize, fps: &[u64]) {
        self.values[slot * self.reps..(slot + 1) * self.reps].copy_from_slice(fps);
    }

    fn get(&self, pos: usize) -> &[u64] {
        let slot = self.index[&pos];
        &self.values[slot * self.reps..(slot + 1) * self.reps]
    }
}

/// Effective probe length for branch `t`: `t*m` clamped to the window and
/// to the shorter suffix's remaining length.
#[inline]
fn probe_len(t: usize, m: usize, window: usize, rem: usize) -> usize {
    (t * m).min(window).min(rem)
}

/// Executes one fingerprint round: scans the text once, then advances every
/// unresolved pair by the longest probed prefix length whose fingerprints
/// match on all repetitions. The window shrinks to ceil(window/alpha).
///
/// Pairs whose probe would run past the text end are clamped to the shorter
/// suffix's remaining length; a clamped match resolves the pair exactly,
/// since an LCP cannot extend past a suffix end.
pub fn run_round(
    text: &Text,
    tracker: &mut PairTracker,
    ctx: &FingerprintContext,
    alpha: usize,
) -> Result<()> {
    if alpha < 2 {
        return Err(Error::InvalidParameter(format!("alpha {alpha} < 2")));
    }
    debug_assert!(!tracker.in_final_phase(), "round run inside final phase");
    let window = tracker.window;
    let m = window.div_ceil(alpha);
    let reps = ctx.reps();

    // Positions whose prefix fingerprints this round needs: for each side
    // of each unresolved pair, the position just before the suffix plus one
    // per probe length.
    let mut wanted = Vec::with_capacity(2 * alpha * tracker.unresolved_count());
    for pair in tracker.pairs.iter().filter(|p| p.resolved.is_none()) {
        let rem = text.suffix_len(pair.i).min(text.suffix_len(pair.j));
        for &base in &[pair.i, pair.j] {
            wanted.push(base - 1);
            for t in 1..alpha {
                wanted.push(base - 1 + probe_len(t, m, window, rem));
            }
        }
    }
    let mut set = PositionSet::build(wanted, reps);
    debug_assert!(set.keys.len() <= 2 * (alpha + 1) * tracker.pairs.len());

    // One pass over the text, maintaining FP[1,l] for every repetition and
    // depositing it whenever l is a wanted position. Positions are sorted,
    // so a single cursor suffices. Symbols are range-checked once up front
    // when the alphabet is smaller than the byte range.
    let check_symbols = ctx.sigma() < 256;
    let mut fps = vec![0u64; reps];
    let mut cursor = 0;
    if set.keys.first() == Some(&0) {
        set.store(0, &fps);
        cursor = 1;
    }
    let scan_to = set.keys.last().copied().unwrap_or(0);
    let mut next_key = set.keys.get(cursor).copied().unwrap_or(usize::MAX);
    for (idx, &sym) in text.bytes()[..scan_to].iter().enumerate() {
        if check_symbols {
            ctx.extend_all(&mut fps, sym as u64)?;
        } else {
            ctx.extend_all_unchecked(&mut fps, sym as u64);
        }
        if idx + 1 == next_key {
            set.store(cursor, &fps);
            cursor += 1;
            next_key = set.keys.get(cursor).copied().unwrap_or(usize::MAX);
        }
    }
    debug_assert_eq!(cursor, set.keys.len());

    // Probe lengths shared by the whole round use the power cache; lengths
    // clamped by a text boundary are pair-specific and computed on the fly
    // to keep the cache bounded by the round schedule.
    let scheduled_pows: Vec<Vec<u64>> = (1..alpha)
        .map(|t| ctx.pows_cached(((t * m).min(window)) as u64))
        .collect();

    let mut fp_i = vec![0u64; reps];
    let mut fp_j = vec![0u64; reps];
    for pair in tracker.pairs.iter_mut().filter(|p| p.resolved.is_none()) {
        let rem = text.suffix_len(pair.i).min(text.suffix_len(pair.j));
        let mut advance = 0;
        let mut resolved_at_end = false;
        for t in 1..alpha {
            let len = probe_len(t, m, window, rem);
            if len <= advance {
                continue; // clamped duplicate of an already-matched probe
            }
            let clamped = len != (t * m).min(window);
            let pows_buf;
            let pows: &[u64] = if clamped {
                pows_buf = ctx.pows_uncached(len as u64);
                &pows_buf
            } else {
                &scheduled_pows[t - 1]
            };
            ctx.compose_all(
                set.get(pair.i - 1),
                set.get(pair.i - 1 + len),
                pows,
                &mut fp_i,
            );
            ctx.compose_all(
                set.get(pair.j - 1),
                set.get(pair.j - 1 + len),
                pows,
                &mut fp_j,
            );
            if fp_i == fp_j {
                advance = len;
                if len == rem {
                    resolved_at_end = true;
                    break;
                }
            } else {
                break;
            }
        }
        pair.i += advance;
        pair.j += advance;
        if resolved_at_end {
            pair.resolved = Some(pair.i - pair.i0);
        }
    }

    tracker.window = m;
    tracker.round += 1;
    // the sandwich invariant presumes no fingerprint false positives, so
    // skip it for deliberately collision-prone contexts (tiny test primes)
    #[cfg(debug_assertions)]
    if ctx.honest_for(text.len()) {
        tracker.check_sandwich(text);
    }
    Ok(())
}

/// Final phase: with the window at most max(1, ceil(n/b)), scan at most
/// `window` symbols per pair to find the exact residue `r`; the answer is
/// `(i + r) - i0`. Total work is O(n + b).
pub fn finalize_small(text: &Text, tracker: &mut PairTracker) -> LcpBatchResult {
    let n = text.len();
    let cap = tracker.window;
    for pair in tracker.pairs.iter_mut() {
        if pair.resolved.is_some() {
            continue;
        }
        let mut r = 0;
        while r < cap
            && pair.i + r <= n
            && pair.j + r <= n
            && text.byte(pair.i + r) == text.byte(pair.j + r)
        {
            r += 1;
        }
        pair.resolved = Some(pair.i + r - pair.i0);
    }
    let _result_charge = mem::charge(tracker.pairs.len());
    let mut lcps = vec![0usize; tracker.pairs.len()];
    for pair in &tracker.pairs {
        lcps[pair.origin] = pair.resolved.expect("finalize resolves every pair");
    }
    LcpBatchResult {
        lcps,
        rounds: tracker.round,
    }
}

/// Answers `LCP(i, j)` for every pair in the batch.
///
/// Exact with high probability (fingerprint false positives are the only
/// failure mode). Auxiliary memory is O(alpha * b) words independent of
/// the text length.
pub fn batch_lcp(
    text: &Text,
    pairs: &[(usize, usize)],
    ctx: &FingerprintContext,
    alpha: usize,
) -> Result<LcpBatchResult> {
    if alpha < 2 {
        return Err(Error::InvalidParameter(format!("alpha {alpha} < 2")));
    }
    if ctx.text_len() < text.len() {
        return Err(Error::InvalidParameter(format!(
            "fingerprint context sized for n = {} but text has length {}",
            ctx.text_len(),
            text.len()
        )));
    }
    if pairs.is_empty() {
        return Ok(LcpBatchResult {
            lcps: Vec::new(),
            rounds: 0,
        });
    }
    let mut tracker = PairTracker::new(text, pairs)?;
    while !tracker.in_final_phase() && tracker.unresolved_count() > 0 {
        run_round(text, &mut tracker, ctx, alpha)?;
    }
    Ok(finalize_small(text, &mut tracker))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_lcp;
    use proptest::prelude::*;

    fn ctx_for(text: &Text) -> FingerprintContext {
        FingerprintContext::new(256, text.len().max(1), 42, 2).unwrap()
    }

    #[test]
    fn batch_examples() {
        let banana = Text::from("banana");
        let ctx = ctx_for(&banana);
        assert_eq!(
            batch_lcp(&banana, &[(2, 4)], &ctx, 2).unwrap().lcps,
            vec![3]
        );

        // a suffix against itself
        for i in 1..=6 {
            assert_eq!(
                batch_lcp(&banana, &[(i, i)], &ctx, 2).unwrap().lcps,
                vec![6 - i + 1]
            );
        }

        // empty batch
        let empty = batch_lcp(&banana, &[], &ctx, 2).unwrap();
        assert!(empty.lcps.is_empty());
        assert_eq!(empty.rounds, 0);

        let mississippi = Text::from("mississippi");
        let ctx = ctx_for(&mississippi);
        assert_eq!(
            batch_lcp(&mississippi, &[(2, 5)], &ctx, 2).unwrap().lcps,
            vec![4]
        );
    }

    #[test]
    fn rejects_out_of_range_positions() {
        let t = Text::from("banana");
        let ctx = ctx_for(&t);
        assert!(matches!(
            batch_lcp(&t, &[(0, 3)], &ctx, 2),
            Err(Error::PositionOutOfRange { pos: 0, .. })
        ));
        assert!(matches!(
            batch_lcp(&t, &[(2, 7)], &ctx, 2),
            Err(Error::PositionOutOfRange { pos: 7, .. })
        ));
        assert!(batch_lcp(&t, &[(1, 2)], &ctx, 1).is_err());
    }

    #[test]
    fn round_advances_on_matching_window() {
        // window 4, alpha 2 probes length 2: "an" at 2 matches "an" at 4
        let t = Text::from("banana");
        let ctx = ctx_for(&t);
        let mut tracker = PairTracker::new(&t, &[(2, 4)]).unwrap();
        tracker.force_window(4);
        run_round(&t, &mut tracker, &ctx, 2).unwrap();
        let p = &tracker.pairs()[0];
        assert_eq!((p.i, p.j), (4, 6));
        assert_eq!(tracker.window(), 2);
    }

    #[test]
    fn round_holds_on_mismatch() {
        // "ba" vs "an" differ, so the pair must not advance
        let t = Text::from("banana");
        let ctx = ctx_for(&t);
        let mut tracker = PairTracker::new(&t, &[(1, 2)]).unwrap();
        tracker.force_window(4);
        run_round(&t, &mut tracker, &ctx, 2).unwrap();
        let p = &tracker.pairs()[0];
        assert_eq!((p.i, p.j), (1, 2));
        assert_eq!(tracker.window(), 2);
    }

    #[test]
    fn round_clamps_at_text_end() {
        // suffixes "na" and "a": probe clamps to length 1, 'n' != 'a'
        let t = Text::from("banana");
        let ctx = ctx_for(&t);
        let mut tracker = PairTracker::new(&t, &[(5, 6)]).unwrap();
        tracker.force_window(4);
        run_round(&t, &mut tracker, &ctx, 2).unwrap();
        let p = &tracker.pairs()[0];
        assert_eq!((p.i, p.j), (5, 6));
        assert!(p.resolved.is_none());
    }

    #[test]
    fn round_resolves_exactly_at_suffix_end() {
        // suffixes "ana" (4) and "anana" (2): with alpha = 4 the probe set
        // reaches length 3 = the whole shorter suffix, resolving the pair
        let t = Text::from("banana");
        let ctx = ctx_for(&t);
        let mut tracker = PairTracker::new(&t, &[(4, 2)]).unwrap();
        tracker.force_window(4);
        run_round(&t, &mut tracker, &ctx, 4).unwrap();
        assert_eq!(tracker.pairs()[0].resolved, Some(3));
    }

    #[test]
    fn finalize_reports_advance_plus_residue() {
        // LCP(1, 9) = 7; enter the final phase advanced by 5 with window 4
        let t = Text::from("abcdefgXabcdefgY");
        let mut tracker = PairTracker::new(&t, &[(1, 9)]).unwrap();
        tracker.pairs[0].i = 6;
        tracker.pairs[0].j = 14;
        tracker.force_window(4);
        let out = finalize_small(&t, &mut tracker);
        assert_eq!(out.lcps, vec![7]);
    }

    #[test]
    fn finalize_with_immediate_mismatch() {
        let t = Text::from("abcdeXZZZabcdeYZ");
        let mut tracker = PairTracker::new(&t, &[(1, 10)]).unwrap();
        tracker.pairs[0].i = 6;
        tracker.pairs[0].j = 15;
        tracker.force_window(4);
        let out = finalize_small(&t, &mut tracker);
        assert_eq!(out.lcps, vec![5]);
    }

    #[test]
    fn finalize_banana_pair() {
        // origin (2,4) arriving advanced by 2 with window 2: one more match
        // then the shorter suffix ends
        let t = Text::from("banana");
        let mut tracker = PairTracker::new(&t, &[(2, 4)]).unwrap();
        tracker.pairs[0].i = 4;
        tracker.pairs[0].j = 6;
        tracker.force_window(2);
        let out = finalize_small(&t, &mut tracker);
        assert_eq!(out.lcps, vec![3]);
    }

    #[test]
    fn exhaustive_on_tiny_texts() {
        // every (i, j) pair on every text length up to 24, several text
        // shapes, several alphas: answers must equal the oracle everywhere,
        // including all end-of-text clamp cases
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for n in 1usize..=24 {
            let texts = [
                Text::new(vec![b'a'; n]),
                Text::new((0..n).map(|_| rng.random_range(0..2u8)).collect()),
                Text::new((0..n).map(|k| (k % 3) as u8).collect()),
            ];
            let pairs: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .collect();
            for text in &texts {
                let ctx = ctx_for(text);
                let want: Vec<usize> = pairs
                    .iter()
                    .map(|&(i, j)| naive_lcp(text, i, j).unwrap())
                    .collect();
                for alpha in [2usize, 3, 5, 16] {
                    let got = batch_lcp(text, &pairs, &ctx, alpha).unwrap();
                    assert_eq!(got.lcps, want, "n={n} alpha={alpha}");
                }
            }
        }
    }

    #[test]
    fn round_count_stays_within_bound() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for &n in &[5usize, 64, 100, 1000, 4096] {
            let bytes: Vec<u8> = (0..n).map(|_| rng.random_range(0..4u8)).collect();
            let text = Text::new(bytes);
            let ctx = ctx_for(&text);
            for &alpha in &[2usize, 3, 4, 16] {
                for &b in &[1usize, 2, 17, 64] {
                    let pairs: Vec<(usize, usize)> = (0..b)
                        .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
                        .collect();
                    let out = batch_lcp(&text, &pairs, &ctx, alpha).unwrap();
                    let bound = ((b as f64).log2() / (alpha as f64).log2()).ceil() as usize + 1;
                    assert!(
                        out.rounds <= bound,
                        "rounds {} > bound {} at n={n} b={b} alpha={alpha}",
                        out.rounds,
                        bound
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_choice_never_changes_answers() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let n = 512;
        let bytes: Vec<u8> = (0..n).map(|_| rng.random_range(0..3u8)).collect();
        let text = Text::new(bytes);
        let ctx = ctx_for(&text);
        let pairs: Vec<(usize, usize)> = (0..64)
            .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
            .collect();
        let base = batch_lcp(&text, &pairs, &ctx, 2).unwrap().lcps;
        for alpha in [3usize, 4, 16, 64] {
            assert_eq!(batch_lcp(&text, &pairs, &ctx, alpha).unwrap().lcps, base);
        }
    }

    #[test]
    fn auxiliary_memory_is_bounded_and_length_invariant() {
        use rand::Rng;
        use rand_chacha::rand_core::SeedableRng;
        // pinned regression constant for peak words <= C * alpha * b
        const C: usize = 24;
        let b = 128;
        let mut peaks = Vec::new();
        for &n in &[1usize << 12, 1 << 13, 1 << 14] {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
            let bytes: Vec<u8> = (0..n).map(|_| rng.random_range(0..=255u8)).collect();
            let text = Text::new(bytes);
            for &alpha in &[2usize, 16] {
                let pairs: Vec<(usize, usize)> = (0..b)
                    .map(|_| (rng.random_range(1..=n), rng.random_range(1..=n)))
                    .collect();
                mem::reset();
                let ctx = ctx_for(&text);
                batch_lcp(&text, &pairs, &ctx, alpha).unwrap();
                let peak = mem::peak_words();
                assert!(peak <= C * alpha * b, "peak {peak} exceeds {C}*{alpha}*{b}");
                if alpha == 2 {
                    peaks.push(peak);
                }
            }
        }
        let lo = *peaks.iter().min().unwrap() as f64;
        let hi = *peaks.iter().max().unwrap() as f64;
        assert!(hi / lo < 1.05, "peak varies with n at fixed b: {peaks:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn agrees_with_oracle(
            bytes in proptest::collection::vec(0u8..4, 1..256),
            seed in any::<u64>(),
            raw_pairs in proptest::collection::vec(any::<(prop::sample::Index, prop::sample::Index)>(), 0..32),
            alpha in 2usize..17,
        ) {
            let text = Text::new(bytes);
            let n = text.len();
            let pairs: Vec<(usize, usize)> = raw_pairs
                .iter()
                .map(|(a, b)| (a.index(n) + 1, b.index(n) + 1))
                .collect();
            let ctx = FingerprintContext::new(256, n, seed, 2).unwrap();
            let got = batch_lcp(&text, &pairs, &ctx, alpha).unwrap();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                prop_assert_eq!(got.lcps[k], naive_lcp(&text, i, j).unwrap());
            }
        }
    }
}
