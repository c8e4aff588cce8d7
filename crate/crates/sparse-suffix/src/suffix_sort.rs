//! Stage 1: lexicographic sorting of the chosen suffixes.
//!
//! Simulates randomized quicksort over the suffixes, but batches all pivot
//! comparisons of one recursion level into a single batched LCP call, so a
//! level costs one scan of the text rather than one per comparison. Once
//! the LCP of two suffixes is known, their order follows from the first
//! differing character (or from one suffix running out, in which case the
//! shorter sorts first). Expected O(log b) levels; O(b) auxiliary words
//! plus whatever one batched LCP call uses.

use std::cmp::Ordering;
use std::collections::HashSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::batched_lcp::batch_lcp;
use crate::error::{Error, Result};
use crate::fingerprint::FingerprintContext;
use crate::mem;
use crate::text::Text;

/// The b chosen positions in lexicographic order of their suffixes, with
/// the LCP of each adjacent pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseSuffixArray {
    /// Positions sorted so that `T[sa[t]..] < T[sa[t+1]..]`.
    pub sa: Vec<usize>,
    /// `adj_lcp[t] = LCP(sa[t], sa[t+1])`; empty when b < 2.
    pub adj_lcp: Vec<usize>,
    /// Text length the positions refer to.
    pub n: usize,
}

impl SparseSuffixArray {
    pub fn len(&self) -> usize {
        self.sa.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sa.is_empty()
    }

    /// Cheap structural checks: lengths line up, positions are in range
    /// and distinct, adjacent LCPs fit inside both suffixes, and the
    /// characters right after each claimed LCP actually order the pair.
    pub fn check(&self, text: &Text) -> Result<()> {
        if self.n != text.len() {
            return Err(Error::InvalidParameter(format!(
                "suffix array built for n = {} but text has length {}",
                self.n,
                text.len()
            )));
        }
        if !self.sa.is_empty() && self.adj_lcp.len() + 1 != self.sa.len() {
            return Err(Error::InvalidParameter(
                "adjacent-LCP list does not match the position list".into(),
            ));
        }
        let mut seen = HashSet::new();
        for &pos in &self.sa {
            text.check_pos(pos)?;
            if !seen.insert(pos) {
                return Err(Error::DuplicatePosition { pos });
            }
        }
        for (t, &lcp) in self.adj_lcp.iter().enumerate() {
            let (i, j) = (self.sa[t], self.sa[t + 1]);
            let max_fit = text.suffix_len(i).min(text.suffix_len(j));
            if lcp > max_fit {
                return Err(Error::InvalidParameter(format!(
                    "adjacent LCP {lcp} longer than suffixes at ({i}, {j})"
                )));
            }
            if compare_after_lcp(text, i, j, lcp) != Ordering::Less {
                return Err(Error::InvalidParameter(format!(
                    "positions {i} and {j} are not in lexicographic order"
                )));
            }
        }
        Ok(())
    }
}

/// Level-count and round-count statistics from one sort.
#[derive(Debug, Clone, Copy, Default)]
pub struct SortStats {
    /// Quicksort recursion levels executed.
    pub levels: usize,
    /// Largest round count over all batched LCP calls (including the
    /// final adjacent-pair call).
    pub max_rounds: usize,
    /// Number of batched LCP calls issued.
    pub batches: usize,
}

/// Orders suffixes `i` and `j` given their LCP: a suffix that is exhausted
/// by the LCP is a proper prefix of the other and sorts first; otherwise
/// the characters just past the common prefix decide.
pub fn compare_after_lcp(text: &Text, i: usize, j: usize, lcp: usize) -> Ordering {
    let n = text.len();
    if i + lcp > n {
        return Ordering::Less;
    }
    if j + lcp > n {
        return Ordering::Greater;
    }
    text.byte(i + lcp).cmp(&text.byte(j + lcp))
}

/// Sorts the given distinct positions by their suffixes and computes the
/// adjacent LCPs (one extra batched LCP call on the b-1 consecutive pairs).
pub fn sort_suffixes(
    text: &Text,
    positions: &[usize],
    ctx: &FingerprintContext,
    alpha: usize,
    seed: u64,
) -> Result<SparseSuffixArray> {
    sort_suffixes_with_stats(text, positions, ctx, alpha, seed).map(|(ssa, _)| ssa)
}

pub fn sort_suffixes_with_stats(
    text: &Text,
    positions: &[usize],
    ctx: &FingerprintContext,
    alpha: usize,
    seed: u64,
) -> Result<(SparseSuffixArray, SortStats)> {
    let n = text.len();
    let mut seen = HashSet::with_capacity(positions.len());
    for &pos in positions {
        text.check_pos(pos)?;
        if !seen.insert(pos) {
            return Err(Error::DuplicatePosition { pos });
        }
    }
    drop(seen);

    let mut stats = SortStats::default();
    let b = positions.len();
    if b <= 1 {
        return Ok((
            SparseSuffixArray {
                sa: positions.to_vec(),
                adj_lcp: Vec::new(),
                n,
            },
            stats,
        ));
    }

    // working copy + segment worklists + scratch partition buffer
    let _charge = mem::charge(6 * b);
    let mut arr = positions.to_vec();
    // dedicated RNG stream for pivot selection
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);

    // Each level partitions every active segment around a random pivot,
    // answering all pivot comparisons with one batched LCP call.
    let mut segments: Vec<(usize, usize)> = vec![(0, b)];
    let mut scratch: Vec<usize> = Vec::with_capacity(b);
    while !segments.is_empty() {
        stats.levels += 1;
        let mut pivots: Vec<usize> = Vec::with_capacity(segments.len());
        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(b);
        for &(lo, hi) in &segments {
            if hi - lo == 2 {
                pivots.push(usize::MAX); // direct comparison, no pivot
                pairs.push((arr[lo], arr[lo + 1]));
            } else {
                let pivot_idx = lo + rng.random_range(0..hi - lo);
                pivots.push(pivot_idx);
                let pivot_pos = arr[pivot_idx];
                for (k, &pos) in arr.iter().enumerate().take(hi).skip(lo) {
                    if k != pivot_idx {
                        pairs.push((pos, pivot_pos));
                    }
                }
            }
        }

        let batch = batch_lcp(text, &pairs, ctx, alpha)?;
        stats.batches += 1;
        stats.max_rounds = stats.max_rounds.max(batch.rounds);

        let mut next_segments: Vec<(usize, usize)> = Vec::new();
        let mut cursor = 0;
        for (seg_idx, &(lo, hi)) in segments.iter().enumerate() {
            if hi - lo == 2 {
                let (i, j) = pairs[cursor];
                let lcp = batch.lcps[cursor];
                cursor += 1;
                if compare_after_lcp(text, i, j, lcp) == Ordering::Greater {
                    arr.swap(lo, lo + 1);
                }
                continue;
            }
            let pivot_idx = pivots[seg_idx];
            let pivot_pos = arr[pivot_idx];
            scratch.clear();
            let mut less = 0;
            // partition: everything smaller than the pivot first
            for (k, &pos) in arr.iter().enumerate().take(hi).skip(lo) {
                if k == pivot_idx {
                    continue;
                }
                let lcp = batch.lcps[cursor];
                cursor += 1;
                if compare_after_lcp(text, pos, pivot_pos, lcp) == Ordering::Less {
                    scratch.push(pos);
                    less += 1;
                }
            }
            cursor -= hi - lo - 1;
            scratch.push(pivot_pos);
            for (k, &pos) in arr.iter().enumerate().take(hi).skip(lo) {
                if k == pivot_idx {
                    continue;
                }
                let lcp = batch.lcps[cursor];
                cursor += 1;
                if compare_after_lcp(text, pos, pivot_pos, lcp) == Ordering::Greater {
                    scratch.push(pos);
                }
            }
            arr[lo..hi].copy_from_slice(&scratch);
            if less >= 2 {
                next_segments.push((lo, lo + less));
            }
            if hi - (lo + less + 1) >= 2 {
                next_segments.push((lo + less + 1, hi));
            }
        }
        segments = next_segments;
    }

    // adjacent LCPs in one extra batch
    let adj_pairs: Vec<(usize, usize)> = arr.windows(2).map(|w| (w[0], w[1])).collect();
    let adj = batch_lcp(text, &adj_pairs, ctx, alpha)?;
    stats.batches += 1;
    stats.max_rounds = stats.max_rounds.max(adj.rounds);

    Ok((
        SparseSuffixArray {
            sa: arr,
            adj_lcp: adj.lcps,
            n,
        },
        stats,
    ))
}
