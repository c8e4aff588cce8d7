//! Benchmark cells: generate an input, build the full index, and report
//! rounds, wall time, and peak auxiliary words.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::fingerprint::FingerprintContext;
use crate::generate;
use crate::mem;
use crate::sst_build::build_tree;
use crate::suffix_sort::sort_suffixes_with_stats;

/// One CSV row of the bench grid.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub b: usize,
    pub alpha: usize,
    /// Largest round count over all batched LCP calls in the build.
    pub rounds: usize,
    pub wall_ms: f64,
    pub peak_aux_words: usize,
}

pub const CSV_HEADER: &str = "n,b,alpha,rounds,wall_ms,peak_aux_words";

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.3},{}",
            self.n, self.b, self.alpha, self.rounds, self.wall_ms, self.peak_aux_words
        )
    }
}

/// Most rounds any batched LCP call may take: the smallest k with
/// alpha^k >= b, plus one for the window's power-of-two rounding.
pub fn round_bound(b: usize, alpha: usize) -> usize {
    if b <= 1 {
        return 1;
    }
    let mut k = 0;
    let mut reach = 1u128;
    while reach < b as u128 {
        reach *= alpha as u128;
        k += 1;
    }
    k + 1
}

/// Generates a random byte text and position set for the cell, builds the
/// sparse suffix tree, and measures the build. Input generation happens
/// before the measurement window and is not charged.
pub fn run_cell(n: usize, b: usize, alpha: usize, seed: u64, reps: usize) -> Result<BenchRow> {
    if b > n {
        return Err(Error::InvalidParameter(format!(
            "b = {b} positions cannot be distinct in a text of length {n}"
        )));
    }
    let cell_seed = generate::derive_seed(
        seed,
        (n as u64)
            .wrapping_mul(0x1000_0001)
            .wrapping_add(b as u64)
            .wrapping_mul(0x101)
            .wrapping_add(alpha as u64),
    );
    let text = generate::uniform_text(n, 256, generate::derive_seed(cell_seed, 1));
    let positions = generate::distinct_positions(n, b, generate::derive_seed(cell_seed, 2));

    mem::reset();
    let started = Instant::now();
    let ctx = FingerprintContext::new(256, n, generate::derive_seed(cell_seed, 3), reps)?;
    let (ssa, stats) = sort_suffixes_with_stats(
        &text,
        &positions,
        &ctx,
        alpha,
        generate::derive_seed(cell_seed, 4),
    )?;
    let tree = build_tree(&text, &ssa)?;
    let wall_ms = started.elapsed().as_secs_f64() * 1e3;
    let peak_aux_words = mem::peak_words();
    std::hint::black_box(&tree);

    let bound = round_bound(b, alpha);
    if stats.max_rounds > bound {
        return Err(Error::Internal(format!(
            "round count {} exceeds bound {} at n={n} b={b} alpha={alpha}",
            stats.max_rounds, bound
        )));
    }

    Ok(BenchRow {
        n,
        b,
        alpha,
        rounds: stats.max_rounds,
        wall_ms,
        peak_aux_words,
    })
}
