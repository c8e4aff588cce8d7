//! Watch the batched LCP engine narrow its uncertainty window round by
//! round: each round advances pairs by fingerprint-verified prefix lengths,
//! then the small residue is scanned exactly.
//!
//! Run with: cargo run --example rounds_walkthrough

use sparse_suffix::batched_lcp::{finalize_small, run_round, PairTracker};
use sparse_suffix::{generate, oracle, FingerprintContext};

fn main() -> sparse_suffix::Result<()> {
    let text = generate::alternating_ab(64);
    let pairs = [(1, 3), (1, 2), (5, 33), (60, 62), (10, 10)];
    let alpha = 2;

    let ctx = FingerprintContext::new(256, text.len(), 0, 2)?;
    let mut tracker = PairTracker::new(&text, &pairs)?;

    println!("text: (ab)^32, pairs: {pairs:?}, alpha = {alpha}\n");
    let show = |tracker: &PairTracker| {
        for p in tracker.pairs() {
            match p.resolved {
                Some(lcp) => println!("  pair ({}, {}): resolved, lcp = {lcp}", p.i0, p.j0),
                None => println!(
                    "  pair ({}, {}): at ({}, {}), advanced {}",
                    p.i0,
                    p.j0,
                    p.i,
                    p.j,
                    p.i - p.i0
                ),
            }
        }
    };
    println!("start: window = {}", tracker.window());
    show(&tracker);

    while !tracker.in_final_phase() && tracker.unresolved_count() > 0 {
        run_round(&text, &mut tracker, &ctx, alpha)?;
        println!(
            "\nafter round {}: window = {}",
            tracker.round(),
            tracker.window()
        );
        show(&tracker);
    }

    let result = finalize_small(&text, &mut tracker);
    println!(
        "\nfinal phase scans at most {} symbols per pair:",
        tracker.window()
    );
    for (&(i, j), &lcp) in pairs.iter().zip(&result.lcps) {
        assert_eq!(lcp, oracle::naive_lcp(&text, i, j)?);
        println!("  LCP({i}, {j}) = {lcp}");
    }
    println!(
        "\n{} rounds total; every answer matches the oracle",
        result.rounds
    );
    Ok(())
}
