//! The alpha knob trades auxiliary memory for rounds: an alpha-ary search
//! needs O(alpha * b) words but only ceil(log b / log alpha) + 1 rounds.
//!
//! Run with: cargo run --example alpha_space_tradeoff

use sparse_suffix::bench;

fn main() -> sparse_suffix::Result<()> {
    let (n, b) = (1 << 18, 1024);
    println!("building the sparse suffix tree at n = {n}, b = {b}\n");
    println!("alpha  rounds  peak_aux_words  wall_ms");
    let mut baseline = None;
    for alpha in [2usize, 4, 16] {
        let row = bench::run_cell(n, b, alpha, 0, 2)?;
        println!(
            "{alpha:>5}  {:>6}  {:>14}  {:>7.1}",
            row.rounds, row.peak_aux_words, row.wall_ms
        );
        let base = *baseline.get_or_insert(row.peak_aux_words);
        assert!(row.peak_aux_words <= alpha * base);
    }
    println!("\nand the same memory at fixed (b, alpha) while n quadruples:\n");
    println!("      n  rounds  peak_aux_words");
    for n in [1 << 16, 1 << 18, 1 << 20] {
        let row = bench::run_cell(n, b, 2, 0, 2)?;
        println!("{n:>7}  {:>6}  {:>14}", row.rounds, row.peak_aux_words);
    }
    Ok(())
}
