//! Build the sparse suffix array for a handful of chosen positions.
//!
//! Run with: cargo run --example build_sparse_suffix_array

use sparse_suffix::{sort_suffixes, FingerprintContext, Text};

fn main() -> sparse_suffix::Result<()> {
    let text = Text::from("banana");
    let positions = [1, 3, 5];

    let ctx = FingerprintContext::new(256, text.len(), 0, 2)?;
    let ssa = sort_suffixes(&text, &positions, &ctx, 2, 0)?;

    println!("text: {:?}", std::str::from_utf8(text.bytes()).unwrap());
    println!("chosen positions: {positions:?}\n");
    println!("rank  pos  lcp_prev  suffix");
    for (rank, &pos) in ssa.sa.iter().enumerate() {
        let lcp = if rank == 0 {
            "-".to_string()
        } else {
            ssa.adj_lcp[rank - 1].to_string()
        };
        println!(
            "{rank:>4}  {pos:>3}  {lcp:>8}  {:?}",
            std::str::from_utf8(text.suffix(pos)).unwrap()
        );
    }

    // a larger, seeded instance sorted against every position
    let text = sparse_suffix::generate::uniform_text(10_000, 4, 7);
    let positions = sparse_suffix::generate::distinct_positions(text.len(), 12, 7);
    let ctx = FingerprintContext::new(256, text.len(), 7, 2)?;
    let ssa = sort_suffixes(&text, &positions, &ctx, 2, 7)?;
    println!("\n12 random positions of a random 10k text, sorted:");
    println!("{:?}", ssa.sa);
    println!("adjacent LCPs: {:?}", ssa.adj_lcp);
    Ok(())
}
