//! Answer many LCP queries with shared text scans, and check them against
//! the brute-force oracle.
//!
//! Run with: cargo run --example batch_lcp_queries

use sparse_suffix::{batch_lcp, oracle, FingerprintContext, Text};

fn main() -> sparse_suffix::Result<()> {
    let text = Text::from("mississippi");
    let pairs = [(2, 5), (1, 1), (2, 4), (9, 10), (5, 8)];

    let ctx = FingerprintContext::new(256, text.len(), 0, 2)?;
    let result = batch_lcp(&text, &pairs, &ctx, 2)?;

    println!(
        "text: {:?} (n = {})\n",
        std::str::from_utf8(text.bytes()).unwrap(),
        text.len()
    );
    println!("   i    j  lcp  common prefix");
    for (&(i, j), &lcp) in pairs.iter().zip(&result.lcps) {
        let prefix = std::str::from_utf8(&text.suffix(i)[..lcp]).unwrap();
        println!("{i:>4} {j:>4}  {lcp:>3}  {prefix:?}");
        assert_eq!(lcp, oracle::naive_lcp(&text, i, j)?);
    }
    println!(
        "\nresolved in {} fingerprint rounds; all agree with the oracle",
        result.rounds
    );

    // a bigger batch: 1000 queries on a 100k text cost a handful of scans,
    // not 1000 of them
    let text = sparse_suffix::generate::uniform_text(100_000, 2, 1);
    let pairs = sparse_suffix::generate::random_pairs(text.len(), 1000, 2);
    let ctx = FingerprintContext::new(256, text.len(), 1, 2)?;
    let result = batch_lcp(&text, &pairs, &ctx, 2)?;
    let reference = oracle::naive_batch_lcp(&text, &pairs)?;
    assert_eq!(result.lcps, reference);
    println!(
        "1000 queries on a random binary 100k text: {} rounds, max LCP {}",
        result.rounds,
        result.lcps.iter().max().unwrap()
    );
    Ok(())
}
