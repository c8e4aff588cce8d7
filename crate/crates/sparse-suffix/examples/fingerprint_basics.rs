//! Prefix fingerprints: constant-time extension and substring composition.
//!
//! Run with: cargo run --example fingerprint_basics

use sparse_suffix::{FingerprintContext, Text};

fn main() -> sparse_suffix::Result<()> {
    let text = Text::from("abracadabra");
    let n = text.len();
    let ctx = FingerprintContext::new(256, n, 42, 2)?;
    println!("moduli: {:?}", ctx.primes());

    // every prefix fingerprint, by repeated O(1) extension
    let mut prefixes = vec![ctx.empty(0)];
    for i in 1..=n {
        let next = ctx.prefix_extend(*prefixes.last().unwrap(), text.byte(i) as u64)?;
        prefixes.push(next);
    }
    println!("FP[1,4] (\"abra\") = {}", prefixes[4].value);

    // substring fingerprints compose in O(1) from two prefixes:
    // "abra" occurs at 1..4 and 8..11, and the fingerprints agree
    let first = ctx.substring_fingerprint(prefixes[0], prefixes[4], 0, 4)?;
    let second = ctx.substring_fingerprint(prefixes[7], prefixes[11], 7, 11)?;
    println!("FP of \"abra\" at 1..4:  {}", first.value);
    println!("FP of \"abra\" at 8..11: {}", second.value);
    assert_eq!(first, second);

    // different substrings virtually always differ
    let cada = ctx.substring_fingerprint(prefixes[4], prefixes[8], 4, 8)?;
    println!("FP of \"cada\" at 5..8:  {}", cada.value);
    assert_ne!(first.value, cada.value);

    // the same (seed, n, sigma, reps) always rebuilds the same context
    let again = FingerprintContext::new(256, n, 42, 2)?;
    assert_eq!(ctx.primes(), again.primes());
    println!("context reconstruction is deterministic");
    Ok(())
}
