//! Sparse suffix array and sparse suffix tree construction using O(b)
//! words of working memory for any b chosen positions of a text of
//! length n.
//!
//! The engine is a batched LCP procedure over Karp-Rabin fingerprints:
//! all b queries share O(log b) scans of the text instead of paying O(n)
//! each, and only O(alpha * b) words of auxiliary state ever exist at
//! once. On top of it sit a level-batched quicksort over the chosen
//! suffixes (stage 1) and a DFS-simulated tree assembly (stage 2).
//!
//! # Library layout
//!
//! - [`fingerprint`]: prefix fingerprints, O(1) extension and substring
//!   composition, random prime selection.
//! - [`batched_lcp`]: the round engine, [`batched_lcp::batch_lcp`].
//! - [`suffix_sort`]: [`suffix_sort::sort_suffixes`] producing a
//!   [`SparseSuffixArray`].
//! - [`sst_build`]: [`sst_build::build_tree`] producing a
//!   [`SparseSuffixTree`], plus [`sst_build::validate_tree`].
//! - [`oracle`]: brute-force references the fast path is tested against.
//! - [`generate`]: seeded input generators, uniform and adversarial.
//! - [`mem`]: the auxiliary-memory word counter behind the O(b) claims.
//! - [`mod@bench`]: one-cell benchmark runs reporting rounds, time, memory.
//! - [`cli`]: the `sparse-suffix` binary's subcommands.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example build_sparse_suffix_array
//! cargo run --example build_sparse_suffix_tree
//! cargo run --example batch_lcp_queries
//! cargo run --example fingerprint_basics
//! cargo run --example rounds_walkthrough
//! cargo run --example alpha_space_tradeoff
//! ```
//!
//! Quick start:
//!
//! ```
//! use sparse_suffix::{FingerprintContext, Text, sort_suffixes, build_tree};
//!
//! let text = Text::from("banana");
//! let ctx = FingerprintContext::new(256, text.len(), 0, 2)?;
//! let ssa = sort_suffixes(&text, &[1, 3, 5], &ctx, 2, 0)?;
//! assert_eq!(ssa.sa, vec![1, 5, 3]);
//! assert_eq!(ssa.adj_lcp, vec![0, 2]);
//! let tree = build_tree(&text, &ssa)?;
//! assert_eq!(tree.leaf_count, 3);
//! # Ok::<(), sparse_suffix::Error>(())
//! ```

pub mod batched_lcp;
pub mod bench;
pub mod cli;
pub mod error;
pub mod fingerprint;
pub mod generate;
pub mod mem;
pub mod oracle;
pub mod sst_build;
pub mod suffix_sort;
pub mod text;

pub use batched_lcp::{batch_lcp, LcpBatchResult, PairTracker};
pub use error::{Error, Result};
pub use fingerprint::{Fingerprint, FingerprintContext};
pub use sst_build::{build_tree, validate_tree, SparseSuffixTree, SstNode};
pub use suffix_sort::{compare_after_lcp, sort_suffixes, SparseSuffixArray};
pub use text::Text;
