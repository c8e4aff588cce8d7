//! Build a sparse suffix tree, validate it, and print it three ways.
//!
//! Run with: cargo run --example build_sparse_suffix_tree

use sparse_suffix::cli::{render_tree_dot, render_tree_json, render_tree_text};
use sparse_suffix::{build_tree, sort_suffixes, validate_tree, FingerprintContext, Text};

fn main() -> sparse_suffix::Result<()> {
    let text = Text::from("banana");
    let positions = [1, 3, 5];

    let ctx = FingerprintContext::new(256, text.len(), 0, 2)?;
    let ssa = sort_suffixes(&text, &positions, &ctx, 2, 0)?;
    let tree = build_tree(&text, &ssa)?;

    let faults = validate_tree(&tree, &text, &ssa);
    assert!(faults.is_empty(), "invalid tree: {faults:?}");
    println!(
        "tree over {:?} with leaves at {positions:?} ({} nodes)\n",
        std::str::from_utf8(text.bytes()).unwrap(),
        tree.nodes.len()
    );

    println!("{}", render_tree_text(&tree, &text, false));

    println!("as JSON:\n{}", render_tree_json(&tree, false));
    println!(
        "as DOT (pipe into `dot -Tpng`):\n{}",
        render_tree_dot(&tree, &text, false)
    );

    // leaves come back in suffix-array order, LCAs carry the adjacent LCPs
    let (leaves, lca_lengths) = tree.dfs_leaves_and_lca_lengths();
    assert_eq!(leaves, ssa.sa);
    assert_eq!(lca_lengths, ssa.adj_lcp);
    println!("DFS leaf order: {leaves:?}, consecutive-leaf LCA lengths: {lca_lengths:?}");
    Ok(())
}
