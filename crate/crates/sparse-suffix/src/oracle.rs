//! Brute-force reference implementations.
//!
//! These share no logic with the fingerprint path: LCPs come from direct
//! character scans, sorting from direct suffix comparison, and the tree
//! from root-to-leaf insertion of one suffix at a time (the O(nb)
//! algorithm). Agreement between the two paths is therefore evidence, not
//! tautology. Deliberately simple and slow; a guard refuses instances with
//! n*b beyond 10^8 unless the `_forced` variant is used.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::sst_build::{Edge, SparseSuffixTree, SstNode};
use crate::suffix_sort::SparseSuffixArray;
use crate::text::Text;

/// Work ceiling for the guarded entry points.
pub const GUARD_LIMIT: u128 = 100_000_000;

fn guard(n: usize, b: usize) -> Result<()> {
    let nb = n as u128 * b as u128;
    if nb > GUARD_LIMIT {
        return Err(Error::OracleRefused {
            nb,
            limit: GUARD_LIMIT,
        });
    }
    Ok(())
}

fn check_distinct(text: &Text, positions: &[usize]) -> Result<()> {
    let mut seen = HashSet::with_capacity(positions.len());
    for &pos in positions {
        text.check_pos(pos)?;
        if !seen.insert(pos) {
            return Err(Error::DuplicatePosition { pos });
        }
    }
    Ok(())
}

/// Character-by-character LCP of the suffixes at `i` and `j`.
pub fn naive_lcp(text: &Text, i: usize, j: usize) -> Result<usize> {
    text.check_pos(i)?;
    text.check_pos(j)?;
    Ok(text
        .suffix(i)
        .iter()
        .zip(text.suffix(j))
        .take_while(|(a, b)| a == b)
        .count())
}

/// One naive LCP per pair, guarded by `n * pairs <= 10^8`.
pub fn naive_batch_lcp(text: &Text, pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
    guard(text.len(), pairs.len())?;
    naive_batch_lcp_forced(text, pairs)
}

pub fn naive_batch_lcp_forced(text: &Text, pairs: &[(usize, usize)]) -> Result<Vec<usize>> {
    pairs.iter().map(|&(i, j)| naive_lcp(text, i, j)).collect()
}

/// Comparison sort with direct suffix comparison; adjacent LCPs by scan.
pub fn naive_sort(text: &Text, positions: &[usize]) -> Result<SparseSuffixArray> {
    guard(text.len(), positions.len())?;
    naive_sort_forced(text, positions)
}

pub fn naive_sort_forced(text: &Text, positions: &[usize]) -> Result<SparseSuffixArray> {
    check_distinct(text, positions)?;
    let mut sa = positions.to_vec();
    sa.sort_by(|&a, &b| text.suffix(a).cmp(text.suffix(b)));
    let adj_lcp = sa
        .windows(2)
        .map(|w| naive_lcp(text, w[0], w[1]))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseSuffixArray {
        sa,
        adj_lcp,
        n: text.len(),
    })
}

/// Builds the sparse suffix tree by inserting each suffix from the root,
/// one character at a time, with the same terminator convention as the
/// main path. O(nb).
pub fn naive_tree(text: &Text, positions: &[usize]) -> Result<SparseSuffixTree> {
    guard(text.len(), positions.len())?;
    naive_tree_forced(text, positions)
}

pub fn naive_tree_forced(text: &Text, positions: &[usize]) -> Result<SparseSuffixTree> {
    check_distinct(text, positions)?;
    let mut tree = SparseSuffixTree::empty(text.len());
    for &q in positions {
        insert_suffix(&mut tree, text, q);
        tree.leaf_count += 1;
    }
    Ok(tree)
}

/// Symbol `offset` positions into the terminated suffix at `q`;
/// `None` is the terminator, which sorts before every byte.
fn suffix_symbol(text: &Text, q: usize, offset: usize) -> Option<u8> {
    if q + offset <= text.len() {
        Some(text.byte(q + offset))
    } else {
        None
    }
}

fn edge_symbol(text: &Text, edge: &Edge, k: usize) -> Option<u8> {
    if k < edge.text_len() {
        Some(text.byte(edge.start + k))
    } else {
        None
    }
}

fn symbol_rank(s: Option<u8>) -> u16 {
    s.map_or(0, |b| b as u16 + 1)
}

/// Appends `edge` under `node`, then rotates it into `slot` so children
/// stay ordered by first symbol.
fn insert_edge_at(tree: &mut SparseSuffixTree, node: usize, slot: usize, edge: Edge) {
    tree.add_edge(node, edge);
    tree.nodes[node].children[slot..].rotate_right(1);
}

fn insert_suffix(tree: &mut SparseSuffixTree, text: &Text, q: usize) {
    let n = text.len();
    let total = text.suffix_len(q) + 1; // including the terminator
    let mut node = tree.root;
    let mut offset = 0; // symbols matched so far == length of `node`

    loop {
        let want = symbol_rank(suffix_symbol(text, q, offset));
        let mut slot = tree.nodes[node].children.len();
        let mut hit = None;
        for (idx, e) in tree.nodes[node].children.iter().enumerate() {
            match symbol_rank(e.first_symbol(text)).cmp(&want) {
                Ordering::Equal => {
                    hit = Some(idx);
                    break;
                }
                Ordering::Greater => {
                    slot = idx;
                    break;
                }
                Ordering::Less => {}
            }
        }

        let Some(idx) = hit else {
            // no child starts with this symbol: attach a fresh leaf
            let leaf = tree.add_node(SstNode {
                length: total,
                children: Vec::new(),
                leaf_pos: Some(q),
            });
            insert_edge_at(
                tree,
                node,
                slot,
                Edge {
                    start: q + offset,
                    end: n,
                    terminator: true,
                    child: leaf,
                },
            );
            return;
        };

        let edge = tree.nodes[node].children[idx].clone();
        let label_len = edge.label_len();
        let mut k = 1;
        while k < label_len && edge_symbol(text, &edge, k) == suffix_symbol(text, q, offset + k) {
            k += 1;
        }
        if k == label_len {
            // the whole edge matched; a full match into a leaf would mean a
            // duplicate suffix, which distinct positions rule out
            debug_assert!(!edge.terminator, "duplicate suffix at position {q}");
            node = edge.child;
            offset += k;
            continue;
        }

        // diverged after k matched symbols: split the edge there
        debug_assert!(k >= 1 && k <= edge.text_len());
        let mid = tree.add_node(SstNode {
            length: offset + k,
            children: vec![Edge {
                start: edge.start + k,
                end: edge.end,
                terminator: edge.terminator,
                child: edge.child,
            }],
            leaf_pos: None,
        });
        tree.nodes[node].children[idx] = Edge {
            start: edge.start,
            end: edge.start + k - 1,
            terminator: false,
            child: mid,
        };
        let leaf = tree.add_node(SstNode {
            length: total,
            children: Vec::new(),
            leaf_pos: Some(q),
        });
        let new_rank = symbol_rank(suffix_symbol(text, q, offset + k));
        let low_rank = symbol_rank(tree.nodes[mid].children[0].first_symbol(text));
        debug_assert_ne!(new_rank, low_rank, "split point must diverge");
        let pos = if new_rank < low_rank { 0 } else { 1 };
        insert_edge_at(
            tree,
            mid,
            pos,
            Edge {
                start: q + offset + k,
                end: n,
                terminator: true,
                child: leaf,
            },
        );
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sst_build::validate_tree;
    use proptest::prelude::*;

    #[test]
    fn lcp_examples() {
        let banana = Text::from("banana");
        assert_eq!(naive_lcp(&banana, 2, 4).unwrap(), 3);
        for i in 1..=6 {
            assert_eq!(naive_lcp(&banana, i, i).unwrap(), 6 - i + 1);
        }
        let ab = Text::from("ab");
        assert_eq!(naive_lcp(&ab, 1, 2).unwrap(), 0);
        assert!(naive_lcp(&ab, 0, 1).is_err());
        assert!(naive_lcp(&ab, 1, 3).is_err());
    }

    #[test]
    fn sort_examples() {
        let banana = Text::from("banana");
        let ssa = naive_sort(&banana, &[1, 3, 5]).unwrap();
        assert_eq!(ssa.sa, vec![1, 5, 3]);
        assert_eq!(ssa.adj_lcp, vec![0, 2]);

        assert_eq!(naive_sort(&banana, &[4]).unwrap().sa, vec![4]);

        let aaaa = Text::from("aaaa");
        assert_eq!(
            naive_sort(&aaaa, &[1, 2, 3, 4]).unwrap().sa,
            vec![4, 3, 2, 1]
        );
    }

    #[test]
    fn tree_examples() {
        let banana = Text::from("banana");
        let tree = naive_tree(&banana, &[1, 3, 5]).unwrap();
        let ssa = naive_sort(&banana, &[1, 3, 5]).unwrap();
        assert!(validate_tree(&tree, &banana, &ssa).is_empty());

        let single = naive_tree(&banana, &[2]).unwrap();
        assert_eq!(single.leaf_count, 1);
        assert_eq!(single.nodes.len(), 2);

        // "aa": root -> internal "a" (length 1) -> two leaves
        let aa = Text::from("aa");
        let tree = naive_tree(&aa, &[1, 2]).unwrap();
        let root = tree.node(tree.root);
        assert_eq!(root.children.len(), 1);
        let mid = tree.node(root.children[0].child);
        assert_eq!(mid.length, 1);
        assert_eq!(mid.children.len(), 2);
    }

    #[test]
    fn insertion_order_does_not_matter() {
        let t = Text::from("abracadabra");
        let a = naive_tree(&t, &[1, 4, 8, 11, 2]).unwrap();
        let b = naive_tree(&t, &[11, 2, 8, 1, 4]).unwrap();
        assert_eq!(a.canonical_string(&t), b.canonical_string(&t));
    }

    #[test]
    fn guard_refuses_large_instances() {
        let text = Text::new(vec![b'a'; 200_001]);
        let positions: Vec<usize> = (1..=501).collect();
        assert!(matches!(
            naive_sort(&text, &positions),
            Err(Error::OracleRefused { .. })
        ));
        // the forced variant runs anyway
        assert!(naive_sort_forced(&text, &positions[..2]).is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn lcp_is_symmetric(
            bytes in proptest::collection::vec(0u8..3, 1..256),
            pick in any::<(prop::sample::Index, prop::sample::Index)>(),
        ) {
            let text = Text::new(bytes);
            let n = text.len();
            let (i, j) = (pick.0.index(n) + 1, pick.1.index(n) + 1);
            prop_assert_eq!(
                naive_lcp(&text, i, j).unwrap(),
                naive_lcp(&text, j, i).unwrap()
            );
        }

        #[test]
        fn lcp_splits_additively(
            bytes in proptest::collection::vec(0u8..3, 1..256),
            pick in any::<(prop::sample::Index, prop::sample::Index, prop::sample::Index)>(),
        ) {
            // LCP(i+m, j+m) + m = LCP(i, j) for any m <= LCP(i, j)
            let text = Text::new(bytes);
            let n = text.len();
            let (i, j) = (pick.0.index(n) + 1, pick.1.index(n) + 1);
            let lcp = naive_lcp(&text, i, j).unwrap();
            let m = pick.2.index(lcp + 1);
            if i + m <= n && j + m <= n {
                prop_assert_eq!(naive_lcp(&text, i + m, j + m).unwrap() + m, lcp);
            }
        }
    }
}
