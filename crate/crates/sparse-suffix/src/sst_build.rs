//! Stage 2: building the sparse suffix tree from sorted suffixes.
//!
//! With the suffixes in lexicographic order and adjacent LCPs known, the
//! tree is assembled by a simulated depth-first traversal: each new leaf is
//! inserted by walking up the rightmost path from the previous leaf until a
//! node of the right depth is found (or created by splitting an edge).
//! Every node is pushed and popped at most once, so construction is O(b)
//! after the LCPs are known.
//!
//! Edges store `(start, end)` references into the text, never copies. A
//! virtual terminator (lexicographically smallest, conceptually appended
//! to the text) guarantees no chosen suffix is a prefix of another, so
//! every chosen suffix gets its own leaf. It occupies no text memory;
//! edges leading to leaves simply carry a terminator mark.

use crate::error::Result;
use crate::mem;
use crate::suffix_sort::SparseSuffixArray;
use crate::text::Text;

pub type NodeId = usize;

/// Logical words per node and per edge, for the auxiliary-memory counter.
const NODE_WORDS: usize = 3;
const EDGE_WORDS: usize = 4;

/// An edge: a reference into the text plus an optional terminator mark.
/// `start > end` encodes an empty text part (a pure terminator edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub start: usize,
    pub end: usize,
    /// True iff the label ends with the virtual terminator, i.e. iff the
    /// edge leads to a leaf.
    pub terminator: bool,
    pub child: NodeId,
}

impl Edge {
    pub fn text_len(&self) -> usize {
        (self.end + 1).saturating_sub(self.start)
    }

    /// Total label length including the terminator symbol if present.
    pub fn label_len(&self) -> usize {
        self.text_len() + usize::from(self.terminator)
    }

    /// First symbol of the label; `None` is the terminator, which orders
    /// before every real symbol.
    pub fn first_symbol(&self, text: &Text) -> Option<u8> {
        if self.text_len() == 0 {
            None
        } else {
            Some(text.byte(self.start))
        }
    }
}

#[derive(Debug, Clone)]
pub struct SstNode {
    /// Path length from the root in symbols (terminator counts one).
    pub length: usize,
    /// Ordered by first label symbol, terminator first.
    pub children: Vec<Edge>,
    /// Suffix start position, for leaves only.
    pub leaf_pos: Option<usize>,
}

/// The compacted trie of exactly the chosen suffixes.
#[derive(Debug)]
pub struct SparseSuffixTree {
    pub nodes: Vec<SstNode>,
    pub root: NodeId,
    pub n: usize,
    pub leaf_count: usize,
    _charge: mem::Charge,
}

impl SparseSuffixTree {
    /// A tree holding just a root, charged against the memory counter.
    pub(crate) fn empty(n: usize) -> Self {
        SparseSuffixTree {
            nodes: vec![SstNode {
                length: 0,
                children: Vec::new(),
                leaf_pos: None,
            }],
            root: 0,
            n,
            leaf_count: 0,
            _charge: mem::charge(NODE_WORDS),
        }
    }

    pub(crate) fn add_node(&mut self, node: SstNode) -> NodeId {
        self._charge
            .grow(NODE_WORDS + EDGE_WORDS * node.children.len());
        self.nodes.push(node);
        self.nodes.len() - 1
    }

    pub(crate) fn add_edge(&mut self, parent: NodeId, edge: Edge) {
        self._charge.grow(EDGE_WORDS);
        self.nodes[parent].children.push(edge);
    }

    pub fn node(&self, id: NodeId) -> &SstNode {
        &self.nodes[id]
    }

    /// Leaf positions in DFS order, and the length of the lowest common
    /// ancestor of each consecutive leaf pair. For a correct tree this
    /// reproduces `(ssa.sa, ssa.adj_lcp)` exactly.
    pub fn dfs_leaves_and_lca_lengths(&self) -> (Vec<usize>, Vec<usize>) {
        let mut leaves = Vec::with_capacity(self.leaf_count);
        let mut lcas = Vec::new();
        // (node, parent length to report at child boundaries)
        let mut stack: Vec<(NodeId, usize)> = vec![(self.root, 0)];
        while let Some((id, child_idx)) = stack.pop() {
            let node = &self.nodes[id];
            if let Some(pos) = node.leaf_pos {
                leaves.push(pos);
                continue;
            }
            if child_idx < node.children.len() {
                // crossing from one child subtree to the next: this node is
                // the LCA of the neighboring leaves
                if child_idx > 0 {
                    lcas.push(node.length);
                }
                stack.push((id, child_idx + 1));
                stack.push((node.children[child_idx].child, 0));
            }
        }
        (leaves, lcas)
    }

    /// Canonical labeled parenthesization: hex-encoded edge labels with a
    /// `$` terminator mark, children in order. Two trees over the same text
    /// are structurally equal iff their canonical strings are equal.
    pub fn canonical_string(&self, text: &Text) -> String {
        fn render(tree: &SparseSuffixTree, text: &Text, id: NodeId, out: &mut String) {
            let node = &tree.nodes[id];
            if let Some(pos) = node.leaf_pos {
                out.push_str(&format!("leaf@{pos}"));
                return;
            }
            out.push('(');
            for (k, edge) in node.children.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                if edge.text_len() > 0 {
                    for p in edge.start..=edge.end {
                        out.push_str(&format!("{:02x}", text.byte(p)));
                    }
                }
                if edge.terminator {
                    out.push('$');
                }
                out.push(':');
                render(tree, text, edge.child, out);
            }
            out.push(')');
        }
        let mut out = String::new();
        render(self, text, self.root, &mut out);
        out
    }
}

/// Builds the sparse suffix tree for exactly the suffixes in `ssa`.
///
/// Inserts leaves in sparse-suffix-array order, walking up the rightmost
/// path from the previous leaf: a node whose length equals the adjacent LCP
/// takes the new leaf directly; if the walk skips past that depth, the edge
/// is split and a new internal node of exactly that length is created.
pub fn build_tree(text: &Text, ssa: &SparseSuffixArray) -> Result<SparseSuffixTree> {
    ssa.check(text)?;
    let n = text.len();
    let mut tree = SparseSuffixTree::empty(n);
    if ssa.is_empty() {
        return Ok(tree);
    }

    // rightmost path from the root to the most recent leaf
    let mut path: Vec<NodeId> = Vec::with_capacity(ssa.len());
    path.push(tree.root);

    let first = ssa.sa[0];
    let leaf = tree.add_node(SstNode {
        length: text.suffix_len(first) + 1,
        children: Vec::new(),
        leaf_pos: Some(first),
    });
    tree.add_edge(
        tree.root,
        Edge {
            start: first,
            end: n,
            terminator: true,
            child: leaf,
        },
    );
    path.push(leaf);

    for t in 1..ssa.len() {
        let q = ssa.sa[t];
        let lcp = ssa.adj_lcp[t - 1];

        let mut last_popped = None;
        while tree.nodes[*path.last().unwrap()].length > lcp {
            last_popped = path.pop();
        }
        let top = *path.last().unwrap();

        let attach = if tree.nodes[top].length == lcp {
            top
        } else {
            // the walk passed from a deeper node to one shallower than the
            // LCP: split the edge between them at exactly depth `lcp`
            let below = last_popped.expect("walk popped at least one node");
            let old = tree.nodes[top]
                .children
                .last()
                .expect("rightmost child exists")
                .clone();
            debug_assert_eq!(old.child, below);
            let keep = lcp - tree.nodes[top].length;
            debug_assert!(keep >= 1 && keep <= old.text_len());
            let mid = tree.add_node(SstNode {
                length: lcp,
                children: vec![Edge {
                    start: old.start + keep,
                    end: old.end,
                    terminator: old.terminator,
                    child: below,
                }],
                leaf_pos: None,
            });
            *tree.nodes[top].children.last_mut().unwrap() = Edge {
                start: old.start,
                end: old.start + keep - 1,
                terminator: false,
                child: mid,
            };
            path.push(mid);
            mid
        };

        let leaf = tree.add_node(SstNode {
            length: text.suffix_len(q) + 1,
            children: Vec::new(),
            leaf_pos: Some(q),
        });
        tree.add_edge(
            attach,
            Edge {
                start: q + lcp,
                end: n,
                terminator: true,
                child: leaf,
            },
        );
        path.push(leaf);
    }

    tree.leaf_count = ssa.len();
    Ok(tree)
}

/// Checks every structural invariant of the tree against the text and the
/// suffix array it was built from. Returns human-readable violations;
/// an empty list means the tree is valid.
pub fn validate_tree(tree: &SparseSuffixTree, text: &Text, ssa: &SparseSuffixArray) -> Vec<String> {
    let mut faults = Vec::new();
    let n = text.len();

    if tree.n != n {
        faults.push(format!("tree built for n = {} but text has {}", tree.n, n));
    }
    if tree.nodes.is_empty() {
        faults.push("tree has no nodes".into());
        return faults;
    }
    if tree.nodes[tree.root].length != 0 {
        faults.push("root has nonzero length".into());
    }
    if tree.leaf_count != ssa.len() {
        faults.push(format!(
            "leaf count {} does not match suffix array size {}",
            tree.leaf_count,
            ssa.len()
        ));
    }
    if !ssa.is_empty() && tree.nodes.len() > 2 * ssa.len() {
        faults.push(format!(
            "node count {} exceeds 2b = {}",
            tree.nodes.len(),
            2 * ssa.len()
        ));
    }

    // walk the whole tree, checking local invariants and collecting leaf
    // order; `spelled` carries the text part of the current path label
    fn walk(
        tree: &SparseSuffixTree,
        text: &Text,
        id: NodeId,
        spelled: &mut Vec<(usize, usize)>,
        leaves: &mut Vec<usize>,
        faults: &mut Vec<String>,
    ) {
        let node = &tree.nodes[id];
        let is_leaf = node.leaf_pos.is_some();
        if is_leaf {
            if !node.children.is_empty() {
                faults.push(format!("leaf node {id} has children"));
            }
            let pos = node.leaf_pos.unwrap();
            if pos == 0 || pos > text.len() {
                faults.push(format!("leaf node {id} has bad position {pos}"));
                return;
            }
            if node.length != text.suffix_len(pos) + 1 {
                faults.push(format!(
                    "leaf for position {pos} has length {} instead of {}",
                    node.length,
                    text.suffix_len(pos) + 1
                ));
            }
            // concatenated edge labels must spell the suffix
            let mut expect = pos;
            let mut ok = true;
            for &(s, e) in spelled.iter() {
                for p in s..=e {
                    if expect > text.len() || text.byte(p) != text.byte(expect) {
                        ok = false;
                        break;
                    }
                    expect += 1;
                }
            }
            if !ok || expect != text.len() + 1 {
                faults.push(format!(
                    "path labels do not spell the suffix at position {pos}"
                ));
            }
            leaves.push(pos);
            return;
        }

        if id != tree.root && node.children.len() < 2 {
            faults.push(format!("unary internal node {id}"));
        }
        let mut prev_key: Option<Option<u8>> = None;
        for edge in &node.children {
            if edge.text_len() > 0 && (edge.start == 0 || edge.end > text.len()) {
                faults.push(format!(
                    "edge text reference ({}, {}) out of range",
                    edge.start, edge.end
                ));
                continue;
            }
            if edge.label_len() == 0 {
                faults.push(format!("empty edge label under node {id}"));
            }
            let key = edge.first_symbol(text);
            if key.is_none() && !edge.terminator {
                faults.push(format!("edge with no text and no terminator under {id}"));
            }
            if let Some(prev) = prev_key {
                // terminator (None) orders strictly before all symbols
                let unordered = match (prev, key) {
                    (None, None) => true,
                    (Some(_), None) => true,
                    (Some(a), Some(b)) => a >= b,
                    (None, Some(_)) => false,
                };
                if unordered {
                    faults.push(format!("children unordered at node {id}"));
                }
            }
            prev_key = Some(key);

            let child = &tree.nodes[edge.child];
            if child.length != node.length + edge.label_len() {
                faults.push(format!(
                    "length mismatch on edge {id} -> {}: {} + {} != {}",
                    edge.child,
                    node.length,
                    edge.label_len(),
                    child.length
                ));
            }
            if edge.terminator != child.leaf_pos.is_some() {
                faults.push(format!(
                    "terminator mark on edge {id} -> {} disagrees with leaf status",
                    edge.child
                ));
            }
            if edge.text_len() > 0 {
                spelled.push((edge.start, edge.end));
            }
            walk(tree, text, edge.child, spelled, leaves, faults);
            if edge.text_len() > 0 {
                spelled.pop();
            }
        }
    }

    let mut spelled = Vec::new();
    let mut leaves = Vec::new();
    walk(
        tree,
        text,
        tree.root,
        &mut spelled,
        &mut leaves,
        &mut faults,
    );

    if leaves != ssa.sa {
        faults.push(format!(
            "DFS leaf order {leaves:?} differs from suffix array {:?}",
            ssa.sa
        ));
    }
    let (_, lcas) = tree.dfs_leaves_and_lca_lengths();
    if lcas != ssa.adj_lcp {
        faults.push(format!(
            "consecutive-leaf LCA lengths {lcas:?} differ from adjacent LCPs {:?}",
            ssa.adj_lcp
        ));
    }
    faults
}
