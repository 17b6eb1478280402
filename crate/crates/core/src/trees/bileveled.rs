//! Bi-leveled trees: planar binary trees with a set of circled nodes.
//!
//! The circled nodes form an order ideal containing the root (the parent of a
//! circled node is circled), the leftmost node is circled, and the leftmost
//! node has no circled children. These are the vertices of the multiplihedra.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::permutation::Permutation;
use super::planar::{all_planar, max_word, min_word, ordered_tree, PlanarTree};
use super::tree::Tree;
use crate::error::{CirclingRule, Error, Result};

/// A tree whose nodes are flagged `true` when circled. Splitting fragments of a
/// bi-leveled tree are of this type and need not be valid on their own.
pub type CircledTree = Tree<bool>;

/// A validated bi-leveled tree.
///
/// The empty tree is not a bi-leveled tree; it is only representable through
/// [`BiLeveledTree::unit`], the unit adjoined in degree 0 so that products
/// and actions have an identity. It renders as `1` and is never enumerated.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiLeveledTree(CircledTree);

/// Checks the circling rules, reporting the first one violated.
pub fn check_circling(tree: &CircledTree) -> std::result::Result<(), CirclingRule> {
    let labels = tree.labels();
    let Some(&&leftmost) = labels.first() else {
        return Err(CirclingRule::NonEmpty);
    };
    if !leftmost {
        return Err(CirclingRule::LeftmostCircled);
    }
    let parents = tree.parents();
    for (i, parent) in parents.iter().enumerate() {
        if *parent == Some(1) && *labels[i] {
            return Err(CirclingRule::LeftmostChildrenUncircled);
        }
    }
    for (i, parent) in parents.iter().enumerate() {
        if let Some(p) = parent {
            if *labels[i] && !*labels[p - 1] {
                return Err(CirclingRule::UpwardClosed);
            }
        }
    }
    Ok(())
}

impl BiLeveledTree {
    pub fn new(tree: CircledTree) -> Result<Self> {
        check_circling(&tree).map_err(|rule| Error::Validity {
            key: tree.to_string(),
            rule,
        })?;
        Ok(BiLeveledTree(tree))
    }

    pub(crate) fn new_unchecked(tree: CircledTree) -> Self {
        debug_assert!(
            tree.is_empty() || check_circling(&tree).is_ok(),
            "invalid bi-leveled tree {tree}"
        );
        BiLeveledTree(tree)
    }

    /// Builds from a shape and the in-order indices (1-based) of circled nodes.
    pub fn from_circled(shape: &PlanarTree, circled: &BTreeSet<usize>) -> Result<Self> {
        Self::new(shape.map_indexed(&mut |i, _| circled.contains(&i)))
    }

    pub fn unit() -> Self {
        BiLeveledTree(Tree::Leaf)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tree(&self) -> &CircledTree {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// In-order indices of the circled nodes.
    pub fn circled(&self) -> BTreeSet<usize> {
        self.0
            .labels()
            .into_iter()
            .enumerate()
            .filter(|(_, &c)| c)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Parses a canonical string; `"1"` is accepted for the adjoined unit.
    pub fn parse_with_unit(text: &str) -> Result<Self> {
        if text.trim() == "1" {
            Ok(Self::unit())
        } else {
            text.parse()
        }
    }
}

impl FromStr for BiLeveledTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tree = CircledTree::parse_canonical(s)?;
        if tree.is_empty() {
            return Err(Error::Validity {
                key: s.to_string(),
                rule: CirclingRule::NonEmpty,
            });
        }
        Self::new(tree)
    }
}

impl fmt::Display for BiLeveledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            f.write_str("1")
        } else {
            self.0.fmt(f)
        }
    }
}

/// All bi-leveled trees with `n ≥ 1` nodes, in canonical order.
pub fn all_bileveled(n: usize) -> Result<Vec<BiLeveledTree>> {
    if n == 0 {
        return Err(Error::Domain(
            "there are no bi-leveled trees with 0 nodes".into(),
        ));
    }
    let mut out: Vec<BiLeveledTree> = all_planar(n)
        .iter()
        .flat_map(spine_circlings)
        .map(BiLeveledTree::new_unchecked)
        .collect();
    out.sort();
    Ok(out)
}

// `t` lies on the path from the root to the leftmost node, so it is circled.
fn spine_circlings(t: &PlanarTree) -> Vec<CircledTree> {
    let node = t.as_node().expect("spine node");
    let rights = if node.left.is_empty() {
        vec![node.right.map(&mut |_| false)]
    } else {
        free_circlings(&node.right)
    };
    let lefts = if node.left.is_empty() {
        vec![Tree::Leaf]
    } else {
        spine_circlings(&node.left)
    };
    let mut out = Vec::with_capacity(lefts.len() * rights.len());
    for l in &lefts {
        for r in &rights {
            out.push(Tree::node(l.clone(), true, r.clone()));
        }
    }
    out
}

// Circlings of a subtree hanging off a circled parent: either nothing is
// circled, or its root is circled and the children recurse.
fn free_circlings(t: &PlanarTree) -> Vec<CircledTree> {
    let Some(node) = t.as_node() else {
        return vec![Tree::Leaf];
    };
    let mut out = vec![t.map(&mut |_| false)];
    let lefts = free_circlings(&node.left);
    let rights = free_circlings(&node.right);
    for l in &lefts {
        for r in &rights {
            out.push(Tree::node(l.clone(), true, r.clone()));
        }
    }
    out
}

/// The ordered tree of `w` with every node whose value is at least the first
/// letter circled. The empty permutation maps to the adjoined unit.
pub fn beta(w: &Permutation) -> BiLeveledTree {
    let Some(&first) = w.as_slice().first() else {
        return BiLeveledTree::unit();
    };
    BiLeveledTree::new_unchecked(ordered_tree(w.as_slice()).map(&mut |&v| v >= first))
}

/// Forgets the circles.
pub fn phi(b: &BiLeveledTree) -> PlanarTree {
    b.tree().shape()
}

/// A bi-leveled tree split into its tree of circled nodes and the uncircled
/// trees above its leaves. `hanging[i]` sits above leaf `i + 1` of `base`
/// (0-based leaves); the slot above leaf 0 is always empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestDecomposition {
    pub base: PlanarTree,
    pub hanging: Vec<PlanarTree>,
}

impl ForestDecomposition {
    pub fn hanging_sizes(&self) -> Vec<usize> {
        self.hanging.iter().map(Tree::len).collect()
    }
}

pub fn forest_decomposition(b: &BiLeveledTree) -> ForestDecomposition {
    fn go(t: &CircledTree, slots: &mut Vec<PlanarTree>) -> PlanarTree {
        match t {
            Tree::Node(n) if n.label => {
                let left = go(&n.left, slots);
                let right = go(&n.right, slots);
                Tree::node(left, (), right)
            }
            _ => {
                slots.push(t.shape());
                Tree::Leaf
            }
        }
    }
    let mut slots = Vec::with_capacity(b.len() + 1);
    let base = go(b.tree(), &mut slots);
    let first = slots.remove(0);
    debug_assert!(first.is_empty() || b.is_unit());
    ForestDecomposition {
        base,
        hanging: slots,
    }
}

pub fn compose_decomposition(base: &PlanarTree, hanging: &[PlanarTree]) -> Result<BiLeveledTree> {
    let mut forest: Vec<CircledTree> = Vec::with_capacity(hanging.len() + 1);
    forest.push(Tree::Leaf);
    forest.extend(hanging.iter().map(|s| s.map(&mut |_| false)));
    let circled_base = base.map(&mut |_| true);
    let tree = Tree::graft(&forest, &circled_base)?;
    BiLeveledTree::new(tree)
}

/// Grafts the root of `s`, uncircled, onto the rightmost leaf of `b`.
pub fn right_graft(b: &BiLeveledTree, s: &PlanarTree) -> BiLeveledTree {
    assert!(
        !b.is_unit() || s.is_empty(),
        "right grafting onto the adjoined unit"
    );
    BiLeveledTree::new_unchecked(b.tree().graft_rightmost(s.map(&mut |_| false)))
}

/// Every way of writing `b` as a right grafting `b'` ⧵ `s`, by increasing size
/// of `s`, starting with `(b, ∅)`.
pub fn right_cuts(b: &BiLeveledTree) -> Vec<(BiLeveledTree, PlanarTree)> {
    let mut out = vec![(b.clone(), Tree::Leaf)];
    // spine[d] is the node at depth d along the right branch
    let mut spine = Vec::new();
    let mut cur = b.tree();
    while let Tree::Node(n) = cur {
        spine.push(n);
        cur = &n.right;
    }
    for depth in (0..spine.len()).rev() {
        if spine[depth].label {
            continue;
        }
        let s = Tree::Node(spine[depth].clone()).shape();
        let mut rebuilt: CircledTree = Tree::Leaf;
        for n in spine[..depth].iter().rev() {
            rebuilt = Tree::node(n.left.clone(), n.label, rebuilt);
        }
        out.push((BiLeveledTree::new_unchecked(rebuilt), s));
    }
    out
}

/// No uncircled node on the right branch.
pub fn is_coinvariant_shape(b: &BiLeveledTree) -> bool {
    let mut cur = b.tree();
    while let Tree::Node(n) = cur {
        if !n.label {
            return false;
        }
        cur = &n.right;
    }
    true
}

fn interleave(base_word: &[u32], blocks: &[Vec<u32>]) -> Permutation {
    let mut w = Vec::with_capacity(base_word.len() + blocks.iter().map(Vec::len).sum::<usize>());
    for (u, v) in base_word.iter().zip(blocks) {
        w.push(*u);
        w.extend_from_slice(v);
    }
    Permutation::from_vec_unchecked(w)
}

/// The section taking minimal permutations everywhere, with the hanging trees
/// on increasing blocks of letters from left to right and the circled nodes
/// on the largest letters.
pub fn min_min(b: &BiLeveledTree) -> Permutation {
    let dec = forest_decomposition(b);
    let n = b.len() as u32;
    let p = dec.base.len() as u32;
    let mut base_word = Vec::new();
    min_word(&dec.base, n - p, &mut base_word);
    let mut offset = 0;
    let blocks: Vec<Vec<u32>> = dec
        .hanging
        .iter()
        .map(|s| {
            let mut v = Vec::new();
            min_word(s, offset, &mut v);
            offset += s.len() as u32;
            v
        })
        .collect();
    interleave(&base_word, &blocks)
}

/// The order-embedding section: a minimal permutation on the circled nodes
/// (largest letters), maximal permutations on the hanging trees, with the
/// rightmost hanging tree on the smallest letters.
pub fn max_min(b: &BiLeveledTree) -> Permutation {
    let dec = forest_decomposition(b);
    let n = b.len() as u32;
    let p = dec.base.len() as u32;
    let mut base_word = Vec::new();
    min_word(&dec.base, n - p, &mut base_word);
    let mut blocks = vec![Vec::new(); dec.hanging.len()];
    let mut offset = 0;
    for (i, s) in dec.hanging.iter().enumerate().rev() {
        max_word(s, offset, &mut blocks[i]);
        offset += s.len() as u32;
    }
    interleave(&base_word, &blocks)
}

/// Pinned patterns as relative orders; the first letter is matched by the
/// first letter of the word.
pub const PINNED_PATTERNS: [[u32; 4]; 3] = [[0, 2, 3, 1], [3, 0, 2, 1], [2, 0, 3, 1]];

pub fn avoids_pinned(w: &Permutation) -> bool {
    PINNED_PATTERNS
        .iter()
        .all(|pattern| !w.contains_pinned_pattern(pattern))
}
