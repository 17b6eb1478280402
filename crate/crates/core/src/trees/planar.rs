//! Planar binary trees and the maps relating them to permutations.

use super::permutation::Permutation;
use super::tree::Tree;

/// A planar binary tree. The empty tree (a single leaf, written `.`) is the
/// degree-0 unit.
pub type PlanarTree = Tree<()>;

/// An ordered tree: each node labelled by its value in the permutation.
pub type OrderedTree = Tree<u32>;

/// All planar binary trees with `n` nodes, in canonical order.
pub fn all_planar(n: usize) -> Vec<PlanarTree> {
    let mut table: Vec<Vec<PlanarTree>> = vec![vec![Tree::Leaf]];
    for size in 1..=n {
        let mut level = Vec::new();
        for left in 0..size {
            let right = size - 1 - left;
            for l in &table[left] {
                for r in &table[right] {
                    level.push(Tree::node(l.clone(), (), r.clone()));
                }
            }
        }
        table.push(level);
    }
    let mut out = table.swap_remove(n);
    out.sort();
    out
}

/// The comb whose nodes all lie on the left branch; the Tamari minimum.
pub fn left_comb(n: usize) -> PlanarTree {
    (0..n).fold(Tree::Leaf, |acc, _| Tree::node(acc, (), Tree::Leaf))
}

/// The comb whose nodes all lie on the right branch; the Tamari maximum.
pub fn right_comb(n: usize) -> PlanarTree {
    (0..n).fold(Tree::Leaf, |acc, _| Tree::node(Tree::Leaf, (), acc))
}

pub fn gamma_left(t: &PlanarTree) -> PlanarTree {
    left_comb(t.len())
}

pub fn gamma_right(t: &PlanarTree) -> PlanarTree {
    right_comb(t.len())
}

/// The ordered tree of a word of distinct values: the maximum is the root,
/// the letters to its left and right build the two subtrees.
pub fn ordered_tree(word: &[u32]) -> OrderedTree {
    let Some((pos, &max)) = word.iter().enumerate().max_by_key(|(_, v)| **v) else {
        return Tree::Leaf;
    };
    Tree::node(
        ordered_tree(&word[..pos]),
        max,
        ordered_tree(&word[pos + 1..]),
    )
}

pub fn tau(w: &Permutation) -> PlanarTree {
    ordered_tree(w.as_slice()).shape()
}

/// Every permutation whose ordered tree has shape `t`, i.e. every linear
/// extension of the node poset of `t` read left to right. Sorted.
pub fn tau_fiber(t: &PlanarTree) -> Vec<Permutation> {
    let labels: Vec<u32> = (1..=t.len() as u32).collect();
    let mut out: Vec<Permutation> = extensions(t, &labels)
        .into_iter()
        .map(Permutation::from_vec_unchecked)
        .collect();
    out.sort();
    out
}

fn extensions(t: &PlanarTree, labels: &[u32]) -> Vec<Vec<u32>> {
    let Some(node) = t.as_node() else {
        return vec![Vec::new()];
    };
    let (&top, rest) = labels.split_last().expect("label count matches node count");
    let mut out = Vec::new();
    for left_set in subsets_of_size(rest, node.left.len()) {
        let right_set: Vec<u32> = rest
            .iter()
            .copied()
            .filter(|v| !left_set.contains(v))
            .collect();
        let lefts = extensions(&node.left, &left_set);
        let rights = extensions(&node.right, &right_set);
        for l in &lefts {
            for r in &rights {
                let mut w = l.clone();
                w.push(top);
                w.extend_from_slice(r);
                out.push(w);
            }
        }
    }
    out
}

fn subsets_of_size(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let (first, rest) = items.split_first().unwrap();
    let mut out: Vec<Vec<u32>> = subsets_of_size(rest, k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, *first);
            s
        })
        .collect();
    out.extend(subsets_of_size(rest, k));
    out
}

/// The 231-avoiding permutation in the fiber of `t`, with letters starting at
/// `offset + 1`.
pub(crate) fn min_word(t: &PlanarTree, offset: u32, out: &mut Vec<u32>) {
    if let Some(node) = t.as_node() {
        let l = node.left.len() as u32;
        let r = node.right.len() as u32;
        min_word(&node.left, offset, out);
        out.push(offset + l + r + 1);
        min_word(&node.right, offset + l, out);
    }
}

/// The 132-avoiding permutation in the fiber of `t`, with letters starting at
/// `offset + 1`.
pub(crate) fn max_word(t: &PlanarTree, offset: u32, out: &mut Vec<u32>) {
    if let Some(node) = t.as_node() {
        let l = node.left.len() as u32;
        let r = node.right.len() as u32;
        max_word(&node.left, offset + r, out);
        out.push(offset + l + r + 1);
        max_word(&node.right, offset, out);
    }
}

pub fn min_perm(t: &PlanarTree) -> Permutation {
    let mut w = Vec::with_capacity(t.len());
    min_word(t, 0, &mut w);
    Permutation::from_vec_unchecked(w)
}

pub fn max_perm(t: &PlanarTree) -> Permutation {
    let mut w = Vec::with_capacity(t.len());
    max_word(t, 0, &mut w);
    Permutation::from_vec_unchecked(w)
}
