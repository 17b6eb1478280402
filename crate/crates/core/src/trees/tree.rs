//! Labelled planar binary trees.
//!
//! Every tree family in the crate is a [`Tree`] with a different node label:
//! `()` for plain planar binary trees, `bool` (circled or not) for bi-leveled
//! trees and their splitting fragments, and integers for ordered trees.
//! Internal nodes are indexed left to right (in-order) starting at 1; leaves are
//! indexed left to right starting at 0, so leaf `k` sits between nodes `k` and
//! `k + 1`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum Tree<T> {
    #[default]
    Leaf,
    Node(Box<Node<T>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node<T> {
    pub left: Tree<T>,
    pub label: T,
    pub right: Tree<T>,
    size: usize,
}

impl<T> Node<T> {
    pub fn size(&self) -> usize {
        self.size
    }
}

impl<T> Tree<T> {
    pub fn node(left: Tree<T>, label: T, right: Tree<T>) -> Self {
        let size = left.len() + right.len() + 1;
        Tree::Node(Box::new(Node {
            left,
            label,
            right,
            size,
        }))
    }

    /// Number of internal nodes.
    pub fn len(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(n) => n.size,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn as_node(&self) -> Option<&Node<T>> {
        match self {
            Tree::Leaf => None,
            Tree::Node(n) => Some(n),
        }
    }

    pub fn root_label(&self) -> Option<&T> {
        self.as_node().map(|n| &n.label)
    }

    /// Node labels in in-order (node 1 first).
    pub fn labels(&self) -> Vec<&T> {
        let mut out = Vec::with_capacity(self.len());
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels<'a>(&'a self, out: &mut Vec<&'a T>) {
        if let Tree::Node(n) = self {
            n.left.collect_labels(out);
            out.push(&n.label);
            n.right.collect_labels(out);
        }
    }

    /// In-order index (1-based) of each node's parent, `None` for the root.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.len()];
        fn walk<T>(t: &Tree<T>, offset: usize, parent: Option<usize>, out: &mut [Option<usize>]) {
            if let Tree::Node(n) = t {
                let me = offset + n.left.len() + 1;
                out[me - 1] = parent;
                walk(&n.left, offset, Some(me), out);
                walk(&n.right, me, Some(me), out);
            }
        }
        walk(self, 0, None, &mut out);
        out
    }

    pub fn map<U>(&self, f: &mut impl FnMut(&T) -> U) -> Tree<U> {
        match self {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(n) => {
                let left = n.left.map(f);
                let label = f(&n.label);
                let right = n.right.map(f);
                Tree::node(left, label, right)
            }
        }
    }

    /// Relabels nodes in in-order with `f(index, old_label)`, index 1-based.
    pub fn map_indexed<U>(&self, f: &mut impl FnMut(usize, &T) -> U) -> Tree<U> {
        fn go<T, U>(t: &Tree<T>, next: &mut usize, f: &mut impl FnMut(usize, &T) -> U) -> Tree<U> {
            match t {
                Tree::Leaf => Tree::Leaf,
                Tree::Node(n) => {
                    let left = go(&n.left, next, f);
                    *next += 1;
                    let label = f(*next, &n.label);
                    let right = go(&n.right, next, f);
                    Tree::node(left, label, right)
                }
            }
        }
        let mut next = 0;
        go(self, &mut next, f)
    }

    /// The unlabelled shape.
    pub fn shape(&self) -> Tree<()> {
        self.map(&mut |_| ())
    }
}

impl<T: Clone> Tree<T> {
    /// Splits along leaf `k` (0 ≤ k ≤ len) and every branching below it down to
    /// the root. Nodes left of the leaf go to the first piece, the rest to the
    /// second; each node keeps its label.
    pub fn split(&self, k: usize) -> (Tree<T>, Tree<T>) {
        debug_assert!(k <= self.len());
        match self {
            Tree::Leaf => (Tree::Leaf, Tree::Leaf),
            Tree::Node(n) => {
                let m = n.left.len();
                if k <= m {
                    let (l0, l1) = n.left.split(k);
                    (l0, Tree::node(l1, n.label.clone(), n.right.clone()))
                } else {
                    let (r0, r1) = n.right.split(k - m - 1);
                    (Tree::node(n.left.clone(), n.label.clone(), r0), r1)
                }
            }
        }
    }

    /// Splits along a weakly increasing sequence of leaves, giving
    /// `cuts.len() + 1` pieces.
    pub fn split_at(&self, cuts: &[usize]) -> Vec<Tree<T>> {
        let mut pieces = Vec::with_capacity(cuts.len() + 1);
        let mut rest = self.clone();
        let mut consumed = 0;
        for &k in cuts {
            debug_assert!(k >= consumed, "cuts must be weakly increasing");
            let (head, tail) = rest.split(k - consumed);
            pieces.push(head);
            rest = tail;
            consumed = k;
        }
        pieces.push(rest);
        pieces
    }

    /// Replaces leaf `i` of `base` with `forest[i]`.
    pub fn graft(forest: &[Tree<T>], base: &Tree<T>) -> Result<Tree<T>> {
        if forest.len() != base.len() + 1 {
            return Err(Error::Arity {
                pieces: forest.len(),
                nodes: base.len(),
            });
        }
        let mut iter = forest.iter();
        let out = Self::graft_rec(&mut iter, base);
        Ok(out)
    }

    fn graft_rec<'a>(forest: &mut impl Iterator<Item = &'a Tree<T>>, base: &Tree<T>) -> Tree<T>
    where
        T: 'a,
    {
        match base {
            Tree::Leaf => forest.next().cloned().unwrap_or(Tree::Leaf),
            Tree::Node(n) => {
                let left = Self::graft_rec(forest, &n.left);
                let right = Self::graft_rec(forest, &n.right);
                Tree::node(left, n.label.clone(), right)
            }
        }
    }

    /// Attaches `top` at the rightmost leaf.
    pub fn graft_rightmost(&self, top: Tree<T>) -> Tree<T> {
        match self {
            Tree::Leaf => top,
            Tree::Node(n) => Tree::node(
                n.left.clone(),
                n.label.clone(),
                n.right.graft_rightmost(top),
            ),
        }
    }
}

/// Number of weakly increasing sequences of `p` leaves in a tree with `n` nodes.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// All weakly increasing sequences of `p` values in `lo..=hi`.
pub fn weak_sequences(p: usize, lo: usize, hi: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(p: usize, lo: usize, hi: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for k in lo..=hi {
            cur.push(k);
            go(p, k, hi, cur, out);
            cur.pop();
        }
    }
    if p == 0 || lo <= hi {
        go(p, lo, hi, &mut cur, &mut out);
    }
    out
}

/// Node decorations with a canonical bracket pair.
pub trait Decoration: Clone + Eq {
    fn brackets(&self) -> (char, char);
    fn from_open(c: char) -> Option<(Self, char)>;
}

impl Decoration for () {
    fn brackets(&self) -> (char, char) {
        ('(', ')')
    }

    fn from_open(c: char) -> Option<(Self, char)> {
        (c == '(').then_some(((), ')'))
    }
}

/// `true` means circled.
impl Decoration for bool {
    fn brackets(&self) -> (char, char) {
        if *self {
            ('{', '}')
        } else {
            ('(', ')')
        }
    }

    fn from_open(c: char) -> Option<(Self, char)> {
        match c {
            '(' => Some((false, ')')),
            '{' => Some((true, '}')),
            _ => None,
        }
    }
}

impl<T: Decoration> Tree<T> {
    fn first_char(&self) -> char {
        match self {
            Tree::Leaf => '.',
            Tree::Node(n) => n.label.brackets().0,
        }
    }

    fn write_canonical(&self, out: &mut String) {
        match self {
            Tree::Leaf => out.push('.'),
            Tree::Node(n) => {
                let (open, close) = n.label.brackets();
                out.push(open);
                n.left.write_canonical(out);
                n.right.write_canonical(out);
                out.push(close);
            }
        }
    }

    pub fn parse_canonical(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.trim().chars().collect();
        let mut pos = 0;
        let tree = Self::parse_rec(text, &chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::parse(
                text,
                format!("trailing input at offset {pos}"),
            ));
        }
        Ok(tree)
    }

    fn parse_rec(text: &str, chars: &[char], pos: &mut usize) -> Result<Self> {
        let Some(&c) = chars.get(*pos) else {
            return Err(Error::parse(text, "unexpected end of input"));
        };
        *pos += 1;
        if c == '.' {
            return Ok(Tree::Leaf);
        }
        let Some((label, close)) = T::from_open(c) else {
            return Err(Error::parse(
                text,
                format!("unexpected {c:?} at offset {}", *pos - 1),
            ));
        };
        let left = Self::parse_rec(text, chars, pos)?;
        let right = Self::parse_rec(text, chars, pos)?;
        match chars.get(*pos) {
            Some(&d) if d == close => {
                *pos += 1;
                Ok(Tree::node(left, label, right))
            }
            Some(&d) => Err(Error::parse(
                text,
                format!("expected {close:?} at offset {}, found {d:?}", *pos),
            )),
            None => Err(Error::parse(text, format!("missing closing {close:?}"))),
        }
    }
}

impl<T: Decoration> fmt::Display for Tree<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::with_capacity(3 * self.len() + 1);
        self.write_canonical(&mut s);
        f.write_str(&s)
    }
}

// Canonical strings are prefix-free, so comparing them reduces to comparing
// the first bracket and then the subtrees left to right.
impl<T: Decoration> Ord for Tree<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Node(a), Tree::Node(b)) if a.label == b.label => {
                a.left.cmp(&b.left).then_with(|| a.right.cmp(&b.right))
            }
            _ => self.first_char().cmp(&other.first_char()),
        }
    }
}

impl<T: Decoration> PartialOrd for Tree<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
