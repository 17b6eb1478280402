//! Finite posets with memoized Möbius functions.

use std::collections::HashMap;
use std::fmt::{Display, Write as _};
use std::hash::Hash;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite poset over an explicit, ordered list of elements.
///
/// Elements are addressed by their index in that list. The order relation is
/// stored as up-sets and down-sets; Möbius values are computed one row
/// `μ(x, ·)` at a time, on first use, by Hall's recursion.
pub struct FinitePoset<K> {
    elements: Vec<K>,
    index: HashMap<K, usize>,
    upper_covers: Vec<Vec<usize>>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    // a linear extension, smallest first
    linear: Vec<usize>,
    mobius_rows: Vec<OnceLock<Vec<i64>>>,
}

impl<K> std::fmt::Debug for FinitePoset<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FinitePoset")
            .field("len", &self.elements.len())
            .field("covers", &self.cover_count())
            .finish()
    }
}

impl<K: Clone + Eq + Hash> FinitePoset<K> {
    /// Builds the poset generated by `covers` (pairs `(lower, upper)` of
    /// indices). Fails if the relation has a cycle. Redundant pairs are
    /// dropped, so the stored covers are exactly the Hasse diagram.
    pub fn from_covers(elements: Vec<K>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = elements.len();
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Domain(format!("cover ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::Domain("a cover relation cannot be reflexive".into()));
            }
            succ[a].push(b);
        }
        let linear = topological_order(&succ)
            .ok_or_else(|| Error::Domain("cover relation has a cycle".into()))?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in linear.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(x);
            for &y in &succ[x] {
                set.union_with(&up[y]);
            }
            up[x] = set;
        }
        Ok(Self::finish(elements, up, linear))
    }

    /// Builds the poset from an order predicate `leq`. Fails unless the
    /// predicate is reflexive, antisymmetric and transitive on `elements`.
    pub fn from_relation(elements: Vec<K>, leq: impl Fn(&K, &K) -> bool) -> Result<Self> {
        let n = elements.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(&elements[i], &elements[j]) {
                    up[i].insert(j);
                }
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::Domain("relation is not reflexive".into()));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(Error::Domain("relation is not antisymmetric".into()));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::Domain("relation is not transitive".into()));
                }
            }
        }
        // sorting by up-set size from large to small is a linear extension
        let mut linear: Vec<usize> = (0..n).collect();
        linear.sort_by_key(|&i| std::cmp::Reverse(up[i].count_ones(..)));
        Ok(Self::finish(elements, up, linear))
    }

    fn finish(elements: Vec<K>, up: Vec<FixedBitSet>, linear: Vec<usize>) -> Self {
        let n = elements.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, set) in up.iter().enumerate() {
            for j in set.ones() {
                down[j].insert(i);
            }
        }
        // y covers x iff x < y with nothing strictly between
        let mut upper_covers = vec![Vec::new(); n];
        for x in 0..n {
            for y in up[x].ones() {
                if y == x {
                    continue;
                }
                let mut between = up[x].clone();
                between.intersect_with(&down[y]);
                if between.count_ones(..) == 2 {
                    upper_covers[x].push(y);
                }
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, k)| (k.clone(), i))
            .collect();
        FinitePoset {
            elements,
            index,
            upper_covers,
            up,
            down,
            linear,
            mobius_rows: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn index_of(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn require_index(&self, key: &K) -> Result<usize>
    where
        K: Display,
    {
        self.index_of(key)
            .ok_or_else(|| Error::Domain(format!("{key} is not an element of this poset")))
    }
}

impl<K> FinitePoset<K> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[K] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &K {
        &self.elements[i]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    /// All cover pairs `(lower, upper)`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        self.upper_covers
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
            .collect()
    }

    pub fn cover_count(&self) -> usize {
        self.upper_covers.iter().map(Vec::len).sum()
    }

    /// A linear extension, smallest elements first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.up[x].count_ones(..) == self.len())
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.down[x].count_ones(..) == self.len())
    }

    /// The elements `z` with `x ≤ z ≤ y`, in index order.
    pub fn interval(&self, x: usize, y: usize) -> Result<Vec<usize>> {
        if !self.leq(x, y) {
            return Err(Error::Domain(format!(
                "interval bounds {x} and {y} are not ordered"
            )));
        }
        let mut set = self.up[x].clone();
        set.intersect_with(&self.down[y]);
        Ok(set.ones().collect())
    }

    /// If `members` is an interval `[lo, hi]`, returns its endpoints.
    pub fn as_interval(&self, members: &[usize]) -> Option<(usize, usize)> {
        let lo = *members
            .iter()
            .find(|&&m| members.iter().all(|&o| self.leq(m, o)))?;
        let hi = *members
            .iter()
            .find(|&&m| members.iter().all(|&o| self.leq(o, m)))?;
        let mut sorted = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        (self.interval(lo, hi).ok()? == sorted).then_some((lo, hi))
    }

    /// The row `μ(x, ·)`, zero off the up-set of `x`.
    pub fn mobius_row(&self, x: usize) -> &[i64] {
        self.mobius_rows[x].get_or_init(|| {
            let mut row = vec![0i64; self.len()];
            let above: Vec<usize> = self
                .linear
                .iter()
                .copied()
                .filter(|&z| self.up[x].contains(z))
                .collect();
            for (k, &y) in above.iter().enumerate() {
                if y == x {
                    row[y] = 1;
                    continue;
                }
                // Hall: μ(x, y) = -Σ_{x ≤ z < y} μ(x, z)
                let sum: i64 = above[..k]
                    .iter()
                    .filter(|&&z| self.down[y].contains(z))
                    .map(|&z| row[z])
                    .sum();
                row[y] = -sum;
            }
            row
        })
    }

    pub fn mobius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::Domain(format!(
                "Möbius function needs x ≤ y, got elements {x} and {y}"
            )));
        }
        Ok(self.mobius_row(x)[y])
    }

    /// `μ(x, y)`, taken to be zero when `x ≰ y`.
    pub fn mobius_or_zero(&self, x: usize, y: usize) -> i64 {
        if self.leq(x, y) {
            self.mobius_row(x)[y]
        } else {
            0
        }
    }

    fn least_in(&self, set: &FixedBitSet) -> Option<usize> {
        let candidate = self.linear.iter().copied().find(|&z| set.contains(z))?;
        set.is_subset(&self.up[candidate]).then_some(candidate)
    }

    fn greatest_in(&self, set: &FixedBitSet) -> Option<usize> {
        let candidate = self
            .linear
            .iter()
            .rev()
            .copied()
            .find(|&z| set.contains(z))?;
        set.is_subset(&self.down[candidate]).then_some(candidate)
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let mut upper = self.up[x].clone();
        upper.intersect_with(&self.up[y]);
        self.least_in(&upper)
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let mut lower = self.down[x].clone();
        lower.intersect_with(&self.down[y]);
        self.greatest_in(&lower)
    }

    /// Every pair has a meet and a join. The empty poset is not a lattice.
    pub fn is_lattice(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        (0..self.len()).all(|x| {
            (x + 1..self.len()).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some())
        })
    }

    /// Hasse diagram in DOT: one vertex per element, one edge per cover
    /// (lower to upper), in index order.
    pub fn to_dot(&self, name: &str) -> String
    where
        K: Display,
    {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {} {{", quote(name));
        let _ = writeln!(out, "  rankdir=BT;");
        for k in &self.elements {
            let _ = writeln!(out, "  {};", quote(&k.to_string()));
        }
        for (x, y) in self.cover_edges() {
            let _ = writeln!(
                out,
                "  {} -> {};",
                quote(&self.elements[x].to_string()),
                quote(&self.elements[y].to_string())
            );
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn topological_order(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = succ.len();
    let mut indegree = vec![0usize; n];
    for ys in succ {
        for &y in ys {
            indegree[y] += 1;
        }
    }
    let mut ready: Vec<usize> = (0..n).rev().filter(|&x| indegree[x] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = ready.pop() {
        order.push(x);
        for &y in succ[x].iter().rev() {
            indegree[y] -= 1;
            if indegree[y] == 0 {
                ready.push(y);
            }
        }
    }
    (order.len() == n).then_some(order)
}
