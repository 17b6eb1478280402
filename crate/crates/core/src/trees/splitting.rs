//! p-splittings and graftings.
//!
//! A p-splitting cuts a tree along `p` chosen leaves (repetition allowed) and
//! every branching below them down to the root, giving `p + 1` pieces. A
//! grafting attaches `p + 1` pieces above the leaves of a `p`-node tree.

use super::bileveled::{BiLeveledTree, CircledTree};
use super::planar::PlanarTree;
use super::tree::{weak_sequences, Tree};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting<T> {
    /// The chosen leaves, weakly increasing.
    pub cuts: Vec<usize>,
    pub pieces: Vec<Tree<T>>,
}

impl<T> Splitting<T> {
    pub fn p(&self) -> usize {
        self.cuts.len()
    }

    pub fn first_is_empty(&self) -> bool {
        self.pieces[0].is_empty()
    }
}

impl<T: Clone> Splitting<T> {
    pub fn of(t: &Tree<T>, cuts: Vec<usize>) -> Self {
        let pieces = t.split_at(&cuts);
        Splitting { cuts, pieces }
    }
}

/// All p-splittings of `t`, one per weakly increasing sequence of `p` leaves.
/// With `restricted`, only those whose first piece is nonempty.
pub fn splittings<T: Clone>(t: &Tree<T>, p: usize, restricted: bool) -> Vec<Splitting<T>> {
    let lo = usize::from(restricted && p > 0);
    weak_sequences(p, lo, t.len())
        .into_iter()
        .map(|cuts| Splitting::of(t, cuts))
        .filter(|s| !restricted || !s.first_is_empty() || t.is_empty())
        .collect()
}

pub fn graft(forest: &Splitting<()>, s: &PlanarTree) -> Result<PlanarTree> {
    Tree::graft(&forest.pieces, s)
}

fn finish(tree: CircledTree) -> Result<BiLeveledTree> {
    if tree.is_empty() {
        Ok(BiLeveledTree::unit())
    } else {
        BiLeveledTree::new(tree)
    }
}

/// Grafting for the action of permutations: if the first piece is nonempty
/// every node of `s` becomes circled and the pieces keep their circles;
/// otherwise every node of the pieces is uncircled and `s` keeps its circles.
pub fn graft_msym_ssym(forest: &Splitting<bool>, s: &BiLeveledTree) -> Result<BiLeveledTree> {
    if forest.pieces.len() != s.len() + 1 {
        return Err(Error::Arity {
            pieces: forest.pieces.len(),
            nodes: s.len(),
        });
    }
    let tree = if forest.first_is_empty() {
        let pieces: Vec<CircledTree> = forest
            .pieces
            .iter()
            .map(|t| t.map(&mut |_| false))
            .collect();
        Tree::graft(&pieces, s.tree())?
    } else {
        Tree::graft(&forest.pieces, &s.tree().map(&mut |_| true))?
    };
    finish(tree)
}

/// Grafting for the action of planar binary trees: the first piece must be
/// nonempty, pieces keep their circles and every node of `s` is circled.
pub fn graft_msym_ysym(forest: &Splitting<bool>, s: &PlanarTree) -> Result<BiLeveledTree> {
    if forest.pieces.len() != s.len() + 1 {
        return Err(Error::Arity {
            pieces: forest.pieces.len(),
            nodes: s.len(),
        });
    }
    if forest.first_is_empty() {
        return Err(Error::Precondition(
            "the first piece of the splitting must be nonempty".into(),
        ));
    }
    finish(Tree::graft(&forest.pieces, &s.map(&mut |_| true))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::bileveled::{all_bileveled, beta, check_circling};
    use crate::trees::planar::all_planar;
    use crate::trees::tree::binomial;

    fn t(s: &str) -> PlanarTree {
        Tree::parse_canonical(s).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(splittings(&t("((..).)"), 2, false).len(), 6);
        let b = beta(&"3241".parse().unwrap());
        assert_eq!(splittings(b.tree(), 1, true).len(), 4);
        let zero = splittings(&t("((..).)"), 0, false);
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].pieces, vec![t("((..).)")]);
        for n in 0..=4 {
            for tree in all_planar(n) {
                for p in 0..=3 {
                    assert_eq!(
                        splittings(&tree, p, false).len() as u128,
                        binomial(n + p, p)
                    );
                    if p >= 1 && n >= 1 {
                        assert_eq!(
                            splittings(&tree, p, true).len() as u128,
                            binomial(n + p, p) - binomial(n + p - 1, p - 1)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn pieces_partition_the_nodes_and_regraft() {
        for n in 0..=4 {
            for tree in all_planar(n) {
                for p in 0..=2 {
                    for base in all_planar(p) {
                        for sp in splittings(&tree, p, false) {
                            let total: usize = sp.pieces.iter().map(Tree::len).sum();
                            assert_eq!(total, n);
                            let grafted = graft(&sp, &base).unwrap();
                            assert_eq!(grafted.len(), n + p);
                            // piece i occupies a contiguous block of the
                            // grafted tree's in-order; cutting on both sides
                            // of the block recovers it
                            let mut start = 0;
                            for piece in &sp.pieces {
                                let end = start + piece.len();
                                let middle = grafted.split_at(&[start, end]).swap_remove(1);
                                assert_eq!(&middle, piece);
                                start = end + 1;
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn graft_examples() {
        let one = t("(..)");
        let sp = Splitting {
            cuts: vec![0],
            pieces: vec![t("."), t("(..)")],
        };
        assert_eq!(graft(&sp, &one).unwrap().to_string(), "(.(..))");
        let sp = Splitting {
            cuts: vec![1],
            pieces: vec![t("(..)"), t(".")],
        };
        assert_eq!(graft(&sp, &one).unwrap().to_string(), "((..).)");
        let empty = Splitting {
            cuts: vec![0, 0],
            pieces: vec![t("."), t("."), t(".")],
        };
        let s = t("((..).)");
        assert_eq!(graft(&empty, &s).unwrap(), s);
    }

    #[test]
    fn ssym_grafting_rules() {
        let b = beta(&"21".parse().unwrap());
        let s: BiLeveledTree = "{.(..)}".parse().unwrap();
        let sp = Splitting::of(b.tree(), vec![0, 0]);
        assert!(sp.first_is_empty());
        let out = graft_msym_ssym(&sp, &s).unwrap();
        // b's nodes sit uncircled above the rightmost leaf; s is unchanged
        assert_eq!(out.to_string(), "{.(.(.(..)))}");

        let all: Vec<String> = splittings(b.tree(), 2, false)
            .iter()
            .map(|sp| graft_msym_ssym(sp, &s).unwrap().to_string())
            .collect();
        let mut distinct = all.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 6);

        let p0 = Splitting::of(b.tree(), vec![]);
        assert!(matches!(graft_msym_ssym(&p0, &s), Err(Error::Arity { .. })));
    }

    #[test]
    fn ysym_grafting_validity_sweep() {
        for n in 1..=4 {
            for b in all_bileveled(n).unwrap() {
                for s in all_planar(2) {
                    for sp in splittings(b.tree(), 2, true) {
                        let out = graft_msym_ysym(&sp, &s).unwrap();
                        assert!(check_circling(out.tree()).is_ok());
                    }
                }
            }
        }
        let b = beta(&"21".parse().unwrap());
        let sp = Splitting::of(b.tree(), vec![0]);
        assert!(matches!(
            graft_msym_ysym(&sp, &t("(..)")),
            Err(Error::Precondition(_))
        ));
        let whole = Splitting::of(b.tree(), vec![]);
        assert_eq!(graft_msym_ysym(&whole, &t(".")).unwrap(), b);
    }
}
