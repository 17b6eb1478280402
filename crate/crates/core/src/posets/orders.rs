//! The weak order on permutations, the Tamari order on planar binary trees
//! and the weak order on bi-leveled trees.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::poset::FinitePoset;
use crate::error::{Error, Result};
use crate::trees::{
    all_bileveled, all_planar, min_perm, phi, BiLeveledTree, Permutation, PlanarTree, Tree,
};

/// Permutations covering `w`: swap the values `k` and `k + 1` whenever `k`
/// appears before `k + 1`.
pub fn weak_covers(w: &Permutation) -> Vec<Permutation> {
    let pos = w.positions();
    let mut out = Vec::new();
    for k in 1..w.len() {
        if pos[k - 1] < pos[k] {
            let mut word = w.as_slice().to_vec();
            word.swap(pos[k - 1], pos[k]);
            out.push(Permutation::new(word).expect("value swap keeps a permutation"));
        }
    }
    out
}

/// The (left) weak order on `S_n`.
pub fn weak_order(n: usize) -> FinitePoset<Permutation> {
    let elements = Permutation::all(n);
    let index: HashMap<&Permutation, usize> =
        elements.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let covers: Vec<(usize, usize)> = elements
        .iter()
        .enumerate()
        .flat_map(|(i, w)| {
            weak_covers(w)
                .into_iter()
                .map(|v| (i, index[&v]))
                .collect::<Vec<_>>()
        })
        .collect();
    FinitePoset::from_covers(elements.clone(), &covers).expect("weak order is acyclic")
}

/// Trees obtained from `t` by one rotation `(A·B)·C → A·(B·C)` at some node.
pub fn rotations(t: &PlanarTree) -> Vec<PlanarTree> {
    let Some(node) = t.as_node() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if let Some(l) = node.left.as_node() {
        out.push(Tree::node(
            l.left.clone(),
            (),
            Tree::node(l.right.clone(), (), node.right.clone()),
        ));
    }
    for left in rotations(&node.left) {
        out.push(Tree::node(left, (), node.right.clone()));
    }
    for right in rotations(&node.right) {
        out.push(Tree::node(node.left.clone(), (), right));
    }
    out
}

/// The Tamari order on `Y_n`, generated by rotations; the left comb is the
/// minimum.
pub fn tamari(n: usize) -> FinitePoset<PlanarTree> {
    let elements = all_planar(n);
    let index: HashMap<&PlanarTree, usize> =
        elements.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let covers: Vec<(usize, usize)> = elements
        .iter()
        .enumerate()
        .flat_map(|(i, t)| {
            rotations(t)
                .into_iter()
                .map(|r| (i, index[&r]))
                .collect::<Vec<_>>()
        })
        .collect();
    FinitePoset::from_covers(elements.clone(), &covers).expect("Tamari order is acyclic")
}

/// The order on `Y_n` transported from the weak order through `min_perm`.
pub fn tamari_by_min_perm(n: usize) -> FinitePoset<PlanarTree> {
    let weak = cached_weak_order(n);
    let elements = all_planar(n);
    let mins: HashMap<PlanarTree, usize> = elements
        .iter()
        .map(|t| {
            (
                t.clone(),
                weak.index_of(&min_perm(t)).expect("min_perm lies in S_n"),
            )
        })
        .collect();
    FinitePoset::from_relation(elements, |s, t| weak.leq(mins[s], mins[t]))
        .expect("transported order is a partial order")
}

/// The weak order on bi-leveled trees: `s ≤ t` iff `phi(s) ≤ phi(t)` in the
/// Tamari order and every node circled in `t` is circled in `s`.
pub fn bileveled_order(n: usize) -> Result<FinitePoset<BiLeveledTree>> {
    let elements = all_bileveled(n)?;
    let tam = cached_tamari(n);
    let info: HashMap<BiLeveledTree, (usize, std::collections::BTreeSet<usize>)> = elements
        .iter()
        .map(|b| {
            let shape = tam.index_of(&phi(b)).expect("shape lies in Y_n");
            (b.clone(), (shape, b.circled()))
        })
        .collect();
    FinitePoset::from_relation(elements, |s, t| {
        let (ps, cs) = &info[s];
        let (pt, ct) = &info[t];
        tam.leq(*ps, *pt) && ct.is_subset(cs)
    })
}

type Cache<K> = OnceLock<Mutex<HashMap<usize, Arc<FinitePoset<K>>>>>;

fn cached<K>(
    cache: &Cache<K>,
    n: usize,
    build: impl FnOnce() -> FinitePoset<K>,
) -> Arc<FinitePoset<K>> {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().unwrap_or_else(|e| e.into_inner());
    guard.entry(n).or_insert_with(|| Arc::new(build())).clone()
}

static WEAK: Cache<Permutation> = OnceLock::new();
static TAMARI: Cache<PlanarTree> = OnceLock::new();
static BILEVELED: Cache<BiLeveledTree> = OnceLock::new();

/// Shared, frozen copy of [`weak_order`].
pub fn cached_weak_order(n: usize) -> Arc<FinitePoset<Permutation>> {
    cached(&WEAK, n, || weak_order(n))
}

/// Shared, frozen copy of [`tamari`].
pub fn cached_tamari(n: usize) -> Arc<FinitePoset<PlanarTree>> {
    cached(&TAMARI, n, || tamari(n))
}

/// Shared, frozen copy of [`bileveled_order`].
pub fn cached_bileveled_order(n: usize) -> Result<Arc<FinitePoset<BiLeveledTree>>> {
    if n == 0 {
        return Err(Error::Domain(
            "there are no bi-leveled trees with 0 nodes".into(),
        ));
    }
    Ok(cached(&BILEVELED, n, || {
        bileveled_order(n).expect("n ≥ 1 was checked")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{beta, left_comb, max_perm, right_comb, tau_fiber};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(s: &str) -> PlanarTree {
        Tree::parse_canonical(s).unwrap()
    }

    #[test]
    fn weak_cover_rule() {
        assert_eq!(weak_covers(&p("132")), vec![p("231")]);
        assert_eq!(weak_covers(&p("321")), vec![]);
    }

    #[test]
    fn weak_order_three_is_a_hexagon() {
        let w = weak_order(3);
        assert_eq!(w.len(), 6);
        assert_eq!(w.cover_count(), 6);
        let i = |s: &str| w.index_of(&p(s)).unwrap();
        for chain in [["123", "132", "231", "321"], ["123", "213", "312", "321"]] {
            for pair in chain.windows(2) {
                assert!(w.upper_covers(i(pair[0])).contains(&i(pair[1])));
            }
        }
        assert_eq!(w.mobius(i("123"), i("321")).unwrap(), 1);
        assert_eq!(w.mobius(i("123"), i("231")).unwrap(), 0);
        assert_eq!(w.mobius(i("123"), i("132")).unwrap(), -1);
    }

    #[test]
    fn weak_order_is_graded_by_inversions() {
        for n in 1..=5 {
            let w = weak_order(n);
            for (x, y) in w.cover_edges() {
                assert_eq!(w.element(x).inversions() + 1, w.element(y).inversions());
            }
            assert_eq!(w.element(w.minimum().unwrap()), &Permutation::identity(n));
            assert_eq!(
                w.element(w.maximum().unwrap()),
                &Permutation::reversed_identity(n)
            );
            assert!(w.is_lattice());
        }
    }

    #[test]
    fn tau_fibers_are_weak_intervals() {
        let w = weak_order(4);
        let i = |s: &str| w.index_of(&p(s)).unwrap();
        let interval: Vec<String> = w
            .interval(i("1423"), i("3412"))
            .unwrap()
            .into_iter()
            .map(|k| w.element(k).to_string())
            .collect();
        assert_eq!(interval, ["1423", "2413", "3412"]);
        for tree in all_planar(4) {
            let fiber: Vec<usize> = tau_fiber(&tree)
                .iter()
                .map(|v| w.index_of(v).unwrap())
                .collect();
            let lo = w.index_of(&min_perm(&tree)).unwrap();
            let hi = w.index_of(&max_perm(&tree)).unwrap();
            assert_eq!(w.as_interval(&fiber), Some((lo, hi)));
        }
    }

    #[test]
    fn tamari_small_cases() {
        let y2 = tamari(2);
        let lo = y2.index_of(&t("((..).)")).unwrap();
        let hi = y2.index_of(&t("(.(..))")).unwrap();
        assert_eq!(y2.cover_edges(), vec![(lo, hi)]);
        let y3 = tamari(3);
        assert_eq!(y3.len(), 5);
        assert_eq!(y3.cover_count(), 5);
        for n in 1..=5 {
            let y = tamari(n);
            assert_eq!(y.element(y.minimum().unwrap()), &left_comb(n));
            assert_eq!(y.element(y.maximum().unwrap()), &right_comb(n));
        }
    }

    #[test]
    fn tamari_matches_transport() {
        for n in 1..=5 {
            let a = tamari(n);
            let b = tamari_by_min_perm(n);
            assert_eq!(a.cover_edges(), b.cover_edges(), "n={n}");
        }
    }

    #[test]
    fn bileveled_small_cases() {
        let m2 = bileveled_order(2).unwrap();
        let lo = m2.index_of(&"{{..}.}".parse().unwrap()).unwrap();
        let hi = m2.index_of(&"{.(..)}".parse().unwrap()).unwrap();
        assert_eq!(m2.cover_edges(), vec![(lo, hi)]);
        let m4 = bileveled_order(4).unwrap();
        assert_eq!(m4.len(), 21);
        assert_eq!(m4.element(m4.minimum().unwrap()), &beta(&p("1234")));
        assert_eq!(m4.element(m4.maximum().unwrap()), &beta(&p("4321")));
        assert!(bileveled_order(0).is_err());
    }

    #[test]
    fn beta_is_order_preserving() {
        for n in 1..=5 {
            let w = cached_weak_order(n);
            let m = cached_bileveled_order(n).unwrap();
            let images: Vec<usize> = w
                .elements()
                .iter()
                .map(|v| m.index_of(&beta(v)).unwrap())
                .collect();
            for (x, y) in w.cover_edges() {
                assert!(m.leq(images[x], images[y]), "n={n}");
            }
        }
    }
}
