//! Products, coproducts, actions and the coaction in the fundamental bases.

use num_bigint::BigInt;
use num_traits::One;

use super::combo::{Basis, Family, Key, LinearCombo, TensorCombo};
use crate::error::{Error, Result};
use crate::trees::{
    beta, graft, graft_msym_ssym, graft_msym_ysym, max_min, splittings, BiLeveledTree, Permutation,
    PlanarTree, Tree,
};

fn sum_of<K: Into<Key>>(family: Family, keys: impl IntoIterator<Item = K>) -> LinearCombo {
    let mut out = LinearCombo::zero(family, Basis::F);
    for k in keys {
        out.push(k.into(), BigInt::one());
    }
    out
}

/// The shuffles of `u` with `v` shifted up by `|u|`: `u` is cut into `|v| + 1`
/// consecutive segments and the letters of `v` are placed between them.
pub fn shuffle_product(u: &Permutation, v: &Permutation) -> Vec<Permutation> {
    let n = u.len();
    let shifted: Vec<u32> = v.as_slice().iter().map(|&x| x + n as u32).collect();
    crate::trees::tree::weak_sequences(v.len(), 0, n)
        .into_iter()
        .map(|cuts| {
            let mut word = Vec::with_capacity(n + v.len());
            let mut start = 0;
            for (&c, &x) in cuts.iter().zip(&shifted) {
                word.extend_from_slice(&u.as_slice()[start..c]);
                word.push(x);
                start = c;
            }
            word.extend_from_slice(&u.as_slice()[start..]);
            Permutation::from_vec_unchecked(word)
        })
        .collect()
}

/// Every `|s|`-splitting of `t` grafted onto `s`.
pub fn tree_product(t: &PlanarTree, s: &PlanarTree) -> Vec<PlanarTree> {
    splittings(t, s.len(), false)
        .iter()
        .map(|sp| graft(sp, s).expect("a |s|-splitting has |s| + 1 pieces"))
        .collect()
}

/// `F_x · F_y` for two permutations or two planar binary trees.
pub fn product_fund(x: &Key, y: &Key) -> Result<LinearCombo> {
    match (x, y) {
        (Key::S(u), Key::S(v)) => Ok(sum_of(Family::S, shuffle_product(u, v))),
        (Key::Y(t), Key::Y(s)) => Ok(sum_of(Family::Y, tree_product(t, s))),
        (Key::M(_), _) | (_, Key::M(_)) => Err(Error::Precondition(
            "bi-leveled trees are multiplied with product_msym or acted on with action_ssym / action_ysym".into(),
        )),
        _ => Err(Error::Family {
            expected: "two keys of family S or two of family Y".into(),
            found: format!("{} and {}", x.family(), y.family()),
        }),
    }
}

/// Bilinear extension of [`product_fund`].
pub fn product(x: &LinearCombo, y: &LinearCombo) -> Result<LinearCombo> {
    require_fund(x)?;
    require_fund(y)?;
    x.bilinear(y, x.family(), Basis::F, product_fund)
}

/// `Δ(F_x)`: a sum over the 1-splittings of `x`. For permutations the two
/// halves of the word are standardized.
pub fn coproduct_fund(x: &Key) -> Result<TensorCombo> {
    let family = x.family();
    let mut out = TensorCombo::zero(family, family, Basis::F);
    match x {
        Key::S(w) => {
            for k in 0..=w.len() {
                let (a, b) = w.as_slice().split_at(k);
                out.push(
                    Permutation::standardize(a).into(),
                    Permutation::standardize(b).into(),
                    BigInt::one(),
                );
            }
        }
        Key::Y(t) => {
            for sp in splittings(t, 1, false) {
                let [a, b]: [PlanarTree; 2] = sp.pieces.try_into().expect("two pieces");
                out.push(a.into(), b.into(), BigInt::one());
            }
        }
        other => {
            return Err(Error::Family {
                expected: "S or Y".into(),
                found: other.family().to_string(),
            })
        }
    }
    Ok(out)
}

/// Linear extension of [`coproduct_fund`].
pub fn coproduct(x: &LinearCombo) -> Result<TensorCombo> {
    require_fund(x)?;
    let mut out = TensorCombo::zero(x.family(), x.family(), Basis::F);
    for (k, c) in x.iter() {
        out.add_scaled(&coproduct_fund(k)?, c)?;
    }
    Ok(out)
}

/// `F_w · F_s`: every `|s|`-splitting of `beta(w)` grafted onto `s`.
pub fn action_ssym(w: &Permutation, s: &BiLeveledTree) -> LinearCombo {
    let b = beta(w);
    sum_of(
        Family::M,
        splittings(b.tree(), s.len(), false)
            .iter()
            .map(|sp| graft_msym_ssym(sp, s).expect("a |s|-splitting has |s| + 1 pieces")),
    )
}

/// The product of bi-leveled trees, through any permutation in the fiber of
/// `b`; the adjoined unit is the identity.
pub fn product_msym(b: &BiLeveledTree, s: &BiLeveledTree) -> LinearCombo {
    if b.is_unit() {
        return LinearCombo::basis_element(Basis::F, s.clone().into());
    }
    action_ssym(&max_min(b), s)
}

/// `F_b · F_s`: every `|s|`-splitting of `b` with nonempty first piece,
/// grafted onto `s`.
pub fn action_ysym(b: &BiLeveledTree, s: &PlanarTree) -> Result<LinearCombo> {
    if b.is_unit() {
        if s.is_empty() {
            return Ok(LinearCombo::basis_element(Basis::F, b.clone().into()));
        }
        return Err(Error::Precondition(
            "planar trees do not act on the adjoined unit".into(),
        ));
    }
    Ok(sum_of(
        Family::M,
        splittings(b.tree(), s.len(), true)
            .iter()
            .map(|sp| graft_msym_ysym(sp, s).expect("restricted splittings fit")),
    ))
}

/// Bilinear extension of the three products landing in `M`: `S` acting on
/// the left, `M` on `M`, and `Y` acting on the right.
pub fn act(x: &LinearCombo, y: &LinearCombo) -> Result<LinearCombo> {
    require_fund(x)?;
    require_fund(y)?;
    x.bilinear(y, Family::M, Basis::F, |a, b| match (a, b) {
        (Key::S(w), Key::M(s)) => Ok(action_ssym(w, s)),
        (Key::M(b), Key::M(s)) => Ok(product_msym(b, s)),
        (Key::M(b), Key::Y(s)) => action_ysym(b, s),
        _ => Err(Error::Family {
            expected: "S·M, M·M or M·Y".into(),
            found: format!("{}·{}", a.family(), b.family()),
        }),
    })
}

/// `ρ(F_b)`: every 1-splitting `(b_0, b_1)` with `b_0` nonempty gives
/// `F_{b_0} ⊗ F_{phi(b_1)}`.
pub fn coaction(b: &BiLeveledTree) -> TensorCombo {
    let mut out = TensorCombo::zero(Family::M, Family::Y, Basis::F);
    if b.is_unit() {
        out.push(b.clone().into(), Key::unit(Family::Y), BigInt::one());
        return out;
    }
    for sp in splittings(b.tree(), 1, true) {
        let [b0, b1]: [Tree<bool>; 2] = sp.pieces.try_into().expect("two pieces");
        let left = BiLeveledTree::new(b0).expect("the lower piece keeps the circling rules");
        out.push(left.into(), b1.shape().into(), BigInt::one());
    }
    out
}

/// Linear extension of [`coaction`].
pub fn coact(x: &LinearCombo) -> Result<TensorCombo> {
    require_fund(x)?;
    let mut out = TensorCombo::zero(Family::M, Family::Y, Basis::F);
    for (k, c) in x.iter() {
        out.add_scaled(&coaction(k.as_m()?), c)?;
    }
    Ok(out)
}

/// `(x ⊗ y) · (s ⊗ t) = (x · s) ⊗ (y · t)` with `M` acted on by `Y` on the
/// left factor and the product of `Y` on the right.
pub fn tensor_action(m: &TensorCombo, h: &TensorCombo) -> Result<TensorCombo> {
    if m.families() != (Family::M, Family::Y) || h.families() != (Family::Y, Family::Y) {
        return Err(Error::Family {
            expected: "M⊗Y acted on by Y⊗Y".into(),
            found: format!("{:?} and {:?}", m.families(), h.families()),
        });
    }
    let mut out = TensorCombo::zero(Family::M, Family::Y, Basis::F);
    for ((x, y), c) in m.iter() {
        for ((s, t), d) in h.iter() {
            let left = action_ysym(x.as_m()?, s.as_y()?)?;
            let right = product_fund(y, t)?;
            out.add_scaled(&TensorCombo::tensor(&left, &right)?, &(c * d))?;
        }
    }
    Ok(out)
}

fn require_fund(x: &LinearCombo) -> Result<()> {
    if x.basis() != Basis::F {
        return Err(Error::Precondition(
            "structure maps are defined on the fundamental basis; convert first".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{all_bileveled, all_planar};

    fn s(text: &str) -> Key {
        Key::parse(Family::S, text).unwrap()
    }

    fn y(text: &str) -> Key {
        Key::parse(Family::Y, text).unwrap()
    }

    fn m(text: &str) -> BiLeveledTree {
        text.parse().unwrap()
    }

    fn keys(x: &LinearCombo) -> Vec<String> {
        x.iter().map(|(k, _)| k.to_string()).collect()
    }

    fn b(w: &str) -> BiLeveledTree {
        beta(&w.parse().unwrap())
    }

    #[test]
    fn small_products() {
        assert_eq!(keys(&product_fund(&s("1"), &s("1")).unwrap()), ["12", "21"]);
        assert_eq!(
            keys(&product_fund(&y("(..)"), &y("(..)")).unwrap()),
            ["((..).)", "(.(..))"]
        );
        let x = product_fund(&s("21"), &s("1")).unwrap();
        assert_eq!(keys(&x), ["213", "231", "321"]);
        for k in [s("312"), y("((..).)")] {
            let unit = Key::unit(k.family());
            let expect = LinearCombo::basis_element(Basis::F, k.clone());
            assert_eq!(product_fund(&unit, &k).unwrap(), expect);
            assert_eq!(product_fund(&k, &unit).unwrap(), expect);
        }
        assert!(product_fund(&s("1"), &y("(..)")).is_err());
        assert!(product_fund(&Key::M(m("{..}")), &Key::M(m("{..}"))).is_err());
    }

    #[test]
    fn small_coproducts() {
        let d = coproduct_fund(&y("((..).)")).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coefficient(&y("(..)"), &y("(..)")), BigInt::one());
        assert_eq!(d.coefficient(&y("1"), &y("((..).)")), BigInt::one());
        let d = coproduct_fund(&s("1")).unwrap();
        assert_eq!(d.to_string(), "1 ⊗ F[1] + F[1] ⊗ 1");
        let d = coproduct_fund(&s("312")).unwrap();
        assert_eq!(d.coefficient(&s("21"), &s("1")), BigInt::one());
        assert_eq!(d.coefficient(&s("1"), &s("12")), BigInt::one());
    }

    #[test]
    fn the_six_term_product() {
        let x = product_msym(&b("21"), &b("21"));
        let expect: Vec<BiLeveledTree> = ["2143", "2413", "2431", "4213", "4231", "4321"]
            .iter()
            .map(|w| b(w))
            .collect();
        assert_eq!(x, sum_of(Family::M, expect));
        // the action only sees the β-image
        let s = m("{{.(..)}(..)}");
        assert_eq!(
            action_ssym(&"3142".parse().unwrap(), &s),
            action_ssym(&"3241".parse().unwrap(), &s)
        );
    }

    #[test]
    fn the_three_term_action() {
        let x = action_ysym(&b("21"), &crate::trees::tau(&"21".parse().unwrap())).unwrap();
        let expect: Vec<BiLeveledTree> = ["2143", "2413", "2431"].iter().map(|w| b(w)).collect();
        assert_eq!(x, sum_of(Family::M, expect));
        let leaf = Tree::Leaf;
        assert_eq!(
            action_ysym(&b("21"), &leaf).unwrap(),
            LinearCombo::basis_element(Basis::F, b("21").into())
        );
        assert!(action_ysym(&BiLeveledTree::unit(), &crate::trees::right_comb(1)).is_err());
    }

    #[test]
    fn coaction_displays() {
        let r = coaction(&b("3241"));
        let mut expect = TensorCombo::zero(Family::M, Family::Y, Basis::F);
        for (l, rt) in [("3241", ""), ("213", "1"), ("21", "21"), ("1", "231")] {
            let right: Key = crate::trees::tau(&rt.parse().unwrap()).into();
            expect.push(b(l).into(), right, BigInt::one());
        }
        assert_eq!(r, expect);

        let r = coaction(&b("35421"));
        let mut expect = TensorCombo::zero(Family::M, Family::Y, Basis::F);
        for (l, rt) in [
            ("35421", ""),
            ("2431", "1"),
            ("132", "21"),
            ("12", "321"),
            ("1", "4321"),
        ] {
            let right: Key = crate::trees::tau(&rt.parse().unwrap()).into();
            expect.push(b(l).into(), right, BigInt::one());
        }
        assert_eq!(r, expect);

        for one in all_bileveled(1).unwrap() {
            assert_eq!(coaction(&one).len(), 1);
        }
    }

    #[test]
    fn degrees_add() {
        for bl in all_bileveled(2).unwrap() {
            for t in all_planar(2) {
                for (k, _) in action_ysym(&bl, &t).unwrap().iter() {
                    assert_eq!(k.degree(), 4);
                }
            }
            for w in Permutation::all(2) {
                for (k, _) in action_ssym(&w, &bl).iter() {
                    assert_eq!(k.degree(), 4);
                }
            }
        }
    }
}
