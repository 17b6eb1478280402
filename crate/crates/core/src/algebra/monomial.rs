//! Monomial bases, the linear maps induced by the tree maps, and the
//! monomial form of the coaction.

use std::fmt::Display;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::combo::{Basis, Family, Key, LinearCombo, TensorCombo};
use super::ops::coaction;
use crate::error::{Error, Result};
use crate::posets::{cached_bileveled_order, cached_tamari, cached_weak_order, FinitePoset};
use crate::trees::{
    all_bileveled, beta, is_coinvariant_shape, phi, qsym_composition, right_cuts, tau,
    BiLeveledTree,
};

fn above_in<K>(poset: &FinitePoset<K>, key: &K, wrap: fn(K) -> Key) -> Result<Vec<(Key, i64)>>
where
    K: Clone + Eq + Hash + Display,
{
    let i = poset.require_index(key)?;
    let row = poset.mobius_row(i);
    Ok(poset
        .up_set(i)
        .ones()
        .map(|j| (wrap(poset.element(j).clone()), row[j]))
        .collect())
}

/// Every `t' ≥ t` in the order on `t`'s degree, with `μ(t, t')`.
pub fn upper_set_with_mobius(t: &Key) -> Result<Vec<(Key, i64)>> {
    if t.is_unit() {
        return Ok(vec![(t.clone(), 1)]);
    }
    match t {
        Key::S(w) => above_in(&cached_weak_order(w.len()), w, Key::S),
        Key::Y(s) => above_in(&cached_tamari(s.len()), s, Key::Y),
        Key::M(b) => above_in(&*cached_bileveled_order(b.len())?, b, Key::M),
        Key::Q(_) => Err(Error::Family {
            expected: "S, Y or M (a family with an order)".into(),
            found: "Q".into(),
        }),
    }
}

/// Rewrites a combination in the fundamental basis in the monomial basis,
/// using `F_t = Σ_{t ≤ t'} M_{t'}`.
pub fn to_monomial(x: &LinearCombo) -> Result<LinearCombo> {
    expect_basis(x, Basis::F)?;
    x.linear_map(x.family(), Basis::M, |t| {
        let mut out = LinearCombo::zero(t.family(), Basis::M);
        for (u, _) in upper_set_with_mobius(t)? {
            out.push(u, BigInt::one());
        }
        Ok(out)
    })
}

/// Rewrites a combination in the monomial basis in the fundamental basis,
/// using `M_t = Σ_{t ≤ t'} μ(t, t') F_{t'}`.
pub fn from_monomial(x: &LinearCombo) -> Result<LinearCombo> {
    expect_basis(x, Basis::M)?;
    x.linear_map(x.family(), Basis::F, |t| {
        let mut out = LinearCombo::zero(t.family(), Basis::F);
        for (u, mu) in upper_set_with_mobius(t)? {
            out.push(u, BigInt::from(mu));
        }
        Ok(out)
    })
}

/// Converts to the requested basis (a no-op when already there).
pub fn convert(x: &LinearCombo, basis: Basis) -> Result<LinearCombo> {
    match (x.basis(), basis) {
        (Basis::F, Basis::M) => to_monomial(x),
        (Basis::M, Basis::F) => from_monomial(x),
        _ => Ok(x.clone()),
    }
}

fn expect_basis(x: &LinearCombo, basis: Basis) -> Result<()> {
    if x.basis() != basis {
        return Err(Error::Precondition(format!(
            "expected a combination in the {basis} basis, got {}",
            x.basis()
        )));
    }
    Ok(())
}

/// A tree map, extended linearly on fundamental bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearMap {
    /// `S → Y`
    Tau,
    /// `S → M`
    Beta,
    /// `M → Y`
    Phi,
    /// `M → Q`
    Qsym,
}

impl LinearMap {
    pub fn source(self) -> Family {
        match self {
            LinearMap::Tau | LinearMap::Beta => Family::S,
            LinearMap::Phi | LinearMap::Qsym => Family::M,
        }
    }

    pub fn target(self) -> Family {
        match self {
            LinearMap::Tau | LinearMap::Phi => Family::Y,
            LinearMap::Beta => Family::M,
            LinearMap::Qsym => Family::Q,
        }
    }

    /// The image of a single key.
    pub fn on_key(self, key: &Key) -> Result<Key> {
        Ok(match self {
            LinearMap::Tau => tau(key.as_s()?).into(),
            LinearMap::Beta => beta(key.as_s()?).into(),
            LinearMap::Phi => phi(key.as_m()?).into(),
            LinearMap::Qsym => qsym_composition(key.as_m()?).into(),
        })
    }
}

impl FromStr for LinearMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tau" => Ok(LinearMap::Tau),
            "beta" => Ok(LinearMap::Beta),
            "phi" => Ok(LinearMap::Phi),
            "qsym" => Ok(LinearMap::Qsym),
            other => Err(Error::parse(other, "expected tau, beta, phi or qsym")),
        }
    }
}

/// Applies the map induced by `map` on fundamental bases. A monomial input is
/// converted to the fundamental basis first and the image converted back.
pub fn apply_linear_map(map: LinearMap, x: &LinearCombo) -> Result<LinearCombo> {
    if x.family() != map.source() {
        return Err(Error::Family {
            expected: map.source().to_string(),
            found: x.family().to_string(),
        });
    }
    let fund = convert(x, Basis::F)?;
    let image = fund.linear_map(map.target(), Basis::F, |k| {
        Ok(LinearCombo::basis_element(Basis::F, map.on_key(k)?))
    })?;
    convert(&image, x.basis())
}

/// `ρ(M_b) = Σ M_{b'} ⊗ M_s` over the ways of writing `b` as `s` grafted
/// uncircled onto the rightmost leaf of `b'`.
pub fn coaction_monomial(b: &BiLeveledTree) -> TensorCombo {
    let mut out = TensorCombo::zero(Family::M, Family::Y, Basis::M);
    for (lower, s) in right_cuts(b) {
        out.push(lower.into(), s.into(), BigInt::one());
    }
    out
}

/// `ρ(M_b)` computed the long way: expand `M_b` in the fundamental basis,
/// apply the coaction there, and convert both tensor factors back.
pub fn coaction_transported(b: &BiLeveledTree) -> Result<TensorCombo> {
    let fund = from_monomial(&LinearCombo::basis_element(Basis::M, b.clone().into()))?;
    let mut rho = TensorCombo::zero(Family::M, Family::Y, Basis::F);
    for (k, c) in fund.iter() {
        rho.add_scaled(&coaction(k.as_m()?), c)?;
    }
    let single = |k: &Key| to_monomial(&LinearCombo::basis_element(Basis::F, k.clone()));
    rho.map_factors((Family::M, Basis::M), (Family::Y, Basis::M), single, single)
}

/// The bi-leveled trees with no uncircled node on the right branch; their
/// monomial elements span the coinvariants.
pub fn coinvariant_basis(n: usize) -> Result<Vec<BiLeveledTree>> {
    Ok(all_bileveled(n)?
        .into_iter()
        .filter(is_coinvariant_shape)
        .collect())
}
