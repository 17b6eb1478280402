//! Both sides of the identities the structure maps are expected to satisfy.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::combo::{Basis, Family, Key, LinearCombo, TensorCombo};
use super::monomial::{
    apply_linear_map, coaction_monomial, coaction_transported, from_monomial, to_monomial,
    LinearMap,
};
use super::ops::{action_ysym, coact, coaction, coproduct_fund, tensor_action};
use crate::error::Result;
use crate::trees::{beta, max_perm, tau, BiLeveledTree, Permutation, PlanarTree};

/// The two sides of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Check<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `ρ(F_b · F_s)` against `ρ(F_b) · Δ(F_s)`.
pub fn check_hopf_module(b: &BiLeveledTree, s: &PlanarTree) -> Result<Check<TensorCombo>> {
    let lhs = coact(&action_ysym(b, s)?)?;
    let rhs = tensor_action(&coaction(b), &coproduct_fund(&Key::Y(s.clone()))?)?;
    Ok(Check { lhs, rhs })
}

/// The induced `beta` applied to `Σ_{β(σ) = t} M_σ`, read in the monomial
/// basis, against `M_t`.
pub fn check_eq8(t: &BiLeveledTree) -> Result<Check<LinearCombo>> {
    let mut fiber_sum = LinearCombo::zero(Family::S, Basis::M);
    for w in Permutation::all(t.len()) {
        if &beta(&w) == t {
            fiber_sum.push(w.into(), BigInt::one());
        }
    }
    let image = apply_linear_map(LinearMap::Beta, &from_monomial(&fiber_sum)?)?;
    Ok(Check {
        lhs: to_monomial(&image)?,
        rhs: LinearCombo::basis_element(Basis::M, t.clone().into()),
    })
}

/// The induced `tau` on `M_σ` against `M_{tau(σ)}` when `σ` is the maximum
/// of its fiber, and against zero otherwise.
pub fn check_tau_monomial(w: &Permutation) -> Result<Check<LinearCombo>> {
    let lhs = apply_linear_map(
        LinearMap::Tau,
        &LinearCombo::basis_element(Basis::M, w.clone().into()),
    )?;
    let t = tau(w);
    let rhs = if &max_perm(&t) == w {
        LinearCombo::basis_element(Basis::M, t.into())
    } else {
        LinearCombo::zero(Family::Y, Basis::M)
    };
    Ok(Check { lhs, rhs })
}

/// The closed form of `ρ(M_b)` against the coaction transported through the
/// fundamental basis.
pub fn check_monomial_coaction(b: &BiLeveledTree) -> Result<Check<TensorCombo>> {
    Ok(Check {
        lhs: coaction_monomial(b),
        rhs: coaction_transported(b)?,
    })
}

pub type TripleTerms = BTreeMap<(Key, Key, Key), BigInt>;

/// `(ρ ⊗ id) ∘ ρ` against `(id ⊗ Δ) ∘ ρ` on `F_b`.
pub fn check_coaction_coassociative(b: &BiLeveledTree) -> Result<Check<TripleTerms>> {
    let rho = coaction(b);
    let mut lhs = TripleTerms::new();
    let mut rhs = TripleTerms::new();
    let add = |map: &mut TripleTerms, k: (Key, Key, Key), c: BigInt| {
        let slot = map.entry(k).or_default();
        *slot += c;
    };
    for ((x, y), c) in rho.iter() {
        for ((x0, x1), d) in coaction(x.as_m()?).iter() {
            add(&mut lhs, (x0.clone(), x1.clone(), y.clone()), c * d);
        }
        for ((y0, y1), d) in coproduct_fund(y)?.iter() {
            add(&mut rhs, (x.clone(), y0.clone(), y1.clone()), c * d);
        }
    }
    lhs.retain(|_, c| c != &BigInt::default());
    rhs.retain(|_, c| c != &BigInt::default());
    Ok(Check { lhs, rhs })
}
