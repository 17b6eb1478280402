//! Certificates for pairs of poset maps: Galois connections, interval
//! retracts, and the fiber structure of `beta`.

use std::fmt::Display;
use std::hash::Hash;

use super::orders::cached_weak_order;
use super::poset::FinitePoset;
use crate::error::{Error, Result};
use crate::trees::{beta, max_min, min_min, BiLeveledTree, Permutation};

/// A map `forward: P → Q` together with a map `backward: Q → P`, stored as
/// index tables.
pub struct PosetMapPair<'a, P, Q> {
    pub source: &'a FinitePoset<P>,
    pub target: &'a FinitePoset<Q>,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl<'a, P, Q> PosetMapPair<'a, P, Q>
where
    P: Clone + Eq + Hash + Display,
    Q: Clone + Eq + Hash + Display,
{
    pub fn new(
        source: &'a FinitePoset<P>,
        target: &'a FinitePoset<Q>,
        forward: impl Fn(&P) -> Q,
        backward: impl Fn(&Q) -> P,
    ) -> Result<Self> {
        let forward = source
            .elements()
            .iter()
            .map(|x| target.require_index(&forward(x)))
            .collect::<Result<_>>()?;
        let backward = target
            .elements()
            .iter()
            .map(|y| source.require_index(&backward(y)))
            .collect::<Result<_>>()?;
        Ok(PosetMapPair {
            source,
            target,
            forward,
            backward,
        })
    }
}

impl<P, Q> PosetMapPair<'_, P, Q> {
    pub fn identity(poset: &FinitePoset<P>) -> PosetMapPair<'_, P, P> {
        let id: Vec<usize> = (0..poset.len()).collect();
        PosetMapPair {
            source: poset,
            target: poset,
            forward: id.clone(),
            backward: id,
        }
    }

    fn forward_violation(&self) -> Option<(usize, usize)> {
        monotone_violation(self.source, self.target, &self.forward)
    }

    fn backward_violation(&self) -> Option<(usize, usize)> {
        monotone_violation(self.target, self.source, &self.backward)
    }

    fn fiber(&self, t: usize) -> Vec<usize> {
        (0..self.source.len())
            .filter(|&v| self.forward[v] == t)
            .collect()
    }
}

fn monotone_violation<A, B>(
    from: &FinitePoset<A>,
    to: &FinitePoset<B>,
    map: &[usize],
) -> Option<(usize, usize)> {
    from.cover_edges()
        .into_iter()
        .find(|&(x, y)| !to.leq(map[x], map[y]))
}

fn describe<A: Display, B: Display>(
    p: &FinitePoset<A>,
    q: &FinitePoset<B>,
    pair: (usize, usize),
) -> String {
    format!("{} {}", p.element(pair.0), q.element(pair.1))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GaloisReport {
    pub forward_monotone: bool,
    pub backward_monotone: bool,
    /// First `(v, t)` with `φ(v) ≤ t` not equivalent to `v ≤ γ(t)`.
    pub adjunction_counterexample: Option<String>,
    /// Whether the Möbius identity was evaluated (only when the adjunction holds).
    pub rota_checked: bool,
    pub rota_counterexample: Option<String>,
}

impl GaloisReport {
    pub fn is_galois_connection(&self) -> bool {
        self.forward_monotone && self.backward_monotone && self.adjunction_counterexample.is_none()
    }

    pub fn passed(&self) -> bool {
        self.is_galois_connection() && self.rota_checked && self.rota_counterexample.is_none()
    }

    pub fn counterexample(&self) -> Option<&str> {
        self.adjunction_counterexample
            .as_deref()
            .or(self.rota_counterexample.as_deref())
    }
}

/// Checks `φ(v) ≤ t ⇔ v ≤ γ(t)` for all pairs; when it holds, also checks
/// `Σ_{w ∈ φ⁻¹(t), v ≤ w} μ_P(v, w) = Σ_{s ∈ γ⁻¹(v), s ≤ t} μ_Q(s, t)`.
pub fn check_galois<P: Display, Q: Display>(pair: &PosetMapPair<'_, P, Q>) -> GaloisReport {
    let (p, q) = (pair.source, pair.target);
    let mut report = GaloisReport {
        forward_monotone: pair.forward_violation().is_none(),
        backward_monotone: pair.backward_violation().is_none(),
        ..Default::default()
    };
    'outer: for v in 0..p.len() {
        for t in 0..q.len() {
            if q.leq(pair.forward[v], t) != p.leq(v, pair.backward[t]) {
                report.adjunction_counterexample = Some(describe(p, q, (v, t)));
                break 'outer;
            }
        }
    }
    if !report.is_galois_connection() {
        return report;
    }
    report.rota_checked = true;
    let fibers: Vec<Vec<usize>> = (0..q.len()).map(|t| pair.fiber(t)).collect();
    let cofibers: Vec<Vec<usize>> = (0..p.len())
        .map(|v| (0..q.len()).filter(|&s| pair.backward[s] == v).collect())
        .collect();
    'rota: for (v, cofiber) in cofibers.iter().enumerate() {
        for (t, fiber) in fibers.iter().enumerate() {
            let lhs: i64 = fiber.iter().map(|&w| p.mobius_or_zero(v, w)).sum();
            let rhs: i64 = cofiber.iter().map(|&s| q.mobius_or_zero(s, t)).sum();
            if lhs != rhs {
                report.rota_counterexample = Some(describe(p, q, (v, t)));
                break 'rota;
            }
        }
    }
    report
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RetractReport {
    pub source_is_lattice: bool,
    pub forward_monotone: bool,
    pub backward_monotone: bool,
    /// First `t` with `φ(γ(t)) ≠ t`.
    pub retraction_counterexample: Option<String>,
    /// First `t` whose fiber is not an interval.
    pub fiber_counterexample: Option<String>,
    /// Whether `γ` reflects the order as well (an order embedding).
    pub backward_is_embedding: bool,
    pub mobius_checked: bool,
    /// First `s < t` where the fiber sum of `μ_P` differs from `μ_Q(s, t)`.
    pub mobius_counterexample: Option<String>,
    pub pairs_checked: usize,
}

impl RetractReport {
    pub fn is_interval_retract(&self) -> bool {
        self.source_is_lattice
            && self.forward_monotone
            && self.backward_monotone
            && self.retraction_counterexample.is_none()
            && self.fiber_counterexample.is_none()
    }

    pub fn passed(&self) -> bool {
        self.is_interval_retract() && self.mobius_checked && self.mobius_counterexample.is_none()
    }

    pub fn counterexample(&self) -> Option<&str> {
        self.retraction_counterexample
            .as_deref()
            .or(self.fiber_counterexample.as_deref())
            .or(self.mobius_counterexample.as_deref())
    }
}

/// Certifies that `(φ, γ)` exhibits an interval retract (source a lattice,
/// both maps monotone, `φ∘γ = id`, every fiber of `φ` an interval), then
/// checks `Σ_{v ∈ φ⁻¹(s), w ∈ φ⁻¹(t)} μ_P(v, w) = μ_Q(s, t)` for all `s < t`.
pub fn check_interval_retract<P: Display, Q: Display>(
    pair: &PosetMapPair<'_, P, Q>,
) -> RetractReport {
    let (p, q) = (pair.source, pair.target);
    let mut report = RetractReport {
        source_is_lattice: p.is_lattice(),
        forward_monotone: pair.forward_violation().is_none(),
        backward_monotone: pair.backward_violation().is_none(),
        ..Default::default()
    };
    report.retraction_counterexample = (0..q.len())
        .find(|&t| pair.forward[pair.backward[t]] != t)
        .map(|t| q.element(t).to_string());
    let fibers: Vec<Vec<usize>> = (0..q.len()).map(|t| pair.fiber(t)).collect();
    report.fiber_counterexample = fibers
        .iter()
        .position(|f| p.as_interval(f).is_none())
        .map(|t| q.element(t).to_string());
    report.backward_is_embedding = (0..q.len())
        .all(|s| (0..q.len()).all(|t| q.leq(s, t) == p.leq(pair.backward[s], pair.backward[t])));
    if !report.is_interval_retract() {
        return report;
    }
    report.mobius_checked = true;
    'outer: for s in 0..q.len() {
        for t in 0..q.len() {
            if !q.lt(s, t) {
                continue;
            }
            report.pairs_checked += 1;
            let sum: i64 = fibers[s]
                .iter()
                .flat_map(|&v| fibers[t].iter().map(move |&w| (v, w)))
                .map(|(v, w)| p.mobius_or_zero(v, w))
                .sum();
            if sum != q.mobius_or_zero(s, t) {
                report.mobius_counterexample = Some(describe(q, q, (s, t)));
                break 'outer;
            }
        }
    }
    report
}

/// The endpoints `(mm(b), MM(b))` of the fiber of `beta` over `b`, where
/// `MM(b)` is the fiber's maximum in the weak order. Fails if the fiber is
/// not that interval or its minimum disagrees with [`min_min`].
pub fn fiber_interval(n: usize, b: &BiLeveledTree) -> Result<(Permutation, Permutation)> {
    if b.len() != n || n == 0 {
        return Err(Error::Domain(format!("{b} is not in M_{n}")));
    }
    let weak = cached_weak_order(n);
    let fiber: Vec<usize> = (0..weak.len())
        .filter(|&i| &beta(weak.element(i)) == b)
        .collect();
    fiber_interval_in(&weak, b, &fiber)
}

pub(crate) fn fiber_interval_in(
    weak: &FinitePoset<Permutation>,
    b: &BiLeveledTree,
    fiber: &[usize],
) -> Result<(Permutation, Permutation)> {
    let (lo, hi) = weak
        .as_interval(fiber)
        .ok_or_else(|| Error::Certification(format!("fiber of {b} is not an interval")))?;
    let mm = weak.element(lo).clone();
    if mm != min_min(b) {
        return Err(Error::Certification(format!(
            "fiber minimum {mm} of {b} differs from the closed form {}",
            min_min(b)
        )));
    }
    let big = weak.element(hi).clone();
    if !fiber.contains(&weak.index_of(&max_min(b)).expect("section lies in S_n")) {
        return Err(Error::Certification(format!(
            "section of {b} leaves its fiber"
        )));
    }
    Ok((mm, big))
}
