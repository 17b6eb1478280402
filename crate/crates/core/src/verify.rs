//! Exhaustive verification suites over all objects up to a degree bound.
//! Each suite stops at its first counterexample.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{check_eq8, check_hopf_module, check_monomial_coaction, check_tau_monomial};
use crate::error::{Error, Result};
use crate::posets::{
    cached_bileveled_order, cached_tamari, cached_weak_order, check_galois, check_interval_retract,
    tamari, tamari_by_min_perm, PosetMapPair,
};
use crate::series::check_dimension_identities;
use crate::trees::{
    all_bileveled, all_planar, avoids_pinned, beta, max_min, max_perm, min_perm, tau, tau_fiber,
    Permutation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    HopfModule,
    MonomialCoaction,
    FiberSums,
    IntervalRetract,
    Galois,
    TamariOracle,
    Fibers,
    Dimensions,
    Pinned,
    TauMonomial,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::HopfModule,
        Suite::MonomialCoaction,
        Suite::FiberSums,
        Suite::IntervalRetract,
        Suite::Galois,
        Suite::TamariOracle,
        Suite::Fibers,
        Suite::Dimensions,
        Suite::Pinned,
        Suite::TauMonomial,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::HopfModule => "hopf-module",
            Suite::MonomialCoaction => "thm3",
            Suite::FiberSums => "eq8",
            Suite::IntervalRetract => "interval-retract",
            Suite::Galois => "galois",
            Suite::TamariOracle => "tamari-oracle",
            Suite::Fibers => "fibers",
            Suite::Dimensions => "dimensions",
            Suite::Pinned => "pinned",
            Suite::TauMonomial => "tau-monomial",
        }
    }

    /// The bound used when none is given.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::HopfModule => 3,
            Suite::MonomialCoaction => 5,
            Suite::FiberSums => 4,
            Suite::IntervalRetract => 5,
            Suite::Galois => 4,
            Suite::TamariOracle => 5,
            Suite::Fibers => 6,
            Suite::Dimensions => 6,
            Suite::Pinned => 6,
            Suite::TauMonomial => 4,
        }
    }

    pub fn run(self, n_max: usize) -> SuiteReport {
        let mut report = SuiteReport {
            suite: self,
            n_max,
            checked: 0,
            counterexample: None,
            notes: Vec::new(),
        };
        let outcome = match self {
            Suite::HopfModule => hopf_module(n_max, &mut report),
            Suite::MonomialCoaction => monomial_coaction(n_max, &mut report),
            Suite::FiberSums => fiber_sums(n_max, &mut report),
            Suite::IntervalRetract => interval_retract(n_max, &mut report),
            Suite::Galois => galois(n_max, &mut report),
            Suite::TamariOracle => tamari_oracle(n_max, &mut report),
            Suite::Fibers => fibers(n_max, &mut report),
            Suite::Dimensions => dimensions(n_max, &mut report),
            Suite::Pinned => pinned(n_max, &mut report),
            Suite::TauMonomial => tau_monomial(n_max, &mut report),
        };
        if let Err(e) = outcome {
            report.counterexample.get_or_insert_with(|| e.to_string());
        }
        report
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown verification suite"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n_max: usize,
    /// Number of individual cases examined.
    pub checked: usize,
    pub counterexample: Option<String>,
    /// Observations printed alongside the summary.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    /// `suite=<name> n_max=<k> status=pass|fail counterexample=<key>`, with
    /// `none` for a passing suite and the key quoted when it has spaces.
    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "pass" } else { "fail" };
        let cx = match &self.counterexample {
            None => "none".to_string(),
            Some(c) if c.contains(char::is_whitespace) => format!("{c:?}"),
            Some(c) => c.clone(),
        };
        format!(
            "suite={} n_max={} status={status} counterexample={cx}",
            self.suite, self.n_max
        )
    }

    fn fail(&mut self, key: impl fmt::Display) {
        self.counterexample = Some(key.to_string());
    }
}

pub fn run_suite(suite: Suite, n_max: Option<usize>) -> SuiteReport {
    suite.run(n_max.unwrap_or_else(|| suite.default_n_max()))
}

/// Every `b` with `1 ≤ |b| ≤ n_max` against every `s` with `|s| ≤ 2`.
fn hopf_module(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        for b in all_bileveled(n)? {
            for p in 0..=2 {
                for s in all_planar(p) {
                    r.checked += 1;
                    if !check_hopf_module(&b, &s)?.holds() {
                        r.fail(format!("{b} {s}"));
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn monomial_coaction(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        for b in all_bileveled(n)? {
            r.checked += 1;
            if !check_monomial_coaction(&b)?.holds() {
                r.fail(&b);
                return Ok(());
            }
        }
    }
    Ok(())
}

fn fiber_sums(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        for t in all_bileveled(n)? {
            r.checked += 1;
            if !check_eq8(&t)?.holds() {
                r.fail(&t);
                return Ok(());
            }
        }
    }
    Ok(())
}

fn tau_monomial(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 0..=n_max {
        for w in Permutation::all(n) {
            r.checked += 1;
            if !check_tau_monomial(&w)?.holds() {
                r.fail(&w);
                return Ok(());
            }
        }
    }
    Ok(())
}

fn interval_retract(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        let w = cached_weak_order(n);
        let m = cached_bileveled_order(n)?;
        let report = check_interval_retract(&PosetMapPair::new(&w, &m, beta, max_min)?);
        r.checked += report.pairs_checked;
        if !report.passed() {
            r.fail(report.counterexample().unwrap_or("retract clauses"));
            return Ok(());
        }
    }
    Ok(())
}

/// `(tau, max_perm)` must be a Galois connection satisfying the Möbius
/// identity; for `(beta, Mm)` the first degree without an adjunction is noted.
fn galois(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        let w = cached_weak_order(n);
        let y = cached_tamari(n);
        let report = check_galois(&PosetMapPair::new(&w, &y, tau, max_perm)?);
        r.checked += w.len() * y.len();
        if !report.passed() {
            r.fail(report.counterexample().unwrap_or("monotonicity"));
            return Ok(());
        }
    }
    for n in 1..=n_max {
        let w = cached_weak_order(n);
        let m = cached_bileveled_order(n)?;
        let report = check_galois(&PosetMapPair::new(&w, &m, beta, max_min)?);
        if let Some(cx) = &report.adjunction_counterexample {
            r.notes
                .push(format!("(beta, Mm) has no adjunction at n={n}: {cx}"));
            return Ok(());
        }
    }
    r.notes
        .push(format!("(beta, Mm) is adjoint for every n ≤ {n_max}"));
    Ok(())
}

fn tamari_oracle(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 0..=n_max {
        r.checked += 1;
        if tamari(n).cover_edges() != tamari_by_min_perm(n).cover_edges() {
            r.fail(format!("Y_{n}"));
            return Ok(());
        }
    }
    Ok(())
}

/// Fibers of `beta` and of `tau` are weak-order intervals with the expected
/// endpoints and sections, and the sections of `tau` are order-preserving.
fn fibers(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        let weak = cached_weak_order(n);
        let bileveled = all_bileveled(n)?;
        let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); bileveled.len()];
        for (i, w) in weak.elements().iter().enumerate() {
            let b = beta(w);
            let slot = bileveled.binary_search(&b).map_err(|_| {
                Error::Certification(format!("beta({w}) = {b} is not in the enumeration"))
            })?;
            fibers[slot].push(i);
        }
        for (b, fiber) in bileveled.iter().zip(&fibers) {
            r.checked += 1;
            if fiber.is_empty() {
                r.fail(b);
                return Ok(());
            }
            crate::posets::certify::fiber_interval_in(&weak, b, fiber)?;
            let avoiders: Vec<&Permutation> = fiber
                .iter()
                .map(|&i| weak.element(i))
                .filter(|w| avoids_pinned(w))
                .collect();
            if avoiders != [&max_min(b)] {
                r.fail(b);
                return Ok(());
            }
        }
        let tam = cached_tamari(n);
        for t in tam.elements() {
            r.checked += 1;
            let fiber: Vec<usize> = tau_fiber(t)
                .iter()
                .map(|w| weak.index_of(w).expect("fiber lies in S_n"))
                .collect();
            let lo = weak.index_of(&min_perm(t)).expect("in S_n");
            let hi = weak.index_of(&max_perm(t)).expect("in S_n");
            if weak.as_interval(&fiber) != Some((lo, hi)) {
                r.fail(t);
                return Ok(());
            }
        }
        for (x, y) in tam.cover_edges() {
            let (s, t) = (tam.element(x), tam.element(y));
            let ok = weak.leq(
                weak.index_of(&min_perm(s)).expect("in S_n"),
                weak.index_of(&min_perm(t)).expect("in S_n"),
            ) && weak.leq(
                weak.index_of(&max_perm(s)).expect("in S_n"),
                weak.index_of(&max_perm(t)).expect("in S_n"),
            );
            if !ok {
                r.fail(format!("{s} {t}"));
                return Ok(());
            }
        }
    }
    Ok(())
}

fn dimensions(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    let report = check_dimension_identities(n_max);
    r.checked += n_max + 1;
    if let Some(first) = report.discrepancies.first() {
        r.fail(first);
    }
    Ok(())
}

/// A permutation avoids the pinned patterns exactly when it is the section
/// `Mm` of its own `beta`-image.
fn pinned(n_max: usize, r: &mut SuiteReport) -> Result<()> {
    for n in 1..=n_max {
        for w in Permutation::all(n) {
            r.checked += 1;
            if avoids_pinned(&w) != (max_min(&beta(&w)) == w) {
                r.fail(&w);
                return Ok(());
            }
        }
    }
    Ok(())
}
