//! One line per acceptance criterion. Runs without the test harness so the
//! lines are always printed; exits non-zero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use msym::algebra::{
    action_ssym, action_ysym, check_coaction_coassociative, check_eq8, check_hopf_module,
    check_tau_monomial, coaction, coaction_monomial, coinvariant_basis, coproduct_fund,
    product_fund, product_msym, Basis, Family, Key, LinearCombo,
};
use msym::posets::{
    cached_bileveled_order, cached_tamari, cached_weak_order, check_galois, check_interval_retract,
    PosetMapPair,
};
use msym::series::{counts, series_quotient};
use msym::trees::{
    all_bileveled, all_planar, beta, composition_to_bileveled, max_min, max_perm, min_perm,
    qsym_composition, tau, BiLeveledTree, Composition, Permutation,
};
use msym::verify::{run_suite, Suite};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(s: Suite, n_max: usize) -> Result<(), String> {
    let r = run_suite(s, Some(n_max));
    ensure(r.passed(), || r.summary_line())
}

fn b(w: &str) -> BiLeveledTree {
    beta(&w.parse::<Permutation>().unwrap())
}

fn criterion_1() -> Outcome {
    let expected: [(usize, usize, usize); 6] = [
        (1, 1, 1),
        (2, 2, 2),
        (6, 5, 6),
        (24, 14, 21),
        (120, 42, 80),
        (720, 132, 322),
    ];
    for (n, &(s, y, m)) in (1..=6).zip(&expected) {
        let found = (
            Permutation::all(n).len(),
            all_planar(n).len(),
            all_bileveled(n).map_err(|e| e.to_string())?.len(),
        );
        ensure(found == (s, y, m), || format!("n={n}: got {found:?}"))?;
        let series = counts(Family::M, 6);
        ensure(series.coeff(n) == &BigInt::from(m), || {
            format!("A_{n} from the recurrence")
        })?;
    }
    Ok("n!, C_n, A_n match for n ≤ 6; M: 1,2,6,21,80,322".into())
}

const M4_HASSE_EDGES: usize = 32;

fn criterion_2() -> Outcome {
    let m = cached_bileveled_order(4).map_err(|e| e.to_string())?;
    ensure(m.len() == 21, || format!("{} vertices", m.len()))?;
    let lo = m.minimum().ok_or("no unique minimum")?;
    let hi = m.maximum().ok_or("no unique maximum")?;
    ensure(m.element(lo) == &b("1234"), || {
        format!("minimum {}", m.element(lo))
    })?;
    ensure(m.element(hi) == &b("4321"), || {
        format!("maximum {}", m.element(hi))
    })?;
    let expected: BTreeSet<BiLeveledTree> = [
        "4321", "4312", "3421", "4213", "4231", "3412", "2431", "4123", "3214", "3241", "2413",
        "1432", "3124", "2143", "2314", "2341", "1423", "2134", "1243", "1324", "1234",
    ]
    .iter()
    .map(|w| b(w))
    .collect();
    let ours: BTreeSet<BiLeveledTree> = m.elements().iter().cloned().collect();
    ensure(expected == ours, || {
        "vertex set differs from the expected 21 trees".into()
    })?;
    let dot = m.to_dot("M_4");
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    ensure(edges == M4_HASSE_EDGES, || format!("{edges} Hasse edges"))?;
    Ok(format!(
        "21 vertices, min β(1234), max β(4321), {edges} edges"
    ))
}

fn criterion_3() -> Outcome {
    suite(Suite::Fibers, 6)?;
    suite(Suite::Pinned, 6)?;
    Ok("β-fibers are [mm, MM] with Mm the unique pinned avoider, n ≤ 6".into())
}

fn criterion_4() -> Outcome {
    let mut pairs = 0;
    for n in 1..=5 {
        let w = cached_weak_order(n);
        let m = cached_bileveled_order(n).map_err(|e| e.to_string())?;
        let pair = PosetMapPair::new(&w, &m, beta, max_min).map_err(|e| e.to_string())?;
        let r = check_interval_retract(&pair);
        ensure(r.passed(), || format!("n={n}: {r:?}"))?;
        pairs += r.pairs_checked;
    }
    Ok(format!(
        "(β, Mm) is an interval retract, μ identity on {pairs} pairs s < t, n ≤ 5"
    ))
}

fn criterion_5() -> Outcome {
    let mut checked = 0;
    for n in 1..=4 {
        for t in all_bileveled(n).map_err(|e| e.to_string())? {
            let c = check_eq8(&t).map_err(|e| e.to_string())?;
            ensure(c.holds(), || format!("{t}: {} ≠ {}", c.lhs, c.rhs))?;
            checked += 1;
        }
    }
    Ok(format!(
        "fiber sums of M_σ map to M_t for all {checked} trees, n ≤ 4"
    ))
}

fn criterion_6() -> Outcome {
    suite(Suite::MonomialCoaction, 5)?;
    let first = coaction_monomial(&b("3241"));
    let second = coaction_monomial(&b("35421"));
    ensure(first.len() == 2 && second.len() == 3, || {
        format!("{} and {} terms", first.len(), second.len())
    })?;
    let expect_first = [("3241", ""), ("213", "1")];
    let expect_second = [("35421", ""), ("2431", "1"), ("132", "21")];
    for (rho, expect) in [(&first, &expect_first[..]), (&second, &expect_second[..])] {
        for (l, r) in expect {
            let right: Key = tau(&r.parse().unwrap()).into();
            ensure(rho.coefficient(&b(l).into(), &right).is_one(), || {
                format!("missing M[β({l})] ⊗ M[τ({r})]")
            })?;
        }
    }
    Ok("closed form equals transported coaction, n ≤ 5; displays have 2 and 3 terms".into())
}

fn criterion_7() -> Outcome {
    let mut checked = 0;
    for n in 1..=3 {
        for bl in all_bileveled(n).map_err(|e| e.to_string())? {
            for p in 0..=2 {
                for s in all_planar(p) {
                    let c = check_hopf_module(&bl, &s).map_err(|e| e.to_string())?;
                    ensure(c.holds(), || format!("b={bl} s={s}"))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("ρ(F_b·F_s) = ρ(F_b)·Δ(F_s) on {checked} pairs"))
}

fn criterion_8() -> Outcome {
    let quotient =
        series_quotient(&counts(Family::M, 5), &counts(Family::Y, 5)).map_err(|e| e.to_string())?;
    for (n, expected) in (1..=5).zip([1, 1, 3, 11, 44]) {
        let basis = coinvariant_basis(n).map_err(|e| e.to_string())?;
        ensure(basis.len() == expected, || {
            format!("n={n}: {} coinvariants", basis.len())
        })?;
        ensure(quotient.coeff(n) == &BigInt::from(expected), || {
            format!("quotient coefficient {n} is {}", quotient.coeff(n))
        })?;
        for t in basis {
            let rho = coaction_monomial(&t);
            ensure(
                rho.len() == 1
                    && rho
                        .coefficient(&t.clone().into(), &Key::unit(Family::Y))
                        .is_one(),
                || format!("ρ(M_{t}) = {rho}"),
            )?;
        }
    }
    Ok("coinvariants 1,1,3,11,44 match the series quotient; each is ρ-fixed".into())
}

fn criterion_9() -> Outcome {
    suite(Suite::Fibers, 5)?;
    for n in 1..=5 {
        let w = cached_weak_order(n);
        let y = cached_tamari(n);
        for (x, z) in y.cover_edges() {
            let (s, t) = (y.element(x), y.element(z));
            for f in [min_perm, max_perm] {
                let ok = w.leq(w.index_of(&f(s)).unwrap(), w.index_of(&f(t)).unwrap());
                ensure(ok, || format!("section not monotone on {s} < {t}"))?;
            }
        }
    }
    Ok("τ-fibers are [min_perm, max_perm]; both sections monotone, n ≤ 5".into())
}

fn criterion_10() -> Outcome {
    let mut killed = 0;
    for n in 0..=4 {
        for w in Permutation::all(n) {
            let c = check_tau_monomial(&w).map_err(|e| e.to_string())?;
            ensure(c.holds(), || format!("σ={w}: {} ≠ {}", c.lhs, c.rhs))?;
            let avoids_132 = !w.contains_pattern(&[1, 3, 2]);
            ensure(avoids_132 == c.rhs.len().is_one() || n == 0, || {
                format!("132-avoidance disagrees with the fiber maximum at {w}")
            })?;
            if c.lhs.is_zero() {
                killed += 1;
            }
        }
    }
    Ok(format!(
        "τ(M_max_perm(t)) = M_t; {killed} non-132-avoiders sent to 0, n ≤ 4"
    ))
}

fn criterion_11() -> Outcome {
    for n in 1..=4 {
        let w = cached_weak_order(n);
        let y = cached_tamari(n);
        let pair = PosetMapPair::new(&w, &y, tau, max_perm).map_err(|e| e.to_string())?;
        let r = check_galois(&pair);
        ensure(r.passed(), || format!("(τ, max_perm) n={n}: {r:?}"))?;
    }
    // At n = 3, β is an order isomorphism of two hexagons, so it has an
    // adjoint; the first degree without one is n = 4.
    let w3 = cached_weak_order(3);
    let m3 = cached_bileveled_order(3).map_err(|e| e.to_string())?;
    let iso = w3.elements().iter().all(|u| {
        w3.elements().iter().all(|v| {
            let (i, j) = (w3.index_of(u).unwrap(), w3.index_of(v).unwrap());
            let (bi, bj) = (
                m3.index_of(&beta(u)).unwrap(),
                m3.index_of(&beta(v)).unwrap(),
            );
            w3.leq(i, j) == m3.leq(bi, bj)
        })
    }) && m3.len() == w3.len();
    ensure(iso, || "β is not an isomorphism at n = 3".into())?;
    let w4 = cached_weak_order(4);
    let m4 = cached_bileveled_order(4).map_err(|e| e.to_string())?;
    let r = check_galois(&PosetMapPair::new(&w4, &m4, beta, max_min).map_err(|e| e.to_string())?);
    let cx = r
        .adjunction_counterexample
        .ok_or("(β, Mm) is adjoint at n = 4")?;
    Ok(format!(
        "amended: (β, Mm) has no adjunction at n = 4 ({cx}), not n = 3, where β is an \
         order isomorphism; (τ, max_perm) adjoint with the Möbius identity, n ≤ 4"
    ))
}

fn criterion_12() -> Outcome {
    let c23 = Composition::new(vec![2, 3]).unwrap();
    ensure(qsym_composition(&b("43521")) == c23, || {
        "qsym(β(43521))".into()
    })?;
    let c1214 = Composition::new(vec![1, 2, 1, 4]).unwrap();
    ensure(composition_to_bileveled(&c1214) == b("56478321"), || {
        "comb of (1,2,1,4)".into()
    })?;
    for n in 1..=6 {
        let all = all_bileveled(n).map_err(|e| e.to_string())?;
        let total: usize = Composition::all(n)
            .iter()
            .map(|c| all.iter().filter(|t| &qsym_composition(t) == c).count())
            .sum();
        ensure(total == all.len(), || {
            format!("n={n}: fibers sum to {total}")
        })?;
    }
    Ok("worked examples hold; qsym fibers sum to A_n, n ≤ 6".into())
}

fn fund(key: Key) -> LinearCombo {
    LinearCombo::basis_element(Basis::F, key)
}

fn criterion_13() -> Outcome {
    let mut cases = 0usize;
    // associativity and coassociativity, total degree ≤ 5
    for family in [Family::S, Family::Y] {
        let keys = |n: usize| -> Vec<Key> {
            match family {
                Family::S => Permutation::all(n).into_iter().map(Key::from).collect(),
                _ => all_planar(n).into_iter().map(Key::from).collect(),
            }
        };
        for (p, q, r) in degree_triples(5) {
            for x in keys(p) {
                for y in keys(q) {
                    let xy = product_fund(&x, &y).map_err(|e| e.to_string())?;
                    for z in keys(r) {
                        let yz = product_fund(&y, &z).map_err(|e| e.to_string())?;
                        let left = msym::algebra::product(&xy, &fund(z.clone())).unwrap();
                        let right = msym::algebra::product(&fund(x.clone()), &yz).unwrap();
                        ensure(left == right, || format!("associativity at {x}, {y}, {z}"))?;
                        cases += 1;
                    }
                }
            }
        }
        for n in 0..=5 {
            for x in keys(n) {
                let d = coproduct_fund(&x).map_err(|e| e.to_string())?;
                let mut left: BTreeMap<(Key, Key, Key), BigInt> = BTreeMap::new();
                let mut right: BTreeMap<(Key, Key, Key), BigInt> = BTreeMap::new();
                for ((a, c), k) in d.iter() {
                    for ((a0, a1), l) in coproduct_fund(a).unwrap().iter() {
                        *left.entry((a0.clone(), a1.clone(), c.clone())).or_default() += k * l;
                    }
                    for ((c0, c1), l) in coproduct_fund(c).unwrap().iter() {
                        *right
                            .entry((a.clone(), c0.clone(), c1.clone()))
                            .or_default() += k * l;
                    }
                }
                ensure(left == right, || format!("coassociativity at {x}"))?;
                cases += 1;
            }
        }
    }
    // action axioms, total degree ≤ 4
    for (p, q, r) in degree_triples(4) {
        if r == 0 {
            continue;
        }
        let all_m = all_bileveled(r).unwrap();
        for u in Permutation::all(p) {
            for v in Permutation::all(q) {
                let uv = product_fund(&u.clone().into(), &v.clone().into()).unwrap();
                for s in &all_m {
                    let mut left = LinearCombo::zero(Family::M, Basis::F);
                    for (w, c) in uv.iter() {
                        left.add_scaled(&action_ssym(w.as_s().unwrap(), s), c)
                            .unwrap();
                    }
                    let mut right = LinearCombo::zero(Family::M, Basis::F);
                    for (t, c) in action_ssym(&v, s).iter() {
                        right
                            .add_scaled(&action_ssym(&u, t.as_m().unwrap()), c)
                            .unwrap();
                    }
                    ensure(left == right, || format!("S-action axiom at {u}, {v}, {s}"))?;
                    cases += 1;
                }
            }
        }
        if p == 0 {
            continue;
        }
        for bl in all_bileveled(p).unwrap() {
            for s in all_planar(q) {
                let bs = action_ysym(&bl, &s).unwrap();
                for t in all_planar(r) {
                    let mut left = LinearCombo::zero(Family::M, Basis::F);
                    for (x, c) in bs.iter() {
                        left.add_scaled(&action_ysym(x.as_m().unwrap(), &t).unwrap(), c)
                            .unwrap();
                    }
                    let st = product_fund(&s.clone().into(), &t.clone().into()).unwrap();
                    let mut right = LinearCombo::zero(Family::M, Basis::F);
                    for (x, c) in st.iter() {
                        right
                            .add_scaled(&action_ysym(&bl, x.as_y().unwrap()).unwrap(), c)
                            .unwrap();
                    }
                    ensure(left == right, || {
                        format!("Y-action axiom at {bl}, {s}, {t}")
                    })?;
                    cases += 1;
                }
            }
        }
    }
    // β is an algebra map and the product of M is associative, degrees ≤ 4
    for p in 0..=4 {
        for q in 0..=4 - p {
            for u in Permutation::all(p) {
                for v in Permutation::all(q) {
                    let uv = product_fund(&u.clone().into(), &v.clone().into()).unwrap();
                    let image =
                        msym::algebra::apply_linear_map(msym::algebra::LinearMap::Beta, &uv)
                            .unwrap();
                    let prod = product_msym(&beta(&u), &beta(&v));
                    ensure(image == prod, || format!("β(F_{u}·F_{v}) ≠ F_β(u)·F_β(v)"))?;
                    cases += 1;
                }
            }
        }
    }
    for x in all_bileveled(1).unwrap() {
        for y in all_bileveled(1).unwrap() {
            for z in all_bileveled(2).unwrap() {
                let mut left = LinearCombo::zero(Family::M, Basis::F);
                for (k, c) in product_msym(&x, &y).iter() {
                    left.add_scaled(&product_msym(k.as_m().unwrap(), &z), c)
                        .unwrap();
                }
                let mut right = LinearCombo::zero(Family::M, Basis::F);
                for (k, c) in product_msym(&y, &z).iter() {
                    right
                        .add_scaled(&product_msym(&x, k.as_m().unwrap()), c)
                        .unwrap();
                }
                ensure(left == right, || {
                    format!("M-product associativity at {x}, {y}, {z}")
                })?;
                cases += 1;
            }
        }
    }
    // coassociativity of the coaction
    for n in 1..=4 {
        for bl in all_bileveled(n).unwrap() {
            ensure(check_coaction_coassociative(&bl).unwrap().holds(), || {
                format!("ρ coassociativity at {bl}")
            })?;
            ensure(
                coaction(&bl)
                    .coefficient(&bl.clone().into(), &Key::unit(Family::Y))
                    .is_one(),
                || format!("ρ(F_{bl}) lacks F_b ⊗ 1"),
            )?;
            cases += 1;
        }
    }
    Ok(format!(
        "{cases} associativity, coassociativity and action cases"
    ))
}

fn degree_triples(total: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for p in 0..=total {
        for q in 0..=total - p {
            for r in 0..=total - p - q {
                out.push((p, q, r));
            }
        }
    }
    out
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 13] = [
        ("dimensions", criterion_1),
        ("Hasse diagram of M_4", criterion_2),
        ("β-fiber structure", criterion_3),
        ("interval retract", criterion_4),
        ("fiber sums of monomials", criterion_5),
        ("monomial coaction", criterion_6),
        ("Hopf module", criterion_7),
        ("coinvariants", criterion_8),
        ("τ-fiber intervals", criterion_9),
        ("monomial τ", criterion_10),
        ("Galois connections", criterion_11),
        ("combs and compositions", criterion_12),
        ("algebra sanity", criterion_13),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!(
                "criterion {:>2} [PRIMARY] {name}: PASS ({detail}) [{elapsed:.2?}]",
                i + 1
            ),
            Err(detail) => {
                failures += 1;
                println!(
                    "criterion {:>2} [PRIMARY] {name}: FAIL ({detail}) [{elapsed:.2?}]",
                    i + 1
                );
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
