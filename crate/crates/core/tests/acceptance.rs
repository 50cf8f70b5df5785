//! Acceptance criteria, one line each. Runs with `harness = false` so every line
//! is printed; the process exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use cpt_core::autosolve::{compute_septet, Monomial, SEPTET_NAMES};
use cpt_core::catalog::{enumerate_chain, invert_rep_params, mass_gy, mass_tensor, rep_params, ChainScheme, FieldKind, FieldSpec};
use cpt_core::cptgroup::{
    abstract_cpt_table, classify_finite, fingerprint_catalog, generate_group, model_group, monomial_table, mult_table_mod_z2, GroupType,
    SignVector,
};
use cpt_core::exactnum::GaussianRational;
use cpt_core::golden::{format_monomial, GoldenSet};
use cpt_core::lorentzrep::{
    build_gn_rep, build_waerden, split_algebra_checks, split_generators, verify_lorentz_relations, waerden_from_gn, AnyRep,
};
use cpt_core::multivector::{pauli_form, volume_element, volume_inverse, AlgebraSignature, Multivector};
use cpt_core::spinbasis::build_brauer_weyl;

/// Wall-clock limits and case counts fixed by the acceptance criteria.
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(1);
const TENSOR_TIME_LIMIT: Duration = Duration::from_secs(10);
const PROPERTY_CASES: u32 = 1000;
const MAX_PROPERTY_N: usize = 6;
const MAX_LORENTZ_DIM: i64 = 20;
const MAX_WAERDEN_SUM: i64 = 3;
const MAX_ROUND_TRIP: u32 = 12;

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

const FIELDS: [(&str, usize); 3] = [("l=1/2", 2), ("l=1", 3), ("l=3/2", 4)];

/// Compares the first-principles table of field `idx` against its reference copy.
fn table_check(golden: &GoldenSet, idx: usize) -> (usize, Vec<String>, Duration) {
    let (field, m) = FIELDS[idx];
    let start = Instant::now();
    let g = build_brauer_weyl(m).expect("basis");
    let septet = compute_septet(&g).expect("septet");
    let table = monomial_table(&septet);
    let elapsed = start.elapsed();
    let want = &golden.tables[idx].cells;
    let mut bad = Vec::new();
    for r in 0..8 {
        for c in 0..8 {
            if table[r][c] != want[r][c] {
                bad.push(format!(
                    "{field} ({},{}): printed {} computed {}",
                    r,
                    c,
                    format_monomial(want[r][c], m),
                    format_monomial(table[r][c], m)
                ));
            }
        }
    }
    (64 - bad.len(), bad, elapsed)
}

fn summarize(bad: &[String]) -> String {
    match bad.len() {
        0 => String::new(),
        n if n <= 3 => format!("; {}", bad.join("; ")),
        n => format!("; {} (+{} more)", bad[..3].join("; "), n - 3),
    }
}

fn criterion_1(golden: &GoldenSet) -> Outcome {
    let (ok, bad, t) = table_check(golden, 0);
    Outcome {
        id: 1,
        title: "Tab 4 reproduction (l=1/2, 64 signed cells, < 1 s)",
        pass: ok == 64 && t < TABLE_TIME_LIMIT,
        detail: format!("{ok}/64 cells, {:.3} s{}", t.as_secs_f64(), summarize(&bad)),
    }
}

fn criterion_2(golden: &GoldenSet) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut all_bad = Vec::new();
    for (idx, name) in [(1, "Tab 5"), (2, "Tab 6")] {
        let (ok, bad, t) = table_check(golden, idx);
        pass &= ok == 64 && t < TABLE_TIME_LIMIT;
        parts.push(format!("{name} {ok}/64 cells in {:.3} s", t.as_secs_f64()));
        all_bad.extend(bad);
    }
    Outcome {
        id: 2,
        title: "Tab 5 and Tab 6 reproduction (l=1, l=3/2, bit-exact, < 1 s each)",
        pass,
        detail: format!("{}{}", parts.join(", "), summarize(&all_bad)),
    }
}

fn criterion_3() -> Outcome {
    let expected = ["+,+,+,+,+,-,-", "-,+,+,+,+,-,+", "-,-,+,+,+,+,+"];
    let mut pass = true;
    let mut parts = Vec::new();
    for ((field, m), want) in FIELDS.iter().zip(expected) {
        let g = build_brauer_weyl(*m).expect("basis");
        let group = generate_group(&compute_septet(&g).expect("septet")).expect("group");
        let want = SignVector::parse(want).expect("literal");
        let ok = group.sign_vector == want && group.group_type == GroupType::D4Z2;
        pass &= ok;
        parts.push(format!(
            "{field}: ({}) {}{}",
            group.sign_vector,
            group.group_type,
            if ok { "" } else { " MISMATCH" }
        ));
    }
    Outcome {
        id: 3,
        title: "Sign vectors and D4xZ2 for spins 1/2, 1, 3/2",
        pass,
        detail: parts.join("; "),
    }
}

fn criterion_4() -> Outcome {
    let abs = abstract_cpt_table();
    let xor_ok = (0..8).all(|r| (0..8).all(|c| abs.cell(r, c).label as usize == r ^ c && abs.cell(r, c).sign == 1));
    let golden_ok = GoldenSet::embedded().tab1 == abs.forget_signs();
    let mut images = 0;
    let mut ok = true;
    for m in 2..=6 {
        let g = build_brauer_weyl(m).expect("basis");
        let t = mult_table_mod_z2(&compute_septet(&g).expect("septet")).expect("table");
        ok &= t.forget_signs() == abs.forget_signs() && t.is_well_formed();
        images += 1;
    }
    Outcome {
        id: 4,
        title: "Tab 1/Tab 2 isomorphism: sign-forgotten tables equal the Z2xZ2xZ2 table",
        pass: xor_ok && golden_ok && ok,
        detail: format!("XOR table {xor_ok}, reference Tab 1 {golden_ok}, {images} computed tables (m=2..6) {ok}"),
    }
}

fn criterion_5(golden: &GoldenSet) -> Outcome {
    let mut matched = 0;
    let mut misses = Vec::new();
    let mut erratum_flagged = false;
    for (field, m) in FIELDS {
        let claim = golden.claims.iter().find(|c| c.field == field).expect("claim");
        let s = compute_septet(&build_brauer_weyl(m).expect("basis")).expect("septet");
        let ours = s.monomials();
        for k in 0..7 {
            if ours[k].mask == claim.septet[k].mask {
                matched += 1;
            } else {
                misses.push(format!(
                    "{field} {}: published {} computed {}",
                    SEPTET_NAMES[k],
                    format_monomial(claim.septet[k], m),
                    format_monomial(ours[k], m)
                ));
            }
        }
        for (pos, v) in &claim.variants {
            if v.mask != ours[*pos].mask && *pos == 6 && field == "l=1/2" && ours[6].mask == Monomial::new(1, &[1, 3]).mask {
                erratum_flagged = true;
            }
        }
    }
    Outcome {
        id: 5,
        title: "Septet derivations: 21 published monomials, F=E14 flagged as erratum",
        pass: matched == 21 && erratum_flagged,
        detail: format!(
            "{matched}/21 monomials, E14 variant flagged {erratum_flagged}{}",
            summarize(&misses)
        ),
    }
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let field = FieldSpec::tensor(3, 2);
    let run = || -> cpt_core::Result<(usize, usize, bool, GroupType)> {
        let m = field.generator_m().expect("non-degenerate");
        let g = build_brauer_weyl(m)?;
        let group = generate_group(&compute_septet(&g)?)?;
        Ok((
            g.len(),
            g.dim(),
            group.order() == 16 && group.minus_one_is_central(),
            group.group_type,
        ))
    };
    let res = run();
    let t = start.elapsed();
    match res {
        Ok((n, dim, structural, ty)) => Outcome {
            id: 6,
            title: "Tensor field k=3, r=2: 12 generators, 64x64, order-16 group, < 10 s",
            pass: n == 12 && dim == 64 && structural && GroupType::ALL.contains(&ty) && t < TENSOR_TIME_LIMIT,
            detail: format!(
                "{n} generators, dim {dim}, order 16 with central -1: {structural}, type {ty}, {:.3} s",
                t.as_secs_f64()
            ),
        },
        Err(e) => Outcome {
            id: 6,
            title: "Tensor field k=3, r=2",
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn criterion_7() -> Outcome {
    let catalog = match fingerprint_catalog() {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                id: 7,
                title: "Classification oracle",
                pass: false,
                detail: e.to_string(),
            }
        }
    };
    let distinct = (0..catalog.len()).all(|i| (0..i).all(|j| catalog[i].fingerprint != catalog[j].fingerprint));
    let models: Vec<_> = GroupType::ALL.iter().map(|t| model_group(*t).expect("model")).collect();
    let mut agree = true;
    for (i, a) in GroupType::ALL.iter().enumerate() {
        agree &= classify_finite(&models[i]).ok() == Some(*a);
        for (j, _) in GroupType::ALL.iter().enumerate() {
            agree &= models[i].is_isomorphic(&models[j]) == (i == j);
        }
    }
    Outcome {
        id: 7,
        title: "Classification oracle: five fingerprints distinct, classify agrees with brute-force isomorphism",
        pass: distinct && agree && catalog.len() == 5,
        detail: format!("{} entries, pairwise distinct {distinct}, agreement {agree}", catalog.len()),
    }
}

fn coeff() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3, -3i64..=3).prop_map(|(a, b)| GaussianRational::from_ints(a, b))
}

fn complex_element() -> impl Strategy<Value = Multivector> {
    (1..=MAX_PROPERTY_N).prop_flat_map(|n| {
        proptest::collection::vec((0..(1u32 << n), coeff()), 0..10)
            .prop_map(move |terms| Multivector::from_terms(AlgebraSignature::complex(n).expect("n in range"), terms))
    })
}

fn real_element(odd_only: bool) -> impl Strategy<Value = Multivector> {
    (1..=MAX_PROPERTY_N)
        .prop_filter("odd n", move |n| !odd_only || n % 2 == 1)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, p)| {
            proptest::collection::vec((0..(1u32 << n), -3i64..=3), 0..10).prop_map(move |terms| {
                let sig = AlgebraSignature::real(p, n - p).expect("n in range");
                Multivector::from_terms(sig, terms.into_iter().map(|(m, c)| (m, GaussianRational::from_ints(c, 0))))
            })
        })
}

fn cl30_element() -> impl Strategy<Value = Multivector> {
    proptest::collection::vec(-5i64..=5, 8).prop_map(|c| {
        let sig = AlgebraSignature::real(3, 0).expect("cl(3,0)");
        Multivector::from_terms(
            sig,
            c.into_iter()
                .enumerate()
                .map(|(m, v)| (m as u32, GaussianRational::from_ints(v, 0))),
        )
    })
}

fn check<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> (String, bool)
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config {
        cases: PROPERTY_CASES,
        failure_persistence: None,
        ..Config::default()
    });
    match runner.run(&strategy, test) {
        Ok(()) => (format!("{name} ok"), true),
        Err(e) => {
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").chars().take(120).collect::<String>();
            (format!("{name} FAILED ({first})"), false)
        }
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

fn criterion_8() -> Outcome {
    let mut results = Vec::new();
    results.push(check("involutions", complex_element(), |a| {
        ensure(a.grade_involution().grade_involution() == a, "star")?;
        ensure(a.reversion().reversion() == a, "tilde")?;
        ensure(a.clifford_conjugation().clifford_conjugation() == a, "conjugation")?;
        let p = a.pseudo_conjugation().map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(
            p.pseudo_conjugation().map_err(|e| TestCaseError::fail(e.to_string()))? == a,
            "pseudo",
        )
    }));
    results.push(check(
        "reversion antihomomorphism",
        (complex_element(), complex_element()),
        |(a, b)| {
            let b = Multivector::from_terms(
                a.signature(),
                b.terms()
                    .filter(|(m, _)| *m < (1 << a.signature().n()))
                    .map(|(m, c)| (m, c.clone())),
            );
            let ab = a.geometric_product(&b).map_err(|e| TestCaseError::fail(e.to_string()))?;
            let rhs = b
                .reversion()
                .geometric_product(&a.reversion())
                .map_err(|e| TestCaseError::fail(e.to_string()))?;
            ensure(ab.reversion() == rhs, "reversion(ab) = reversion(b) reversion(a)")
        },
    ));
    results.push(check("star = w a w^-1 (volume-element form) for odd n", real_element(true), |a| {
        let sig = a.signature();
        let conj = volume_element(sig)
            .geometric_product(&a)
            .and_then(|x| x.geometric_product(&volume_inverse(sig)))
            .map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure(a.grade_involution() == conj, "grade involution differs from volume conjugation")
    }));
    results.push(check("star coefficient pattern on cl(3,0)", cl30_element(), |a| {
        let z = pauli_form(&a).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let s = pauli_form(&a.grade_involution()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let zero = GaussianRational::from_ints(0, 0);
        ensure((0..4).all(|j| s[j] == zero.clone() - z[j].conj()), "coefficient pattern -(a - w b)")
    }));
    results.push(check("tilde coefficient pattern on cl(3,0)", cl30_element(), |a| {
        let z = pauli_form(&a).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let s = pauli_form(&a.reversion()).map_err(|e| TestCaseError::fail(e.to_string()))?;
        ensure((0..4).all(|j| s[j] == z[j].conj()), "coefficient pattern (a - w b)")
    }));
    let pass = results.iter().all(|r| r.1);
    Outcome {
        id: 8,
        title: "Multivector properties (1000 cases each, n <= 6)",
        pass,
        detail: results.into_iter().map(|r| r.0).collect::<Vec<_>>().join("; "),
    }
}

fn criterion_9() -> Outcome {
    let mut gn = 0;
    let mut ok = true;
    let mut failures = Vec::new();
    for two_l0 in 0..=2 * MAX_LORENTZ_DIM {
        for p in 1..=MAX_LORENTZ_DIM {
            let l0 = q(two_l0, 2);
            let l1 = &l0 + q(p, 1);
            if &l1 * &l1 - &l0 * &l0 > q(MAX_LORENTZ_DIM, 1) {
                continue;
            }
            for l1s in [l1.clone(), -l1.clone()] {
                let rep = build_gn_rep(&l0, &l1s).expect("finite rep");
                let report = verify_lorentz_relations(AnyRep::GelfandNaimark(&rep)).expect("report");
                let conv = waerden_from_gn(&rep).is_ok();
                gn += 1;
                if !report.all_pass() || !conv {
                    ok = false;
                    failures.push(format!("({l0},{l1s})"));
                }
            }
        }
    }
    let required = [(0, 1, 1, 1), (1, 2, 3, 2), (0, 1, 2, 1), (1, 2, 5, 2), (1, 1, 2, 1)];
    let listed = required.iter().all(|&(a, b, c, d)| {
        build_gn_rep(&q(a, b), &q(c, d))
            .ok()
            .and_then(|r| verify_lorentz_relations(AnyRep::GelfandNaimark(&r)).ok())
            .is_some_and(|rep| rep.all_pass())
    });
    let mut wd = 0;
    for two_l in 0..=2 * MAX_WAERDEN_SUM {
        for two_ld in 0..=2 * MAX_WAERDEN_SUM - two_l {
            let w = build_waerden(&q(two_l, 2), &q(two_ld, 2)).expect("waerden");
            let report = verify_lorentz_relations(AnyRep::Waerden(&w)).expect("report");
            wd += 1;
            if !report.all_pass() {
                ok = false;
                failures.push(format!("waerden ({two_l}/2,{two_ld}/2)"));
            }
        }
    }
    let sl25 = build_gn_rep(&q(1, 2), &q(5, 2))
        .and_then(|r| r.generators())
        .and_then(|g| split_generators(&g))
        .and_then(|s| split_algebra_checks(&s))
        .is_ok_and(|c| c.iter().all(|r| r.holds));
    Outcome {
        id: 9,
        title: "Lorentz commutation relations (generator and split forms) exact for all reps with dim <= 20 and Waerden l+l' <= 3",
        pass: ok && listed && sl25,
        detail: format!(
            "{gn} GN reps, {wd} Waerden reps, listed reps {listed}, split operators {sl25}{}",
            summarize(&failures)
        ),
    }
}

fn criterion_10() -> Outcome {
    let mut round = true;
    for k in 0..=MAX_ROUND_TRIP {
        round &= invert_rep_params(&rep_params(&FieldSpec::chiral(k)), FieldKind::ChiralPair).ok() == Some(FieldSpec::chiral(k));
        for r in 0..=MAX_ROUND_TRIP {
            let f = FieldSpec::tensor(k, r);
            round &= invert_rep_params(&rep_params(&f), FieldKind::TensorPair).ok() == Some(f);
        }
    }
    let gy = [((1, 2), 1, (1, 1)), ((0, 1), 1, (2, 1)), ((1, 1), 3, (2, 1))]
        .iter()
        .all(|&((ln, ld), k, (mn, md))| mass_gy(&q(ln, ld), &q(k, 1)).ok() == Some(q(mn, md)));
    let tensor = [(1, 0, 1, (1, 2), (1, 2)), (1, 1, 4, (1, 1), (0, 1)), (3, 2, 12, (1, 1), (1, 2))]
        .iter()
        .all(|&(k, r, kappa, (mn, md), (sn, sd))| mass_tensor(k, r, &q(kappa, 1)).ok() == Some((q(mn, md), q(sn, sd))));
    let dims = |s, d| {
        enumerate_chain(s, d)
            .map(|v| v.iter().map(|e| e.dim).collect::<Vec<_>>())
            .unwrap_or_default()
    };
    let chains = dims(ChainScheme::BoseDiagonal, 3) == [1, 4, 16] && dims(ChainScheme::FermiDiagonal, 2) == [2, 8];
    Outcome {
        id: 10,
        title: "Catalog: rep_params round trip k, r <= 12, mass formulas, chains 1->4->16 and 2->8",
        pass: round && gy && tensor && chains,
        detail: format!("round trip {round}, Gel'fand-Yaglom masses {gy}, tensor masses {tensor}, chains {chains}"),
    }
}

fn main() {
    let golden = GoldenSet::embedded();
    let outcomes = [
        criterion_1(&golden),
        criterion_2(&golden),
        criterion_3(),
        criterion_4(),
        criterion_5(&golden),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    for o in &outcomes {
        println!(
            "criterion {:>2} [{}] {}: {}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.title,
            o.detail
        );
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!("acceptance: {}/{} criteria pass", outcomes.len() - failed.len(), outcomes.len());
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
