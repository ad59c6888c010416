//! End-to-end acceptance suite. Each test covers one acceptance criterion
//! and prints a single pass/fail line; run with `--nocapture` to see them.

use std::collections::BTreeMap;

use schurpp_core::algebra::{PolyMatrix, Polynomial, TruncatedSeries, Var};
use schurpp_core::identities::{
    check_det_vanishing, check_lemma1, check_lemma2, check_littlewood, check_theorem1,
    check_theorem2, check_theorem3, check_theorem4, check_weyl_bn, DetVanishing, IdentityError,
    IdentityResult, LittlewoodFormula, WeylVariant,
};
use schurpp_core::planepart::{
    enumerate_pp, gf_enumerate, orbits, product_gf, specialize_schur_sum, Constraint,
    EnumerationCaps, PPClass, ProductKind, SpecializationRule, WeightRule,
};
use schurpp_core::schur::{
    f_poly, partitions_in_box, schur_bialternant, schur_ssyt, PartitionFilter,
};

fn report(criterion: &str, ok: bool) {
    println!("[{}] {criterion}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "acceptance criterion failed: {criterion}");
}

fn all_hold(results: &[IdentityResult]) -> bool {
    results.iter().all(|r| {
        if !r.holds {
            eprintln!(
                "  falsified: {} {} witness {:?}",
                r.identity,
                r.params_string(),
                r.witness_monomial
            );
        }
        r.holds
    })
}

fn qpoly(exps: &[u32]) -> Polynomial {
    exps.iter()
        .fold(Polynomial::zero(), |acc, &e| &acc + &Polynomial::qpow(e))
}

#[test]
fn criterion_01_unrestricted_sum_grid() {
    let mut runs = Vec::new();
    for n in 1..=3usize {
        for m in 0..=4u32 {
            runs.push(check_theorem1(m, n).unwrap());
        }
    }
    report("01 unrestricted boxed Schur sum, n=1..3 m=0..4", all_hold(&runs));
}

#[test]
fn criterion_02_even_parts_sum_grid() {
    let mut runs = Vec::new();
    for m in [2u32, 4] {
        for n in 1..=3usize {
            runs.push(check_theorem2(m, n).unwrap());
        }
    }
    report(
        "02 even-parts boxed sum (cleared + quotient forms), m=2,4 n=1..3",
        all_hold(&runs),
    );
}

#[test]
fn criterion_03_even_conjugate_sum_grid() {
    let mut runs = Vec::new();
    for m in 0..=3u32 {
        runs.push(check_theorem3(m, 2).unwrap());
    }
    for m in [1u32, 2] {
        runs.push(check_theorem3(m, 4).unwrap());
    }
    report(
        "03 even-conjugate boxed sum, n=2 m=0..3 and n=4 m=1..2",
        all_hold(&runs),
    );
}

#[test]
fn criterion_04_weighted_sum_series() {
    let bound = 6;
    let mut runs = Vec::new();
    for n in 1..=3usize {
        runs.push(check_theorem4(n, bound).unwrap());
    }

    // n = 1 base case: the sum collapses to the single-variable product
    // 1/((1-t x1)(1-v x1)), checked directly against the geometric expansion.
    let mut lhs = Polynomial::zero();
    for lambda in partitions_in_box(bound, 1, PartitionFilter::All) {
        lhs += &(&f_poly(&lambda) * &schur_bialternant(&lambda, 1).unwrap());
    }
    let tx = &Polynomial::var(Var::T) * &Polynomial::x(1);
    let vx = &Polynomial::var(Var::V) * &Polynomial::x(1);
    let rhs = TruncatedSeries::geometric_expand(&tx, bound)
        .unwrap()
        .mul(&TruncatedSeries::geometric_expand(&vx, bound).unwrap());
    let base_ok = &TruncatedSeries::new(lhs, bound) == &rhs;

    report(
        "04 weighted Schur sum as series, n=1..3 D=6 (incl. n=1 base case)",
        all_hold(&runs) && base_ok,
    );
}

#[test]
fn criterion_05_littlewood_products() {
    let mut runs = Vec::new();
    for which in [
        LittlewoodFormula::Unrestricted,
        LittlewoodFormula::EvenParts,
        LittlewoodFormula::EvenConjugate,
    ] {
        for n in 1..=3usize {
            runs.push(check_littlewood(n, 6, which).unwrap());
        }
    }
    report("05 Littlewood product formulas, all three, n=1..3 D=6", all_hold(&runs));
}

#[test]
fn criterion_06_partial_fraction_lemmas() {
    let mut runs = Vec::new();
    for n in 1..=5usize {
        runs.push(check_lemma1(n).unwrap());
    }
    for n in [2usize, 4, 6] {
        runs.push(check_lemma2(n).unwrap());
    }
    report(
        "06 partial-fraction lemmas: single sum n=1..5, double sum n=2,4,6",
        all_hold(&runs),
    );
}

#[test]
fn criterion_07_vanishing_sums() {
    let mut runs = Vec::new();
    for which in [DetVanishing::Thm2, DetVanishing::Thm3] {
        for n in [2usize, 3] {
            for m in [1u32, 2, 4] {
                runs.push(check_det_vanishing(m, n, which).unwrap());
            }
        }
    }
    report("07 vanishing signed sums, both kinds, n=2,3 m=1,2,4", all_hold(&runs));
}

#[test]
fn criterion_08_weyl_type_b() {
    let mut runs = Vec::new();
    for variant in [WeylVariant::Minus, WeylVariant::Plus, WeylVariant::EvenSubsets] {
        for n in 1..=3usize {
            runs.push(check_weyl_bn(n, variant).unwrap());
        }
    }
    report("08 type-B denominator identities, all variants, n=1..3", all_hold(&runs));
}

#[test]
fn criterion_09_schur_oracle_equivalence() {
    let lambdas = partitions_in_box(4, 3, PartitionFilter::All);
    let count_ok = lambdas.len() == 35;
    let all_equal = lambdas
        .iter()
        .all(|l| schur_ssyt(l, 3) == schur_bialternant(l, 3).unwrap());
    report(
        "09 tableau sum = alternant quotient for all shapes in the 3x4 box (35)",
        count_ok && all_equal,
    );
}

#[test]
fn criterion_10_gf_equality_chains() {
    let caps = EnumerationCaps::default();
    let mut ok = true;
    let mut check = |label: &str, a: &Polynomial, b: &Polynomial| {
        if a != b {
            eprintln!("  mismatch [{label}]: {a} vs {b}");
            ok = false;
        }
    };

    // size- and orbit-weighted symmetric chains, n,m <= 3
    for n in 1..=3usize {
        for m in 1..=3u32 {
            let sym = PPClass::symmetric_box(n, m, &[]);
            let by_size = gf_enumerate(&sym, WeightRule::Size, caps).unwrap();
            check(
                "sym size = specialization",
                &by_size,
                &specialize_schur_sum(m, n, PartitionFilter::All, SpecializationRule::SymWeight)
                    .unwrap(),
            );
            check(
                "sym size = product",
                &by_size,
                &product_gf(ProductKind::MacMahonSym, n, m).unwrap(),
            );
            let by_orbit = gf_enumerate(&sym, WeightRule::OrbitCount, caps).unwrap();
            check(
                "sym orbit = specialization",
                &by_orbit,
                &specialize_schur_sum(m, n, PartitionFilter::All, SpecializationRule::OrbitWeight)
                    .unwrap(),
            );
            check(
                "sym orbit = product",
                &by_orbit,
                &product_gf(ProductKind::OrbitSym, n, m).unwrap(),
            );

            // column-strict chain (rows <= n, cols <= m, heights <= n)
            let strict = PPClass::new(n, m as usize, n as u32, &[Constraint::ColumnStrict]);
            check(
                "column-strict = product",
                &gf_enumerate(&strict, WeightRule::Size, caps).unwrap(),
                &product_gf(ProductKind::BenderKnuth, n, m).unwrap(),
            );
            if m % 2 == 0 {
                let even_rows = PPClass::new(
                    n,
                    m as usize,
                    n as u32,
                    &[Constraint::ColumnStrict, Constraint::AllRowsEvenLength],
                );
                check(
                    "column-strict even rows = product",
                    &gf_enumerate(&even_rows, WeightRule::Size, caps).unwrap(),
                    &product_gf(ProductKind::EvenColumnsThm2Cor, n, m).unwrap(),
                );
            }
        }
    }

    // diagonal-levels-even chain, n even
    for (n, m) in [(2usize, 1u32), (2, 2), (2, 3), (4, 1)] {
        let class = PPClass::symmetric_box(n, m, &[Constraint::DiagonalLevelsEven]);
        let by_enum = gf_enumerate(&class, WeightRule::Size, caps).unwrap();
        check(
            "diag-levels-even = specialization",
            &by_enum,
            &specialize_schur_sum(
                m,
                n,
                PartitionFilter::EvenConjugate,
                SpecializationRule::SymWeight,
            )
            .unwrap(),
        );
        check(
            "diag-levels-even = half-sum product",
            &by_enum,
            &product_gf(ProductKind::Thm3Cor, n, m).unwrap(),
        );
        check(
            "diag-levels-even = subset-sum product",
            &by_enum,
            &product_gf(ProductKind::Thm3SSum, n, m).unwrap(),
        );
    }

    // diagonal-parts-even chain, m even
    for n in 1..=3usize {
        for m in [2u32, 4] {
            let class = PPClass::symmetric_box(n, m, &[Constraint::DiagonalPartsEven]);
            let by_enum = gf_enumerate(&class, WeightRule::Size, caps).unwrap();
            check(
                "diag-parts-even = specialization",
                &by_enum,
                &specialize_schur_sum(
                    m,
                    n,
                    PartitionFilter::EvenParts,
                    SpecializationRule::SymWeight,
                )
                .unwrap(),
            );
            check(
                "diag-parts-even = product",
                &by_enum,
                &product_gf(ProductKind::SizeEven, n, m).unwrap(),
            );
        }
    }

    // pinned values
    let sym222 = PPClass::symmetric_box(2, 2, &[]);
    check(
        "count sym 2x2x2 = 10",
        &Polynomial::int(enumerate_pp(&sym222, caps).unwrap().len() as i64),
        &Polynomial::int(10),
    );
    check(
        "gf sym 2x2x1",
        &gf_enumerate(&PPClass::symmetric_box(2, 1, &[]), WeightRule::Size, caps).unwrap(),
        &qpoly(&[0, 1, 3, 4]),
    );
    check(
        "gf diag-levels-even 2x2x1",
        &gf_enumerate(
            &PPClass::symmetric_box(2, 1, &[Constraint::DiagonalLevelsEven]),
            WeightRule::Size,
            caps,
        )
        .unwrap(),
        &qpoly(&[0, 4]),
    );
    check(
        "gf diag-parts-even 2x2x2",
        &gf_enumerate(
            &PPClass::symmetric_box(2, 2, &[Constraint::DiagonalPartsEven]),
            WeightRule::Size,
            caps,
        )
        .unwrap(),
        &qpoly(&[0, 2, 4, 6, 8]),
    );

    // orbit bookkeeping: count formula and occupied-orbit identity
    for n in 1..=3usize {
        for m in 1..=3u32 {
            let expected = m as usize * n * (n + 1) / 2;
            if orbits(n, m).len() != expected {
                eprintln!("  orbit count off at n={n} m={m}");
                ok = false;
            }
            for pp in enumerate_pp(&PPClass::symmetric_box(n, m, &[]), caps).unwrap() {
                if 2 * pp.occupied_orbits() != pp.size() + pp.diagonal_points() {
                    eprintln!("  occupied-orbit identity off at n={n} m={m}");
                    ok = false;
                }
            }
        }
    }

    report("10 enumeration = specialization = product chains + pinned values", ok);
}

#[test]
fn criterion_11_documented_negative() {
    let caps = EnumerationCaps::default();
    let literal = gf_enumerate(
        &PPClass::symmetric_box(2, 2, &[Constraint::AllHeightsEven]),
        WeightRule::Size,
        caps,
    )
    .unwrap();
    let product = product_gf(ProductKind::SizeEven, 2, 2).unwrap();
    let ok = literal == qpoly(&[0, 2, 6, 8]) && product == qpoly(&[0, 2, 4, 6, 8]) && literal != product;
    report(
        "11 literal all-heights-even class differs from the even-height product",
        ok,
    );
}

#[test]
fn criterion_12_algebra_properties() {
    let mut ok = true;

    // deterministic sample polynomials
    let p = &(&Polynomial::x(1) + &Polynomial::var(Var::T)) - &Polynomial::int(2);
    let q = &Polynomial::xpow(2, 2) + &(&Polynomial::x(1) * &Polynomial::var(Var::Q));
    let r = &Polynomial::one() - &Polynomial::x(3);

    // ring laws
    ok &= &(&p * &q) * &r == &p * &(&q * &r);
    ok &= &p * &(&q + &r) == &(&p * &q) + &(&p * &r);
    ok &= &p + &q == &q + &p && &p * &q == &q * &p;
    ok &= &p + &Polynomial::zero() == p && &p * &Polynomial::one() == p;

    // exact division round-trips
    for d in [&q, &r] {
        ok &= (&p * d).exact_div(d).unwrap() == p;
    }

    // determinant alternation under a row swap
    let mut mat = PolyMatrix::from_fn(3, |i, j| Polynomial::xpow(i, j as u32));
    let det = mat.determinant().unwrap();
    mat.swap_rows(1, 3);
    ok &= mat.determinant().unwrap() == -&det;

    // substitution is a ring homomorphism
    let assignment: BTreeMap<Var, Polynomial> = [
        (Var::x(1), &Polynomial::x(2) + &Polynomial::one()),
        (Var::x(2), Polynomial::qpow(2)),
        (Var::x(3), Polynomial::var(Var::V)),
        (Var::T, Polynomial::int(3)),
        (Var::Q, Polynomial::x(1)),
    ]
    .into_iter()
    .collect();
    let sub = |f: &Polynomial| f.substitute(&assignment).unwrap();
    ok &= sub(&(&p * &q)) == &sub(&p) * &sub(&q);
    ok &= sub(&(&p + &r)) == &sub(&p) + &sub(&r);

    // weight-evaluation table, exhaustive over the 4x4 box (70 shapes):
    // (t,v) = (0,1) always 1; (1,-1) indicator of even parts; (0,0)
    // indicator of even conjugate.
    let zero = Polynomial::zero();
    let one = Polynomial::one();
    let lambdas = partitions_in_box(4, 4, PartitionFilter::All);
    ok &= lambdas.len() == 70;
    for lambda in &lambdas {
        let f = f_poly(lambda);
        let eval = |t: i64, v: i64| {
            let a: BTreeMap<Var, Polynomial> =
                [(Var::T, Polynomial::int(t)), (Var::V, Polynomial::int(v))]
                    .into_iter()
                    .collect();
            f.substitute(&a).unwrap()
        };
        let even_parts = PartitionFilter::EvenParts.accepts(lambda);
        let even_conj = PartitionFilter::EvenConjugate.accepts(lambda);
        ok &= eval(0, 1) == one;
        ok &= eval(1, -1) == if even_parts { one.clone() } else { zero.clone() };
        ok &= eval(0, 0) == if even_conj { one.clone() } else { zero.clone() };
    }

    // q=1 value of a product GF equals the enumerated cardinality
    let caps = EnumerationCaps::default();
    let at_one: BTreeMap<Var, Polynomial> = [(Var::Q, Polynomial::one())].into_iter().collect();
    let gf = product_gf(ProductKind::MacMahonSym, 2, 2).unwrap();
    let count = enumerate_pp(&PPClass::symmetric_box(2, 2, &[]), caps)
        .unwrap()
        .len();
    ok &= gf.substitute(&at_one).unwrap() == Polynomial::int(count as i64);

    // parity preconditions are surfaced as errors, not silent passes
    ok &= matches!(check_lemma2(3), Err(IdentityError::OddN(3)));
    ok &= matches!(check_theorem2(3, 2), Err(IdentityError::OddM(3)));

    // witness plumbing: a failed comparison reports its smallest term
    let bad = IdentityResult::compare(
        "probe",
        &[],
        &Polynomial::x(1),
        &(&Polynomial::x(1) + &Polynomial::qpow(4)),
    );
    ok &= !bad.holds && bad.witness_monomial.as_deref() == Some("-q^4");

    report("12 algebra property suite (deterministic samples + exhaustive table)", ok);
}
