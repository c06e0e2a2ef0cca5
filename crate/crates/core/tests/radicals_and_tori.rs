mod common;

use std::sync::LazyLock;

use cartan_core::constructions::{associative_closure, quotient, subalgebra};
use cartan_core::groups::{dihedral, group_algebra};
use cartan_core::lie::{centralizer, lie_series_of_algebra, lower_central_series};
use cartan_core::radical::{radical_of_subalgebra, verify_radical};
use cartan_core::torus::separable_elements_central;
use cartan_core::{
    cartan_subalgebra, conjugate_subalgebra, is_reduced, is_soluble, is_torus, lie_nilpotency_report, maximal_torus,
    presets, radical, soluble_hull, verify_cartan, Algebra, FieldSpec, RadicalDecomposition, Reducedness,
};
use proptest::prelude::*;
use proptest::sample::Index;

use common::{gf, gf3_sweep_instances, oracle_instances, random_element, rng};

static POOL: LazyLock<Vec<(String, Algebra)>> = LazyLock::new(|| {
    let mut v = oracle_instances();
    let q = FieldSpec::Rationals;
    v.push(("quaternions".into(), presets::quaternions_q()));
    v.push(("M2(Q)".into(), presets::matrix_algebra(q, 2).unwrap()));
    v.push(("upper 3x3 over Q".into(), presets::upper_triangular(q, 3).unwrap()));
    v.push(("Q[x]/(x^3)".into(), presets::truncated_polynomials(q, 3).unwrap()));
    v.push(("GF(3)D6".into(), group_algebra(gf(3), &dihedral(3).unwrap())));
    v.push(("GF(5)D6".into(), group_algebra(gf(5), &dihedral(3).unwrap())));
    v.push((
        "upper 3x3 over GF(5)".into(),
        presets::upper_triangular(gf(5), 3).unwrap(),
    ));
    v
});

fn pick(i: &Index) -> &'static (String, Algebra) {
    &POOL[i.index(POOL.len())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cartan_outputs_verify(i in any::<Index>(), seed in 0u64..1000) {
        let (name, a) = pick(&i);
        let cert = cartan_subalgebra(a, seed).unwrap();
        prop_assert!(verify_cartan(a, &cert.cartan).is_cartan(), "{}", name);
        prop_assert!(cert.checks(a).iter().all(|(_, ok)| *ok), "{}", name);
        prop_assert!(cert.radical_part.intersection(&cert.torus.torus).is_zero());
        prop_assert_eq!(cert.radical_part.sum(&cert.torus.torus), cert.cartan.clone());
        prop_assert_eq!(cert.radical_part, cert.cartan.intersection(&radical(a).unwrap()));
    }

    #[test]
    fn conjugates_of_cartans_are_cartans(i in any::<Index>(), seed in any::<u64>()) {
        let (name, a) = pick(&i);
        let rad = radical(a).unwrap();
        let coeffs: Vec<_> = (0..rad.dim()).map(|_| common::random_scalar(a.field(), &mut rng(seed))).collect();
        let r = rad.combine(&coeffs);
        let c = cartan_subalgebra(a, 0).unwrap().cartan;
        let conj = conjugate_subalgebra(a, &c, &r).unwrap();
        prop_assert_eq!(conj.dim(), c.dim());
        prop_assert!(verify_cartan(a, &conj).is_cartan(), "{}", name);
    }

    #[test]
    fn reduced_subalgebra_radicals(i in any::<Index>(), seed in any::<u64>(), gens in 1usize..3, with_one in any::<bool>()) {
        let (name, a) = pick(&i);
        prop_assume!(is_reduced(a).unwrap() == Reducedness::Reduced);
        let mut r = rng(seed);
        let xs: Vec<_> = (0..gens).map(|_| random_element(a, &mut r)).collect();
        let t = associative_closure(a, &xs, with_one).unwrap();
        let rad_t = radical_of_subalgebra(a, &t).unwrap();
        prop_assert_eq!(rad_t, radical(a).unwrap().intersection(&t), "{}", name);
    }
}

#[test]
fn radicals_verify_and_quotients_are_semisimple() {
    for (name, a) in POOL.iter() {
        let rad = radical(a).unwrap();
        assert!(verify_radical(a, &rad).unwrap().all(), "{name}");
        let q = quotient(a, &rad).unwrap();
        assert!(radical(&q.algebra).unwrap().is_zero(), "{name}");
        let d = RadicalDecomposition::compute(a).unwrap();
        assert!(d.invariants_hold(a), "{name}");
    }
}

#[test]
fn central_complements_give_lie_nilpotent_algebras_of_the_radical_class() {
    for (name, a) in POOL.iter().chain(gf3_sweep_instances().iter()) {
        let report = lie_nilpotency_report(a, 0).unwrap();
        let series = lie_series_of_algebra(a);
        if report.central_complement {
            assert!(series.nilpotent, "{name}");
            let rad = radical(a).unwrap();
            if !rad.is_zero() {
                let rad_series = lower_central_series(a, &rad).unwrap();
                assert_eq!(series.class, rad_series.class, "{name}");
            }
        }
        if series.nilpotent {
            assert!(is_soluble(a).unwrap(), "{name}");
        }
    }
}

#[test]
fn separable_algebras_have_self_centralizing_toral_cartans() {
    let f3 = gf(3);
    let semisimple = [
        presets::matrix_algebra(gf(2), 2).unwrap(),
        presets::matrix_algebra(f3, 2).unwrap(),
        presets::matrix_algebra(FieldSpec::Rationals, 2).unwrap(),
        presets::quaternions_q(),
        group_algebra(gf(5), &dihedral(3).unwrap()),
        group_algebra(gf(2), &cartan_core::groups::cyclic(3).unwrap()),
        presets::polynomial_quotient(f3, &[f3.one(), f3.zero(), f3.one()]).unwrap(),
    ];
    for a in &semisimple {
        assert!(radical(a).unwrap().is_zero());
        for seed in 0..4 {
            let c = cartan_subalgebra(a, seed).unwrap().cartan;
            assert!(is_torus(a, &c));
            assert_eq!(centralizer(a, &c).unwrap(), c);
        }
    }
}

#[test]
fn lie_nilpotent_iff_separable_elements_central() {
    for (name, a) in POOL.iter().chain(gf3_sweep_instances().iter()) {
        let Some(q) = a.field().order() else { continue };
        if (q as u128).pow(a.dim() as u32) > 1 << 12 {
            continue;
        }
        let central = separable_elements_central(a, 1 << 12).unwrap();
        assert_eq!(central, lie_series_of_algebra(a).nilpotent, "{name}");
    }
}

#[test]
fn nilpotency_report_is_consistent() {
    for (name, a) in POOL.iter().chain(gf3_sweep_instances().iter()) {
        let report = lie_nilpotency_report(a, 0).unwrap();
        assert!(report.consistent(), "{name}: {report:?}");
    }
}

#[test]
fn cartans_of_reduced_algebras_are_cartans_of_the_soluble_hull() {
    for (name, a) in POOL.iter() {
        if is_reduced(a).unwrap() != Reducedness::Reduced {
            continue;
        }
        for seed in 0..3 {
            let torus = maximal_torus(a, seed).unwrap();
            let hull = soluble_hull(a, &torus).unwrap();
            let cartan = cartan_subalgebra(a, seed).unwrap().cartan;
            let inner = subalgebra(a, &hull).unwrap();
            let relative = cartan.relative_to(&hull).expect("Cartan lies in the hull");
            assert!(verify_cartan(&inner, &relative).is_cartan(), "{name}");
        }
    }
}
