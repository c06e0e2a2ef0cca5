mod common;

use cartan_core::constructions::tensor_product;
use cartan_core::finite::ModAlgebra;
use cartan_core::groups::{augmentation_left_ideal, cyclic, derived_subgroup, dihedral, group_algebra, GroupTable};
use cartan_core::lie::lie_series_of_algebra;
use cartan_core::units::{group_is_soluble, units_decomposition_check};
use cartan_core::{group_nilpotency, is_soluble, radical, unit_group, Element, Subspace};

use common::{gf, gf3_sweep_instances, oracle_instances};

fn groups() -> Vec<(&'static str, GroupTable)> {
    let c2 = cyclic(2).unwrap();
    vec![
        ("C2", c2.clone()),
        ("C3", cyclic(3).unwrap()),
        ("C4", cyclic(4).unwrap()),
        ("C6", cyclic(6).unwrap()),
        ("C2xC2", c2.direct_product(&c2)),
        ("D6", dihedral(3).unwrap()),
        ("D8", dihedral(4).unwrap()),
        ("D10", dihedral(5).unwrap()),
        ("D12", dihedral(6).unwrap()),
        ("D6xC2", dihedral(3).unwrap().direct_product(&c2)),
    ]
}

#[test]
fn group_algebra_solubility_criterion() {
    for p in [2, 3, 5] {
        for (name, g) in groups() {
            let kg = group_algebra(gf(p), &g);
            let expected = g.is_abelian() || GroupTable::is_p_subgroup(&derived_subgroup(&g), p);
            assert_eq!(is_soluble(&kg).unwrap(), expected, "GF({p}){name}");
        }
    }
}

#[test]
fn coprime_characteristic_gives_zero_radical() {
    assert!(radical(&group_algebra(gf(5), &dihedral(3).unwrap())).unwrap().is_zero());
    assert!(radical(&group_algebra(gf(7), &dihedral(4).unwrap())).unwrap().is_zero());
}

#[test]
fn two_groups_in_characteristic_two() {
    let f = gf(2);
    for g in [dihedral(4).unwrap(), cyclic(4).unwrap()] {
        let kg = group_algebra(f, &g);
        assert!(lie_series_of_algebra(&kg).nilpotent);
        let all: Vec<usize> = (0..g.order()).collect();
        let aug = augmentation_left_ideal(&kg, &g, &all).unwrap();
        assert_eq!(aug.dim(), g.order() - 1);
        assert!(!aug.contains(kg.one().unwrap()));
        assert_eq!(aug, radical(&kg).unwrap());
    }
}

#[test]
fn dihedral_radical_from_rotation_subgroup() {
    let f = gf(3);
    let g = dihedral(3).unwrap();
    let kg = group_algebra(f, &g);
    assert_eq!(
        augmentation_left_ideal(&kg, &g, &[0, 1, 2]).unwrap(),
        radical(&kg).unwrap()
    );
}

#[test]
fn twice_odd_dihedral_radical_basis() {
    // n = 2·3: generators a^{2s} − 1, b(a^{2s} − 1), a³(a^{2s} − 1), a³b(a^{2s} − 1)
    let f = gf(3);
    let kg = group_algebra(f, &dihedral(6).unwrap());
    let (one, a, b) = (kg.basis(0), kg.basis(1), kg.basis(6));
    let a3 = kg.power(&a, 3).unwrap();
    let a3b = kg.mul(&a3, &b);
    let mut gens = Vec::new();
    for s in 1..=2 {
        let x = &kg.power(&a, 2 * s).unwrap() - &one;
        gens.extend([kg.mul(&b, &x), kg.mul(&a3, &x), kg.mul(&a3b, &x), x]);
    }
    let span = Subspace::span(f, 12, &gens);
    assert_eq!(span.dim(), 8);
    assert_eq!(span, radical(&kg).unwrap());
}

#[test]
fn tensor_of_group_algebras_is_group_algebra_of_product() {
    let f = gf(3);
    let c2 = cyclic(2).unwrap();
    let kc2 = group_algebra(f, &c2);
    assert_eq!(
        tensor_product(&kc2, &kc2).unwrap(),
        group_algebra(f, &c2.direct_product(&c2))
    );
}

#[test]
fn nilpotent_unit_groups_decompose_and_force_solubility() {
    for (name, a) in gf3_sweep_instances().iter().chain(oracle_instances().iter()) {
        let units = unit_group(a).unwrap();
        if group_nilpotency(&units.group).is_nilpotent() {
            assert!(is_soluble(a).unwrap(), "{name}");
            assert!(units_decomposition_check(a).unwrap().holds(), "{name}");
        }
    }
}

#[test]
fn one_plus_radical_is_a_subgroup_of_the_expected_order() {
    for (name, a) in gf3_sweep_instances().iter().chain(oracle_instances().iter()) {
        let units = unit_group(a).unwrap();
        let m = ModAlgebra::new(a).unwrap();
        let one = m.one().unwrap().to_vec();
        let rad = radical(a).unwrap();
        let members: Vec<usize> = (0..units.order())
            .filter(|&g| rad.contains(&m.to_element(&m.sub(units.residues(g), &one))))
            .collect();
        let q = a.field().order().unwrap() as usize;
        assert_eq!(members.len(), q.pow(rad.dim() as u32), "{name}");
        assert!(units.group.is_subgroup(&members), "{name}");
    }
}

#[test]
fn gl2_over_small_fields() {
    let m2 = cartan_core::presets::matrix_algebra(gf(2), 2).unwrap();
    let units = unit_group(&m2).unwrap();
    assert_eq!(units.order(), 6);
    assert!(group_is_soluble(&units.group) && !group_nilpotency(&units.group).is_nilpotent());
    let m2 = cartan_core::presets::matrix_algebra(gf(3), 2).unwrap();
    let units = unit_group(&m2).unwrap();
    assert_eq!(units.order(), 48);
    assert!(group_is_soluble(&units.group) && !group_nilpotency(&units.group).is_nilpotent());
    let x = Element::from_ints(gf(3), &[1, 1, 0, 1]);
    assert!(units.index_of(&x).is_some());
}
