//! Instance generators shared by the integration suites.
#![allow(dead_code)]

use cartan_core::constructions::{direct_product, tensor_product};
use cartan_core::groups::{cyclic, dihedral, group_algebra};
use cartan_core::presets;
use cartan_core::{Algebra, Element, FieldSpec, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::PrimeField(p) => field.residue(rng.random_range(0..p)),
        FieldSpec::Rationals => field
            .rational(rng.random_range(-4..=4), rng.random_range(1..=3))
            .unwrap(),
    }
}

pub fn random_element(a: &Algebra, rng: &mut ChaCha8Rng) -> Element {
    Element::new((0..a.dim()).map(|_| random_scalar(a.field(), rng)).collect())
}

pub fn random_matrix(field: FieldSpec, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    Matrix::from_rows(
        field,
        n,
        (0..n).map(|_| (0..n).map(|_| random_scalar(field, rng)).collect()),
    )
}

/// Unital subalgebra of `M_n(K)` generated by `k` random matrices, or
/// `None` when it exceeds `max_dim`.
pub fn random_matrix_subalgebra(
    field: FieldSpec,
    n: usize,
    k: usize,
    max_dim: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Algebra> {
    let gens: Vec<Matrix> = (0..k).map(|_| random_matrix(field, n, rng)).collect();
    let a = presets::matrix_subalgebra(field, n, &gens).ok()?;
    (a.dim() <= max_dim).then_some(a)
}

/// The same algebra on a random basis, so its table no longer looks like
/// matrix units or group elements.
pub fn random_basis_change(a: &Algebra, rng: &mut ChaCha8Rng) -> Algebra {
    let (field, n) = (a.field(), a.dim());
    let p = loop {
        let m = random_matrix(field, n, rng);
        if m.rank() == n {
            break m;
        }
    };
    let cols: Vec<Element> = (0..n).map(|j| Element::new(p.column(j))).collect();
    let solve = |v: &Element| p.solve(v.coords()).expect("invertible change of basis");
    let one = a.one().ok().map(|u| Element::new(solve(u)));
    Algebra::from_products(field, n, |i, j| solve(&a.mul(&cols[i], &cols[j])), one, vec![]).unwrap()
}

/// `K·1 + N` for `N` the strictly upper triangular `n × n` matrices.
pub fn unitriangular_span(field: FieldSpec, n: usize) -> Algebra {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(field, n, n);
            m[(i, j)] = field.one();
            gens.push(m);
        }
    }
    presets::matrix_subalgebra(field, n, &gens).unwrap()
}

fn named(name: impl Into<String>, a: Algebra) -> (String, Algebra) {
    (name.into(), a)
}

/// Hand-built plus seeded-random algebras of dimension at most 4 over GF(2) and GF(3).
pub fn oracle_instances() -> Vec<(String, Algebra)> {
    let mut out = Vec::new();
    for p in [2, 3] {
        let f = gf(p);
        let k = presets::truncated_polynomials(f, 1).unwrap();
        out.push(named(format!("GF({p})"), k.clone()));
        out.push(named(format!("GF({p})^2"), direct_product(&k, &k).unwrap()));
        out.push(named(
            format!("dual numbers over GF({p})"),
            presets::dual_numbers(f).unwrap(),
        ));
        out.push(named(
            format!("GF({p})[x]/(x^3)"),
            presets::truncated_polynomials(f, 3).unwrap(),
        ));
        out.push(named(
            format!("GF({p})[x]/(x^4)"),
            presets::truncated_polynomials(f, 4).unwrap(),
        ));
        out.push(named(
            format!("upper 2x2 over GF({p})"),
            presets::upper_triangular(f, 2).unwrap(),
        ));
        out.push(named(format!("M2(GF({p}))"), presets::matrix_algebra(f, 2).unwrap()));
        out.push(named(
            format!("unitriangular 3x3 over GF({p})"),
            unitriangular_span(f, 3),
        ));
        out.push(named(format!("GF({p})C2"), group_algebra(f, &cyclic(2).unwrap())));
        out.push(named(format!("GF({p})C3"), group_algebra(f, &cyclic(3).unwrap())));
        out.push(named(format!("GF({p})C4"), group_algebra(f, &cyclic(4).unwrap())));
        out.push(named(
            format!("GF({p})(C2xC2)"),
            group_algebra(f, &cyclic(2).unwrap().direct_product(&cyclic(2).unwrap())),
        ));
        let dual = presets::dual_numbers(f).unwrap();
        out.push(named(format!("dual x GF({p})"), direct_product(&dual, &k).unwrap()));
        out.push(named(
            format!("dual (x) dual over GF({p})"),
            tensor_product(&dual, &dual).unwrap(),
        ));
    }
    out.push(named(
        "GF(2)[x]/(x^2+x+1)",
        presets::polynomial_quotient(gf(2), &[gf(2).one(), gf(2).one(), gf(2).one()]).unwrap(),
    ));
    out.push(named(
        "GF(3)[x]/(x^2+1)",
        presets::polynomial_quotient(gf(3), &[gf(3).one(), gf(3).zero(), gf(3).one()]).unwrap(),
    ));
    let mut r = rng(20240917);
    let mut random = 0;
    while random < 12 {
        let p = if random % 2 == 0 { 2 } else { 3 };
        let n = 2 + random % 3 / 2;
        if let Some(a) = random_matrix_subalgebra(gf(p), n, 1 + random % 2, 4, &mut r) {
            if a.dim() >= 2 {
                let a = random_basis_change(&a, &mut r);
                out.push(named(format!("random #{random} over GF({p}), dim {}", a.dim()), a));
                random += 1;
            }
        }
    }
    out
}

/// Algebras over GF(3) with `3^dim ≤ 2¹²` (so `dim ≤ 7`).
pub fn gf3_sweep_instances() -> Vec<(String, Algebra)> {
    let f = gf(3);
    let mut out: Vec<(String, Algebra)> = oracle_instances().into_iter().filter(|(_, a)| a.field() == f).collect();
    let k = presets::truncated_polynomials(f, 1).unwrap();
    let dual = presets::dual_numbers(f).unwrap();
    let ut3 = unitriangular_span(f, 3);
    out.push(named("GF(3)S3", group_algebra(f, &dihedral(3).unwrap())));
    out.push(named("GF(3)C6", group_algebra(f, &cyclic(6).unwrap())));
    out.push(named("GF(3)C5", group_algebra(f, &cyclic(5).unwrap())));
    out.push(named("GF(3)C7", group_algebra(f, &cyclic(7).unwrap())));
    out.push(named("GF(3)[x]/(x^6)", presets::truncated_polynomials(f, 6).unwrap()));
    out.push(named("GF(3)[x]/(x^7)", presets::truncated_polynomials(f, 7).unwrap()));
    out.push(named("upper 3x3 over GF(3)", presets::upper_triangular(f, 3).unwrap()));
    out.push(named(
        "M2(GF(3)) x GF(3)",
        direct_product(&presets::matrix_algebra(f, 2).unwrap(), &k).unwrap(),
    ));
    out.push(named("unitriangular 3x3 x GF(3)", direct_product(&ut3, &k).unwrap()));
    out.push(named("unitriangular 3x3 x dual", direct_product(&ut3, &dual).unwrap()));
    out.push(named(
        "upper 2x2 x dual",
        direct_product(&presets::upper_triangular(f, 2).unwrap(), &dual).unwrap(),
    ));
    let mut r = rng(77);
    let mut random = 0;
    while random < 8 {
        let n = 2 + random % 2;
        if let Some(a) = random_matrix_subalgebra(f, n, 1 + random % 2, 7, &mut r) {
            out.push(named(format!("random GF(3) #{random}, dim {}", a.dim()), a));
            random += 1;
        }
    }
    out
}
