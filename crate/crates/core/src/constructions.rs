//! Building new algebras and subspaces from old ones: associative closures,
//! ideals and their powers, quotients, subalgebras as standalone algebras,
//! direct and tensor products.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::Matrix;
use crate::subspace::Subspace;

/// Smallest multiplication-closed subspace containing `gens` (and `1_A`).
pub fn associative_closure(algebra: &Algebra, gens: &[Element], with_one: bool) -> Result<Subspace> {
    for g in gens {
        algebra.check_dim(g)?;
    }
    let field = algebra.field();
    let n = algebra.dim();
    let mut seeds: Vec<Element> = gens.to_vec();
    if with_one {
        seeds.push(algebra.one()?.clone());
    }
    let mut span = Subspace::span(field, n, &seeds);
    let gens = Subspace::span(field, n, gens).basis();
    // words in the generators are closed under right multiplication by a generator
    loop {
        let products: Vec<Element> = span
            .basis()
            .iter()
            .flat_map(|b| gens.iter().map(move |g| (b, g)))
            .map(|(b, g)| algebra.mul(b, g))
            .collect();
        let next = span.extend(&products);
        if next == span {
            return Ok(span);
        }
        span = next;
    }
}

/// Span of all products `xy` with `x ∈ X`, `y ∈ Y`.
pub fn product_span(algebra: &Algebra, x: &Subspace, y: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for a in x.basis() {
        for b in y.basis() {
            out.push(algebra.mul(&a, &b));
        }
    }
    Subspace::span(algebra.field(), algebra.dim(), &out)
}

pub fn is_multiplication_closed(algebra: &Algebra, s: &Subspace) -> bool {
    let basis = s.basis();
    basis
        .iter()
        .all(|a| basis.iter().all(|b| s.contains(&algebra.mul(a, b))))
}

/// Is the subspace a unital subalgebra (contains `1_A` and is closed)?
pub fn is_unital_subalgebra(algebra: &Algebra, s: &Subspace) -> bool {
    algebra.one().is_ok_and(|one| s.contains(one)) && is_multiplication_closed(algebra, s)
}

pub fn is_commutative_subspace(algebra: &Algebra, s: &Subspace) -> bool {
    let basis = s.basis();
    basis
        .iter()
        .enumerate()
        .all(|(i, a)| basis[i + 1..].iter().all(|b| algebra.bracket(a, b).is_zero()))
}

pub fn is_ideal(algebra: &Algebra, i: &Subspace) -> bool {
    i.basis().iter().all(|v| {
        (0..algebra.dim()).all(|j| {
            let e = algebra.basis(j);
            i.contains(&algebra.mul(&e, v)) && i.contains(&algebra.mul(v, &e))
        })
    })
}

/// `I^k`, the span of all `k`-fold products of elements of `I`.
pub fn ideal_power(algebra: &Algebra, i: &Subspace, k: usize) -> Subspace {
    assert!(k >= 1);
    let mut acc = i.clone();
    for _ in 1..k {
        if acc.is_zero() {
            break;
        }
        acc = product_span(algebra, &acc, i);
    }
    acc
}

/// The chain `I ⊇ I² ⊇ … ⊇ 0`, or `None` if the powers stabilize above zero.
pub fn power_chain(algebra: &Algebra, i: &Subspace) -> Option<Vec<Subspace>> {
    let mut chain = vec![i.clone()];
    loop {
        let last = chain.last().unwrap();
        if last.is_zero() {
            return Some(chain);
        }
        let next = product_span(algebra, last, i);
        if &next == last {
            return None;
        }
        chain.push(next);
    }
}

/// Two-sided ideal `AxA` generated by `x` in a unital algebra.
pub fn generated_ideal(algebra: &Algebra, x: &Element) -> Subspace {
    let n = algebra.dim();
    let basis = algebra.basis_elements();
    let left: Vec<Element> = basis.iter().map(|e| algebra.mul(e, x)).chain([x.clone()]).collect();
    let mut out = left.clone();
    for l in &left {
        for e in &basis {
            out.push(algebra.mul(l, e));
        }
    }
    Subspace::span(algebra.field(), n, &out)
}

/// `A/I` together with the projection `A → A/I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    ideal: Subspace,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: &Element) -> Element {
        let r = self.ideal.reduce(x.coords());
        Element::new(self.complement.iter().map(|&c| r[c].clone()).collect())
    }

    /// The canonical section `A/I → A` onto the span of the complement basis vectors.
    pub fn lift(&self, q: &Element) -> Element {
        let field = self.ideal.field();
        let mut out = vec![field.zero(); self.ideal.ambient_dim()];
        for (c, v) in self.complement.iter().zip(q.coords()) {
            out[*c] = v.clone();
        }
        Element::new(out)
    }

    /// Ambient basis indices whose images form the quotient basis.
    pub fn complement_indices(&self) -> &[usize] {
        &self.complement
    }

    /// Matrix of the projection (rows: quotient coordinates).
    pub fn projection_matrix(&self) -> Matrix {
        let n = self.ideal.ambient_dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.project(&Element::basis(self.ideal.field(), n, j)).into_coords())
            .collect();
        Matrix::from_columns(self.ideal.field(), self.complement.len(), &cols)
    }
}

pub fn quotient(algebra: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    if ideal.ambient_dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: ideal.ambient_dim(),
        });
    }
    if !is_ideal(algebra, ideal) {
        return Err(Error::NotIdeal);
    }
    let complement = ideal.complement_indices();
    let names = complement
        .iter()
        .map(|&c| format!("{}+I", algebra.basis_names()[c]))
        .collect();
    let proj = |v: &Element| -> Vec<Scalar> {
        let r = ideal.reduce(v.coords());
        complement.iter().map(|&c| r[c].clone()).collect()
    };
    let one = algebra.one().ok().map(|u| Element::new(proj(u)));
    let q = Algebra::from_products(
        algebra.field(),
        complement.len(),
        |a, b| proj(&algebra.mul(&algebra.basis(complement[a]), &algebra.basis(complement[b]))),
        one,
        names,
    )?;
    Ok(Quotient {
        algebra: q,
        ideal: ideal.clone(),
        complement,
    })
}

/// A multiplication-closed subspace as an algebra in its own right, with the
/// canonical basis of `s` as basis.
pub fn subalgebra(algebra: &Algebra, s: &Subspace) -> Result<Algebra> {
    if !is_multiplication_closed(algebra, s) {
        return Err(Error::VerificationFailed(
            "subspace is not multiplication-closed".into(),
        ));
    }
    let basis = s.basis();
    let one = algebra.one().ok().and_then(|u| s.coordinates(u)).map(Element::new);
    Algebra::from_products(
        algebra.field(),
        s.dim(),
        |i, j| s.coordinates(&algebra.mul(&basis[i], &basis[j])).expect("closed"),
        one,
        (0..s.dim()).map(|i| format!("s{i}")).collect(),
    )
}

/// `A × B` on the concatenated basis.
pub fn direct_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let field = a.field();
    let one = match (a.one(), b.one()) {
        (Ok(ua), Ok(ub)) => Some(Element::new(ua.coords().iter().chain(ub.coords()).cloned().collect())),
        _ => None,
    };
    let names = a
        .basis_names()
        .iter()
        .map(|n| format!("({n};0)"))
        .chain(b.basis_names().iter().map(|n| format!("(0;{n})")))
        .collect();
    Algebra::from_products(
        field,
        da + db,
        |i, j| {
            let mut v = vec![field.zero(); da + db];
            if i < da && j < da {
                for (k, slot) in v.iter_mut().enumerate().take(da) {
                    *slot = a.structure_constant(i, j, k).clone();
                }
            } else if i >= da && j >= da {
                for k in 0..db {
                    v[da + k] = b.structure_constant(i - da, j - da, k).clone();
                }
            }
            v
        },
        one,
        names,
    )
}

/// Embeds `S × T` into `A × B`.
pub fn product_subspace(a: &Algebra, b: &Algebra, s: &Subspace, t: &Subspace) -> Subspace {
    let field = a.field();
    let (da, db) = (a.dim(), b.dim());
    let mut vs = Vec::new();
    for x in s.basis() {
        let mut c = x.into_coords();
        c.extend(vec![field.zero(); db]);
        vs.push(Element::new(c));
    }
    for y in t.basis() {
        let mut c = vec![field.zero(); da];
        c.extend(y.into_coords());
        vs.push(Element::new(c));
    }
    Subspace::span(field, da + db, &vs)
}

/// `A ⊗ B` on the Kronecker basis `e_i ⊗ f_j ↦ i·dim(B) + j`.
pub fn tensor_product(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let field = a.field();
    let one = match (a.one(), b.one()) {
        (Ok(ua), Ok(ub)) => Some(kron(ua, ub)),
        _ => None,
    };
    let mut names = Vec::with_capacity(da * db);
    for x in a.basis_names() {
        for y in b.basis_names() {
            names.push(format!("{x}⊗{y}"));
        }
    }
    Algebra::from_products(
        field,
        da * db,
        |p, q| {
            let (i, j) = (p / db, p % db);
            let (k, l) = (q / db, q % db);
            kron(&a.mul(&a.basis(i), &a.basis(k)), &b.mul(&b.basis(j), &b.basis(l))).into_coords()
        },
        one,
        names,
    )
}

/// Coordinates of `x ⊗ y` on the Kronecker basis.
pub fn kron(x: &Element, y: &Element) -> Element {
    let mut out = Vec::with_capacity(x.dim() * y.dim());
    for a in x.coords() {
        for b in y.coords() {
            out.push(a * b);
        }
    }
    Element::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::groups::{cyclic, dihedral, group_algebra};
    use crate::presets;

    #[test]
    fn closure_examples() {
        let q = FieldSpec::Rationals;
        let m2 = presets::matrix_algebra(q, 2).unwrap();
        let one = m2.one().unwrap().clone();
        assert_eq!(
            associative_closure(&m2, std::slice::from_ref(&one), true).unwrap(),
            Subspace::span(q, 4, [&one])
        );
        let all = associative_closure(&m2, &[m2.basis(1), m2.basis(2)], false).unwrap();
        assert!(all.is_full());

        let f = FieldSpec::prime(5).unwrap();
        let kd6 = group_algebra(f, &dihedral(3).unwrap());
        let a = kd6.basis(1);
        assert_eq!(
            associative_closure(&kd6, &[a], true).unwrap(),
            Subspace::coordinate(f, 6, &[0, 1, 2])
        );
    }

    #[test]
    fn quotient_examples() {
        let f = FieldSpec::prime(3).unwrap();
        let dual = presets::dual_numbers(f).unwrap();
        let q0 = quotient(&dual, &Subspace::zero(f, 2)).unwrap();
        assert_eq!(q0.algebra, dual);
        let q1 = quotient(&dual, &Subspace::coordinate(f, 2, &[1])).unwrap();
        assert_eq!(q1.algebra.dim(), 1);
        assert!(q1.algebra.one().unwrap().coords()[0].is_one());
        let not_ideal = Subspace::coordinate(f, 2, &[0]);
        assert!(matches!(quotient(&dual, &not_ideal), Err(Error::NotIdeal)));
    }

    #[test]
    fn projection_is_multiplicative() {
        let f = FieldSpec::prime(3).unwrap();
        let kd6 = group_algebra(f, &dihedral(3).unwrap());
        let rad = crate::radical::radical(&kd6).unwrap();
        let q = quotient(&kd6, &rad).unwrap();
        let x = kd6.element(&[1, 2, 0, 1, 1, 2]);
        let y = kd6.element(&[0, 1, 1, 2, 0, 1]);
        assert_eq!(
            q.project(&kd6.mul(&x, &y)),
            q.algebra.mul(&q.project(&x), &q.project(&y))
        );
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_commutative());
        assert_eq!(q.projection_matrix().rows(), 2);
    }

    #[test]
    fn product_dimensions() {
        let f = FieldSpec::prime(3).unwrap();
        let k = presets::matrix_algebra(f, 1).unwrap();
        let m2 = presets::matrix_algebra(f, 2).unwrap();
        assert_eq!(direct_product(&k, &m2).unwrap().dim(), 5);
        assert_eq!(tensor_product(&m2, &m2).unwrap().dim(), 16);
        let kk = direct_product(&k, &k).unwrap();
        assert!(kk.is_commutative());
        // K ⊗ A has the structure constants of A
        assert_eq!(tensor_product(&k, &m2).unwrap().table_nested(), m2.table_nested());
        assert!(matches!(
            direct_product(&k, &presets::matrix_algebra(FieldSpec::Rationals, 1).unwrap()),
            Err(Error::FieldMismatch)
        ));
    }

    #[test]
    fn tensor_of_group_algebras_is_group_algebra_of_product() {
        let f = FieldSpec::prime(3).unwrap();
        let c2 = cyclic(2).unwrap();
        let kc2 = group_algebra(f, &c2);
        let t = tensor_product(&kc2, &kc2).unwrap();
        let prod = group_algebra(f, &c2.direct_product(&c2));
        assert_eq!(t.table_nested(), prod.table_nested());
    }
}
