//! Subspaces of a fixed coordinate space, stored in reduced row-echelon form.
//!
//! Because the basis is canonical, two subspaces are equal exactly when their
//! basis matrices are equal, so `Subspace` derives `Eq` and `Hash`.

use crate::algebra::Element;
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary vectors (zero and dependent ones allowed).
    pub fn span<'a>(field: FieldSpec, ambient_dim: usize, vectors: impl IntoIterator<Item = &'a Element>) -> Self {
        let m = Matrix::from_rows(field, ambient_dim, vectors.into_iter().map(|v| v.coords().to_vec()));
        Self::from_matrix(m)
    }

    /// Span of the given coordinate rows.
    pub fn from_rows(field: FieldSpec, ambient_dim: usize, rows: Vec<Vec<Scalar>>) -> Self {
        Self::from_matrix(Matrix::from_rows(field, ambient_dim, rows))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { basis, pivots }
    }

    /// Span of a set of ambient basis vectors.
    pub fn coordinate(field: FieldSpec, ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Element> = indices.iter().map(|&i| Element::basis(field, ambient_dim, i)).collect();
        Self::span(field, ambient_dim, &vs)
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn matrix(&self) -> &Matrix {
        &self.basis
    }

    /// The canonical basis as elements.
    pub fn basis(&self) -> Vec<Element> {
        (0..self.dim())
            .map(|i| Element::new(self.basis.row(i).to_vec()))
            .collect()
    }

    /// `v` minus its projection along the pivot coordinates; zero iff `v ∈ self`.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = -&out[p];
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                o.add_product(&factor, b);
            }
        }
        out
    }

    pub fn contains(&self, v: &Element) -> bool {
        self.reduce(v.coords()).iter().all(Scalar::is_zero)
    }

    /// Coefficients of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &Element) -> Option<Vec<Scalar>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&p| v.coords()[p].clone()).collect())
    }

    /// Linear combination of the canonical basis.
    pub fn combine(&self, coeffs: &[Scalar]) -> Element {
        assert_eq!(coeffs.len(), self.dim());
        let mut out = vec![self.field().zero(); self.ambient_dim()];
        for (i, c) in coeffs.iter().enumerate() {
            for (o, b) in out.iter_mut().zip(self.basis.row(i)) {
                o.add_product(c, b);
            }
        }
        Element::new(out)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis().iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut m = self.basis.clone();
        m.stack(&other.basis);
        Self::from_matrix(m)
    }

    /// Adds vectors to the span.
    pub fn extend<'a>(&self, vectors: impl IntoIterator<Item = &'a Element>) -> Subspace {
        let mut m = self.basis.clone();
        for v in vectors {
            m.push_row(v.coords().to_vec());
        }
        Self::from_matrix(m)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        let n = self.ambient_dim();
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Subspace::zero(self.field(), n);
        }
        // Σ x_i u_i − Σ y_j w_j = 0
        let mut m = Matrix::zeros(self.field(), n, a + b);
        for i in 0..a {
            for r in 0..n {
                m[(r, i)] = self.basis[(i, r)].clone();
            }
        }
        for j in 0..b {
            for r in 0..n {
                m[(r, a + j)] = -&other.basis[(j, r)];
            }
        }
        let vs: Vec<Element> = m.kernel().iter().map(|k| self.combine(&k[..a])).collect();
        Subspace::span(self.field(), n, &vs)
    }

    /// Ambient basis vectors not among the pivots: a canonical complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim()).filter(|&i| !is_pivot[i]).collect()
    }

    /// Re-expresses `self` (contained in `parent`) in `parent`'s canonical basis.
    pub fn relative_to(&self, parent: &Subspace) -> Option<Subspace> {
        let rows: Option<Vec<Vec<Scalar>>> = self.basis().iter().map(|v| parent.coordinates(v)).collect();
        Some(Subspace::from_rows(self.field(), parent.dim(), rows?))
    }

    /// Inverse of [`Subspace::relative_to`].
    pub fn embed_into(&self, parent: &Subspace) -> Subspace {
        let vs: Vec<Element> = self.basis().iter().map(|v| parent.combine(v.coords())).collect();
        Subspace::span(self.field(), parent.ambient_dim(), &vs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(f: FieldSpec, c: &[i64]) -> Element {
        Element::from_ints(f, c)
    }

    #[test]
    fn canonical_form_makes_equal_spans_equal() {
        let f = FieldSpec::Rationals;
        let a = Subspace::span(f, 3, &[el(f, &[1, 1, 0]), el(f, &[0, 1, 1])]);
        let b = Subspace::span(f, 3, &[el(f, &[1, 2, 1]), el(f, &[2, 2, 0]), el(f, &[0, 0, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
        assert!(a.contains(&el(f, &[1, 0, -1])));
        assert!(!a.contains(&el(f, &[1, 0, 0])));
    }

    #[test]
    fn intersection_and_sum() {
        let f = FieldSpec::prime(3).unwrap();
        let a = Subspace::coordinate(f, 3, &[0, 1]);
        let b = Subspace::coordinate(f, 3, &[1, 2]);
        assert_eq!(a.intersection(&b), Subspace::coordinate(f, 3, &[1]));
        assert!(a.sum(&b).is_full());
        assert!(a.intersection(&Subspace::zero(f, 3)).is_zero());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = FieldSpec::Rationals;
        let s = Subspace::span(f, 3, &[el(f, &[1, 0, 2]), el(f, &[0, 1, 3])]);
        let v = el(f, &[2, -1, 1]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(s.combine(&c), v);
        let sub = Subspace::span(f, 3, std::slice::from_ref(&v));
        let rel = sub.relative_to(&s).unwrap();
        assert_eq!(rel.embed_into(&s), sub);
    }
}
