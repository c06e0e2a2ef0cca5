//! Finite-dimensional associative algebras given by structure constants.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;

/// A coordinate vector with respect to the ambient basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn zero(field: FieldSpec, dim: usize) -> Self {
        Element {
            coords: vec![field.zero(); dim],
        }
    }

    /// The `i`-th basis vector.
    pub fn basis(field: FieldSpec, dim: usize, i: usize) -> Self {
        let mut e = Self::zero(field, dim);
        e.coords[i] = field.one();
        e
    }

    pub fn from_ints(field: FieldSpec, coords: &[i64]) -> Self {
        Element {
            coords: coords.iter().map(|&c| field.from_i64(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    /// `self + s * other`
    pub fn add_scaled(&self, s: &Scalar, other: &Element) -> Element {
        let mut out = self.clone();
        for (a, b) in out.coords.iter_mut().zip(&other.coords) {
            a.add_product(s, b);
        }
        out
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.dim(), rhs.dim());
        Element {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A linear endomorphism of the algebra; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        assert!(matrix.is_square(), "linear maps are square");
        LinearMap { matrix }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &Element) -> Element {
        Element::new(self.matrix.mul_vec(x.coords()))
    }

    /// `x ↦ (x self) other`, matching the right-action notation `x ad(h₁) ad(h₂)`.
    pub fn then(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(other.matrix.mul(&self.matrix))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// An associative algebra over ℚ or GF(p) with `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct Algebra {
    field: FieldSpec,
    dim: usize,
    table: Vec<Scalar>,
    products: Vec<Vec<(usize, Scalar)>>,
    one: Option<Element>,
    basis_names: Vec<String>,
    complement_hints: Vec<Vec<usize>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.table == other.table && self.one == other.one
    }
}

impl Algebra {
    /// Validates the structure constants (associativity and identity).
    ///
    /// `table` is indexed `(i * dim + j) * dim + k`. When `one` is `None` an
    /// identity is solved for; algebras without one are allowed and report
    /// [`Error::NotUnital`] from the operations that need it.
    pub fn new(
        field: FieldSpec,
        dim: usize,
        table: Vec<Scalar>,
        one: Option<Element>,
        basis_names: Vec<String>,
    ) -> Result<Self> {
        if table.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        if table.iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        let names = if basis_names.len() == dim {
            basis_names
        } else if basis_names.is_empty() {
            (0..dim).map(|i| format!("e{i}")).collect()
        } else {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: basis_names.len(),
            });
        };
        let products = (0..dim * dim)
            .map(|ij| {
                (0..dim)
                    .filter_map(|k| {
                        let c = &table[ij * dim + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        let mut alg = Algebra {
            field,
            dim,
            table,
            products,
            one: None,
            basis_names: names,
            complement_hints: Vec::new(),
        };
        alg.check_associative()?;
        match one {
            Some(u) => {
                alg.check_dim(&u)?;
                if u.coords().iter().any(|s| s.field() != field) {
                    return Err(Error::FieldMismatch);
                }
                alg.check_identity(&u)?;
                alg.one = Some(u);
            }
            None => alg.one = alg.solve_identity(),
        }
        Ok(alg)
    }

    /// Builds an algebra from a closure producing `e_i e_j` as coordinates.
    pub fn from_products(
        field: FieldSpec,
        dim: usize,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
        one: Option<Element>,
        basis_names: Vec<String>,
    ) -> Result<Self> {
        let mut table = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    });
                }
                table.extend(v);
            }
        }
        Self::new(field, dim, table, one, basis_names)
    }

    /// Attaches preferred radical-complement candidates: index sets of basis
    /// vectors whose span should be returned as the complement when it is one.
    pub fn with_complement_hints(mut self, hints: Vec<Vec<usize>>) -> Self {
        self.complement_hints = hints;
        self
    }

    pub fn complement_hints(&self) -> &[Vec<usize>] {
        &self.complement_hints
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn one(&self) -> Result<&Element> {
        self.one.as_ref().ok_or(Error::NotUnital)
    }

    pub fn is_unital(&self) -> bool {
        self.one.is_some()
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim, i)
    }

    pub fn basis_elements(&self) -> Vec<Element> {
        (0..self.dim).map(|i| self.basis(i)).collect()
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim)
    }

    pub fn element(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.dim);
        Element::from_ints(self.field, coords)
    }

    /// `c · 1_A`.
    pub fn scalar(&self, c: &Scalar) -> Result<Element> {
        Ok(self.one()?.scale(c))
    }

    pub fn check_dim(&self, x: &Element) -> Result<()> {
        if x.dim() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.dim(),
            })
        }
    }

    /// The product `xy`. Panics on a dimension mismatch; see [`Algebra::multiply`].
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.dim(), self.dim, "element of wrong dimension");
        assert_eq!(y.dim(), self.dim, "element of wrong dimension");
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.coords().iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords().iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let xy = xi * yj;
                for (k, c) in &self.products[i * self.dim + j] {
                    out[*k].add_product(&xy, c);
                }
            }
        }
        Element::new(out)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.mul(x, y))
    }

    /// `x ∘ y = xy − yx`.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        &self.mul(x, y) - &self.mul(y, x)
    }

    pub fn lie_bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.bracket(x, y))
    }

    pub fn power(&self, x: &Element, k: u64) -> Result<Element> {
        if k == 0 {
            return Ok(self.one()?.clone());
        }
        let mut acc = x.clone();
        for _ in 1..k {
            acc = self.mul(&acc, x);
        }
        Ok(acc)
    }

    fn matrix_of(&self, f: impl Fn(&Element) -> Element) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim).map(|j| f(&self.basis(j)).into_coords()).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Matrix of `y ↦ xy`.
    pub fn left_mul_matrix(&self, x: &Element) -> Matrix {
        self.matrix_of(|e| self.mul(x, e))
    }

    /// Matrix of `y ↦ yx`.
    pub fn right_mul_matrix(&self, x: &Element) -> Matrix {
        self.matrix_of(|e| self.mul(e, x))
    }

    /// The operator `ad(l): x ↦ x ∘ l`.
    pub fn ad(&self, l: &Element) -> LinearMap {
        LinearMap::new(self.matrix_of(|e| self.bracket(e, l)))
    }

    pub fn ad_matrix(&self, l: &Element) -> Result<LinearMap> {
        self.check_dim(l)?;
        Ok(self.ad(l))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim)
            .all(|i| (i + 1..self.dim).all(|j| self.products[i * self.dim + j] == self.products[j * self.dim + i]))
    }

    /// Nested `dim × dim × dim` view of the structure constants.
    pub fn table_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self.table[(i * self.dim + j) * self.dim..(i * self.dim + j + 1) * self.dim].to_vec())
                    .collect()
            })
            .collect()
    }

    fn check_associative(&self) -> Result<()> {
        let basis = self.basis_elements();
        let pairs: Vec<Element> = (0..self.dim * self.dim)
            .map(|ij| self.mul(&basis[ij / self.dim], &basis[ij % self.dim]))
            .collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = &pairs[i * self.dim + j];
                for k in 0..self.dim {
                    let left = self.mul(ij, &basis[k]);
                    let right = self.mul(&basis[i], &pairs[j * self.dim + k]);
                    if left != right {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_identity(&self, u: &Element) -> Result<()> {
        for i in 0..self.dim {
            let e = self.basis(i);
            if self.mul(u, &e) != e || self.mul(&e, u) != e {
                return Err(Error::BadIdentity(i));
            }
        }
        Ok(())
    }

    /// Solves `u e_i = e_i = e_i u` for all `i`.
    fn solve_identity(&self) -> Option<Element> {
        if self.dim == 0 {
            return None;
        }
        let n = self.dim;
        // unknown u = Σ u_k e_k: (u e_i)_m = Σ_k u_k c[k][i][m]
        let mut m = Matrix::zeros(self.field, 2 * n * n, n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for out in 0..n {
                let row_left = 2 * (i * n + out);
                for k in 0..n {
                    m[(row_left, k)] = self.structure_constant(k, i, out).clone();
                    m[(row_left + 1, k)] = self.structure_constant(i, k, out).clone();
                }
                let target = if i == out { self.field.one() } else { self.field.zero() };
                rhs.push(target.clone());
                rhs.push(target);
            }
        }
        let u = Element::new(m.solve(&rhs)?);
        self.check_identity(&u).ok().map(|_| u)
    }
}
