//! Ready-made algebras used by the CLI presets and the test suites.

use crate::algebra::{Algebra, Element};
use crate::constructions::associative_closure;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groups::{cyclic, dihedral, group_algebra};
use crate::linalg::Matrix;
use crate::subspace::Subspace;

/// `M_n(K)` on the matrix units, `E_ij` at index `i·n + j`.
pub fn matrix_algebra(field: FieldSpec, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let dim = n * n;
    let names = (0..dim).map(|x| format!("E{}{}", x / n + 1, x % n + 1)).collect();
    let mut one = vec![field.zero(); dim];
    for i in 0..n {
        one[i * n + i] = field.one();
    }
    Algebra::from_products(
        field,
        dim,
        |x, y| {
            let (i, j) = (x / n, x % n);
            let (k, l) = (y / n, y % n);
            let mut v = vec![field.zero(); dim];
            if j == k {
                v[i * n + l] = field.one();
            }
            v
        },
        Some(Element::new(one)),
        names,
    )
}

/// The rational quaternions `(−1, −1 / ℚ)` on the basis `1, i, j, k`.
pub fn quaternions_q() -> Algebra {
    let f = FieldSpec::Rationals;
    // (index, sign) of e_a e_b
    const TABLE: [[(usize, i64); 4]; 4] = [
        [(0, 1), (1, 1), (2, 1), (3, 1)],
        [(1, 1), (0, -1), (3, 1), (2, -1)],
        [(2, 1), (3, -1), (0, -1), (1, 1)],
        [(3, 1), (2, 1), (1, -1), (0, -1)],
    ];
    Algebra::from_products(
        f,
        4,
        |a, b| {
            let (k, s) = TABLE[a][b];
            let mut v = vec![f.zero(); 4];
            v[k] = f.from_i64(s);
            v
        },
        Some(Element::basis(f, 4, 0)),
        ["1", "i", "j", "k"].map(String::from).to_vec(),
    )
    .expect("quaternion table is associative")
}

/// `K[x]/(f)` for monic `f` given lowest degree first, basis `1, x, …, x^{d−1}`.
pub fn polynomial_quotient(field: FieldSpec, monic: &[Scalar]) -> Result<Algebra> {
    let d = monic
        .len()
        .checked_sub(1)
        .filter(|&d| d > 0)
        .ok_or(Error::InvalidOrder(0))?;
    if !monic[d].is_one() {
        return Err(Error::Parse("modulus polynomial must be monic".into()));
    }
    // multiplication-by-x matrix, then x^i x^j = x^{i+j} reduced
    let reduce = |mut c: Vec<Scalar>| -> Vec<Scalar> {
        for top in (d..c.len()).rev() {
            let lead = c[top].clone();
            if lead.is_zero() {
                continue;
            }
            let neg = -&lead;
            for (i, m) in monic.iter().enumerate() {
                c[top - d + i].add_product(&neg, m);
            }
        }
        c.truncate(d);
        c
    };
    let names = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    Algebra::from_products(
        field,
        d,
        |i, j| {
            let mut c = vec![field.zero(); 2 * d];
            c[i + j] = field.one();
            reduce(c)
        },
        Some(Element::basis(field, d, 0)),
        names,
    )
}

/// `K[x]/(x²)`.
pub fn dual_numbers(field: FieldSpec) -> Result<Algebra> {
    polynomial_quotient(field, &[field.zero(), field.zero(), field.one()])
}

/// `K[x]/(x^n)`.
pub fn truncated_polynomials(field: FieldSpec, n: usize) -> Result<Algebra> {
    let mut c = vec![field.zero(); n + 1];
    c[n] = field.one();
    polynomial_quotient(field, &c)
}

/// Upper triangular `n × n` matrices.
pub fn upper_triangular(field: FieldSpec, n: usize) -> Result<Algebra> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in i..n {
            let mut m = Matrix::zeros(field, n, n);
            m[(i, j)] = field.one();
            gens.push(m);
        }
    }
    matrix_subalgebra(field, n, &gens)
}

/// The unital subalgebra of `M_n(K)` generated by `gens`, with the canonical
/// (row-echelon) basis of its flattened matrices.
pub fn matrix_subalgebra(field: FieldSpec, n: usize, gens: &[Matrix]) -> Result<Algebra> {
    let full = matrix_algebra(field, n)?;
    let gens: Vec<Element> = gens
        .iter()
        .map(|m| Element::new((0..n * n).map(|x| m[(x / n, x % n)].clone()).collect()))
        .collect();
    let span = associative_closure(&full, &gens, true)?;
    restrict_to(&full, &span)
}

fn restrict_to(full: &Algebra, span: &Subspace) -> Result<Algebra> {
    let basis = span.basis();
    let one = span.coordinates(full.one()?).map(Element::new);
    Algebra::from_products(
        full.field(),
        span.dim(),
        |i, j| span.coordinates(&full.mul(&basis[i], &basis[j])).expect("closed"),
        one,
        (0..span.dim()).map(|i| format!("m{i}")).collect(),
    )
}

/// Resolves a preset name:
/// `dihedral:N@F`, `cyclic:N@F`, `matrix:N@F`, `quaternion:Q`, `dual-numbers:F`,
/// `truncated:N@F`, `upper:N@F`, where `F` is `Q` or `GF(p)`.
pub fn from_preset(name: &str) -> Result<Algebra> {
    let unknown = || Error::UnknownPreset(name.to_string());
    let (kind, rest) = name.split_once(':').ok_or_else(unknown)?;
    let size_at_field = |rest: &str| -> Result<(usize, FieldSpec)> {
        let (n, f) = rest.split_once('@').ok_or_else(unknown)?;
        let n = n
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad size in `{name}`")))?;
        Ok((n, FieldSpec::parse(f)?))
    };
    match kind {
        "dihedral" => {
            let (n, f) = size_at_field(rest)?;
            Ok(group_algebra(f, &dihedral(n)?))
        }
        "cyclic" => {
            let (n, f) = size_at_field(rest)?;
            Ok(group_algebra(f, &cyclic(n)?))
        }
        "matrix" => {
            let (n, f) = size_at_field(rest)?;
            matrix_algebra(f, n)
        }
        "truncated" => {
            let (n, f) = size_at_field(rest)?;
            truncated_polynomials(f, n)
        }
        "upper" => {
            let (n, f) = size_at_field(rest)?;
            upper_triangular(f, n)
        }
        "quaternion" if rest.trim() == "Q" => Ok(quaternions_q()),
        "dual-numbers" => dual_numbers(FieldSpec::parse(rest)?),
        _ => Err(unknown()),
    }
}
