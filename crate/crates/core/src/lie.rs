//! The associated Lie algebra A°: centralizers, normalizers and the lower
//! central series, all computed as kernels of stacked linear systems.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::subspace::Subspace;

fn check_ambient(algebra: &Algebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: s.ambient_dim(),
        });
    }
    if s.field() != algebra.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Span of all brackets `x ∘ y` with `x ∈ X`, `y ∈ Y`.
pub fn bracket_span(algebra: &Algebra, x: &Subspace, y: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for a in x.basis() {
        for b in y.basis() {
            let c = algebra.bracket(&a, &b);
            if !c.is_zero() {
                out.push(c);
            }
        }
    }
    Subspace::span(algebra.field(), algebra.dim(), &out)
}

pub fn is_lie_closed(algebra: &Algebra, s: &Subspace) -> bool {
    let basis = s.basis();
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !s.contains(&algebra.bracket(a, b)) {
                return false;
            }
        }
    }
    true
}

/// `C_A(S) = {x : x ∘ s = 0 for all s ∈ S}`.
pub fn centralizer(algebra: &Algebra, s: &Subspace) -> Result<Subspace> {
    check_ambient(algebra, s)?;
    let n = algebra.dim();
    let mut system = Matrix::zeros(algebra.field(), 0, n);
    for b in s.basis() {
        system.stack(algebra.ad(&b).matrix());
    }
    let kernel: Vec<Element> = system.kernel().into_iter().map(Element::new).collect();
    Ok(Subspace::span(algebra.field(), n, &kernel))
}

/// Centralizer of a set of elements.
pub fn centralizer_of(algebra: &Algebra, elements: &[Element]) -> Result<Subspace> {
    centralizer(algebra, &Subspace::span(algebra.field(), algebra.dim(), elements))
}

/// `Z(A) = C_A(A)`.
pub fn center(algebra: &Algebra) -> Subspace {
    centralizer(algebra, &Subspace::full(algebra.field(), algebra.dim())).expect("ambient subspace")
}

/// `N_{A°}(C) = {x : x ∘ c ∈ C for all c ∈ C}`; `C` must be bracket-closed.
pub fn lie_normalizer(algebra: &Algebra, c: &Subspace) -> Result<Subspace> {
    check_ambient(algebra, c)?;
    if !is_lie_closed(algebra, c) {
        return Err(Error::NotLieClosed);
    }
    let n = algebra.dim();
    let field = algebra.field();
    let mut system = Matrix::zeros(field, 0, n);
    for b in c.basis() {
        // columns: reduce(e_j ∘ b) modulo C
        let cols: Vec<Vec<_>> = (0..n)
            .map(|j| c.reduce(algebra.bracket(&algebra.basis(j), &b).coords()))
            .collect();
        system.stack(&Matrix::from_columns(field, n, &cols));
    }
    let kernel: Vec<Element> = system.kernel().into_iter().map(Element::new).collect();
    Ok(Subspace::span(field, n, &kernel))
}

/// The left-normed series `L ⊇ L∘L ⊇ (L∘L)∘L ⊇ …` up to stabilization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCentralSeries {
    /// `terms[0] = L`; the last entry is the stable term.
    pub terms: Vec<Subspace>,
    pub nilpotent: bool,
    /// Number of nonzero terms when nilpotent (so abelian `L ≠ 0` has class 1).
    pub class: Option<usize>,
}

impl LowerCentralSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

pub fn lower_central_series(algebra: &Algebra, l: &Subspace) -> Result<LowerCentralSeries> {
    check_ambient(algebra, l)?;
    if !is_lie_closed(algebra, l) {
        return Err(Error::NotLieClosed);
    }
    let mut terms = vec![l.clone()];
    loop {
        let last = terms.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = bracket_span(algebra, last, l);
        if &next == last {
            break;
        }
        terms.push(next);
    }
    let nilpotent = terms.last().unwrap().is_zero();
    let class = nilpotent.then(|| terms.iter().filter(|t| !t.is_zero()).count());
    Ok(LowerCentralSeries {
        terms,
        nilpotent,
        class,
    })
}

/// Lower central series of the whole of `A°`.
pub fn lie_series_of_algebra(algebra: &Algebra) -> LowerCentralSeries {
    lower_central_series(algebra, &Subspace::full(algebra.field(), algebra.dim())).expect("A is bracket-closed")
}
