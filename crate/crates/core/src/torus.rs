//! Separable elements, tori, maximal tori and Cartan subalgebras of `A∘`.
//!
//! A maximal torus is grown greedily inside a radical complement `C`: while
//! the centralizer of the current torus `T` in `C` holds a separable element
//! `t ∉ T`, replace `T` by `K[T, t]`. The Cartan subalgebra is then `C_A(T)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Element};
use crate::constructions::{
    associative_closure, generated_ideal, is_commutative_subspace, is_multiplication_closed, subalgebra,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::finite::ModAlgebra;
use crate::lie::{center, centralizer, is_lie_closed, lie_normalizer, lie_series_of_algebra, lower_central_series};
use crate::poly::{is_squarefree, minimal_polynomial};
use crate::radical::{conjugate_with_radical, radical, radical_complement_with, trace_form};
use crate::subspace::Subspace;

/// Random combinations tried per search round after the deterministic sweeps.
pub const RANDOM_CANDIDATES: usize = 256;
/// Finite centralizers up to this many elements are searched exhaustively.
pub const EXHAUSTIVE_SEARCH_LIMIT: u128 = 4096;
/// Bound on `|K|^dim` for the element enumerations of the nilpotency report.
pub const REPORT_ENUMERATION_LIMIT: u128 = 1 << 16;

/// `x` has a squarefree minimal polynomial.
pub fn is_separable_element(algebra: &Algebra, x: &Element) -> Result<bool> {
    is_squarefree(&minimal_polynomial(algebra, x)?)
}

/// Contains `1`, closed, commutative, with nondegenerate trace form.
pub fn is_torus(algebra: &Algebra, t: &Subspace) -> bool {
    let Ok(one) = algebra.one() else {
        return false;
    };
    if t.ambient_dim() != algebra.dim() || !t.contains(one) {
        return false;
    }
    if !is_multiplication_closed(algebra, t) || !is_commutative_subspace(algebra, t) {
        return false;
    }
    match subalgebra(algebra, t) {
        Ok(standalone) => trace_form(&standalone).rank() == t.dim(),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusCertificate {
    pub torus: Subspace,
    /// The radical complement inside which no separable element outside the
    /// torus was found.
    pub self_centralizing_in: Option<Subspace>,
}

/// Greedy maximal torus inside the computed radical complement.
pub fn maximal_torus(algebra: &Algebra, seed: u64) -> Result<TorusCertificate> {
    let rad = radical(algebra)?;
    maximal_torus_with(algebra, &rad, seed)
}

fn maximal_torus_with(algebra: &Algebra, rad: &Subspace, seed: u64) -> Result<TorusCertificate> {
    let field = algebra.field();
    let one = algebra.one()?.clone();
    let complement = radical_complement_with(algebra, rad)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fast = ModAlgebra::new(algebra).ok();
    let mut torus = Subspace::span(field, algebra.dim(), [&one]);
    loop {
        let search = centralizer(algebra, &torus)?.intersection(&complement);
        if search.dim() == torus.dim() {
            break;
        }
        match find_separable(algebra, fast.as_ref(), &search, &torus, &mut rng)? {
            Some(t) => {
                let mut gens = torus.basis();
                gens.push(t);
                torus = associative_closure(algebra, &gens, true)?;
            }
            None => break,
        }
    }
    if !is_torus(algebra, &torus) {
        return Err(Error::VerificationFailed("greedy search produced a non-torus".into()));
    }
    Ok(TorusCertificate {
        torus,
        self_centralizing_in: Some(complement),
    })
}

/// Staged search for a separable element of `space` outside `torus`:
/// basis, pairwise sums, seeded random combinations, then (over small
/// finite fields) every element.
fn find_separable(
    algebra: &Algebra,
    fast: Option<&ModAlgebra>,
    space: &Subspace,
    torus: &Subspace,
    rng: &mut ChaCha8Rng,
) -> Result<Option<Element>> {
    let basis = space.basis();
    let accept = |x: &Element| -> Result<bool> {
        if torus.contains(x) {
            return Ok(false);
        }
        match fast {
            Some(m) => m.is_separable(&crate::finite::element_residues(x)),
            None => is_separable_element(algebra, x),
        }
    };
    for b in &basis {
        if accept(b)? {
            return Ok(Some(b.clone()));
        }
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = &basis[i] + &basis[j];
            if accept(&s)? {
                return Ok(Some(s));
            }
        }
    }
    let field = algebra.field();
    for _ in 0..RANDOM_CANDIDATES {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| random_scalar(field, rng)).collect();
        let x = space.combine(&coeffs);
        if accept(&x)? {
            return Ok(Some(x));
        }
    }
    if let Some(q) = field.order() {
        let count = (q as u128).checked_pow(basis.len() as u32);
        if count.is_some_and(|c| c <= EXHAUSTIVE_SEARCH_LIMIT) {
            for idx in 0..count.unwrap() {
                let mut rest = idx;
                let coeffs: Vec<Scalar> = (0..basis.len())
                    .map(|_| {
                        let d = (rest % q as u128) as u64;
                        rest /= q as u128;
                        field.residue(d)
                    })
                    .collect();
                let x = space.combine(&coeffs);
                if accept(&x)? {
                    return Ok(Some(x));
                }
            }
        }
    }
    Ok(None)
}

fn random_scalar(field: FieldSpec, rng: &mut ChaCha8Rng) -> Scalar {
    match field {
        FieldSpec::PrimeField(p) => field.residue(rng.random_range(0..p)),
        FieldSpec::Rationals => field.from_i64(rng.random_range(-3..=3)),
    }
}

/// Outcome of the direct Cartan test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDiagnostics {
    pub bracket_closed: bool,
    pub lie_nilpotent: bool,
    pub self_normalizing: bool,
    pub multiplication_closed: bool,
    pub contains_one: bool,
    pub nilpotency_class: Option<usize>,
}

impl CartanDiagnostics {
    /// Nilpotent subalgebra of A° equal to its own normalizer.
    pub fn is_cartan(&self) -> bool {
        self.bracket_closed && self.lie_nilpotent && self.self_normalizing
    }

    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("bracket_closed", self.bracket_closed),
            ("lie_nilpotent", self.lie_nilpotent),
            ("normalizer_equals_self", self.self_normalizing),
            ("multiplication_closed", self.multiplication_closed),
            ("contains_one", self.contains_one),
        ]
    }
}

pub fn verify_cartan(algebra: &Algebra, c: &Subspace) -> CartanDiagnostics {
    let mut d = CartanDiagnostics {
        bracket_closed: false,
        lie_nilpotent: false,
        self_normalizing: false,
        multiplication_closed: false,
        contains_one: false,
        nilpotency_class: None,
    };
    if c.ambient_dim() != algebra.dim() || c.field() != algebra.field() {
        return d;
    }
    d.multiplication_closed = is_multiplication_closed(algebra, c);
    d.contains_one = algebra.one().map(|u| c.contains(u)).unwrap_or(false);
    d.bracket_closed = is_lie_closed(algebra, c);
    if !d.bracket_closed {
        return d;
    }
    let series = lower_central_series(algebra, c).expect("bracket-closed");
    d.lie_nilpotent = series.nilpotent;
    d.nilpotency_class = series.class;
    d.self_normalizing = lie_normalizer(algebra, c).map(|n| &n == c).unwrap_or(false);
    d
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanCertificate {
    pub cartan: Subspace,
    pub torus: TorusCertificate,
    pub nilpotency_class: usize,
    /// `C_{rad(A)}(T)`; the Cartan subalgebra is its direct sum with `T`.
    pub radical_part: Subspace,
    pub diagnostics: CartanDiagnostics,
}

impl CartanCertificate {
    pub fn checks(&self, algebra: &Algebra) -> Vec<(&'static str, bool)> {
        let mut out = self.diagnostics.checks();
        out.push((
            "equals_centralizer_of_torus",
            centralizer(algebra, &self.torus.torus).is_ok_and(|c| c == self.cartan),
        ));
        out.push((
            "radical_part_plus_torus",
            self.radical_part.intersection(&self.torus.torus).is_zero()
                && self.radical_part.sum(&self.torus.torus) == self.cartan,
        ));
        out
    }
}

/// `C_A(T)` for the greedy maximal torus `T`, with its certificate.
pub fn cartan_subalgebra(algebra: &Algebra, seed: u64) -> Result<CartanCertificate> {
    let rad = radical(algebra)?;
    let torus = maximal_torus_with(algebra, &rad, seed)?;
    let cartan = centralizer(algebra, &torus.torus)?;
    let radical_part = cartan.intersection(&rad);
    let diagnostics = verify_cartan(algebra, &cartan);
    if !diagnostics.is_cartan() {
        return Err(Error::VerificationFailed(
            "centralizer of the maximal torus is not a Cartan subalgebra".into(),
        ));
    }
    if !radical_part.intersection(&torus.torus).is_zero() || radical_part.sum(&torus.torus) != cartan {
        return Err(Error::VerificationFailed(
            "Cartan subalgebra is not C_rad(T) + T".into(),
        ));
    }
    Ok(CartanCertificate {
        nilpotency_class: diagnostics.nilpotency_class.unwrap_or(0),
        cartan,
        torus,
        radical_part,
        diagnostics,
    })
}

/// Dimension of a Cartan subalgebra of a central simple algebra.
pub fn index_of_central_simple(algebra: &Algebra) -> Result<usize> {
    let one = algebra.one()?;
    if !radical(algebra)?.is_zero() {
        return Err(Error::NotCentralSimple("radical is nonzero".into()));
    }
    let z = center(algebra);
    if z.dim() != 1 || !z.contains(one) {
        return Err(Error::NotCentralSimple(format!("center has dimension {}", z.dim())));
    }
    for (i, e) in algebra.basis_elements().iter().enumerate() {
        if !generated_ideal(algebra, e).is_full() {
            return Err(Error::NotCentralSimple(format!(
                "basis vector {i} generates a proper ideal"
            )));
        }
    }
    Ok(cartan_subalgebra(algebra, 0)?.cartan.dim())
}

/// `rad(A) ⊕ T`.
pub fn soluble_hull(algebra: &Algebra, torus: &TorusCertificate) -> Result<Subspace> {
    if !is_torus(algebra, &torus.torus) {
        return Err(Error::NotTorus);
    }
    let hull = radical(algebra)?.sum(&torus.torus);
    if !is_multiplication_closed(algebra, &hull) {
        return Err(Error::VerificationFailed("rad(A) + T is not a subalgebra".into()));
    }
    Ok(hull)
}

/// The five equivalent conditions for `A∘` to be nilpotent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieNilpotencyReport {
    /// `A∘` is nilpotent.
    pub lie_nilpotent: bool,
    pub lie_class: Option<usize>,
    /// The computed radical complement is central.
    pub central_complement: bool,
    /// Soluble, and the complement is fixed by every probed `1 + r`.
    pub soluble_unique_complement: bool,
    /// The separable elements form a radical complement.
    pub separable_form_complement: Option<bool>,
    /// The separable elements form a subspace.
    pub separable_form_subspace: Option<bool>,
    /// Whether the conjugation probes covered all of `1 + rad(A)`.
    pub conjugation_exhaustive: bool,
    pub skipped: Option<String>,
}

impl LieNilpotencyReport {
    /// Every computed verdict agrees.
    pub fn consistent(&self) -> bool {
        let v = self.lie_nilpotent;
        v == self.central_complement
            && v == self.soluble_unique_complement
            && self.separable_form_complement.is_none_or(|x| x == v)
            && self.separable_form_subspace.is_none_or(|x| x == v)
    }
}

/// Probes for the conjugation-uniqueness test: all of `rad` when small,
/// otherwise its basis, pairwise sums and seeded random elements.
fn radical_probes(algebra: &Algebra, rad: &Subspace, seed: u64) -> (Vec<Element>, bool) {
    let field = algebra.field();
    let basis = rad.basis();
    if let Some(q) = field.order() {
        if let Some(count) = (q as u128)
            .checked_pow(basis.len() as u32)
            .filter(|&c| c <= EXHAUSTIVE_SEARCH_LIMIT)
        {
            let all = (0..count)
                .map(|idx| {
                    let mut rest = idx;
                    let coeffs: Vec<Scalar> = (0..basis.len())
                        .map(|_| {
                            let d = (rest % q as u128) as u64;
                            rest /= q as u128;
                            field.residue(d)
                        })
                        .collect();
                    rad.combine(&coeffs)
                })
                .collect();
            return (all, true);
        }
    }
    let mut probes = basis.clone();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            probes.push(&basis[i] + &basis[j]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let coeffs: Vec<Scalar> = (0..basis.len()).map(|_| random_scalar(field, &mut rng)).collect();
        probes.push(rad.combine(&coeffs));
    }
    (probes, false)
}

pub fn lie_nilpotency_report(algebra: &Algebra, seed: u64) -> Result<LieNilpotencyReport> {
    algebra.one()?;
    let series = lie_series_of_algebra(algebra);
    let rad = radical(algebra)?;
    let complement = radical_complement_with(algebra, &rad)?;
    let central_complement = complement
        .basis()
        .iter()
        .all(|c| algebra.basis_elements().iter().all(|x| algebra.bracket(c, x).is_zero()));
    let soluble = crate::constructions::quotient(algebra, &rad)?.algebra.is_commutative();
    let (probes, conjugation_exhaustive) = radical_probes(algebra, &rad, seed);
    let mut unique = soluble;
    if unique {
        for r in &probes {
            if conjugate_with_radical(algebra, &rad, &complement, r)? != complement {
                unique = false;
                break;
            }
        }
    }
    let mut report = LieNilpotencyReport {
        lie_nilpotent: series.nilpotent,
        lie_class: series.class,
        central_complement,
        soluble_unique_complement: unique,
        separable_form_complement: None,
        separable_form_subspace: None,
        conjugation_exhaustive,
        skipped: None,
    };
    match separable_set_verdicts(algebra, &rad) {
        Ok((complement_ok, subspace_ok)) => {
            report.separable_form_complement = Some(complement_ok);
            report.separable_form_subspace = Some(subspace_ok);
        }
        Err(e @ (Error::EnumerationTooLarge { .. } | Error::NotFiniteField)) => report.skipped = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    Ok(report)
}

/// Enumerates the separable elements and decides whether they form a
/// subspace and whether they form a radical complement.
pub fn separable_set_verdicts(algebra: &Algebra, rad: &Subspace) -> Result<(bool, bool)> {
    let m = ModAlgebra::new(algebra)?;
    let mut separable = Vec::new();
    for x in m.elements(REPORT_ENUMERATION_LIMIT)? {
        if m.is_separable(&x)? {
            separable.push(x);
        }
    }
    let elements: Vec<Element> = separable.iter().map(|x| m.to_element(x)).collect();
    let span = Subspace::span(algebra.field(), algebra.dim(), &elements);
    let span_size = (m.p() as u128).pow(span.dim() as u32);
    let is_subspace = span_size == separable.len() as u128;
    let is_complement = is_subspace
        && span.dim() + rad.dim() == algebra.dim()
        && span.intersection(rad).is_zero()
        && crate::constructions::is_unital_subalgebra(algebra, &span);
    Ok((is_complement, is_subspace))
}

/// Every separable element of a finite algebra is central.
pub fn separable_elements_central(algebra: &Algebra, limit: u128) -> Result<bool> {
    let m = ModAlgebra::new(algebra)?;
    let z = center(algebra);
    for x in m.elements(limit)? {
        if m.is_separable(&x)? && !z.contains(&m.to_element(&x)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conjugates of a Cartan subalgebra under `1 + r` for every probed `r`.
pub fn cartan_conjugates(algebra: &Algebra, c: &Subspace, seed: u64) -> Result<(Vec<Subspace>, bool)> {
    let rad = radical(algebra)?;
    let (probes, exhaustive) = radical_probes(algebra, &rad, seed);
    let mut out: Vec<Subspace> = Vec::new();
    for r in &probes {
        let s = conjugate_with_radical(algebra, &rad, c, r)?;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok((out, exhaustive))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{dihedral, group_algebra};
    use crate::presets;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn separability() {
        let kg = group_algebra(gf(3), &dihedral(3).unwrap());
        assert!(is_separable_element(&kg, kg.one().unwrap()).unwrap());
        assert!(!is_separable_element(&kg, &kg.basis(1)).unwrap());
        assert!(is_separable_element(&kg, &kg.basis(3)).unwrap());
        let dual = presets::dual_numbers(gf(3)).unwrap();
        assert!(!is_separable_element(&dual, &dual.basis(1)).unwrap());
    }

    #[test]
    fn torus_predicate() {
        let f = gf(3);
        let dual = presets::dual_numbers(f).unwrap();
        assert!(is_torus(&dual, &Subspace::coordinate(f, 2, &[0])));
        assert!(!is_torus(&dual, &Subspace::full(f, 2)));
        let kg = group_algebra(f, &dihedral(3).unwrap());
        assert!(is_torus(&kg, &Subspace::coordinate(f, 6, &[0, 3])));
        assert!(!is_torus(&kg, &Subspace::coordinate(f, 6, &[0, 1, 2])));
    }

    #[test]
    fn cartan_of_small_instances() {
        let m2 = presets::matrix_algebra(gf(3), 2).unwrap();
        let c = cartan_subalgebra(&m2, 0).unwrap();
        assert_eq!(c.cartan.dim(), 2);
        assert!(is_torus(&m2, &c.cartan));
        let kg = group_algebra(gf(3), &dihedral(3).unwrap());
        let c = cartan_subalgebra(&kg, 0).unwrap();
        assert_eq!(c.torus.torus, Subspace::coordinate(gf(3), 6, &[0, 3]));
        assert_eq!(c.cartan.dim(), 4);
        assert_eq!(c.radical_part.dim(), 2);
        assert!(c.checks(&kg).iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn verify_rejects_center_of_m2() {
        let f = gf(3);
        let m2 = presets::matrix_algebra(f, 2).unwrap();
        let d = verify_cartan(&m2, &Subspace::span(f, 4, [m2.one().unwrap()]));
        assert!(!d.is_cartan());
        assert!(verify_cartan(&m2, &Subspace::coordinate(f, 4, &[0, 3])).is_cartan());
    }

    #[test]
    fn index_and_hull() {
        assert_eq!(
            index_of_central_simple(&presets::matrix_algebra(gf(3), 2).unwrap()).unwrap(),
            2
        );
        assert_eq!(index_of_central_simple(&presets::quaternions_q()).unwrap(), 2);
        let kg = group_algebra(gf(3), &dihedral(3).unwrap());
        assert!(matches!(index_of_central_simple(&kg), Err(Error::NotCentralSimple(_))));
        let t = maximal_torus(&kg, 0).unwrap();
        assert!(soluble_hull(&kg, &t).unwrap().is_full());
        let m2 = presets::matrix_algebra(gf(3), 2).unwrap();
        let t = maximal_torus(&m2, 0).unwrap();
        assert_eq!(soluble_hull(&m2, &t).unwrap(), t.torus);
    }

    #[test]
    fn reports() {
        let dual = presets::dual_numbers(gf(3)).unwrap();
        let r = lie_nilpotency_report(&dual, 0).unwrap();
        assert!(r.lie_nilpotent && r.central_complement && r.soluble_unique_complement);
        assert_eq!(r.separable_form_complement, Some(true));
        assert_eq!(r.separable_form_subspace, Some(true));
        for a in [
            presets::matrix_algebra(gf(3), 2).unwrap(),
            group_algebra(gf(3), &dihedral(3).unwrap()),
        ] {
            let r = lie_nilpotency_report(&a, 0).unwrap();
            assert!(!r.lie_nilpotent && !r.central_complement && !r.soluble_unique_complement);
            assert_eq!(r.separable_form_complement, Some(false));
            assert_eq!(r.separable_form_subspace, Some(false));
        }
    }
}
