//! Radicals and Wedderburn–Malcev radical complements.
//!
//! Characteristic 0 uses Dickson's criterion: the radical is the kernel of
//! the form `(x, y) ↦ tr(L_{xy})`. Characteristic `p` uses the Rónyai /
//! Cohen–Ivanyos–Wales descent `A = I₋₁ ⊇ I₀ ⊇ … ⊇ I_l = rad(A)` where
//! `I_i = {x ∈ I_{i−1} : g_i(xy) = 0 ∀y}` and `g_i(z) = (tr(Z̃^{pⁱ}) mod p^{i+1}) / pⁱ`
//! for an integer lift `Z̃` of the left-multiplication matrix of `z`.
//!
//! Complements are lifted from the quotient along `rad ⊇ rad² ⊇ … ⊇ 0`,
//! solving one linear system for the multiplicativity defect at each level.

use crate::algebra::{Algebra, Element};
use crate::constructions::{
    is_ideal, is_multiplication_closed, is_unital_subalgebra, power_chain, quotient, subalgebra,
};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::linalg::Matrix;
use crate::poly::minimal_polynomial;
use crate::subspace::Subspace;

/// The Jacobson radical (equal to the nil radical here).
pub fn radical(algebra: &Algebra) -> Result<Subspace> {
    if !algebra.is_unital() {
        return radical_via_unitization(algebra);
    }
    match algebra.field() {
        FieldSpec::Rationals => Ok(trace_form_kernel(algebra)),
        FieldSpec::PrimeField(p) => ronyai_descent(algebra, p),
    }
}

/// `rad(A) = rad(A¹) ∩ A` for the Dorroh extension `A¹ = K ⊕ A`.
fn radical_via_unitization(algebra: &Algebra) -> Result<Subspace> {
    let field = algebra.field();
    let n = algebra.dim();
    let unit = Algebra::from_products(
        field,
        n + 1,
        |i, j| {
            let mut v = vec![field.zero(); n + 1];
            match (i, j) {
                (0, _) => v[j] = field.one(),
                (_, 0) => v[i] = field.one(),
                _ => {
                    for k in 0..n {
                        v[k + 1] = algebra.structure_constant(i - 1, j - 1, k).clone();
                    }
                }
            }
            v
        },
        Some(Element::basis(field, n + 1, 0)),
        vec![],
    )?;
    let rad = radical(&unit)?;
    let vs: Vec<Element> = rad
        .basis()
        .into_iter()
        .map(|v| {
            debug_assert!(v.coords()[0].is_zero());
            Element::new(v.coords()[1..].to_vec())
        })
        .collect();
    Ok(Subspace::span(field, n, &vs))
}

/// Traces of the left-multiplication maps of the basis vectors.
fn basis_traces(algebra: &Algebra) -> Vec<Scalar> {
    let n = algebra.dim();
    (0..n)
        .map(|k| {
            let mut t = algebra.field().zero();
            for m in 0..n {
                t = &t + algebra.structure_constant(k, m, m);
            }
            t
        })
        .collect()
}

/// Kernel of `(x, y) ↦ tr(L_{xy})`.
pub fn trace_form_kernel(algebra: &Algebra) -> Subspace {
    let form = trace_form(algebra);
    let kernel: Vec<Element> = form.kernel().into_iter().map(Element::new).collect();
    Subspace::span(algebra.field(), algebra.dim(), &kernel)
}

/// Gram matrix of `(x, y) ↦ tr(L_{xy})` on the basis.
pub fn trace_form(algebra: &Algebra) -> Matrix {
    let n = algebra.dim();
    let traces = basis_traces(algebra);
    let mut g = Matrix::zeros(algebra.field(), n, n);
    for i in 0..n {
        for j in 0..n {
            let mut acc = algebra.field().zero();
            for (k, t) in traces.iter().enumerate() {
                acc.add_product(algebra.structure_constant(i, j, k), t);
            }
            g[(i, j)] = acc;
        }
    }
    g
}

fn ronyai_descent(algebra: &Algebra, p: u64) -> Result<Subspace> {
    let n = algebra.dim();
    let field = algebra.field();
    // l = ⌊log_p n⌋
    let mut l = 0u32;
    while (p as u128).pow(l + 1) <= n as u128 {
        l += 1;
    }
    let basis = algebra.basis_elements();
    let mut current = Subspace::full(field, n);
    for i in 0..=l {
        let members = current.basis();
        if members.is_empty() {
            break;
        }
        let mut system = Matrix::zeros(field, basis.len(), members.len());
        for (k, x) in members.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let xb = algebra.mul(x, b);
                system[(j, k)] = field.residue(lifted_trace_functional(algebra, &xb, p, i)?);
            }
        }
        let next: Vec<Element> = system.kernel().iter().map(|c| current.combine(c)).collect();
        current = Subspace::span(field, n, &next);
    }
    Ok(current)
}

/// `g_i(z) = (tr(Z̃^{pⁱ}) mod p^{i+1}) / pⁱ` as a residue mod `p`.
fn lifted_trace_functional(algebra: &Algebra, z: &Element, p: u64, i: u32) -> Result<u64> {
    let n = algebra.dim();
    let modulus = (p as u128).pow(i + 1);
    let lz = algebra.left_mul_matrix(z);
    let lift: Vec<u128> = (0..n * n)
        .map(|x| lz[(x / n, x % n)].residue_value().expect("prime field") as u128)
        .collect();
    let power = int_matrix_pow(&lift, n, (p as u128).pow(i), modulus);
    let trace = (0..n).fold(0u128, |acc, d| (acc + power[d * n + d]) % modulus);
    let scale = (p as u128).pow(i);
    if trace % scale != 0 {
        return Err(Error::VerificationFailed(format!(
            "trace of p^{i}-th power not divisible by p^{i}"
        )));
    }
    Ok((trace / scale) as u64)
}

fn int_matrix_mul(a: &[u128], b: &[u128], n: usize, modulus: u128) -> Vec<u128> {
    let mut out = vec![0u128; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
            }
        }
    }
    out
}

fn int_matrix_pow(m: &[u128], n: usize, mut e: u128, modulus: u128) -> Vec<u128> {
    let mut acc: Vec<u128> = (0..n * n).map(|x| u128::from(x / n == x % n) % modulus).collect();
    let mut base: Vec<u128> = m.iter().map(|x| x % modulus).collect();
    while e > 0 {
        if e & 1 == 1 {
            acc = int_matrix_mul(&acc, &base, n, modulus);
        }
        e >>= 1;
        if e > 0 {
            base = int_matrix_mul(&base, &base, n, modulus);
        }
    }
    acc
}

/// Named a-posteriori checks on a claimed radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalChecks {
    pub is_ideal: bool,
    pub is_nilpotent: bool,
    pub quotient_semisimple: bool,
}

impl RadicalChecks {
    pub fn all(&self) -> bool {
        self.is_ideal && self.is_nilpotent && self.quotient_semisimple
    }
}

/// The quotient check reruns the radical computation on `A/rad(A)`.
pub fn verify_radical(algebra: &Algebra, rad: &Subspace) -> Result<RadicalChecks> {
    let is_ideal = is_ideal(algebra, rad);
    let is_nilpotent = power_chain(algebra, rad).is_some();
    let quotient_semisimple = is_ideal && radical(&quotient(algebra, rad)?.algebra)?.is_zero();
    Ok(RadicalChecks {
        is_ideal,
        is_nilpotent,
        quotient_semisimple,
    })
}

/// `x` is nilpotent iff its minimal polynomial is `t^k`.
pub fn is_nilpotent_element(algebra: &Algebra, x: &Element) -> Result<bool> {
    algebra.check_dim(x)?;
    if !algebra.is_unital() {
        let mut acc = x.clone();
        for _ in 0..algebra.dim() {
            acc = algebra.mul(&acc, x);
        }
        return Ok(acc.is_zero());
    }
    Ok(minimal_polynomial(algebra, x)?.is_monomial())
}

/// A unital subalgebra `C` with `C ⊕ rad(A) = A`.
///
/// Preferred candidates attached to the algebra (see
/// [`Algebra::with_complement_hints`]) are returned when one of them is a
/// complement; otherwise a complement is lifted from `A/rad(A)`.
pub fn radical_complement(algebra: &Algebra) -> Result<Subspace> {
    let rad = radical(algebra)?;
    radical_complement_with(algebra, &rad)
}

/// [`radical_complement`] with a precomputed radical.
pub fn radical_complement_with(algebra: &Algebra, rad: &Subspace) -> Result<Subspace> {
    let field = algebra.field();
    let n = algebra.dim();
    algebra.one()?;
    if rad.is_zero() {
        return Ok(Subspace::full(field, n));
    }
    for hint in algebra.complement_hints() {
        let s = Subspace::coordinate(field, n, hint);
        if is_complement(algebra, rad, &s) {
            return Ok(s);
        }
    }
    lift_complement(algebra, rad)
}

fn is_complement(algebra: &Algebra, rad: &Subspace, s: &Subspace) -> bool {
    s.dim() + rad.dim() == algebra.dim() && s.intersection(rad).is_zero() && is_unital_subalgebra(algebra, s)
}

fn lift_complement(algebra: &Algebra, rad: &Subspace) -> Result<Subspace> {
    let field = algebra.field();
    let n = algebra.dim();
    let chain =
        power_chain(algebra, rad).ok_or_else(|| Error::VerificationFailed("radical is not nilpotent".into()))?;
    let comp = rad.complement_indices();
    let d = comp.len();
    let mut w: Vec<Element> = comp.iter().map(|&c| algebra.basis(c)).collect();
    // structure constants of A/rad on the images of w
    let c: Vec<Vec<Vec<Scalar>>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let r = rad.reduce(algebra.mul(&w[i], &w[j]).coords());
                    comp.iter().map(|&k| r[k].clone()).collect()
                })
                .collect()
        })
        .collect();
    let defect = |w: &[Element], i: usize, j: usize| -> Element {
        let mut v = algebra.mul(&w[i], &w[j]);
        for (k, ck) in c[i][j].iter().enumerate() {
            v = v.add_scaled(&-ck, &w[k]);
        }
        v
    };
    for level in chain.windows(2) {
        let (rm, rnext) = (&level[0], &level[1]);
        let defects: Vec<Element> = (0..d * d).map(|ij| defect(&w, ij / d, ij % d)).collect();
        if defects.iter().all(|v| rnext.contains(v)) {
            continue;
        }
        let rbasis = rm.basis();
        let u = rbasis.len();
        let mut system = Matrix::zeros(field, d * d * n, d * u);
        let mut rhs = Vec::with_capacity(d * d * n);
        for i in 0..d {
            for j in 0..d {
                let row0 = (i * d + j) * n;
                for t in 0..d {
                    for (s, r) in rbasis.iter().enumerate() {
                        // ∂/∂δ_t of w_i δ_j + δ_i w_j − Σ_k c_ijk δ_k
                        let mut v = algebra.zero();
                        if j == t {
                            v = &v + &algebra.mul(&w[i], r);
                        }
                        if i == t {
                            v = &v + &algebra.mul(r, &w[j]);
                        }
                        v = v.add_scaled(&-&c[i][j][t], r);
                        for (e, val) in rnext.reduce(v.coords()).into_iter().enumerate() {
                            system[(row0 + e, t * u + s)] = val;
                        }
                    }
                }
                rhs.extend(rnext.reduce(defects[i * d + j].coords()).into_iter().map(|x| -x));
            }
        }
        let y = system
            .solve(&rhs)
            .ok_or_else(|| Error::VerificationFailed("complement lifting system is inconsistent".into()))?;
        for (t, wt) in w.iter_mut().enumerate() {
            let delta = rm
                .basis()
                .iter()
                .enumerate()
                .fold(algebra.zero(), |acc, (s, r)| acc.add_scaled(&y[t * u + s], r));
            *wt = &*wt + &delta;
        }
    }
    if (0..d * d).any(|ij| !defect(&w, ij / d, ij % d).is_zero()) {
        return Err(Error::VerificationFailed(
            "lifted complement is not multiplicative".into(),
        ));
    }
    let s = Subspace::span(field, n, &w);
    if !is_complement(algebra, rad, &s) {
        return Err(Error::VerificationFailed(
            "lifted subspace is not a unital complement".into(),
        ));
    }
    Ok(s)
}

/// `rad(A)` together with a radical complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalDecomposition {
    pub radical: Subspace,
    pub complement: Subspace,
}

impl RadicalDecomposition {
    pub fn compute(algebra: &Algebra) -> Result<Self> {
        let radical = radical(algebra)?;
        let complement = radical_complement_with(algebra, &radical)?;
        Ok(RadicalDecomposition { radical, complement })
    }

    /// Direct sum, unital subalgebra, nilpotent radical.
    pub fn invariants_hold(&self, algebra: &Algebra) -> bool {
        self.radical.intersection(&self.complement).is_zero()
            && self.radical.dim() + self.complement.dim() == algebra.dim()
            && is_unital_subalgebra(algebra, &self.complement)
            && power_chain(algebra, &self.radical).is_some()
    }
}

/// `A/rad(A)` is commutative.
pub fn is_soluble(algebra: &Algebra) -> Result<bool> {
    let rad = radical(algebra)?;
    Ok(quotient(algebra, &rad)?.algebra.is_commutative())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reducedness {
    Reduced,
    NotReduced,
    /// Non-commutative semisimple part over ℚ: could be a sum of division algebras.
    Undetermined,
}

impl Reducedness {
    pub fn as_str(&self) -> &'static str {
        match self {
            Reducedness::Reduced => "reduced",
            Reducedness::NotReduced => "not_reduced",
            Reducedness::Undetermined => "undetermined",
        }
    }
}

/// `rad(A) = nil(A)`, decided through the commutativity of `A/rad(A)`.
pub fn is_reduced(algebra: &Algebra) -> Result<Reducedness> {
    let commutative = is_soluble(algebra)?;
    Ok(match (commutative, algebra.field().is_finite()) {
        (true, _) => Reducedness::Reduced,
        (false, true) => Reducedness::NotReduced,
        (false, false) => Reducedness::Undetermined,
    })
}

/// `(1 + r)⁻¹ S (1 + r)` for `r ∈ rad(A)`.
pub fn conjugate_subalgebra(algebra: &Algebra, s: &Subspace, r: &Element) -> Result<Subspace> {
    let rad = radical(algebra)?;
    conjugate_with_radical(algebra, &rad, s, r)
}

/// [`conjugate_subalgebra`] with a precomputed radical.
pub fn conjugate_with_radical(algebra: &Algebra, rad: &Subspace, s: &Subspace, r: &Element) -> Result<Subspace> {
    algebra.check_dim(r)?;
    if !rad.contains(r) {
        return Err(Error::NotInRadical);
    }
    let one = algebra.one()?;
    let u = one + r;
    let u_inv = unipotent_inverse(algebra, r)?;
    let image: Vec<Element> = s
        .basis()
        .iter()
        .map(|x| algebra.mul(&algebra.mul(&u_inv, x), &u))
        .collect();
    Ok(Subspace::span(algebra.field(), algebra.dim(), &image))
}

/// `(1 + r)⁻¹ = Σ_k (−r)^k` for nilpotent `r`.
pub fn unipotent_inverse(algebra: &Algebra, r: &Element) -> Result<Element> {
    let neg = -r;
    let mut term = algebra.one()?.clone();
    let mut sum = term.clone();
    for _ in 0..algebra.dim() {
        term = algebra.mul(&term, &neg);
        if term.is_zero() {
            return Ok(sum);
        }
        sum = &sum + &term;
    }
    Err(Error::NotInRadical)
}

/// `rad(T)` of a subalgebra `T`, expressed in ambient coordinates.
pub fn radical_of_subalgebra(algebra: &Algebra, t: &Subspace) -> Result<Subspace> {
    if !is_multiplication_closed(algebra, t) {
        return Err(Error::VerificationFailed("not a subalgebra".into()));
    }
    let standalone = subalgebra(algebra, t)?;
    Ok(radical(&standalone)?.embed_into(t))
}
