//! Univariate polynomials over the base field.
//!
//! Only what separability questions need: Euclidean gcd, formal derivative,
//! squarefreeness, and minimal polynomials of algebra elements. Over perfect
//! fields an element is separable iff its minimal polynomial is squarefree.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Coefficients lowest degree first, trailing zeros stripped.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { field, coeffs }
    }

    pub fn from_ints(field: FieldSpec, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: FieldSpec) -> Self {
        Polynomial { field, coeffs: vec![] }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// `t^k`
    pub fn monomial(field: FieldSpec, k: usize) -> Self {
        let mut c = vec![field.zero(); k + 1];
        c[k] = field.one();
        Polynomial { field, coeffs: c }
    }

    /// `t − a`
    pub fn linear(a: &Scalar) -> Self {
        let f = a.field();
        Self::new(f, vec![-a, f.one()])
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True iff the polynomial is `t^k` for some `k ≥ 0`.
    pub fn is_monomial(&self) -> bool {
        match self.coeffs.split_last() {
            Some((lead, rest)) => lead.is_one() && rest.iter().all(Scalar::is_zero),
            None => false,
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                Self::new(self.field, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Self::new(self.field, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j].add_product(a, b);
            }
        }
        Self::new(self.field, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); self.coeffs.len().saturating_sub(d).max(1)];
        while rem.len() > d && !rem.is_empty() {
            let shift = rem.len() - 1 - d;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                let neg = -&factor;
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i].add_product(&neg, c);
                }
                quot[shift] = factor;
            }
            rem.pop();
        }
        (Self::new(self.field, quot), Self::new(self.field, rem))
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| &self.field.from_i64(i as i64) * a)
            .collect();
        Self::new(self.field, c)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Evaluates the polynomial at an algebra element (Horner in `A`).
    pub fn eval_in(&self, algebra: &Algebra, x: &Element) -> Result<Element> {
        let one = algebra.one()?;
        let mut acc = algebra.zero();
        for c in self.coeffs.iter().rev() {
            acc = algebra.mul(&acc, x).add_scaled(c, one);
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{c}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.field != g.field {
        return Err(Error::FieldMismatch);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.div_rem(&b).1;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// `gcd(f, f′) = 1`.
pub fn is_squarefree(f: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(poly_gcd(f, &f.derivative())?.is_one())
}

/// The monic polynomial of least degree annihilating `x`, read off from the
/// first linear dependence in the Krylov sequence `1, x, x², …`.
pub fn minimal_polynomial(algebra: &Algebra, x: &Element) -> Result<Polynomial> {
    algebra.check_dim(x)?;
    let field = algebra.field();
    let n = algebra.dim();
    // Echelon rows of reduced powers, each carrying its expression in powers of x.
    let mut rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut power = algebra.one()?.clone();
    for k in 0..=n {
        let mut v = power.coords().to_vec();
        let mut combo = vec![field.zero(); k + 1];
        combo[k] = field.one();
        for (pivot, row, row_combo) in &rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let factor = -&v[*pivot];
            for (a, b) in v.iter_mut().zip(row) {
                a.add_product(&factor, b);
            }
            for (a, b) in combo.iter_mut().zip(row_combo) {
                a.add_product(&factor, b);
            }
        }
        match v.iter().position(|c| !c.is_zero()) {
            None => return Ok(Polynomial::new(field, combo)),
            Some(pivot) => {
                let inv = v[pivot].inv()?;
                v.iter_mut().for_each(|a| *a = &*a * &inv);
                combo.iter_mut().for_each(|a| *a = &*a * &inv);
                rows.push((pivot, v, combo));
            }
        }
        power = algebra.mul(&power, x);
    }
    Err(Error::VerificationFailed(
        "Krylov sequence did not become dependent within dim + 1 steps".into(),
    ))
}
