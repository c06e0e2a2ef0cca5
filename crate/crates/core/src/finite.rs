//! Machine-word arithmetic for algebras over GF(p), used wherever every
//! element of a small algebra has to be visited.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// Structure constants reduced to residues, with sparse product lists.
#[derive(Clone, Debug)]
pub struct ModAlgebra {
    p: u64,
    n: usize,
    products: Vec<Vec<(usize, u64)>>,
    one: Option<Vec<u64>>,
}

impl ModAlgebra {
    pub fn new(algebra: &Algebra) -> Result<Self> {
        let p = match algebra.field() {
            FieldSpec::PrimeField(p) => p,
            FieldSpec::Rationals => return Err(Error::NotFiniteField),
        };
        let n = algebra.dim();
        let products = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = algebra
                            .structure_constant(ij / n, ij % n, k)
                            .residue_value()
                            .unwrap_or(0);
                        (c != 0).then_some((k, c))
                    })
                    .collect()
            })
            .collect();
        let one = algebra.one().ok().map(residues);
        Ok(ModAlgebra { p, n, products, one })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Result<&[u64]> {
        self.one.as_deref().ok_or(Error::NotUnital)
    }

    /// `p^dim`, or `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.p as u128).checked_pow(self.n as u32)
    }

    /// `size()` when it does not exceed `limit`.
    pub fn checked_size(&self, limit: u128) -> Result<u128> {
        match self.size() {
            Some(s) if s <= limit => Ok(s),
            Some(s) => Err(Error::EnumerationTooLarge { size: s, limit }),
            None => Err(Error::EnumerationTooLarge { size: u128::MAX, limit }),
        }
    }

    /// Base-`p` digits of `index`, coordinate 0 least significant.
    pub fn decode(&self, mut index: u128) -> Vec<u64> {
        let mut v = vec![0; self.n];
        for c in v.iter_mut() {
            *c = (index % self.p as u128) as u64;
            index /= self.p as u128;
        }
        v
    }

    pub fn encode(&self, x: &[u64]) -> u128 {
        x.iter().rev().fold(0u128, |acc, &c| acc * self.p as u128 + c as u128)
    }

    pub fn to_element(&self, x: &[u64]) -> Element {
        let f = FieldSpec::PrimeField(self.p);
        Element::new(x.iter().map(|&c| f.residue(c)).collect())
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let (n, p) = (self.n, self.p);
        let mut out = vec![0u64; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = xi * yj % p;
                for &(k, c) in &self.products[i * n + j] {
                    out[k] = (out[k] + s * c) % p;
                }
            }
        }
        out
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| (a + self.p - b) % self.p).collect()
    }

    /// Row-major matrix of `y ↦ xy` acting on coordinates.
    pub fn left_mul_matrix(&self, x: &[u64]) -> Vec<u64> {
        let n = self.n;
        let mut m = vec![0u64; n * n];
        for j in 0..n {
            let mut e = vec![0u64; n];
            e[j] = 1;
            for (i, v) in self.mul(x, &e).into_iter().enumerate() {
                m[i * n + j] = v;
            }
        }
        m
    }

    pub fn is_unit(&self, x: &[u64]) -> bool {
        rank_mod(self.left_mul_matrix(x), self.n, self.n, self.p) == self.n
    }

    pub fn is_nilpotent(&self, x: &[u64]) -> bool {
        let mut acc = x.to_vec();
        for _ in 0..self.n {
            if acc.iter().all(|&c| c == 0) {
                return true;
            }
            acc = self.mul(&acc, x);
        }
        acc.iter().all(|&c| c == 0)
    }

    /// Monic minimal polynomial, lowest degree first.
    pub fn minimal_polynomial(&self, x: &[u64]) -> Result<Vec<u64>> {
        let (n, p) = (self.n, self.p);
        let one = self.one()?.to_vec();
        let mut rows: Vec<(Vec<u64>, Vec<u64>, usize)> = Vec::new();
        let mut power = one;
        for k in 0..=n {
            let mut v = power.clone();
            let mut combo = vec![0u64; n + 2];
            combo[k] = 1;
            for (r, c, piv) in &rows {
                let f = v[*piv];
                if f != 0 {
                    for (a, b) in v.iter_mut().zip(r) {
                        *a = (*a + (p - f) * b) % p;
                    }
                    for (a, b) in combo.iter_mut().zip(c) {
                        *a = (*a + (p - f) * b) % p;
                    }
                }
            }
            match v.iter().position(|&c| c != 0) {
                None => {
                    combo.truncate(k + 1);
                    return Ok(combo);
                }
                Some(piv) => {
                    let inv = inv_mod(v[piv], p);
                    v.iter_mut().for_each(|a| *a = *a * inv % p);
                    combo.iter_mut().for_each(|a| *a = *a * inv % p);
                    rows.push((v, combo, piv));
                }
            }
            power = self.mul(&power, x);
        }
        Err(Error::VerificationFailed("minimal polynomial exceeds dimension".into()))
    }

    pub fn is_separable(&self, x: &[u64]) -> Result<bool> {
        let f = self.minimal_polynomial(x)?;
        let df = derivative_mod(&f, self.p);
        Ok(gcd_mod(f, df, self.p).len() == 1)
    }

    /// Every element, in index order.
    pub fn elements(&self, limit: u128) -> Result<impl Iterator<Item = Vec<u64>> + '_> {
        let size = self.checked_size(limit)?;
        Ok((0..size).map(move |i| self.decode(i)))
    }
}

fn residues(x: &Element) -> Vec<u64> {
    x.coords().iter().map(|c| c.residue_value().unwrap_or(0)).collect()
}

/// Coordinates of a GF(p) element as residues.
pub fn element_residues(x: &Element) -> Vec<u64> {
    residues(x)
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub fn rank_mod(mut m: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(r) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        for k in 0..cols {
            m.swap(r * cols + k, rank * cols + k);
        }
        let inv = inv_mod(m[rank * cols + c], p);
        for k in 0..cols {
            m[rank * cols + k] = m[rank * cols + k] * inv % p;
        }
        for r2 in 0..rows {
            let f = m[r2 * cols + c];
            if r2 != rank && f != 0 {
                for k in 0..cols {
                    m[r2 * cols + k] = (m[r2 * cols + k] + (p - f) * m[rank * cols + k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn derivative_mod(f: &[u64], p: u64) -> Vec<u64> {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (i as u64 % p) * c % p)
            .collect(),
    )
}

fn rem_mod(mut f: Vec<u64>, g: &[u64], p: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let inv = inv_mod(g[dg], p);
    while f.len() > dg {
        let lead = f[f.len() - 1] * inv % p;
        let shift = f.len() - 1 - dg;
        for (i, &c) in g.iter().enumerate() {
            f[shift + i] = (f[shift + i] + (p - lead) * c % p) % p;
        }
        f = trim(f);
    }
    f
}

/// Polynomial gcd over GF(p), not normalized; the empty vector is zero.
fn gcd_mod(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem_mod(a, &b, p);
        a = b;
        b = r;
    }
    a
}
