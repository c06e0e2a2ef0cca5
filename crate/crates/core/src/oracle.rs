//! Brute-force ground truth for tiny algebras over GF(2) and GF(3).

use crate::algebra::{Algebra, Element};
use crate::constructions::is_ideal;
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::finite::ModAlgebra;
use crate::lie::{is_lie_closed, lie_normalizer, lower_central_series};
use crate::subspace::Subspace;

/// Largest ambient dimension accepted by the scans.
pub const MAX_ORACLE_DIM: usize = 4;

/// A split of `{1, …, n}` into two nonempty increasing sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

/// All ordered bipartitions `(α, β)` of `{1, …, n}`; there are `2ⁿ − 2`.
pub fn ordered_bipartitions(n: usize) -> Result<Vec<Bipartition>> {
    if !(2..usize::BITS as usize).contains(&n) {
        return Err(Error::InvalidN(n));
    }
    Ok((1..(1usize << n) - 1)
        .map(|mask| {
            let (alpha, beta) = (1..=n).partition(|i| mask >> (i - 1) & 1 == 1);
            Bipartition { alpha, beta }
        })
        .collect())
}

fn check_bounds(algebra: &Algebra) -> Result<()> {
    match algebra.field() {
        FieldSpec::PrimeField(2 | 3) if algebra.dim() <= MAX_ORACLE_DIM => Ok(()),
        _ => Err(Error::TooLarge),
    }
}

/// Every subspace of `Kⁿ`, by pivot profile and free-entry assignment.
pub fn enumerate_subspaces(field: FieldSpec, n: usize) -> Result<Vec<Subspace>> {
    let q = match field {
        FieldSpec::PrimeField(p @ (2 | 3)) if n <= MAX_ORACLE_DIM => p,
        _ => return Err(Error::TooLarge),
    };
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let pivots: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        // free slots: (row r, column c) with c > pivot r and c not a pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| (pc + 1..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        for assignment in 0..q.pow(free.len() as u32) {
            let mut rows = vec![vec![field.zero(); n]; pivots.len()];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = field.one();
            }
            let mut rest = assignment;
            for &(r, c) in &free {
                rows[r][c] = field.residue(rest % q);
                rest /= q;
            }
            out.push(Subspace::from_rows(field, n, rows));
        }
    }
    Ok(out)
}

/// Every subspace that is bracket-closed, Lie-nilpotent and self-normalizing.
pub fn enumerate_cartans_bruteforce(algebra: &Algebra) -> Result<Vec<Subspace>> {
    check_bounds(algebra)?;
    let mut out = Vec::new();
    for s in enumerate_subspaces(algebra.field(), algebra.dim())? {
        if s.is_zero() || !is_lie_closed(algebra, &s) {
            continue;
        }
        if !lower_central_series(algebra, &s)?.nilpotent {
            continue;
        }
        if lie_normalizer(algebra, &s)? == s {
            out.push(s);
        }
    }
    Ok(out)
}

/// The largest two-sided ideal consisting of nilpotent elements.
pub fn radical_bruteforce(algebra: &Algebra) -> Result<Subspace> {
    check_bounds(algebra)?;
    let m = ModAlgebra::new(algebra)?;
    let q = m.p();
    let mut best = Subspace::zero(algebra.field(), algebra.dim());
    for s in enumerate_subspaces(algebra.field(), algebra.dim())? {
        if s.dim() <= best.dim() || !is_ideal(algebra, &s) {
            continue;
        }
        let all_nilpotent = (0..q.pow(s.dim() as u32)).all(|idx| {
            let mut rest = idx;
            let coeffs: Vec<Scalar> = (0..s.dim())
                .map(|_| {
                    let d = rest % q;
                    rest /= q;
                    algebra.field().residue(d)
                })
                .collect();
            m.is_nilpotent(&crate::finite::element_residues(&s.combine(&coeffs)))
        });
        if all_nilpotent {
            best = s;
        }
    }
    Ok(best)
}

/// Every element of a subspace over a small finite field.
pub fn subspace_elements(s: &Subspace) -> Result<Vec<Element>> {
    let q = s.field().order().ok_or(Error::NotFiniteField)?;
    let count = (q as u128)
        .checked_pow(s.dim() as u32)
        .filter(|&c| c <= 1 << 16)
        .ok_or(Error::TooLarge)?;
    Ok((0..count)
        .map(|idx| {
            let mut rest = idx;
            let coeffs: Vec<Scalar> = (0..s.dim())
                .map(|_| {
                    let d = (rest % q as u128) as u64;
                    rest /= q as u128;
                    s.field().residue(d)
                })
                .collect();
            s.combine(&coeffs)
        })
        .collect())
}
