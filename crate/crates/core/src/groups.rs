//! Finite groups as Cayley tables, and their group algebras.
//!
//! Dihedral groups use the element order `1, a, …, a^{n−1}, b, ab, …, a^{n−1}b`,
//! i.e. `a^i b^j` sits at index `i + n·j`.

use std::collections::BTreeSet;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    names: Vec<String>,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(mul: Vec<Vec<usize>>, identity: usize, names: Vec<String>) -> Result<Self> {
        let order = mul.len();
        if order == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if mul
            .iter()
            .any(|row| row.len() != order || row.iter().any(|&x| x >= order))
        {
            return Err(Error::InvalidGroupTable("table is not square over 0..order".into()));
        }
        if identity >= order {
            return Err(Error::InvalidGroupTable("identity index out of range".into()));
        }
        let names = if names.len() == order {
            names
        } else if names.is_empty() {
            (0..order).map(|i| format!("g{i}")).collect()
        } else {
            return Err(Error::InvalidGroupTable("wrong number of element names".into()));
        };
        let flat: Vec<usize> = mul.into_iter().flatten().collect();
        let at = |a: usize, b: usize| flat[a * order + b];
        for g in 0..order {
            if at(identity, g) != g || at(g, identity) != g {
                return Err(Error::InvalidGroupTable(format!("identity fails on element {g}")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroupTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Self::with_inverses(flat, order, identity, names)
    }

    /// Skips the associativity scan: for tables restricted from an
    /// associative multiplication, such as unit groups.
    pub(crate) fn from_associative(flat: Vec<usize>, identity: usize, names: Vec<String>) -> Result<Self> {
        let order = names.len();
        Self::with_inverses(flat, order, identity, names)
    }

    fn with_inverses(flat: Vec<usize>, order: usize, identity: usize, names: Vec<String>) -> Result<Self> {
        let at = |a: usize, b: usize| flat[a * order + b];
        let mut inverses = Vec::with_capacity(order);
        for g in 0..order {
            match (0..order).find(|&h| at(g, h) == identity && at(h, g) == identity) {
                Some(h) => inverses.push(h),
                None => return Err(Error::InvalidGroupTable(format!("element {g} has no inverse"))),
            }
        }
        Ok(GroupTable {
            order,
            mul: flat,
            identity,
            inverses,
            names,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `a⁻¹ b⁻¹ a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ia = self.inverse(a);
        let ib = self.inverse(b);
        self.mul(self.mul(ia, ib), self.mul(a, b))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted element indices of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut members = vec![self.identity];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        if set.iter().any(|&x| x >= self.order) {
            return false;
        }
        let members: BTreeSet<usize> = set.iter().copied().collect();
        members.contains(&self.identity)
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| members.contains(&self.mul(a, b))))
    }

    /// Subgroup generated by all `[x, g]` with `x ∈ H`, `g ∈ K`.
    pub fn commutator_subgroup(&self, h: &[usize], k: &[usize]) -> Vec<usize> {
        let mut gens = BTreeSet::new();
        for &x in h {
            for &g in k {
                gens.insert(self.commutator(x, g));
            }
        }
        gens.remove(&self.identity);
        self.subgroup_generated(&gens.into_iter().collect::<Vec<_>>())
    }

    /// `G × H` with `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let n = self.order * other.order;
        let split = |x: usize| (x / other.order, x % other.order);
        let mul = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let ((g1, h1), (g2, h2)) = (split(x), split(y));
                        self.mul(g1, g2) * other.order + other.mul(h1, h2)
                    })
                    .collect()
            })
            .collect();
        let names = (0..n)
            .map(|x| {
                let (g, h) = split(x);
                format!("({},{})", self.names[g], other.names[h])
            })
            .collect();
        GroupTable::new(mul, self.identity * other.order + other.identity, names).expect("product of groups")
    }

    /// `|H|` is a power of `p` (the trivial group counts).
    pub fn is_p_subgroup(set: &[usize], p: u64) -> bool {
        let mut n = set.len() as u64;
        if p < 2 {
            return n == 1;
        }
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }
}

/// `D_{2n} = ⟨a, b | aⁿ = b² = 1, bab = a⁻¹⟩`.
pub fn dihedral(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let idx = |i: usize, j: usize| i % n + n * (j % 2);
    let mut mul = vec![vec![0; 2 * n]; 2 * n];
    for (x, row) in mul.iter_mut().enumerate() {
        let (i, j) = (x % n, x / n);
        for (y, out) in row.iter_mut().enumerate() {
            let (k, l) = (y % n, y / n);
            // a^i b^j a^k b^l = a^{i ± k} b^{j+l}
            let exp = if j == 0 { i + k } else { i + n - k };
            *out = idx(exp, j + l);
        }
    }
    let power = |i: usize| match i {
        0 => String::new(),
        1 => "a".to_string(),
        _ => format!("a^{i}"),
    };
    let names = (0..2 * n)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (_, 0) => power(i),
                _ => format!("{}b", power(i)),
            }
        })
        .collect();
    GroupTable::new(mul, 0, names)
}

/// `ℤ/n` with generator `g`.
pub fn cyclic(n: usize) -> Result<GroupTable> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let mul = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "g".to_string(),
            _ => format!("g^{i}"),
        })
        .collect();
    GroupTable::new(mul, 0, names)
}

/// `G′`, generated by all commutators.
pub fn derived_subgroup(g: &GroupTable) -> Vec<usize> {
    let all: Vec<usize> = (0..g.order()).collect();
    g.commutator_subgroup(&all, &all)
}

/// `KG` with the permutation tensor of the Cayley table as structure constants.
///
/// When `char K` divides `|G|` the algebra carries complement hints: the
/// subgroups generated by one or two elements whose order is prime to `p`,
/// in lexicographic order of their generators.
pub fn group_algebra(field: FieldSpec, g: &GroupTable) -> Algebra {
    let n = g.order();
    let alg = Algebra::from_products(
        field,
        n,
        |i, j| {
            let mut v = vec![field.zero(); n];
            v[g.mul(i, j)] = field.one();
            v
        },
        Some(Element::basis(field, n, g.identity())),
        g.names().to_vec(),
    )
    .expect("group algebras are associative and unital");
    let p = field.characteristic() as usize;
    if p == 0 || !n.is_multiple_of(p) {
        return alg;
    }
    let mut hints: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        for y in x..n {
            let h = g.subgroup_generated(&[x, y]);
            if !h.len().is_multiple_of(p) && !hints.contains(&h) {
                hints.push(h);
            }
        }
    }
    alg.with_complement_hints(hints)
}

/// `KG · Aug(KP)`, spanned by `g(x − 1)` for `g ∈ G`, `1 ≠ x ∈ P`.
pub fn augmentation_left_ideal(kg: &Algebra, g: &GroupTable, p: &[usize]) -> Result<Subspace> {
    if kg.dim() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: kg.dim(),
        });
    }
    if !g.is_subgroup(p) {
        return Err(Error::NotSubgroup);
    }
    let field = kg.field();
    let mut vs = Vec::new();
    for h in 0..g.order() {
        for &x in p {
            if x == g.identity() {
                continue;
            }
            let mut v = Element::basis(field, kg.dim(), g.mul(h, x)).into_coords();
            v[h] = &v[h] - &field.one();
            vs.push(Element::new(v));
        }
    }
    Ok(Subspace::span(field, kg.dim(), &vs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        let d6 = dihedral(3).unwrap();
        assert_eq!(d6.order(), 6);
        let (a, b) = (1, 3);
        assert_eq!(d6.element_order(a), 3);
        assert_eq!(d6.element_order(b), 2);
        // b a b = a⁻¹ = a²
        assert_eq!(d6.mul(d6.mul(b, a), b), 2);
        assert_eq!(d6.names()[4], "ab");
        assert!(!d6.is_abelian());
        assert!(dihedral(1).unwrap().is_abelian());
        assert!(dihedral(2).unwrap().is_abelian());
        assert_eq!(dihedral(5).unwrap().order(), 10);
        assert!(matches!(dihedral(0), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn cyclic_groups() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        let c2 = cyclic(2).unwrap();
        assert_eq!(c2.mul(1, 1), 0);
        let c4 = cyclic(4).unwrap();
        assert!((0..4).any(|g| c4.element_order(g) == 4));
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(derived_subgroup(&cyclic(6).unwrap()), vec![0]);
        assert_eq!(derived_subgroup(&dihedral(3).unwrap()), vec![0, 1, 2]);
        assert_eq!(derived_subgroup(&dihedral(5).unwrap()), vec![0, 1, 2, 3, 4]);
        // n even: ⟨a²⟩ of order n/2
        assert_eq!(derived_subgroup(&dihedral(6).unwrap()), vec![0, 2, 4]);
        assert_eq!(derived_subgroup(&dihedral(4).unwrap()), vec![0, 2]);
    }

    #[test]
    fn group_algebra_basics() {
        let f = FieldSpec::prime(3).unwrap();
        let d6 = dihedral(3).unwrap();
        let kg = group_algebra(f, &d6);
        assert_eq!(kg.dim(), 6);
        assert!(!kg.is_commutative());
        assert!(group_algebra(f, &cyclic(4).unwrap()).is_commutative());
        assert_eq!(kg.mul(&kg.basis(1), &kg.basis(3)), kg.basis(4));
        // (a − 1)² = a² − 2a + 1 = a² + a + 1 over GF(3)
        let am1 = kg.element(&[-1, 1, 0, 0, 0, 0]);
        assert_eq!(kg.mul(&am1, &am1), kg.element(&[1, 1, 1, 0, 0, 0]));
        let first_pair = kg.complement_hints().iter().find(|h| h.len() == 2).unwrap();
        assert_eq!(first_pair, &vec![0, 3]);
    }

    #[test]
    fn augmentation_ideals() {
        let f = FieldSpec::prime(3).unwrap();
        let d6 = dihedral(3).unwrap();
        let kg = group_algebra(f, &d6);
        assert!(augmentation_left_ideal(&kg, &d6, &[0]).unwrap().is_zero());
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(augmentation_left_ideal(&kg, &d6, &all).unwrap().dim(), 5);
        assert_eq!(augmentation_left_ideal(&kg, &d6, &[0, 1, 2]).unwrap().dim(), 4);
        assert!(matches!(
            augmentation_left_ideal(&kg, &d6, &[0, 1]),
            Err(Error::NotSubgroup)
        ));
    }

    #[test]
    fn rejects_bad_tables() {
        let not_group = vec![vec![0, 1], vec![1, 1]];
        assert!(GroupTable::new(not_group, 0, vec![]).is_err());
        let ragged = vec![vec![0, 1], vec![1]];
        assert!(GroupTable::new(ragged, 0, vec![]).is_err());
    }
}
