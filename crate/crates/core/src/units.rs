//! Unit groups of small algebras over GF(p), by exhaustive enumeration.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::finite::{element_residues, ModAlgebra};
use crate::groups::GroupTable;
use crate::radical::{radical, radical_complement_with};

/// Largest `|K|^dim` that is enumerated.
pub const ENUMERATION_LIMIT: u128 = 1 << 16;
/// Largest unit group for which a Cayley table is built.
pub const UNIT_TABLE_LIMIT: u128 = 4096;

#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub group: GroupTable,
    /// `embedding[g]` is the unit with group index `g`.
    pub embedding: Vec<Element>,
    residues: Vec<Vec<u64>>,
    /// Element index (base-`p` encoding) to group index.
    lookup: std::collections::HashMap<u128, usize>,
}

impl UnitGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Group index of a unit given as an algebra element.
    pub fn index_of(&self, x: &Element) -> Option<usize> {
        let r = element_residues(x);
        let p = x.coords().first().and_then(|c| c.field().order())?;
        let code = r.iter().rev().fold(0u128, |acc, &c| acc * p as u128 + c as u128);
        self.lookup.get(&code).copied()
    }

    pub fn residues(&self, g: usize) -> &[u64] {
        &self.residues[g]
    }
}

/// `E(A)` with its Cayley table; units are listed in element-index order.
pub fn unit_group(algebra: &Algebra) -> Result<UnitGroup> {
    let m = ModAlgebra::new(algebra)?;
    let one = m.one()?.to_vec();
    let units: Vec<Vec<u64>> = m.elements(ENUMERATION_LIMIT)?.filter(|x| m.is_unit(x)).collect();
    if units.len() as u128 > UNIT_TABLE_LIMIT {
        return Err(Error::EnumerationTooLarge {
            size: units.len() as u128,
            limit: UNIT_TABLE_LIMIT,
        });
    }
    let lookup: std::collections::HashMap<u128, usize> =
        units.iter().enumerate().map(|(i, u)| (m.encode(u), i)).collect();
    let order = units.len();
    let mut flat = Vec::with_capacity(order * order);
    for x in &units {
        for y in &units {
            let xy = m.mul(x, y);
            flat.push(
                *lookup
                    .get(&m.encode(&xy))
                    .ok_or_else(|| Error::VerificationFailed("product of units is not a unit".into()))?,
            );
        }
    }
    let identity = lookup[&m.encode(&one)];
    let embedding: Vec<Element> = units.iter().map(|u| m.to_element(u)).collect();
    let names = embedding.iter().map(|e| e.to_string()).collect();
    let group = GroupTable::from_associative(flat, identity, names)?;
    Ok(UnitGroup {
        group,
        embedding,
        residues: units,
        lookup,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupNilpotency {
    Nilpotent { class: usize },
    NotNilpotent,
}

impl GroupNilpotency {
    pub fn is_nilpotent(&self) -> bool {
        matches!(self, GroupNilpotency::Nilpotent { .. })
    }

    pub fn class(&self) -> Option<usize> {
        match self {
            GroupNilpotency::Nilpotent { class } => Some(*class),
            GroupNilpotency::NotNilpotent => None,
        }
    }
}

/// Lower central series `γ₁ = G`, `γ_{k+1} = [γ_k, G]` until it stabilizes.
pub fn group_nilpotency(g: &GroupTable) -> GroupNilpotency {
    let all: Vec<usize> = (0..g.order()).collect();
    let mut term = all.clone();
    let mut class = 0;
    while term.len() > 1 {
        let next = g.commutator_subgroup(&term, &all);
        if next.len() == term.len() {
            return GroupNilpotency::NotNilpotent;
        }
        term = next;
        class += 1;
    }
    GroupNilpotency::Nilpotent { class }
}

/// The derived series reaches the trivial group.
pub fn group_is_soluble(g: &GroupTable) -> bool {
    let mut term: Vec<usize> = (0..g.order()).collect();
    while term.len() > 1 {
        let next = g.commutator_subgroup(&term, &term);
        if next.len() == term.len() {
            return false;
        }
        term = next;
    }
    true
}

/// `E(A) = (1 + rad(A)) × E(T)` for the computed radical complement `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitsDecomposition {
    pub unit_order: usize,
    pub one_plus_radical_order: usize,
    pub torus_units_order: usize,
    pub order_matches: bool,
    pub intersection_trivial: bool,
    pub torus_units_central: bool,
    /// `|1 + rad(A)| = |K|^{dim rad(A)}`.
    pub one_plus_radical_expected: bool,
}

impl UnitsDecomposition {
    pub fn holds(&self) -> bool {
        self.order_matches && self.intersection_trivial && self.torus_units_central && self.one_plus_radical_expected
    }
}

/// Checks the direct decomposition of a nilpotent unit group.
pub fn units_decomposition_check(algebra: &Algebra) -> Result<UnitsDecomposition> {
    let units = unit_group(algebra)?;
    if !group_nilpotency(&units.group).is_nilpotent() {
        return Err(Error::Precondition("the unit group is not nilpotent".into()));
    }
    let m = ModAlgebra::new(algebra)?;
    let one = m.one()?.to_vec();
    let rad = radical(algebra)?;
    let complement = radical_complement_with(algebra, &rad)?;
    let mut one_plus_rad = Vec::new();
    let mut torus_units = Vec::new();
    for (g, u) in units.embedding.iter().enumerate() {
        let r = m.to_element(&m.sub(units.residues(g), &one));
        if rad.contains(&r) {
            one_plus_rad.push(g);
        }
        if complement.contains(u) {
            torus_units.push(g);
        }
    }
    let identity = units.group.identity();
    let intersection_trivial = one_plus_rad.iter().all(|g| *g == identity || !torus_units.contains(g));
    let torus_units_central = torus_units
        .iter()
        .all(|&t| (0..units.order()).all(|g| units.group.mul(t, g) == units.group.mul(g, t)));
    let q = m.p() as u128;
    Ok(UnitsDecomposition {
        unit_order: units.order(),
        one_plus_radical_order: one_plus_rad.len(),
        torus_units_order: torus_units.len(),
        order_matches: one_plus_rad.len() * torus_units.len() == units.order(),
        intersection_trivial,
        torus_units_central,
        one_plus_radical_expected: q.pow(rad.dim() as u32) == one_plus_rad.len() as u128,
    })
}
