//! Conjugacy classes, normal subsets, products of subsets and η.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{ElemId, Group};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    index: usize,
    rep_id: ElemId,
    members: Vec<ElemId>,
}

impl ConjugacyClass {
    /// Position in [`all_conjugacy_classes`].
    pub fn index(&self) -> usize {
        self.index
    }

    /// Smallest element id in the class.
    pub fn rep(&self) -> ElemId {
        self.rep_id
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A conjugation-closed subset of a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalSubset {
    members: Vec<ElemId>,
    classes: Vec<usize>,
}

impl NormalSubset {
    pub fn new(g: &Group, xs: &[ElemId]) -> Result<Self> {
        let report = decompose_normal_subset(g, xs)?;
        let table = class_table(g);
        let mut members = xs.to_vec();
        members.sort_unstable();
        members.dedup();
        let classes = report
            .constituents
            .iter()
            .map(|&r| table.class_of[r] as usize)
            .collect();
        Ok(NormalSubset { members, classes })
    }

    /// Union of the classes with the given indices.
    pub fn from_classes(g: &Group, class_indices: &[usize]) -> Self {
        let all = all_conjugacy_classes(g);
        let mut classes = class_indices.to_vec();
        classes.sort_unstable();
        classes.dedup();
        let mut members: Vec<ElemId> = classes
            .iter()
            .flat_map(|&c| all[c].members().iter().copied())
            .collect();
        members.sort_unstable();
        NormalSubset { members, classes }
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    /// Indices of the constituent classes, ascending.
    pub fn class_indices(&self) -> &[usize] {
        &self.classes
    }

    pub fn eta(&self) -> usize {
        self.classes.len()
    }
}

/// Result of splitting a normal subset into classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassProductReport {
    pub eta: usize,
    /// Representative ids of the constituent classes, ascending.
    pub constituents: Vec<ElemId>,
    pub product_size: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct ClassTable {
    pub(crate) classes: Vec<ConjugacyClass>,
    pub(crate) class_of: Vec<u32>,
}

/// Orbit of `x` under conjugation by the generators, in discovery order.
pub fn conjugation_orbit(g: &Group, x: ElemId) -> Vec<ElemId> {
    let mut seen = FixedBitSet::with_capacity(g.order());
    seen.insert(x);
    let mut orbit = vec![x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        for &s in g.generator_ids() {
            let z = g.conj(y, s);
            if !seen.put(z) {
                orbit.push(z);
            }
        }
        head += 1;
    }
    orbit
}

pub(crate) fn class_table(g: &Group) -> &ClassTable {
    g.class_table.get_or_init(|| {
        const UNSET: u32 = u32::MAX;
        let mut class_of = vec![UNSET; g.order()];
        let mut classes = Vec::new();
        for x in 0..g.order() {
            if class_of[x] != UNSET {
                continue;
            }
            let mut members = conjugation_orbit(g, x);
            members.sort_unstable();
            let index = classes.len();
            for &y in &members {
                class_of[y] = index as u32;
            }
            classes.push(ConjugacyClass {
                index,
                rep_id: x,
                members,
            });
        }
        ClassTable { classes, class_of }
    })
}

/// All classes, ordered by representative id (class 0 is `{e}`).
pub fn all_conjugacy_classes(g: &Group) -> &[ConjugacyClass] {
    &class_table(g).classes
}

pub fn class_index_of(g: &Group, x: ElemId) -> usize {
    class_table(g).class_of[x] as usize
}

pub fn conjugacy_class_of(g: &Group, x: ElemId) -> Result<&ConjugacyClass> {
    g.check_id(x)?;
    Ok(&all_conjugacy_classes(g)[class_index_of(g, x)])
}

/// `AB = {xy : x ∈ A, y ∈ B}` as a sorted set.
pub fn product_of_subsets(g: &Group, a: &[ElemId], b: &[ElemId]) -> Vec<ElemId> {
    let mut hit = FixedBitSet::with_capacity(g.order());
    for &x in a {
        for &y in b {
            hit.insert(g.mul(x, y));
        }
    }
    hit.ones().collect()
}

pub fn is_normal_subset(g: &Group, xs: &[ElemId]) -> bool {
    first_escape(g, xs).is_none()
}

fn first_escape(g: &Group, xs: &[ElemId]) -> Option<ElemId> {
    let mut mask = FixedBitSet::with_capacity(g.order());
    for &x in xs {
        mask.insert(x);
    }
    for &x in xs {
        for &s in g.generator_ids() {
            let y = g.conj(x, s);
            if !mask.contains(y) {
                return Some(y);
            }
        }
    }
    None
}

/// Splits a normal subset into its conjugacy classes.
pub fn decompose_normal_subset(g: &Group, xs: &[ElemId]) -> Result<ClassProductReport> {
    if xs.is_empty() {
        return Err(GroupError::EmptySet);
    }
    for &x in xs {
        g.check_id(x)?;
    }
    if let Some(escaped) = first_escape(g, xs) {
        return Err(GroupError::NotNormalSubset { escaped });
    }
    let table = class_table(g);
    let mut hit = FixedBitSet::with_capacity(table.classes.len());
    let mut size = FixedBitSet::with_capacity(g.order());
    for &x in xs {
        hit.insert(table.class_of[x] as usize);
        size.insert(x);
    }
    let constituents: Vec<ElemId> = hit.ones().map(|c| table.classes[c].rep_id).collect();
    Ok(ClassProductReport {
        eta: constituents.len(),
        constituents,
        product_size: size.count_ones(..),
    })
}

/// Indices of the classes making up `AB`, ascending.
///
/// `AB` is a union of `G`-conjugates of `aB` for any fixed `a ∈ A`, so the
/// constituents are the classes of `a·b` for `b ∈ B`.
pub fn product_class_indices(g: &Group, a: &ConjugacyClass, b: &ConjugacyClass) -> Vec<usize> {
    let table = class_table(g);
    let mut hit = FixedBitSet::with_capacity(table.classes.len());
    for &y in b.members() {
        hit.insert(table.class_of[g.mul(a.rep(), y)] as usize);
    }
    hit.ones().collect()
}

/// `η(AB)` for two classes.
pub fn eta(g: &Group, a: &ConjugacyClass, b: &ConjugacyClass) -> usize {
    product_class_indices(g, a, b).len()
}

/// The class `A⁻¹ = {x⁻¹ : x ∈ A}`.
pub fn inverse_class<'g>(g: &'g Group, a: &ConjugacyClass) -> &'g ConjugacyClass {
    &all_conjugacy_classes(g)[class_index_of(g, g.inv(a.rep()))]
}
