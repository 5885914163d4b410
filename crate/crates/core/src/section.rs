//! Centralizer sections `C_G(D) / (C_G(A) ∩ C_G(B))` and the class-triple
//! sweeps built on them.

use std::cell::{OnceCell, RefCell};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::classes::{all_conjugacy_classes, product_class_indices, ConjugacyClass};
use crate::error::{GroupError, Result};
use crate::group::{ElemId, Group};
use crate::quotient::{quotient, subgroup_as_group, QuotientGroup};
use crate::series::{derived_length, nilpotency_class};
use crate::subgroup::{centralizer_of_subset, is_normal_in, Subgroup};

/// Class-pair sweeps skip groups with more classes than this by default.
pub const DEFAULT_MAX_CLASSES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionInfo {
    pub order: usize,
    pub derived_length: Option<usize>,
    pub nilpotency_class: Option<usize>,
}

impl SectionInfo {
    pub fn is_abelian(&self) -> bool {
        self.derived_length.is_some_and(|d| d <= 1)
    }
}

/// `num/den` as a genuine quotient group, after checking `den ⊴ num`.
pub fn section_quotient(g: &Group, num: &Subgroup, den: &Subgroup) -> Result<QuotientGroup> {
    if !den.is_subgroup_of(num) {
        return Err(GroupError::InvalidArgument(
            "section denominator is not contained in the numerator".into(),
        ));
    }
    if !is_normal_in(g, den, num) {
        return Err(GroupError::NotNormal);
    }
    let num_group = subgroup_as_group(g, num, format!("{}[{}]", g.name(), num.order()));
    let mut mask = FixedBitSet::with_capacity(num_group.order());
    for &x in den.members() {
        let rank = num.members().binary_search(&x).expect("den is inside num");
        mask.insert(rank);
    }
    let den_inside = Subgroup::from_mask(&num_group, mask);
    quotient(&num_group, &den_inside)
}

pub fn analyze_section(g: &Group, num: &Subgroup, den: &Subgroup) -> Result<SectionInfo> {
    let q = section_quotient(g, num, den)?;
    let h = q.group();
    Ok(SectionInfo {
        order: h.order(),
        derived_length: derived_length(h),
        nilpotency_class: nilpotency_class(h),
    })
}

/// One `(A, B, D)` with `D ⊆ AB`, by class index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub a: usize,
    pub b: usize,
    pub d: usize,
    pub eta_ab: usize,
    pub section: SectionInfo,
}

/// Per-group caches for class sweeps: class centralizers and analyzed
/// sections keyed by `(numerator, denominator)`.
pub struct SweepContext<'g> {
    g: &'g Group,
    class_cents: Vec<OnceCell<Subgroup>>,
    sections: RefCell<FxHashMap<(FixedBitSet, FixedBitSet), SectionInfo>>,
}

impl<'g> SweepContext<'g> {
    pub fn new(g: &'g Group) -> Self {
        let n = all_conjugacy_classes(g).len();
        SweepContext {
            g,
            class_cents: (0..n).map(|_| OnceCell::new()).collect(),
            sections: RefCell::default(),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    pub fn classes(&self) -> &'g [ConjugacyClass] {
        all_conjugacy_classes(self.g)
    }

    pub fn class_centralizer(&self, c: usize) -> &Subgroup {
        self.class_cents[c].get_or_init(|| {
            centralizer_of_subset(self.g, self.classes()[c].members()).expect("class ids are valid")
        })
    }

    /// Centralizer of the union of the given classes, as a membership mask.
    pub fn centralizer_mask(&self, cs: &[usize]) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.g.order());
        mask.insert_range(..);
        for &c in cs {
            mask.intersect_with(self.class_centralizer(c).mask());
        }
        mask
    }

    pub fn centralizer_of_classes(&self, cs: &[usize]) -> Subgroup {
        Subgroup::from_mask(self.g, self.centralizer_mask(cs))
    }

    pub fn section(&self, num: &Subgroup, den: &Subgroup) -> Result<SectionInfo> {
        self.section_of_masks(num.mask(), den.mask())
    }

    /// Like [`SweepContext::section`], but looks up the cache before building
    /// any subgroup. Both masks must describe subgroups.
    pub fn section_of_masks(&self, num: &FixedBitSet, den: &FixedBitSet) -> Result<SectionInfo> {
        let key = (num.clone(), den.clone());
        if let Some(info) = self.sections.borrow().get(&key) {
            return Ok(*info);
        }
        let info = analyze_section(
            self.g,
            &Subgroup::from_mask(self.g, key.0.clone()),
            &Subgroup::from_mask(self.g, key.1.clone()),
        )?;
        self.sections.borrow_mut().insert(key, info);
        Ok(info)
    }

    /// Every ordered class pair `(A, B)` and class `D ⊆ AB`, with the
    /// section `C_G(D) / (C_G(A) ∩ C_G(B))`, in `(A, B, D)` index order.
    pub fn triples(&self) -> Result<Vec<Triple>> {
        let classes = self.classes();
        let mut out = Vec::new();
        for a in 0..classes.len() {
            for b in 0..classes.len() {
                let constituents = product_class_indices(self.g, &classes[a], &classes[b]);
                let den = self.centralizer_mask(&[a, b]);
                for &d in &constituents {
                    let section = self.section_of_masks(self.class_centralizer(d).mask(), &den)?;
                    out.push(Triple {
                        a,
                        b,
                        d,
                        eta_ab: constituents.len(),
                        section,
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn rep(&self, c: usize) -> ElemId {
        self.classes()[c].rep()
    }
}
