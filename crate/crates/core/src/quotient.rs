//! Quotient groups, realized as permutation groups on cosets.

use fixedbitset::FixedBitSet;

use crate::error::{GroupError, Result};
use crate::group::{ElemId, Group, OrderGuard};
use crate::perm::Permutation;
use crate::subgroup::{is_normal, Subgroup};

/// Largest quotient order we realize; the regular action stores `order²` images.
pub const QUOTIENT_LIMIT: usize = 8192;

#[derive(Debug)]
pub struct QuotientGroup {
    quotient: Group,
    projection: Vec<u32>,
    kernel: Subgroup,
}

impl QuotientGroup {
    pub fn group(&self) -> &Group {
        &self.quotient
    }

    pub fn into_group(self) -> Group {
        self.quotient
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn project(&self, x: ElemId) -> ElemId {
        self.projection[x] as usize
    }

    pub fn projection(&self) -> &[u32] {
        &self.projection
    }

    /// Sorted, deduplicated image of a set of parent elements.
    pub fn image_of(&self, xs: &[ElemId]) -> Vec<ElemId> {
        let mut out: Vec<ElemId> = xs.iter().map(|&x| self.project(x)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Full preimage in the parent of a quotient subgroup.
    pub fn preimage(&self, parent: &Group, sub: &Subgroup) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(self.projection.len());
        for (x, &q) in self.projection.iter().enumerate() {
            if sub.contains(q as usize) {
                mask.insert(x);
            }
        }
        Subgroup::from_mask(parent, mask)
    }
}

/// `G/N` via the action of `G` on the cosets of `N` by right multiplication.
///
/// Cosets are numbered by their smallest element id, so the coset `N`
/// itself is point 0 and the projection is determined by where each
/// element sends that point.
pub fn quotient(g: &Group, n: &Subgroup) -> Result<QuotientGroup> {
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let index = g.order() / n.order();
    if index > QUOTIENT_LIMIT {
        return Err(GroupError::QuotientTooLarge {
            order: index,
            limit: QUOTIENT_LIMIT,
        });
    }
    const UNSET: u32 = u32::MAX;
    let mut coset_of = vec![UNSET; g.order()];
    let mut reps = Vec::with_capacity(index);
    for x in 0..g.order() {
        if coset_of[x] != UNSET {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &k in n.members() {
            coset_of[g.mul(x, k)] = c;
        }
    }
    debug_assert_eq!(reps.len(), index);

    let gens = g
        .generator_ids()
        .iter()
        .map(|&s| Permutation::from_images(reps.iter().map(|&r| coset_of[g.mul(r, s)] as usize)))
        .collect::<Result<Vec<_>>>()?;
    let name = format!("({})/N{}", g.name(), n.order());
    let quotient = Group::from_generators(name, index, gens, OrderGuard(index))?;

    // The action is regular: each quotient element is pinned down by the
    // image of point 0.
    let mut by_image = vec![0u32; index];
    for q in 0..quotient.order() {
        by_image[quotient.images(q)[0] as usize] = q as u32;
    }
    let projection = coset_of.iter().map(|&c| by_image[c as usize]).collect();
    Ok(QuotientGroup {
        quotient,
        projection,
        kernel: n.clone(),
    })
}

/// Re-materializes a subgroup as a group in its own right. Element ids of
/// the result are the ranks of the members in the parent.
pub fn subgroup_as_group(g: &Group, h: &Subgroup, name: impl Into<String>) -> Group {
    let elements = h.members().iter().map(|&x| g.images(x).to_vec()).collect();
    let gens = h.generators().iter().map(|&x| g.element(x)).collect();
    Group::from_element_set(name.into(), g.degree(), gens, elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::{center, commutator_subgroup, subgroup_generated};

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn d8() -> Group {
        Group::from_generators(
            "D4",
            4,
            vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])],
            Default::default(),
        )
        .unwrap()
    }

    fn assert_homomorphism(g: &Group, q: &QuotientGroup, n: &Subgroup) {
        let h = q.group();
        for x in 0..g.order() {
            for y in 0..g.order() {
                assert_eq!(q.project(g.mul(x, y)), h.mul(q.project(x), q.project(y)));
            }
            assert_eq!(q.project(x) == 0, n.contains(x));
        }
        let mut hit = vec![false; h.order()];
        for x in 0..g.order() {
            hit[q.project(x)] = true;
        }
        assert!(hit.iter().all(|&b| b));
    }

    #[test]
    fn quotient_by_whole_is_trivial() {
        let g = d8();
        let w = Subgroup::whole(&g);
        let q = quotient(&g, &w).unwrap();
        assert_eq!(q.group().order(), 1);
        assert_homomorphism(&g, &q, &w);
    }

    #[test]
    fn d8_mod_center_is_klein() {
        let g = d8();
        let z = center(&g);
        let q = quotient(&g, &z).unwrap();
        let h = q.group();
        assert_eq!(h.order(), 4);
        assert!((1..4).all(|x| h.element_order(x) == 2));
        assert_homomorphism(&g, &q, &z);
    }

    #[test]
    fn s3_mod_a3_is_c2() {
        let g = Group::from_generators(
            "S3",
            3,
            vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])],
            Default::default(),
        )
        .unwrap();
        let w = Subgroup::whole(&g);
        let a3 = commutator_subgroup(&g, &w, &w);
        let q = quotient(&g, &a3).unwrap();
        assert_eq!(q.group().order(), 2);
        assert_homomorphism(&g, &q, &a3);

        let t = g.element_of(&cyc(3, &[&[0, 1]])).unwrap();
        let not_normal = subgroup_generated(&g, &[t]).unwrap();
        assert_eq!(quotient(&g, &not_normal).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn preimage_of_trivial_is_kernel() {
        let g = d8();
        let z = center(&g);
        let q = quotient(&g, &z).unwrap();
        assert_eq!(q.preimage(&g, &Subgroup::trivial(q.group())), z);
    }

    #[test]
    fn materialized_subgroup() {
        let g = d8();
        let r = g.element_of(&cyc(4, &[&[0, 1, 2, 3]])).unwrap();
        let h = subgroup_generated(&g, &[r]).unwrap();
        let hg = subgroup_as_group(&g, &h, "C4");
        assert_eq!(hg.order(), 4);
        assert!(hg.is_abelian());
        for (rank, &x) in h.members().iter().enumerate() {
            assert_eq!(hg.images(rank), g.images(x));
        }
    }
}
