//! Subgroups as sorted id sets, plus the closure operations that build them.

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::group::{ElemId, Group};

/// A subgroup of some parent [`Group`], stored as sorted element ids.
///
/// Subgroups do not borrow their parent; every operation takes the parent
/// explicitly and expects the same group the subgroup was built in.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<ElemId>,
    mask: FixedBitSet,
    gens: Vec<ElemId>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(g: &Group) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(g.order());
        mask.insert(0);
        Subgroup {
            members: vec![0],
            mask,
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &Group) -> Subgroup {
        let mut mask = FixedBitSet::with_capacity(g.order());
        mask.insert_range(..);
        let mut gens: Vec<ElemId> = g.generator_ids().iter().copied().filter(|&x| x != 0).collect();
        gens.sort_unstable();
        gens.dedup();
        Subgroup {
            members: (0..g.order()).collect(),
            mask,
            gens,
        }
    }

    /// Rebuilds a subgroup from its membership mask. The mask must already
    /// be closed; a generating set is recovered greedily.
    pub fn from_mask(g: &Group, mask: FixedBitSet) -> Subgroup {
        let mut b = Builder::new(g);
        for x in mask.ones() {
            b.add(x);
        }
        let h = b.finish();
        debug_assert_eq!(h.mask, mask, "mask is not a subgroup");
        h
    }

    pub fn members(&self) -> &[ElemId] {
        &self.members
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    /// A generating set (not necessarily minimal).
    pub fn generators(&self) -> &[ElemId] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.mask.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Subgroup {
        let mut mask = self.mask.clone();
        mask.intersect_with(&other.mask);
        Subgroup::from_mask(g, mask)
    }

    /// `true` when every element of `self` commutes with every element of `other`.
    pub fn centralizes(&self, g: &Group, other: &Subgroup) -> bool {
        self.gens
            .iter()
            .all(|&x| other.gens.iter().all(|&y| g.commute(x, y)))
    }
}

/// Incremental subgroup closure: adding a generator extends the current
/// member list by right multiplication until closed again.
pub(crate) struct Builder<'g> {
    g: &'g Group,
    members: Vec<ElemId>,
    mask: FixedBitSet,
    gens: Vec<ElemId>,
}

impl<'g> Builder<'g> {
    pub(crate) fn new(g: &'g Group) -> Self {
        let mut mask = FixedBitSet::with_capacity(g.order());
        mask.insert(0);
        Builder {
            g,
            members: vec![0],
            mask,
            gens: Vec::new(),
        }
    }

    pub(crate) fn contains(&self, x: ElemId) -> bool {
        self.mask.contains(x)
    }

    /// Adds `s` as a generator. Returns `false` if it was already a member.
    pub(crate) fn add(&mut self, s: ElemId) -> bool {
        if self.mask.contains(s) {
            return false;
        }
        let g = self.g;
        let old = self.members.len();
        self.gens.push(s);
        for i in 0..old {
            let p = g.mul(self.members[i], s);
            if !self.mask.put(p) {
                self.members.push(p);
            }
        }
        let mut head = old;
        while head < self.members.len() {
            let x = self.members[head];
            for k in 0..self.gens.len() {
                let p = g.mul(x, self.gens[k]);
                if !self.mask.put(p) {
                    self.members.push(p);
                }
            }
            head += 1;
        }
        true
    }

    pub(crate) fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        Subgroup {
            members: self.members,
            mask: self.mask,
            gens: self.gens,
        }
    }
}

pub fn subgroup_generated(g: &Group, seed: &[ElemId]) -> Result<Subgroup> {
    for &x in seed {
        g.check_id(x)?;
    }
    let mut b = Builder::new(g);
    for &x in seed {
        b.add(x);
    }
    Ok(b.finish())
}

/// Smallest subgroup containing `seed` that is normalized by every element
/// of `conjugators`.
pub(crate) fn normal_closure_under(g: &Group, seed: &[ElemId], conjugators: &[ElemId]) -> Subgroup {
    let mut b = Builder::new(g);
    for &x in seed {
        b.add(x);
    }
    let mut next = 0;
    while next < b.gens.len() {
        let h = b.gens[next];
        for &c in conjugators {
            let y = g.conj(h, c);
            b.add(y);
        }
        next += 1;
    }
    b.finish()
}

/// Normal closure of `seed` in the whole group.
pub fn normal_closure(g: &Group, seed: &[ElemId]) -> Result<Subgroup> {
    for &x in seed {
        g.check_id(x)?;
    }
    Ok(normal_closure_under(g, seed, g.generator_ids()))
}

/// `true` iff `h` is normalized by all of `g`.
pub fn is_normal(g: &Group, h: &Subgroup) -> bool {
    is_normalized_by(g, h, g.generator_ids())
}

/// `true` iff `h` is a normal subgroup of `k` (which must contain it).
pub fn is_normal_in(g: &Group, h: &Subgroup, k: &Subgroup) -> bool {
    h.is_subgroup_of(k) && is_normalized_by(g, h, k.generators())
}

fn is_normalized_by(g: &Group, h: &Subgroup, conjugators: &[ElemId]) -> bool {
    h.gens
        .iter()
        .all(|&x| conjugators.iter().all(|&c| h.contains(g.conj(x, c))))
}

/// `C_G(x)`, via Schreier generators of the conjugation-orbit stabilizer.
pub fn element_centralizer(g: &Group, x: ElemId) -> Subgroup {
    let gens = g.generator_ids();
    // transversal[y] = t with x^t = y
    let mut transversal: FxHashMap<ElemId, ElemId> = FxHashMap::default();
    transversal.insert(x, 0);
    let mut orbit = vec![x];
    let mut head = 0;
    while head < orbit.len() {
        let y = orbit[head];
        let ty = transversal[&y];
        for &s in gens {
            let z = g.conj(y, s);
            transversal.entry(z).or_insert_with(|| {
                orbit.push(z);
                g.mul(ty, s)
            });
        }
        head += 1;
    }
    let mut b = Builder::new(g);
    for &y in &orbit {
        let ty = transversal[&y];
        for &s in gens {
            let z = g.conj(y, s);
            let schreier = g.mul(g.mul(ty, s), g.inv(transversal[&z]));
            b.add(schreier);
        }
    }
    b.finish()
}

/// `C_G(X)`: every element commuting with all of `xs`. Empty `xs` gives `G`.
pub fn centralizer_of_subset(g: &Group, xs: &[ElemId]) -> Result<Subgroup> {
    for &x in xs {
        g.check_id(x)?;
    }
    let mut sorted = xs.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut span = Builder::new(g);
    let mut cent: Option<FixedBitSet> = None;
    for x in sorted {
        // C_G(X) = C_G(<X>), so members of the span already seen add nothing.
        if span.contains(x) {
            continue;
        }
        span.add(x);
        let cx = element_centralizer(g, x);
        let mask = match cent.take() {
            None => cx.mask,
            Some(mut m) => {
                m.intersect_with(&cx.mask);
                m
            }
        };
        let trivial = mask.count_ones(..) == 1;
        cent = Some(mask);
        if trivial {
            break;
        }
    }
    Ok(match cent {
        None => Subgroup::whole(g),
        Some(mask) => Subgroup::from_mask(g, mask),
    })
}

/// `C_H(X) = C_G(X) ∩ H`.
pub fn centralizer_in(g: &Group, h: &Subgroup, xs: &[ElemId]) -> Result<Subgroup> {
    Ok(centralizer_of_subset(g, xs)?.intersection(g, h))
}

pub fn center(g: &Group) -> Subgroup {
    centralizer_of_subset(g, g.generator_ids()).expect("generator ids are valid")
}

/// `[H, K]`, generated by all `[h, k]`.
///
/// Computed as the normal closure in `<H, K>` of the commutators of
/// generators, which is the same subgroup.
pub fn commutator_subgroup(g: &Group, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let mut seed = Vec::with_capacity(h.gens.len() * k.gens.len());
    for &x in &h.gens {
        for &y in &k.gens {
            seed.push(g.commutator(x, y));
        }
    }
    let mut conjugators: Vec<ElemId> = h.gens.iter().chain(&k.gens).copied().collect();
    conjugators.sort_unstable();
    conjugators.dedup();
    normal_closure_under(g, &seed, &conjugators)
}

/// `true` when `[x, y]` is trivial for all `x ∈ H`, `y ∈ K`.
pub fn commutator_is_trivial(g: &Group, h: &Subgroup, k: &Subgroup) -> bool {
    h.centralizes(g, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s3() -> Group {
        Group::from_generators("S3", 3, vec![cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], Default::default())
            .unwrap()
    }

    fn d8() -> (Group, ElemId) {
        let r = cyc(4, &[&[0, 1, 2, 3]]);
        let g = Group::from_generators("D4", 4, vec![r.clone(), cyc(4, &[&[1, 3]])], Default::default())
            .unwrap();
        let rid = g.element_of(&r).unwrap();
        (g, rid)
    }

    /// Brute-force closure: repeatedly multiply everything by everything.
    fn brute_subgroup(g: &Group, seed: &[ElemId]) -> Vec<ElemId> {
        let mut set: std::collections::BTreeSet<ElemId> = seed.iter().copied().collect();
        set.insert(0);
        loop {
            let cur: Vec<_> = set.iter().copied().collect();
            let before = set.len();
            for &a in &cur {
                for &b in &cur {
                    set.insert(g.mul(a, b));
                }
            }
            if set.len() == before {
                return set.into_iter().collect();
            }
        }
    }

    fn brute_centralizer(g: &Group, xs: &[ElemId]) -> Vec<ElemId> {
        (0..g.order()).filter(|&y| xs.iter().all(|&x| g.commute(x, y))).collect()
    }

    #[test]
    fn generated_subgroups() {
        let (g, r) = d8();
        assert!(subgroup_generated(&g, &[0]).unwrap().is_trivial());
        let h = subgroup_generated(&g, &[r]).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(h.members(), brute_subgroup(&g, &[r]).as_slice());
        let all: Vec<_> = (0..8).collect();
        assert_eq!(subgroup_generated(&g, &all).unwrap(), Subgroup::whole(&g));
        assert!(subgroup_generated(&g, &[8]).is_err());
    }

    #[test]
    fn normality() {
        let (g, _) = d8();
        assert!(is_normal(&g, &center(&g)));
        let s = s3();
        let t = s.element_of(&cyc(3, &[&[0, 1]])).unwrap();
        let c3 = s.element_of(&cyc(3, &[&[0, 1, 2]])).unwrap();
        assert!(!is_normal(&s, &subgroup_generated(&s, &[t]).unwrap()));
        assert!(is_normal(&s, &subgroup_generated(&s, &[c3]).unwrap()));
    }

    #[test]
    fn centralizers() {
        let (g, r) = d8();
        assert_eq!(centralizer_of_subset(&g, &[0]).unwrap(), Subgroup::whole(&g));
        assert_eq!(centralizer_of_subset(&g, &[]).unwrap(), Subgroup::whole(&g));
        let c = centralizer_of_subset(&g, &[r]).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c, subgroup_generated(&g, &[r]).unwrap());
        assert_eq!(center(&g).order(), 2);

        let s = s3();
        let transpositions: Vec<_> = (0..6).filter(|&x| s.element_order(x) == 2).collect();
        assert_eq!(transpositions.len(), 3);
        assert!(centralizer_of_subset(&s, &transpositions).unwrap().is_trivial());
        assert!(center(&s).is_trivial());
    }

    #[test]
    fn centralizer_matches_brute_force() {
        let (g, _) = d8();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let c = centralizer_of_subset(&g, &[x, y]).unwrap();
                assert_eq!(c.members(), brute_centralizer(&g, &[x, y]).as_slice());
            }
        }
    }

    #[test]
    fn commutator_subgroups() {
        let s = s3();
        let whole = Subgroup::whole(&s);
        let triv = Subgroup::trivial(&s);
        assert!(commutator_subgroup(&s, &whole, &triv).is_trivial());
        let d = commutator_subgroup(&s, &whole, &whole);
        assert_eq!(d.order(), 3);

        let (g, _) = d8();
        let w = Subgroup::whole(&g);
        assert_eq!(commutator_subgroup(&g, &w, &w), center(&g));
    }

    #[test]
    fn commutator_subgroup_matches_brute_force() {
        let g = Group::from_generators(
            "S4",
            4,
            vec![cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])],
            Default::default(),
        )
        .unwrap();
        let subs: Vec<Subgroup> = [vec![1usize], vec![3, 7], vec![5], vec![2, 9], (0..24).collect()]
            .iter()
            .map(|s| subgroup_generated(&g, s).unwrap())
            .collect();
        for h in &subs {
            for k in &subs {
                let mut comms = Vec::new();
                for &x in h.members() {
                    for &y in k.members() {
                        comms.push(g.commutator(x, y));
                    }
                }
                let expect = brute_subgroup(&g, &comms);
                let got = commutator_subgroup(&g, h, k);
                assert_eq!(got.members(), expect.as_slice());
                assert_eq!(got, commutator_subgroup(&g, k, h));
            }
        }
    }
}
