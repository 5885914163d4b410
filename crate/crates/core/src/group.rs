//! Fully enumerated finite permutation groups.
//!
//! A [`Group`] stores every element as an image sequence, sorted
//! lexicographically, so element ids are stable across runs and the
//! identity is always id 0. Products are resolved through a base: a short
//! list of points whose images already tell all elements apart. Small groups
//! additionally carry a full Cayley table.

use std::fmt;
use std::sync::OnceLock;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::classes::ClassTable;
use crate::error::{GroupError, Result};
use crate::perm::Permutation;

/// Default cap on enumerated group orders.
pub const DEFAULT_MAX_ORDER: usize = 32_768;

/// Groups up to this order get a precomputed multiplication table.
const TABLE_LIMIT: usize = 1024;

pub type ElemId = usize;

/// Upper bound on the order of any group a construction may enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderGuard(pub usize);

impl Default for OrderGuard {
    fn default() -> Self {
        OrderGuard(DEFAULT_MAX_ORDER)
    }
}

impl OrderGuard {
    pub fn check(self, order: usize) -> Result<()> {
        if order > self.0 {
            Err(GroupError::OrderGuardExceeded { limit: self.0 })
        } else {
            Ok(())
        }
    }

    /// Checked product of orders, failing on overflow or on breaching the guard.
    pub fn check_product(self, orders: &[usize]) -> Result<usize> {
        let mut acc = 1usize;
        for &o in orders {
            acc = acc
                .checked_mul(o)
                .ok_or(GroupError::OrderGuardExceeded { limit: self.0 })?;
            self.check(acc)?;
        }
        Ok(acc)
    }
}

enum KeyMap {
    Packed { radix: u128, map: FxHashMap<u128, u32> },
    Wide(FxHashMap<Box<[u32]>, u32>),
}

/// Maps base images to element ids.
struct ElementIndex {
    base: Vec<usize>,
    keys: KeyMap,
}

impl ElementIndex {
    fn build(degree: usize, order: usize, images: &[u32]) -> Self {
        let base = choose_base(degree, order, images);
        let radix = degree as u128;
        let packable = base
            .iter()
            .try_fold(1u128, |acc, _| acc.checked_mul(radix))
            .is_some();
        let row = |x: usize| &images[x * degree..(x + 1) * degree];
        let keys = if packable {
            let mut map = FxHashMap::default();
            map.reserve(order);
            for x in 0..order {
                let r = row(x);
                let key = base.iter().fold(0u128, |acc, &b| acc * radix + r[b] as u128);
                map.insert(key, x as u32);
            }
            KeyMap::Packed { radix, map }
        } else {
            let mut map = FxHashMap::default();
            for x in 0..order {
                let r = row(x);
                let key: Box<[u32]> = base.iter().map(|&b| r[b]).collect();
                map.insert(key, x as u32);
            }
            KeyMap::Wide(map)
        };
        ElementIndex { base, keys }
    }

    /// Looks up the element whose image of base point `b` is `image(b)`.
    #[inline]
    fn find(&self, image: impl Fn(usize) -> u32) -> Option<usize> {
        match &self.keys {
            KeyMap::Packed { radix, map } => {
                let key = self
                    .base
                    .iter()
                    .fold(0u128, |acc, &b| acc * radix + image(b) as u128);
                map.get(&key).map(|&x| x as usize)
            }
            KeyMap::Wide(map) => {
                let key: Vec<u32> = self.base.iter().map(|&b| image(b)).collect();
                map.get(key.as_slice()).map(|&x| x as usize)
            }
        }
    }
}

/// Greedy base: add points in order while they split the element set further.
fn choose_base(degree: usize, order: usize, images: &[u32]) -> Vec<usize> {
    let mut base = Vec::new();
    let mut cell = vec![0u32; order];
    let mut cells = 1usize;
    for point in 0..degree {
        if cells == order {
            break;
        }
        let mut relabel: FxHashMap<(u32, u32), u32> = FxHashMap::default();
        let mut next = vec![0u32; order];
        for x in 0..order {
            let key = (cell[x], images[x * degree + point]);
            let fresh = relabel.len() as u32;
            next[x] = *relabel.entry(key).or_insert(fresh);
        }
        if relabel.len() > cells {
            cells = relabel.len();
            cell = next;
            base.push(point);
        }
    }
    debug_assert_eq!(cells, order);
    base
}

pub struct Group {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    gen_ids: Vec<ElemId>,
    images: Vec<u32>,
    inverse: Vec<u32>,
    index: ElementIndex,
    table: Option<Vec<u32>>,
    pub(crate) class_table: OnceLock<ClassTable>,
}

/// Enumerates the group generated by `generators` on `degree` points.
///
/// Fails with [`GroupError::OrderGuardExceeded`] as soon as more than
/// `max_order` distinct elements have been produced.
pub fn closure_enumerate(
    degree: usize,
    generators: &[Permutation],
    max_order: usize,
) -> Result<Group> {
    Group::from_generators("", degree, generators.to_vec(), OrderGuard(max_order))
}

impl Group {
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        guard: OrderGuard,
    ) -> Result<Group> {
        if degree == 0 {
            return Err(GroupError::ZeroDegree);
        }
        if guard.0 == 0 {
            return Err(GroupError::InvalidArgument("order guard must be positive".into()));
        }
        for s in &generators {
            if s.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: s.degree(),
                });
            }
        }
        let identity: Vec<u32> = (0..degree as u32).collect();
        let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
        seen.insert(identity.clone());
        let mut queue = vec![identity];
        let mut head = 0;
        while head < queue.len() {
            for s in &generators {
                let x = &queue[head];
                let y: Vec<u32> = x.iter().map(|&p| s.images()[p as usize]).collect();
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push(y);
                    guard.check(queue.len())?;
                }
            }
            head += 1;
        }
        Ok(Self::from_element_set(name.into(), degree, generators, queue))
    }

    /// Builds a group from a complete, closed element list (in any order).
    pub(crate) fn from_element_set(
        name: String,
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Vec<u32>>,
    ) -> Group {
        elements.sort_unstable();
        elements.dedup();
        let order = elements.len();
        let mut images = Vec::with_capacity(order * degree);
        for e in &elements {
            images.extend_from_slice(e);
        }
        drop(elements);
        let index = ElementIndex::build(degree, order, &images);

        let mut inverse = vec![0u32; order];
        let mut inv = vec![0u32; degree];
        for x in 0..order {
            for (i, &img) in images[x * degree..(x + 1) * degree].iter().enumerate() {
                inv[img as usize] = i as u32;
            }
            inverse[x] = index.find(|b| inv[b]).expect("group is closed under inverses") as u32;
        }

        let mut group = Group {
            name,
            degree,
            generators: Vec::new(),
            gen_ids: Vec::new(),
            images,
            inverse,
            index,
            table: None,
            class_table: OnceLock::new(),
        };
        group.gen_ids = generators
            .iter()
            .map(|s| group.element_of(s).expect("generator lies in the group"))
            .collect();
        group.generators = generators;
        if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for x in 0..order {
                for y in 0..order {
                    table[x * order + y] = group.mul_by_lookup(x, y) as u32;
                }
            }
            group.table = Some(table);
        }
        group
    }

    /// Builds the right regular representation `x ↦ x·g` of a group given
    /// by its multiplication table on `0..n`.
    pub fn from_cayley_table(
        name: impl Into<String>,
        table: &[Vec<usize>],
        generators: &[usize],
        guard: OrderGuard,
    ) -> Result<Group> {
        let n = table.len();
        guard.check(n)?;
        let gens = generators
            .iter()
            .map(|&g| Permutation::from_images((0..n).map(|x| table[x][g])))
            .collect::<Result<Vec<_>>>()?;
        Group::from_generators(name, n, gens, guard)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.inverse.len()
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element ids of the generators, in generator order.
    pub fn generator_ids(&self) -> &[ElemId] {
        &self.gen_ids
    }

    pub fn images(&self, x: ElemId) -> &[u32] {
        &self.images[x * self.degree..(x + 1) * self.degree]
    }

    pub fn element(&self, x: ElemId) -> Permutation {
        Permutation::from_images_unchecked(self.images(x).to_vec())
    }

    pub fn elements(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.order()).map(|x| self.element(x))
    }

    /// Id of `p`, or `None` when `p` is not a member.
    pub fn element_of(&self, p: &Permutation) -> Option<ElemId> {
        if p.degree() != self.degree {
            return None;
        }
        let imgs = p.images();
        let x = self.index.find(|b| imgs[b])?;
        (self.images(x) == imgs).then_some(x)
    }

    pub fn check_id(&self, x: ElemId) -> Result<()> {
        if x < self.order() {
            Ok(())
        } else {
            Err(GroupError::InvalidElement {
                id: x,
                order: self.order(),
            })
        }
    }

    fn mul_by_lookup(&self, x: ElemId, y: ElemId) -> ElemId {
        let xi = self.images(x);
        let yi = self.images(y);
        self.index
            .find(|b| yi[xi[b] as usize])
            .expect("group is closed under products")
    }

    /// The product `xy`: `x` applied first.
    #[inline]
    pub fn mul(&self, x: ElemId, y: ElemId) -> ElemId {
        match &self.table {
            Some(t) => t[x * self.order() + y] as usize,
            None => self.mul_by_lookup(x, y),
        }
    }

    #[inline]
    pub fn inv(&self, x: ElemId) -> ElemId {
        self.inverse[x] as usize
    }

    /// `x^g = g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: ElemId, g: ElemId) -> ElemId {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`.
    #[inline]
    pub fn commutator(&self, x: ElemId, y: ElemId) -> ElemId {
        self.mul(
            self.mul(self.inv(x), self.inv(y)),
            self.mul(x, y),
        )
    }

    pub fn commute(&self, x: ElemId, y: ElemId) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn element_order(&self, x: ElemId) -> usize {
        let mut k = 1;
        let mut p = x;
        while p != 0 {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_ids;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    /// Full `|G|²` sweep: every product, composed directly from the
    /// permutations, is again an element.
    pub fn check_closure(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| {
            let xi = self.images(x);
            (0..n).all(|y| {
                let yi = self.images(y);
                let prod: Vec<u32> = xi.iter().map(|&p| yi[p as usize]).collect();
                let p = Permutation::from_images_unchecked(prod);
                self.element_of(&p) == Some(self.mul(x, y))
            })
        })
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Group")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    fn s3() -> Group {
        closure_enumerate(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])], 100).unwrap()
    }

    #[test]
    fn cyclic_closure() {
        let g = closure_enumerate(3, &[cyc(3, &[&[0, 1, 2]])], 10).unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn s3_and_d8_orders() {
        assert_eq!(s3().order(), 6);
        let d8 = closure_enumerate(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])], 100).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(d8.check_closure());
    }

    #[test]
    fn identity_is_first_and_sorted() {
        let g = s3();
        assert!(g.element(0).is_identity());
        for x in 1..g.order() {
            assert!(g.images(x - 1) < g.images(x));
        }
    }

    #[test]
    fn guard_is_enforced() {
        let r = closure_enumerate(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])], 23);
        assert_eq!(r.unwrap_err(), GroupError::OrderGuardExceeded { limit: 23 });
        assert!(closure_enumerate(4, &[cyc(4, &[&[0, 1]]), cyc(4, &[&[0, 1, 2, 3]])], 24).is_ok());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let r = closure_enumerate(4, &[cyc(3, &[&[0, 1]])], 10);
        assert!(matches!(r, Err(GroupError::DegreeMismatch { .. })));
    }

    #[test]
    fn generators_are_members() {
        let g = s3();
        for (s, &id) in g.generators().iter().zip(g.generator_ids()) {
            assert_eq!(&g.element(id), s);
        }
        assert_eq!(g.element_of(&cyc(4, &[&[0, 1]])), None);
    }

    #[test]
    fn lookup_and_table_agree() {
        let g = s3();
        assert!(g.has_table());
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(g.mul(x, y), g.mul_by_lookup(x, y));
            }
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn deterministic_ids() {
        let a = s3();
        let b = s3();
        assert_eq!(a.images, b.images);
    }
}
