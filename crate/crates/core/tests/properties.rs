use std::sync::OnceLock;

use cpl_core::classes::{all_conjugacy_classes, conjugation_orbit, decompose_normal_subset, eta};
use cpl_core::harness::{replay, verify_transfer_theorem, BoundFn};
use cpl_core::search::OpenQuestionContext;
use cpl_core::subgroup::{centralizer_of_subset, subgroup_generated};
use cpl_core::{compose, parse_group_spec, Group};
use proptest::prelude::*;

const SPECS: &[&str] = &["S3", "D4", "Q8", "S4", "AGL1(5)", "wr(C2,3)", "ES(3,+)", "C3 x S3", "D8"];

fn groups() -> &'static [Group] {
    static G: OnceLock<Vec<Group>> = OnceLock::new();
    G.get_or_init(|| SPECS.iter().map(|s| parse_group_spec(s).unwrap().group).collect())
}

fn group_and_elements(k: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..SPECS.len()).prop_flat_map(move |i| {
        let n = groups()[i].order();
        (Just(i), prop::collection::vec(0..n, k))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_matches_permutations((i, xs) in group_and_elements(2)) {
        let g = &groups()[i];
        let p = compose(&g.element(xs[0]), &g.element(xs[1])).unwrap();
        prop_assert_eq!(g.element_of(&p), Some(g.mul(xs[0], xs[1])));
        prop_assert_eq!(g.mul(xs[0], g.inv(xs[0])), g.identity());
    }

    /// `a^x = a[a, x]`.
    #[test]
    fn conjugate_is_a_times_commutator((i, xs) in group_and_elements(2)) {
        let g = &groups()[i];
        let (a, x) = (xs[0], xs[1]);
        prop_assert_eq!(g.conj(a, x), g.mul(a, g.commutator(a, x)));
    }

    #[test]
    fn centralizer_of_union_is_intersection((i, xs) in group_and_elements(4)) {
        let g = &groups()[i];
        let (left, right) = xs.split_at(2);
        let whole = centralizer_of_subset(g, &xs).unwrap();
        let meet = centralizer_of_subset(g, left).unwrap().intersection(g, &centralizer_of_subset(g, right).unwrap());
        prop_assert_eq!(whole, meet);
    }

    #[test]
    fn class_is_a_normal_subset((i, xs) in group_and_elements(1)) {
        let g = &groups()[i];
        let orbit = conjugation_orbit(g, xs[0]);
        let r = decompose_normal_subset(g, &orbit).unwrap();
        prop_assert_eq!(r.eta, 1);
        prop_assert_eq!(r.product_size, orbit.len());
    }

    #[test]
    fn subgroup_order_divides_group_order((i, xs) in group_and_elements(2)) {
        let g = &groups()[i];
        let h = subgroup_generated(g, &xs).unwrap();
        prop_assert_eq!(g.order() % h.order(), 0);
    }

    #[test]
    fn eta_is_symmetric(i in 0..SPECS.len(), a in 0usize..64, b in 0usize..64) {
        let g = &groups()[i];
        let cs = all_conjugacy_classes(g);
        let (a, b) = (&cs[a % cs.len()], &cs[b % cs.len()]);
        prop_assert_eq!(eta(g, a, b), eta(g, b, a));
        prop_assert!(eta(g, a, b) <= a.size().min(b.size()));
    }

    #[test]
    fn minimal_m_routes_agree((i, xs) in group_and_elements(1)) {
        let g = &groups()[i];
        let ctx = OpenQuestionContext::new(g);
        prop_assert_eq!(ctx.minimal_m(xs[0]), ctx.minimal_m_by_commutators(xs[0]));
        if let Some(m) = ctx.minimal_m(xs[0]) {
            prop_assert!(ctx.achieved_class(xs[0]).is_some_and(|c| c <= m));
        }
    }
}

#[test]
fn planted_violations_replay() {
    let zero = BoundFn::new("0", |_| 0);
    for g in groups() {
        let r = verify_transfer_theorem(g, &zero).unwrap();
        if g.is_abelian() {
            continue;
        }
        assert!(!r.violations.is_empty(), "{}", g.name());
        for v in &r.violations {
            assert_eq!(replay(g, v).unwrap(), v.observed);
        }
    }
}
