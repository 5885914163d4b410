//! Exact reproductions of the worked examples: products of extraspecial
//! groups, the affine groups `AGL(1, p)`, and the two wreath products with
//! small nilpotent sections.

use super::report::{TheoremId, VerificationReport};
use super::theorems::prime_power;
use crate::classes::{all_conjugacy_classes, class_index_of, conjugation_orbit, eta, inverse_class, product_of_subsets};
use crate::constructions::{affine_translation, MAX_PRIME};
use crate::error::{GroupError, Result};
use crate::group::{ElemId, Group, OrderGuard};
use crate::groupspec::GroupSpec;
use crate::perm::Permutation;
use crate::search::OpenQuestionContext;
use crate::section::section_quotient;
use crate::series::{is_prime, upper_central_series};
use crate::subgroup::{center, centralizer_of_subset, subgroup_generated, Subgroup};

/// Prime factors with multiplicity, ascending.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        while m % d == 0 {
            out.push(d);
            m /= d;
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn sorted_orbit(g: &Group, x: ElemId) -> Vec<ElemId> {
    let mut o = conjugation_orbit(g, x);
    o.sort_unstable();
    o
}

/// `{x·z : z ∈ Z}`, sorted.
fn coset(g: &Group, x: ElemId, z: &Subgroup) -> Vec<ElemId> {
    let mut out: Vec<ElemId> = z.members().iter().map(|&c| g.mul(x, c)).collect();
    out.sort_unstable();
    out
}

fn flag(b: bool) -> Option<i64> {
    Some(b as i64)
}

/// The element acting as `parts[i]` on block `i`, blocks laid out in order.
fn block_element(parts: &[&[u32]]) -> Result<Permutation> {
    let mut images = Vec::new();
    for part in parts {
        let offset = images.len() as u32;
        images.extend(part.iter().map(|&x| x + offset));
    }
    Permutation::new(images)
}

/// First pair of noncommuting generators.
fn noncommuting_pair(g: &Group) -> Option<(ElemId, ElemId)> {
    let gens = g.generator_ids();
    gens.iter()
        .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
        .find(|&(x, y)| !g.commute(x, y))
}

/// `m = p_1 ⋯ p_l` gives `G = P_1 × ⋯ × P_l` with `P_i` extraspecial of order
/// `p_i³` (`D4` for `p = 2`), and classes `A = a^G`, `B = b^G` with
/// `AB = D` a single class and `|C_G(D) / (C_G(A) ∩ C_G(B))| = m`.
pub fn reproduce_example_2_2(m: u64, guard: OrderGuard) -> Result<VerificationReport> {
    if m == 0 {
        return Err(GroupError::InvalidArgument("m must be positive".into()));
    }
    let primes = prime_factors(m);
    if let Some(&p) = primes.iter().find(|&&p| p > MAX_PRIME) {
        return Err(GroupError::NotPrime(p));
    }
    let atoms: Vec<String> = primes
        .iter()
        .map(|&p| if p == 2 { "D4".to_string() } else { format!("ES({p},+)") })
        .collect();
    let factors = atoms
        .iter()
        .map(|s| GroupSpec::parse(s, guard).map(|s| s.group))
        .collect::<Result<Vec<_>>>()?;
    let spec = if atoms.is_empty() { "C1".to_string() } else { atoms.join(" x ") };
    let g = GroupSpec::parse(&spec, guard)?.group;

    let (a, b) = if factors.is_empty() {
        (g.identity(), g.identity())
    } else {
        let pairs: Vec<(ElemId, ElemId)> = factors
            .iter()
            .map(|f| noncommuting_pair(f).expect("extraspecial factors are nonabelian"))
            .collect();
        let lift = |pick: fn(&(ElemId, ElemId)) -> ElemId| -> Result<ElemId> {
            let parts: Vec<&[u32]> = factors.iter().zip(&pairs).map(|(f, pr)| f.images(pick(pr))).collect();
            g.element_of(&block_element(&parts)?)
                .ok_or_else(|| GroupError::InvalidArgument("lifted element is not in the product".into()))
        };
        (lift(|p| p.0)?, lift(|p| p.1)?)
    };

    let mut report = VerificationReport::new(TheoremId::Example22, g.name());
    let z = center(&g);
    let class_a = sorted_orbit(&g, a);
    let class_b = sorted_orbit(&g, b);
    let class_d = sorted_orbit(&g, g.mul(a, b));
    let ab = product_of_subsets(&g, &class_a, &class_b);
    let meet = centralizer_of_subset(&g, &class_a)?.intersection(&g, &centralizer_of_subset(&g, &class_b)?);
    let cd = centralizer_of_subset(&g, &class_d)?;
    let section = section_quotient(&g, &cd, &meet)?;
    let p_prod: u64 = primes.iter().product();
    let p2_prod: u64 = primes.iter().map(|p| p * p).product();

    let roles = [("A", vec![a]), ("B", vec![b]), ("D", vec![class_d[0]])];
    let mut check = |name: &str, ok: bool, observed: i64, bound: i64| {
        let rec = report.record(name, &roles, Some(observed), bound, vec![a, b]);
        report.check(ok, || rec);
    };
    let a_coset = class_a == coset(&g, a, &z);
    check("class_a_is_center_coset", a_coset, a_coset as i64, 1);
    let b_coset = class_b == coset(&g, b, &z);
    check("class_b_is_center_coset", b_coset, b_coset as i64, 1);
    let single = ab == class_d;
    check("product_is_single_class", single, single as i64, 1);
    let meet_is_z = meet == z && z.order() as u64 == p_prod;
    check("centralizer_meet_is_center", meet_is_z, meet.order() as i64, p_prod as i64);
    check("centralizer_of_d_order", cd.order() as u64 == p2_prod, cd.order() as i64, p2_prod as i64);
    let q = section.group().order();
    check("section_order", q as u64 == m, q as i64, m as i64);

    let classes = all_conjugacy_classes(&g);
    let (ca, cb) = (&classes[class_index_of(&g, a)], &classes[class_index_of(&g, b)]);
    report.set("m", m as f64);
    report.set("group_order", g.order() as f64);
    report.set("section_order", q as f64);
    report.set("center_order", z.order() as f64);
    report.set("eta_ab", eta(&g, ca, cb) as f64);
    report.notes.push(format!("m = {m} = {}", render_factors(&primes)));
    Ok(report.finish())
}

fn render_factors(primes: &[u64]) -> String {
    if primes.is_empty() {
        return "1".into();
    }
    primes.iter().map(u64::to_string).collect::<Vec<_>>().join("·")
}

/// In `AGL(1, p)`: `A = P ∖ {1}` is one class, `AA⁻¹ = P`, `η(AA⁻¹) = 2`,
/// `C_G(A) = P` and `|G / C_G(A)| = p − 1`.
pub fn reproduce_example_3_2(p: u64, guard: OrderGuard) -> Result<VerificationReport> {
    if p > MAX_PRIME || !is_prime(p as usize) {
        return Err(GroupError::NotPrime(p));
    }
    if p == 2 {
        return Err(GroupError::InvalidArgument(
            "p = 2 gives A = A⁻¹ = {t} and AA⁻¹ = {1}; the example needs an odd prime".into(),
        ));
    }
    let g = GroupSpec::parse(&format!("AGL1({p})"), guard)?.group;
    let t = affine_translation(&g);
    let pp = subgroup_generated(&g, &[t])?;
    let classes = all_conjugacy_classes(&g);
    let ca = &classes[class_index_of(&g, t)];
    let inv = inverse_class(&g, ca);
    let aa = product_of_subsets(&g, ca.members(), inv.members());
    let e = eta(&g, ca, inv);
    let c = centralizer_of_subset(&g, ca.members())?;
    let index = g.order() / c.order();
    let omega = prime_factors(p - 1).into_iter().collect::<std::collections::BTreeSet<_>>().len();

    let mut report = VerificationReport::new(TheoremId::Example32, g.name());
    let roles = [("A", vec![t])];
    let mut check = |name: &str, ok: bool, observed: Option<i64>, bound: i64| {
        let rec = report.record(name, &roles, observed, bound, vec![t]);
        report.check(ok, || rec);
    };
    let nontrivial: Vec<ElemId> = pp.members().iter().copied().filter(|&x| x != g.identity()).collect();
    check("class_is_p_minus_identity", ca.members() == nontrivial, flag(ca.members() == nontrivial), 1);
    check("product_is_p", aa == pp.members(), Some(aa.len() as i64), pp.order() as i64);
    check("eta", e == 2, Some(e as i64), 2);
    check("centralizer_is_p", c == pp, Some(c.order() as i64), p as i64);
    check("index", index as u64 == p - 1, Some(index as i64), p as i64 - 1);
    report.set("p", p as f64);
    report.set("eta", e as f64);
    report.set("index", index as f64);
    report.set("prime_factors_of_index", omega as f64);
    Ok(report.finish())
}

/// `G₁ = C2 wr C2` and `G₂ = G₁ wr C2` with `a₂ = (a₁, a₁)`: every
/// noncentral `a₁` has `a₁^{G₁} = a₁Z(G₁)` and an abelian section, and `a₂`
/// lies in `a₂Z₂(G₂)` but not `a₂Z(G₂)`, with `G₂ / C(a₂^{G₂})` of class 2.
pub fn reproduce_remark_4(guard: OrderGuard) -> Result<VerificationReport> {
    let g1 = GroupSpec::parse("wr(C2,2)", guard)?.group;
    let g2 = GroupSpec::parse("wr(wr(C2,2),2)", guard)?.group;
    let mut report = VerificationReport::new(TheoremId::Remark4, g2.name());
    let z1 = center(&g1);
    let ctx1 = OpenQuestionContext::new(&g1);
    let ctx2 = OpenQuestionContext::new(&g2);
    let upper2 = upper_central_series(&g2);
    let z2_1 = &upper2.terms[1.min(upper2.terms.len() - 1)];
    let z2_2 = &upper2.terms[2.min(upper2.terms.len() - 1)];

    for a1 in (0..g1.order()).filter(|&x| !z1.contains(x)) {
        let orbit = sorted_orbit(&g1, a1);
        let roles = [("a1", vec![a1])];
        let is_coset = orbit == coset(&g1, a1, &z1);
        let (m1, c1) = (ctx1.minimal_m(a1), ctx1.achieved_class(a1));
        let rec = report.record("g1_orbit_is_center_coset", &roles, flag(is_coset), 1, vec![a1]);
        report.check(is_coset, || rec);
        let rec = report.record("g1_class_one", &roles, c1.map(|c| c as i64), 1, vec![a1]);
        report.check(c1 == Some(1) && m1 == Some(1), || rec);

        let half = g1.images(a1);
        let a2 = g2
            .element_of(&block_element(&[half, half])?)
            .ok_or_else(|| GroupError::InvalidArgument("(a1, a1) is not in G2".into()))?;
        let roles = [("a1", vec![a1]), ("a2", vec![a2])];
        let orbit2 = sorted_orbit(&g2, a2);
        let inside = |z: &Subgroup| orbit2.iter().all(|&x| z.contains(g2.mul(g2.inv(a2), x)));
        let (in_z2, in_z1) = (inside(z2_2), inside(z2_1));
        let c2 = ctx2.achieved_class(a2);
        let rec = report.record("g2_orbit_in_z2_coset", &roles, flag(in_z2), 1, vec![a2]);
        report.check(in_z2, || rec);
        let rec = report.record("g2_orbit_not_in_center_coset", &roles, flag(!in_z1), 1, vec![a2]);
        report.check(!in_z1, || rec);
        let rec = report.record("g2_class_two", &roles, c2.map(|c| c as i64), 2, vec![a2]);
        report.check(c2 == Some(2) && ctx2.minimal_m(a2) == Some(2), || rec);
        report.record_max("g2_max_class", c2.unwrap_or(0) as f64);
    }
    report.set("g1_order", g1.order() as f64);
    report.set("g2_order", g2.order() as f64);
    report.set("g2_nilpotency_class", upper2.length_stat.unwrap_or(0) as f64);
    debug_assert!(prime_power(g2.order()).is_some());
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::report::Verdict;

    #[test]
    fn factorization() {
        assert_eq!(prime_factors(30), vec![2, 3, 5]);
        assert_eq!(prime_factors(12), vec![2, 2, 3]);
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(31), vec![31]);
    }

    #[test]
    fn example_2_2_small() {
        for m in [1, 2, 3, 4, 5, 6] {
            let r = reproduce_example_2_2(m, OrderGuard::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "m = {m}: {:?}", r.violations);
            assert_eq!(r.extremal["section_order"], m as f64);
            assert_eq!(r.extremal["eta_ab"], 1.0);
        }
        assert_eq!(
            reproduce_example_2_2(6, OrderGuard::default()).unwrap().group_spec,
            "D4 x ES(3,+)"
        );
        assert!(reproduce_example_2_2(37, OrderGuard::default()).is_err());
        assert!(reproduce_example_2_2(0, OrderGuard::default()).is_err());
    }

    #[test]
    fn example_3_2() {
        for (p, omega) in [(3, 1), (5, 1), (7, 2), (11, 2), (13, 2), (31, 3)] {
            let r = reproduce_example_3_2(p, OrderGuard::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "p = {p}: {:?}", r.violations);
            assert_eq!(r.extremal["index"], (p - 1) as f64);
            assert_eq!(r.extremal["prime_factors_of_index"], omega as f64);
        }
        assert!(reproduce_example_3_2(2, OrderGuard::default()).is_err());
        assert!(reproduce_example_3_2(9, OrderGuard::default()).is_err());
    }

    #[test]
    fn remark_4() {
        let r = reproduce_remark_4(OrderGuard::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{:?}", r.violations);
        assert_eq!(r.extremal["g2_order"], 128.0);
        assert_eq!(r.cases_checked, 6 * 5);
    }
}
