//! One checker per statement. Each returns a [`VerificationReport`] whose
//! violations can be recomputed with [`replay`].

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use super::report::{CounterexampleRecord, TheoremId, VerificationReport};
use crate::classes::{
    all_conjugacy_classes, class_index_of, eta, inverse_class, product_class_indices,
};
use crate::error::{GroupError, Result};
use crate::group::{ElemId, Group};
use crate::quotient::{quotient, QuotientGroup};
use crate::section::{analyze_section, SectionInfo, SweepContext};
use crate::series::{
    is_supersolvable, lower_central_series, normal_subgroups, section_derived_length,
    upper_central_series, upper_central_series_of, SeriesReport,
};
use crate::subgroup::{
    centralizer_in, centralizer_of_subset, commutator_is_trivial, commutator_subgroup, is_normal,
    subgroup_generated, Subgroup,
};

/// Names used in [`CounterexampleRecord::check`].
pub mod checks {
    pub const DENOMINATOR_NORMAL: &str = "denominator_normal";
    pub const SECTION_ABELIAN: &str = "section_abelian";
    pub const SECTION_BOUND: &str = "section_bound";
    pub const TRANSFER_BOUND: &str = "transfer_bound";
    pub const GOODNESS_PREMISE: &str = "goodness_premise";
    pub const ETA_MONOTONE: &str = "eta_monotone";
    pub const INVERSE_CLASSES: &str = "inverse_classes";
    pub const CENTRAL_COMMUTATOR: &str = "central_commutator";
    pub const NILPOTENT_SECTION: &str = "nilpotent_section";
    pub const ETA_PGROUP: &str = "eta_pgroup";
}

fn as_i64(x: usize) -> i64 {
    i64::try_from(x).expect("counts fit in i64")
}

fn opt_i64(x: Option<usize>) -> Option<i64> {
    x.map(as_i64)
}

/// All sets of between 1 and `depth` class indices, by size then lexicographically.
fn class_unions(k: usize, depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut level: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..depth.min(k) {
        let mut next = Vec::new();
        for s in &level {
            let start = s.last().map_or(0, |&l| l + 1);
            for c in start..k {
                let mut t = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Constituent classes of `AB` for unions of classes `A` and `B`.
fn union_product(g: &Group, a: &[usize], b: &[usize]) -> Vec<usize> {
    let classes = all_conjugacy_classes(g);
    let mut hit = FixedBitSet::with_capacity(classes.len());
    for &i in a {
        for &j in b {
            hit.extend(product_class_indices(g, &classes[i], &classes[j]));
        }
    }
    hit.ones().collect()
}

fn reps(g: &Group, cs: &[usize]) -> Vec<ElemId> {
    let classes = all_conjugacy_classes(g);
    cs.iter().map(|&c| classes[c].rep()).collect()
}

fn classes_of_reps(g: &Group, ids: &[ElemId]) -> Result<Vec<usize>> {
    let mut cs = ids
        .iter()
        .map(|&x| g.check_id(x).map(|_| class_index_of(g, x)))
        .collect::<Result<Vec<_>>>()?;
    cs.sort_unstable();
    cs.dedup();
    Ok(cs)
}

/// A pair of generators of `num` whose commutator escapes `den`.
fn noncommuting_witness(g: &Group, num: &FixedBitSet, den: &FixedBitSet) -> Vec<ElemId> {
    let n = Subgroup::from_mask(g, num.clone());
    for &x in n.generators() {
        for &y in n.generators() {
            if !den.contains(g.commutator(x, y)) {
                return vec![x, y];
            }
        }
    }
    Vec::new()
}

/// `C_G(AB) / (C_G(A) ∩ C_G(B))` for unions of classes, given by index.
fn theorem_a_section(
    ctx: &SweepContext<'_>,
    a: &[usize],
    b: &[usize],
) -> Result<(SectionInfo, FixedBitSet, FixedBitSet, usize)> {
    let product = union_product(ctx.group(), a, b);
    let num = ctx.centralizer_mask(&product);
    let mut den = ctx.centralizer_mask(a);
    den.intersect_with(&ctx.centralizer_mask(b));
    let info = ctx.section_of_masks(&num, &den)?;
    Ok((info, num, den, product.len()))
}

/// For every pair of normal subsets that are unions of at most `union_depth`
/// classes: `C_G(A) ∩ C_G(B)` is normal in `C_G(AB)` with abelian quotient.
pub fn verify_theorem_a(g: &Group, union_depth: usize) -> Result<VerificationReport> {
    if union_depth == 0 {
        return Err(GroupError::InvalidArgument("union depth must be at least 1".into()));
    }
    let ctx = SweepContext::new(g);
    let subsets = class_unions(ctx.classes().len(), union_depth);
    let mut report = VerificationReport::new(TheoremId::A, g.name());
    for a in &subsets {
        for b in &subsets {
            let product = union_product(g, a, b);
            let num = ctx.centralizer_mask(&product);
            let mut den = ctx.centralizer_mask(a);
            den.intersect_with(&ctx.centralizer_mask(b));
            let roles = [("A", reps(g, a)), ("B", reps(g, b))];
            match ctx.section_of_masks(&num, &den) {
                Ok(info) => {
                    report.record_max("max_section_order", info.order as f64);
                    report.record_max("max_eta", product.len() as f64);
                    report.check(info.is_abelian(), || {
                        report_record(
                            g,
                            checks::SECTION_ABELIAN,
                            &roles,
                            opt_i64(info.derived_length),
                            1,
                            noncommuting_witness(g, &num, &den),
                        )
                    });
                }
                Err(GroupError::NotNormal) => report.check(false, || {
                    report_record(g, checks::DENOMINATOR_NORMAL, &roles, Some(0), 1, Vec::new())
                }),
                Err(e) => return Err(e),
            }
        }
    }
    report.set("union_depth", union_depth as f64);
    report
        .notes
        .push(format!("normal subsets in scope: class unions of depth {union_depth}"));
    Ok(report.finish())
}

fn report_record(
    g: &Group,
    check: &str,
    roles: &[(&str, Vec<usize>)],
    observed: Option<i64>,
    bound: i64,
    witness_ids: Vec<usize>,
) -> CounterexampleRecord {
    VerificationReport::new(TheoremId::A, g.name()).record(check, roles, observed, bound, witness_ids)
}

fn triple_roles(ctx: &SweepContext<'_>, a: usize, b: usize, d: usize) -> [(&'static str, Vec<usize>); 3] {
    [("A", vec![ctx.rep(a)]), ("B", vec![ctx.rep(b)]), ("D", vec![ctx.rep(d)])]
}

/// For a supersolvable group and classes `D ⊆ AB`:
/// `dl(C_G(D) / (C_G(A) ∩ C_G(B))) ≤ 2η(AB)`.
pub fn verify_theorem_b(g: &Group) -> Result<VerificationReport> {
    if !is_supersolvable(g) {
        return Err(GroupError::NotSupersolvable(g.name().to_string()));
    }
    let ctx = SweepContext::new(g);
    let mut report = VerificationReport::new(TheoremId::B, g.name());
    for t in ctx.triples()? {
        let bound = 2 * t.eta_ab;
        let dl = t.section.derived_length;
        if let Some(dl) = dl {
            report.record_max("max_dl", dl as f64);
            report.record_max("max_ratio", dl as f64 / bound as f64);
        }
        report.record_max("max_eta", t.eta_ab as f64);
        let ok = dl.is_some_and(|dl| dl <= bound);
        report.check(ok, || {
            report_record(
                g,
                checks::SECTION_BOUND,
                &triple_roles(&ctx, t.a, t.b, t.d),
                opt_i64(dl),
                as_i64(bound),
                Vec::new(),
            )
        });
    }
    Ok(report.finish())
}

/// A nondecreasing bound on derived lengths in terms of `η`.
pub struct BoundFn {
    pub name: String,
    pub f: Box<dyn Fn(usize) -> i64 + Send + Sync>,
    /// Whether the bound is only known to be good for supersolvable groups.
    pub requires_supersolvable: bool,
}

impl BoundFn {
    pub fn new(name: impl Into<String>, f: impl Fn(usize) -> i64 + Send + Sync + 'static) -> Self {
        BoundFn {
            name: name.into(),
            f: Box::new(f),
            requires_supersolvable: false,
        }
    }

    pub fn eval(&self, n: usize) -> i64 {
        (self.f)(n)
    }
}

impl Default for BoundFn {
    /// `F(n) = 2n − 1`, good for supersolvable groups.
    fn default() -> Self {
        BoundFn {
            name: "2n-1".into(),
            f: Box::new(|n| 2 * as_i64(n) - 1),
            requires_supersolvable: true,
        }
    }
}

impl std::fmt::Debug for BoundFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BoundFn").field("name", &self.name).finish()
    }
}

/// `dl(Ḡ / C_Ḡ(Ā))` and `η(ĀĀ⁻¹)` for the class of `x̄` in a quotient.
fn goodness_pair(q: &Group, x: ElemId) -> (Option<usize>, usize) {
    let cls = &all_conjugacy_classes(q)[class_index_of(q, x)];
    let c = centralizer_of_subset(q, cls.members()).expect("class members are valid ids");
    let dl = section_derived_length(q, &Subgroup::whole(q), &c);
    (dl, eta(q, cls, inverse_class(q, cls)))
}

/// Checks the transfer bound `dl(C_G(D) / (C_G(A) ∩ C_G(B))) ≤ 1 + F(η(AB))`
/// together with its inputs: the goodness premise on every quotient of `g`,
/// and, in `Ḡ = G / C_G(C_G(D))`, that `Ā` and `B̄` are inverse classes with
/// `η(ĀB̄) ≤ η(AB)`.
pub fn verify_transfer_theorem(g: &Group, bound: &BoundFn) -> Result<VerificationReport> {
    if bound.requires_supersolvable && !is_supersolvable(g) {
        return Err(GroupError::NotSupersolvable(g.name().to_string()));
    }
    let mut report = VerificationReport::new(TheoremId::Transfer, g.name());
    report.notes.push(format!("F(n) = {}", bound.name));

    for n in normal_subgroups(g)? {
        let q = quotient(g, &n)?;
        let qg = q.group();
        let mut seen = FixedBitSet::with_capacity(all_conjugacy_classes(qg).len());
        for cls in all_conjugacy_classes(g) {
            let x = q.project(cls.rep());
            if seen.put(class_index_of(qg, x)) {
                continue;
            }
            let (dl, e) = goodness_pair(qg, x);
            let f = bound.eval(e);
            report.check(dl.is_some_and(|d| as_i64(d) <= f), || {
                report_record(
                    g,
                    checks::GOODNESS_PREMISE,
                    &[("A", vec![cls.rep()]), ("N", n.generators().to_vec())],
                    opt_i64(dl),
                    f,
                    Vec::new(),
                )
            });
        }
    }

    let ctx = SweepContext::new(g);
    let mut bars: FxHashMap<usize, QuotientGroup> = FxHashMap::default();
    for t in ctx.triples()? {
        let f = 1 + bound.eval(t.eta_ab);
        let dl = t.section.derived_length;
        let roles = triple_roles(&ctx, t.a, t.b, t.d);
        if let Some(dl) = dl {
            report.record_max("max_dl", dl as f64);
        }
        report.check(dl.is_some_and(|d| as_i64(d) <= f), || {
            report_record(g, checks::TRANSFER_BOUND, &roles, opt_i64(dl), f, Vec::new())
        });

        if !bars.contains_key(&t.d) {
            bars.insert(t.d, bar_quotient(&ctx, t.d)?);
        }
        let q = &bars[&t.d];
        let (inverse, eta_bar) = bar_classes(q, ctx.rep(t.a), ctx.rep(t.b));
        report.check(inverse, || {
            report_record(g, checks::INVERSE_CLASSES, &roles, Some(0), 1, Vec::new())
        });
        report.check(eta_bar <= t.eta_ab, || {
            report_record(
                g,
                checks::ETA_MONOTONE,
                &roles,
                Some(as_i64(eta_bar)),
                as_i64(t.eta_ab),
                Vec::new(),
            )
        });
    }
    Ok(report.finish())
}

/// `G / C_G(C_G(D))`.
fn bar_quotient(ctx: &SweepContext<'_>, d: usize) -> Result<QuotientGroup> {
    let g = ctx.group();
    let n = ctx.class_centralizer(d);
    let c = centralizer_of_subset(g, n.members())?;
    quotient(g, &c)
}

/// Whether `b̄` lies in the class of `ā⁻¹`, and `η(ĀB̄)`.
fn bar_classes(q: &QuotientGroup, a: ElemId, b: ElemId) -> (bool, usize) {
    let qg = q.group();
    let (abar, bbar) = (q.project(a), q.project(b));
    let classes = all_conjugacy_classes(qg);
    let ca = &classes[class_index_of(qg, abar)];
    let cb = &classes[class_index_of(qg, bbar)];
    (
        class_index_of(qg, bbar) == class_index_of(qg, qg.inv(abar)),
        eta(qg, ca, cb),
    )
}

/// `N^m` and `Z_m(N)` commute for every `m`, up to one step past the point
/// where both series have stabilized.
pub fn verify_lemma_4_1(g: &Group) -> VerificationReport {
    let lower = lower_central_series(g);
    let upper = upper_central_series(g);
    let mut report = VerificationReport::new(TheoremId::CentralCommutator, g.name());
    let top = lower.terms.len().max(upper.terms.len());
    for m in 1..=top {
        let (gm, zm) = lemma_terms(&lower, &upper, m);
        report.check(commutator_is_trivial(g, gm, zm), || {
            report_record(
                g,
                checks::CENTRAL_COMMUTATOR,
                &[("m", vec![m])],
                Some(as_i64(commutator_subgroup(g, gm, zm).order())),
                1,
                gm.generators().iter().chain(zm.generators()).copied().collect(),
            )
        });
    }
    report.set("max_m", top as f64);
    report.finish()
}

fn lemma_terms<'s>(lower: &'s SeriesReport, upper: &'s SeriesReport, m: usize) -> (&'s Subgroup, &'s Subgroup) {
    (
        &lower.terms[(m - 1).min(lower.terms.len() - 1)],
        &upper.terms[m.min(upper.terms.len() - 1)],
    )
}

/// Orbit of `a` under conjugation by the group generated by `gens`.
fn orbit_under(g: &Group, a: ElemId, gens: &[ElemId]) -> Vec<ElemId> {
    let mut seen = FixedBitSet::with_capacity(g.order());
    seen.insert(a);
    let mut out = vec![a];
    let mut head = 0;
    while head < out.len() {
        let x = out[head];
        for &s in gens {
            let y = g.conj(x, s);
            if !seen.put(y) {
                out.push(y);
            }
        }
        head += 1;
    }
    out.sort_unstable();
    out
}

/// Least `m` with `[n, a] ⊆ Z_m(n)`, given the upper central series of `n`.
pub(crate) fn minimal_m_in(g: &Group, n: &Subgroup, upper: &SeriesReport, a: ElemId) -> Option<usize> {
    let comms: Vec<ElemId> = n.members().iter().map(|&x| g.commutator(x, a)).collect();
    upper
        .terms
        .iter()
        .position(|z| comms.iter().all(|&c| z.contains(c)))
}

fn check_theorem_4_2(
    g: &Group,
    n: &Subgroup,
    upper: &SeriesReport,
    a: ElemId,
    report: &mut VerificationReport,
) -> Result<()> {
    let m = minimal_m_in(g, n, upper, a).ok_or(GroupError::NoSuchM)?;
    let orbit = orbit_under(g, a, n.generators());
    let c = centralizer_in(g, n, &orbit)?;
    let class = analyze_section(g, n, &c)?.nilpotency_class;
    report.record_max("max_minimal_m", m as f64);
    if let Some(k) = class {
        report.record_max("max_achieved_class", k as f64);
    }
    report.check(class.is_some_and(|k| k <= m), || {
        report_record(
            g,
            checks::NILPOTENT_SECTION,
            &[("a", vec![a]), ("N", n.generators().to_vec())],
            opt_i64(class),
            as_i64(m),
            vec![a],
        )
    });
    Ok(())
}

/// For `n ⊴ g` and `a ∈ g` with `[n, a] ⊆ Z_m(n)`, `n / C_n(a^n)` is
/// nilpotent of class at most `m`. Centers are taken in `n`.
pub fn verify_theorem_4_2(g: &Group, n: &Subgroup, a: ElemId) -> Result<VerificationReport> {
    g.check_id(a)?;
    if !is_normal(g, n) {
        return Err(GroupError::NotNormal);
    }
    let upper = upper_central_series_of(g, n);
    let mut report = VerificationReport::new(TheoremId::NilpotentSection, g.name());
    check_theorem_4_2(g, n, &upper, a, &mut report)?;
    Ok(report.finish())
}

/// Sweeps [`verify_theorem_4_2`] over the given normal subgroups and one
/// representative per class of `g`. Pairs where no `m` exists are counted
/// in a note.
pub fn verify_theorem_4_2_sweep(g: &Group, normals: &[Subgroup]) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(TheoremId::NilpotentSection, g.name());
    let mut unmet = 0usize;
    for n in normals {
        let upper = upper_central_series_of(g, n);
        for cls in all_conjugacy_classes(g) {
            match check_theorem_4_2(g, n, &upper, cls.rep(), &mut report) {
                Ok(()) => {}
                Err(GroupError::NoSuchM) => unmet += 1,
                Err(e) => return Err(e),
            }
        }
    }
    report.notes.push(format!(
        "{} normal subgroups; hypothesis unmet for {unmet} (N, a) pairs",
        normals.len()
    ));
    Ok(report.finish())
}

/// `(p, k)` with `n = p^k`, for `n > 1`.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..).find(|d| n % d == 0 || d * d > n).map(|d| if n % d == 0 { d } else { n })?;
    let mut k = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

/// In a `p`-group, a class of size `p^n` has `η(AA⁻¹) ≥ n(p − 1) + 1`.
pub fn verify_eta_pgroup_bound(g: &Group) -> Result<VerificationReport> {
    let p = match prime_power(g.order()) {
        Some((p, _)) => p,
        None if g.order() == 1 => 2,
        None => return Err(GroupError::NotPGroup(g.name().to_string())),
    };
    let mut report = VerificationReport::new(TheoremId::EtaPGroup, g.name());
    for cls in all_conjugacy_classes(g) {
        let e = eta(g, cls, inverse_class(g, cls));
        let n = prime_power(cls.size()).map_or(0, |(_, k)| k as usize);
        let bound = n * (p - 1) + 1;
        report.record_max("max_eta", e as f64);
        report.record_min("min_slack", e as f64 - bound as f64);
        report.check(e >= bound, || {
            report_record(
                g,
                checks::ETA_PGROUP,
                &[("A", vec![cls.rep()])],
                Some(as_i64(e)),
                as_i64(bound),
                Vec::new(),
            )
        });
    }
    report.set("p", p as f64);
    Ok(report.finish())
}

fn role<'r>(record: &'r CounterexampleRecord, key: &str) -> Result<&'r [usize]> {
    record
        .class_rep_ids
        .get(key)
        .map(Vec::as_slice)
        .ok_or_else(|| GroupError::InvalidArgument(format!("record has no `{key}` ids")))
}

fn single(record: &CounterexampleRecord, key: &str) -> Result<usize> {
    match role(record, key)? {
        [x] => Ok(*x),
        _ => Err(GroupError::InvalidArgument(format!("expected one `{key}` id"))),
    }
}

/// Recomputes the observed value of a counterexample record on `g`. The
/// `F` of a transfer record is not stored, so bounds are not rechecked.
pub fn replay(g: &Group, record: &CounterexampleRecord) -> Result<Option<i64>> {
    let triple = || -> Result<(usize, usize, usize)> {
        let a = class_index_of(g, single(record, "A")?);
        let b = class_index_of(g, single(record, "B")?);
        let d = class_index_of(g, single(record, "D")?);
        Ok((a, b, d))
    };
    match record.check.as_str() {
        checks::SECTION_ABELIAN => {
            let ctx = SweepContext::new(g);
            let a = classes_of_reps(g, role(record, "A")?)?;
            let b = classes_of_reps(g, role(record, "B")?)?;
            Ok(opt_i64(theorem_a_section(&ctx, &a, &b)?.0.derived_length))
        }
        checks::SECTION_BOUND | checks::TRANSFER_BOUND => {
            let (a, b, d) = triple()?;
            let ctx = SweepContext::new(g);
            let den = ctx.centralizer_mask(&[a, b]);
            let info = ctx.section_of_masks(ctx.class_centralizer(d).mask(), &den)?;
            Ok(opt_i64(info.derived_length))
        }
        checks::INVERSE_CLASSES | checks::ETA_MONOTONE => {
            let (a, b, d) = triple()?;
            let ctx = SweepContext::new(g);
            let q = bar_quotient(&ctx, d)?;
            let (inverse, eta_bar) = bar_classes(&q, ctx.rep(a), ctx.rep(b));
            Ok(Some(if record.check == checks::INVERSE_CLASSES {
                inverse as i64
            } else {
                as_i64(eta_bar)
            }))
        }
        checks::GOODNESS_PREMISE => {
            let n = subgroup_generated(g, role(record, "N")?)?;
            let q = quotient(g, &n)?;
            let x = q.project(single(record, "A")?);
            Ok(opt_i64(goodness_pair(q.group(), x).0))
        }
        checks::CENTRAL_COMMUTATOR => {
            let m = single(record, "m")?;
            let (lower, upper) = (lower_central_series(g), upper_central_series(g));
            let (gm, zm) = lemma_terms(&lower, &upper, m.max(1));
            Ok(Some(as_i64(commutator_subgroup(g, gm, zm).order())))
        }
        checks::NILPOTENT_SECTION => {
            let a = single(record, "a")?;
            let n = subgroup_generated(g, role(record, "N")?)?;
            let orbit = orbit_under(g, a, n.generators());
            let c = centralizer_in(g, &n, &orbit)?;
            Ok(opt_i64(analyze_section(g, &n, &c)?.nilpotency_class))
        }
        checks::ETA_PGROUP => {
            let a = single(record, "A")?;
            g.check_id(a)?;
            let cls = &all_conjugacy_classes(g)[class_index_of(g, a)];
            Ok(Some(as_i64(eta(g, cls, inverse_class(g, cls)))))
        }
        other => Err(GroupError::InvalidArgument(format!("cannot replay check `{other}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::parse_group_spec;
    use crate::harness::report::Verdict;
    use crate::subgroup::center;

    fn grp(s: &str) -> Group {
        parse_group_spec(s).unwrap().group
    }

    #[test]
    fn class_unions_count() {
        assert_eq!(class_unions(3, 1).len(), 3);
        assert_eq!(class_unions(5, 2).len(), 5 + 10);
        assert_eq!(class_unions(2, 4).len(), 3);
        assert_eq!(class_unions(4, 2)[4], vec![0, 1]);
    }

    #[test]
    fn theorem_a_on_s3_counts_class_pairs() {
        let r = verify_theorem_a(&grp("S3"), 1).unwrap();
        assert_eq!(r.cases_checked, 9);
        assert_eq!(r.verdict, Verdict::Pass);
        let r2 = verify_theorem_a(&grp("S3"), 2).unwrap();
        assert_eq!(r2.cases_checked, 36);
        assert!(verify_theorem_a(&grp("S3"), 0).is_err());
    }

    #[test]
    fn theorem_a_s3_transpositions() {
        let g = grp("S3");
        let ctx = SweepContext::new(&g);
        let t = class_index_of(&g, g.element_of(&crate::Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap());
        let (info, _, den, _) = theorem_a_section(&ctx, &[t], &[t]).unwrap();
        assert_eq!(info.order, 3);
        assert_eq!(den.count_ones(..), 1);
        assert!(info.is_abelian());
    }

    #[test]
    fn theorem_a_on_product_group() {
        let r = verify_theorem_a(&grp("D4 x ES(3,+)"), 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases_checked, 55 * 55);
    }

    #[test]
    fn theorem_b_and_its_hypothesis() {
        let r = verify_theorem_b(&grp("S3")).unwrap();
        assert!(r.passed());
        assert!(r.extremal["max_ratio"] <= 1.0);
        assert!(matches!(verify_theorem_b(&grp("S4")), Err(GroupError::NotSupersolvable(_))));
    }

    #[test]
    fn transfer_default_passes_and_planted_bound_fails() {
        let g = grp("D4");
        let r = verify_transfer_theorem(&g, &BoundFn::default()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);

        let zero = BoundFn::new("0", |_| 0);
        for spec in ["S3", "D4", "AGL1(5)"] {
            let g = grp(spec);
            let r = verify_transfer_theorem(&g, &zero).unwrap();
            assert_eq!(r.verdict, Verdict::Fail, "{spec}");
            for v in &r.violations {
                assert_eq!(replay(&g, v).unwrap(), v.observed, "{v:?}");
            }
        }
        assert!(verify_transfer_theorem(&grp("S4"), &BoundFn::default()).is_err());
    }

    #[test]
    fn lemma_4_1_small() {
        for spec in ["C6", "D4", "S4", "wr(C2,3)", "ES(3,-)"] {
            assert!(verify_lemma_4_1(&grp(spec)).passed(), "{spec}");
        }
    }

    #[test]
    fn theorem_4_2_zero_case() {
        let g = grp("D4");
        let z = center(&g);
        let a = z.members()[1];
        let r = verify_theorem_4_2(&g, &Subgroup::whole(&g), a).unwrap();
        assert_eq!(r.extremal["max_minimal_m"], 0.0);
        assert_eq!(r.extremal["max_achieved_class"], 0.0);
    }

    #[test]
    fn theorem_4_2_errors() {
        let g = grp("S3");
        let t = subgroup_generated(&g, &[1]).unwrap();
        assert_eq!(verify_theorem_4_2(&g, &t, 0).unwrap_err(), GroupError::NotNormal);
        assert_eq!(
            verify_theorem_4_2(&g, &Subgroup::whole(&g), 1).unwrap_err(),
            GroupError::NoSuchM
        );
        assert!(verify_theorem_4_2(&g, &Subgroup::whole(&g), 99).is_err());
    }

    #[test]
    fn eta_pgroup_examples() {
        let g = grp("D4");
        let r = verify_eta_pgroup_bound(&g).unwrap();
        assert!(r.passed());
        assert_eq!(r.extremal["min_slack"], 0.0);
        assert!(verify_eta_pgroup_bound(&grp("C1")).unwrap().passed());
        assert!(matches!(verify_eta_pgroup_bound(&grp("S3")), Err(GroupError::NotPGroup(_))));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(128), Some((2, 7)));
        assert_eq!(prime_power(125), Some((5, 3)));
        assert_eq!(prime_power(13), Some((13, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn replay_matches_direct_computation() {
        let g = grp("S3");
        let r = VerificationReport::new(TheoremId::B, "S3");
        let t = class_index_of(&g, 1);
        let three = all_conjugacy_classes(&g).iter().position(|c| c.size() == 2).unwrap();
        let reps = |c: usize| vec![all_conjugacy_classes(&g)[c].rep()];
        let rec = r.record(
            checks::SECTION_BOUND,
            &[("A", reps(t)), ("B", reps(t)), ("D", reps(three))],
            None,
            0,
            vec![],
        );
        assert_eq!(replay(&g, &rec).unwrap(), Some(1));
        let rec = r.record(checks::SECTION_ABELIAN, &[("A", reps(t)), ("B", reps(t))], None, 0, vec![]);
        assert_eq!(replay(&g, &rec).unwrap(), Some(1));
        let rec = r.record(checks::ETA_PGROUP, &[("A", reps(t))], None, 0, vec![]);
        assert_eq!(replay(&g, &rec).unwrap(), Some(2));
        let rec = r.record("nope", &[], None, 0, vec![]);
        assert!(replay(&g, &rec).is_err());
    }
}
