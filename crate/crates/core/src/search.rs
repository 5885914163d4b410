//! Data for the two open problems: how large the nilpotency class of
//! `G / C_G(a^G)` gets when `a^G ⊆ a·Z_m(G)`, and which constants `(r, s)`
//! fit `dl(C_G(D) / (C_G(A) ∩ C_G(B))) ≤ r·η(AB) + s` on solvable groups.
//!
//! Nothing here proves anything; summaries describe the scanned groups only.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::classes::{all_conjugacy_classes, conjugation_orbit};
use crate::error::Result;
use crate::group::{ElemId, Group};
use crate::harness::minimal_m_in;
use crate::section::SweepContext;
use crate::series::{is_solvable, lower_central_series, upper_central_series, SeriesReport};
use crate::subgroup::{centralizer_of_subset, Subgroup};

/// `(r, s)` candidates range over `0..=FIT_RANGE`.
pub const FIT_RANGE: u32 = 8;

/// Both central series of one group, shared by per-element queries.
pub struct OpenQuestionContext<'g> {
    g: &'g Group,
    upper: SeriesReport,
    lower: SeriesReport,
}

impl<'g> OpenQuestionContext<'g> {
    pub fn new(g: &'g Group) -> Self {
        OpenQuestionContext {
            g,
            upper: upper_central_series(g),
            lower: lower_central_series(g),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.g
    }

    /// Least `m` with `a^G ⊆ a·Z_m(G)`.
    pub fn minimal_m(&self, a: ElemId) -> Option<usize> {
        let g = self.g;
        let orbit = conjugation_orbit(g, a);
        let ainv = g.inv(a);
        self.upper
            .terms
            .iter()
            .position(|z| orbit.iter().all(|&x| z.contains(g.mul(ainv, x))))
    }

    /// Least `m` with `[G, a] ⊆ Z_m(G)`, from all commutators `[x, a]`.
    pub fn minimal_m_by_commutators(&self, a: ElemId) -> Option<usize> {
        minimal_m_in(self.g, &Subgroup::whole(self.g), &self.upper, a)
    }

    /// Nilpotency class of `G / C_G(a^G)`: the least `c` with
    /// `γ_{c+1}(G) ⊆ C_G(a^G)`.
    pub fn achieved_class(&self, a: ElemId) -> Option<usize> {
        let orbit = conjugation_orbit(self.g, a);
        let c = centralizer_of_subset(self.g, &orbit).expect("orbit ids are valid");
        self.lower.terms.iter().position(|t| t.is_subgroup_of(&c))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenQuestionRecord {
    pub group_spec: String,
    pub element_id: ElemId,
    pub class_size: usize,
    pub minimal_m: usize,
    /// `None` only if `G / C_G(a^G)` is not nilpotent, which would be a breach.
    pub achieved_class: Option<usize>,
    pub tight: bool,
}

impl OpenQuestionRecord {
    pub fn is_breach(&self) -> bool {
        self.achieved_class.map_or(true, |c| c > self.minimal_m)
    }

    pub fn is_highlight(&self) -> bool {
        self.tight && self.minimal_m >= 3
    }
}

/// Records for one representative of each noncentral class of `g`, and
/// notes on what was left out.
pub fn open_question_group(g: &Group) -> (Vec<OpenQuestionRecord>, Vec<String>) {
    let ctx = OpenQuestionContext::new(g);
    let mut records = Vec::new();
    let mut undefined = 0;
    for cls in all_conjugacy_classes(g) {
        if cls.size() == 1 {
            continue;
        }
        let a = cls.rep();
        let Some(m) = ctx.minimal_m(a) else {
            undefined += 1;
            continue;
        };
        let achieved = ctx.achieved_class(a);
        records.push(OpenQuestionRecord {
            group_spec: g.name().to_string(),
            element_id: a,
            class_size: cls.size(),
            minimal_m: m,
            achieved_class: achieved,
            tight: achieved == Some(m),
        });
    }
    let mut notes = Vec::new();
    if records.is_empty() && undefined == 0 {
        notes.push(format!("{}: abelian, no noncentral classes", g.name()));
    }
    if undefined > 0 {
        notes.push(format!("{}: no m exists for {undefined} noncentral classes", g.name()));
    }
    (records, notes)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct OpenQuestionScan {
    pub records: Vec<OpenQuestionRecord>,
    /// Tight records with `minimal_m ≥ 3`.
    pub highlights: Vec<OpenQuestionRecord>,
    /// Records with `achieved_class > minimal_m`; always expected empty.
    pub breaches: Vec<OpenQuestionRecord>,
    pub notes: Vec<String>,
}

impl OpenQuestionScan {
    /// Merges per-group results, sorting records by `(group spec, element id)`.
    pub fn from_parts(parts: impl IntoIterator<Item = (Vec<OpenQuestionRecord>, Vec<String>)>) -> Self {
        let mut scan = OpenQuestionScan::default();
        for (records, notes) in parts {
            scan.records.extend(records);
            scan.notes.extend(notes);
        }
        scan.records
            .sort_by(|x, y| (&x.group_spec, x.element_id).cmp(&(&y.group_spec, y.element_id)));
        scan.highlights = scan.records.iter().filter(|r| r.is_highlight()).cloned().collect();
        scan.breaches = scan.records.iter().filter(|r| r.is_breach()).cloned().collect();
        scan
    }
}

pub fn open_question_scan(groups: &[&Group]) -> OpenQuestionScan {
    OpenQuestionScan::from_parts(groups.iter().map(|g| open_question_group(g)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureDatum {
    pub group_spec: String,
    pub a: ElemId,
    pub b: ElemId,
    pub d: ElemId,
    pub eta_ab: usize,
    pub section_dl: usize,
}

/// All `(A, B, D)` triples of a solvable group. Groups that are not
/// solvable or have more than `max_classes` classes give a note instead.
pub fn conjecture_group(g: &Group, max_classes: usize) -> Result<(Vec<ConjectureDatum>, Vec<String>)> {
    if !is_solvable(g) {
        return Ok((Vec::new(), vec![format!("{}: not solvable, skipped", g.name())]));
    }
    let k = all_conjugacy_classes(g).len();
    if k > max_classes {
        return Ok((
            Vec::new(),
            vec![format!("{}: {k} classes exceeds the class limit {max_classes}, skipped", g.name())],
        ));
    }
    let ctx = SweepContext::new(g);
    let data = ctx
        .triples()?
        .into_iter()
        .map(|t| ConjectureDatum {
            group_spec: g.name().to_string(),
            a: ctx.rep(t.a),
            b: ctx.rep(t.b),
            d: ctx.rep(t.d),
            eta_ab: t.eta_ab,
            section_dl: t
                .section
                .derived_length
                .expect("sections of solvable groups are solvable"),
        })
        .collect();
    Ok((data, Vec::new()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopePoint {
    pub eta: usize,
    pub max_dl: usize,
    pub count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FrontierPoint {
    pub s: u32,
    /// `max (dl − s) / η` over the data: the least `r` that works with this `s`.
    pub value: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ConjectureSummary {
    pub data: Vec<ConjectureDatum>,
    pub envelope: Vec<EnvelopePoint>,
    pub frontier: Vec<FrontierPoint>,
    /// Lexicographically least integer `(r, s)` in range covering all data.
    pub best_fit: Option<(u32, u32)>,
    /// For each `r`, the least `s` that covers all data, keeping only pairs
    /// not dominated by a smaller `r`.
    pub pareto: Vec<(u32, u32)>,
    pub notes: Vec<String>,
}

fn covers(data: &[ConjectureDatum], r: u32, s: u32) -> bool {
    data.iter()
        .all(|x| x.section_dl as u64 <= r as u64 * x.eta_ab as u64 + s as u64)
}

impl ConjectureSummary {
    pub fn from_parts(parts: impl IntoIterator<Item = (Vec<ConjectureDatum>, Vec<String>)>) -> Self {
        let mut out = ConjectureSummary::default();
        for (data, notes) in parts {
            out.data.extend(data);
            out.notes.extend(notes);
        }
        let mut env: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for x in &out.data {
            let e = env.entry(x.eta_ab).or_default();
            e.0 = e.0.max(x.section_dl);
            e.1 += 1;
        }
        out.envelope = env
            .into_iter()
            .map(|(eta, (max_dl, count))| EnvelopePoint { eta, max_dl, count })
            .collect();
        if !out.data.is_empty() {
            out.frontier = (0..=FIT_RANGE)
                .map(|s| FrontierPoint {
                    s,
                    value: out
                        .data
                        .iter()
                        .map(|x| (x.section_dl as f64 - s as f64) / x.eta_ab as f64)
                        .fold(f64::NEG_INFINITY, f64::max),
                })
                .collect();
        }
        for r in 0..=FIT_RANGE {
            if let Some(s) = (0..=FIT_RANGE).find(|&s| covers(&out.data, r, s)) {
                if out.best_fit.is_none() {
                    out.best_fit = Some((r, s));
                }
                if out.pareto.last().map_or(true, |&(_, prev)| s < prev) {
                    out.pareto.push((r, s));
                }
            }
        }
        out.notes
            .push("best_fit and pareto describe the scanned groups only".into());
        out
    }
}

pub fn conjecture_scan(groups: &[&Group], max_classes: usize) -> Result<ConjectureSummary> {
    let parts = groups
        .iter()
        .map(|g| conjecture_group(g, max_classes))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConjectureSummary::from_parts(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::parse_group_spec;
    use crate::section::analyze_section;

    fn grp(s: &str) -> Group {
        parse_group_spec(s).unwrap().group
    }

    #[test]
    fn wreath_records() {
        let g1 = grp("wr(C2,2)");
        let (recs, _) = open_question_group(&g1);
        assert!(!recs.is_empty());
        for r in &recs {
            assert_eq!((r.minimal_m, r.achieved_class, r.tight), (1, Some(1), true));
        }
    }

    #[test]
    fn abelian_groups_have_no_records() {
        let (recs, notes) = open_question_group(&grp("C2 x C4"));
        assert!(recs.is_empty());
        assert_eq!(notes.len(), 1);
        let g = grp("C6");
        let ctx = OpenQuestionContext::new(&g);
        for a in 0..g.order() {
            assert_eq!((ctx.minimal_m(a), ctx.achieved_class(a)), (Some(0), Some(0)));
        }
    }

    #[test]
    fn non_nilpotent_groups_note_missing_m() {
        let (recs, notes) = open_question_group(&grp("S3"));
        assert!(recs.is_empty());
        assert!(notes[0].contains("no m exists for 2"));
    }

    #[test]
    fn routes_agree_and_records_are_class_invariant() {
        for spec in ["D8", "Q8", "wr(C2,3)", "ES(3,-)", "C3 x Q8", "S4", "wr(C4,2)"] {
            let g = grp(spec);
            let ctx = OpenQuestionContext::new(&g);
            for a in 0..g.order() {
                assert_eq!(ctx.minimal_m(a), ctx.minimal_m_by_commutators(a), "{spec} {a}");
            }
            for cls in all_conjugacy_classes(&g) {
                let m = ctx.minimal_m(cls.rep());
                let c = ctx.achieved_class(cls.rep());
                for &x in cls.members() {
                    assert_eq!((ctx.minimal_m(x), ctx.achieved_class(x)), (m, c));
                }
            }
        }
    }

    #[test]
    fn achieved_class_matches_quotient_route() {
        for spec in ["D8", "wr(C2,3)", "ES(5,-)", "wr(wr(C2,2),2)"] {
            let g = grp(spec);
            let ctx = OpenQuestionContext::new(&g);
            for cls in all_conjugacy_classes(&g) {
                let orbit = conjugation_orbit(&g, cls.rep());
                let c = centralizer_of_subset(&g, &orbit).unwrap();
                let info = analyze_section(&g, &Subgroup::whole(&g), &c).unwrap();
                assert_eq!(ctx.achieved_class(cls.rep()), info.nilpotency_class, "{spec}");
            }
        }
    }

    #[test]
    fn conjecture_abelian_and_s4() {
        let ab = grp("C2 x C4");
        let s = conjecture_scan(&[&ab], 64).unwrap();
        assert!(s.data.iter().all(|x| x.section_dl == 0));
        assert_eq!(s.best_fit, Some((0, 0)));

        let s4 = grp("S4");
        let s = conjecture_scan(&[&s4], 64).unwrap();
        assert!(!s.data.is_empty());
        assert!(!s.envelope.is_empty());
        let (r, sv) = s.best_fit.unwrap();
        assert!(covers(&s.data, r, sv));
        assert_eq!(s.frontier.len(), FIT_RANGE as usize + 1);

        let s5 = grp("S5");
        let s = conjecture_scan(&[&s5], 64).unwrap();
        assert!(s.data.is_empty());
        assert!(s.notes[0].contains("not solvable"));
    }

    #[test]
    fn pareto_is_decreasing() {
        let g = grp("S3 x S3");
        let s = conjecture_scan(&[&g], 64).unwrap();
        for w in s.pareto.windows(2) {
            assert!(w[0].0 < w[1].0 && w[0].1 > w[1].1);
        }
        assert_eq!(s.pareto.first().copied(), s.best_fit);
    }
}
