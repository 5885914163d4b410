//! Derived, lower central, upper central and chief series.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::classes::all_conjugacy_classes;
use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::subgroup::{commutator_subgroup, normal_closure_under, Subgroup};

/// Refuse to enumerate more normal subgroups than this.
pub const NORMAL_SUBGROUP_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
    Chief,
}

#[derive(Clone, Debug)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    /// Outermost first for descending series; `Z_0` first for the upper
    /// central series.
    pub terms: Vec<Subgroup>,
    pub stabilized: bool,
    /// Derived length, nilpotency class or chief length, when defined.
    pub length_stat: Option<usize>,
}

impl SeriesReport {
    pub fn last(&self) -> &Subgroup {
        self.terms.last().expect("series has at least one term")
    }

    /// Orders of the terms, in series order.
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }
}

fn descending(
    top: &Subgroup,
    kind: SeriesKind,
    next: impl Fn(&Subgroup) -> Subgroup,
) -> SeriesReport {
    let mut terms = vec![top.clone()];
    loop {
        let cur = terms.last().unwrap();
        let n = next(cur);
        if &n == cur {
            break;
        }
        terms.push(n);
    }
    let reaches_one = terms.last().unwrap().is_trivial();
    SeriesReport {
        kind,
        length_stat: reaches_one.then(|| terms.len() - 1),
        terms,
        stabilized: true,
    }
}

/// `H ≥ H′ ≥ H″ ≥ …` for a subgroup `H` of `g`.
pub fn derived_series_of(g: &Group, h: &Subgroup) -> SeriesReport {
    descending(h, SeriesKind::Derived, |t| commutator_subgroup(g, t, t))
}

pub fn derived_series(g: &Group) -> SeriesReport {
    derived_series_of(g, &Subgroup::whole(g))
}

/// `None` for non-solvable groups.
pub fn derived_length(g: &Group) -> Option<usize> {
    derived_series(g).length_stat
}

/// `H¹ = H`, `H^{m+1} = [H^m, H]`.
pub fn lower_central_series_of(g: &Group, h: &Subgroup) -> SeriesReport {
    descending(h, SeriesKind::LowerCentral, |t| commutator_subgroup(g, t, h))
}

pub fn lower_central_series(g: &Group) -> SeriesReport {
    lower_central_series_of(g, &Subgroup::whole(g))
}

/// `None` for non-nilpotent groups; the trivial group has class 0.
pub fn nilpotency_class(g: &Group) -> Option<usize> {
    lower_central_series(g).length_stat
}

/// `1 = Z_0 ≤ Z_1 ≤ …` for a subgroup `H`.
///
/// `Z_{i+1}/Z_i` is the center of `H/Z_i`, i.e. the `x ∈ H` whose
/// commutators with every generator of `H` land in `Z_i`. This avoids
/// materializing the quotients, which for groups with small center would be
/// nearly as large as `H` itself.
pub fn upper_central_series_of(g: &Group, h: &Subgroup) -> SeriesReport {
    let mut terms = vec![Subgroup::trivial(g)];
    loop {
        let cur = terms.last().unwrap();
        let mut mask = FixedBitSet::with_capacity(g.order());
        for &x in h.members() {
            if h.generators()
                .iter()
                .all(|&s| cur.contains(g.commutator(x, s)))
            {
                mask.insert(x);
            }
        }
        if &mask == cur.mask() {
            break;
        }
        let next = Subgroup::from_mask(g, mask);
        terms.push(next);
    }
    let reaches_top = terms.last().unwrap() == h;
    SeriesReport {
        kind: SeriesKind::UpperCentral,
        length_stat: reaches_top.then(|| terms.len() - 1),
        terms,
        stabilized: true,
    }
}

pub fn upper_central_series(g: &Group) -> SeriesReport {
    upper_central_series_of(g, &Subgroup::whole(g))
}

/// `Z_i(G)`, clamped at the hypercenter.
pub fn ith_center(g: &Group, i: usize) -> Subgroup {
    let s = upper_central_series(g);
    s.terms[i.min(s.terms.len() - 1)].clone()
}

pub fn is_solvable(g: &Group) -> bool {
    derived_length(g).is_some()
}

pub fn is_nilpotent(g: &Group) -> bool {
    nilpotency_class(g).is_some()
}

/// Which minimal normal subgroup to take at each step of a chief series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiefChoice {
    /// Smallest normal closure over classes in ascending rep order.
    First,
    /// Start from the last class and shrink until minimal.
    Last,
}

fn closure_over(g: &Group, base: &Subgroup, x: usize) -> Subgroup {
    let mut seed = base.generators().to_vec();
    seed.push(x);
    normal_closure_under(g, &seed, g.generator_ids())
}

/// Minimal normal subgroups of `g` strictly containing the normal subgroup `m`.
///
/// Each is `⟨m, x^G⟩` for any of its elements `x ∉ m`, so they are the
/// inclusion-minimal members of that family.
fn minimal_normal_above(g: &Group, m: &Subgroup) -> Vec<Subgroup> {
    let mut cands: Vec<Subgroup> = Vec::new();
    for c in all_conjugacy_classes(g) {
        if m.contains(c.rep()) {
            continue;
        }
        let k = closure_over(g, m, c.rep());
        if !cands.contains(&k) {
            cands.push(k);
        }
    }
    let minimal: Vec<Subgroup> = cands
        .iter()
        .filter(|k| {
            !cands
                .iter()
                .any(|o| o.order() < k.order() && o.is_subgroup_of(k))
        })
        .cloned()
        .collect();
    minimal
}

/// A chief series `G = N_0 > N_1 > … > N_r = 1`, built from the bottom.
pub fn chief_series(g: &Group, choice: ChiefChoice) -> SeriesReport {
    let whole = Subgroup::whole(g);
    let classes = all_conjugacy_classes(g);
    let mut terms = vec![Subgroup::trivial(g)];
    while terms.last().unwrap() != &whole {
        let m = terms.last().unwrap();
        let next = match choice {
            ChiefChoice::First => {
                let mut best: Option<Subgroup> = None;
                for c in classes {
                    if m.contains(c.rep()) {
                        continue;
                    }
                    let k = closure_over(g, m, c.rep());
                    if best.as_ref().map_or(true, |b| k.order() < b.order()) {
                        best = Some(k);
                    }
                }
                best.expect("proper normal subgroup has an element outside it")
            }
            ChiefChoice::Last => {
                let start = classes
                    .iter()
                    .rev()
                    .find(|c| !m.contains(c.rep()))
                    .expect("proper normal subgroup has an element outside it");
                let mut k = closure_over(g, m, start.rep());
                'shrink: loop {
                    for c in classes.iter().rev() {
                        if m.contains(c.rep()) || !k.contains(c.rep()) {
                            continue;
                        }
                        let smaller = closure_over(g, m, c.rep());
                        if smaller.order() < k.order() {
                            k = smaller;
                            continue 'shrink;
                        }
                    }
                    break;
                }
                k
            }
        };
        terms.push(next);
    }
    terms.reverse();
    SeriesReport {
        kind: SeriesKind::Chief,
        length_stat: Some(terms.len() - 1),
        terms,
        stabilized: true,
    }
}

/// Orders of the chief factors `|N_i / N_{i+1}|`, top first.
pub fn chief_factor_orders(s: &SeriesReport) -> Vec<usize> {
    s.terms
        .windows(2)
        .map(|w| w[0].order() / w[1].order())
        .collect()
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Supersolvable iff every chief factor has prime order. Chief factors are
/// the same for every chief series, so one suffices; nilpotent groups are
/// accepted without building it.
pub fn is_supersolvable(g: &Group) -> bool {
    if is_nilpotent(g) {
        return true;
    }
    is_supersolvable_by_chief_series(g)
}

pub fn is_supersolvable_by_chief_series(g: &Group) -> bool {
    chief_factor_orders(&chief_series(g, ChiefChoice::First))
        .into_iter()
        .all(is_prime)
}

pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Err(GroupError::TrivialGroup);
    }
    let mut out = minimal_normal_above(g, &Subgroup::trivial(g));
    out.sort_by(|a, b| a.members().cmp(b.members()));
    Ok(out)
}

/// Every normal subgroup, as joins of normal closures of classes, sorted by
/// order and then members.
pub fn normal_subgroups(g: &Group) -> Result<Vec<Subgroup>> {
    let classes = all_conjugacy_classes(g);
    let mut found: Vec<Subgroup> = vec![Subgroup::trivial(g)];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(vec![0]);
    let mut head = 0;
    while head < found.len() {
        let n = found[head].clone();
        for c in classes {
            if n.contains(c.rep()) {
                continue;
            }
            let k = closure_over(g, &n, c.rep());
            if seen.insert(k.members().to_vec()) {
                found.push(k);
                if found.len() > NORMAL_SUBGROUP_LIMIT {
                    return Err(GroupError::InvalidArgument(format!(
                        "{} has more than {NORMAL_SUBGROUP_LIMIT} normal subgroups",
                        g.name()
                    )));
                }
            }
        }
        head += 1;
    }
    found.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    Ok(found)
}

/// Derived length of the section `num/den`, computed inside the parent:
/// the least `d` with `num^{(d)} ⊆ den`.
pub fn section_derived_length(g: &Group, num: &Subgroup, den: &Subgroup) -> Option<usize> {
    let s = derived_series_of(g, num);
    s.terms.iter().position(|t| t.is_subgroup_of(den))
}

/// Nilpotency class of `num/den` inside the parent: the least `c` with
/// `γ_{c+1}(num) ⊆ den`.
pub fn section_nilpotency_class(g: &Group, num: &Subgroup, den: &Subgroup) -> Option<usize> {
    let s = lower_central_series_of(g, num);
    s.terms.iter().position(|t| t.is_subgroup_of(den))
}
