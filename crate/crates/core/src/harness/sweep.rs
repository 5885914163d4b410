use serde::{Deserialize, Serialize};

use super::report::{TheoremId, VerificationReport};
use super::theorems::{
    verify_eta_pgroup_bound, verify_lemma_4_1, verify_theorem_4_2_sweep, verify_theorem_a,
    verify_theorem_b, verify_transfer_theorem, BoundFn,
};
use crate::classes::all_conjugacy_classes;
use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::section::DEFAULT_MAX_CLASSES;
use crate::series::normal_subgroups;
use crate::subgroup::Subgroup;

/// Groups up to this order have their theorem 4.2 sweep run over every
/// normal subgroup; larger ones only over `N = G`.
pub const NORMAL_SWEEP_MAX_ORDER: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub union_depth: usize,
    /// Class-pair sweeps skip groups with more classes than this.
    pub max_classes: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            union_depth: 1,
            max_classes: DEFAULT_MAX_CLASSES,
        }
    }
}

/// Runs one theorem checker on one group. Groups outside a theorem's
/// hypothesis, or too large for a class-pair sweep, give a skipped report.
pub fn run_theorem(theorem: TheoremId, g: &Group, opts: &SweepOptions) -> Result<VerificationReport> {
    let k = all_conjugacy_classes(g).len();
    let pairwise = matches!(theorem, TheoremId::A | TheoremId::B | TheoremId::Transfer);
    if pairwise && k > opts.max_classes {
        return Ok(VerificationReport::skipped(
            theorem,
            g.name(),
            format!("{k} classes exceeds the class limit {}", opts.max_classes),
        ));
    }
    let out = match theorem {
        TheoremId::A => verify_theorem_a(g, opts.union_depth),
        TheoremId::B => verify_theorem_b(g),
        TheoremId::Transfer => verify_transfer_theorem(g, &BoundFn::default()),
        TheoremId::CentralCommutator => Ok(verify_lemma_4_1(g)),
        TheoremId::NilpotentSection => {
            let mut note = None;
            let normals = if g.order() <= NORMAL_SWEEP_MAX_ORDER {
                normal_subgroups(g)?
            } else {
                note = Some(format!("order above {NORMAL_SWEEP_MAX_ORDER}: N = G only"));
                vec![Subgroup::whole(g)]
            };
            verify_theorem_4_2_sweep(g, &normals).map(|mut r| {
                r.notes.extend(note);
                r
            })
        }
        TheoremId::EtaPGroup => verify_eta_pgroup_bound(g),
        TheoremId::Example22 | TheoremId::Example32 | TheoremId::Remark4 => {
            return Err(GroupError::InvalidArgument(format!(
                "{theorem} is an example reproduction, not a per-group check"
            )))
        }
    };
    match out {
        Err(GroupError::NotSupersolvable(_)) => Ok(VerificationReport::skipped(
            theorem,
            g.name(),
            "not supersolvable",
        )),
        Err(GroupError::NotPGroup(_)) => Ok(VerificationReport::skipped(theorem, g.name(), "not a p-group")),
        other => other,
    }
}
