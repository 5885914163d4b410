//! Shared fixtures for the benchmarks.

use cpl_core::{parse_group_spec, Group};

/// Groups spanning the catalog: small solvable, a large p-group and a
/// nonsolvable one.
pub const SPECS: &[&str] = &["S4", "AGL1(13)", "D4 x ES(3,+)", "wr(wr(C2,2),2)", "S6"];

pub fn group(spec: &str) -> Group {
    parse_group_spec(spec).expect("fixture spec parses").group
}

/// A fresh copy of `spec` with no cached class data, rebuilt from its
/// generators.
pub fn fresh(g: &Group) -> Group {
    Group::from_generators(g.name(), g.degree(), g.generators().to_vec(), Default::default())
        .expect("fixture regenerates")
}
