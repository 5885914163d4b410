//! Fixed, ordered lists of test groups.

use crate::error::Result;
use crate::group::OrderGuard;
use crate::groupspec::GroupSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogProfile {
    /// Orders up to 64.
    Smoke,
    /// Smoke plus the larger groups, up to order 27,000.
    Full,
}

pub const SMOKE: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C2 x C2",
    "C6",
    "S3",
    "D4",
    "Q8",
    "C2 x C2 x C2",
    "D5",
    "D6",
    "AGL1(5)",
    "wr(C2,2)",
    "D8",
    "C2 x D4",
    "C2 x Q8",
    "wr(C3,2)",
    "C3 x S3",
    "S4",
    "wr(C2,3)",
    "C3 x Q8",
    "ES(3,+)",
    "ES(3,-)",
    "wr(C4,2)",
    "S3 x S3",
    "AGL1(7)",
    "D4 x D4",
];

pub const FULL_EXTRA: &[&str] = &[
    "D16",
    "Q8 x Q8",
    "wr(C2,2) x wr(C2,2)",
    "S5",
    "AGL1(11)",
    "ES(5,+)",
    "ES(5,-)",
    "wr(wr(C2,2),2)",
    "AGL1(13)",
    "D4 x ES(3,+)",
    "D4 x ES(5,+)",
    "ES(3,+) x ES(5,+)",
    "D4 x ES(3,+) x ES(5,+)",
];

pub fn catalog_specs(profile: CatalogProfile) -> Vec<&'static str> {
    let mut specs = SMOKE.to_vec();
    if profile == CatalogProfile::Full {
        specs.extend_from_slice(FULL_EXTRA);
    }
    specs
}

/// Builds every catalog group, in catalog order.
pub fn catalog(profile: CatalogProfile, guard: OrderGuard) -> Result<Vec<GroupSpec>> {
    catalog_specs(profile)
        .into_iter()
        .map(|s| GroupSpec::parse(s, guard))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupspec::SpecExpr;

    #[test]
    fn specs_are_normalized() {
        for s in catalog_specs(CatalogProfile::Full) {
            assert_eq!(SpecExpr::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn smoke_profile() {
        let groups = catalog(CatalogProfile::Smoke, OrderGuard::default()).unwrap();
        assert!(groups.len() >= 15);
        for name in ["S3", "S4", "D4", "Q8", "ES(3,+)", "ES(3,-)", "wr(C2,2)", "AGL1(5)"] {
            assert!(groups.iter().any(|g| g.expression == name), "{name}");
        }
        for g in &groups {
            assert!(g.group.order() <= 64);
            if g.group.order() <= 64 {
                assert!(g.group.check_closure(), "{}", g.expression);
            }
        }
    }
}
