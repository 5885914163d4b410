//! Generator files: `{"name": str, "degree": n, "generators": [[int, ...], ...]}`,
//! or a JSON array of such objects.

use serde::{Deserialize, Serialize};

use crate::error::{GroupError, Result};
use crate::group::{Group, OrderGuard};
use crate::groupspec::GroupSpec;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorFile {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(GeneratorFile),
    Many(Vec<GeneratorFile>),
}

impl GeneratorFile {
    pub fn build(&self, guard: OrderGuard) -> Result<Group> {
        let gens = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, images)| {
                if images.len() != self.degree {
                    return Err(GroupError::Ingest(format!(
                        "{}: generator {i} has {} images, expected {}",
                        self.name,
                        images.len(),
                        self.degree
                    )));
                }
                Permutation::new(images.clone())
                    .map_err(|e| GroupError::Ingest(format!("{}: generator {i}: {e}", self.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        Group::from_generators(self.name.clone(), self.degree, gens, guard)
    }
}

pub fn parse_generator_json(text: &str, guard: OrderGuard) -> Result<Vec<GroupSpec>> {
    let files = match serde_json::from_str::<OneOrMany>(text)
        .map_err(|e| GroupError::Ingest(e.to_string()))?
    {
        OneOrMany::One(f) => vec![f],
        OneOrMany::Many(fs) => fs,
    };
    files
        .iter()
        .map(|f| f.build(guard).map(GroupSpec::from_group))
        .collect()
}

pub fn load_generator_file(path: &std::path::Path, guard: OrderGuard) -> Result<Vec<GroupSpec>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GroupError::Ingest(format!("{}: {e}", path.display())))?;
    parse_generator_json(&text, guard)
}
