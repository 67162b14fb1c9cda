//! JSON group description files.
//!
//! ```json
//! {"kind":"free","generators":["p","q"]}
//! {"kind":"abelian","generators":["u","v"],"rank":2,"torsion":[]}
//! {"kind":"finite","generators":["s"],"elements":["e","s"],"table":[[0,1],[1,0]],"generator_map":{"s":1}}
//! {"kind":"free_product","factors":[ ... ]}
//! ```

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Free {
        generators: Vec<String>,
    },
    Abelian {
        generators: Vec<String>,
        rank: usize,
        #[serde(default)]
        torsion: Vec<u64>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        involutions: Vec<String>,
    },
    Finite {
        generators: Vec<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
        generator_map: BTreeMap<String, usize>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        involutions: Vec<String>,
    },
    FreeProduct {
        factors: Vec<GroupSpec>,
    },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<Self, GroupError> {
        serde_json::from_str(text).map_err(|e| GroupError::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("group spec serializes")
    }

    pub fn build(&self) -> Result<Group, GroupError> {
        match self {
            GroupSpec::Free { generators } => Group::free(generators),
            GroupSpec::Abelian {
                generators,
                rank,
                torsion,
                involutions,
            } => Group::abelian_with_involutions(generators, *rank, torsion, involutions),
            GroupSpec::Finite {
                generators,
                elements,
                table,
                generator_map,
                involutions,
            } => {
                let mut gens = Vec::with_capacity(generators.len());
                for g in generators {
                    let image = generator_map.get(g).ok_or_else(|| {
                        GroupError::InvalidSpec(format!("generator `{g}` missing from generator_map"))
                    })?;
                    gens.push((g.clone(), *image));
                }
                if let Some(extra) = generator_map.keys().find(|k| !generators.contains(k)) {
                    return Err(GroupError::InvalidSpec(format!(
                        "generator_map names unknown generator `{extra}`"
                    )));
                }
                Group::finite(elements.clone(), table.clone(), &gens, involutions)
            }
            GroupSpec::FreeProduct { factors } => {
                let built = factors
                    .iter()
                    .map(|f| match f {
                        GroupSpec::FreeProduct { .. } => Err(GroupError::InvalidSpec(
                            "nested free products are not supported".into(),
                        )),
                        f => f.build(),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Group::free_product(built)
            }
        }
    }
}
