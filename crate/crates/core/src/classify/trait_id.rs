use core::fmt;

use serde::{Deserialize, Serialize};

/// The five brand-personality traits, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TraitId {
    Sincerity,
    Excitement,
    Competence,
    Ruggedness,
    Sophistication,
}

impl TraitId {
    pub const ALL: [TraitId; 5] = [
        TraitId::Sincerity,
        TraitId::Excitement,
        TraitId::Competence,
        TraitId::Ruggedness,
        TraitId::Sophistication,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            TraitId::Sincerity => "sincerity",
            TraitId::Excitement => "excitement",
            TraitId::Competence => "competence",
            TraitId::Ruggedness => "ruggedness",
            TraitId::Sophistication => "sophistication",
        }
    }

    pub fn from_name(name: &str) -> Option<TraitId> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl fmt::Display for TraitId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
