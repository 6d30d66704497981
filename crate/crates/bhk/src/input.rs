//! The JSON input document: a matrix, a group and a characteristic.
//!
//! ```json
//! {"matrix": [[2,1,0,0],[0,2,1,0],[0,0,6,1],[0,0,0,7]], "group": "J", "characteristic": 0}
//! ```
//!
//! `group` is `"J"`, `"SL"`, or `{"generators": [[48,72,24,24], ...]}`.

use bhk_core::{BhkPair, Characteristic, DelsarteMatrix, GroupChoice, IntMatrix4};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupKeyword {
    J,
    SL,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorList {
    pub generators: Vec<[i64; 4]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Keyword(GroupKeyword),
    Generators(GeneratorList),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputSpec {
    pub matrix: [[i64; 4]; 4],
    pub group: GroupSpec,
    #[serde(default)]
    pub characteristic: u64,
}

impl InputSpec {
    pub fn new(matrix: IntMatrix4, group: GroupSpec, characteristic: u64) -> Self {
        InputSpec {
            matrix: matrix.0,
            group,
            characteristic,
        }
    }

    pub fn group_choice(&self) -> GroupChoice {
        match &self.group {
            GroupSpec::Keyword(GroupKeyword::J) => GroupChoice::J,
            GroupSpec::Keyword(GroupKeyword::SL) => GroupChoice::Sl,
            GroupSpec::Generators(list) => GroupChoice::Generators(list.generators.clone()),
        }
    }

    pub fn characteristic(&self) -> Result<Characteristic, CliError> {
        Characteristic::new(self.characteristic).map_err(CliError::semantic)
    }

    /// The validated weighted Delsarte matrix.
    pub fn delsarte(&self) -> Result<DelsarteMatrix, CliError> {
        DelsarteMatrix::new(IntMatrix4::new(self.matrix), self.characteristic()?)
            .map_err(CliError::semantic)
    }

    /// Resolves the group against the matrix and checks `J ⊆ G ⊆ SL`.
    pub fn resolve(&self) -> Result<BhkPair, CliError> {
        let char = self.characteristic()?;
        let m = self.delsarte()?;
        if char.divides(m.exponent()) {
            return Err(CliError::semantic(bhk_core::Error::CharDividesD {
                p: char.get(),
                d: m.exponent(),
            }));
        }
        BhkPair::with_choice(m, self.group_choice(), char).map_err(CliError::semantic)
    }
}

/// Parses an input document, rejecting unknown keys.
pub fn parse_input(text: &str) -> Result<InputSpec, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}
