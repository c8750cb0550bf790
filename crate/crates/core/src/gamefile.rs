//! JSON game files: `{"format":[2,2],"field":"QQ","tensors":[{"0,0":"3"}, ...]}`.
//!
//! Entries are integer or `a/b` strings; omitted keys are zero. Over `QQ`
//! an entry may also be affine in a parameter `e` (`"1+e"`), which makes
//! the file a parametric game.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gametensor::{Format, Game, Tensor};
use crate::nash::{parse_affine, ParametricGame};
use crate::polyring::CoefField;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GameFile {
    pub format: Vec<usize>,
    #[serde(default = "default_field")]
    pub field: String,
    pub tensors: Vec<BTreeMap<String, String>>,
}

fn default_field() -> String {
    "QQ".into()
}

fn parse_key(format: &Format, key: &str) -> Result<Vec<usize>> {
    let idx = key
        .split(',')
        .map(|t| t.trim().parse::<usize>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse(format!("bad index key {key:?}")))?;
    if !format.contains(&idx) {
        return Err(Error::InvalidFormat(format!(
            "index {key:?} outside format {format}"
        )));
    }
    Ok(idx)
}

fn key_of(idx: &[usize]) -> String {
    idx.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")
}

impl GameFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("game file: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        GameFile::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("game files serialize")
    }

    pub fn from_game(game: &Game) -> Self {
        GameFile {
            format: game.format().dims().to_vec(),
            field: game.field().to_string(),
            tensors: game
                .tensors()
                .iter()
                .map(|t| {
                    t.nonzero_entries()
                        .map(|(idx, v)| (key_of(idx), v.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn format(&self) -> Result<Format> {
        Format::new(self.format.clone())
    }

    pub fn field(&self) -> Result<CoefField> {
        self.field.parse()
    }

    fn check_shape(&self) -> Result<Format> {
        let format = self.format()?;
        if self.tensors.len() != format.players() {
            return Err(Error::DimensionMismatch {
                expected: format.players(),
                got: self.tensors.len(),
            });
        }
        Ok(format)
    }

    /// True iff some entry mentions the parameter.
    pub fn is_parametric(&self) -> bool {
        self.tensors
            .iter()
            .flat_map(|t| t.values())
            .any(|v| v.contains('e'))
    }

    /// The game, with entries read in `field` (default: the file's field).
    pub fn to_game(&self, field: Option<CoefField>) -> Result<Game> {
        if self.is_parametric() {
            return Err(Error::MissingAssignment(
                "e (the game has parametric entries; pass --param e=VALUE)".into(),
            ));
        }
        let format = self.check_shape()?;
        let field = match field {
            Some(f) => f,
            None => self.field()?,
        };
        let tensors = self
            .tensors
            .iter()
            .map(|entries| {
                let mut t = Tensor::zeros(format.clone(), field);
                for (k, v) in entries {
                    t.set(&parse_key(&format, k)?, field.parse_scalar(v)?)?;
                }
                Ok(t)
            })
            .collect::<Result<Vec<_>>>()?;
        Game::new(tensors)
    }

    /// The game as an affine family in `e`; requires `QQ`.
    pub fn to_parametric(&self) -> Result<ParametricGame> {
        let format = self.check_shape()?;
        if !self.field()?.is_rational() {
            return Err(Error::UnsupportedField(
                "parametric games need QQ payoffs".into(),
            ));
        }
        let entries = self
            .tensors
            .iter()
            .map(|t| {
                t.iter()
                    .map(|(k, v)| {
                        parse_affine(v)?;
                        Ok((parse_key(&format, k)?, v.clone()))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ParametricGame::from_expressions(&format, &entries)
    }
}
