use std::path::Path;

use serde::Deserialize;

use crate::{Common, Format};

/// Defaults read from `--config`; explicit flags win.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(rename = "type")]
    cartan_type: Option<String>,
    rank: Option<usize>,
    q: Option<String>,
    #[serde(rename = "L")]
    radius: Option<i32>,
    seed: Option<u64>,
    pub trials: Option<usize>,
    format: Option<Format>,
}

pub fn load(path: Option<&Path>) -> Result<FileConfig, String> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

impl FileConfig {
    pub fn apply(&self, c: &mut Common) {
        c.cartan_type = c.cartan_type.take().or_else(|| self.cartan_type.clone());
        c.rank = c.rank.or(self.rank);
        c.q = c.q.take().or_else(|| self.q.clone());
        c.radius = c.radius.or(self.radius);
        c.seed = c.seed.or(self.seed);
        c.format = c.format.or(self.format);
    }
}
