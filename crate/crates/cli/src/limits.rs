use std::path::Path;

use crate::CliError;

/// Thresholds for `--algo auto` and the oracle budget. Overridable through a
/// `key = value` file named by `PATHPART_LIMITS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub xp_max_k: usize,
    pub xp_max_n: usize,
    pub nd_max: usize,
    pub vc_max: usize,
    pub oracle_max_vertices: usize,
    pub oracle_node_limit: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { xp_max_k: 4, xp_max_n: 40, nd_max: 8, vc_max: 7, oracle_max_vertices: 16, oracle_node_limit: 20_000_000 }
    }
}

impl Limits {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut l = Limits::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || CliError::Parse(format!("limits line {}: expected `key = number`", i + 1));
            let (key, value) = line.split_once('=').ok_or_else(bad)?;
            let value: u64 = value.trim().parse().map_err(|_| bad())?;
            let slot = match key.trim() {
                "xp_max_k" => &mut l.xp_max_k,
                "xp_max_n" => &mut l.xp_max_n,
                "nd_max" => &mut l.nd_max,
                "vc_max" => &mut l.vc_max,
                "oracle_max_vertices" => &mut l.oracle_max_vertices,
                "oracle_node_limit" => {
                    l.oracle_node_limit = value;
                    continue;
                }
                other => return Err(CliError::Parse(format!("limits line {}: unknown key `{other}`", i + 1))),
            };
            *slot = value as usize;
        }
        Ok(l)
    }

    pub fn from_env() -> Result<Self, CliError> {
        match std::env::var_os("PATHPART_LIMITS") {
            Some(path) => Self::load(Path::new(&path)),
            None => Ok(Limits::default()),
        }
    }

    fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
