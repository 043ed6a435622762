//! Key-value configuration files: the surface-token mapping used by the fact
//! compiler and the role-to-preposition table used by the realizer.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {0}: expected key=value")]
    MalformedLine(usize),
    #[error("duplicate key '{0}'")]
    DuplicateKey(String),
    #[error("missing required key '{0}'")]
    MissingRequiredKey(String),
}

/// Parses `key=value` lines. Blank lines and lines starting with `#` are
/// skipped; keys and values are trimmed and must be nonempty.
pub fn parse_key_values(text: &str) -> Result<Vec<(String, String)>, ConfigError> {
    let mut seen = BTreeMap::new();
    let mut pairs = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .filter(|(k, v)| !k.is_empty() && !v.is_empty())
            .ok_or(ConfigError::MalformedLine(index + 1))?;
        if seen.insert(key.to_string(), ()).is_some() {
            return Err(ConfigError::DuplicateKey(key.to_string()));
        }
        pairs.push((key.to_string(), value.to_string()));
    }
    Ok(pairs)
}

/// Every surface token the notation parser can emit for operators,
/// determiners, numbers and functions.
pub const REQUIRED_KEYS: [&str; 14] = [
    "Past", "Pres", "Pf", "Prog", "d", "i", "1", "m", "Ag", "Go", "Rec", "0", "Subj", "Obj",
];

pub const SEED_MAPPING: &str = include_str!("../data/mapping.conf");

/// Maps notation tokens (`m`, `Ag`, ...) to fact values (`plural`, `agent`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MappingConfig {
    entries: BTreeMap<String, String>,
}

impl MappingConfig {
    /// Builds a config without checking the required key set. Compiling
    /// against such a config can fail with an unmapped token.
    pub fn partial<K: Into<String>, V: Into<String>>(
        pairs: impl IntoIterator<Item = (K, V)>,
    ) -> Self {
        MappingConfig {
            entries: pairs
                .into_iter()
                .map(|(k, v)| (k.into(), v.into()))
                .collect(),
        }
    }

    pub fn get(&self, token: &str) -> Option<&str> {
        self.entries.get(token).map(String::as_str)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn seed() -> Self {
        load_mapping(SEED_MAPPING).expect("bundled mapping config is valid")
    }
}

pub fn load_mapping(text: &str) -> Result<MappingConfig, ConfigError> {
    let entries: BTreeMap<String, String> = parse_key_values(text)?.into_iter().collect();
    if let Some(missing) = REQUIRED_KEYS.iter().find(|k| !entries.contains_key(**k)) {
        return Err(ConfigError::MissingRequiredKey(missing.to_string()));
    }
    Ok(MappingConfig { entries })
}

/// Role to preposition table for arguments realized after the object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrepositionMap {
    entries: BTreeMap<String, String>,
}

impl Default for PrepositionMap {
    fn default() -> Self {
        PrepositionMap {
            entries: [("recipient", "to"), ("agent", "by")]
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }
}

impl PrepositionMap {
    /// Loads entries on top of the default `recipient=to`, `agent=by` table.
    pub fn load(text: &str) -> Result<Self, ConfigError> {
        let mut map = PrepositionMap::default();
        map.entries.extend(parse_key_values(text)?);
        Ok(map)
    }

    pub fn get(&self, role: &str) -> Option<&str> {
        self.entries.get(role).map(String::as_str)
    }
}
