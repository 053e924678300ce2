//! Flat key=value config files and flag/file/default resolution; flags win.

use std::collections::HashMap;
use std::path::Path;
use std::str::FromStr;

/// Parsed config file contents.
#[derive(Debug, Default, Clone)]
pub struct FileSettings {
    map: HashMap<String, String>,
}

impl FileSettings {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut map = HashMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", lineno + 1))?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(Self { map })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(String::as_str)
    }

    /// Typed lookup; a malformed value is an error, a missing key is None.
    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, String> {
        match self.map.get(key) {
            None => Ok(None),
            Some(text) => text
                .parse::<T>()
                .map(Some)
                .map_err(|_| format!("config key '{key}': cannot parse '{text}'")),
        }
    }
}

/// Flag beats file beats default.
pub fn resolve<T: FromStr>(
    flag: Option<T>,
    file: &FileSettings,
    key: &str,
    default: T,
) -> Result<T, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    Ok(file.get::<T>(key)?.unwrap_or(default))
}

/// Like [`resolve`] but the value must come from somewhere.
pub fn resolve_required<T: FromStr>(
    flag: Option<T>,
    file: &FileSettings,
    key: &str,
) -> Result<T, String> {
    if let Some(v) = flag {
        return Ok(v);
    }
    file.get::<T>(key)?
        .ok_or_else(|| format!("missing required parameter '{key}' (flag or config)"))
}
