//! Size limits for the exponential searches, overridable through `FACETINT_GUARDS`
//! (comma-separated `name=value` pairs, e.g. `minor=14,k3n=5`).

use thiserror::Error;

pub const ENV: &str = "FACETINT_GUARDS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Vertices for minor search.
    pub minor: usize,
    /// Vertices for subcontraction search.
    pub subcontraction: usize,
    /// Vertices for Z3-connectivity (3^(n-1) targets).
    pub z3conn: usize,
    /// Largest n tried for K_{3,n}^+ subcontractions.
    pub k3n: usize,
    /// Faces for exact face colouring.
    pub faces: usize,
    /// Cyclomatic number for the independent refutation in certificate checks.
    pub cotree: usize,
    /// Vertices for flow-criticality checks.
    pub critical: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards { minor: 16, subcontraction: 12, z3conn: 11, k3n: 6, faces: 400, cotree: 24, critical: 14 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GuardError {
    #[error("malformed guard setting `{0}`")]
    Malformed(String),
    #[error("unknown guard `{0}`")]
    Unknown(String),
}

impl Guards {
    pub fn parse(text: &str) -> Result<Guards, GuardError> {
        let mut g = Guards::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item.split_once('=').ok_or_else(|| GuardError::Malformed(item.into()))?;
            let value: usize = value.trim().parse().map_err(|_| GuardError::Malformed(item.into()))?;
            let slot = match name.trim() {
                "minor" => &mut g.minor,
                "subcontraction" => &mut g.subcontraction,
                "z3conn" => &mut g.z3conn,
                "k3n" => &mut g.k3n,
                "faces" => &mut g.faces,
                "cotree" => &mut g.cotree,
                "critical" => &mut g.critical,
                other => return Err(GuardError::Unknown(other.into())),
            };
            *slot = value;
        }
        Ok(g)
    }

    /// Defaults, overridden by the environment variable when it is set.
    pub fn from_env() -> Result<Guards, GuardError> {
        match std::env::var(ENV) {
            Ok(s) => Guards::parse(&s),
            Err(_) => Ok(Guards::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        let g = Guards::parse("minor=9, k3n=4").unwrap();
        assert_eq!((g.minor, g.k3n, g.z3conn), (9, 4, Guards::default().z3conn));
        assert_eq!(Guards::parse(""), Ok(Guards::default()));
        assert!(matches!(Guards::parse("minor"), Err(GuardError::Malformed(_))));
        assert!(matches!(Guards::parse("size=3"), Err(GuardError::Unknown(_))));
    }
}
