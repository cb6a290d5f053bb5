use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Polynomial ring over the rationals with named variables; `n` is the
/// ambient dimension of the germ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Arc<Ring>> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        let mut out: Vec<String> = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if out.iter().any(|w| w == v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            out.push(v.to_string());
        }
        Ok(Arc::new(Ring { vars: out }))
    }

    pub fn n(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same ring with extra variables appended at the end.
    pub(crate) fn extended(&self, extra: &[&str]) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        for e in extra {
            let mut name = e.to_string();
            while vars.contains(&name) {
                name.push('_');
            }
            vars.push(name);
        }
        Arc::new(Ring { vars })
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(", "))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric()),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Ring::new::<&str>(&[]).is_err());
        assert!(Ring::new(&["x", "x"]).is_err());
        assert!(Ring::new(&["1x"]).is_err());
        let r = Ring::new(&["x1", "x2"]).unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r.index_of("x2"), Some(1));
    }

    #[test]
    fn extension_avoids_clashes() {
        let r = Ring::new(&["t", "x"]).unwrap();
        let e = r.extended(&["t"]);
        assert_eq!(e.vars(), &["t", "x", "t_"]);
    }
}
