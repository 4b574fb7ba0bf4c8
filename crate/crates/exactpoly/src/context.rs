use std::fmt;
use std::sync::Arc;

use crate::PolyError;

/// An ordered list of distinct variable names.
///
/// The order is the variable order of the graded lexicographic monomial
/// order, so it determines leading terms, square-root sign normalization and
/// the canonical text rendering. Cloning is cheap (the names are shared).
#[derive(Clone)]
pub struct VarContext {
    names: Arc<[String]>,
}

impl VarContext {
    pub fn new<I, S>(names: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Self { names: names.into() })
    }

    /// The context with no variables (constants only).
    pub fn empty() -> Self {
        Self { names: Arc::from(Vec::new()) }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index_of(name).is_some()
    }

    /// A new context with `more` appended after the existing variables.
    pub fn extend<I, S>(&self, more: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(self.names.iter().cloned().chain(more.into_iter().map(Into::into)))
    }

    pub fn is_prefix_of(&self, other: &VarContext) -> bool {
        self.len() <= other.len() && self.names.iter().zip(other.names.iter()).all(|(a, b)| a == b)
    }

    /// The common extension of two contexts, when one is a prefix of the other.
    pub fn join(&self, other: &VarContext) -> Result<VarContext, PolyError> {
        if self.is_prefix_of(other) {
            Ok(other.clone())
        } else if other.is_prefix_of(self) {
            Ok(self.clone())
        } else {
            Err(PolyError::ContextMismatch {
                left: self.names.to_vec(),
                right: other.names.to_vec(),
            })
        }
    }
}

impl PartialEq for VarContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for VarContext {}

impl fmt::Debug for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_rejected() {
        assert!(matches!(VarContext::new(["x", "y", "x"]), Err(PolyError::DuplicateVariable(_))));
    }

    #[test]
    fn join_requires_prefix() {
        let xy = VarContext::new(["x", "y"]).unwrap();
        let xyz = VarContext::new(["x", "y", "z"]).unwrap();
        let yx = VarContext::new(["y", "x"]).unwrap();
        assert_eq!(xy.join(&xyz).unwrap(), xyz);
        assert_eq!(xyz.join(&xy).unwrap(), xyz);
        assert!(xy.join(&yx).is_err());
    }
}
