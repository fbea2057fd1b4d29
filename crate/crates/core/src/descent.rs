//! Descent sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{invalid, Result};

/// A subset of `{1, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DescentSet {
    n: usize,
    members: BTreeSet<usize>,
}

impl DescentSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&m) = members.iter().find(|&&m| m == 0 || m >= n) {
            return Err(invalid(format!("descent {m} outside 1..{n}")));
        }
        Ok(DescentSet { n, members })
    }

    pub(crate) fn from_members_unchecked(n: usize, members: impl IntoIterator<Item = usize>) -> Self {
        DescentSet {
            n,
            members: members.into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &DescentSet) -> bool {
        self.n == other.n && self.members.is_subset(&other.members)
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<usize> = self.members.iter().copied().collect();
        write!(f, "{{{}}}", crate::text::join(&v, ","))
    }
}
