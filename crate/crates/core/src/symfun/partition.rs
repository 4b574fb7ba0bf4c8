use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::{Error, Result};

/// A weakly decreasing tuple of nonnegative integers.
///
/// Trailing zeros are padding: `(2,1,0)` and `(2,1)` compare equal and hash
/// alike, but the stored length is kept so rectangle enumerations can render
/// as `(0)` rather than `()`.
#[derive(Clone)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(render(&parts)));
        }
        Ok(Self { parts })
    }

    /// Builds from any multiset of parts by sorting.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// Parts as stored, padding included.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts without trailing zeros.
    pub fn nonzero_parts(&self) -> &[u32] {
        let len = self.parts.iter().position(|&p| p == 0).unwrap_or(self.parts.len());
        &self.parts[..len]
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.nonzero_parts().len()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Parts zero-padded (or zero-trimmed) to exactly `len` entries.
    ///
    /// # Panics
    /// If there are more than `len` nonzero parts.
    pub fn padded(&self, len: usize) -> Vec<u32> {
        let nz = self.nonzero_parts();
        assert!(nz.len() <= len, "partition {self} longer than {len}");
        let mut v = nz.to_vec();
        v.resize(len, 0);
        v
    }

    /// Number of parts (padding zeros included once padded to `ambient`) equal to `k`.
    pub fn multiplicity(&self, k: u32, ambient: usize) -> usize {
        if k == 0 {
            ambient.saturating_sub(self.length())
        } else {
            self.parts.iter().filter(|&&p| p == k).count()
        }
    }

    pub fn fits_in(&self, rows: usize, cols: u32) -> bool {
        self.length() <= rows && self.parts.first().is_none_or(|&p| p <= cols)
    }

    /// The multiset union `self ∪ {k}`, sorted.
    pub fn insert(&self, k: u32) -> Partition {
        let mut parts = self.nonzero_parts().to_vec();
        let pos = parts.iter().position(|&p| p < k).unwrap_or(parts.len());
        parts.insert(pos, k);
        Partition { parts }
    }

    /// Removes one copy of `k`, if present.
    pub fn remove(&self, k: u32) -> Option<Partition> {
        let mut parts = self.nonzero_parts().to_vec();
        if k == 0 {
            return Some(Partition { parts });
        }
        let pos = parts.iter().position(|&p| p == k)?;
        parts.remove(pos);
        Some(Partition { parts })
    }
}

fn render(parts: &[u32]) -> String {
    let body: Vec<String> = parts.iter().map(u32::to_string).collect();
    format!("({})", body.join(","))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.parts))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl PartialEq for Partition {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_parts() == other.nonzero_parts()
    }
}

impl Eq for Partition {}

impl Hash for Partition {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.nonzero_parts().hash(state);
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nonzero_parts().cmp(other.nonzero_parts())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1,1)`, `()`, and the same without parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(t).trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts).map_err(|_| Error::InvalidPartition(s.to_string()))
    }
}

/// All partitions with at most `rows` parts, each at most `cols`.
///
/// Each is stored padded to `rows` entries; the list is in lexicographic
/// order of the padded tuples and has `binomial(rows + cols, rows)` entries.
pub fn partitions_in_rect(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(rows: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == rows {
            out.push(prefix.clone());
            return;
        }
        for p in 0..=max {
            prefix.push(p);
            rec(rows, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(|parts| Partition { parts }).collect()
}

/// The complement of `lambda` in the `rows × cols` rectangle,
/// `(cols − λ_rows, …, cols − λ_1)`, padded to `rows` entries.
pub fn complement_partition(lambda: &Partition, rows: usize, cols: u32) -> Result<Partition> {
    if !lambda.fits_in(rows, cols) {
        return Err(Error::PartitionOutsideRectangle { partition: lambda.to_string(), rows, cols: cols as usize });
    }
    let padded = lambda.padded(rows);
    Ok(Partition { parts: padded.iter().rev().map(|&p| cols - p).collect() })
}

/// `μ(k)`: the sorted multiset `μ ∪ {k}`.
pub fn mu_insert(mu: &Partition, k: u32) -> Partition {
    mu.insert(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rectangle_enumeration() {
        let r = partitions_in_rect(1, 2);
        assert_eq!(r, vec![p(&[0]), p(&[1]), p(&[2])]);
        assert_eq!(r[0].to_string(), "(0)");
        assert_eq!(partitions_in_rect(2, 2).len(), 6);
        assert_eq!(partitions_in_rect(2, 3).len(), 10);
        assert_eq!(partitions_in_rect(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn complements() {
        assert_eq!(complement_partition(&p(&[2, 0]), 2, 2).unwrap(), p(&[2, 0]));
        assert_eq!(complement_partition(&p(&[0, 0, 0]), 3, 4).unwrap(), p(&[4, 4, 4]));
        assert_eq!(complement_partition(&p(&[2, 1]), 2, 3).unwrap(), p(&[2, 1]));
        assert!(complement_partition(&p(&[3]), 2, 2).is_err());
    }

    #[test]
    fn insertion_and_removal() {
        assert_eq!(mu_insert(&p(&[3, 1]), 2), p(&[3, 2, 1]));
        assert_eq!(mu_insert(&Partition::empty(), 5), p(&[5]));
        assert_eq!(mu_insert(&p(&[3, 1]), 2).remove(2), Some(p(&[3, 1])));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(a)".parse::<Partition>().is_err());
    }

    #[test]
    fn padding_is_semantic_noise() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert_eq!(p(&[2, 2]).multiplicity(0, 3), 1);
        assert_eq!(Partition::empty().multiplicity(0, 1), 1);
    }
}
