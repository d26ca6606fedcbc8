use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition, stored as weakly decreasing positive parts.
///
/// The `Ord` implementation is reverse-lexicographic on the parts, so that
/// `(n)` sorts first and `(1^n)` last. Every ordered map keyed on partitions
/// in this crate iterates in that canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The one-part partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// `(k, k, ..., k)` with `count` parts.
    pub fn rectangle(k: usize, count: usize) -> Self {
        Partition {
            parts: vec![k; count],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Size `n = sum of parts`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length `ℓ(λ)`, the number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size: `m[i]` counts the parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let top = self.parts.first().copied().unwrap_or(0);
        let mut m = vec![0; top + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    pub fn transpose(&self) -> Partition {
        let top = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=top)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Union of the multisets of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Removes one part equal to `value`, if present.
    pub fn remove_part(&self, value: usize) -> Option<Partition> {
        let idx = self.parts.iter().rposition(|&p| p == value)?;
        let mut parts = self.parts.clone();
        parts.remove(idx);
        Some(Partition { parts })
    }

    /// The centralizer order `z_λ = ∏ i^{m_i} m_i!`.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= BigInt::from(i) * BigInt::from(k);
            }
        }
        z
    }

    /// GCD of all parts; the empty partition has gcd 0.
    pub fn gcd(&self) -> usize {
        self.parts.iter().fold(0, |g, &p| g.gcd(&p))
    }

    /// The one-line images of the canonical permutation of this cycle type,
    /// `(1 … λ_1)(λ_1+1 … λ_1+λ_2)⋯`, zero-based.
    pub fn canonical_permutation(&self) -> Vec<usize> {
        let mut images = Vec::with_capacity(self.size());
        let mut start = 0;
        for &p in &self.parts {
            for j in 0..p {
                images.push(start + (j + 1) % p);
            }
            start += p;
        }
        images
    }

    /// Key form used in serialized maps, e.g. `"3+3"`. The empty partition
    /// serializes as `""`.
    pub fn key(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Parses comma, plus, or whitespace separated parts, e.g. `"3,3"` or `"3+3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(|c: char| c == ',' || c == '+' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_three_in_canonical_order() {
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=12).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn ordering_is_reverse_lex() {
        let all = partitions_of(7);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert!(p(&[4, 1, 1]) < p(&[3, 3]));
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[3, 3]).z(), BigInt::from(18));
        assert_eq!(p(&[2, 2, 2]).z(), BigInt::from(48));
        assert_eq!(Partition::empty().z(), BigInt::one());
    }

    #[test]
    fn gcd_values() {
        assert_eq!(p(&[3, 3]).gcd(), 3);
        assert_eq!(p(&[2, 1]).gcd(), 1);
        assert_eq!(p(&[6, 4, 2]).gcd(), 2);
    }

    #[test]
    fn transpose_and_keys() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 3]).key(), "3+3");
        assert_eq!(Partition::parse("3,3").unwrap(), p(&[3, 3]));
        assert_eq!(Partition::parse("1+2+1").unwrap(), p(&[2, 1, 1]));
        assert!(Partition::parse("3,0").is_err());
        assert!(Partition::parse("x").is_err());
    }

    #[test]
    fn canonical_permutation_cycles() {
        assert_eq!(p(&[3, 2, 1]).canonical_permutation(), vec![1, 2, 0, 4, 3, 5]);
    }

    #[test]
    fn remove_and_union() {
        assert_eq!(p(&[3, 1, 1]).remove_part(1), Some(p(&[3, 1])));
        assert_eq!(p(&[3, 2]).remove_part(1), None);
        assert_eq!(p(&[3, 1]).union(&p(&[2])), p(&[3, 2, 1]));
    }
}
