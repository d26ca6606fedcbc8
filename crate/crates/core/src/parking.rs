//! Classical and rational parking functions.
//!
//! A classical parking function of length `n` is the `(a, b) = (n, n + 1)`
//! case of an `(a, b)`-parking function, so both share one membership test:
//! the sorted sequence `z` must satisfy `a·z_i ≤ (i-1)·b`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::{binomial, Partition};

/// Shape of a parking-function family: sequences of length `len` whose
/// sorted form satisfies `len·z_i ≤ (i-1)·slope`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ParkingRule {
    len: usize,
    slope: u32,
}

impl ParkingRule {
    /// `PF_n`, i.e. `(a, b) = (n, n + 1)`.
    pub fn classical(n: usize) -> Self {
        ParkingRule {
            len: n,
            slope: n as u32 + 1,
        }
    }

    /// `PF_{a,b}`; requires `gcd(a, b) = 1`.
    pub fn rational(a: usize, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::invalid("rational parking functions need a, b >= 1"));
        }
        if (a as u64).gcd(&(b as u64)) != 1 {
            return Err(Error::invalid(format!("gcd({a}, {b}) != 1")));
        }
        Ok(ParkingRule { len: a, slope: b })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn slope(&self) -> u32 {
        self.slope
    }

    /// Membership test for the sorted-bound condition. Sequences of the
    /// wrong length are rejected.
    pub fn accepts(&self, x: &[u32]) -> bool {
        if x.len() != self.len {
            return false;
        }
        let mut z = x.to_vec();
        z.sort_unstable();
        self.sorted_ok(&z, 0)
    }

    // `z` sorted, preceded by `offset` implicit zeros.
    fn sorted_ok(&self, z: &[u32], offset: usize) -> bool {
        let a = self.len as u64;
        let b = self.slope as u64;
        z.iter()
            .enumerate()
            .all(|(i, &v)| a * v as u64 <= (i + offset) as u64 * b)
    }

    /// Like [`accepts`](Self::accepts) but reads residues `(x_i + shift) mod modulus`
    /// without allocating a sorted copy.
    pub(crate) fn accepts_shifted(&self, x: &[u32], shift: u32, modulus: u32, counts: &mut Vec<u32>) -> bool {
        counts.clear();
        counts.resize(modulus as usize, 0);
        for &v in x {
            counts[((v + shift) % modulus) as usize] += 1;
        }
        let a = self.len as u64;
        let b = self.slope as u64;
        let mut position = 0u64;
        for (value, &count) in counts.iter().enumerate() {
            if count > 0 {
                // the first occurrence of `value` sits at sorted index `position`
                if a * value as u64 > position * b {
                    return false;
                }
                position += count as u64;
            }
        }
        true
    }

    /// The unique `y ∈ Z_modulus` making `(x_i + y) mod modulus` a member,
    /// scanning `y = 0, 1, …`. Returns `None` if no shift works.
    pub fn parking_shift(&self, x: &[u32], modulus: u32) -> Option<u32> {
        let mut counts = Vec::with_capacity(modulus as usize);
        (0..modulus).find(|&y| self.accepts_shifted(x, y, modulus, &mut counts))
    }

    /// All members in lexicographic order.
    pub fn enumerate(&self) -> Vec<ParkingFunction> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.len);
        self.extend(&mut prefix, &mut out);
        out
    }

    fn extend(&self, prefix: &mut Vec<u32>, out: &mut Vec<ParkingFunction>) {
        if prefix.len() == self.len {
            out.push(ParkingFunction {
                coords: prefix.clone(),
            });
            return;
        }
        // entries are bounded by the last sorted slot: a·z ≤ (a-1)·b
        let max_value = ((self.len as u64 - 1) * self.slope as u64 / self.len as u64) as u32;
        for v in 0..=max_value {
            prefix.push(v);
            if self.completable(prefix) {
                self.extend(prefix, out);
            }
            prefix.pop();
        }
    }

    // Filling every remaining slot with 0 is the most permissive completion.
    fn completable(&self, prefix: &[u32]) -> bool {
        let mut z = prefix.to_vec();
        z.sort_unstable();
        self.sorted_ok(&z, self.len - prefix.len())
    }
}

/// A parking function stored as its coordinate sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ParkingFunction {
    coords: Vec<u32>,
}

impl ParkingFunction {
    /// Validates membership in `PF_n`.
    pub fn classical(coords: Vec<u32>) -> Result<Self> {
        if !is_parking(&coords) {
            return Err(Error::invalid(format!(
                "{} is not a parking function",
                format_word(&coords)
            )));
        }
        Ok(ParkingFunction { coords })
    }

    /// Validates membership in `PF_{a,b}` with `a = coords.len()`.
    pub fn rational(coords: Vec<u32>, b: u32) -> Result<Self> {
        let rule = ParkingRule::rational(coords.len(), b)?;
        if !rule.accepts(&coords) {
            return Err(Error::invalid(format!(
                "{} is not a ({}, {b})-parking function",
                format_word(&coords),
                coords.len()
            )));
        }
        Ok(ParkingFunction { coords })
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<u32> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.coords))
    }
}

/// Writes `010` when every entry is a single digit, `0,10,3` otherwise.
pub fn format_word(x: &[u32]) -> String {
    if x.iter().all(|&v| v < 10) {
        x.iter().map(|v| v.to_string()).collect()
    } else {
        x.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Inverse of [`format_word`]: commas separate entries if present, otherwise
/// each character is one digit.
pub fn parse_word(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let bad = |t: &str| Error::Parse(format!("bad word entry {t:?}"));
    if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad(t)))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
            .collect()
    }
}

pub fn is_parking(x: &[u32]) -> bool {
    ParkingRule::classical(x.len()).accepts(x)
}

pub fn enumerate_pf(n: usize) -> Vec<ParkingFunction> {
    ParkingRule::classical(n).enumerate()
}

pub fn is_rational_parking(x: &[u32], a: usize, b: u32) -> Result<bool> {
    Ok(ParkingRule::rational(a, b)?.accepts(x))
}

pub fn enumerate_rational(a: usize, b: u32) -> Result<Vec<ParkingFunction>> {
    Ok(ParkingRule::rational(a, b)?.enumerate())
}

/// Consecutive differences taken modulo `modulus`.
pub fn cyclic_differences(x: &[u32], modulus: u32) -> Vec<u32> {
    x.windows(2)
        .map(|w| (w[1] + modulus - w[0] % modulus) % modulus)
        .collect()
}

/// Pollak's map `PF_n → Z_{n+1}^{n-1}`.
pub fn pollak_forward(x: &[u32]) -> Result<Vec<u32>> {
    if !is_parking(x) {
        return Err(Error::invalid(format!(
            "{} is not a parking function",
            format_word(x)
        )));
    }
    Ok(cyclic_differences(x, x.len() as u32 + 1))
}

/// The unique parking function whose Pollak image is `alpha`, of length
/// `alpha.len() + 1`.
pub fn pollak_inverse(alpha: &[u32]) -> ParkingFunction {
    let n = alpha.len() + 1;
    let rule = ParkingRule::classical(n);
    let coords = lift_differences(&rule, alpha, n as u32 + 1)
        .expect("Pollak's theorem guarantees exactly one parking shift");
    ParkingFunction { coords }
}

/// Generalized Pollak inverse for `PF_{a,b}`: the unique member with the given
/// cyclic differences modulo `b`.
pub fn pollak_inverse_rational(alpha: &[u32], b: u32) -> Result<ParkingFunction> {
    let rule = ParkingRule::rational(alpha.len() + 1, b)?;
    let coords = lift_differences(&rule, alpha, b)
        .ok_or_else(|| Error::assertion("no parking shift for difference sequence"))?;
    Ok(ParkingFunction { coords })
}

fn lift_differences(rule: &ParkingRule, alpha: &[u32], modulus: u32) -> Option<Vec<u32>> {
    let mut partial = Vec::with_capacity(alpha.len() + 1);
    let mut acc = 0u32;
    partial.push(0);
    for &step in alpha {
        acc = (acc + step % modulus) % modulus;
        partial.push(acc);
    }
    let y = rule.parking_shift(&partial, modulus)?;
    Some(partial.iter().map(|&v| (v + y) % modulus).collect())
}

/// `Cat_n = C(2n, n)/(n+1)`.
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// `Cat_{a,b} = C(a+b, b)/(a+b)` for coprime `a, b`.
pub fn rational_catalan(a: u64, b: u64) -> Result<BigInt> {
    if a == 0 || b == 0 || a.gcd(&b) != 1 {
        return Err(Error::invalid(format!("rational Catalan needs coprime a, b >= 1, got ({a}, {b})")));
    }
    Ok(binomial(a + b, b) / BigInt::from(a + b))
}

/// Character of the permutation action on `PF_n`: `(n+1)^{ℓ(λ)-1}`.
pub fn classical_character(n: usize, lambda: &Partition) -> Result<BigInt> {
    if lambda.size() != n || n == 0 {
        return Err(Error::invalid(format!("{lambda} is not a partition of {n}")));
    }
    Ok(num_traits::pow(BigInt::from(n + 1), lambda.len() - 1))
}

/// `area(x) = C(n, 2) - Σ x_i`.
pub fn area(x: &ParkingFunction) -> u64 {
    let n = x.len() as u64;
    let total: u64 = x.coords().iter().map(|&v| v as u64).sum();
    n * n.saturating_sub(1) / 2 - total
}
