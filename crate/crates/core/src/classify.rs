//! Isomorphism classes of the modules `τ_{n,c}` as `c` ranges over `[n]`.
//!
//! Two modules are identified when their characters agree. The classes are
//! indexed by `D_n = {k | n : n/k ≡ n (mod 2)}`.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::character::{character_vector, CharacterVector};
use crate::error::{Error, Result};
use crate::numth::{binomial, divisors};

/// `D_n`, sorted.
pub fn d_set(n: u64) -> Vec<u64> {
    divisors(n)
        .into_iter()
        .filter(|&k| (n / k) % 2 == n % 2)
        .collect()
}

/// `C_{n,k}`: the `c ∈ [n]` with `gcd(n, c) = k`, or `gcd(n, c) ∈ {k, 2k}`
/// when `n/k ≡ 2 (mod 4)`.
pub fn c_set(n: u64, k: u64) -> Result<Vec<u64>> {
    if n == 0 || k == 0 || n % k != 0 || (n / k) % 2 != n % 2 {
        return Err(Error::invalid(format!("{k} is not in D_{n}")));
    }
    let doubled = (n / k) % 4 == 2;
    Ok((1..=n)
        .filter(|c| {
            let g = n.gcd(c);
            g == k || (doubled && g == 2 * k)
        })
        .collect())
}

/// `|D_n|`, cross-checked against the count of divisors not `≡ 2 (mod 4)`.
pub fn class_count(n: u64) -> Result<usize> {
    let count = d_set(n).len();
    let other = divisors(n).into_iter().filter(|d| d % 4 != 2).count();
    if count != other {
        return Err(Error::assertion(format!(
            "|D_{n}| = {count} but {other} divisors are not 2 mod 4"
        )));
    }
    Ok(count)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: u64,
    /// `c ↦ k` with `c ∈ C_{n,k}`.
    pub class_index: BTreeMap<u64, u64>,
    pub class_count: usize,
}

impl Classification {
    /// The fibers of `class_index`, keyed by `k`.
    pub fn classes(&self) -> BTreeMap<u64, Vec<u64>> {
        let mut out: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for (&c, &k) in &self.class_index {
            out.entry(k).or_default().push(c);
        }
        out
    }
}

/// Assigns every `c ∈ [n]` its class, checking that the sets `C_{n,k}` tile
/// `[n]` exactly.
pub fn classify(n: u64) -> Result<Classification> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut class_index = BTreeMap::new();
    for k in d_set(n) {
        for c in c_set(n, k)? {
            if let Some(prev) = class_index.insert(c, k) {
                return Err(Error::assertion(format!(
                    "{c} lies in both C_{{{n},{prev}}} and C_{{{n},{k}}}"
                )));
            }
        }
    }
    if class_index.len() as u64 != n {
        return Err(Error::assertion(format!("the sets C_{{{n},k}} miss part of [{n}]")));
    }
    Ok(Classification { n, class_index, class_count: class_count(n)? })
}

/// `C(n-1, 2) mod n`, as an element of `[n]`.
pub fn area_class(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::invalid("area_class needs n >= 2"));
    }
    let r = (binomial(n - 1, 2) % n).to_u64().expect("residue fits in u64");
    Ok(if r == 0 { n } else { r })
}

/// Whether `τ_{n, area_class(n)}` and `τ_{n,1}` have the same character.
pub fn verify_area_iso(n: u64) -> Result<bool> {
    let c = area_class(n)?;
    Ok(character_vector(n as usize, c as u32)? == character_vector(n as usize, 1)?)
}

/// Groups `c ∈ [n]` by character vector. Each group is sorted and the
/// groups are ordered by their smallest member.
pub fn character_classes(n: u64) -> Result<Vec<Vec<u64>>> {
    let mut groups: Vec<(CharacterVector, Vec<u64>)> = Vec::new();
    for c in 1..=n {
        let chi = character_vector(n as usize, c as u32)?;
        match groups.iter_mut().find(|(v, _)| *v == chi) {
            Some((_, members)) => members.push(c),
            None => groups.push((chi, vec![c])),
        }
    }
    Ok(groups.into_iter().map(|(_, m)| m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::character::chi;
    use crate::numth::Partition;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn d_sets() {
        assert_eq!(d_set(12), vec![1, 2, 3, 6]);
        assert_eq!(d_set(6), vec![1, 3]);
        assert_eq!(d_set(15), divisors(15));
        assert_eq!(d_set(1), vec![1]);
    }

    #[test]
    fn c_sets() {
        assert_eq!(c_set(12, 1).unwrap(), vec![1, 5, 7, 11]);
        assert_eq!(c_set(12, 2).unwrap(), vec![2, 4, 8, 10]);
        assert_eq!(c_set(12, 3).unwrap(), vec![3, 9]);
        assert_eq!(c_set(12, 6).unwrap(), vec![6, 12]);
        assert_eq!(c_set(6, 1).unwrap(), vec![1, 2, 4, 5]);
        assert_eq!(c_set(6, 3).unwrap(), vec![3, 6]);
        assert!(c_set(12, 4).is_err());
        assert!(c_set(6, 2).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(class_count(12).unwrap(), 4);
        assert_eq!(class_count(6).unwrap(), 2);
        assert_eq!(class_count(36).unwrap(), class_count(4).unwrap() * class_count(9).unwrap());
        for n in 1..=500 {
            let cl = classify(n).unwrap();
            assert_eq!(cl.classes().len(), cl.class_count);
        }
    }

    #[test]
    fn classify_small() {
        let cl = classify(6).unwrap();
        let classes = cl.classes();
        assert_eq!(classes[&1], vec![1, 2, 4, 5]);
        assert_eq!(classes[&3], vec![3, 6]);
        assert_eq!(classify(1).unwrap().class_count, 1);
        assert!(classify(0).is_err());
    }

    #[test]
    fn character_classes_match_fibers() {
        for n in 1..=12 {
            let mut from_chars = character_classes(n).unwrap();
            from_chars.sort();
            let mut fibers: Vec<Vec<u64>> = classify(n).unwrap().classes().into_values().collect();
            fibers.sort();
            assert_eq!(from_chars, fibers, "n = {n}");
            assert_eq!(from_chars.len(), class_count(n).unwrap());
        }
    }

    #[test]
    fn rectangle_separates_classes() {
        for n in 1..=30u64 {
            let ks = d_set(n);
            for &k in &ks {
                let rect = Partition::rectangle(k as usize, (n / k) as usize);
                assert!(!chi(n as usize, k as u32, &rect).unwrap().is_zero());
                for &smaller in ks.iter().filter(|&&s| s < k) {
                    assert_eq!(chi(n as usize, smaller as u32, &rect).unwrap(), BigInt::zero());
                }
            }
        }
    }

    #[test]
    fn area_classes() {
        for n in (3..=25).step_by(2) {
            assert_eq!(area_class(n).unwrap(), 1);
        }
        for n in (2..=24).step_by(2) {
            assert_eq!(area_class(n).unwrap(), 1 + n / 2);
        }
        for n in 2..=12 {
            assert!(verify_area_iso(n).unwrap(), "n = {n}");
        }
    }
}
