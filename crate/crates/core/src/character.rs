//! Closed-form characters of the extended parking modules.
//!
//! Values are evaluated as exact rationals (the factor `n^{ℓ-2}` has a
//! negative exponent when `ℓ = 1`) and then checked to be integers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::numth::{expect_integer, partitions_of, pow_signed, rat, rat_int, Partition, Rational};
use crate::orbits::f_weight;

/// A class function of `S_n`, stored on every cycle type in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterVector {
    n: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl CharacterVector {
    /// Requires a value for every partition of `n` and nothing else.
    pub fn new(n: usize, values: BTreeMap<Partition, BigInt>) -> Result<Self> {
        let expected = partitions_of(n);
        if values.len() != expected.len() || expected.iter().any(|l| !values.contains_key(l)) {
            return Err(Error::invalid(format!(
                "character vector must cover exactly the partitions of {n}"
            )));
        }
        Ok(CharacterVector { n, values })
    }

    /// Tabulates `f` over all partitions of `n`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&Partition) -> Result<BigInt>,
    {
        let values = partitions_of(n)
            .into_iter()
            .map(|l| f(&l).map(|v| (l, v)))
            .collect::<Result<_>>()?;
        Ok(CharacterVector { n, values })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn get(&self, lambda: &Partition) -> Option<&BigInt> {
        self.values.get(lambda)
    }

    /// Value at the identity class, the dimension of the representation.
    pub fn dimension(&self) -> &BigInt {
        &self.values[&Partition::ones(self.n)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.values.iter()
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigInt> {
        &self.values
    }
}

fn check_partition(n: usize, lambda: &Partition) -> Result<()> {
    if n == 0 || lambda.size() != n {
        return Err(Error::invalid(format!("{lambda} is not a partition of {n}")));
    }
    Ok(())
}

fn check_c(n: usize, c: u32) -> Result<()> {
    if c == 0 || c as usize > n {
        return Err(Error::invalid(format!("c = {c} must lie in [1, {n}]")));
    }
    Ok(())
}

/// `d^2 n^{ℓ-2}` as an exact rational.
fn base_value(n: usize, d: usize, ell: usize) -> Rational {
    rat_int(d * d) * pow_signed(n as u64, ell as i64 - 2)
}

/// Character of `τ_{n,c}` at cycle type `lambda`.
pub fn chi(n: usize, c: u32, lambda: &Partition) -> Result<BigInt> {
    check_partition(n, lambda)?;
    check_c(n, c)?;
    let d = lambda.gcd();
    let c = c as usize;
    let base = base_value(n, d, lambda.len());
    let value = if d % 2 == 0 {
        if (n / d) % 2 == 1 {
            if (2 * c) % d == 0 {
                base * rat(1, 2)
            } else {
                rat_int(0)
            }
        } else if c % d == 0 {
            base
        } else {
            rat_int(0)
        }
    } else if c % d == 0 {
        base
    } else {
        rat_int(0)
    };
    expect_integer(&value, &format!("chi({n}, {c}, {lambda})"))
}

/// Character of `τ_{n,1}`: `n^{ℓ-2}` when `d = 1`, `2n^{ℓ-2}` when `d = 2`
/// and `n ≡ 2 (mod 4)`, else 0.
pub fn chi_c1(n: usize, lambda: &Partition) -> Result<BigInt> {
    check_partition(n, lambda)?;
    let d = lambda.gcd();
    let power = pow_signed(n as u64, lambda.len() as i64 - 2);
    let value = match d {
        1 => power,
        2 if n % 4 == 2 => power * rat_int(2),
        _ => rat_int(0),
    };
    expect_integer(&value, &format!("chi_c1({n}, {lambda})"))
}

/// Character of `τ_{n,n}`: `f_n(d)·d^2·n^{ℓ-2}`.
pub fn chi_cn(n: usize, lambda: &Partition) -> Result<BigInt> {
    check_partition(n, lambda)?;
    let d = lambda.gcd();
    let value = f_weight(n as u64, d as u64)? * base_value(n, d, lambda.len());
    expect_integer(&value, &format!("chi_cn({n}, {lambda})"))
}

/// Character of `τ_{a,b,1}` at `lambda ⊢ a + 1`, for `a = kb - 1` with
/// `gcd(a, b) = 1`.
pub fn chi_rational(a: usize, b: usize, lambda: &Partition) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("a and b must be positive"));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::invalid(format!("gcd({a}, {b}) != 1")));
    }
    if (a + 1) % b != 0 {
        return Err(Error::invalid(format!("{b} does not divide {}", a + 1)));
    }
    check_partition(a + 1, lambda)?;
    let k = (a + 1) / b;
    let d = lambda.gcd().gcd(&b);
    let power = pow_signed(b as u64, lambda.len() as i64 - 2);
    let value = if d == 1 {
        power
    } else if d == 2 && b % 4 == 2 && k % 2 == 1 {
        power * rat_int(2)
    } else {
        rat_int(0)
    };
    expect_integer(&value, &format!("chi_rational({a}, {b}, {lambda})"))
}

/// The full character of `τ_{n,c}`.
pub fn character_vector(n: usize, c: u32) -> Result<CharacterVector> {
    check_c(n, c)?;
    CharacterVector::from_fn(n, |l| chi(n, c, l))
}

pub fn character_vector_rational(a: usize, b: usize) -> Result<CharacterVector> {
    CharacterVector::from_fn(a + 1, |l| chi_rational(a, b, l))
}
