//! Integer and partition primitives shared by every other module.
//!
//! Counts are arbitrary precision throughout; `C(2d-1, d)` leaves `u64` near
//! `d = 33`, well inside the range where the orbit formulas are still cheap.

mod partition;

pub use partition::{partitions_of, Partition};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    BigRational::new(num.into(), den.into())
}

pub fn rat_int(v: impl Into<BigInt>) -> Rational {
    BigRational::from_integer(v.into())
}

/// `base^exp` as an exact rational; negative exponents are allowed.
pub fn pow_signed(base: u64, exp: i64) -> Rational {
    let magnitude = num_traits::pow(BigInt::from(base), exp.unsigned_abs() as usize);
    if exp >= 0 {
        rat_int(magnitude)
    } else {
        BigRational::new(BigInt::one(), magnitude)
    }
}

/// Converts an exact rational to an integer, reporting `what` on failure.
pub fn expect_integer(value: &Rational, what: &str) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::assertion(format!("{what} = {value} is not an integer")))
    }
}

/// Sorted list of the positive divisors of `n` (trial division).
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            primes.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

/// The classical Möbius function.
pub fn moebius(n: u64) -> i32 {
    assert!(n >= 1, "moebius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Jordan's totient `J_2(m) = m^2 ∏_{p | m} (1 - 1/p^2)`.
pub fn jordan_totient2(m: u64) -> BigInt {
    assert!(m >= 1, "J_2 is defined for m >= 1");
    let mut value = BigInt::from(m) * BigInt::from(m);
    for p in prime_factors(m) {
        let p2 = BigInt::from(p * p);
        value = value / &p2 * (p2 - 1);
    }
    value
}

/// Exact binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// 2-adic valuation; `v2(0)` is not meaningful and panics.
pub fn v2(n: u64) -> u32 {
    assert!(n >= 1, "v2 is defined for n >= 1");
    n.trailing_zeros()
}

/// `b(λ') = Σ_i C(λ_i, 2)`.
pub fn b_stat(lambda: &Partition) -> BigInt {
    lambda
        .parts()
        .iter()
        .map(|&p| binomial(p as u64, 2))
        .sum()
}

/// Number of `(x_1, …, x_k) ∈ {0, …, m-1}^k` with `Σ a_i x_i ≡ c (mod m)`.
///
/// Closed form: `d·m^{k-1}` when `d = gcd(a_1, …, a_k, m)` divides `c`, else 0.
pub fn count_congruence_solutions(a: &[i64], c: i64, m: u64) -> Result<BigInt> {
    if a.is_empty() {
        return Err(Error::invalid("need at least one coefficient"));
    }
    if m == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    let m_big = BigInt::from(m);
    let d = a
        .iter()
        .fold(m_big.clone(), |g, &ai| g.gcd(&BigInt::from(ai)));
    if !(BigInt::from(c).mod_floor(&d)).is_zero() {
        return Ok(BigInt::zero());
    }
    Ok(d * num_traits::pow(m_big, a.len() - 1))
}

/// `Σ_{d | n} μ(n/d) g(d)`, the Möbius transform of `g` evaluated at `n`.
pub fn moebius_sum<F>(n: u64, mut g: F) -> Rational
where
    F: FnMut(u64) -> Rational,
{
    divisors(n).into_iter().fold(Rational::zero(), |acc, d| {
        let mu = moebius(n / d);
        if mu == 0 {
            acc
        } else {
            acc + g(d) * rat_int(mu)
        }
    })
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_congruence(a: &[i64], c: i64, m: u64) -> u64 {
        let k = a.len();
        let total = (m as usize).pow(k as u32);
        let mut count = 0;
        for idx in 0..total {
            let mut rest = idx;
            let mut sum: i64 = 0;
            for &ai in a {
                let x = (rest % m as usize) as i64;
                rest /= m as usize;
                sum += ai * x;
            }
            if (sum - c).rem_euclid(m as i64) == 0 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }

    #[test]
    fn small_values() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        assert_eq!(jordan_totient2(1), BigInt::from(1));
        assert_eq!(jordan_totient2(2), BigInt::from(3));
        assert_eq!(jordan_totient2(3), BigInt::from(8));
        assert_eq!(binomial(5, 3), BigInt::from(10));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(v2(12), 2);
        assert_eq!(v2(7), 0);
    }

    #[test]
    fn b_stat_values() {
        assert_eq!(b_stat(&Partition::ones(3)), BigInt::zero());
        assert_eq!(b_stat(&Partition::row(3)), BigInt::from(3));
        assert_eq!(b_stat(&Partition::rectangle(2, 3)), BigInt::from(3));
    }

    #[test]
    fn b_stat_divisible_by_odd_gcd() {
        for n in 1..=14 {
            for lambda in partitions_of(n) {
                let d = lambda.gcd();
                if d % 2 == 1 {
                    assert!((b_stat(&lambda) % BigInt::from(d)).is_zero(), "{lambda}");
                }
            }
        }
    }

    #[test]
    fn congruence_examples() {
        assert_eq!(count_congruence_solutions(&[1], 3, 5).unwrap(), BigInt::from(1));
        assert_eq!(count_congruence_solutions(&[2, 4], 0, 6).unwrap(), BigInt::from(12));
        assert_eq!(count_congruence_solutions(&[3], 1, 6).unwrap(), BigInt::zero());
        assert!(count_congruence_solutions(&[], 1, 6).is_err());
        assert!(count_congruence_solutions(&[1], 1, 0).is_err());
    }

    #[test]
    fn congruence_matches_enumeration() {
        for m in 1..=12u64 {
            let mi = m as i64;
            for c in 0..mi {
                for a1 in 0..mi {
                    let one = [a1];
                    assert_eq!(
                        count_congruence_solutions(&one, c, m).unwrap(),
                        BigInt::from(brute_congruence(&one, c, m))
                    );
                    for a2 in 0..mi {
                        let two = [a1, a2];
                        assert_eq!(
                            count_congruence_solutions(&two, c, m).unwrap(),
                            BigInt::from(brute_congruence(&two, c, m))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn jordan_totient_divisor_sums() {
        for m in 1..=200u64 {
            let total: BigInt = divisors(m).into_iter().map(jordan_totient2).sum();
            assert_eq!(total, BigInt::from(m * m));
            let via_moebius = moebius_sum(m, |d| rat_int(d * d));
            assert_eq!(via_moebius, rat_int(jordan_totient2(m)));
        }
    }

    #[test]
    fn principal_specialization_of_h_n() {
        for n in 1..=12usize {
            let total = partitions_of(n)
                .iter()
                .fold(Rational::zero(), |acc, l| {
                    acc + pow_signed(n as u64, l.len() as i64) / rat_int(l.z())
                });
            assert_eq!(total, rat_int(binomial(2 * n as u64 - 1, n as u64)));
        }
    }

    #[test]
    fn pow_signed_handles_negative_exponents() {
        assert_eq!(pow_signed(3, -1), rat(1, 3));
        assert_eq!(pow_signed(3, 2), rat_int(9));
        assert_eq!(pow_signed(5, 0), rat_int(1));
    }
}
