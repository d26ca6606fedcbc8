//! Closed-form orbit counts for `τ_{n,n}`, `τ_{n,1}` and `τ_{a,b,1}`.
//!
//! Every intermediate quantity is an exact rational and every final count is
//! checked to be an integer. Where two derivations of the same number exist,
//! both are evaluated and compared.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numth::{binomial, divisors, expect_integer, jordan_totient2, moebius, moebius_sum, rat, rat_int, Rational};

/// A formula count, optionally paired with a brute-force count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub n: Option<u64>,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub c: u64,
    #[serde(serialize_with = "crate::report::big_as_string")]
    pub formula_count: BigInt,
    #[serde(serialize_with = "crate::report::opt_big_as_string")]
    pub oracle_count: Option<BigInt>,
}

impl OrbitReport {
    pub fn agrees(&self) -> bool {
        self.oracle_count.as_ref().is_none_or(|o| *o == self.formula_count)
    }
}

/// `f_n(d)` as in the character of `τ_{n,n}`; see [`crate::character::f_weight`].
pub fn f_weight(n: u64, d: u64) -> Result<Rational> {
    if d == 0 || n % d != 0 {
        return Err(Error::invalid(format!("{d} does not divide {n}")));
    }
    Ok(if d % 2 == 0 && (n / d) % 2 == 1 {
        rat(1, 2)
    } else {
        rat_int(1)
    })
}

/// `F(m, e) = Σ_{d | m} μ(m/d) f_{me}(d) d^2`, evaluated from its definition.
pub fn f_of_sum(m: u64, e: u64) -> Result<Rational> {
    if m == 0 || e == 0 {
        return Err(Error::invalid("F(m, e) needs m, e >= 1"));
    }
    let n = m * e;
    let mut total = Rational::zero();
    for d in divisors(m) {
        let mu = moebius(m / d);
        if mu != 0 {
            total += f_weight(n, d)? * rat_int(mu) * rat_int(d * d);
        }
    }
    Ok(total)
}

/// `F(m, e)` in closed form: `J_2(m)`, or `J_2(m)/3` when `e` is odd and `m`
/// even. Cross-checked against [`f_of_sum`].
#[allow(non_snake_case)]
pub fn F_of(m: u64, e: u64) -> Result<BigInt> {
    let closed = if e % 2 == 1 && m % 2 == 0 {
        Rational::new(jordan_totient2(m), BigInt::from(3))
    } else {
        rat_int(jordan_totient2(m))
    };
    let direct = f_of_sum(m, e)?;
    if closed != direct {
        return Err(Error::assertion(format!(
            "F({m}, {e}): closed form {closed} differs from the divisor sum {direct}"
        )));
    }
    expect_integer(&closed, &format!("F({m}, {e})"))
}

/// `a_n = (1/n^2) Σ_{d | n} μ(n/d) C(2d-1, d)`; not integral in general.
pub fn a_n(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("a_n needs n >= 1"));
    }
    let sum = moebius_sum(n, |d| rat_int(binomial(2 * d - 1, d)));
    Ok(sum / rat_int(n * n))
}

/// Orbits of `τ_{n,n}`: `(1/n^2) Σ_{e | n} C(2e-1, e) F(n/e, e)`.
pub fn orbits_cn(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut total = BigInt::zero();
    for e in divisors(n) {
        total += binomial(2 * e - 1, e) * F_of(n / e, e)?;
    }
    expect_integer(&Rational::new(total, BigInt::from(n * n)), &format!("o_{{{n},{n}}}"))
}

/// Orbits of `τ_{n,1}` from the signed sum
/// `(1/n^2) Σ_{d | n} (-1)^{n+d} μ(n/d) C(2d-1, d)`, checked against the
/// case split `a_n + a_{n/2}/2` (when `n ≡ 2 mod 4`) or `a_n`.
pub fn orbits_c1(n: u64) -> Result<BigInt> {
    let signed = orbits_c1_signed(n)?;
    let split = orbits_c1_split(n)?;
    if signed != split {
        return Err(Error::assertion(format!(
            "o_{{{n},1}}: signed sum {signed} differs from case split {split}"
        )));
    }
    expect_integer(&signed, &format!("o_{{{n},1}}"))
}

pub fn orbits_c1_signed(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("n must be at least 1"));
    }
    let mut total = Rational::zero();
    for d in divisors(n) {
        let mu = moebius(n / d);
        if mu == 0 {
            continue;
        }
        let sign = if (n + d) % 2 == 0 { 1 } else { -1 };
        total += rat_int(sign * mu) * rat_int(binomial(2 * d - 1, d));
    }
    Ok(total / rat_int(n * n))
}

pub fn orbits_c1_split(n: u64) -> Result<Rational> {
    let base = a_n(n)?;
    if n % 4 == 2 {
        Ok(base + a_n(n / 2)? * rat(1, 2))
    } else {
        Ok(base)
    }
}

/// Orbits of `τ_{a,b,1}` for `a = kb - 1`:
/// `(1/b^2) Σ_{d | b} (-1)^{k(b+d)} μ(b/d) C((k+1)d - 1, kd)`.
pub fn orbits_rational_c1(a: u64, b: u64) -> Result<BigInt> {
    if a == 0 || b == 0 {
        return Err(Error::invalid("a and b must be positive"));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::invalid(format!("gcd({a}, {b}) != 1")));
    }
    if (a + 1) % b != 0 {
        return Err(Error::invalid(format!("{b} does not divide {}", a + 1)));
    }
    let k = (a + 1) / b;
    let mut total = Rational::zero();
    for d in divisors(b) {
        let mu = moebius(b / d);
        if mu == 0 {
            continue;
        }
        let sign = if (k * (b + d)) % 2 == 0 { 1 } else { -1 };
        total += rat_int(sign * mu) * rat_int(binomial((k + 1) * d - 1, k * d));
    }
    expect_integer(&(total / rat_int(b * b)), &format!("o_{{{a},{b},1}}"))
}

/// Number of `n`-subsets of `{1, …, 2n-1}` whose sum is `≡ 1 (mod n)`,
/// enumerating the subsets as bitmasks in colex order.
pub fn count_subsets_sum_one(n: u64) -> u64 {
    let universe = 2 * n - 1;
    let target = 1 % n;
    let mut mask: u64 = (1 << n) - 1;
    let limit: u64 = 1 << universe;
    let mut count = 0;
    while mask < limit {
        let mut rest = mask;
        let mut sum = 0;
        while rest != 0 {
            sum += rest.trailing_zeros() as u64 + 1;
            rest &= rest - 1;
        }
        if sum % n == target {
            count += 1;
        }
        // Gosper's hack: next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    count
}

/// `n·o_{n,1}` equals the subset count of [`count_subsets_sum_one`].
pub fn subset_sum_check(n: u64) -> Result<bool> {
    if n == 0 || n > 12 {
        return Err(Error::invalid("subset_sum_check supports 1 <= n <= 12"));
    }
    Ok(BigInt::from(n) * orbits_c1(n)? == BigInt::from(count_subsets_sum_one(n)))
}
