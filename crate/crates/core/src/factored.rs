//! Positive integers held in fully factored form.
//!
//! Character degrees of symmetric groups overflow machine words long before
//! the partitions get interesting, and every question asked about them is a
//! question about p-parts. [`FactoredNatural`] keeps the prime factorization
//! as the only representation, so multiplication, exact division and
//! valuations are all exponent arithmetic. Decimal rendering goes through
//! [`num_bigint::BigUint`] and is only meant for output.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

/// Errors raised by exact factored arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero has no factorization")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("exact division failed: divisor has {prime}^{divisor_exp}, dividend only {prime}^{dividend_exp}")]
    NotDivisible {
        prime: u64,
        dividend_exp: u32,
        divisor_exp: u32,
    },
}

/// Trial-division primality test. Operands here stay small (n + p at most a
/// few hundred), so nothing cleverer is warranted.
pub fn is_prime(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    if k < 4 {
        return true;
    }
    if k.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= k {
        if k.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes `<= bound`, ascending.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&k| is_prime(k)).collect()
}

/// A positive integer as a map prime -> positive exponent. The integer 1 is
/// the empty map, and equality is map equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactoredNatural {
    factors: BTreeMap<u64, u32>,
}

impl FactoredNatural {
    pub fn one() -> Self {
        Self::default()
    }

    /// Factor `k` by trial division.
    pub fn factor(k: u64) -> Result<Self, ArithError> {
        if k == 0 {
            return Err(ArithError::Zero);
        }
        let mut factors = BTreeMap::new();
        let mut rest = k;
        let mut d = 2u64;
        while d * d <= rest {
            while rest.is_multiple_of(d) {
                *factors.entry(d).or_insert(0) += 1;
                rest /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            *factors.entry(rest).or_insert(0) += 1;
        }
        Ok(Self { factors })
    }

    /// `p^e`; `e = 0` gives one.
    pub fn prime_power(p: u64, e: u32) -> Result<Self, ArithError> {
        Self::from_pairs([(p, e)])
    }

    /// Build from (prime, exponent) pairs. Exponents of repeated primes add up,
    /// zero exponents are dropped, and non-primes are rejected.
    pub fn from_pairs<I>(pairs: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = (u64, u32)>,
    {
        let mut factors = BTreeMap::new();
        for (p, e) in pairs {
            if !is_prime(p) {
                return Err(ArithError::NotPrime(p));
            }
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Ok(Self { factors })
    }

    /// `k!` via Legendre's formula, one exponent per prime `<= k`.
    pub fn factorial(k: u64) -> Self {
        let mut factors = BTreeMap::new();
        for p in primes_up_to(k) {
            let mut e = 0u32;
            let mut pk = p;
            loop {
                e += (k / pk) as u32;
                match pk.checked_mul(p) {
                    Some(next) if next <= k => pk = next,
                    _ => break,
                }
            }
            factors.insert(p, e);
        }
        Self { factors }
    }

    /// `lo * (lo + 1) * ... * hi`, or one when the range is empty.
    pub fn range_product(lo: u64, hi: u64) -> Result<Self, ArithError> {
        let mut acc = Self::one();
        for k in lo..=hi {
            acc.mul_assign_ref(&Self::factor(k)?);
        }
        Ok(acc)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent of `p`, 0 when absent.
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    /// `p^valuation(p)`, the p-part.
    pub fn p_part(&self, p: u64) -> Self {
        match self.factors.get(&p) {
            Some(&e) => Self {
                factors: BTreeMap::from([(p, e)]),
            },
            None => Self::one(),
        }
    }

    /// Iterate (prime, exponent) in increasing prime order.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.factors.iter().map(|(&p, &e)| (p, e))
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.iter().all(|(p, e)| other.valuation(p) >= e)
    }

    fn mul_assign_ref(&mut self, rhs: &Self) {
        for (p, e) in rhs.iter() {
            *self.factors.entry(p).or_insert(0) += e;
        }
    }

    /// Exponentwise difference; fails if `rhs` does not divide `self`.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ArithError> {
        let mut factors = self.factors.clone();
        for (p, e) in rhs.iter() {
            let have = self.valuation(p);
            if have < e {
                return Err(ArithError::NotDivisible {
                    prime: p,
                    dividend_exp: have,
                    divisor_exp: e,
                });
            }
            if have == e {
                factors.remove(&p);
            } else {
                factors.insert(p, have - e);
            }
        }
        Ok(Self { factors })
    }

    pub fn pow(&self, k: u32) -> Self {
        if k == 0 {
            return Self::one();
        }
        Self {
            factors: self.factors.iter().map(|(&p, &e)| (p, e * k)).collect(),
        }
    }

    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in self.iter() {
            acc *= BigUint::from(p).pow(e);
        }
        acc
    }

    /// Exact base-10 rendering.
    pub fn to_decimal(&self) -> String {
        self.to_biguint().to_str_radix(10)
    }

    /// Renders as `2^3*3*5^2`, or `1` for the empty product.
    pub fn to_factored_string(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.iter()
            .map(|(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Mul for &FactoredNatural {
    type Output = FactoredNatural;

    fn mul(self, rhs: &FactoredNatural) -> FactoredNatural {
        let mut out = self.clone();
        out.mul_assign_ref(rhs);
        out
    }
}

impl Mul for FactoredNatural {
    type Output = FactoredNatural;

    fn mul(mut self, rhs: FactoredNatural) -> FactoredNatural {
        self.mul_assign_ref(&rhs);
        self
    }
}

impl std::iter::Product for FactoredNatural {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for FactoredNatural {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

/// Exponent of `p` in `k!`.
pub fn factorial_valuation(k: u64, p: u64) -> u32 {
    let mut e = 0u32;
    let mut q = k;
    while q > 0 {
        q /= p;
        e += q as u32;
    }
    e
}

/// Exponent of `p` in `k`, with `k > 0`.
pub fn int_valuation(mut k: u64, p: u64) -> u32 {
    debug_assert!(k > 0 && p > 1);
    let mut e = 0;
    while k.is_multiple_of(p) {
        k /= p;
        e += 1;
    }
    e
}
