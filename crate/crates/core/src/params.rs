//! The parameter record that drives the witness case analysis.
//!
//! With `q < p`: `n = mp + b` (`0 <= b < p`), `mp = wq + r` (`0 <= r < q`),
//! and `mp` expanded both in base `q` and in base `p`, digits listed from the
//! lowest nonzero position up.

use thiserror::Error;

use crate::factored::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the two primes must differ (got {0} twice)")]
    SamePrime(u64),
    #[error("prime {p} exceeds n = {n}")]
    PrimeExceedsN { p: u64, n: u64 },
}

/// One nonzero digit `coeff * base^exp` of a base-`base` expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Digit {
    pub coeff: u64,
    pub exp: u32,
}

impl Digit {
    pub fn value(&self, base: u64) -> u64 {
        self.coeff * base.pow(self.exp)
    }
}

/// Nonzero digits of `x` in base `base`, lowest position first.
pub fn expansion(mut x: u64, base: u64) -> Vec<Digit> {
    let mut digits = Vec::new();
    let mut exp = 0;
    while x > 0 {
        let coeff = x % base;
        if coeff != 0 {
            digits.push(Digit { coeff, exp });
        }
        x /= base;
        exp += 1;
    }
    digits
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseParameters {
    pub n: u64,
    /// The larger prime.
    pub p: u64,
    /// The smaller prime.
    pub q: u64,
    pub m: u64,
    pub w: u64,
    pub r: u64,
    pub b: u64,
    /// `mp` in base `q`: `a_i q^{t_i}`.
    pub q_digits: Vec<Digit>,
    /// `mp` in base `p`: `b_j p^{s_j}`.
    pub p_digits: Vec<Digit>,
}

impl CaseParameters {
    /// Primes may come in either order; the record always has `q < p`.
    pub fn derive(n: u64, p: u64, q: u64) -> Result<Self, ParamError> {
        for x in [p, q] {
            if !is_prime(x) {
                return Err(ParamError::NotPrime(x));
            }
        }
        if p == q {
            return Err(ParamError::SamePrime(p));
        }
        for x in [p, q] {
            if x > n {
                return Err(ParamError::PrimeExceedsN { p: x, n });
            }
        }
        let (p, q) = if p > q { (p, q) } else { (q, p) };
        let m = n / p;
        let b = n % p;
        let mp = m * p;
        Ok(Self {
            n,
            p,
            q,
            m,
            w: mp / q,
            r: mp % q,
            b,
            q_digits: expansion(mp, q),
            p_digits: expansion(mp, p),
        })
    }

    pub fn mp(&self) -> u64 {
        self.m * self.p
    }

    /// `a_1 q^{t_1}`, the lowest nonzero term of `mp` in base `q`.
    pub fn lowest_q_term(&self) -> u64 {
        self.q_digits[0].value(self.q)
    }

    /// `b_1 p^{s_1}`, the lowest nonzero term of `mp` in base `p`.
    pub fn lowest_p_term(&self) -> u64 {
        self.p_digits[0].value(self.p)
    }

    pub fn t1(&self) -> u32 {
        self.q_digits[0].exp
    }

    pub fn t2(&self) -> Option<u32> {
        self.q_digits.get(1).map(|d| d.exp)
    }

    pub fn s1(&self) -> u32 {
        self.p_digits[0].exp
    }

    /// Checks every structural invariant of the record. Returns the first
    /// violated one as text.
    pub fn check_invariants(&self) -> Result<(), String> {
        let mp = self.mp();
        let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        ensure(self.q < self.p, "q < p")?;
        ensure(
            self.n == mp + self.b && self.b < self.p,
            "n = mp + b, 0 <= b < p",
        )?;
        ensure(
            mp == self.w * self.q + self.r && self.r < self.q,
            "mp = wq + r, 0 <= r < q",
        )?;
        for (digits, base) in [(&self.q_digits, self.q), (&self.p_digits, self.p)] {
            let total: u64 = digits.iter().map(|d| d.value(base)).sum();
            ensure(total == mp, "expansion reconstructs mp")?;
            ensure(
                digits.iter().all(|d| d.coeff > 0 && d.coeff < base),
                "digit bounds",
            )?;
            ensure(
                digits.windows(2).all(|w| w[0].exp < w[1].exp),
                "exponents strictly increase",
            )?;
        }
        ensure(self.m == 0 || self.s1() >= 1, "s_1 >= 1")?;
        Ok(())
    }
}
