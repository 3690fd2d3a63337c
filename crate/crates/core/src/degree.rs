//! Character degrees of symmetric groups through the hook-length formula,
//! plus the binomial-type quantities that show up as degrees of the witness
//! partitions.

use thiserror::Error;

use crate::factored::{factorial_valuation, int_valuation, ArithError, FactoredNatural};
use crate::params::CaseParameters;
use crate::partition::Partition;

/// `|lambda|! / prod(hooks)`, kept factored.
pub fn degree(lambda: &Partition) -> Result<FactoredNatural, ArithError> {
    let hooks: FactoredNatural = lambda
        .hook_lengths()
        .into_iter()
        .map(|h| FactoredNatural::factor(h as u64))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .product();
    FactoredNatural::factorial(lambda.size() as u64).checked_div(&hooks)
}

/// `v_p(degree(lambda))` straight from Legendre's formula and the hooks,
/// without forming the degree.
pub fn degree_valuation(lambda: &Partition, p: u64) -> Result<u32, ArithError> {
    let top = factorial_valuation(lambda.size() as u64, p);
    let bottom: u32 = lambda
        .hook_lengths()
        .into_iter()
        .map(|h| int_valuation(h as u64, p))
        .sum();
    top.checked_sub(bottom).ok_or(ArithError::NotDivisible {
        prime: p,
        dividend_exp: top,
        divisor_exp: bottom,
    })
}

/// A degree together with its valuations at a designated prime pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeFacts {
    pub degree: FactoredNatural,
    pub p: u64,
    pub q: u64,
    pub valuation_p: u32,
    pub valuation_q: u32,
}

impl DegreeFacts {
    pub fn new(lambda: &Partition, p: u64, q: u64) -> Result<Self, ArithError> {
        let degree = degree(lambda)?;
        Ok(Self {
            valuation_p: degree.valuation(p),
            valuation_q: degree.valuation(q),
            degree,
            p,
            q,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuantityError {
    #[error("{name} is undefined here: {reason}")]
    UndefinedQuantity { name: &'static str, reason: String },
    #[error("{name} is not integral: {source}")]
    NotIntegral {
        name: &'static str,
        #[source]
        source: ArithError,
    },
}

/// `(lo)(lo+1)...(lo+len-1) / len!`, checked to be an integer.
fn rising_over_factorial(
    name: &'static str,
    lo: u64,
    len: u64,
) -> Result<FactoredNatural, QuantityError> {
    let wrap = |source| QuantityError::NotIntegral { name, source };
    let top = if len == 0 {
        FactoredNatural::one()
    } else {
        FactoredNatural::range_product(lo, lo + len - 1).map_err(wrap)?
    };
    top.checked_div(&FactoredNatural::factorial(len))
        .map_err(wrap)
}

/// The recurring degree factors, all prime to `p`:
///
/// * `Y  = (mp+1)...(mp+b) / b!`
/// * `Y' = (mp+1)...(mp+b-1) / (b-1)!`, needs `b >= 1`
/// * `Z  = (mp+1)...(mp+r) / r!`
/// * `Z' = (mp-r)...(mp-1) / r!`
/// * `X  = (mp-A)...(mp-1) / A!` with `A = a_1 q^{t_1}`
/// * `X' = (mp-B)...(mp-1) / B!` with `B = b_1 p^{s_1}`, needs `mp != B`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseQuantities {
    pub y: FactoredNatural,
    y_prime: Option<FactoredNatural>,
    pub z: FactoredNatural,
    pub z_prime: FactoredNatural,
    pub x: FactoredNatural,
    x_prime: Option<FactoredNatural>,
}

impl CaseQuantities {
    pub fn y_prime(&self) -> Result<&FactoredNatural, QuantityError> {
        self.y_prime
            .as_ref()
            .ok_or(QuantityError::UndefinedQuantity {
                name: "Y'",
                reason: "b = 0".into(),
            })
    }

    pub fn x_prime(&self) -> Result<&FactoredNatural, QuantityError> {
        self.x_prime
            .as_ref()
            .ok_or(QuantityError::UndefinedQuantity {
                name: "X'",
                reason: "mp = b_1 p^{s_1}".into(),
            })
    }

    /// All defined quantities with their names.
    pub fn named(&self) -> Vec<(&'static str, &FactoredNatural)> {
        let mut out = vec![
            ("Y", &self.y),
            ("Z", &self.z),
            ("Z'", &self.z_prime),
            ("X", &self.x),
        ];
        if let Some(v) = &self.y_prime {
            out.push(("Y'", v));
        }
        if let Some(v) = &self.x_prime {
            out.push(("X'", v));
        }
        out
    }
}

pub fn case_quantities(params: &CaseParameters) -> Result<CaseQuantities, QuantityError> {
    if params.m == 0 {
        return Err(QuantityError::UndefinedQuantity {
            name: "X",
            reason: "m = 0".into(),
        });
    }
    let mp = params.mp();
    let (b, r) = (params.b, params.r);
    let low_q = params.lowest_q_term();
    let low_p = params.lowest_p_term();
    if low_q >= mp {
        return Err(QuantityError::UndefinedQuantity {
            name: "X",
            reason: "mp = a_1 q^{t_1}".into(),
        });
    }
    Ok(CaseQuantities {
        y: rising_over_factorial("Y", mp + 1, b)?,
        y_prime: if b >= 1 {
            Some(rising_over_factorial("Y'", mp + 1, b - 1)?)
        } else {
            None
        },
        z: rising_over_factorial("Z", mp + 1, r)?,
        z_prime: rising_over_factorial("Z'", mp - r, r)?,
        x: rising_over_factorial("X", mp - low_q, low_q)?,
        x_prime: if low_p < mp {
            Some(rising_over_factorial("X'", mp - low_p, low_p)?)
        } else {
            None
        },
    })
}
