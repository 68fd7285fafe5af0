//! Zagreb indices: the additive M1, M2 and the multiplicative Π1, Π2.
//!
//! Multiplicative values are exact big integers; the attached natural log is
//! for display and coarse filtering only. Every ordering decision compares the
//! exact values.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("{function} undefined at x = {x}, m = {m}")]
    Domain {
        function: &'static str,
        x: f64,
        m: f64,
    },
}

/// Exact nonnegative integer with a log-domain approximation.
#[derive(Clone)]
pub struct ExactProduct {
    value: BigUint,
    log_value: f64,
}

impl ExactProduct {
    pub fn one() -> ExactProduct {
        ExactProduct {
            value: BigUint::one(),
            log_value: 0.0,
        }
    }

    pub fn zero() -> ExactProduct {
        ExactProduct {
            value: BigUint::zero(),
            log_value: f64::NEG_INFINITY,
        }
    }

    /// Product of `base^exp` over the given factors, with `0^0 = 1`.
    pub fn from_powers<I>(factors: I) -> ExactProduct
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut value = BigUint::one();
        let mut log_value = 0.0;
        for (base, exp) in factors {
            match (base, exp) {
                (_, 0) | (1, _) => {}
                (0, _) => return ExactProduct::zero(),
                _ => {
                    let exp32 = u32::try_from(exp).expect("exponent fits in u32");
                    value *= BigUint::from(base).pow(exp32);
                    log_value += exp as f64 * (base as f64).ln();
                }
            }
        }
        ExactProduct { value, log_value }
    }

    pub fn from_biguint(value: BigUint) -> ExactProduct {
        let log_value = ln_biguint(&value);
        ExactProduct { value, log_value }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    /// Natural log of the value; negative infinity for zero.
    pub fn log_value(&self) -> f64 {
        self.log_value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl PartialEq for ExactProduct {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Eq for ExactProduct {}

impl PartialOrd for ExactProduct {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactProduct {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl fmt::Display for ExactProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for ExactProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactProduct({}, ln≈{})", self.value, self.log_value)
    }
}

impl From<u64> for ExactProduct {
    fn from(v: u64) -> Self {
        ExactProduct::from_biguint(BigUint::from(v))
    }
}

/// Natural log of a big integer, computed from its top 64 bits.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let shift = x.bits().saturating_sub(64);
    let top = (x >> shift).to_u64().expect("at most 64 bits remain");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Which definition to evaluate Π2 with. Both give the same value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pi2Form {
    /// Product over edges of `d(u)·d(v)`.
    Edge,
    /// Product over vertices of `d(u)^d(u)`, with `0^0 = 1`.
    Vertex,
}

/// Π1: product of squared degrees. Zero when any vertex is isolated.
pub fn pi1(g: &Graph) -> ExactProduct {
    ExactProduct::from_powers(g.degrees().into_iter().map(|d| (d as u64, 2)))
}

pub fn pi2(g: &Graph, form: Pi2Form) -> ExactProduct {
    match form {
        Pi2Form::Vertex => {
            ExactProduct::from_powers(g.degrees().into_iter().map(|d| (d as u64, d as u64)))
        }
        Pi2Form::Edge => {
            let deg = g.degrees();
            ExactProduct::from_powers(
                g.edges()
                    .flat_map(|(u, v)| [(deg[u] as u64, 1), (deg[v] as u64, 1)]),
            )
        }
    }
}

/// (M1, M2): sum of squared degrees and sum over edges of degree products.
pub fn m1_m2(g: &Graph) -> (u64, u64) {
    let deg = g.degrees();
    let m1 = deg.iter().map(|&d| (d * d) as u64).sum();
    let m2 = g.edges().map(|(u, v)| (deg[u] * deg[v]) as u64).sum();
    (m1, m2)
}

fn check_finite(function: &'static str, x: f64, m: f64) -> Result<(), IndexError> {
    if x.is_finite() && m.is_finite() && m >= 0.0 {
        Ok(())
    } else {
        Err(IndexError::Domain { function, x, m })
    }
}

/// `t·ln(t)` extended by continuity to `0` at `t = 0`.
fn xlogy(t: f64, y: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t * y.ln()
    }
}

/// ln F1(x) where F1(x) = (x+m)^x / (x-1+m)^(x-1), for x >= 1 and m >= 0.
pub fn f1_log(x: f64, m: f64) -> Result<f64, IndexError> {
    check_finite("F1", x, m)?;
    if x < 1.0 {
        return Err(IndexError::Domain {
            function: "F1",
            x,
            m,
        });
    }
    Ok(xlogy(x, x + m) - xlogy(x - 1.0, x - 1.0 + m))
}

/// ln F2(x) where F2(x) = x^x / (x+m)^(x+m), for x > 0 and m >= 0.
pub fn f2_log(x: f64, m: f64) -> Result<f64, IndexError> {
    check_finite("F2", x, m)?;
    if x <= 0.0 {
        return Err(IndexError::Domain {
            function: "F2",
            x,
            m,
        });
    }
    Ok(x * x.ln() - (x + m) * (x + m).ln())
}
