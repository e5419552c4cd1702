//! Exact quadratic surds (P + sqrt(D))/Q and their continued fractions.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mat2::Mat2;

/// The real number (P + sqrt(D))/Q with integer P, Q and positive
/// non-square D, held exactly.
///
/// Normalized so that Q divides D - P^2, the shape the continued
/// fraction recursion preserves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticSurd {
    /// Builds (p + sqrt(d))/q, rescaling to establish q | d - p^2 and
    /// then stripping the largest square factor of d compatible with
    /// that invariant.
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (mut p, mut d, mut q) = (p.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::InvalidSurd("zero denominator"));
        }
        if !d.is_positive() {
            return Err(Error::InvalidSurd("discriminant must be positive"));
        }
        let s = d.sqrt();
        if &s * &s == d {
            return Err(Error::InvalidSurd("discriminant must not be a perfect square"));
        }
        if !(&d - &p * &p).is_multiple_of(&q) {
            let scale = q.abs();
            p *= &scale;
            d *= &scale * &scale;
            q *= &scale;
        }
        let m = (&d - &p * &p) / &q;
        let h = largest_reducer(&p.gcd(&q).gcd(&m), &d);
        if !h.is_one() {
            p /= &h;
            q /= &h;
            d /= &h * &h;
        }
        Ok(QuadraticSurd { p, d, q })
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }
}

/// Largest h dividing g with h^2 dividing d. g bounds the usable factors,
/// so divisors are enumerated from g; a g too large for machine words
/// falls back to no reduction (the invariant does not depend on it).
fn largest_reducer(g: &BigInt, d: &BigInt) -> BigInt {
    let g = g.abs();
    let Ok(small) = u64::try_from(&g) else {
        return BigInt::one();
    };
    let mut best = 1u64;
    let mut k = 1u64;
    while (k as u128) * (k as u128) <= small as u128 {
        if small % k == 0 {
            for h in [k, small / k] {
                let hh = BigInt::from(h) * BigInt::from(h);
                if h > best && d.is_multiple_of(&hh) {
                    best = h;
                }
            }
        }
        k += 1;
    }
    BigInt::from(best)
}

impl fmt::Display for QuadraticSurd {
    /// Text form "(P+sqrt(D))/Q".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+sqrt({}))/{}", self.p, self.d, self.q)
    }
}

impl Serialize for QuadraticSurd {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Eventually periodic continued fraction of a quadratic surd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContinuedFraction {
    #[serde(serialize_with = "crate::serde_bigint::serialize_vec")]
    pub preperiod: Vec<BigInt>,
    #[serde(serialize_with = "crate::serde_bigint::serialize_vec")]
    pub period: Vec<BigInt>,
}

/// floor((p + sqrt(d))/q) given s = floor(sqrt(d)), valid because sqrt(d)
/// is irrational: for q < 0 the numerator floor flips to a ceiling.
fn floor_digit(p: &BigInt, q: &BigInt, s: &BigInt) -> BigInt {
    if q.is_positive() {
        (p + s).div_floor(q)
    } else {
        (p + s + BigInt::one()).div_floor(q)
    }
}

/// Exact continued fraction by the integer (P, Q) recursion; the period
/// starts at the first repeated state and is minimal.
pub fn cf_expansion(s: &QuadraticSurd) -> ContinuedFraction {
    let sq = s.d.sqrt();
    let mut digits: Vec<BigInt> = Vec::new();
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let (mut p, mut q) = (s.p.clone(), s.q.clone());
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = digits.split_off(start);
            return ContinuedFraction { preperiod: digits, period };
        }
        seen.insert((p.clone(), q.clone()), digits.len());
        let a = floor_digit(&p, &q, &sq);
        let next_p = &a * &q - &p;
        let next_q = (&s.d - &next_p * &next_p) / &q;
        digits.push(a);
        p = next_p;
        q = next_q;
    }
}

/// Attracting fixed point of the Moebius action of a hyperbolic m, as a
/// surd with discriminant trace^2 - 4 up to square factors.
///
/// Both trace signs are accepted; |trace| <= 2 is rejected. The lower
/// left entry is nonzero for every hyperbolic SL(2, Z) matrix, but a
/// zero is still reported as its own error rather than a panic.
pub fn fixed_point_surd(m: &Mat2) -> Result<QuadraticSurd> {
    m.require_sl2z()?;
    let t = m.trace();
    if t.abs() <= BigInt::from(2) {
        return Err(Error::NotHyperbolic(t));
    }
    if m.c.is_zero() {
        return Err(Error::NoQuadraticFixedPoint("lower-left entry is zero".to_string()));
    }
    let disc = &t * &t - BigInt::from(4);
    if t.is_positive() {
        QuadraticSurd::new(&m.a - &m.d, disc, BigInt::from(2) * &m.c)
    } else {
        QuadraticSurd::new(&m.d - &m.a, disc, BigInt::from(-2) * &m.c)
    }
}
