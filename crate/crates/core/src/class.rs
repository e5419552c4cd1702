use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Unoriented primitive lattice class (p, q), gcd(p, q) = 1.
/// Canonical sign: q > 0, or q = 0 and p > 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveClass {
    p: BigInt,
    q: BigInt,
}

impl PrimitiveClass {
    /// Builds the class of a coprime vector, canonicalizing the sign.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if p.is_zero() && q.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = p.gcd(&q);
        if !g.is_one() {
            return Err(Error::NotPrimitive(g));
        }
        Ok(Self::canonical(p, q))
    }

    fn canonical(p: BigInt, q: BigInt) -> Self {
        if q.is_negative() || (q.is_zero() && p.is_negative()) {
            PrimitiveClass { p: -p, q: -q }
        } else {
            PrimitiveClass { p, q }
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    /// The canonical vector representative.
    pub fn vector(&self) -> (BigInt, BigInt) {
        (self.p.clone(), self.q.clone())
    }
}

/// Primitive class of a nonzero vector together with its content multiplier.
pub fn primitive_form(x: &BigInt, y: &BigInt) -> Result<(PrimitiveClass, BigInt)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = x.gcd(y);
    Ok((PrimitiveClass::canonical(x / &g, y / &g), g))
}

/// Geometric intersection number |p1 q2 - q1 p2| of two classes.
pub fn intersection(a: &PrimitiveClass, b: &PrimitiveClass) -> BigInt {
    (&a.p * &b.q - &a.q * &b.p).abs()
}

/// Image class under a unimodular matrix.
pub fn apply_unimodular(m: &crate::mat2::Mat2, w: &PrimitiveClass) -> PrimitiveClass {
    debug_assert!(m.is_gl2z());
    let (x, y) = m.apply(&w.p, &w.q);
    // unimodular images of primitive vectors stay primitive
    PrimitiveClass::new(x, y).expect("unimodular image of a primitive vector")
}

impl fmt::Display for PrimitiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.p, self.q)
    }
}

impl FromStr for PrimitiveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |detail: String| Error::Parse { what: "class", detail };
        let cells: Vec<&str> = s.split(',').collect();
        if cells.len() != 2 {
            return Err(err(format!("expected \"p,q\", got {s:?}")));
        }
        let p = BigInt::from_str(cells[0].trim())
            .map_err(|_| err(format!("bad integer {:?}", cells[0].trim())))?;
        let q = BigInt::from_str(cells[1].trim())
            .map_err(|_| err(format!("bad integer {:?}", cells[1].trim())))?;
        PrimitiveClass::new(p, q)
    }
}

impl Serialize for PrimitiveClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
