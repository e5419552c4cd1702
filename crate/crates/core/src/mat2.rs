use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// 2x2 integer matrix [[a, b], [c, d]] with arbitrary-precision entries.
///
/// The plain constructor accepts any entries; `gl2z` and `sl2z` reject
/// determinants other than +-1 and +1 respectively.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    /// Constructor restricted to GL(2, Z): determinant +1 or -1.
    pub fn gl2z(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Mat2::new(a, b, c, d);
        let det = m.det();
        if det.abs().is_one() { Ok(m) } else { Err(Error::NotUnimodular(det)) }
    }

    /// Constructor restricted to SL(2, Z): determinant +1.
    pub fn sl2z(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Mat2::new(a, b, c, d);
        m.require_sl2z()?;
        Ok(m)
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn is_gl2z(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn is_sl2z(&self) -> bool {
        self.det().is_one()
    }

    pub fn require_sl2z(&self) -> Result<()> {
        let det = self.det();
        if det.is_one() { Ok(()) } else { Err(Error::NotSpecialLinear(det)) }
    }

    pub fn neg(&self) -> Self {
        Mat2 { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// Inverse of a GL(2, Z) matrix; errors on other determinants.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_one() {
            Ok(Mat2 { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() })
        } else if (-&det).is_one() {
            Ok(Mat2 { a: -&self.d, b: self.b.clone(), c: self.c.clone(), d: -&self.a })
        } else {
            Err(Error::NotUnimodular(det))
        }
    }

    pub fn apply(&self, x: &BigInt, y: &BigInt) -> (BigInt, BigInt) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut acc = Mat2::identity();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Lexicographic comparison of (a, b, c, d). Not a mathematically
    /// meaningful order, just a stable one for sorted output.
    pub fn cmp_entries(&self, other: &Mat2) -> std::cmp::Ordering {
        (&self.a, &self.b, &self.c, &self.d).cmp(&(&other.a, &other.b, &other.c, &other.d))
    }

    pub fn max_abs_entry(&self) -> BigInt {
        let mut m = self.a.abs();
        for e in [&self.b, &self.c, &self.d] {
            let v = e.abs();
            if v > m {
                m = v;
            }
        }
        m
    }

    /// Entries in row-major order, for deterministic comparisons.
    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for Mat2 {
    /// Row-major text form "a,b;c,d".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for Mat2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |detail: &str| Error::Parse { what: "matrix", detail: detail.to_string() };
        let rows: Vec<&str> = s.split(';').collect();
        if rows.len() != 2 {
            return Err(err(&format!("expected \"a,b;c,d\", got {s:?}")));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cells: Vec<&str> = row.split(',').collect();
            if cells.len() != 2 {
                return Err(err(&format!("expected two entries per row, got {row:?}")));
            }
            for cell in cells {
                let v = BigInt::from_str(cell.trim())
                    .map_err(|_| err(&format!("bad integer {:?}", cell.trim())))?;
                entries.push(v);
            }
        }
        let mut it = entries.into_iter();
        Ok(Mat2 {
            a: it.next().unwrap(),
            b: it.next().unwrap(),
            c: it.next().unwrap(),
            d: it.next().unwrap(),
        })
    }
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_enforce_determinants() {
        assert!(Mat2::sl2z(1, 1, 0, 1).is_ok());
        assert!(Mat2::sl2z(1, 0, 0, -1).is_err());
        assert!(Mat2::gl2z(1, 0, 0, -1).is_ok());
        assert!(Mat2::gl2z(2, 0, 0, 1).is_err());
    }

    #[test]
    fn multiply_and_inverse() {
        let m = Mat2::new(-39, 25, -25, 16);
        assert!(m.is_sl2z());
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        assert!((&inv * &m).is_identity());

        let j = Mat2::new(0, 1, 1, 0);
        let jinv = j.inverse().unwrap();
        assert_eq!(j, jinv);
        assert!((&j * &jinv).is_identity());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let m: Mat2 = "-39,25;-25,16".parse().unwrap();
        assert_eq!(m, Mat2::new(-39, 25, -25, 16));
        assert_eq!(m.to_string(), "-39,25;-25,16");
        let ws: Mat2 = " 1 , 2 ; 3 , 4 ".parse().unwrap();
        assert_eq!(ws, Mat2::new(1, 2, 3, 4));
        assert!("1,2;3".parse::<Mat2>().is_err());
        assert!("1,2,3;4,5,6".parse::<Mat2>().is_err());
        assert!("a,b;c,d".parse::<Mat2>().is_err());
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let m = Mat2::new(1, 1, 1, 2);
        let mut acc = Mat2::identity();
        for k in 0..8u64 {
            assert_eq!(m.pow(k), acc);
            acc = &acc * &m;
        }
    }

    #[test]
    fn apply_acts_on_column_vectors() {
        let m = Mat2::new(0, -1, 1, 0);
        let (x, y) = m.apply(&BigInt::from(3), &BigInt::from(5));
        assert_eq!((x, y), (BigInt::from(-5), BigInt::from(3)));
    }
}
