use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::class::PrimitiveClass;
use crate::error::Result;
use crate::mat2::Mat2;

/// Matrix of the right-handed twist along the class (p, q):
/// [[1 - pq, p^2], [-q^2, 1 + pq]]. Lands in SL(2, Z) with trace 2.
pub fn twist_matrix(w: &PrimitiveClass) -> Mat2 {
    let (p, q) = (w.p(), w.q());
    let pq = p * q;
    Mat2 {
        a: BigInt::one() - &pq,
        b: p * p,
        c: -(q * q),
        d: BigInt::one() + &pq,
    }
}

/// Recognizes m = twist_matrix(w)^k with k >= 1, returning (w, k).
///
/// Such matrices are exactly the m != I with trace 2 whose off-diagonal
/// entries satisfy b = k p^2 and c = -k q^2. Returns None for every other
/// SL(2, Z) matrix; errors when det(m) != 1.
pub fn recognize_positive_twist(m: &Mat2) -> Result<Option<(PrimitiveClass, BigInt)>> {
    m.require_sl2z()?;
    if m.trace() != BigInt::from(2) || m.is_identity() {
        return Ok(None);
    }
    let n11 = &m.a - BigInt::one();
    let n12 = &m.b;
    let n21 = &m.c;
    if n12.is_negative() || n21.is_positive() {
        return Ok(None);
    }
    if n12.is_zero() {
        // class (0, 1), k = -c
        if !n11.is_zero() {
            return Ok(None);
        }
        return Ok(Some((PrimitiveClass::new(0, 1).unwrap(), -n21)));
    }
    if n21.is_zero() {
        // class (1, 0), k = b
        if !n11.is_zero() {
            return Ok(None);
        }
        return Ok(Some((PrimitiveClass::new(1, 0).unwrap(), n12.clone())));
    }
    // k = gcd(k p^2, k q^2) because gcd(p, q) = 1
    let k = n12.gcd(n21);
    let p2 = n12 / &k;
    let q2 = (-n21) / &k;
    let p = p2.sqrt();
    let q = q2.sqrt();
    if &p * &p != p2 || &q * &q != q2 {
        return Ok(None);
    }
    for qs in [q.clone(), -q] {
        if -(&p * &qs) * &k == n11 {
            return Ok(Some((PrimitiveClass::new(p, qs).unwrap(), k)));
        }
    }
    Ok(None)
}
