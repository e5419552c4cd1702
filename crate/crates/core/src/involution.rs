//! Orientation-reversing involutions of the rank-2 lattice and the
//! realness searches built on them.
//!
//! An involution here is a GL(2, Z) matrix c with c^2 = I and det c = -1,
//! equivalently trace 0 and determinant -1, so c = [[p, q], [r, -p]] with
//! p^2 + qr = 1. A matrix m in SL(2, Z) is exhibited as real by writing
//! it as a product of two such involutions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::class::{intersection, primitive_form, PrimitiveClass};
use crate::error::{Error, Result};
use crate::mat2::Mat2;

/// GL(2, Z) element of order two with determinant -1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    m: Mat2,
}

impl Involution {
    /// Validates trace 0 and determinant -1; together these force c^2 = I.
    pub fn new(m: Mat2) -> Result<Self> {
        if m.trace().is_zero() && (-m.det()).is_one() {
            Ok(Involution { m })
        } else {
            Err(Error::NotInvolution(m.to_string()))
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn into_matrix(self) -> Mat2 {
        self.m
    }
}

impl PartialOrd for Involution {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Involution {
    /// Entry order (a, b, c, d); since d = -a this is the (p, q, r) order.
    fn cmp(&self, other: &Self) -> Ordering {
        self.m.cmp_entries(&other.m)
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Involution::new(s.parse::<Mat2>()?)
    }
}

impl Serialize for Involution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.m.serialize(serializer)
    }
}

/// Whether the two eigenclasses of an involution span the full lattice
/// (pairing 1) or an index-two sublattice (pairing 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LatticePairing {
    Split,
    NonSplit,
}

/// Primitive eigenclasses of an involution together with their pairing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenBasis {
    /// Primitive class fixed by the involution.
    pub plus: PrimitiveClass,
    /// Primitive class negated by the involution.
    pub minus: PrimitiveClass,
    #[serde(serialize_with = "crate::serde_bigint::serialize")]
    pub pairing: BigInt,
    pub kind: LatticePairing,
}

/// Primitive generator of the kernel of a singular nonzero matrix.
fn kernel_gen(n: &Mat2) -> PrimitiveClass {
    let (x, y) = if !n.a.is_zero() || !n.b.is_zero() {
        (-&n.b, n.a.clone())
    } else {
        (-&n.d, n.c.clone())
    };
    let (class, _) = primitive_form(&x, &y).expect("singular nonzero matrix has nonzero kernel");
    class
}

/// Eigenclass pair of an involution: the +1 class, the -1 class, and the
/// index of the sublattice they span, which is always 1 or 2.
pub fn eigen_lattice_basis(c: &Involution) -> EigenBasis {
    let id = Mat2::identity();
    let minus_id = id.neg();
    let plus = kernel_gen(&sum(c.matrix(), &minus_id));
    let minus = kernel_gen(&sum(c.matrix(), &id));
    let pairing = intersection(&plus, &minus);
    let kind = if pairing.is_one() {
        LatticePairing::Split
    } else {
        debug_assert_eq!(pairing, BigInt::from(2));
        LatticePairing::NonSplit
    };
    EigenBasis { plus, minus, pairing, kind }
}

fn sum(x: &Mat2, y: &Mat2) -> Mat2 {
    Mat2 { a: &x.a + &y.a, b: &x.b + &y.b, c: &x.c + &y.c, d: &x.d + &y.d }
}

/// Intersection number of the two eigenclasses and its classification.
pub fn pairing_and_type(c: &Involution) -> (BigInt, LatticePairing) {
    let e = eigen_lattice_basis(c);
    (e.pairing, e.kind)
}

/// All involutions with every entry bounded by `bound` in absolute value,
/// in increasing (p, q, r) order.
///
/// The off-diagonal product is pinned to qr = 1 - p^2, so candidates come
/// from divisor pairs rather than a full grid.
pub fn enumerate_involutions(bound: i64) -> Result<Vec<Involution>> {
    if bound < 1 {
        return Err(Error::BadBound);
    }
    let mut out = Vec::new();
    for p in -bound..=bound {
        match p {
            0 => {
                // qr = 1
                out.push(raw(0, -1, -1));
                out.push(raw(0, 1, 1));
            }
            1 | -1 => {
                // qr = 0
                for q in -bound..0 {
                    out.push(raw(p, q, 0));
                }
                for r in -bound..=bound {
                    out.push(raw(p, 0, r));
                }
                for q in 1..=bound {
                    out.push(raw(p, q, 0));
                }
            }
            _ => {
                // qr = 1 - p^2 < 0
                let n = p * p - 1;
                let mut qr = Vec::new();
                let mut d = 1i64;
                while d * d <= n {
                    if n % d == 0 {
                        for (q, r) in [(d, -(n / d)), (-d, n / d), (n / d, -d), (-(n / d), d)] {
                            if q.abs() <= bound && r.abs() <= bound {
                                qr.push((q, r));
                            }
                        }
                    }
                    d += 1;
                }
                qr.sort_unstable();
                qr.dedup();
                for (q, r) in qr {
                    out.push(raw(p, q, r));
                }
            }
        }
    }
    Ok(out)
}

fn raw(p: i64, q: i64, r: i64) -> Involution {
    Involution { m: Mat2::new(p, q, r, -p) }
}

/// A decomposition target = c * c_prime into two involutions, which
/// exhibits the target as real.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealnessCertificate {
    pub c: Involution,
    pub c_prime: Involution,
    pub target: Mat2,
}

impl RealnessCertificate {
    /// Certificate for whatever the two factors multiply to.
    pub fn new(c: Involution, c_prime: Involution) -> Self {
        let target = c.matrix() * c_prime.matrix();
        RealnessCertificate { c, c_prime, target }
    }

    /// Validates a claimed decomposition of `target`.
    pub fn checked(c: Involution, c_prime: Involution, target: Mat2) -> Result<Self> {
        if c.matrix() * c_prime.matrix() != target {
            return Err(Error::ProductMismatch);
        }
        Ok(RealnessCertificate { c, c_prime, target })
    }

    pub fn verifies(&self, m: &Mat2) -> bool {
        &self.target == m
    }
}

/// Searches for the (p, q, r)-least involution c with entries bounded by
/// `bound` such that cm is again an involution; then c(m)c = m^-1 and the
/// pair (c, cm) certifies m as real. Returns None when the bound is
/// exhausted, which is inconclusive, not a proof of non-realness.
pub fn realness_by_search(m: &Mat2, bound: i64) -> Result<Option<RealnessCertificate>> {
    m.require_sl2z()?;
    for c in enumerate_involutions(bound)? {
        let cm = c.matrix() * m;
        if let Ok(c_prime) = Involution::new(cm) {
            return Ok(Some(RealnessCertificate::new(c, c_prime)));
        }
    }
    Ok(None)
}

/// Solves c [x y] = [tx ty] over the rationals and keeps the solution
/// only when it is integral.
pub(crate) fn solve_column_targets(
    x: (&BigInt, &BigInt),
    y: (&BigInt, &BigInt),
    tx: (BigInt, BigInt),
    ty: (BigInt, BigInt),
) -> Option<Mat2> {
    let det = x.0 * y.1 - y.0 * x.1;
    debug_assert!(!det.is_zero());
    // c = [tx ty] * adj([x y]) / det
    let t = Mat2 { a: tx.0, b: ty.0, c: tx.1, d: ty.1 };
    let adj = Mat2 { a: y.1.clone(), b: -y.0, c: -x.1, d: x.0.clone() };
    let num = &t * &adj;
    let mut entries = Vec::with_capacity(4);
    for e in num.entries() {
        let (q, r) = num_integer::div_rem(e.clone(), det.clone());
        if !r.is_zero() {
            return None;
        }
        entries.push(q);
    }
    let mut it = entries.into_iter();
    Some(Mat2 {
        a: it.next().unwrap(),
        b: it.next().unwrap(),
        c: it.next().unwrap(),
        d: it.next().unwrap(),
    })
}

fn solve_class_pair(
    x: &PrimitiveClass,
    y: &PrimitiveClass,
    swap: bool,
) -> Result<Vec<Involution>> {
    if x == y {
        return Err(Error::DegeneratePair);
    }
    let (xv, yv) = (x.vector(), y.vector());
    let (tx_base, ty_base) = if swap { (&yv, &xv) } else { (&xv, &yv) };
    let mut found = Vec::new();
    for sx in [1, -1] {
        for sy in [1, -1] {
            let tx = (BigInt::from(sx) * &tx_base.0, BigInt::from(sx) * &tx_base.1);
            let ty = (BigInt::from(sy) * &ty_base.0, BigInt::from(sy) * &ty_base.1);
            if let Some(c) = solve_column_targets((&xv.0, &xv.1), (&yv.0, &yv.1), tx, ty) {
                if let Ok(inv) = Involution::new(c) {
                    found.push(inv);
                }
            }
        }
    }
    found.sort();
    Ok(found)
}

/// All involutions sending the class of x to itself and the class of y to
/// itself, sorted by entries. Empty when no integral solution exists.
pub fn solve_structure_preserving(
    x: &PrimitiveClass,
    y: &PrimitiveClass,
) -> Result<Vec<Involution>> {
    solve_class_pair(x, y, false)
}

/// All involutions exchanging the classes of x and y, sorted by entries.
pub fn solve_structure_swapping(
    x: &PrimitiveClass,
    y: &PrimitiveClass,
) -> Result<Vec<Involution>> {
    solve_class_pair(x, y, true)
}
