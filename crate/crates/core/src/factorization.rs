//! Positive-twist factorizations: Hurwitz moves, equivalence of
//! length-two factorizations, the bounded two-twist enumeration, and the
//! homological realness obstruction.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::class::{apply_unimodular, intersection, primitive_form, PrimitiveClass};
use crate::error::{Error, Result};
use crate::involution::{solve_column_targets, solve_structure_swapping, Involution};
use crate::mat2::Mat2;
use crate::twist::{recognize_positive_twist, twist_matrix};

/// Ordered tuple of vanishing cycles with its cached total monodromy.
///
/// The cycle listed first is the twist applied first, so the matrix
/// product runs right to left over the list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistFactorization {
    cycles: Vec<PrimitiveClass>,
    product: Mat2,
}

impl TwistFactorization {
    pub fn new(cycles: Vec<PrimitiveClass>) -> Self {
        let mut product = Mat2::identity();
        for w in &cycles {
            product = &twist_matrix(w) * &product;
        }
        TwistFactorization { cycles, product }
    }

    pub fn cycles(&self) -> &[PrimitiveClass] {
        &self.cycles
    }

    pub fn total_monodromy(&self) -> &Mat2 {
        &self.product
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }
}

impl fmt::Display for TwistFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, w) in self.cycles.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({w})")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveDirection {
    L,
    R,
}

/// Elementary Hurwitz move swapping positions i and i + 1 (1-based).
///
/// L sends (.., w_i, w_j, ..) to (.., t(w_i)^{-1} w_j, w_i, ..) and R is
/// its inverse; either leaves the total monodromy unchanged.
pub fn hurwitz_move(
    f: &TwistFactorization,
    i: usize,
    dir: MoveDirection,
) -> Result<TwistFactorization> {
    if i < 1 || i >= f.cycles.len() {
        return Err(Error::IndexOutOfRange { index: i, len: f.cycles.len() });
    }
    let mut cycles = f.cycles.clone();
    let x = cycles[i - 1].clone();
    let y = cycles[i].clone();
    let (nx, ny) = match dir {
        MoveDirection::L => {
            let t_inv = twist_matrix(&x).inverse()?;
            (apply_unimodular(&t_inv, &y), x)
        }
        MoveDirection::R => (y.clone(), apply_unimodular(&twist_matrix(&y), &x)),
    };
    cycles[i - 1] = nx;
    cycles[i] = ny;
    let moved = TwistFactorization::new(cycles);
    debug_assert_eq!(moved.product, f.product);
    Ok(moved)
}

/// Outcome of the length-two Hurwitz equivalence test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HurwitzVerdict {
    pub equivalent: bool,
    pub witness: Option<HurwitzWitness>,
}

/// Equivalence certificate: apply `moves` L-moves at position 1, then send
/// every cycle through the conjugator (signs record the vector-level match).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HurwitzWitness {
    pub moves: usize,
    pub conjugator: Mat2,
    pub signs: (i8, i8),
}

/// Hurwitz equivalence of two length-two factorizations of the same matrix.
///
/// Complete for length two: two successive L-moves equal global conjugation
/// by the inverse total monodromy, so every move sequence is absorbed into a
/// change of basis K with K x = +-x', K y = +-y', det K = 1.
pub fn pairs_equivalent(
    p: &TwistFactorization,
    q: &TwistFactorization,
) -> Result<HurwitzVerdict> {
    for f in [p, q] {
        if f.len() != 2 {
            return Err(Error::LengthNotTwo(f.len()));
        }
    }
    if p.product != q.product {
        return Err(Error::ProductMismatch);
    }
    if p.cycles[0] == p.cycles[1] {
        // trace 2 pins the other pair down to the same repeated cycle
        let equivalent = p.cycles == q.cycles;
        return Ok(HurwitzVerdict {
            equivalent,
            witness: equivalent.then(|| HurwitzWitness {
                moves: 0,
                conjugator: Mat2::identity(),
                signs: (1, 1),
            }),
        });
    }
    for (moves, cand) in [(0, p.clone()), (1, hurwitz_move(p, 1, MoveDirection::L)?)] {
        if let Some((conjugator, signs)) = solve_pair_conjugator(&cand, q) {
            return Ok(HurwitzVerdict {
                equivalent: true,
                witness: Some(HurwitzWitness { moves, conjugator, signs }),
            });
        }
    }
    Ok(HurwitzVerdict { equivalent: false, witness: None })
}

fn solve_pair_conjugator(
    from: &TwistFactorization,
    to: &TwistFactorization,
) -> Option<(Mat2, (i8, i8))> {
    let (x, y) = (&from.cycles[0], &from.cycles[1]);
    let signed = |s: i8, w: &PrimitiveClass| {
        let (a, b) = w.vector();
        if s < 0 {
            (-a, -b)
        } else {
            (a, b)
        }
    };
    for (sx, sy) in [(1i8, 1i8), (1, -1), (-1, 1), (-1, -1)] {
        let k = solve_column_targets(
            (x.p(), x.q()),
            (y.p(), y.q()),
            signed(sx, &to.cycles[0]),
            signed(sy, &to.cycles[1]),
        );
        if let Some(k) = k {
            if k.det().is_one() {
                return Some((k, (sx, sy)));
            }
        }
    }
    None
}

/// Integer constraint p a^2 + q ab + r b^2 = rhs satisfied exactly by the
/// last cycles (a, b) of the two-twist factorizations of a fixed matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuadraticForm {
    #[serde(serialize_with = "crate::serde_bigint::serialize")]
    pub alpha_sq: BigInt,
    #[serde(serialize_with = "crate::serde_bigint::serialize")]
    pub alpha_beta: BigInt,
    #[serde(serialize_with = "crate::serde_bigint::serialize")]
    pub beta_sq: BigInt,
    #[serde(serialize_with = "crate::serde_bigint::serialize")]
    pub rhs: BigInt,
}

impl QuadraticForm {
    pub fn evaluate(&self, alpha: &BigInt, beta: &BigInt) -> BigInt {
        &self.alpha_sq * alpha * alpha
            + &self.alpha_beta * alpha * beta
            + &self.beta_sq * beta * beta
    }

    pub fn is_solution(&self, alpha: &BigInt, beta: &BigInt) -> bool {
        self.evaluate(alpha, beta) == self.rhs
    }

    pub fn discriminant(&self) -> BigInt {
        &self.alpha_beta * &self.alpha_beta - BigInt::from(4) * &self.alpha_sq * &self.beta_sq
    }

    fn is_zero_form(&self) -> bool {
        self.alpha_sq.is_zero() && self.alpha_beta.is_zero() && self.beta_sq.is_zero()
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::new();
        for (coeff, var) in [
            (&self.alpha_sq, "a^2"),
            (&self.alpha_beta, "ab"),
            (&self.beta_sq, "b^2"),
        ] {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            if lhs.is_empty() {
                if coeff.is_negative() {
                    lhs.push('-');
                }
            } else if coeff.is_negative() {
                lhs.push_str(" - ");
            } else {
                lhs.push_str(" + ");
            }
            if !mag.is_one() {
                lhs.push_str(&mag.to_string());
            }
            lhs.push_str(var);
        }
        if lhs.is_empty() {
            lhs.push('0');
        }
        write!(f, "{} = {}", lhs, self.rhs)
    }
}

/// The trace condition trace(t(w)^{-1} m) = 2 on the last cycle w = (a, b),
/// written out as a quadratic form constraint.
pub fn two_twist_diophantine(m: &Mat2) -> Result<QuadraticForm> {
    m.require_sl2z()?;
    Ok(QuadraticForm {
        alpha_sq: -m.c.clone(),
        alpha_beta: &m.a - &m.d,
        beta_sq: m.b.clone(),
        rhs: BigInt::from(2) - &m.a - &m.d,
    })
}

/// Primitive classes (a, b) with |a|, |b| <= bound satisfying the form,
/// sorted on canonical entries.
pub fn diophantine_solutions(form: &QuadraticForm, bound: i64) -> Result<Vec<PrimitiveClass>> {
    if bound < 1 {
        return Err(Error::BadBound);
    }
    let mut out = Vec::new();
    for beta in 0..=bound {
        // beta = 0 leaves only the class (1, 0); otherwise (a, beta) with
        // beta > 0 runs over each class exactly once
        let alphas = if beta == 0 { 1..=1 } else { -bound..=bound };
        for alpha in alphas {
            if alpha.gcd(&beta) != 1 {
                continue;
            }
            if form.is_solution(&BigInt::from(alpha), &BigInt::from(beta)) {
                out.push(PrimitiveClass::new(alpha, beta).expect("coprime pair"));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of the bounded two-twist enumeration.
#[derive(Debug, Clone, Serialize)]
pub struct TwoTwistEnumeration {
    pub form: QuadraticForm,
    pub solutions: Vec<PrimitiveClass>,
    pub factorizations: Vec<TwistFactorization>,
    /// True unless the form is definite and the bound provably covers
    /// every solution.
    pub possibly_incomplete: bool,
}

/// All length-two factorizations of m with every class entry within the
/// bound, sorted on cycle lists.
pub fn enumerate_two_twist_factorizations(m: &Mat2, bound: i64) -> Result<TwoTwistEnumeration> {
    let form = two_twist_diophantine(m)?;
    let solutions = diophantine_solutions(&form, bound)?;
    let cap = BigInt::from(bound);
    let mut factorizations = Vec::new();
    for w2 in &solutions {
        let cofactor = &twist_matrix(w2).inverse()? * m;
        if let Some((w1, k)) = recognize_positive_twist(&cofactor)? {
            if k.is_one() && w1.p().abs() <= cap && w1.q().abs() <= cap {
                factorizations.push(TwistFactorization::new(vec![w1, w2.clone()]));
            }
        }
    }
    factorizations.sort_by(|f, g| f.cycles.cmp(&g.cycles));
    let possibly_incomplete = enumeration_possibly_incomplete(&form, bound);
    Ok(TwoTwistEnumeration { form, solutions, factorizations, possibly_incomplete })
}

fn enumeration_possibly_incomplete(form: &QuadraticForm, bound: i64) -> bool {
    if form.is_zero_form() {
        // every pair solves 0 = 0; nothing solves 0 = rhs != 0
        return form.rhs.is_zero();
    }
    let disc = form.discriminant();
    if !disc.is_negative() {
        return true;
    }
    // definite form; orient it positive
    let (p, r, s) = if form.alpha_sq.is_negative() {
        (-&form.alpha_sq, -&form.beta_sq, -&form.rhs)
    } else {
        (form.alpha_sq.clone(), form.beta_sq.clone(), form.rhs.clone())
    };
    if !s.is_positive() {
        return false; // no nonzero solutions at all
    }
    // solutions satisfy a^2 <= 4 r s / -disc and b^2 <= 4 p s / -disc
    let cap = BigInt::from(bound) * BigInt::from(bound) * -disc;
    let four = BigInt::from(4);
    &four * r * &s > cap || four * p * s > cap
}

/// Two-twist factorizations grouped into Hurwitz equivalence classes.
#[derive(Debug, Clone, Serialize)]
pub struct HurwitzClasses {
    pub enumeration: TwoTwistEnumeration,
    /// One representative per class, minimizing (last, first) cycle order
    /// within its class; classes sorted on that key.
    pub classes: Vec<TwistFactorization>,
    /// Minimal-|trace| hyperbolic matrices commuting with the monodromy,
    /// when the bounded search finds any.
    pub commuting: Option<Vec<Mat2>>,
    /// Whether every commuting matrix maps each class into an existing one;
    /// None when no commuting matrix was searched out.
    pub closure_ok: Option<bool>,
}

pub fn hurwitz_classes_two(m: &Mat2, bound: i64) -> Result<HurwitzClasses> {
    let enumeration = enumerate_two_twist_factorizations(m, bound)?;
    let mut groups: Vec<Vec<TwistFactorization>> = Vec::new();
    'nextpair: for f in &enumeration.factorizations {
        for group in groups.iter_mut() {
            if pairs_equivalent(&group[0], f)?.equivalent {
                group.push(f.clone());
                continue 'nextpair;
            }
        }
        groups.push(vec![f.clone()]);
    }
    fn key(f: &TwistFactorization) -> (PrimitiveClass, PrimitiveClass) {
        (f.cycles[1].clone(), f.cycles[0].clone())
    }
    let mut classes: Vec<TwistFactorization> = groups
        .into_iter()
        .map(|group| group.into_iter().min_by_key(key).expect("nonempty group"))
        .collect();
    classes.sort_by_key(key);
    let commuting = commuting_hyperbolic_candidates(m);
    let closure_ok = match &commuting {
        None => None,
        Some(cands) => {
            let mut ok = true;
            for s in cands {
                for rep in &classes {
                    let moved = TwistFactorization::new(
                        rep.cycles.iter().map(|w| apply_unimodular(s, w)).collect(),
                    );
                    debug_assert_eq!(moved.product, *m);
                    let mut matched = false;
                    for other in &classes {
                        if pairs_equivalent(&moved, other)?.equivalent {
                            matched = true;
                            break;
                        }
                    }
                    ok &= matched;
                }
            }
            Some(ok)
        }
    };
    Ok(HurwitzClasses { enumeration, classes, commuting, closure_ok })
}

const COMMUTING_SEARCH_CAP: i64 = 100_000;

/// Bounded search for the determinant-1 matrices commuting with m whose
/// absolute trace is minimal among hyperbolic ones.
///
/// Every integer matrix commuting with a non-scalar m is u I + v N for
/// N = (m - d I)/g, g = gcd(b, c, a - d), so the search runs over v >= 1
/// and asks for v^2 disc(N) + 4 to be the square of the trace.
pub fn commuting_hyperbolic_candidates(m: &Mat2) -> Option<Vec<Mat2>> {
    let g = m.b.gcd(&m.c).gcd(&(&m.a - &m.d));
    if g.is_zero() {
        return None; // scalar matrix
    }
    let n = Mat2 {
        a: (&m.a - &m.d) / &g,
        b: &m.b / &g,
        c: &m.c / &g,
        d: BigInt::zero(),
    };
    let disc_n = &n.a * &n.a + BigInt::from(4) * &n.b * &n.c;
    if !disc_n.is_positive() {
        return None; // commutant has no hyperbolic elements
    }
    for v in 1..=COMMUTING_SEARCH_CAP {
        let vv = BigInt::from(v);
        let s_sq = &vv * &vv * &disc_n + BigInt::from(4);
        let s = s_sq.sqrt();
        if &s * &s != s_sq {
            continue;
        }
        let mut out = Vec::new();
        for trace in [s.clone(), -s] {
            // trace and v disc(N) share parity, so u is integral
            let u = (&trace - &vv * &n.a) / BigInt::from(2);
            let cand = Mat2 {
                a: &u + &vv * &n.a,
                b: &vv * &n.b,
                c: &vv * &n.c,
                d: u,
            };
            debug_assert!(cand.is_sl2z());
            debug_assert_eq!(&cand * m, m * &cand);
            out.push(cand.neg());
            out.push(cand);
        }
        out.sort_by(Mat2::cmp_entries);
        return Some(out);
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseStatus {
    Obstructed,
    Open,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SwappedStatus {
    Obstructed,
    Open,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ObstructionVerdict {
    NotReal,
    Inconclusive,
}

/// Homological obstruction report for a length-two factorization (x, y).
///
/// An exact real structure would either preserve both cycle classes or
/// exchange them; preserving forces i(x, y) <= 2 and exchanging forces
/// i(prim(x + y), prim(x - y)) <= 2, so failing both rules realness out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealObstructionReport {
    #[serde(serialize_with = "crate::serde_bigint::serialize")]
    pub intersection: BigInt,
    pub case_invariant: CaseStatus,
    /// i(prim(x + y), prim(x - y)); the unordered pair does not depend on
    /// the sign choices. None when x = y.
    #[serde(serialize_with = "crate::serde_bigint::serialize_opt")]
    pub swapped_pairing: Option<BigInt>,
    pub case_swapped: SwappedStatus,
    /// Exchanging involutions at the homological level, consulted exactly
    /// when the swapped case stays open.
    pub swap_structures: Option<Vec<Involution>>,
    pub verdict: ObstructionVerdict,
}

pub fn factorization_real_obstruction(f: &TwistFactorization) -> Result<RealObstructionReport> {
    if f.len() != 2 {
        return Err(Error::LengthNotTwo(f.len()));
    }
    let (x, y) = (&f.cycles[0], &f.cycles[1]);
    let two = BigInt::from(2);
    let pairing = intersection(x, y);
    let case_invariant =
        if pairing > two { CaseStatus::Obstructed } else { CaseStatus::Open };
    let (swapped_pairing, case_swapped) = if x == y {
        (None, SwappedStatus::Degenerate)
    } else {
        let (sum, _) = primitive_form(&(x.p() + y.p()), &(x.q() + y.q()))?;
        let (diff, _) = primitive_form(&(x.p() - y.p()), &(x.q() - y.q()))?;
        let swapped = intersection(&sum, &diff);
        let status =
            if swapped > two { SwappedStatus::Obstructed } else { SwappedStatus::Open };
        (Some(swapped), status)
    };
    let swap_structures = if case_swapped == SwappedStatus::Open {
        Some(solve_structure_swapping(x, y)?)
    } else {
        None
    };
    // a degenerate swapped case collapses into the invariant one
    let verdict = if case_invariant == CaseStatus::Obstructed
        && case_swapped != SwappedStatus::Open
    {
        ObstructionVerdict::NotReal
    } else {
        ObstructionVerdict::Inconclusive
    };
    Ok(RealObstructionReport {
        intersection: pairing,
        case_invariant,
        swapped_pairing,
        case_swapped,
        swap_structures,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(p: i64, q: i64) -> PrimitiveClass {
        PrimitiveClass::new(p, q).unwrap()
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::new(a, b, c, d)
    }

    fn fac(cycles: &[(i64, i64)]) -> TwistFactorization {
        TwistFactorization::new(cycles.iter().map(|&(p, q)| cl(p, q)).collect())
    }

    fn target() -> Mat2 {
        m(-39, 25, -25, 16)
    }

    #[test]
    fn total_monodromy_examples() {
        assert_eq!(*fac(&[(3, 5), (1, 0)]).total_monodromy(), target());
        assert_eq!(*fac(&[(5, 8), (0, 1)]).total_monodromy(), target());
        assert_eq!(*fac(&[]).total_monodromy(), Mat2::identity());
        assert_eq!(*fac(&[(1, 0)]).total_monodromy(), m(1, 1, 0, 1));
        assert_eq!(fac(&[(3, 5), (1, 0)]).to_string(), "((3,5),(1,0))");
    }

    #[test]
    fn hurwitz_move_example_and_inverse() {
        let f = fac(&[(3, 5), (1, 0)]);
        let l = hurwitz_move(&f, 1, MoveDirection::L).unwrap();
        assert_eq!(l, fac(&[(16, 25), (3, 5)]));
        assert_eq!(l.total_monodromy(), f.total_monodromy());
        let back = hurwitz_move(&l, 1, MoveDirection::R).unwrap();
        assert_eq!(back, f);
        assert!(matches!(
            hurwitz_move(&f, 0, MoveDirection::L),
            Err(Error::IndexOutOfRange { index: 0, len: 2 })
        ));
        assert!(matches!(
            hurwitz_move(&f, 2, MoveDirection::R),
            Err(Error::IndexOutOfRange { index: 2, len: 2 })
        ));
    }

    #[test]
    fn double_l_move_is_global_conjugation() {
        let f = fac(&[(3, 5), (1, 0)]);
        let twice = hurwitz_move(&hurwitz_move(&f, 1, MoveDirection::L).unwrap(), 1, MoveDirection::L)
            .unwrap();
        let inv = f.total_monodromy().inverse().unwrap();
        let conjugated = TwistFactorization::new(
            f.cycles().iter().map(|w| apply_unimodular(&inv, w)).collect(),
        );
        assert_eq!(twice, conjugated);
    }

    #[test]
    fn pairs_equivalent_frozen_examples() {
        let p = fac(&[(3, 5), (1, 0)]);
        let q = fac(&[(16, 25), (3, 5)]);
        let v = pairs_equivalent(&p, &q).unwrap();
        assert!(v.equivalent);
        let w = v.witness.unwrap();
        assert_eq!(w.moves, 0);
        assert_eq!(w.conjugator, m(-3, 5, -5, 8));
        assert_eq!(w.signs, (1, -1));
        // the witness really maps p onto q
        let mut moved = p.clone();
        for _ in 0..w.moves {
            moved = hurwitz_move(&moved, 1, MoveDirection::L).unwrap();
        }
        let image = TwistFactorization::new(
            moved.cycles().iter().map(|c| apply_unimodular(&w.conjugator, c)).collect(),
        );
        assert_eq!(image, q);

        let r = fac(&[(5, 8), (0, 1)]);
        assert!(!pairs_equivalent(&p, &r).unwrap().equivalent);
        assert!(!pairs_equivalent(&r, &p).unwrap().equivalent);

        let same = pairs_equivalent(&p, &p).unwrap();
        assert!(same.equivalent);
        let w = same.witness.unwrap();
        assert_eq!((w.moves, w.conjugator, w.signs), (0, Mat2::identity(), (1, 1)));
    }

    #[test]
    fn pairs_equivalent_repeated_cycle_and_errors() {
        let rep = fac(&[(1, 0), (1, 0)]);
        let v = pairs_equivalent(&rep, &rep).unwrap();
        assert!(v.equivalent);
        assert_eq!(v.witness.unwrap().conjugator, Mat2::identity());

        assert_eq!(
            pairs_equivalent(&fac(&[(1, 0)]), &rep).unwrap_err(),
            Error::LengthNotTwo(1)
        );
        assert_eq!(
            pairs_equivalent(&fac(&[(3, 5), (1, 0)]), &fac(&[(1, 0), (3, 5)])).unwrap_err(),
            Error::ProductMismatch
        );
    }

    #[test]
    fn diophantine_form_frozen() {
        let form = two_twist_diophantine(&target()).unwrap();
        assert_eq!(form.alpha_sq, BigInt::from(25));
        assert_eq!(form.alpha_beta, BigInt::from(-55));
        assert_eq!(form.beta_sq, BigInt::from(25));
        assert_eq!(form.rhs, BigInt::from(25));
        assert_eq!(form.to_string(), "25a^2 - 55ab + 25b^2 = 25");

        let id = two_twist_diophantine(&Mat2::identity()).unwrap();
        assert!(id.is_zero_form());
        assert_eq!(id.to_string(), "0 = 0");

        let par = two_twist_diophantine(&m(1, 1, 0, 1)).unwrap();
        assert_eq!(par.to_string(), "b^2 = 0");

        assert!(two_twist_diophantine(&m(1, 0, 0, 2)).is_err());
    }

    #[test]
    fn diophantine_solutions_frozen() {
        let form = two_twist_diophantine(&target()).unwrap();
        let sols = diophantine_solutions(&form, 40).unwrap();
        let expected: Vec<PrimitiveClass> = [
            (0, 1),
            (1, 0),
            (3, 5),
            (5, 3),
            (5, 8),
            (8, 5),
            (16, 25),
            (25, 16),
            (25, 39),
            (39, 25),
        ]
        .iter()
        .map(|&(p, q)| cl(p, q))
        .collect();
        assert_eq!(sols, expected);
        assert_eq!(diophantine_solutions(&form, 0), Err(Error::BadBound));
    }

    #[test]
    fn enumeration_frozen() {
        let e = enumerate_two_twist_factorizations(&target(), 40).unwrap();
        assert_eq!(e.factorizations.len(), 8);
        for pair in [
            fac(&[(3, 5), (1, 0)]),
            fac(&[(5, 8), (0, 1)]),
            fac(&[(16, 25), (3, 5)]),
            fac(&[(25, 39), (5, 8)]),
        ] {
            assert!(e.factorizations.contains(&pair), "missing {pair}");
        }
        for f in &e.factorizations {
            assert_eq!(*f.total_monodromy(), target());
            assert!(e.form.is_solution(f.cycles()[1].p(), f.cycles()[1].q()));
        }
        assert!(e.possibly_incomplete);

        assert_eq!(enumerate_two_twist_factorizations(&target(), 200).unwrap().factorizations.len(), 12);

        let id = enumerate_two_twist_factorizations(&Mat2::identity(), 10).unwrap();
        assert!(id.factorizations.is_empty());
        assert!(id.possibly_incomplete);

        let neg_id = enumerate_two_twist_factorizations(&m(-1, 0, 0, -1), 10).unwrap();
        assert!(neg_id.factorizations.is_empty());
        assert!(!neg_id.possibly_incomplete);

        let par = enumerate_two_twist_factorizations(&m(1, 2, 0, 1), 10).unwrap();
        assert_eq!(par.factorizations, vec![fac(&[(1, 0), (1, 0)])]);
    }

    #[test]
    fn elliptic_monodromy_enumerates_and_groups() {
        let ell = m(1, 1, -1, 0);
        let e = enumerate_two_twist_factorizations(&ell, 10).unwrap();
        assert_eq!(
            e.solutions,
            vec![cl(-1, 1), cl(0, 1), cl(1, 0)]
        );
        assert_eq!(e.factorizations.len(), 3);
        assert!(!e.possibly_incomplete);

        let h = hurwitz_classes_two(&ell, 10).unwrap();
        assert_eq!(h.classes, vec![fac(&[(0, 1), (-1, 1)])]);
        assert_eq!(h.commuting, None);
        assert_eq!(h.closure_ok, None);
    }

    #[test]
    fn hurwitz_classes_frozen() {
        for bound in [40, 100, 200] {
            let h = hurwitz_classes_two(&target(), bound).unwrap();
            assert_eq!(
                h.classes,
                vec![fac(&[(5, 8), (0, 1)]), fac(&[(3, 5), (1, 0)])],
                "bound {bound}"
            );
            assert_eq!(h.closure_ok, Some(true));
        }
        let h = hurwitz_classes_two(&target(), 40).unwrap();
        assert_eq!(
            h.commuting,
            Some(vec![
                m(-8, 5, -5, 3),
                m(-3, 5, -5, 8),
                m(3, -5, 5, -8),
                m(8, -5, 5, -3),
            ])
        );

        let id = hurwitz_classes_two(&Mat2::identity(), 10).unwrap();
        assert!(id.classes.is_empty());
        assert_eq!(id.commuting, None);
        assert_eq!(id.closure_ok, None);
    }

    #[test]
    fn commuting_candidates_properties() {
        let cands = commuting_hyperbolic_candidates(&target()).unwrap();
        assert_eq!(cands.len(), 4);
        for s in &cands {
            assert!(s.is_sl2z());
            assert_eq!(s * &target(), &target() * s);
            assert_eq!(s.trace().abs(), BigInt::from(5));
        }
        // parabolic and identity commutants carry no hyperbolic elements
        assert_eq!(commuting_hyperbolic_candidates(&m(1, 2, 0, 1)), None);
        assert_eq!(commuting_hyperbolic_candidates(&Mat2::identity()), None);
    }

    #[test]
    fn obstruction_frozen() {
        let r = factorization_real_obstruction(&fac(&[(3, 5), (1, 0)])).unwrap();
        assert_eq!(r.intersection, BigInt::from(5));
        assert_eq!(r.case_invariant, CaseStatus::Obstructed);
        assert_eq!(r.swapped_pairing, Some(BigInt::from(10)));
        assert_eq!(r.case_swapped, SwappedStatus::Obstructed);
        assert_eq!(r.swap_structures, None);
        assert_eq!(r.verdict, ObstructionVerdict::NotReal);

        let r = factorization_real_obstruction(&fac(&[(5, 8), (0, 1)])).unwrap();
        assert_eq!(r.intersection, BigInt::from(5));
        assert_eq!(r.swapped_pairing, Some(BigInt::from(10)));
        assert_eq!(r.verdict, ObstructionVerdict::NotReal);

        let r = factorization_real_obstruction(&fac(&[(1, 0), (0, 1)])).unwrap();
        assert_eq!(r.intersection, BigInt::one());
        assert_eq!(r.case_invariant, CaseStatus::Open);
        assert_eq!(r.swapped_pairing, Some(BigInt::from(2)));
        assert_eq!(r.case_swapped, SwappedStatus::Open);
        let swaps = r.swap_structures.unwrap();
        assert_eq!(swaps.len(), 2);
        assert!(swaps.iter().any(|c| *c.matrix() == m(0, 1, 1, 0)));
        assert_eq!(r.verdict, ObstructionVerdict::Inconclusive);

        let r = factorization_real_obstruction(&fac(&[(1, 0), (1, 0)])).unwrap();
        assert_eq!(r.intersection, BigInt::zero());
        assert_eq!(r.swapped_pairing, None);
        assert_eq!(r.case_swapped, SwappedStatus::Degenerate);
        assert_eq!(r.swap_structures, None);
        assert_eq!(r.verdict, ObstructionVerdict::Inconclusive);

        assert_eq!(
            factorization_real_obstruction(&fac(&[])).unwrap_err(),
            Error::LengthNotTwo(0)
        );
    }
}
