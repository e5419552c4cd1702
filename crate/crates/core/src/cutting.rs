//! Cutting period cycles of hyperbolic SL(2, Z) elements, the RL-word
//! reduction behind them, and the odd-bipalindromic realness criterion.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::mat2::Mat2;
use crate::surd::{cf_expansion, fixed_point_surd};

/// Sign of the trace of a hyperbolic matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceSign {
    Plus,
    Minus,
}

impl fmt::Display for TraceSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TraceSign::Plus => "+",
            TraceSign::Minus => "-",
        })
    }
}

impl Serialize for TraceSign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Cutting period cycle: an even cyclic word of positive integers plus
/// the trace sign, with a witness conjugation. Together with the sign the
/// word is a complete conjugacy invariant of hyperbolic elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CuttingCycle {
    #[serde(serialize_with = "crate::serde_bigint::serialize_vec")]
    word: Vec<BigInt>,
    sign: TraceSign,
    witness: Mat2,
}

impl CuttingCycle {
    pub fn word(&self) -> &[BigInt] {
        &self.word
    }

    pub fn sign(&self) -> TraceSign {
        self.sign
    }

    pub fn witness(&self) -> &Mat2 {
        &self.witness
    }

    /// The conjugation the witness certifies: witness^-1 (sign m) witness
    /// equals the RL evaluation of the word.
    pub fn verify_against(&self, m: &Mat2) -> bool {
        let norm = match self.sign {
            TraceSign::Plus => m.clone(),
            TraceSign::Minus => m.neg(),
        };
        match evaluate_rl(&self.word) {
            Ok(w) => &norm * &self.witness == &self.witness * &w,
            Err(_) => false,
        }
    }
}

impl fmt::Display for CuttingCycle {
    /// Text form "[1,3,1,3] sign=-".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] sign={}", join(&self.word), self.sign)
    }
}

fn join(word: &[BigInt]) -> String {
    let parts: Vec<String> = word.iter().map(|a| a.to_string()).collect();
    parts.join(",")
}

fn validate_word(word: &[BigInt]) -> Result<()> {
    if word.len() % 2 != 0 {
        return Err(Error::BadCycleWord(format!("length {} is odd", word.len())));
    }
    for a in word {
        if !a.is_positive() {
            return Err(Error::BadCycleWord(format!("entry {a} is not positive")));
        }
    }
    Ok(())
}

/// R^{a1} L^{a2} R^{a3} ... L^{a2k} with R = [[1,1],[0,1]] and
/// L = [[1,0],[1,1]], by closed-form powers.
pub fn evaluate_rl(word: &[BigInt]) -> Result<Mat2> {
    validate_word(word)?;
    let mut acc = Mat2::identity();
    for (i, a) in word.iter().enumerate() {
        let step = if i % 2 == 0 {
            Mat2 { a: BigInt::one(), b: a.clone(), c: BigInt::zero(), d: BigInt::one() }
        } else {
            Mat2 { a: BigInt::one(), b: BigInt::zero(), c: a.clone(), d: BigInt::one() }
        };
        acc = &acc * &step;
    }
    Ok(acc)
}

/// [[a, 1], [1, 0]]; an even-length product of these is the RL evaluation
/// of the digit word, and each factor has determinant -1.
fn digit_matrix(a: &BigInt) -> Mat2 {
    Mat2 { a: a.clone(), b: BigInt::one(), c: BigInt::one(), d: BigInt::zero() }
}

/// Lexicographically minimal rotation.
pub fn canonical_cycle(word: &[BigInt]) -> Result<Vec<BigInt>> {
    validate_word(word)?;
    let n = word.len();
    let mut best: Option<Vec<BigInt>> = None;
    for r in 0..n {
        let mut rot = Vec::with_capacity(n);
        rot.extend_from_slice(&word[r..]);
        rot.extend_from_slice(&word[..r]);
        if best.as_ref().map_or(true, |b| &rot < b) {
            best = Some(rot);
        }
    }
    Ok(best.unwrap_or_default())
}

/// A rotation and an odd cut position splitting a cyclic word into two
/// odd-length palindromic blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipalindromicSplit {
    pub rotation: usize,
    pub cut: usize,
    #[serde(serialize_with = "crate::serde_bigint::serialize_vec")]
    pub first: Vec<BigInt>,
    #[serde(serialize_with = "crate::serde_bigint::serialize_vec")]
    pub second: Vec<BigInt>,
}

fn is_palindrome(s: &[BigInt]) -> bool {
    s.iter().eq(s.iter().rev())
}

/// First (rotation, cut) splitting some rotation of the word into two
/// nonempty odd-length palindromes, or None when no rotation splits.
pub fn odd_bipalindromic_split(word: &[BigInt]) -> Result<Option<BipalindromicSplit>> {
    validate_word(word)?;
    let n = word.len();
    for rotation in 0..n {
        let mut rot = Vec::with_capacity(n);
        rot.extend_from_slice(&word[rotation..]);
        rot.extend_from_slice(&word[..rotation]);
        // both blocks odd forces an odd cut (total length is even)
        for cut in (1..n).step_by(2) {
            if is_palindrome(&rot[..cut]) && is_palindrome(&rot[cut..]) {
                return Ok(Some(BipalindromicSplit {
                    rotation,
                    cut,
                    first: rot[..cut].to_vec(),
                    second: rot[cut..].to_vec(),
                }));
            }
        }
    }
    Ok(None)
}

/// Cutting period cycle of a hyperbolic matrix.
///
/// The word is the minimal continued fraction period of the attracting
/// fixed point of sign * m, doubled to even length when odd, repeated
/// until the trace matches |trace m|. The witness is the preperiod
/// convergent product, with one extra digit absorbed (a cyclic rotation
/// of the word) when its determinant is -1; the conjugation identity is
/// checked before returning.
pub fn cutting_cycle(m: &Mat2) -> Result<CuttingCycle> {
    m.require_sl2z()?;
    let t = m.trace();
    if t.abs() <= BigInt::from(2) {
        return Err(Error::NotHyperbolic(t));
    }
    let (sign, norm) = if t.is_positive() {
        (TraceSign::Plus, m.clone())
    } else {
        (TraceSign::Minus, m.neg())
    };
    let cf = cf_expansion(&fixed_point_surd(&norm)?);
    let mut period = cf.period.clone();
    if period.len() % 2 == 1 {
        period.extend(cf.period.iter().cloned());
    }
    let target = norm.trace();
    let base = evaluate_rl(&period)?;
    let mut word = period.clone();
    let mut w = base.clone();
    while w.trace() < target {
        w = &w * &base;
        word.extend_from_slice(&period);
    }
    if w.trace() != target {
        return Err(Error::ReductionFailed(format!("period powers skip trace {target}")));
    }
    let mut witness = Mat2::identity();
    for a in &cf.preperiod {
        witness = &witness * &digit_matrix(a);
    }
    if !witness.det().is_one() {
        let first = word.remove(0);
        witness = &witness * &digit_matrix(&first);
        word.push(first);
        w = evaluate_rl(&word)?;
    }
    if &norm * &witness != &witness * &w {
        return Err(Error::ReductionFailed("witness conjugation check failed".to_string()));
    }
    Ok(CuttingCycle { word, sign, witness })
}

/// Realness verdict for a hyperbolic matrix: real exactly when the
/// cutting cycle is odd-bipalindromic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum HyperbolicRealness {
    Real { cycle: CuttingCycle, split: BipalindromicSplit },
    NotReal { cycle: CuttingCycle },
}

impl HyperbolicRealness {
    pub fn is_real(&self) -> bool {
        matches!(self, HyperbolicRealness::Real { .. })
    }

    pub fn cycle(&self) -> &CuttingCycle {
        match self {
            HyperbolicRealness::Real { cycle, .. } => cycle,
            HyperbolicRealness::NotReal { cycle } => cycle,
        }
    }
}

pub fn is_real_hyperbolic(m: &Mat2) -> Result<HyperbolicRealness> {
    let cycle = cutting_cycle(m)?;
    Ok(match odd_bipalindromic_split(cycle.word())? {
        Some(split) => HyperbolicRealness::Real { cycle, split },
        None => HyperbolicRealness::NotReal { cycle },
    })
}

/// SL(2, Z) conjugacy test for hyperbolic matrices: equal trace signs and
/// equal canonical cutting cycles.
pub fn hyperbolic_conjugate(m: &Mat2, n: &Mat2) -> Result<bool> {
    let cm = cutting_cycle(m)?;
    let cn = cutting_cycle(n)?;
    Ok(cm.sign() == cn.sign() && canonical_cycle(cm.word())? == canonical_cycle(cn.word())?)
}
