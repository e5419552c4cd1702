use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::mat2::Mat2;

/// The two standard twist generators:
/// A = [[1, 1], [0, 1]] and B = [[1, 0], [-1, 1]].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    A,
    B,
}

/// A generator raised to a nonzero integer power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: BigInt,
}

impl Syllable {
    /// Closed form: A^n = [[1, n], [0, 1]], B^n = [[1, 0], [-n, 1]].
    pub fn matrix(&self) -> Mat2 {
        match self.generator {
            Generator::A => Mat2 {
                a: BigInt::one(),
                b: self.exponent.clone(),
                c: BigInt::zero(),
                d: BigInt::one(),
            },
            Generator::B => Mat2 {
                a: BigInt::one(),
                b: BigInt::zero(),
                c: -self.exponent.clone(),
                d: BigInt::one(),
            },
        }
    }
}

/// Word in the generators A, B and their inverses, stored as syllables.
///
/// Evaluation multiplies syllable matrices left to right, so the leftmost
/// letter is the leftmost matrix factor; in the factorization convention
/// that makes it the last map applied.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    syllables: Vec<Syllable>,
}

impl GeneratorWord {
    pub fn empty() -> Self {
        GeneratorWord::default()
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Appends gen^exp, merging with the trailing syllable and dropping
    /// anything that cancels to exponent zero.
    pub fn push(&mut self, generator: Generator, exponent: impl Into<BigInt>) {
        let exponent = exponent.into();
        if exponent.is_zero() {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.generator == generator {
                last.exponent += exponent;
                if last.exponent.is_zero() {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push(Syllable { generator, exponent });
    }

    /// Left-to-right product of the syllable matrices.
    pub fn evaluate(&self) -> Mat2 {
        let mut acc = Mat2::identity();
        for s in &self.syllables {
            acc = &acc * &s.matrix();
        }
        acc
    }

    /// Sum of all exponents.
    pub fn exponent_sum(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exponent.clone()).sum()
    }

    /// Exponent sum reduced to 0..=11. Well defined on SL(2, Z) because
    /// the abelianization is Z/12 with both generators mapping to 1.
    pub fn deg_mod12(&self) -> u8 {
        let r = self.exponent_sum().mod_floor(&BigInt::from(12));
        u8::try_from(&r).expect("residue fits")
    }
}

impl fmt::Display for GeneratorWord {
    /// Space-separated syllables, "A B^-1 A^3"; the empty word prints "id".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "id");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let letter = match s.generator {
                Generator::A => "A",
                Generator::B => "B",
            };
            if s.exponent.is_one() {
                write!(f, "{letter}")?;
            } else {
                write!(f, "{letter}^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

impl Serialize for GeneratorWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Writes m as a word in A, B by Euclidean reduction of the first column.
///
/// Left-multiplying by A^n adds n times row 2 to row 1; by B^n subtracts
/// n times row 1 from row 2. det 1 keeps the first column coprime, so the
/// remainder loop ends with c = 0 and a = d = +-1; the -1 case is fixed
/// with (A B)^3 = -I.
pub fn sl2z_word(m: &Mat2) -> Result<GeneratorWord> {
    m.require_sl2z()?;
    let mut n = m.clone();
    let one = BigInt::one();
    // inverse word: ops applied as n <- gen^e * n, recorded in order
    let mut ops: Vec<(Generator, BigInt)> = Vec::new();
    let lmul_a = |n: &mut Mat2, e: BigInt, ops: &mut Vec<(Generator, BigInt)>| {
        if e.is_zero() {
            return;
        }
        n.a += &e * &n.c;
        n.b += &e * &n.d;
        ops.push((Generator::A, e));
    };
    let lmul_b = |n: &mut Mat2, e: BigInt, ops: &mut Vec<(Generator, BigInt)>| {
        if e.is_zero() {
            return;
        }
        n.c -= &e * &n.a;
        n.d -= &e * &n.b;
        ops.push((Generator::B, e));
    };
    while !n.c.is_zero() {
        if n.a.is_zero() {
            // column is (0, c); one A step makes a = |c|, which divides c
            let e = if n.c.is_positive() { one.clone() } else { -one.clone() };
            lmul_a(&mut n, e, &mut ops);
        }
        let r = n.c.div_floor(&n.a);
        lmul_b(&mut n, r, &mut ops);
        if n.c.is_zero() {
            break;
        }
        let q = n.a.div_floor(&n.c);
        lmul_a(&mut n, -q, &mut ops);
    }
    debug_assert!(n.c.is_zero());
    if n.a == -&one {
        // multiply by (A B)^3 = -I, applied right to left
        for g in [
            Generator::B,
            Generator::A,
            Generator::B,
            Generator::A,
            Generator::B,
            Generator::A,
        ] {
            match g {
                Generator::A => lmul_a(&mut n, one.clone(), &mut ops),
                Generator::B => lmul_b(&mut n, one.clone(), &mut ops),
            }
        }
    }
    debug_assert!(n.a.is_one() && n.d.is_one());
    let b = n.b.clone();
    lmul_a(&mut n, -b, &mut ops);
    debug_assert!(n.is_identity());
    // n = ops_k ... ops_1 * m = I, so m = inv(ops_1) ... inv(ops_k)
    let mut word = GeneratorWord::empty();
    for (g, e) in ops {
        word.push(g, -e);
    }
    Ok(word)
}

/// Exponent-sum residue of any generator word for m, in 0..=11.
pub fn deg_mod12(m: &Mat2) -> Result<u8> {
    Ok(sl2z_word(m)?.deg_mod12())
}
