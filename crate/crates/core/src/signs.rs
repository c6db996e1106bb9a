//! Sign vectors over {-, 0, +} and conformality.

use std::fmt;
use std::str::FromStr;

use num::Signed;

use crate::error::{Error, Result};
use crate::ratlin::RatVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Neg,
    Zero,
    Pos,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Neg => '-',
            Sign::Zero => '0',
            Sign::Pos => '+',
        }
    }
}

/// A sign vector, stored as two bitmasks (positive and negative positions).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector {
    dim: usize,
    pos: Vec<u64>,
    neg: Vec<u64>,
}

impl SignVector {
    pub fn zero(dim: usize) -> Self {
        let words = dim.div_ceil(64);
        Self {
            dim,
            pos: vec![0; words],
            neg: vec![0; words],
        }
    }

    pub fn from_signs(signs: &[Sign]) -> Self {
        let mut s = Self::zero(signs.len());
        for (i, &x) in signs.iter().enumerate() {
            s.set(i, x);
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize) -> Sign {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        if self.pos[w] & b != 0 {
            Sign::Pos
        } else if self.neg[w] & b != 0 {
            Sign::Neg
        } else {
            Sign::Zero
        }
    }

    pub fn set(&mut self, i: usize, s: Sign) {
        let (w, b) = (i / 64, 1u64 << (i % 64));
        self.pos[w] &= !b;
        self.neg[w] &= !b;
        match s {
            Sign::Pos => self.pos[w] |= b,
            Sign::Neg => self.neg[w] |= b,
            Sign::Zero => {}
        }
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.dim).map(|i| self.get(i)).collect()
    }

    /// Component-wise `0 < -`, `0 < +`; `-` and `+` are incomparable.
    pub fn leq(&self, other: &SignVector) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(self.pos.iter().zip(&other.pos).all(|(a, b)| a & !b == 0)
            && self.neg.iter().zip(&other.neg).all(|(a, b)| a & !b == 0))
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "{}", self.get(i).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '-' => Ok(Sign::Neg),
                '0' => Ok(Sign::Zero),
                '+' => Ok(Sign::Pos),
                other => Err(Error::Shape(format!("invalid sign character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_signs(&signs))
    }
}

pub fn sign_of(v: &RatVec) -> SignVector {
    let mut s = SignVector::zero(v.dim());
    for (i, x) in v.iter().enumerate() {
        if x.is_positive() {
            s.set(i, Sign::Pos);
        } else if x.is_negative() {
            s.set(i, Sign::Neg);
        }
    }
    s
}

pub fn sign_leq(x: &SignVector, y: &SignVector) -> Result<bool> {
    x.leq(y)
}

/// `x` conforms to `y`: `sign(x) <= sign(y)`.
pub fn conforms(x: &RatVec, y: &RatVec) -> Result<bool> {
    sign_of(x).leq(&sign_of(y))
}

/// Membership of `v` in the closed orthant `{x : sign(x) <= orthant}`.
pub fn orthant_contains(orthant: &SignVector, v: &RatVec) -> Result<bool> {
    sign_of(v).leq(orthant)
}
