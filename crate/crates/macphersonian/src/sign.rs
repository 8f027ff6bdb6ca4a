//! The sign algebra `{0,+,-}`, sign vectors, and the topped lattice.
//!
//! Signs are ordered by `0 <_v (+)`, `0 <_v (-)`, with `(+)` and `(-)`
//! incomparable. Sign vectors in `{0,+,-}^n` carry the componentwise order;
//! adjoining a top element `⊤` turns them into a lattice whose join drives
//! the covector-sphere closure.
//!
//! Text form of a sign vector is the n-character string over `{0,+,-}`.
//! Canonical byte order for encodings is ASCII: `'+' < '-' < '0'`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignError {
    #[error("invalid sign character {0:?} (expected one of '0', '+', '-')")]
    InvalidChar(char),
}

/// An element of the sign algebra `{0,+,-}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Zero,
    Plus,
    Minus,
}

pub use Sign::{Minus, Plus, Zero};

impl Sign {
    pub const ALL: [Sign; 3] = [Zero, Plus, Minus];

    pub fn negate(self) -> Sign {
        match self {
            Zero => Zero,
            Plus => Minus,
            Minus => Plus,
        }
    }

    /// The partial order on signs: `a ≤_v b` iff `a = 0` or `a = b`.
    pub fn leq_v(self, other: Sign) -> bool {
        self == Zero || self == other
    }

    pub fn is_zero(self) -> bool {
        self == Zero
    }

    /// Sign of an integer, for exact determinant predicates.
    pub fn from_i128(v: i128) -> Sign {
        match v.cmp(&0) {
            std::cmp::Ordering::Equal => Zero,
            std::cmp::Ordering::Greater => Plus,
            std::cmp::Ordering::Less => Minus,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Zero => '0',
            Plus => '+',
            Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Result<Sign, SignError> {
        match c {
            '0' => Ok(Zero),
            '+' => Ok(Plus),
            '-' => Ok(Minus),
            _ => Err(SignError::InvalidChar(c)),
        }
    }

    /// Encoding byte; byte order realizes the canonical `'+' < '-' < '0'`.
    pub fn byte(self) -> u8 {
        self.to_char() as u8
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Plus, Plus) | (Minus, Minus) => Plus,
            _ => Minus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// An element of `{0,+,-}^n`. Coordinates are indexed `1..=n` in the public
/// API; storage is 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignVector {
    entries: Vec<Sign>,
}

impl SignVector {
    pub fn new(entries: Vec<Sign>) -> SignVector {
        SignVector { entries }
    }

    pub fn zero(n: usize) -> SignVector {
        SignVector {
            entries: vec![Zero; n],
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Coordinate `i`, 1-based.
    pub fn get(&self, i: usize) -> Sign {
        assert!(
            i >= 1 && i <= self.entries.len(),
            "coordinate {i} out of range 1..={}",
            self.entries.len()
        );
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[Sign] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|s| s.is_zero())
    }

    /// 1-based indices of nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn negate(&self) -> SignVector {
        SignVector {
            entries: self.entries.iter().map(|s| s.negate()).collect(),
        }
    }

    /// Componentwise `≤_v`.
    pub fn leq_v(&self, other: &SignVector) -> bool {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.leq_v(*b))
    }

    /// True when no coordinate carries opposite nonzero signs.
    pub fn conformal(&self, other: &SignVector) -> bool {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a.is_zero() || b.is_zero() || a == b)
    }

    /// Join in the topped lattice: coordinatewise max, or `⊤` when some
    /// coordinate sees both `+` and `-`.
    pub fn join(&self, other: &SignVector) -> ToppedSignVector {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        let mut out = Vec::with_capacity(self.len());
        for (a, b) in self.entries.iter().zip(&other.entries) {
            match (a, b) {
                (Zero, s) => out.push(*s),
                (s, Zero) => out.push(*s),
                (a, b) if a == b => out.push(*a),
                _ => return ToppedSignVector::Top,
            }
        }
        ToppedSignVector::Vector(SignVector::new(out))
    }

    /// Composition: `(σ∘τ)(i) = σ(i)` unless `σ(i) = 0`, where `τ(i)` wins.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        SignVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| if a.is_zero() { *b } else { *a })
                .collect(),
        }
    }

    /// Separation set: 1-based coordinates where the two vectors carry
    /// opposite nonzero signs.
    pub fn separator(&self, other: &SignVector) -> Vec<usize> {
        assert_eq!(self.len(), other.len(), "sign vector length mismatch");
        self.entries
            .iter()
            .zip(&other.entries)
            .enumerate()
            .filter(|(_, (a, b))| !a.is_zero() && **b == a.negate())
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Restriction to the 1-based index set `indices`, which must be strictly
    /// increasing and within range. Entries are reindexed in that order.
    pub fn restrict(&self, indices: &[usize]) -> SignVector {
        let mut entries = Vec::with_capacity(indices.len());
        let mut prev = 0usize;
        for &i in indices {
            assert!(
                i >= 1 && i <= self.len(),
                "restriction index {i} out of range"
            );
            assert!(i > prev, "restriction indices must be strictly increasing");
            prev = i;
            entries.push(self.entries[i - 1]);
        }
        SignVector { entries }
    }

    pub fn encode(&self) -> String {
        self.entries.iter().map(|s| s.to_char()).collect()
    }

    /// Encoding bytes; lexicographic comparison of these realizes the
    /// canonical `'+' < '-' < '0'` order on sign vectors.
    pub fn encode_bytes(&self) -> Vec<u8> {
        self.entries.iter().map(|s| s.byte()).collect()
    }

    pub fn parse(s: &str) -> Result<SignVector, SignError> {
        let entries = s.chars().map(Sign::from_char).collect::<Result<_, _>>()?;
        Ok(SignVector { entries })
    }

    /// Packs into two bits per coordinate (`00` zero, `01` plus, `10` minus),
    /// coordinate `i` at bit pair `2(i-1)`. Requires `n <= 16`.
    pub fn pack(&self) -> u32 {
        assert!(self.len() <= 16, "packed form supports n <= 16");
        let mut out = 0u32;
        for (i, s) in self.entries.iter().enumerate() {
            out |= match s {
                Zero => 0,
                Plus => 0b01,
                Minus => 0b10,
            } << (2 * i);
        }
        out
    }

    pub fn unpack(packed: u32, n: usize) -> SignVector {
        let entries = (0..n)
            .map(|i| match (packed >> (2 * i)) & 0b11 {
                0b00 => Zero,
                0b01 => Plus,
                0b10 => Minus,
                _ => panic!("invalid packed sign vector"),
            })
            .collect();
        SignVector { entries }
    }
}

/// Bitwise operations on packed sign vectors. The pair value `11` never
/// occurs in a valid packing, which makes conflict detection a mask test.
pub mod packed {
    const LOW: u32 = 0x5555_5555;

    /// Componentwise join; `None` is the top element.
    pub fn join(a: u32, b: u32) -> Option<u32> {
        let j = a | b;
        if j & (j >> 1) & LOW != 0 {
            None
        } else {
            Some(j)
        }
    }

    /// `a ≤_v b` componentwise.
    pub fn leq(a: u32, b: u32) -> bool {
        a | b == b
    }

    pub fn negate(a: u32) -> u32 {
        ((a & LOW) << 1) | ((a >> 1) & LOW)
    }

    /// Composition: coordinates of `a` win where nonzero.
    pub fn compose(a: u32, b: u32) -> u32 {
        let nz = (a | (a >> 1)) & LOW;
        let mask = nz | (nz << 1);
        a | (b & !mask)
    }

    /// Number of nonzero coordinates.
    pub fn support_size(a: u32) -> u32 {
        a.count_ones()
    }

    /// Mask of nonzero coordinate pairs (both bits set per nonzero coord).
    pub fn support_mask(a: u32) -> u32 {
        let nz = (a | (a >> 1)) & LOW;
        nz | (nz << 1)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({})", self.encode())
    }
}

impl FromStr for SignVector {
    type Err = SignError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignVector::parse(s)
    }
}

/// A sign vector or the distinguished top element `⊤`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ToppedSignVector {
    Vector(SignVector),
    Top,
}

impl ToppedSignVector {
    pub fn is_top(&self) -> bool {
        matches!(self, ToppedSignVector::Top)
    }

    pub fn as_vector(&self) -> Option<&SignVector> {
        match self {
            ToppedSignVector::Vector(v) => Some(v),
            ToppedSignVector::Top => None,
        }
    }
}

/// Join in the lattice `{0,+,-}^n ∪ {⊤}`; `⊤` absorbs.
pub fn join_topped(a: &ToppedSignVector, b: &ToppedSignVector) -> ToppedSignVector {
    match (a, b) {
        (ToppedSignVector::Top, _) | (_, ToppedSignVector::Top) => ToppedSignVector::Top,
        (ToppedSignVector::Vector(x), ToppedSignVector::Vector(y)) => x.join(y),
    }
}
