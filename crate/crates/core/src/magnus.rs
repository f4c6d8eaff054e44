//! Group words over `g_1..g_n` and the Magnus representation
//!
//! ```text
//! phi(g_i) = | s_i  t_i |
//!            |  0    1  |
//! ```
//!
//! An element of the free metabelian group is represented canonically by its
//! Magnus matrix `(S, sum gamma_i t_i; 0, 1)`, stored as the unit monomial `S`
//! and the coefficient vector `gamma`. Since the representation is faithful,
//! comparing these decides equality in `M_n`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::laurent::{LaurentPoly, Monomial, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("generator g{index} at byte {position} is out of range 1..={rank}")]
    IndexOutOfRange {
        index: i64,
        rank: usize,
        position: usize,
    },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
}

/// A freely reduced word in `g_1^±1, ..., g_n^±1`.
///
/// Letters are signed generator indices: `+i` is `g_i`, `-i` is `g_i^-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupWord {
    rank: usize,
    letters: Vec<i32>,
}

impl GroupWord {
    pub fn empty(rank: usize) -> Self {
        GroupWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// `g_i` or, for negative `i`, `g_|i|^-1`.
    pub fn letter(rank: usize, letter: i32) -> Result<Self, WordError> {
        Self::from_letters(rank, [letter])
    }

    /// Builds a word from signed letters and freely reduces it.
    pub fn from_letters(
        rank: usize,
        letters: impl IntoIterator<Item = i32>,
    ) -> Result<Self, WordError> {
        let mut w = Self::empty(rank);
        for (position, l) in letters.into_iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(WordError::IndexOutOfRange {
                    index: l as i64,
                    rank,
                    position,
                });
            }
            w.push(l);
        }
        Ok(w)
    }

    /// Parses the word grammar: `gK`, `gK^e` and nestable commutators
    /// `[u, v]` (optionally raised to `^e`), with free reduction applied.
    pub fn parse(rank: usize, text: &str) -> Result<Self, WordError> {
        WordParser {
            rank,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter with free cancellation.
    pub(crate) fn push(&mut self, l: i32) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub(crate) fn pop(&mut self) -> Option<i32> {
        self.letters.pop()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn try_mul(&self, other: &GroupWord) -> Result<GroupWord, WordError> {
        if self.rank != other.rank {
            return Err(WordError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    /// `[a, b] = a b a^-1 b^-1`.
    pub fn commutator(a: &GroupWord, b: &GroupWord) -> Result<GroupWord, WordError> {
        a.try_mul(b)?.try_mul(&a.inverse())?.try_mul(&b.inverse())
    }

    pub fn pow(&self, e: i64) -> GroupWord {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = GroupWord::empty(self.rank);
        for _ in 0..e.unsigned_abs() {
            for &l in &base.letters {
                out.push(l);
            }
        }
        out
    }

    /// Length-lexicographic comparison with letter order `g1 < g1^-1 < g2 < ...`.
    pub fn shortlex_cmp(&self, other: &GroupWord) -> std::cmp::Ordering {
        self.letters.len().cmp(&other.letters.len()).then_with(|| {
            let key = |l: &i32| (l.unsigned_abs(), *l < 0);
            self.letters.iter().map(key).cmp(other.letters.iter().map(key))
        })
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "g{l}")?;
            } else {
                write!(f, "g{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Parses `text` as a word of rank `rank`.
pub fn parse_word(rank: usize, text: &str) -> Result<GroupWord, WordError> {
    GroupWord::parse(rank, text)
}

struct WordParser<'a> {
    rank: usize,
    bytes: &'a [u8],
    pos: usize,
}

impl WordParser<'_> {
    fn syntax<T>(&self, message: impl Into<String>) -> Result<T, WordError> {
        Err(WordError::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<GroupWord, WordError> {
        let w = self.word()?;
        match self.peek() {
            None => Ok(w),
            Some(c) => self.syntax(format!("unexpected '{}'", c as char)),
        }
    }

    fn word(&mut self) -> Result<GroupWord, WordError> {
        let mut w = GroupWord::empty(self.rank);
        while let Some(c) = self.peek() {
            let item = match c {
                b'g' => self.generator()?,
                b'[' => self.commutator()?,
                _ => break,
            };
            let item = self.exponent(item)?;
            for &l in &item.letters {
                w.push(l);
            }
        }
        Ok(w)
    }

    fn number(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
    }

    fn generator(&mut self) -> Result<GroupWord, WordError> {
        let start = self.pos;
        self.pos += 1;
        let Some(index) = self.number() else {
            return self.syntax("expected generator index after 'g'");
        };
        if index < 1 || index as usize > self.rank {
            return Err(WordError::IndexOutOfRange {
                index,
                rank: self.rank,
                position: start,
            });
        }
        Ok(GroupWord {
            rank: self.rank,
            letters: vec![index as i32],
        })
    }

    fn commutator(&mut self) -> Result<GroupWord, WordError> {
        self.pos += 1;
        let a = self.word()?;
        if self.peek() != Some(b',') {
            return self.syntax("expected ',' in commutator");
        }
        self.pos += 1;
        let b = self.word()?;
        if self.peek() != Some(b']') {
            return self.syntax("expected ']' closing commutator");
        }
        self.pos += 1;
        GroupWord::commutator(&a, &b)
    }

    fn exponent(&mut self, base: GroupWord) -> Result<GroupWord, WordError> {
        // No whitespace is allowed between an item and its exponent.
        if self.bytes.get(self.pos) != Some(&b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = self.bytes.get(self.pos) == Some(&b'-');
        if negative {
            self.pos += 1;
        }
        let Some(e) = self.number() else {
            return self.syntax("expected integer exponent after '^'");
        };
        Ok(base.pow(if negative { -e } else { e }))
    }
}

/// The Magnus matrix `(S, sum gamma_i t_i; 0, 1)` of an element of `M_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MagnusElement {
    s: Monomial,
    gammas: Vec<LaurentPoly>,
}

impl MagnusElement {
    pub fn identity(rank: usize) -> Self {
        MagnusElement {
            s: Monomial::one(rank),
            gammas: vec![LaurentPoly::zero(rank); rank],
        }
    }

    /// Assembles an element from raw parts without checking the image
    /// condition (see [`in_image`]).
    pub fn from_parts(s: Monomial, gammas: Vec<LaurentPoly>) -> Result<Self, RingError> {
        let rank = s.rank();
        if gammas.len() != rank {
            return Err(RingError::RankMismatch {
                left: rank,
                right: gammas.len(),
            });
        }
        if let Some(g) = gammas.iter().find(|g| g.rank() != rank) {
            return Err(RingError::RankMismatch {
                left: rank,
                right: g.rank(),
            });
        }
        Ok(MagnusElement { s, gammas })
    }

    pub fn rank(&self) -> usize {
        self.s.rank()
    }

    /// The diagonal unit `S`.
    pub fn s(&self) -> &Monomial {
        &self.s
    }

    /// `gamma_i`, the coefficient of `t_i`, at index `i - 1`.
    pub fn gammas(&self) -> &[LaurentPoly] {
        &self.gammas
    }

    pub fn is_identity(&self) -> bool {
        self.s.is_one() && self.gammas.iter().all(LaurentPoly::is_zero)
    }

    /// Right-multiplies by the generator matrix of one signed letter.
    pub(crate) fn push_letter(&mut self, l: i32) {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            self.gammas[i - 1].add_term(self.s.clone(), BigInt::one());
            self.s.shift(i, 1);
        } else {
            self.s.shift(i, -1);
            self.gammas[i - 1].add_term(self.s.clone(), -BigInt::one());
        }
    }

    /// Inverse of [`push_letter`](Self::push_letter) for the same letter.
    pub(crate) fn pop_letter(&mut self, l: i32) {
        let i = l.unsigned_abs() as usize;
        if l > 0 {
            self.s.shift(i, -1);
            self.gammas[i - 1].add_term(self.s.clone(), -BigInt::one());
        } else {
            self.gammas[i - 1].add_term(self.s.clone(), BigInt::one());
            self.s.shift(i, 1);
        }
    }

    /// Matrix product: `S = S_a S_b`, `gamma_i = S_a gamma_{b,i} + gamma_{a,i}`.
    pub fn try_mul(&self, other: &MagnusElement) -> Result<MagnusElement, RingError> {
        let s = self.s.try_mul(&other.s)?;
        let gammas = self
            .gammas
            .iter()
            .zip(&other.gammas)
            .map(|(ga, gb)| gb.mul_monomial(&self.s)?.try_add(ga))
            .collect::<Result<_, RingError>>()?;
        Ok(MagnusElement { s, gammas })
    }

    /// `S' = S^-1`, `gamma'_i = -S' gamma_i`.
    pub fn inverse(&self) -> MagnusElement {
        let s = self.s.inverse();
        let gammas = self
            .gammas
            .iter()
            .map(|g| -g.mul_monomial(&s).expect("same rank"))
            .collect();
        MagnusElement { s, gammas }
    }

    /// Does this matrix satisfy `sum gamma_i (1 - s_i) = 1 - S`?
    pub fn satisfies_image_condition(&self) -> bool {
        in_image(&self.s, &self.gammas)
    }

    /// A compact byte encoding that is injective on canonical elements.
    /// Used as a deduplication key.
    pub fn canonical_key(&self) -> Vec<u8> {
        fn push_int(out: &mut Vec<u8>, v: i64) {
            // zigzag varint
            let mut z = ((v << 1) ^ (v >> 63)) as u64;
            loop {
                let byte = (z & 0x7f) as u8;
                z >>= 7;
                if z == 0 {
                    out.push(byte);
                    break;
                }
                out.push(byte | 0x80);
            }
        }
        let mut out = Vec::with_capacity(16 + 8 * self.rank());
        for &e in self.s.exponents() {
            push_int(&mut out, e as i64);
        }
        for g in &self.gammas {
            push_int(&mut out, g.len() as i64);
            for (m, c) in g.terms() {
                for &e in m.exponents() {
                    push_int(&mut out, e as i64);
                }
                let bytes = c.to_signed_bytes_le();
                push_int(&mut out, bytes.len() as i64);
                out.extend_from_slice(&bytes);
            }
        }
        out
    }
}

/// The Magnus image of a word: the product of its letters' matrices.
pub fn phi(w: &GroupWord) -> MagnusElement {
    let mut m = MagnusElement::identity(w.rank());
    for &l in w.letters() {
        m.push_letter(l);
    }
    m
}

/// Membership test for the image of `phi`: `sum gamma_i (1 - s_i) = 1 - S`.
pub fn in_image(s: &Monomial, gammas: &[LaurentPoly]) -> bool {
    let rank = s.rank();
    if gammas.len() != rank || gammas.iter().any(|g| g.rank() != rank) {
        return false;
    }
    let mut lhs = LaurentPoly::zero(rank);
    for (i, g) in gammas.iter().enumerate() {
        let one_minus = LaurentPoly::one_minus_var(rank, i + 1).expect("index in range");
        lhs = &lhs + &(g * &one_minus);
    }
    let rhs = LaurentPoly::one(rank) - LaurentPoly::from_monomial(s.clone(), 1);
    lhs == rhs
}

/// Exponent-sum vector of a word.
pub fn abelianization(w: &GroupWord) -> Vec<i64> {
    let mut v = vec![0i64; w.rank()];
    for &l in w.letters() {
        v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
    }
    v
}

/// Equality in the free metabelian group, decided through `phi`.
pub fn words_equal_in_m(u: &GroupWord, v: &GroupWord) -> bool {
    u.rank() == v.rank() && phi(u) == phi(v)
}

#[derive(Serialize, Deserialize)]
struct MagnusJson {
    #[serde(rename = "S")]
    s: Vec<i32>,
    gamma: Vec<String>,
}

impl Serialize for MagnusElement {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> Result<Z::Ok, Z::Error> {
        MagnusJson {
            s: self.s.exponents().to_vec(),
            gamma: self.gammas.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MagnusElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = MagnusJson::deserialize(deserializer)?;
        let rank = raw.s.len();
        let gammas = raw
            .gamma
            .iter()
            .map(|t| LaurentPoly::parse(rank, t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        MagnusElement::from_parts(Monomial::from_exponents(&raw.s), gammas)
            .map_err(D::Error::custom)
    }
}

impl fmt::Display for MagnusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | ", self.s)?;
        for (i, g) in self.gammas.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}
