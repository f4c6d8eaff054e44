//! Exact sparse arithmetic in the Laurent ring `Z[s_1^±1, ..., s_n^±1]`.
//!
//! Besides the ring operations the module answers the three questions the
//! fixed-point argument needs: evaluation at `s_i = 1`, exact division by
//! `1 - s_i`, and the order of vanishing at the point `(1, ..., 1)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("cannot parse polynomial at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// A unit monomial `s_1^{j_1} ... s_n^{j_n}`, stored as its exponent vector.
///
/// Ordering is lexicographic on the exponent vector; that ordering fixes the
/// term order of every serialized polynomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(SmallVec<[i32; 8]>);

impl Monomial {
    /// The monomial `1` in rank `n`.
    pub fn one(rank: usize) -> Self {
        Monomial(SmallVec::from_elem(0, rank))
    }

    pub fn from_exponents(exponents: &[i32]) -> Self {
        Monomial(SmallVec::from_slice(exponents))
    }

    /// `s_i` (1-based).
    pub fn generator(rank: usize, i: usize) -> Result<Self, RingError> {
        check_index(rank, i)?;
        let mut m = Self::one(rank);
        m.0[i - 1] = 1;
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial, RingError> {
        check_rank(self.rank(), other.rank())?;
        Ok(Monomial(
            self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|e| -e).collect())
    }

    /// Multiplies by `s_i^delta` in place.
    pub fn shift(&mut self, i: usize, delta: i32) {
        self.0[i - 1] += delta;
    }

    /// Order of vanishing of `1 - S` at `(1, ..., 1)`.
    ///
    /// `1 - prod (1 + u_i)^{j_i}` has linear part `-sum j_i u_i`, so the order is
    /// one unless every exponent is zero, in which case `1 - S` is zero.
    pub fn unit_order(&self) -> VanishingOrder {
        if self.is_one() {
            VanishingOrder::Infinite
        } else {
            VanishingOrder::Finite(1)
        }
    }

    fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

/// See [`Monomial::unit_order`].
pub fn unit_monomial_order(j: &Monomial) -> VanishingOrder {
    j.unit_order()
}

/// Vanishing order of a Laurent polynomial at `(1, ..., 1)`.
///
/// `Finite(k) < Infinite`, the latter being the order of the zero polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VanishingOrder {
    Finite(u32),
    Infinite,
}

impl Add for VanishingOrder {
    type Output = VanishingOrder;

    fn add(self, rhs: VanishingOrder) -> VanishingOrder {
        match (self, rhs) {
            (VanishingOrder::Finite(a), VanishingOrder::Finite(b)) => VanishingOrder::Finite(a + b),
            _ => VanishingOrder::Infinite,
        }
    }
}

impl fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingOrder::Finite(k) => write!(f, "{k}"),
            VanishingOrder::Infinite => f.write_str("infinity"),
        }
    }
}

/// A Laurent polynomial with integer coefficients in `rank` variables.
///
/// Stored sparsely with no zero coefficients, so structural equality is ring
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

fn check_rank(left: usize, right: usize) -> Result<(), RingError> {
    if left == right {
        Ok(())
    } else {
        Err(RingError::RankMismatch { left, right })
    }
}

fn check_index(rank: usize, index: usize) -> Result<(), RingError> {
    if (1..=rank).contains(&index) {
        Ok(())
    } else {
        Err(RingError::IndexOutOfRange { index, rank })
    }
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, 1)
    }

    pub fn constant(rank: usize, c: impl Into<BigInt>) -> Self {
        Self::from_monomial(Monomial::one(rank), c)
    }

    pub fn from_monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m.rank());
        p.add_term(m, c.into());
        p
    }

    /// The variable `s_i`.
    pub fn var(rank: usize, i: usize) -> Result<Self, RingError> {
        Ok(Self::from_monomial(Monomial::generator(rank, i)?, 1))
    }

    /// `1 - s_i`, the element every divisibility question is about.
    pub fn one_minus_var(rank: usize, i: usize) -> Result<Self, RingError> {
        let mut p = Self::one(rank);
        p.add_term(Monomial::generator(rank, i)?, BigInt::from(-1));
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging
    /// repeated monomials.
    pub fn from_terms<I, C>(rank: usize, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (Vec<i32>, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(rank);
        for (exps, c) in terms {
            check_rank(rank, exps.len())?;
            p.add_term(Monomial::from_exponents(&exps), c.into());
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of their exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Adds `c * m` in place, keeping the sparse form canonical.
    ///
    /// Panics if `m` has a different rank.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        assert_eq!(m.rank(), self.rank, "monomial rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, RingError> {
        check_rank(self.rank, other.rank)?;
        let mut out = LaurentPoly::zero(self.rank);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.try_mul(mb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self * m` for a unit monomial `m`.
    pub fn mul_monomial(&self, m: &Monomial) -> Result<LaurentPoly, RingError> {
        check_rank(self.rank, m.rank())?;
        let terms = self
            .terms
            .iter()
            .map(|(k, c)| (k.try_mul(m).expect("ranks checked"), c.clone()))
            .collect();
        Ok(LaurentPoly {
            rank: self.rank,
            terms,
        })
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.rank);
        }
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut out = LaurentPoly::one(self.rank);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Sets `s_i := 1`; the result stays in the same ring with exponent `i`
    /// zeroed everywhere.
    pub fn substitute_one(&self, i: usize) -> Result<LaurentPoly, RingError> {
        check_index(self.rank, i)?;
        let mut out = LaurentPoly::zero(self.rank);
        for (m, c) in &self.terms {
            let mut m = m.clone();
            m.0[i - 1] = 0;
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    /// Exact quotient by `1 - s_i`, or `None` when `1 - s_i` does not divide.
    ///
    /// Viewing the polynomial as a Laurent polynomial in `s_i` over the ring
    /// of the other variables, divisibility by `1 - s_i` is vanishing at
    /// `s_i = 1`. Synthetic division runs from the top power of `s_i` down
    /// to the lowest one; the remainder that lands on the lowest power is
    /// exactly `p(s_i = 1)` shifted by that power.
    pub fn divides_one_minus(&self, i: usize) -> Result<Option<LaurentPoly>, RingError> {
        check_index(self.rank, i)?;
        if self.is_zero() {
            return Ok(Some(LaurentPoly::zero(self.rank)));
        }
        // Coefficients c_k of s_i^k, each with exponent i zeroed.
        let mut by_power: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.exponent(i);
            let mut rest = m.clone();
            rest.0[i - 1] = 0;
            by_power
                .entry(k)
                .or_insert_with(|| LaurentPoly::zero(self.rank))
                .add_term(rest, c.clone());
        }
        let low = *by_power.keys().next().expect("nonzero polynomial");
        let high = *by_power.keys().next_back().expect("nonzero polynomial");

        // p = (s_i - 1) * q + r with q_{k-1} = c_k + q_k.
        let mut quotient = LaurentPoly::zero(self.rank);
        let mut carry = LaurentPoly::zero(self.rank);
        for k in (low + 1..=high).rev() {
            if let Some(c) = by_power.get(&k) {
                carry = &carry + c;
            }
            for (m, c) in &carry.terms {
                let mut m = m.clone();
                m.shift(i, k - 1);
                // Quotient by (1 - s_i) is minus the quotient by (s_i - 1).
                quotient.add_term(m, -c);
            }
        }
        if let Some(c) = by_power.get(&low) {
            carry = &carry + c;
        }
        if carry.is_zero() {
            Ok(Some(quotient))
        } else {
            Ok(None)
        }
    }

    /// Minimal total degree of `p(1 + u_1, ..., 1 + u_n)` after clearing
    /// negative exponents with a monomial unit.
    pub fn vanishing_order_at_ones(&self) -> VanishingOrder {
        if self.is_zero() {
            return VanishingOrder::Infinite;
        }
        let cleared = self.clear_denominators();
        let max_degree = cleared
            .iter()
            .map(|(a, _)| a.iter().map(|&e| e as u64).sum::<u64>())
            .max()
            .unwrap_or(0);
        for d in 0..=max_degree {
            if !shifted_component_is_zero(&cleared, d) {
                return VanishingOrder::Finite(d as u32);
            }
        }
        unreachable!("a nonzero polynomial has a nonzero Taylor component up to its degree")
    }

    /// Terms multiplied by the smallest monomial making every exponent
    /// nonnegative.
    fn clear_denominators(&self) -> Vec<(Vec<u32>, &BigInt)> {
        let mut lows = vec![0i32; self.rank];
        for m in self.terms.keys() {
            for (low, &e) in lows.iter_mut().zip(m.0.iter()) {
                *low = (*low).min(e);
            }
        }
        self.terms
            .iter()
            .map(|(m, c)| {
                let shifted = m.0.iter().zip(&lows).map(|(e, l)| (e - l) as u32).collect();
                (shifted, c)
            })
            .collect()
    }

    /// Maximum over terms of the total degree; `None` for zero.
    pub fn max_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Parses the text form produced by `Display`.
    pub fn parse(rank: usize, text: &str) -> Result<LaurentPoly, RingError> {
        PolyParser {
            rank,
            bytes: text.as_bytes(),
            pos: 0,
        }
        .parse()
    }
}

/// Is the degree-`d` homogeneous part of `sum c * prod (1 + u_i)^{a_i}` zero?
///
/// The coefficient of `u^beta` in `prod (1 + u_i)^{a_i}` is
/// `prod binom(a_i, beta_i)`.
fn shifted_component_is_zero(terms: &[(Vec<u32>, &BigInt)], d: u64) -> bool {
    let mut component: HashMap<Vec<u32>, BigInt> = HashMap::new();
    for (a, c) in terms {
        let mut beta = vec![0u32; a.len()];
        collect_betas(a, 0, d, &mut beta, &mut |beta| {
            let w = beta.iter().zip(a.iter()).fold(BigInt::one(), |acc, (&b, &e)| {
                acc * binomial(BigInt::from(e), BigInt::from(b))
            });
            *component.entry(beta.to_vec()).or_default() += &w * *c;
        });
    }
    component.values().all(Zero::is_zero)
}

fn collect_betas(a: &[u32], i: usize, left: u64, beta: &mut [u32], f: &mut impl FnMut(&[u32])) {
    if i == a.len() {
        if left == 0 {
            f(beta);
        }
        return;
    }
    let cap = (a[i] as u64).min(left);
    for b in 0..=cap {
        beta[i] = b as u32;
        collect_betas(a, i + 1, left - b, beta, f);
    }
    beta[i] = 0;
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial rank mismatch")
            }
        }

        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;

            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "s{}", i + 1)?;
            } else {
                write!(f, "s{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

struct PolyParser<'a> {
    rank: usize,
    bytes: &'a [u8],
    pos: usize,
}

impl PolyParser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, RingError> {
        Err(RingError::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&str> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.bytes[start..self.pos]).unwrap())
    }

    fn parse(mut self) -> Result<LaurentPoly, RingError> {
        let mut out = LaurentPoly::zero(self.rank);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') if !first => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(_) => return self.err("expected '+' or '-'"),
            };
            first = false;
            let (m, c) = self.term()?;
            out.add_term(m, c * sign);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, BigInt), RingError> {
        let mut coeff = BigInt::one();
        let mut m = Monomial::one(self.rank);
        if matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            let d = self.digits().expect("peeked a digit");
            coeff = d.parse().expect("ascii digits");
            if self.peek() != Some(b'*') {
                return Ok((m, coeff));
            }
            self.pos += 1;
        }
        loop {
            self.factor(&mut m)?;
            if self.peek() != Some(b'*') {
                return Ok((m, coeff));
            }
            self.pos += 1;
        }
    }

    fn factor(&mut self, m: &mut Monomial) -> Result<(), RingError> {
        if self.peek() != Some(b's') {
            return self.err("expected a variable sK");
        }
        self.pos += 1;
        let index: usize = match self.digits() {
            Some(d) => d.parse().map_err(|_| RingError::Parse {
                position: self.pos,
                message: "variable index too large".into(),
            })?,
            None => return self.err("expected variable index"),
        };
        if !(1..=self.rank).contains(&index) {
            return Err(RingError::IndexOutOfRange {
                index,
                rank: self.rank,
            });
        }
        let mut e = 1i32;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            e = match self.digits() {
                Some(d) => d.parse().map_err(|_| RingError::Parse {
                    position: self.pos,
                    message: "exponent too large".into(),
                })?,
                None => return self.err("expected exponent"),
            };
            if neg {
                e = -e;
            }
        }
        m.shift(index, e);
        Ok(())
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rank: usize, text: &str) -> LaurentPoly {
        LaurentPoly::parse(rank, text).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let a = p(2, "1 - s1");
        let b = p(2, "1 + s1");
        assert_eq!(&a * &b, p(2, "1 - s1^2"));
    }

    #[test]
    fn unit_inverse() {
        assert!((p(2, "s1^-1") * p(2, "s1")).is_one());
    }

    #[test]
    fn additive_inverse_is_empty() {
        let sum = p(2, "1 - s1") + p(2, "s1 - 1");
        assert!(sum.is_zero());
        assert_eq!(sum.terms().count(), 0);
    }

    #[test]
    fn rank_mismatch_is_reported() {
        let err = p(2, "s1").try_mul(&p(3, "s1")).unwrap_err();
        assert_eq!(err, RingError::RankMismatch { left: 2, right: 3 });
    }

    #[test]
    fn substitute_one_examples() {
        assert_eq!(p(2, "1 - s1*s2").substitute_one(1).unwrap(), p(2, "1 - s2"));
        assert!(p(3, "1 - s3").pow(2).substitute_one(3).unwrap().is_zero());
        assert_eq!(p(2, "5").substitute_one(2).unwrap(), p(2, "5"));
        assert!(p(2, "5").substitute_one(3).is_err());
        assert!(p(2, "5").substitute_one(0).is_err());
    }

    #[test]
    fn divides_one_minus_examples() {
        let prod = p(2, "1 - s1") * p(2, "2 - s2");
        assert_eq!(prod.divides_one_minus(1).unwrap(), Some(p(2, "2 - s2")));
        assert_eq!(p(2, "1 - s1*s2").divides_one_minus(1).unwrap(), None);
        let sq = p(3, "1 - s3").pow(2);
        assert_eq!(sq.divides_one_minus(3).unwrap(), Some(p(3, "1 - s3")));
    }

    #[test]
    fn divides_with_negative_exponents() {
        // s1^-2 - s1 = s1^-2 (1 - s1^3) = (1 - s1)(s1^-2 + s1^-1 + 1)
        let q = p(1, "s1^-2 - s1").divides_one_minus(1).unwrap().unwrap();
        assert_eq!(q, p(1, "s1^-2 + s1^-1 + 1"));
    }

    #[test]
    fn vanishing_orders() {
        assert_eq!(p(1, "1 - s1").vanishing_order_at_ones(), VanishingOrder::Finite(1));
        assert_eq!(
            p(3, "1 - s3").pow(2).vanishing_order_at_ones(),
            VanishingOrder::Finite(2)
        );
        assert_eq!(LaurentPoly::zero(3).vanishing_order_at_ones(), VanishingOrder::Infinite);
        assert_eq!(p(2, "7").vanishing_order_at_ones(), VanishingOrder::Finite(0));
        // 1 - s1^2 s2^-1 at s = 1 + u: 1 - (1+u1)^2 (1+u2)^-1 has linear part -2u1 + u2.
        assert_eq!(
            p(2, "1 - s1^2*s2^-1").vanishing_order_at_ones(),
            VanishingOrder::Finite(1)
        );
    }

    #[test]
    fn unit_monomial_orders() {
        let j = |e: &[i32]| Monomial::from_exponents(e);
        assert_eq!(unit_monomial_order(&j(&[0, 0, 0])), VanishingOrder::Infinite);
        assert_eq!(unit_monomial_order(&j(&[1, 0, 0])), VanishingOrder::Finite(1));
        let s = j(&[2, -1, 3]);
        let one_minus_s = LaurentPoly::one(3) - LaurentPoly::from_monomial(s.clone(), 1);
        assert_eq!(unit_monomial_order(&s), one_minus_s.vanishing_order_at_ones());
        assert_eq!(unit_monomial_order(&s), VanishingOrder::Finite(1));
    }

    #[test]
    fn display_uses_lex_term_order() {
        assert_eq!(p(2, "- s1*s2^-1 + 1").to_string(), "1 - s1*s2^-1");
        assert_eq!(p(3, "s1 - 1").to_string(), "-1 + s1");
        assert_eq!(p(3, "3*s1^2*s3^-4 - 2").to_string(), "-2 + 3*s1^2*s3^-4");
        assert_eq!(LaurentPoly::zero(2).to_string(), "0");
        assert_eq!(p(2, "-s2").to_string(), "-s2");
    }

    #[test]
    fn parse_errors_carry_position() {
        match LaurentPoly::parse(2, "1 + x1") {
            Err(RingError::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            LaurentPoly::parse(2, "s3"),
            Err(RingError::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(LaurentPoly::parse(2, "").is_err());
    }

    #[test]
    fn order_addition() {
        use VanishingOrder::*;
        assert_eq!(Finite(1) + Finite(2), Finite(3));
        assert_eq!(Finite(1) + Infinite, Infinite);
        assert!(Finite(7) < Infinite);
    }
}
