//! The free metabelian Lie algebra `ML_n` and the derivation
//! `D_n(x_i) = [x_i, x_n]` (`i < n`), `D_n(x_n) = [x_1, x_2]`.
//!
//! Elements are integer combinations of left-normed monomials
//! `[x_{i_1}, x_{i_2}, ..., x_{i_d}]` in normal form: a single generator, or
//! `i_1 > i_2 <= i_3 <= ... <= i_d`.
//!
//! Two facts drive the normal form. In a metabelian algebra the derived
//! part is abelian, so for `u` of degree at least two
//! `[u, x_a, x_b] = [u, x_b, x_a]`: positions three onward commute. And when
//! the smallest tail index `c` is below `i_2 = b`, Jacobi gives
//! `[x_a, x_b, x_c, ...] = [x_a, x_c, x_b, ...] - [x_b, x_c, x_a, ...]`, both
//! of which are already normal.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("rank {n} is below the minimum {min}")]
    RankTooSmall { n: usize, min: usize },
    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("degree must be at least 1")]
    ZeroDegree,
}

/// A left-normed monomial in normal form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieMonomial(Vec<usize>);

impl LieMonomial {
    pub fn generator(i: usize) -> Self {
        LieMonomial(vec![i])
    }

    /// Accepts only sequences already in normal form.
    pub fn new(indices: Vec<usize>) -> Option<Self> {
        is_normal(&indices).then_some(LieMonomial(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

fn is_normal(s: &[usize]) -> bool {
    match s.len() {
        0 => false,
        1 => s[0] >= 1,
        _ => s[1] >= 1 && s[0] > s[1] && s[1..].windows(2).all(|w| w[0] <= w[1]),
    }
}

impl fmt::Display for LieMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "x{}", self.0[0]);
        }
        f.write_str("[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{i}")?;
        }
        f.write_str("]")
    }
}

/// An integer combination of normal-form monomials, possibly of mixed degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<LieMonomial, BigInt>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(i: usize) -> Self {
        Self::from_monomial(LieMonomial::generator(i), 1)
    }

    pub fn from_monomial(m: LieMonomial, c: impl Into<BigInt>) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c.into());
        e
    }

    /// The left-normed bracket `[x_{s_1}, ..., x_{s_d}]` of an arbitrary
    /// index sequence, reduced to normal form.
    pub fn left_normed(indices: &[usize]) -> Self {
        let mut out = Self::zero();
        normalize_into(indices.to_vec(), BigInt::one(), &mut out);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LieMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &LieMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: LieMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m.clone()).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> LieElement {
        let mut out = Self::zero();
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k * c);
        }
        out
    }

    /// Is every monomial of degree `d`?
    pub fn is_homogeneous_of(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn max_index(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().copied())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if k > 0 {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            if c.abs().is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", c.abs())?;
            }
        }
        Ok(())
    }
}

/// Adds `coeff * [x_{s_1}, ..., x_{s_d}]` in normal form to `out`.
fn normalize_into(mut s: Vec<usize>, coeff: BigInt, out: &mut LieElement) {
    if s.len() == 1 {
        out.add_term(LieMonomial(s), coeff);
        return;
    }
    let (a, b) = (s[0], s[1]);
    if a == b {
        return;
    }
    if a < b {
        s.swap(0, 1);
        return normalize_into(s, -coeff, out);
    }
    s[2..].sort_unstable();
    if s.len() == 2 || b <= s[2] {
        out.add_term(LieMonomial(s), coeff);
        return;
    }
    // c = s[2] < b < a: one Jacobi step lands on two normal monomials.
    let c = s[2];
    let rest = &s[3..];
    let mut first = vec![a, c, b];
    first.extend_from_slice(rest);
    first[2..].sort_unstable();
    let mut second = vec![b, c, a];
    second.extend_from_slice(rest);
    second[2..].sort_unstable();
    out.add_term(LieMonomial(first), coeff.clone());
    out.add_term(LieMonomial(second), -coeff);
}

/// The metabelian bracket, extended bilinearly from monomials.
pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (u, cu) in &a.terms {
        for (v, cv) in &b.terms {
            let c = cu * cv;
            match (u.degree(), v.degree()) {
                (du, dv) if du >= 2 && dv >= 2 => {}
                (_, 1) => {
                    let mut s = u.0.clone();
                    s.push(v.0[0]);
                    normalize_into(s, c, &mut out);
                }
                _ => {
                    // [x_i, v] = -[v, x_i]
                    let mut s = v.0.clone();
                    s.push(u.0[0]);
                    normalize_into(s, -c, &mut out);
                }
            }
        }
    }
    out
}

/// `D_n` on a generator.
fn derivation_on_generator(n: usize, i: usize) -> LieElement {
    if i < n {
        LieElement::left_normed(&[i, n])
    } else {
        LieElement::left_normed(&[1, 2])
    }
}

/// Applies the derivation `D_n`, extended by the Leibniz rule.
pub fn derivation_dn(n: usize, a: &LieElement) -> Result<LieElement, LieError> {
    if n < 3 {
        return Err(LieError::RankTooSmall { n, min: 3 });
    }
    let max = a.max_index();
    if max > n {
        return Err(LieError::IndexOutOfRange { index: max, rank: n });
    }
    let mut out = LieElement::zero();
    for (m, c) in &a.terms {
        out = out.add(&derive_monomial(n, m.indices()).scale(c));
    }
    Ok(out)
}

/// `D[u, x_j] = [D u, x_j] + [u, D x_j]` on the left-normed prefix `u`.
fn derive_monomial(n: usize, s: &[usize]) -> LieElement {
    let last = s[s.len() - 1];
    if s.len() == 1 {
        return derivation_on_generator(n, last);
    }
    let prefix = &s[..s.len() - 1];
    let u = LieElement::left_normed(prefix);
    let x = LieElement::generator(last);
    bracket(&derive_monomial(n, prefix), &x).add(&bracket(&u, &derivation_on_generator(n, last)))
}

/// Normal-form monomials of degree `d` in lexicographic order.
pub fn graded_basis(n: usize, d: usize) -> Result<Vec<LieMonomial>, LieError> {
    if d == 0 {
        return Err(LieError::ZeroDegree);
    }
    if d == 1 {
        return Ok((1..=n).map(LieMonomial::generator).collect());
    }
    let mut out = Vec::new();
    let mut tail = Vec::with_capacity(d);
    for a in 1..=n {
        for b in 1..a {
            tail.clear();
            tail.extend([a, b]);
            push_tails(n, d, b, &mut tail, &mut out);
        }
    }
    out.sort();
    Ok(out)
}

fn push_tails(n: usize, d: usize, low: usize, s: &mut Vec<usize>, out: &mut Vec<LieMonomial>) {
    if s.len() == d {
        out.push(LieMonomial(s.clone()));
        return;
    }
    for c in low..=n {
        s.push(c);
        push_tails(n, d, c, s, out);
        s.pop();
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelReport {
    pub n: usize,
    pub max_degree: usize,
    pub degrees: Vec<DegreeRank>,
    pub trivial_kernel: bool,
}

/// The matrix of `D_n` from degree `d` to degree `d + 1`: one column per
/// source basis monomial, rows indexed by the target basis.
pub fn derivation_matrix(n: usize, d: usize) -> Result<Vec<Vec<BigInt>>, LieError> {
    let source = graded_basis(n, d)?;
    let target = graded_basis(n, d + 1)?;
    let row_of: BTreeMap<&LieMonomial, usize> =
        target.iter().enumerate().map(|(r, m)| (m, r)).collect();
    let mut matrix = vec![vec![BigInt::zero(); source.len()]; target.len()];
    for (col, m) in source.iter().enumerate() {
        let image = derivation_dn(n, &LieElement::from_monomial(m.clone(), 1))?;
        for (t, c) in image.terms() {
            let row = *row_of
                .get(t)
                .expect("derivation raises degree by exactly one");
            matrix[row][col] = c.clone();
        }
    }
    Ok(matrix)
}

/// Checks injectivity of `D_n` on each graded piece of degree `1..=max_degree`
/// by computing the rank of its integer matrix over the rationals.
pub fn kernel_trivial_up_to(n: usize, max_degree: usize) -> Result<KernelReport, LieError> {
    if n < 3 {
        return Err(LieError::RankTooSmall { n, min: 3 });
    }
    if max_degree == 0 {
        return Err(LieError::ZeroDegree);
    }
    let degrees = (1..=max_degree)
        .map(|d| {
            let matrix = derivation_matrix(n, d)?;
            let source_dim = graded_basis(n, d)?.len();
            let target_dim = matrix.len();
            let rank = rational_rank(matrix);
            Ok(DegreeRank {
                degree: d,
                source_dim,
                target_dim,
                rank,
                injective: rank == source_dim,
            })
        })
        .collect::<Result<Vec<_>, LieError>>()?;
    let trivial_kernel = degrees.iter().all(|r| r.injective);
    Ok(KernelReport {
        n,
        max_degree,
        degrees,
        trivial_kernel,
    })
}

/// Rank over Q by fraction-free (Bareiss) elimination.
pub fn rational_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &[usize]) -> LieElement {
        LieElement::from_monomial(LieMonomial::new(s.to_vec()).unwrap(), 1)
    }

    fn x(i: usize) -> LieElement {
        LieElement::generator(i)
    }

    #[test]
    fn antisymmetry_to_normal_form() {
        assert_eq!(bracket(&x(1), &x(2)), mono(&[2, 1]).scale(&BigInt::from(-1)));
        assert!(bracket(&x(2), &x(2)).is_zero());
    }

    #[test]
    fn metabelian_identity() {
        assert!(bracket(&mono(&[2, 1]), &mono(&[3, 1])).is_zero());
    }

    #[test]
    fn already_normal_append() {
        assert_eq!(bracket(&mono(&[3, 1]), &x(2)), mono(&[3, 1, 2]));
    }

    #[test]
    fn jacobi_on_generators() {
        let t1 = bracket(&bracket(&x(2), &x(1)), &x(3));
        let t2 = bracket(&bracket(&x(1), &x(3)), &x(2));
        let t3 = bracket(&bracket(&x(3), &x(2)), &x(1));
        assert!(t1.add(&t2).add(&t3).is_zero());
    }

    #[test]
    fn jacobi_rewrite_step() {
        // [x3, x2, x1] = [x3, x1, x2] - [x2, x1, x3]
        let got = LieElement::left_normed(&[3, 2, 1]);
        assert_eq!(got, mono(&[3, 1, 2]).sub(&mono(&[2, 1, 3])));
    }

    #[test]
    fn derivation_on_generators() {
        let minus = BigInt::from(-1);
        assert_eq!(derivation_dn(3, &x(1)).unwrap(), mono(&[3, 1]).scale(&minus));
        assert_eq!(derivation_dn(3, &x(3)).unwrap(), mono(&[2, 1]).scale(&minus));
        assert!(matches!(
            derivation_dn(2, &x(1)),
            Err(LieError::RankTooSmall { n: 2, min: 3 })
        ));
        assert!(derivation_dn(3, &x(4)).is_err());
    }

    #[test]
    fn derivation_of_degree_two_by_leibniz() {
        // D[x2, x1] = [D x2, x1] + [x2, D x1] = [[x2,x3],x1] + [x2,[x1,x3]]
        //           = -[x3,x2,x1] + [x3,x1,x2] = [x2,x1,x3]
        let got = derivation_dn(3, &mono(&[2, 1])).unwrap();
        assert_eq!(got, mono(&[2, 1, 3]));
    }

    #[test]
    fn basis_sizes() {
        let b1 = graded_basis(3, 1).unwrap();
        assert_eq!(b1.len(), 3);
        let b2: Vec<Vec<usize>> = graded_basis(3, 2)
            .unwrap()
            .into_iter()
            .map(|m| m.indices().to_vec())
            .collect();
        assert_eq!(b2, vec![vec![2, 1], vec![3, 1], vec![3, 2]]);
        assert_eq!(graded_basis(3, 3).unwrap().len(), 8);
        assert!(graded_basis(3, 0).is_err());
    }

    #[test]
    fn basis_size_matches_dimension_formula() {
        // dim of the degree-d piece is (d - 1) * C(n + d - 2, d) for d >= 2.
        for n in 2..=5usize {
            for d in 2..=6usize {
                let want = (d - 1) as u64 * num_integer::binomial((n + d - 2) as u64, d as u64);
                assert_eq!(graded_basis(n, d).unwrap().len() as u64, want, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn degree_one_matrix_is_signed_permutation() {
        let m = derivation_matrix(3, 1).unwrap();
        for row in &m {
            let nonzero: Vec<_> = row.iter().filter(|c| !c.is_zero()).collect();
            assert_eq!(nonzero.len(), 1);
            assert!(nonzero[0].abs().is_one());
        }
        assert_eq!(rational_rank(m), 3);
    }

    #[test]
    fn rank_examples() {
        let b = |rows: &[&[i64]]| {
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect::<Vec<Vec<BigInt>>>()
        };
        assert_eq!(rational_rank(b(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rational_rank(b(&[&[0, 2], &[3, 4], &[1, 1]])), 2);
        assert_eq!(rational_rank(b(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rational_rank(Vec::new()), 0);
    }

    #[test]
    fn kernel_small_ranks() {
        let r = kernel_trivial_up_to(3, 3).unwrap();
        assert!(r.trivial_kernel);
        assert_eq!(r.degrees[0].rank, 3);
        assert!(kernel_trivial_up_to(2, 3).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(mono(&[3, 1, 2]).sub(&x(1)).to_string(), "-x1 + [x3,x1,x2]");
    }
}
