//! IA-endomorphisms of the free metabelian group and their matrices over the
//! Laurent ring.
//!
//! An IA-endomorphism `e` is given by the images of the generators. Because
//! `phi(e(g_i))` has diagonal entry `s_i`, its upper-right entry is a linear
//! form `sum_j a_{i,j} t_j`; the matrix `(a_{i,j})` describes a ring
//! endomorphism `bar e` fixing every `s_i` with `phi(e(w)) = bar e(phi(w))`.

mod certificate;

pub use certificate::{
    certify_endomorphism, certify_no_fixed_points, Certificate, CertificateStep, LinearForm,
    StepName,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{LaurentPoly, RingError};
use crate::magnus::{abelianization, phi, GroupWord, MagnusElement, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("image of g{generator} has abelianization {abelianization:?}, not the basis vector")]
    NotIa {
        generator: usize,
        abelianization: Vec<i64>,
    },
    #[error("rank {n} is below the minimum {min}")]
    RankTooSmall { n: usize, min: usize },
    #[error("composite matrix does not match the product of the factor matrices")]
    CompositionMismatch,
    #[error("invalid image word: {0}")]
    Word(#[from] WordError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("invalid endomorphism file: {0}")]
    Json(String),
}

/// An IA-endomorphism with its generator images and the matrix
/// `bar_matrix[i][j] = a_{i+1,j+1}`, the coefficient of `t_{j+1}` in
/// `bar e(t_{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IAEndomorphism {
    rank: usize,
    images: Vec<GroupWord>,
    bar_matrix: Vec<Vec<LaurentPoly>>,
}

/// JSON file form `{ "n": 3, "images": ["...", ...] }`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EndoFile {
    pub n: usize,
    pub images: Vec<String>,
}

impl IAEndomorphism {
    /// Builds the endomorphism `g_i -> images[i-1]`; the matrix rows are read
    /// off `phi` of the images.
    pub fn from_images(images: Vec<GroupWord>) -> Result<Self, EndoError> {
        let rank = images.first().map_or(0, GroupWord::rank);
        Self::from_images_with_rank(rank, images)
    }

    fn from_images_with_rank(rank: usize, images: Vec<GroupWord>) -> Result<Self, EndoError> {
        if images.len() != rank {
            return Err(EndoError::ImageCount {
                expected: rank,
                got: images.len(),
            });
        }
        let mut bar_matrix = Vec::with_capacity(rank);
        for (i, w) in images.iter().enumerate() {
            if w.rank() != rank {
                return Err(EndoError::RankMismatch {
                    left: rank,
                    right: w.rank(),
                });
            }
            let ab = abelianization(w);
            if ab.iter().enumerate().any(|(j, &e)| e != (i == j) as i64) {
                return Err(EndoError::NotIa {
                    generator: i + 1,
                    abelianization: ab,
                });
            }
            bar_matrix.push(phi(w).gammas().to_vec());
        }
        Ok(IAEndomorphism {
            rank,
            images,
            bar_matrix,
        })
    }

    /// Parses one image per generator in the word grammar.
    pub fn from_word_texts<S: AsRef<str>>(rank: usize, texts: &[S]) -> Result<Self, EndoError> {
        let images = texts
            .iter()
            .map(|t| GroupWord::parse(rank, t.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_images_with_rank(rank, images)
    }

    pub fn from_file(file: &EndoFile) -> Result<Self, EndoError> {
        Self::from_word_texts(file.n, &file.images)
    }

    pub fn from_json(text: &str) -> Result<Self, EndoError> {
        let file: EndoFile =
            serde_json::from_str(text).map_err(|e| EndoError::Json(e.to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> EndoFile {
        EndoFile {
            n: self.rank,
            images: self.images.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank as i32)
            .map(|i| GroupWord::letter(rank, i).expect("index in range"))
            .collect();
        Self::from_images_with_rank(rank, images).expect("identity is IA")
    }

    /// Conjugation `g -> w g w^-1`.
    pub fn inner(w: &GroupWord) -> Self {
        let rank = w.rank();
        let inv = w.inverse();
        let images = (1..=rank as i32)
            .map(|i| {
                let g = GroupWord::letter(rank, i).expect("index in range");
                w.try_mul(&g)
                    .and_then(|x| x.try_mul(&inv))
                    .expect("same rank")
            })
            .collect();
        Self::from_images_with_rank(rank, images).expect("inner automorphisms are IA")
    }

    /// Conjugation by `g_n`.
    pub fn beta1(n: usize) -> Result<Self, EndoError> {
        require_rank(n, 3)?;
        Ok(Self::inner(&GroupWord::letter(n, n as i32)?))
    }

    /// `g_n -> [g_1, g_2] g_n`, other generators fixed.
    pub fn beta2(n: usize) -> Result<Self, EndoError> {
        require_rank(n, 3)?;
        let mut texts: Vec<String> = (1..n).map(|i| format!("g{i}")).collect();
        texts.push(format!("[g1,g2] g{n}"));
        Self::from_word_texts(n, &texts)
    }

    /// The fixed-point-free automorphism
    /// `g_i -> [[g_1,g_2] g_n, g_i] g_i` for `i < n`, `g_n -> [g_1,g_2] g_n`.
    pub fn alpha_n(n: usize) -> Result<Self, EndoError> {
        require_rank(n, 3)?;
        let mut texts: Vec<String> = (1..n).map(|i| format!("[[g1,g2]g{n},g{i}]g{i}")).collect();
        texts.push(format!("[g1,g2]g{n}"));
        Self::from_word_texts(n, &texts)
    }

    /// Inverse of [`alpha_n`](Self::alpha_n): conjugation by `g_n^-1` after
    /// `g_n -> [g_1,g_2]^-1 g_n`.
    pub fn alpha_n_inverse(n: usize) -> Result<Self, EndoError> {
        require_rank(n, 3)?;
        let beta1_inv = Self::inner(&GroupWord::letter(n, -(n as i32))?);
        let mut texts: Vec<String> = (1..n).map(|i| format!("g{i}")).collect();
        texts.push(format!("[g1,g2]^-1 g{n}"));
        let beta2_inv = Self::from_word_texts(n, &texts)?;
        beta1_inv.compose(&beta2_inv)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn bar_matrix(&self) -> &[Vec<LaurentPoly>] {
        &self.bar_matrix
    }

    /// Substitutes the images into `w` and freely reduces.
    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord, EndoError> {
        self.check_rank(w.rank())?;
        let mut out = GroupWord::empty(self.rank);
        for &l in w.letters() {
            let image = &self.images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &x in image.letters() {
                    out.push(x);
                }
            } else {
                for &x in image.letters().iter().rev() {
                    out.push(-x);
                }
            }
        }
        Ok(out)
    }

    /// The action on Magnus matrices: `S` is kept and
    /// `gamma'_j = sum_i gamma_i a_{i,j}`.
    pub fn apply_bar(&self, m: &MagnusElement) -> Result<MagnusElement, EndoError> {
        self.check_rank(m.rank())?;
        let gammas = (0..self.rank).map(|j| self.bar_column(m.gammas(), j)).collect();
        Ok(MagnusElement::from_parts(m.s().clone(), gammas)?)
    }

    /// `sum_i gammas[i] * a_{i,j}` for one column `j` (0-based).
    pub(crate) fn bar_column(&self, gammas: &[LaurentPoly], j: usize) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(self.rank);
        for (g, row) in gammas.iter().zip(&self.bar_matrix) {
            if g.is_zero() || row[j].is_zero() {
                continue;
            }
            acc = &acc + &(g * &row[j]);
        }
        acc
    }

    /// Is `m` a fixed point of `bar e`? Stops at the first differing column.
    pub fn fixes(&self, m: &MagnusElement) -> bool {
        m.rank() == self.rank
            && (0..self.rank).all(|j| self.bar_column(m.gammas(), j) == m.gammas()[j])
    }

    /// `self ∘ other`: the images are `self.apply(other.images[i])`.
    ///
    /// The composite's matrix is recomputed from `phi` and checked against
    /// the product `other.bar_matrix * self.bar_matrix`.
    pub fn compose(&self, other: &IAEndomorphism) -> Result<IAEndomorphism, EndoError> {
        self.check_rank(other.rank)?;
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        let composite = Self::from_images_with_rank(self.rank, images)?;
        let product = matrix_product(&other.bar_matrix, &self.bar_matrix);
        if composite.bar_matrix != product {
            return Err(EndoError::CompositionMismatch);
        }
        Ok(composite)
    }

    fn check_rank(&self, other: usize) -> Result<(), EndoError> {
        if self.rank == other {
            Ok(())
        } else {
            Err(EndoError::RankMismatch {
                left: self.rank,
                right: other,
            })
        }
    }
}

fn require_rank(n: usize, min: usize) -> Result<(), EndoError> {
    if n < min {
        Err(EndoError::RankTooSmall { n, min })
    } else {
        Ok(())
    }
}

fn matrix_product(a: &[Vec<LaurentPoly>], b: &[Vec<LaurentPoly>]) -> Vec<Vec<LaurentPoly>> {
    let n = a.len();
    let rank = a.first().and_then(|r| r.first()).map_or(0, LaurentPoly::rank);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|k| {
                    (0..n).fold(LaurentPoly::zero(rank), |acc, j| {
                        &acc + &(&a[i][j] * &b[j][k])
                    })
                })
                .collect()
        })
        .collect()
}

/// The closed form of `bar alpha_n`, written out independently of `phi`:
/// with `v = (1 - s_2) t_1 - (1 - s_1) t_2 + t_n`,
/// `t_i -> s_n t_i + (1 - s_i) v` for `i < n` and `t_n -> v`.
pub fn alpha_n_closed_form(n: usize) -> Result<Vec<Vec<LaurentPoly>>, EndoError> {
    require_rank(n, 3)?;
    let one_minus = |i| LaurentPoly::one_minus_var(n, i).expect("index in range");
    let mut v = vec![LaurentPoly::zero(n); n];
    v[0] = one_minus(2);
    v[1] = -one_minus(1);
    v[n - 1] = LaurentPoly::one(n);
    let s_n = LaurentPoly::var(n, n)?;
    let mut rows = Vec::with_capacity(n);
    for i in 1..n {
        let mut row: Vec<LaurentPoly> = v.iter().map(|c| &one_minus(i) * c).collect();
        row[i - 1] = &row[i - 1] + &s_n;
        rows.push(row);
    }
    rows.push(v);
    Ok(rows)
}
