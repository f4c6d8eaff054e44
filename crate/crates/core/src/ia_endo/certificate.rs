//! Mechanical check that `alpha_n` has no nontrivial fixed point.
//!
//! A fixed point `g` with `phi(g) = (S, sum gamma_i t_i)` satisfies
//! `gamma_j = sum_i a_{i,j} gamma_i` for every `j`. The engine treats the
//! `gamma_i` as formal unknowns, builds these equations from the matrix of
//! `alpha_n`, and walks the elimination:
//!
//! 1. the matrix equals the closed form;
//! 2. the equations for `3 <= i < n` read `(1 - s_n) gamma_i = 0`, so those
//!    unknowns vanish;
//! 3. the `t_n` equation is `(1 - s_1) gamma_1 + (1 - s_2) gamma_2 = 0`, and
//!    modulo it the `t_1`, `t_2` equations become
//!    `(1 - s_n) gamma_1 = (1 - s_2) gamma_n` and
//!    `(1 - s_n) gamma_2 = -(1 - s_1) gamma_n`;
//! 4. primality of each `1 - s_i` forces
//!    `gamma = ((1 - s_2) A, -(1 - s_1) A, 0, ..., 0, (1 - s_n) A)`;
//! 5. the image condition becomes `1 - S = (1 - s_n)^2 A`, whose right side
//!    vanishes to order at least two at `(1, ..., 1)` while `1 - S` vanishes
//!    to order exactly one unless `S = 1`. Hence `S = 1`, `A = 0`.
//!
//! Every identity is checked with exact arithmetic. Primality of `1 - s_i`
//! and faithfulness of `phi` are the facts taken as given.

use std::fmt;

use serde::{Serialize, Serializer};

use super::{alpha_n_closed_form, require_rank, EndoError, IAEndomorphism};
use crate::laurent::{LaurentPoly, VanishingOrder};

/// A formal expression `sum c_k gamma_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<LaurentPoly>,
}

impl LinearForm {
    pub fn zero(rank: usize) -> Self {
        LinearForm {
            coeffs: vec![LaurentPoly::zero(rank); rank],
        }
    }

    /// `c * gamma_k` (1-based `k`).
    pub fn term(rank: usize, k: usize, c: LaurentPoly) -> Self {
        let mut f = Self::zero(rank);
        f.coeffs[k - 1] = c;
        f
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    /// `Some(+1)` or `Some(-1)` when `self = ±other`.
    pub fn sign_relative_to(&self, other: &LinearForm) -> Option<i32> {
        if self == other {
            Some(1)
        } else if *self == other.neg() {
            Some(-1)
        } else {
            None
        }
    }

    /// Sets `gamma_k := 0`.
    pub fn eliminate(&mut self, k: usize) {
        let rank = self.coeffs[k - 1].rank();
        self.coeffs[k - 1] = LaurentPoly::zero(rank);
    }

    /// Substitutes `gamma_k = p_k * A` and returns the coefficient of `A`.
    pub fn pull_back(&self, p: &[LaurentPoly]) -> LaurentPoly {
        let rank = p.first().map_or(0, LaurentPoly::rank);
        self.coeffs
            .iter()
            .zip(p)
            .fold(LaurentPoly::zero(rank), |acc, (c, q)| &acc + &(c * q))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*gamma{}", k + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StepName {
    ClosedForm,
    MiddleGammasVanish,
    ReducedSystem,
    Parametrization,
    OrderContradiction,
}

impl StepName {
    pub const ALL: [StepName; 5] = [
        StepName::ClosedForm,
        StepName::MiddleGammasVanish,
        StepName::ReducedSystem,
        StepName::Parametrization,
        StepName::OrderContradiction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StepName::ClosedForm => "closed_form",
            StepName::MiddleGammasVanish => "middle_gammas_vanish",
            StepName::ReducedSystem => "reduced_system",
            StepName::Parametrization => "parametrization",
            StepName::OrderContradiction => "order_contradiction",
        }
    }
}

impl fmt::Display for StepName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for StepName {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateStep {
    pub step: StepName,
    pub verified: bool,
    pub detail: String,
}

/// Outcome of the engine. `conclusion` is true only when every step in
/// [`StepName::ALL`] was run and verified; on the first failure the engine
/// stops and the last recorded step is the failing one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub rank: usize,
    pub steps: Vec<CertificateStep>,
    pub conclusion: bool,
}

impl Certificate {
    pub fn failing_step(&self) -> Option<StepName> {
        self.steps.iter().find(|s| !s.verified).map(|s| s.step)
    }

    pub fn all_verified(&self) -> bool {
        self.steps.len() == StepName::ALL.len() && self.steps.iter().all(|s| s.verified)
    }
}

/// Runs the engine on `alpha_n`.
pub fn certify_no_fixed_points(n: usize) -> Result<Certificate, EndoError> {
    certify_endomorphism(&IAEndomorphism::alpha_n(n)?)
}

/// Runs the engine on an arbitrary endomorphism of rank at least three.
///
/// Only `alpha_n` passes; anything else fails at the first step whose
/// identity does not hold, which makes the engine usable as a regression
/// alarm.
pub fn certify_endomorphism(e: &IAEndomorphism) -> Result<Certificate, EndoError> {
    let n = e.rank();
    require_rank(n, 3)?;
    let mut engine = Engine::new(e);
    let mut steps = Vec::new();
    for step in StepName::ALL {
        let outcome = match step {
            StepName::ClosedForm => engine.closed_form(),
            StepName::MiddleGammasVanish => engine.middle_gammas_vanish(),
            StepName::ReducedSystem => engine.reduced_system(),
            StepName::Parametrization => engine.parametrization(),
            StepName::OrderContradiction => engine.order_contradiction(),
        };
        let (verified, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        steps.push(CertificateStep {
            step,
            verified,
            detail,
        });
        if !verified {
            break;
        }
    }
    let conclusion = steps.len() == StepName::ALL.len() && steps.iter().all(|s| s.verified);
    Ok(Certificate {
        rank: n,
        steps,
        conclusion,
    })
}

type StepResult = Result<String, String>;

struct Engine<'a> {
    n: usize,
    endo: &'a IAEndomorphism,
    /// The untouched fixed-point equations `gamma_j - sum_i a_{i,j} gamma_i`.
    original: Vec<LinearForm>,
    /// The same equations after the substitutions made so far.
    forms: Vec<LinearForm>,
    /// Reduced `t_1` and `t_2` equations from step 3.
    reduced: Option<(LinearForm, LinearForm)>,
    /// `gamma_k = param[k] * A` from step 4.
    param: Option<Vec<LaurentPoly>>,
}

impl<'a> Engine<'a> {
    fn new(endo: &'a IAEndomorphism) -> Self {
        let n = endo.rank();
        let a = endo.bar_matrix();
        let original: Vec<LinearForm> = (0..n)
            .map(|j| LinearForm {
                coeffs: (0..n)
                    .map(|k| {
                        let delta = if k == j {
                            LaurentPoly::one(n)
                        } else {
                            LaurentPoly::zero(n)
                        };
                        &delta - &a[k][j]
                    })
                    .collect(),
            })
            .collect();
        Engine {
            n,
            endo,
            forms: original.clone(),
            original,
            reduced: None,
            param: None,
        }
    }

    fn one_minus(&self, i: usize) -> LaurentPoly {
        LaurentPoly::one_minus_var(self.n, i).expect("index in range")
    }

    fn closed_form(&mut self) -> StepResult {
        let expected = alpha_n_closed_form(self.n).map_err(|e| e.to_string())?;
        for (i, (got, want)) in self.endo.bar_matrix().iter().zip(&expected).enumerate() {
            for (j, (g, w)) in got.iter().zip(want).enumerate() {
                if g != w {
                    return Err(format!(
                        "entry ({}, {}) is {g}, closed form gives {w}",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(format!(
            "all {} matrix entries derived from phi of the images match the closed form",
            self.n * self.n
        ))
    }

    fn middle_gammas_vanish(&mut self) -> StepResult {
        let n = self.n;
        let one_minus_n = self.one_minus(n);
        if one_minus_n.is_zero() {
            return Err("1 - s_n is zero".into());
        }
        if n == 3 {
            return Ok("no indices 3 <= i < n; nothing to eliminate".into());
        }
        for i in 3..n {
            let target = LinearForm::term(n, i, one_minus_n.clone());
            if self.forms[i - 1].sign_relative_to(&target).is_none() {
                return Err(format!(
                    "t_{i} equation is {} instead of ±(1 - s{n})*gamma{i}",
                    self.forms[i - 1]
                ));
            }
        }
        for i in 3..n {
            for f in &mut self.forms {
                f.eliminate(i);
            }
        }
        Ok(format!(
            "for 3 <= i < {n} the t_i equation is ±(1 - s{n})*gamma_i; 1 - s{n} is a nonzero \
             element of an integral domain, so gamma_3..gamma_{} vanish",
            n - 1
        ))
    }

    fn reduced_system(&mut self) -> StepResult {
        let n = self.n;
        let r = LinearForm::term(n, 1, self.one_minus(1))
            .add(&LinearForm::term(n, 2, self.one_minus(2)));
        if self.forms[n - 1].sign_relative_to(&r).is_none() {
            return Err(format!(
                "t_{n} equation is {} instead of ±((1 - s1)*gamma1 + (1 - s2)*gamma2)",
                self.forms[n - 1]
            ));
        }
        let t1 = LinearForm::term(n, 1, self.one_minus(n))
            .sub(&LinearForm::term(n, n, self.one_minus(2)));
        let t2 = LinearForm::term(n, 2, self.one_minus(n))
            .add(&LinearForm::term(n, n, self.one_minus(1)));
        let l1 = reduce_modulo(&self.forms[0], &t1, &r, self.n)
            .ok_or_else(|| format!("t_1 equation {} is not ±T1 modulo R", self.forms[0]))?;
        let l2 = reduce_modulo(&self.forms[1], &t2, &r, self.n)
            .ok_or_else(|| format!("t_2 equation {} is not ±T2 modulo R", self.forms[1]))?;
        self.reduced = Some((t1, t2));
        Ok(format!(
            "t_{n} equation is ±R with R = (1 - s1)*gamma1 + (1 - s2)*gamma2 = 0; \
             t_1 equation = ±T1 + ({l1})*R and t_2 equation = ±T2 + ({l2})*R, where \
             T1: (1 - s{n})*gamma1 = (1 - s2)*gamma{n} and T2: (1 - s{n})*gamma2 = -(1 - s1)*gamma{n}"
        ))
    }

    fn parametrization(&mut self) -> StepResult {
        let n = self.n;
        let (t1, t2) = self.reduced.clone().ok_or("reduced system missing")?;
        let (d1, e1) = self.solve_pair(&t1, 1)?;
        let (d2, e2) = self.solve_pair(&t2, 2)?;
        if d1.1 != n || d2.1 != n {
            return Err("gamma_n is not forced to a multiple of 1 - s_n".into());
        }
        let mut param = vec![LaurentPoly::zero(n); n];
        param[0] = self.one_minus(d1.0).scale(&e1.into());
        param[1] = self.one_minus(d2.0).scale(&e2.into());
        param[n - 1] = self.one_minus(n);
        // The family must solve the whole original system, not just T1, T2.
        for (j, f) in self.original.iter().enumerate() {
            let residue = f.pull_back(&param);
            if !residue.is_zero() {
                return Err(format!(
                    "parametrization leaves residue {residue} in the t_{} equation",
                    j + 1
                ));
            }
        }
        let detail = format!(
            "1 - s_i are pairwise non-associate primes (checked by non-divisibility); \
             gamma1 = ({})*A, gamma2 = ({})*A, gamma{n} = ({})*A, other gammas 0; \
             the family solves every fixed-point equation",
            param[0],
            param[1],
            param[n - 1]
        );
        self.param = Some(param);
        Ok(detail)
    }

    /// From `a*gamma_j + b*gamma_n = 0` with `a = ±(1 - s_x)`, `b = ±(1 - s_y)`:
    /// `gamma_j = (1 - s_y) A_j`, `gamma_n = (1 - s_x) A_n` and `A_j = eps*A_n`.
    /// Returns `((y, x), eps)`.
    fn solve_pair(&self, t: &LinearForm, j: usize) -> Result<((usize, usize), i32), String> {
        let n = self.n;
        if (1..=n).any(|k| k != j && k != n && !t.coeff(k).is_zero()) {
            return Err(format!("reduced equation {t} involves extra unknowns"));
        }
        let a = t.coeff(j);
        let b = t.coeff(n);
        let x = self
            .prime_index(a)
            .ok_or_else(|| format!("coefficient {a} of gamma{j} is not ±(1 - s_i)"))?;
        let y = self
            .prime_index(b)
            .ok_or_else(|| format!("coefficient {b} of gamma{n} is not ±(1 - s_i)"))?;
        if x == y {
            return Err(format!("both coefficients are associates of 1 - s{x}"));
        }
        // (1 - s_y) divides a*gamma_j but not a, so it divides gamma_j; symmetrically for x.
        let coprime = a.divides_one_minus(y).map_err(|e| e.to_string())?.is_none()
            && b.divides_one_minus(x).map_err(|e| e.to_string())?.is_none();
        if !coprime {
            return Err(format!("1 - s{x} and 1 - s{y} are not coprime"));
        }
        let kj = a * &self.one_minus(y);
        let kn = b * &self.one_minus(x);
        if kj.is_zero() {
            return Err("zero cancellation factor".into());
        }
        // kj*A_j + kn*A_n = 0 and kj is not a zero divisor.
        let eps = if (&kj + &kn).is_zero() {
            1
        } else if (&kj - &kn).is_zero() {
            -1
        } else {
            return Err(format!("cannot cancel {kj} against {kn}"));
        };
        Ok(((y, x), eps))
    }

    /// `Some(i)` when `p = ±(1 - s_i)`.
    fn prime_index(&self, p: &LaurentPoly) -> Option<usize> {
        (1..=self.n).find(|&i| {
            let q = self.one_minus(i);
            *p == q || *p == -&q
        })
    }

    fn order_contradiction(&mut self) -> StepResult {
        let n = self.n;
        let param = self.param.as_ref().ok_or("parametrization missing")?;
        // sum gamma_i (1 - s_i) = q * A
        let q = param
            .iter()
            .enumerate()
            .fold(LaurentPoly::zero(n), |acc, (i, p)| &acc + &(p * &self.one_minus(i + 1)));
        let expected = self.one_minus(n).pow(2);
        if q != expected {
            return Err(format!("image condition gives 1 - S = ({q})*A, expected (1 - s{n})^2*A"));
        }
        let rhs_order = q.vanishing_order_at_ones();
        let lhs_order = VanishingOrder::Finite(1);
        if rhs_order < VanishingOrder::Finite(2) || q.is_zero() {
            return Err(format!("(1 - s{n})^2 vanishes to order {rhs_order}, need at least 2"));
        }
        Ok(format!(
            "image condition: 1 - S = (1 - s{n})^2*A; for S != 1 the left side vanishes at \
             (1,...,1) to order {lhs_order} while the right side has order {rhs_order} + ord(A) >= 2, \
             so S = 1; then (1 - s{n})^2*A = 0 forces A = 0 and every gamma_i = 0, i.e. phi(g) = 1"
        ))
    }
}

/// Finds `lambda` with `form = ±target + lambda * r`, returning `lambda`.
///
/// `lambda` is read off the `gamma_1` coefficient by exact division by the
/// corresponding coefficient of `r` (which is `1 - s_1`), then the whole
/// identity is checked.
fn reduce_modulo(form: &LinearForm, target: &LinearForm, r: &LinearForm, n: usize) -> Option<LaurentPoly> {
    debug_assert!(r.coeff(1) == &LaurentPoly::one_minus_var(n, 1).unwrap());
    for sign in [1, -1] {
        let t = if sign == 1 { target.clone() } else { target.neg() };
        let diff = form.sub(&t);
        let lambda = match diff.coeff(1).divides_one_minus(1).ok()? {
            Some(q) => q,
            None => continue,
        };
        if diff == r.scale(&lambda) {
            return Some(lambda);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_three_is_certified() {
        let c = certify_no_fixed_points(3).unwrap();
        assert!(c.conclusion, "{c:#?}");
        assert!(c.all_verified());
        assert_eq!(c.steps.len(), 5);
    }

    #[test]
    fn rank_two_rejected() {
        assert!(matches!(
            certify_no_fixed_points(2),
            Err(EndoError::RankTooSmall { n: 2, min: 3 })
        ));
    }

    #[test]
    fn other_endomorphisms_fail_at_closed_form() {
        for e in [
            IAEndomorphism::identity(4),
            IAEndomorphism::beta1(4).unwrap(),
            IAEndomorphism::beta2(4).unwrap(),
            IAEndomorphism::alpha_n_inverse(4).unwrap(),
        ] {
            let c = certify_endomorphism(&e).unwrap();
            assert!(!c.conclusion);
            assert_eq!(c.failing_step(), Some(StepName::ClosedForm));
            assert_eq!(c.steps.len(), 1);
        }
    }

    #[test]
    fn linear_form_sign_matching() {
        let n = 3;
        let f = LinearForm::term(n, 1, LaurentPoly::one_minus_var(n, 2).unwrap());
        assert_eq!(f.sign_relative_to(&f), Some(1));
        assert_eq!(f.neg().sign_relative_to(&f), Some(-1));
        assert_eq!(f.scale(&LaurentPoly::constant(n, 2)).sign_relative_to(&f), None);
    }

    #[test]
    fn certificate_json_shape() {
        let c = certify_no_fixed_points(3).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["conclusion"], true);
        assert_eq!(v["steps"][0]["step"], "closed_form");
        assert_eq!(v["steps"][4]["step"], "order_contradiction");
        assert_eq!(v["steps"][2]["verified"], true);
    }
}
