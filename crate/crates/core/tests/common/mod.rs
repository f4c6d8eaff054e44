#![allow(dead_code)]

use metabelian::ia_endo::IAEndomorphism;
use metabelian::laurent::{LaurentPoly, Monomial};
use metabelian::magnus::GroupWord;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random word with at most `max_len` raw letters (before reduction).
pub fn random_word(rng: &mut impl Rng, n: usize, max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| {
        let i = rng.gen_range(1..=n as i32);
        if rng.gen_bool(0.5) { i } else { -i }
    });
    GroupWord::from_letters(n, letters).unwrap()
}

pub fn random_poly(rng: &mut impl Rng, n: usize, terms: usize, exp: i32) -> LaurentPoly {
    let mut p = LaurentPoly::zero(n);
    for _ in 0..rng.gen_range(0..=terms) {
        let e: Vec<i32> = (0..n).map(|_| rng.gen_range(-exp..=exp)).collect();
        let c: i64 = rng.gen_range(-5..=5);
        p.add_term(Monomial::from_exponents(&e), c.into());
    }
    p
}

/// One of alpha_n, beta_1, beta_2, alpha_n^-1, a random inner automorphism,
/// or a composition of two of those.
pub fn random_endo(rng: &mut impl Rng, n: usize) -> IAEndomorphism {
    fn base(rng: &mut impl Rng, n: usize) -> IAEndomorphism {
        match rng.gen_range(0..5) {
            0 => IAEndomorphism::alpha_n(n).unwrap(),
            1 => IAEndomorphism::beta1(n).unwrap(),
            2 => IAEndomorphism::beta2(n).unwrap(),
            3 => IAEndomorphism::alpha_n_inverse(n).unwrap(),
            _ => IAEndomorphism::inner(&random_word(rng, n, 4)),
        }
    }
    if rng.gen_bool(0.3) {
        base(rng, n).compose(&base(rng, n)).unwrap()
    } else {
        base(rng, n)
    }
}

pub fn pick<'a, T>(rng: &mut impl Rng, items: &'a [T]) -> &'a T {
    items.choose(rng).unwrap()
}
