mod common;

use common::{random_word, rng};
use metabelian::magnus::{abelianization, in_image, phi, words_equal_in_m, GroupWord, MagnusElement};
use rand::Rng;

/// Product of generator matrices over the raw, unreduced letter sequence.
fn phi_unreduced(n: usize, letters: &[i32]) -> MagnusElement {
    letters.iter().fold(MagnusElement::identity(n), |acc, &l| {
        let g = phi(&GroupWord::letter(n, l).unwrap());
        acc.try_mul(&g).unwrap()
    })
}

#[test]
fn phi_is_a_homomorphism() {
    let mut r = rng(1);
    for n in [2, 3, 4, 5] {
        for _ in 0..150 {
            let u = random_word(&mut r, n, 10);
            let v = random_word(&mut r, n, 10);
            let uv = u.try_mul(&v).unwrap();
            assert_eq!(phi(&uv), phi(&u).try_mul(&phi(&v)).unwrap(), "{u} | {v}");
        }
    }
}

#[test]
fn images_satisfy_image_condition() {
    let mut r = rng(2);
    for _ in 0..500 {
        let n = r.gen_range(2..=5);
        let m = phi(&random_word(&mut r, n, 12));
        assert!(in_image(m.s(), m.gammas()));
        assert!(m.satisfies_image_condition());
    }
}

#[test]
fn second_commutators_vanish() {
    let mut r = rng(3);
    for _ in 0..100 {
        let n = r.gen_range(2..=4);
        let [a, b, c, d] = [(); 4].map(|_| random_word(&mut r, n, 5));
        let ab = GroupWord::commutator(&a, &b).unwrap();
        let cd = GroupWord::commutator(&c, &d).unwrap();
        let rel = GroupWord::commutator(&ab, &cd).unwrap();
        assert!(phi(&rel).is_identity(), "[[{a},{b}],[{c},{d}]]");
    }
}

#[test]
fn free_cancellation_does_not_change_phi() {
    let mut r = rng(4);
    for _ in 0..200 {
        let n = 3;
        let w = random_word(&mut r, n, 10);
        let mut raw = w.letters().to_vec();
        for _ in 0..3 {
            let at = r.gen_range(0..=raw.len());
            let l = r.gen_range(1..=n as i32) * if r.gen_bool(0.5) { 1 } else { -1 };
            raw.splice(at..at, [l, -l]);
        }
        assert_eq!(phi_unreduced(n, &raw), phi(&w));
        assert_eq!(GroupWord::from_letters(n, raw).unwrap(), w);
    }
}

#[test]
fn abelianization_is_the_exponent_of_s() {
    let mut r = rng(5);
    for _ in 0..300 {
        let n = r.gen_range(2..=5);
        let w = random_word(&mut r, n, 12);
        let s: Vec<i64> = phi(&w).s().exponents().iter().map(|&e| e as i64).collect();
        assert_eq!(abelianization(&w), s);
    }
}

#[test]
fn inverse_is_an_involution() {
    let mut r = rng(6);
    for _ in 0..200 {
        let m = phi(&random_word(&mut r, 4, 10));
        assert_eq!(m.inverse().inverse(), m);
        assert!(m.try_mul(&m.inverse()).unwrap().is_identity());
    }
}

#[test]
fn non_commuting_generators() {
    let u = GroupWord::parse(3, "g1 g2").unwrap();
    let v = GroupWord::parse(3, "g2 g1").unwrap();
    assert!(!words_equal_in_m(&u, &v));
    // gamma vectors (1, s1) and (s2, 1)
    assert_eq!(phi(&v).gammas()[0].to_string(), "s2");
    assert_eq!(phi(&v).gammas()[1].to_string(), "1");
}

#[test]
fn json_round_trip_on_random_elements() {
    let mut r = rng(7);
    for _ in 0..50 {
        let m = phi(&random_word(&mut r, 4, 12));
        let text = serde_json::to_string(&m).unwrap();
        let back: MagnusElement = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
    }
}
