// Exact arithmetic in Z[s1^±1, s2^±1, s3^±1].

use metabelian::laurent::{LaurentPoly, Monomial};

type Error = Box<dyn std::error::Error>;

fn run() -> Result<(), Error> {
    let n = 3;
    let p = LaurentPoly::parse(n, "1 - s1*s2^-1")?;
    let q = LaurentPoly::parse(n, "2 + s3^-1")?;
    println!("p = {p}");
    println!("q = {q}");
    println!("p * q = {}", &p * &q);
    println!("p^3 = {}", p.pow(3));

    let f = &LaurentPoly::one_minus_var(n, 1)?.pow(2) * &q;
    let quotient = f.divides_one_minus(1)?.ok_or("expected a multiple of 1 - s1")?;
    println!("({f}) / (1 - s1) = {quotient}");
    assert!(q.divides_one_minus(1)?.is_none());

    println!("ord(p) = {}", p.vanishing_order_at_ones());
    println!("ord(f) = {}", f.vanishing_order_at_ones());
    let unit = Monomial::from_exponents(&[2, -1, 0]);
    println!("ord(s1^2*s2^-1 * f) = {}", f.mul_monomial(&unit)?.vanishing_order_at_ones());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
