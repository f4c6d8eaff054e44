// The derivation D_n on the free metabelian Lie algebra and its graded kernel.

use metabelian::lie::{bracket, derivation_dn, kernel_trivial_up_to, LieElement};

type Error = Box<dyn std::error::Error>;

fn run() -> Result<(), Error> {
    let n = 3;
    let x = LieElement::generator;
    let y = bracket(&bracket(&x(2), &x(1)), &x(3));
    println!("[[x2,x1],x3] = {y}");
    println!("[x1,[x2,x3]] = {}", bracket(&x(1), &bracket(&x(2), &x(3))));
    for i in 1..=n {
        println!("D(x{i}) = {}", derivation_dn(n, &x(i))?);
    }
    println!("D({y}) = {}", derivation_dn(n, &y)?);

    let report = kernel_trivial_up_to(n, 6)?;
    println!("degree  source  target  rank");
    for row in &report.degrees {
        println!("{:>6}  {:>6}  {:>6}  {:>4}", row.degree, row.source_dim, row.target_dim, row.rank);
    }
    println!("kernel trivial through degree 6: {}", report.trivial_kernel);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
