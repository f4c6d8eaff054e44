// Symbolic proof that alpha_n fixes only the identity, for several ranks.

use std::time::Instant;

use metabelian::ia_endo::{certify_endomorphism, certify_no_fixed_points, IAEndomorphism};

type Error = Box<dyn std::error::Error>;

fn run() -> Result<(), Error> {
    for n in 3..=8 {
        let start = Instant::now();
        let cert = certify_no_fixed_points(n)?;
        println!(
            "n = {n}: conclusion {} ({} steps, {:?})",
            cert.conclusion,
            cert.steps.len(),
            start.elapsed()
        );
        assert!(cert.all_verified());
    }

    let cert = certify_no_fixed_points(3)?;
    for step in &cert.steps {
        println!("  {:<22} {}", step.step.as_str(), step.detail);
    }

    // Other endomorphisms are rejected at the first step.
    let cert = certify_endomorphism(&IAEndomorphism::beta2(3)?)?;
    println!("beta2: conclusion {}, failed at {:?}", cert.conclusion, cert.failing_step());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
