// Words in the free metabelian group and their Magnus matrices.

use metabelian::magnus::{abelianization, phi, words_equal_in_m, GroupWord};

type Error = Box<dyn std::error::Error>;

fn run() -> Result<(), Error> {
    let n = 3;
    for text in ["", "g1 g2", "[g1,g2]", "[g1,g2]^2 g3^-1"] {
        let w = GroupWord::parse(n, text)?;
        let m = phi(&w);
        let gammas: Vec<String> = m.gammas().iter().map(|g| g.to_string()).collect();
        println!("phi({text:?}) = S {:?}, gamma ({})", m.s().exponents(), gammas.join(", "));
        assert!(m.satisfies_image_condition());
        assert_eq!(abelianization(&w), m.s().exponents().iter().map(|&e| e as i64).collect::<Vec<_>>());
    }

    // Second commutators die in M_n; first commutators do not.
    let a = GroupWord::parse(n, "[g1,g2]")?;
    let b = GroupWord::parse(n, "[g1,g3]")?;
    let ab = GroupWord::commutator(&a, &b)?;
    println!("[[g1,g2],[g1,g3]] has {} letters and is trivial: {}", ab.len(), phi(&ab).is_identity());
    println!("[g1,g2] trivial: {}", phi(&a).is_identity());

    let u = GroupWord::parse(n, "g1 g2")?;
    let v = GroupWord::parse(n, "g2 g1")?;
    println!("g1 g2 == g2 g1 in M_3: {}", words_equal_in_m(&u, &v));

    println!("{}", serde_json::to_string(&phi(&u))?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
