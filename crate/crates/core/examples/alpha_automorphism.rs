// The IA-automorphism alpha_n, its inverse, and its matrix over Z[s^±1].

use metabelian::ia_endo::{alpha_n_closed_form, IAEndomorphism};
use metabelian::magnus::{phi, words_equal_in_m, GroupWord};

type Error = Box<dyn std::error::Error>;

fn run() -> Result<(), Error> {
    let n = 4;
    let alpha = IAEndomorphism::alpha_n(n)?;
    for (i, img) in alpha.images().iter().enumerate() {
        println!("g{} -> {img}", i + 1);
    }

    println!("matrix rows:");
    for row in alpha.bar_matrix() {
        let cells: Vec<String> = row.iter().map(|p| p.to_string()).collect();
        println!("  [{}]", cells.join(", "));
    }
    assert_eq!(alpha.bar_matrix(), alpha_n_closed_form(n)?.as_slice());

    let w = GroupWord::parse(n, "g1 g4^-1 g2")?;
    let image = alpha.apply(&w)?;
    println!("alpha({w}) = {image}");
    assert_eq!(phi(&image), alpha.apply_bar(&phi(&w))?);

    let back = IAEndomorphism::alpha_n_inverse(n)?.apply(&image)?;
    println!("alpha^-1(alpha(w)) = {back}");
    assert!(words_equal_in_m(&back, &w));

    println!("{}", serde_json::to_string(&alpha.to_file())?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
