// Exhaustive search for fixed points among short words.

use metabelian::ia_endo::IAEndomorphism;
use metabelian::magnus::GroupWord;
use metabelian::oracle::{reduced_word_count, search_fixed_points_with_workers};

type Error = Box<dyn std::error::Error>;

fn run() -> Result<(), Error> {
    let workers = 4;
    let alpha = IAEndomorphism::alpha_n(3)?;
    let report = search_fixed_points_with_workers(&alpha, 5, workers);
    let total: u64 = (0..=5).map(|k| reduced_word_count(3, k)).sum();
    assert_eq!(report.words_enumerated, total);
    println!(
        "alpha_3, L = 5: {} words, {} distinct non-identity elements, {} fixed",
        report.words_enumerated,
        report.distinct_elements,
        report.fixed_points_found.len()
    );

    // An inner automorphism fixes its conjugator and everything commuting with it.
    let inner = IAEndomorphism::inner(&GroupWord::parse(3, "g3")?);
    let report = search_fixed_points_with_workers(&inner, 3, workers);
    println!("conjugation by g3, L = 3:");
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
