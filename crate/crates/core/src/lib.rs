//! Exact computation in free metabelian groups `M_n = F_n / F_n''` through
//! the Magnus representation.
//!
//! - [`laurent`]: sparse Laurent polynomials over the integers.
//! - [`magnus`]: words, free reduction, and the faithful matrix map `phi`.
//! - [`ia_endo`]: IA-endomorphisms, the automorphism `alpha_n` and the
//!   certificate engine showing it fixes only the identity.
//! - [`oracle`]: exhaustive fixed-point search over short words.
//! - [`lie`]: the free metabelian Lie algebra and the derivation `D_n`.
//! - [`cli`]: command layer of the `metabelian` binary.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod ia_endo;
pub mod laurent;
pub mod lie;
pub mod magnus;
pub mod oracle;

pub use ia_endo::{certify_no_fixed_points, Certificate, IAEndomorphism};
pub use laurent::{LaurentPoly, Monomial, VanishingOrder};
pub use lie::{LieElement, LieMonomial};
pub use magnus::{phi, words_equal_in_m, GroupWord, MagnusElement};
pub use oracle::{search_fixed_points, SearchReport};
