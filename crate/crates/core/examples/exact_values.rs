//! γ(m), γ₂(m), ξ(m) and ξ₂(m) for small m, by both summation routes.
//!
//! cargo run -p xi-identity --example exact_values

use xi_identity::{
    gamma2_defn, gamma2_simplified, gamma_defn, gamma_simplified, xi2_exact, xi_exact,
};

fn main() -> xi_identity::Result<()> {
    println!(
        "{:>3}  {:>16}  {:>18}  {:>22}  {:>22}",
        "m", "gamma", "gamma2", "xi", "xi2"
    );
    for m in 1..=12 {
        let gamma = gamma_simplified(m)?;
        let gamma2 = gamma2_simplified(m)?;
        assert_eq!(gamma, gamma_defn(m)?);
        assert_eq!(gamma2, gamma2_defn(m)?);
        println!(
            "{m:>3}  {gamma:>16}  {gamma2:>18}  {:>22}  {:>22}",
            xi_exact(m)?.to_string(),
            xi2_exact(m)?.to_string()
        );
    }
    Ok(())
}
