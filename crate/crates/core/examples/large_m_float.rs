//! Floating-point ξ(m) and ξ₂(m) for m up to 10^8, with the number of
//! series terms actually needed and the residual of ξ₂ = ξ + m. The
//! log-space evaluation of the defining sum is shown as a foil.
//!
//! cargo run -p xi-identity --release --example large_m_float

use xi_identity::{
    identity_residual, xi2_float, xi_exact, xi_float, xi_float_naive, DEFAULT_REL_CUTOFF,
};

fn main() -> xi_identity::Result<()> {
    println!(
        "{:>10}  {:>22}  {:>24}  {:>7}  {:>9}",
        "m", "xi", "xi2", "terms", "residual"
    );
    for e in 0..=8 {
        let m = 10u64.pow(e);
        let xi = xi_float(m, DEFAULT_REL_CUTOFF)?;
        let xi2 = xi2_float(m, DEFAULT_REL_CUTOFF)?;
        println!(
            "{m:>10}  {:>22.15}  {:>24.15}  {:>7}  {:>9.1e}",
            xi.value,
            xi2.value,
            xi.terms_used,
            identity_residual(m)?
        );
    }

    println!();
    for m in [10, 100, 1000, 5000] {
        let exact = xi_exact(m)?.to_f64();
        let fast = xi_float(m, DEFAULT_REL_CUTOFF)?.value;
        let naive = xi_float_naive(m)?.value;
        println!(
            "m={m:>5}: relative error simplified {:.1e}, log-space {:.1e}",
            (fast - exact).abs() / exact,
            (naive - exact).abs() / exact
        );
    }
    Ok(())
}
