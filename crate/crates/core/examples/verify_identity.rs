//! Checks γ₂(m) − γ(m) = m^(m+1) over a range of m, in parallel, and
//! prints a one-line summary.
//!
//! cargo run -p xi-identity --release --example verify_identity -- 2000

use rayon::prelude::*;
use xi_identity::{verify_identity, verify_identity_with, VerifyLimits};

fn main() -> xi_identity::Result<()> {
    let end: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);

    // Cheap path: simplified forms only, any m up to the cap.
    let limits = VerifyLimits {
        simplified_cap: end.max(VerifyLimits::default().simplified_cap),
        ..VerifyLimits::default()
    };
    let reports = (1..=end)
        .into_par_iter()
        .map(|m| verify_identity_with(m, false, limits))
        .collect::<xi_identity::Result<Vec<_>>>()?;
    let passed = reports.iter().filter(|r| r.passed()).count();
    let slowest = reports
        .iter()
        .max_by(|a, b| a.elapsed.total_cmp(&b.elapsed))
        .unwrap();
    println!(
        "identity + telescope: {passed}/{end} passed (slowest m={}, {:.3}s)",
        slowest.m, slowest.elapsed
    );

    // Full path: also the O(m^2) definitional double sum.
    let cross = 1..=60;
    let ok = cross
        .clone()
        .map(|m| verify_identity(m, true))
        .collect::<xi_identity::Result<Vec<_>>>()?;
    println!(
        "definitional cross-check: {}/{} passed",
        ok.iter().filter(|r| r.passed()).count(),
        cross.count()
    );

    let r = verify_identity(5, true)?;
    println!(
        "m=5: gamma2 - gamma = {} - {} = {}",
        r.gamma2_simplified,
        r.gamma_simplified,
        &r.gamma2_simplified - &r.gamma_simplified
    );
    Ok(())
}
