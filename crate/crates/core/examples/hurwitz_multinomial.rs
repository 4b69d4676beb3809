//! Hurwitz multinomial sums B_m over compositions of m, the rising
//! factorial α_k(r), and the closed form that reduces B_m(0,0,0;0,0,0)
//! to the simplified expression for γ₂(m).
//!
//! cargo run -p xi-identity --example hurwitz_multinomial

use xi_identity::{
    alpha, compositions, gamma2_simplified, hurwitz_sum, riordan_multinomial_rhs, ExactRational,
    HurwitzSpec,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shown: Vec<String> = compositions(2, 3).map(|c| c.to_string()).collect();
    println!("compositions of 2 into 3 parts: {}", shown.join(" "));
    println!(
        "compositions of 10 into 4 parts: {}",
        compositions(10, 4).count()
    );

    let rising: Vec<String> = (0..6)
        .map(|k| alpha(k, 2).map(|v| v.to_string()))
        .collect::<Result<_, _>>()?;
    println!("alpha_k(2), k=0..5: {}", rising.join(", "));

    for m in 1..=8 {
        let b = hurwitz_sum(&HurwitzSpec::zeros(m, 3))?;
        println!(
            "B_{m}(0,0,0;0,0,0) = {b:>12}   gamma2({m}) = {}",
            gamma2_simplified(m)?
        );
    }

    let xs: Vec<ExactRational> = ["1/2", "-3", "2/5", "7"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let spec = HurwitzSpec::new(6, xs.iter().cloned().map(|x| (x, 0)).collect());
    println!("B_6(xs; 0)         = {}", hurwitz_sum(&spec)?);
    println!(
        "closed-form series = {}",
        riordan_multinomial_rhs(6, &xs, xs.len())?
    );
    Ok(())
}
