//! Abel binomial sums A_m(x, y; p, q) over rationals: the classical
//! theorem y·A_m(x, y; 0, −1) = (x + y + m)^m, the closed form of
//! A_m(x, y; 0, 0), and the reduction A_m(0, 0; 0, 0) = γ(m).
//!
//! cargo run -p xi-identity --example abel_theorem

use xi_identity::{abel_sum, gamma_defn, riordan_binomial_rhs, AbelSpec, ExactRational};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x: ExactRational = "3/7".parse()?;
    let y: ExactRational = "-5/4".parse()?;

    for m in 1..=6u64 {
        let a = abel_sum(&AbelSpec::new(m, x.clone(), y.clone(), 0, -1))?;
        let lhs = &y * &a;
        let rhs = (&x + &y + ExactRational::from(m as i64))
            .pow(m as i64)
            .unwrap();
        println!(
            "m={m}: y*A = {lhs}  (x+y+m)^m = {rhs}  equal={}",
            lhs == rhs
        );
    }

    let m = 8;
    let a = abel_sum(&AbelSpec::new(m, x.clone(), y.clone(), 0, 0))?;
    println!("A_{m}(x,y;0,0) = {a}");
    println!("closed form     = {}", riordan_binomial_rhs(m, &x, &y)?);

    let zero = ExactRational::zero();
    let a = abel_sum(&AbelSpec::new(m, zero.clone(), zero, 0, 0))?;
    println!("A_{m}(0,0;0,0) = {a}, gamma({m}) = {}", gamma_defn(m)?);

    // Zero base with a negative exponent is refused, not skipped.
    let bad = AbelSpec::new(3, ExactRational::one(), ExactRational::zero(), 0, -1);
    println!("singular: {}", abel_sum(&bad).unwrap_err());
    Ok(())
}
