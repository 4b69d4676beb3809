//! Acceptance suite. Runs every criterion at its pinned tolerance and time
//! budget, printing one PASS/FAIL line each; exits non-zero on any failure.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xi_identity::{
    abel_sum, gamma2_defn, gamma2_simplified, gamma_defn, gamma_simplified, hurwitz_sum,
    identity_gap, identity_residual, riordan_binomial_rhs, riordan_multinomial_rhs, telescope_sum,
    xi2_exact, xi2_float, xi_exact, xi_float, AbelSpec, ExactRational, HurwitzSpec,
    DEFAULT_REL_CUTOFF,
};

const SEED: u64 = 0x005e_ed0f_ab31;
const FLOAT_REL_TOL: f64 = 1e-12;
const RESIDUAL_TOL: f64 = 1e-11;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, Duration, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_rational(rng: &mut impl Rng, nonzero: bool) -> ExactRational {
    loop {
        let n: i64 = rng.gen_range(-10..=10);
        let d: i64 = rng.gen_range(1..=10);
        if nonzero && n == 0 {
            continue;
        }
        return ExactRational::new(n.into(), d.into()).unwrap();
    }
}

/// `10^(i/steps)` rounded, for `i` in `from..=to`, deduplicated.
fn log_grid(from: u32, to: u32, steps: u32) -> Vec<u64> {
    let mut grid: Vec<u64> = (from..=to)
        .map(|i| 10f64.powf(i as f64 / steps as f64).round() as u64)
        .collect();
    grid.dedup();
    grid
}

fn main_identity() -> Outcome {
    for m in 1..=500 {
        let diff = gamma2_simplified(m).unwrap() - gamma_simplified(m).unwrap();
        ensure(diff == identity_gap(m).unwrap(), || {
            format!("gamma2 - gamma != m^(m+1) at m={m}")
        })?;
    }
    Ok("m=1..500".into())
}

fn defn_vs_simplified() -> Outcome {
    for m in 1..=200 {
        ensure(
            gamma_defn(m).unwrap() == gamma_simplified(m).unwrap(),
            || format!("gamma routes differ at m={m}"),
        )?;
        ensure(
            gamma2_defn(m).unwrap() == gamma2_simplified(m).unwrap(),
            || format!("gamma2 routes differ at m={m}"),
        )?;
    }
    Ok("m=1..200".into())
}

fn abel_hurwitz_bridges() -> Outcome {
    let zero = ExactRational::zero();
    for m in 1..=60 {
        let a = abel_sum(&AbelSpec::new(m, zero.clone(), zero.clone(), 0, 0)).unwrap();
        ensure(a == ExactRational::from(&gamma_defn(m).unwrap()), || {
            format!("A_m(0,0;0,0) != gamma at m={m}")
        })?;
        let b = hurwitz_sum(&HurwitzSpec::zeros(m, 3)).unwrap();
        ensure(b == ExactRational::from(&gamma2_defn(m).unwrap()), || {
            format!("B_m(0,0,0;0,0,0) != gamma2 at m={m}")
        })?;
    }
    Ok("m=1..60".into())
}

fn abel_theorem() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for case in 0..1000 {
        let m = rng.gen_range(1..=20u64);
        let x = random_rational(&mut rng, false);
        let y = random_rational(&mut rng, true);
        let lhs = &y
            * &abel_sum(&AbelSpec::new(m, x.clone(), y.clone(), 0, -1))
                .map_err(|e| e.to_string())?;
        let rhs = (&x + &y + ExactRational::from(m as i64))
            .pow(m as i64)
            .unwrap();
        ensure(lhs == rhs, || format!("case {case}: m={m} x={x} y={y}"))?;
    }
    Ok("1000 cases".into())
}

fn riordan_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    for case in 0..1000 {
        let m = rng.gen_range(1..=20u64);
        let x = random_rational(&mut rng, false);
        let y = random_rational(&mut rng, false);
        let lhs = abel_sum(&AbelSpec::new(m, x.clone(), y.clone(), 0, 0)).unwrap();
        let rhs = riordan_binomial_rhs(m, &x, &y).unwrap();
        ensure(lhs == rhs, || {
            format!("binomial case {case}: m={m} x={x} y={y}")
        })?;
    }
    for case in 0..1000 {
        let m = rng.gen_range(1..=12u64);
        let n = rng.gen_range(2..=5usize);
        let xs: Vec<ExactRational> = (0..n).map(|_| random_rational(&mut rng, false)).collect();
        let spec = HurwitzSpec::new(m, xs.iter().cloned().map(|x| (x, 0)).collect());
        let lhs = hurwitz_sum(&spec).unwrap();
        let rhs = riordan_multinomial_rhs(m, &xs, n).unwrap();
        ensure(lhs == rhs, || {
            format!("multinomial case {case}: m={m} n={n}")
        })?;
    }
    Ok("1000 + 1000 cases".into())
}

fn telescope() -> Outcome {
    for m in 1..=500 {
        ensure(
            telescope_sum(m).unwrap() == identity_gap(m).unwrap(),
            || format!("telescope fails at m={m}"),
        )?;
    }
    Ok("m=1..500".into())
}

fn float_accuracy() -> Outcome {
    let mut ms: Vec<u64> = (1..=100).collect();
    ms.extend(log_grid(17, 32, 8));
    let mut worst: f64 = 0.0;
    for &m in &ms {
        for (approx, exact) in [
            (
                xi_float(m, DEFAULT_REL_CUTOFF).unwrap().value,
                xi_exact(m).unwrap().to_f64(),
            ),
            (
                xi2_float(m, DEFAULT_REL_CUTOFF).unwrap().value,
                xi2_exact(m).unwrap().to_f64(),
            ),
        ] {
            let rel = (approx - exact).abs() / exact;
            worst = worst.max(rel);
            ensure(rel <= FLOAT_REL_TOL, || {
                format!("relative error {rel:e} at m={m}")
            })?;
        }
    }
    let mut worst_residual: f64 = 0.0;
    for m in log_grid(0, 32, 4) {
        let r = identity_residual(m).unwrap();
        worst_residual = worst_residual.max(r);
        ensure(r <= RESIDUAL_TOL, || {
            format!("identity residual {r:e} at m={m}")
        })?;
    }
    Ok(format!(
        "{} values to 1e4, worst rel err {worst:.2e}; residual to 1e8, worst {worst_residual:.2e}",
        ms.len()
    ))
}

fn comparators() -> Outcome {
    for m in 1..=2000u64 {
        let gamma = gamma_simplified(m).unwrap();
        let mm = BigUint::from(m).pow(m as u32);
        ensure(gamma <= &mm * (m + 1), || {
            format!("gamma > (m+1) m^m at m={m}")
        })?;
        ensure(&gamma * &gamma <= &mm * &mm * (4 * m), || {
            format!("gamma^2 > 4m m^2m at m={m}")
        })?;
    }
    for m in 2001..=10_000u64 {
        let xi = xi_float(m, DEFAULT_REL_CUTOFF).unwrap().value;
        ensure(
            xi <= (m + 1) as f64 && xi <= 2.0 * (m as f64).sqrt(),
            || format!("xi_float exceeds a comparator at m={m}"),
        )?;
    }
    Ok("exact to 2000, float to 10000".into())
}

const CLI_RUNS: &[&[&str]] = &[
    &["verify", "--range", "1:500", "--values"],
    &[
        "verify",
        "--range",
        "1:200",
        "--cross-check",
        "--jobs",
        "4",
        "--format",
        "json",
    ],
    &["abel", "--m", "1:60", "--x", "0", "--y", "0"],
    &["hurwitz", "--m", "1:60", "--xs", "0,0,0"],
    &[
        "abel", "--m", "1:20", "--x", "3/7", "--y", "-5/4", "--q", "-1",
    ],
    &["hurwitz", "--m", "1:12", "--xs", "1/2,-3,2/5,7"],
    &[
        "eval",
        "xi",
        "--m",
        "1:100,178,1000,5623,10000",
        "--mode",
        "float",
        "--format",
        "csv",
    ],
    &[
        "eval",
        "xi2",
        "--m",
        "1:100,178,1000,5623,10000",
        "--mode",
        "float",
        "--format",
        "json",
    ],
    &["eval", "xi", "--m", "1:100"],
    &["table", "--m", "1:2000", "--format", "csv"],
    &[
        "table",
        "--m",
        "2001:10000",
        "--mode",
        "float",
        "--format",
        "tsv",
    ],
];

fn cli_pass() -> Result<Vec<u8>, String> {
    let mut all = Vec::new();
    for args in CLI_RUNS {
        let out = Command::new(env!("CARGO_BIN_EXE_xi"))
            .args(*args)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || {
            format!(
                "`xi {}` exited with {:?}",
                args.join(" "),
                out.status.code()
            )
        })?;
        all.extend_from_slice(&out.stdout);
    }
    Ok(all)
}

fn determinism() -> Outcome {
    let first = cli_pass()?;
    let second = cli_pass()?;
    ensure(first == second, || "CLI output differs between runs".into())?;
    Ok(format!(
        "{} bytes over {} commands",
        first.len(),
        CLI_RUNS.len()
    ))
}

fn main() {
    let criteria: &[Criterion] = &[
        (
            "1",
            "main identity, exact",
            Duration::from_secs(30),
            main_identity,
        ),
        (
            "2",
            "definitional vs simplified forms",
            Duration::from_secs(120),
            defn_vs_simplified,
        ),
        (
            "3",
            "Abel / Hurwitz bridges to gamma, gamma2",
            Duration::from_secs(60),
            abel_hurwitz_bridges,
        ),
        (
            "4",
            "Abel binomial theorem, randomized",
            Duration::from_secs(60),
            abel_theorem,
        ),
        (
            "5",
            "Riordan binomial and multinomial identities",
            Duration::from_secs(120),
            riordan_identities,
        ),
        ("6", "telescoping sum", Duration::MAX, telescope),
        (
            "7",
            "float accuracy and identity residual",
            Duration::from_secs(60),
            float_accuracy,
        ),
        (
            "8",
            "comparator bounds m+1 and 2 sqrt(m)",
            Duration::from_secs(60),
            comparators,
        ),
        (
            "9",
            "byte-identical CLI output across runs",
            Duration::MAX,
            determinism,
        ),
    ];
    let mut failures = 0;
    for (id, name, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > *budget => {
                Err(format!("{detail}; took {elapsed:.2?}, budget {budget:.0?}"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("[PASS] criterion {id}: {name} ({detail}; {elapsed:.2?})"),
            Err(why) => {
                failures += 1;
                println!("[FAIL] criterion {id}: {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
