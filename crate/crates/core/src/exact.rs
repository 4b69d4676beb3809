//! Exact evaluation of `γ(m) = m^m ξ(m)` and `γ₂(m) = m^m ξ₂(m)`.
//!
//! Each quantity has two routes:
//!
//! * the definitional binomial / trinomial sums
//!   `γ(m)  = Σ_k C(m,k) k^k (m-k)^(m-k)` and
//!   `γ₂(m) = Σ_{j,k} C(m,j) C(m-j,k) j^j k^k (m-j-k)^(m-j-k)`,
//! * the simplified single sums
//!   `γ(m)  = Σ_j m^j m!/j!` and
//!   `γ₂(m) = Σ_j m^(m-j) C(m,j) (j+1)!`.
//!
//! The simplified forms are evaluated in Horner form over powers of `m`,
//! so every step is one multiplication of a big integer by a machine word.
//! `0^0 = 1` throughout, and `m = 0` is rejected.

use std::time::Instant;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{require_positive_m, Error, Result};
use crate::rational::ExactRational;

/// Arbitrary-precision natural number.
pub type BigNat = BigUint;

/// Default largest `m` for which [`verify_identity`] runs the O(m²)
/// definitional cross-check.
pub const DEFAULT_DEFN_CAP: u64 = 200;
/// Default largest `m` accepted by [`verify_identity`].
pub const DEFAULT_SIMPLIFIED_CAP: u64 = 5000;

fn pow_u64(base: u64, exp: u64) -> BigNat {
    // 0^0 = 1 falls out of BigUint::pow.
    BigNat::from(base).pow(u32::try_from(exp).expect("exponent exceeds u32"))
}

/// `k^k` for `k` in `0..=m`.
fn self_powers(m: u64) -> Vec<BigNat> {
    (0..=m).map(|k| pow_u64(k, k)).collect()
}

/// Row `m` of Pascal's triangle, built with the ratio
/// `C(m,k+1) = C(m,k) (m-k) / (k+1)`.
fn binomial_row(m: u64) -> Vec<BigNat> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigNat::one();
    row.push(c.clone());
    for k in 0..m {
        c *= m - k;
        c /= k + 1;
        row.push(c.clone());
    }
    row
}

/// `Σ_{k=0}^m C(m,k) k^k (m-k)^(m-k)`.
pub fn gamma_defn(m: u64) -> Result<BigNat> {
    require_positive_m(m)?;
    let pows = self_powers(m);
    let row = binomial_row(m);
    let mut sum = BigNat::zero();
    for k in 0..=m as usize {
        sum += &row[k] * &pows[k] * &pows[m as usize - k];
    }
    Ok(sum)
}

/// `Σ_{j=0}^m m^j m!/j!`.
pub fn gamma_simplified(m: u64) -> Result<BigNat> {
    require_positive_m(m)?;
    // With i = m - j the sum reads Σ_i m^(m-i) F_i where F_i = m!/(m-i)!
    // is the falling factorial; Horner over i keeps all factors small.
    let mut falling = BigNat::one();
    let mut acc = BigNat::zero();
    for i in 0..=m {
        if i > 0 {
            falling *= m - i + 1;
        }
        acc *= m;
        acc += &falling;
    }
    Ok(acc)
}

/// `Σ_{j=0}^m Σ_{k=0}^{m-j} C(m,j) C(m-j,k) j^j k^k (m-j-k)^(m-j-k)`,
/// iterated row-major in `j` then `k`.
pub fn gamma2_defn(m: u64) -> Result<BigNat> {
    require_positive_m(m)?;
    let pows = self_powers(m);
    let rows: Vec<Vec<BigNat>> = (0..=m).map(binomial_row).collect();
    let mut sum = BigNat::zero();
    let m = m as usize;
    for j in 0..=m {
        let outer = &rows[m][j] * &pows[j];
        let rest = m - j;
        let mut inner = BigNat::zero();
        for k in 0..=rest {
            inner += &rows[rest][k] * &pows[k] * &pows[rest - k];
        }
        sum += outer * inner;
    }
    Ok(sum)
}

/// `Σ_{j=0}^m m^(m-j) C(m,j) (j+1)!`.
pub fn gamma2_simplified(m: u64) -> Result<BigNat> {
    require_positive_m(m)?;
    // C(m,j) (j+1)! = (j+1) m!/(m-j)!, again a falling factorial.
    let mut falling = BigNat::one();
    let mut acc = BigNat::zero();
    for j in 0..=m {
        if j > 0 {
            falling *= m - j + 1;
        }
        acc *= m;
        acc += &falling * (j + 1);
    }
    Ok(acc)
}

/// `m^(m+1)`, the claimed gap `γ₂(m) − γ(m)`.
pub fn identity_gap(m: u64) -> Result<BigNat> {
    require_positive_m(m)?;
    Ok(pow_u64(m, m + 1))
}

/// `Σ_{k=0}^m m^k (m!/k!) (m-k)`, the intermediate sum of the
/// telescoping argument. Equals `m^(m+1)`.
pub fn telescope_sum(m: u64) -> Result<BigNat> {
    require_positive_m(m)?;
    // Horner from k = m down to 0, with m!/k! grown by one factor per step.
    let mut ratio = BigNat::one();
    let mut acc = BigNat::zero();
    for k in (0..=m).rev() {
        if k < m {
            ratio *= k + 1;
        }
        acc *= m;
        acc += &ratio * (m - k);
    }
    Ok(acc)
}

/// `ξ(m) = γ(m) / m^m` in lowest terms.
pub fn xi_exact(m: u64) -> Result<ExactRational> {
    let gamma = gamma_simplified(m)?;
    ExactRational::from_naturals(gamma, pow_u64(m, m))
}

/// `ξ₂(m) = γ₂(m) / m^m` in lowest terms.
pub fn xi2_exact(m: u64) -> Result<ExactRational> {
    let gamma2 = gamma2_simplified(m)?;
    ExactRational::from_naturals(gamma2, pow_u64(m, m))
}

/// Caps applied by [`verify_identity_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyLimits {
    pub defn_cap: u64,
    pub simplified_cap: u64,
}

impl Default for VerifyLimits {
    fn default() -> Self {
        Self {
            defn_cap: DEFAULT_DEFN_CAP,
            simplified_cap: DEFAULT_SIMPLIFIED_CAP,
        }
    }
}

/// Outcome of checking `γ₂(m) − γ(m) = m^(m+1)` for one `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub m: u64,
    /// Present only when the definitional cross-check ran.
    pub gamma_defn: Option<BigNat>,
    pub gamma_simplified: BigNat,
    pub gamma2_defn: Option<BigNat>,
    pub gamma2_simplified: BigNat,
    pub identity_holds: bool,
    pub telescope_holds: bool,
    /// Wall-clock seconds spent building the report.
    pub elapsed: f64,
}

impl VerifyReport {
    pub fn cross_checked(&self) -> bool {
        self.gamma_defn.is_some()
    }

    /// `true` when both definitional values (if computed) match the
    /// simplified ones.
    pub fn defn_matches(&self) -> bool {
        let g = self
            .gamma_defn
            .as_ref()
            .is_none_or(|d| *d == self.gamma_simplified);
        let g2 = self
            .gamma2_defn
            .as_ref()
            .is_none_or(|d| *d == self.gamma2_simplified);
        g && g2
    }

    pub fn passed(&self) -> bool {
        self.identity_holds && self.telescope_holds && self.defn_matches()
    }
}

/// [`verify_identity_with`] under the default caps.
pub fn verify_identity(m: u64, cross_check: bool) -> Result<VerifyReport> {
    verify_identity_with(m, cross_check, VerifyLimits::default())
}

pub fn verify_identity_with(
    m: u64,
    cross_check: bool,
    limits: VerifyLimits,
) -> Result<VerifyReport> {
    require_positive_m(m)?;
    if m > limits.simplified_cap {
        return Err(Error::Resource {
            param: "m",
            value: m,
            cap: limits.simplified_cap,
        });
    }
    if cross_check && m > limits.defn_cap {
        return Err(Error::Resource {
            param: "m (cross-check)",
            value: m,
            cap: limits.defn_cap,
        });
    }
    let start = Instant::now();
    let gamma_simplified = gamma_simplified(m)?;
    let gamma2_simplified = gamma2_simplified(m)?;
    let gap = identity_gap(m)?;
    let identity_holds =
        gamma2_simplified >= gamma_simplified && &gamma2_simplified - &gamma_simplified == gap;
    let telescope_holds = telescope_sum(m)? == gap;
    let (gamma_defn, gamma2_defn) = if cross_check {
        (Some(gamma_defn(m)?), Some(gamma2_defn(m)?))
    } else {
        (None, None)
    };
    Ok(VerifyReport {
        m,
        gamma_defn,
        gamma_simplified,
        gamma2_defn,
        gamma2_simplified,
        identity_holds,
        telescope_holds,
        elapsed: start.elapsed().as_secs_f64(),
    })
}
