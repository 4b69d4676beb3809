//! Floating-point evaluation of `ξ(m)` and `ξ₂(m)` for large `m`.
//!
//! Rewriting the simplified sums with `k = m - j` gives
//!
//! ```text
//! ξ(m)  = Σ_k t_k,          ξ₂(m) = Σ_k (k+1) t_k,
//! t_0 = 1,  t_k = t_{k-1} (m-k+1)/m  =  m! / (m^k (m-k)!)
//! ```
//!
//! Every `t_k` lies in `[0, 1]` and the sequence is non-increasing, so the
//! sums are accumulated in ascending `k` with compensated addition and cut
//! off once a bound on the remaining tail falls under the cutoff.

use crate::error::{require_positive_m, Error, Result};

/// Default relative cutoff, below one ulp of any partial sum.
pub const DEFAULT_REL_CUTOFF: f64 = 1e-17;

/// Which series produced a [`SeriesEval`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesMode {
    Simplified,
    NaiveLog,
}

/// A floating-point series value with its bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesEval {
    pub m: u64,
    pub value: f64,
    /// Number of terms added, at most `m + 1`.
    pub terms_used: u64,
    /// Upper bound on (omitted tail) / value. Zero when nothing was omitted.
    pub truncation_bound: f64,
    pub mode: SeriesMode,
}

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

fn check_cutoff(rel_cutoff: f64) -> Result<()> {
    if !(rel_cutoff > 0.0 && rel_cutoff < 1.0) {
        return Err(Error::Domain {
            param: "rel_cutoff",
            value: rel_cutoff.to_string(),
            reason: "must lie strictly between 0 and 1",
        });
    }
    Ok(())
}

/// Sums `Σ_k w(k) t_k`, stopping once `t_k · (m-k) · wmax ≤ cutoff · sum`,
/// where `wmax` bounds the weight of every omitted term.
fn weighted_series(
    m: u64,
    rel_cutoff: f64,
    weight: impl Fn(u64) -> f64,
    wmax: f64,
) -> Result<SeriesEval> {
    require_positive_m(m)?;
    check_cutoff(rel_cutoff)?;
    let mf = m as f64;
    let mut acc = CompensatedSum::default();
    let mut term = 1.0_f64;
    let mut terms_used = 0;
    let mut truncation_bound = 0.0;
    for k in 0..=m {
        if k > 0 {
            let next = term * ((m - k + 1) as f64 / mf);
            assert!(next <= term, "series terms must be non-increasing");
            term = next;
        }
        acc.add(weight(k) * term);
        terms_used += 1;
        let remaining = (m - k) as f64;
        if remaining == 0.0 {
            break;
        }
        let tail = term * remaining * wmax;
        let partial = acc.value();
        if term < rel_cutoff * partial && tail <= rel_cutoff * partial {
            truncation_bound = tail / partial;
            break;
        }
    }
    Ok(SeriesEval {
        m,
        value: acc.value(),
        terms_used,
        truncation_bound,
        mode: SeriesMode::Simplified,
    })
}

/// `ξ(m)` from the simplified series.
pub fn xi_float(m: u64, rel_cutoff: f64) -> Result<SeriesEval> {
    weighted_series(m, rel_cutoff, |_| 1.0, 1.0)
}

/// `ξ₂(m)` from the simplified series; omitted weights are bounded by `m+1`.
pub fn xi2_float(m: u64, rel_cutoff: f64) -> Result<SeriesEval> {
    weighted_series(m, rel_cutoff, |k| (k + 1) as f64, (m + 1) as f64)
}

/// `ξ(m)` term by term from its defining binomial sum, in log space:
/// `exp(ln C(m,k) + k ln(k/m) + (m-k) ln(1-k/m))` with `0 ln 0 = 0`.
///
/// Kept as an accuracy foil for [`xi_float`]; it sums all `m+1` terms.
pub fn xi_float_naive(m: u64) -> Result<SeriesEval> {
    require_positive_m(m)?;
    let mf = m as f64;
    // ln k! for k in 0..=m as compensated prefix sums of ln i.
    let mut ln_fact = Vec::with_capacity(m as usize + 1);
    let mut running = CompensatedSum::default();
    ln_fact.push(0.0);
    for i in 1..=m {
        running.add((i as f64).ln());
        ln_fact.push(running.value());
    }
    let xlogx = |count: f64, frac: f64| if count == 0.0 { 0.0 } else { count * frac.ln() };
    let mut sum = 0.0;
    for k in 0..=m {
        let rest = m - k;
        let ln_binom = ln_fact[m as usize] - ln_fact[k as usize] - ln_fact[rest as usize];
        sum += (ln_binom + xlogx(k as f64, k as f64 / mf) + xlogx(rest as f64, rest as f64 / mf))
            .exp();
    }
    Ok(SeriesEval {
        m,
        value: sum,
        terms_used: m + 1,
        truncation_bound: 0.0,
        mode: SeriesMode::NaiveLog,
    })
}

/// `|ξ₂(m) − ξ(m) − m| / m` in floating point, at the default cutoff.
pub fn identity_residual(m: u64) -> Result<f64> {
    let xi = xi_float(m, DEFAULT_REL_CUTOFF)?.value;
    let xi2 = xi2_float(m, DEFAULT_REL_CUTOFF)?.value;
    let mf = m as f64;
    Ok((xi2 - xi - mf).abs() / mf)
}
