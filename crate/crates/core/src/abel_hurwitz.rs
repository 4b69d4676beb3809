//! Abel binomial sums `A_m(x, y; p, q)`, Hurwitz multinomial sums
//! `B_m(x_1..x_n; p_1..p_n)`, and the closed right-hand sides that turn
//! them into the simplified forms of `γ` and `γ₂`.
//!
//! All arguments are exact rationals, exponents are machine integers, and
//! `0^0 = 1`. A zero base under a negative exponent is a hard error.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{require_positive_m, Error, Result};
use crate::exact::BigNat;
use crate::rational::ExactRational;

/// Parameters of `A_m(x, y; p, q) = Σ_k C(m,k) (x+k)^(k+p) (y+m-k)^(m-k+q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AbelSpec {
    pub m: u64,
    pub x: ExactRational,
    pub y: ExactRational,
    pub p: i64,
    pub q: i64,
}

impl AbelSpec {
    pub fn new(m: u64, x: ExactRational, y: ExactRational, p: i64, q: i64) -> Self {
        Self { m, x, y, p, q }
    }

    /// Checks `m ≥ 1` and that no term of the sum divides by zero.
    pub fn validate(&self) -> Result<()> {
        require_positive_m(self.m)?;
        for k in 0..=self.m {
            self.term(k)?;
        }
        Ok(())
    }

    fn term(&self, k: u64) -> Result<(ExactRational, ExactRational)> {
        let m = self.m;
        let left_exp = k as i64 + self.p;
        let right_exp = (m - k) as i64 + self.q;
        let left = (&self.x + &ExactRational::from(k as i64))
            .pow(left_exp)
            .ok_or_else(|| Error::SingularTerm {
                location: format!("k={k} (x+k = 0)"),
                exponent: left_exp,
            })?;
        let right = (&self.y + &ExactRational::from((m - k) as i64))
            .pow(right_exp)
            .ok_or_else(|| Error::SingularTerm {
                location: format!("k={k} (y+m-k = 0)"),
                exponent: right_exp,
            })?;
        Ok((left, right))
    }
}

/// Exact value of `A_m(x, y; p, q)`.
pub fn abel_sum(spec: &AbelSpec) -> Result<ExactRational> {
    require_positive_m(spec.m)?;
    let m = spec.m;
    let mut binom = BigNat::one();
    let mut sum = ExactRational::zero();
    for k in 0..=m {
        if k > 0 {
            binom *= m - k + 1;
            binom /= k;
        }
        let (left, right) = spec.term(k)?;
        sum = sum + ExactRational::from(&binom) * left * right;
    }
    Ok(sum)
}

/// An ordered tuple of non-negative integers with a fixed sum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    pub parts: Vec<u64>,
}

impl Composition {
    pub fn total(&self) -> u64 {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Iterator over all compositions of `m` into `n` non-negative parts.
///
/// Order is lexicographically descending: `(m,0,..,0)` first and
/// `(0,..,0,m)` last, `C(m+n-1, n-1)` items in total.
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u64>>,
}

/// Compositions of `m` into `n ≥ 1` parts. `n = 0` yields nothing.
pub fn compositions(m: u64, n: usize) -> Compositions {
    let current = (n > 0).then(|| {
        let mut v = vec![0; n];
        v[0] = m;
        v
    });
    Compositions { current }
}

/// Advances `parts` to its lexicographic predecessor. Returns the index
/// that was decremented, or `None` at the last composition.
fn advance(parts: &mut [u64]) -> Option<usize> {
    let n = parts.len();
    let i = (0..n.saturating_sub(1)).rev().find(|&i| parts[i] > 0)?;
    let tail: u64 = parts[i + 1..].iter().sum();
    parts[i] -= 1;
    parts[i + 1] = tail + 1;
    for p in &mut parts[i + 2..] {
        *p = 0;
    }
    Some(i)
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if advance(&mut next).is_some() {
            self.current = Some(next);
        }
        Some(Composition { parts: out })
    }
}

/// Parameters of
/// `B_m(x_1..x_n; p_1..p_n) = Σ m!/(k_1!..k_n!) Π_j (x_j+k_j)^(k_j+p_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HurwitzSpec {
    pub m: u64,
    /// `(x_j, p_j)` pairs, `n ≥ 1` of them.
    pub parts: Vec<(ExactRational, i64)>,
}

impl HurwitzSpec {
    pub fn new(m: u64, parts: Vec<(ExactRational, i64)>) -> Self {
        Self { m, parts }
    }

    /// All `x_j` zero, all `p_j` zero: `B_m(0,..,0; 0,..,0)`.
    pub fn zeros(m: u64, n: usize) -> Self {
        Self::new(m, vec![(ExactRational::zero(), 0); n])
    }

    /// Pairs up `xs` and `ps`, which must have equal non-zero length.
    pub fn from_lists(m: u64, xs: Vec<ExactRational>, ps: Vec<i64>) -> Result<Self> {
        if xs.len() != ps.len() {
            return Err(Error::Domain {
                param: "ps",
                value: ps.len().to_string(),
                reason: "must have the same length as xs",
            });
        }
        Ok(Self::new(m, xs.into_iter().zip(ps).collect()))
    }

    pub fn arity(&self) -> usize {
        self.parts.len()
    }

    pub fn validate(&self) -> Result<()> {
        require_positive_m(self.m)?;
        if self.parts.is_empty() {
            return Err(Error::Domain {
                param: "n",
                value: "0".into(),
                reason: "must be at least 1",
            });
        }
        Ok(())
    }
}

/// `(x_j + k)^(k + p_j)` for every `k` in `0..=m`; `None` marks a
/// singular entry. Only the entries a composition actually reaches are
/// ever inspected.
fn factor_table(spec: &HurwitzSpec) -> Vec<Vec<Option<ExactRational>>> {
    spec.parts
        .iter()
        .map(|(x, p)| {
            (0..=spec.m)
                .map(|k| (x + &ExactRational::from(k as i64)).pow(k as i64 + p))
                .collect()
        })
        .collect()
}

/// Exact value of `B_m(x_1..x_n; p_1..p_n)`.
pub fn hurwitz_sum(spec: &HurwitzSpec) -> Result<ExactRational> {
    spec.validate()?;
    let m = spec.m;
    let factorials: Vec<BigNat> = std::iter::once(BigNat::one())
        .chain((1..=m).scan(BigNat::one(), |f, i| {
            *f *= i;
            Some(f.clone())
        }))
        .collect();
    let table = factor_table(spec);

    let mut parts = vec![0u64; spec.arity()];
    parts[0] = m;
    // The first composition (m, 0, .., 0) has multinomial coefficient 1.
    let mut multinomial = BigNat::one();
    let mut sum = ExactRational::zero();
    loop {
        let mut term = ExactRational::from(&multinomial);
        for (j, &k) in parts.iter().enumerate() {
            let factor = table[j][k as usize]
                .as_ref()
                .ok_or_else(|| Error::SingularTerm {
                    location: format!(
                        "composition {} index j={}",
                        Composition {
                            parts: parts.clone()
                        },
                        j + 1
                    ),
                    exponent: k as i64 + spec.parts[j].1,
                })?;
            term = term * factor;
        }
        sum = sum + term;

        // Update m!/Πk! for the step: k_i drops by one and the tail
        // k_{i+1..} collapses into a single part t = 1 + Σ tail.
        let before = parts.clone();
        let Some(i) = advance(&mut parts) else { break };
        let mut numer = multinomial * before[i];
        for &k in &before[i + 1..] {
            numer *= &factorials[k as usize];
        }
        multinomial = numer / &factorials[parts[i + 1] as usize];
    }
    Ok(sum)
}

/// Rising factorial `α_k(r) = (r+k-1)!/(r-1)! = r (r+1) .. (r+k-1)`.
pub fn alpha(k: u64, r: u64) -> Result<BigNat> {
    if r == 0 {
        return Err(Error::Domain {
            param: "r",
            value: "0".into(),
            reason: "must be at least 1",
        });
    }
    Ok((0..k).fold(BigUint::one(), |acc, i| acc * (r + i)))
}

/// `Σ_{k=0}^m C(m,k) k! (x+y+m)^(m-k)`, which equals `A_m(x, y; 0, 0)`.
pub fn riordan_binomial_rhs(m: u64, x: &ExactRational, y: &ExactRational) -> Result<ExactRational> {
    require_positive_m(m)?;
    let base = x + y + ExactRational::from(m as i64);
    // C(m,k) k! = m!/(m-k)!; Horner in the base.
    let mut falling = BigNat::one();
    let mut acc = ExactRational::zero();
    for k in 0..=m {
        if k > 0 {
            falling *= m - k + 1;
        }
        acc = acc * &base + ExactRational::from(&falling);
    }
    Ok(acc)
}

/// `Σ_{k=0}^m C(m,k) (x_1+..+x_n+m)^(m-k) α_k(n-1)`, which equals
/// `B_m(x_1..x_n; 0..0)`.
pub fn riordan_multinomial_rhs(m: u64, xs: &[ExactRational], n: usize) -> Result<ExactRational> {
    require_positive_m(m)?;
    if n < 2 {
        return Err(Error::Domain {
            param: "n",
            value: n.to_string(),
            reason: "must be at least 2",
        });
    }
    if xs.len() != n {
        return Err(Error::Domain {
            param: "xs",
            value: xs.len().to_string(),
            reason: "must have exactly n entries",
        });
    }
    let base = xs
        .iter()
        .fold(ExactRational::from(m as i64), |acc, x| acc + x);
    let r = n as u64 - 1;
    // Horner from k = 0, where the coefficient of base^(m-k) is
    // C(m,k) α_k(r), updated by the ratio (m-k+1)(r+k-1)/k.
    let mut coeff = BigNat::one();
    let mut acc = ExactRational::zero();
    for k in 0..=m {
        if k > 0 {
            coeff *= (m - k + 1) * (r + k - 1);
            coeff /= k;
        }
        acc = acc * &base + ExactRational::from(&coeff);
    }
    Ok(acc)
}
