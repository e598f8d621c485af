//! Exact arithmetic in cyclotomic fields Q(zeta_m).
//!
//! A value is a rational vector over the redundant power basis
//! `1, zeta, ..., zeta^(m-1)`; multiplication is cyclic convolution.
//! Equality and zero tests reduce modulo the m-th cyclotomic polynomial, so
//! they are exact despite the redundancy. Conductors here are group
//! exponents, which stay small.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_rational::Ratio;
use num_traits::{One, Zero};

type Rat = Ratio<i64>;

/// An element of Q(zeta_m).
#[derive(Debug, Clone)]
pub struct Cyc {
    m: u32,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero(m: u32) -> Cyc {
        assert!(m >= 1);
        Cyc {
            m,
            coeffs: vec![Rat::zero(); m as usize],
        }
    }

    pub fn one(m: u32) -> Cyc {
        Self::from_integer(m, 1)
    }

    pub fn from_integer(m: u32, value: i64) -> Cyc {
        let mut c = Self::zero(m);
        c.coeffs[0] = Rat::from_integer(value);
        c
    }

    /// `zeta_m^k`.
    pub fn root(m: u32, k: u32) -> Cyc {
        let mut c = Self::zero(m);
        c.coeffs[(k % m) as usize] = Rat::one();
        c
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        debug_assert_eq!(self.m, other.m);
        Cyc {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn add_assign(&mut self, other: &Cyc) {
        debug_assert_eq!(self.m, other.m);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        debug_assert_eq!(self.m, other.m);
        Cyc {
            m: self.m,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Cyclic convolution (uses `zeta^m = 1`).
    pub fn mul(&self, other: &Cyc) -> Cyc {
        debug_assert_eq!(self.m, other.m);
        let m = self.m as usize;
        let mut out = vec![Rat::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[(i + j) % m] += a * b;
                }
            }
        }
        Cyc {
            m: self.m,
            coeffs: out,
        }
    }

    pub fn scale(&self, k: Rat) -> Cyc {
        Cyc {
            m: self.m,
            coeffs: self.coeffs.iter().map(|a| a * k).collect(),
        }
    }

    /// Complex conjugation: `zeta^i -> zeta^(m-i)`.
    pub fn conj(&self) -> Cyc {
        let m = self.m as usize;
        let mut out = vec![Rat::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[(m - i) % m] += a;
        }
        Cyc {
            m: self.m,
            coeffs: out,
        }
    }

    /// Canonical coefficients modulo the m-th cyclotomic polynomial (length
    /// `phi(m)`).
    pub fn reduced(&self) -> Vec<Rat> {
        let phi = cyclotomic_polynomial(self.m);
        let deg = phi.len() - 1; // phi(m)
        let mut rem: Vec<Rat> = self.coeffs.clone();
        // Divide by the monic integer polynomial phi, keeping the remainder.
        for i in (deg..rem.len()).rev() {
            let lead = rem[i];
            if lead.is_zero() {
                continue;
            }
            for (k, &c) in phi.iter().enumerate() {
                let idx = i + k - deg;
                rem[idx] -= lead * Rat::from_integer(c);
            }
            debug_assert!(rem[i].is_zero());
        }
        rem.truncate(deg);
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|c| c.is_zero())
    }

    /// True when the value is the rational integer `k`.
    pub fn is_integer(&self, k: i64) -> bool {
        let mut red = self.reduced();
        let head = std::mem::replace(&mut red[0], Rat::zero());
        head == Rat::from_integer(k) && red.iter().all(|c| c.is_zero())
    }

    /// Total order on canonical forms, for deterministic table layouts.
    pub fn canonical_cmp(&self, other: &Cyc) -> Ordering {
        debug_assert_eq!(self.m, other.m);
        self.reduced().cmp(&other.reduced())
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.sub(other).is_zero()
    }
}
impl Eq for Cyc {}

impl fmt::Display for Cyc {
    /// Prints the reduced form as a polynomial in `e(m)` = exp(2*pi*i/m).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let red = self.reduced();
        let mut terms: Vec<String> = Vec::new();
        for (i, c) in red.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && i > 0 {
                String::new()
            } else if (-c).is_one() && i > 0 {
                "-".to_string()
            } else if c.denom() == &1 {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            };
            let base = match i {
                0 => {
                    if coeff.is_empty() || coeff == "-" {
                        format!("{coeff}1")
                    } else {
                        coeff.clone()
                    }
                }
                1 => format!("{coeff}e({})", self.m),
                _ => format!("{coeff}e({})^{i}", self.m),
            };
            if terms.is_empty() || base.starts_with('-') {
                terms.push(base);
            } else {
                terms.push(format!("+{base}"));
            }
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.concat())
    }
}

/// Coefficients of the m-th cyclotomic polynomial, constant term first,
/// computed by exact division of `x^m - 1` by the proper cyclotomic factors.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return hit.clone();
    }
    let result = compute_cyclotomic(m);
    cache.lock().unwrap().insert(m, result.clone());
    result
}

fn compute_cyclotomic(m: u32) -> Vec<i64> {
    // x^m - 1
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            poly = poly_div_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Exact division of integer polynomials (monic divisor), panics on a
/// nonzero remainder.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let lead = rem[i];
        if lead == 0 {
            continue;
        }
        quot[i - dd] = lead;
        for (k, &c) in den.iter().enumerate() {
            rem[i - dd + k] -= lead * c;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn sums_of_roots_vanish() {
        // 1 + zeta + ... + zeta^(m-1) = 0 for m > 1.
        for m in 2..=24u32 {
            let mut s = Cyc::zero(m);
            for k in 0..m {
                s.add_assign(&Cyc::root(m, k));
            }
            assert!(s.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn multiplication_wraps() {
        let m = 12;
        let a = Cyc::root(m, 7);
        let b = Cyc::root(m, 9);
        assert_eq!(a.mul(&b), Cyc::root(m, 4));
        // zeta^k * conj(zeta^k) = 1
        for k in 0..m {
            let r = Cyc::root(m, k);
            assert!(r.mul(&r.conj()).is_integer(1));
        }
    }

    #[test]
    fn golden_ratio_style_identities() {
        // zeta_6 satisfies zeta^2 = zeta - 1.
        let z = Cyc::root(6, 1);
        let z2 = z.mul(&z);
        assert_eq!(z2, z.sub(&Cyc::one(6)));
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(Cyc::root(4, 1).to_string(), "e(4)");
        assert_eq!(Cyc::root(4, 3).to_string(), "-e(4)");
        assert_eq!(Cyc::from_integer(4, -3).to_string(), "-3");
        assert_eq!(Cyc::zero(5).to_string(), "0");
        let mut v = Cyc::one(3);
        v.add_assign(&Cyc::root(3, 1).scale(Rat::from_integer(2)));
        assert_eq!(v.to_string(), "1+2e(3)");
    }
}
