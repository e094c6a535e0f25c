use std::fmt;

use crate::error::{Error, Result};

/// Integer polynomial, lowest degree first, with no trailing zero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = -1;
        coeffs[n] += 1;
        IntPolynomial::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn checked_mul(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(IntPolynomial::new(out))
    }

    pub fn checked_sub(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out.push(a.checked_sub(b).ok_or(Error::Overflow)?);
        }
        Ok(IntPolynomial::new(out))
    }

    /// Division with remainder by a divisor whose leading coefficient is a unit (±1),
    /// so the quotient stays integral.
    pub fn div_rem(&self, divisor: &IntPolynomial) -> Result<(IntPolynomial, IntPolynomial)> {
        let lead = divisor.leading();
        if lead != 1 && lead != -1 {
            return Err(Error::invalid(
                "polynomial division requires a divisor with leading coefficient ±1",
            ));
        }
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((IntPolynomial::zero(), self.clone()));
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top] * lead;
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (k, &dc) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                let term = c.checked_mul(dc).ok_or(Error::Overflow)?;
                rem[idx] = rem[idx].checked_sub(term).ok_or(Error::Overflow)?;
            }
        }
        Ok((IntPolynomial::new(quot), IntPolynomial::new(rem)))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, m) => write!(f, "{m}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, m) => write!(f, "{m}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// The `q`-th cyclotomic polynomial, obtained by dividing `x^q - 1` by `Φ_d` for every
/// proper divisor `d` of `q`.
pub fn cyclotomic_poly(q: u32) -> Result<IntPolynomial> {
    if q == 0 {
        return Err(Error::invalid("cyclotomic polynomial order must be at least 1"));
    }
    let divisors: Vec<u32> = (1..=q).filter(|d| q % d == 0).collect();
    let mut known: Vec<(u32, IntPolynomial)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut denom = IntPolynomial::one();
        for (e, phi) in &known {
            if d % e == 0 {
                denom = denom.checked_mul(phi)?;
            }
        }
        let (quot, rem) = IntPolynomial::x_pow_minus_one(d as usize).div_rem(&denom)?;
        debug_assert!(rem.is_zero());
        known.push((d, quot));
    }
    Ok(known.pop().map(|(_, p)| p).unwrap())
}

/// Euler's totient.
pub fn totient(q: u32) -> u32 {
    let mut n = q;
    let mut result = q;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}
