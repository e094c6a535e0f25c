//! Exact arithmetic on integer combinations of `q`-th roots of unity.
//!
//! A [`CycElem`] stores the multiplicity of each power `ζ^j` (`ζ = e^{2πi/q}`) as a
//! length-`q` integer vector. Two such vectors describe the same complex number exactly
//! when their difference, read as a polynomial in `x`, is divisible by the cyclotomic
//! polynomial `Φ_q`. Reduction modulo `Φ_q` therefore gives a canonical representative
//! of degree below `φ(q)`, and all equality, zero and divisibility tests go through it.

mod eisenstein;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use eisenstein::Eisenstein;
pub use poly::{cyclotomic_poly, totient, IntPolynomial};

/// Precomputed `x^j mod Φ_q` for `j in 0..q`.
#[derive(Debug)]
pub(crate) struct Reducer {
    q: u32,
    degree: usize,
    table: Vec<Vec<i64>>,
}

impl Reducer {
    fn build(q: u32) -> Result<Reducer> {
        let phi = cyclotomic_poly(q)?;
        let degree = phi.degree().unwrap_or(0);
        let pc = phi.coeffs();
        let mut table = Vec::with_capacity(q as usize);
        // deg Φ_q = φ(q) >= 1
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..q {
            table.push(cur.clone());
            // multiply by x, then fold the x^degree term back with the monic Φ_q.
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c = c
                        .checked_sub(top.checked_mul(pc[i]).ok_or(Error::Overflow)?)
                        .ok_or(Error::Overflow)?;
                }
            }
        }
        Ok(Reducer { q, degree, table })
    }

    pub(crate) fn degree(&self) -> usize {
        self.degree
    }

    pub(crate) fn power(&self, j: usize) -> &[i64] {
        &self.table[j % self.q as usize]
    }

    fn reduce_wide<I: IntoIterator<Item = i128>>(&self, counts: I) -> Vec<i128> {
        let mut out = vec![0i128; self.degree];
        for (j, c) in counts.into_iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &t) in out.iter_mut().zip(&self.table[j]) {
                *o += c * t as i128;
            }
        }
        out
    }

    pub(crate) fn reduce(&self, counts: &[i64]) -> Result<Vec<i64>> {
        self.reduce_wide(counts.iter().map(|&c| c as i128))
            .into_iter()
            .map(|v| i64::try_from(v).map_err(|_| Error::Overflow))
            .collect()
    }
}

pub(crate) fn reducer(q: u32) -> Result<Arc<Reducer>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Reducer>>>> = OnceLock::new();
    if q == 0 {
        return Err(Error::invalid("root order q must be at least 1"));
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(r) = cache.lock().unwrap().get(&q) {
        return Ok(Arc::clone(r));
    }
    let built = Arc::new(Reducer::build(q)?);
    cache.lock().unwrap().insert(q, Arc::clone(&built));
    Ok(built)
}

/// An element of `Z[ζ_q]` given by the multiplicity of each root `ζ^j`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CycElem {
    q: u32,
    coeffs: Vec<i64>,
}

impl CycElem {
    pub fn new(q: u32, coeffs: Vec<i64>) -> Result<CycElem> {
        if q == 0 {
            return Err(Error::invalid("root order q must be at least 1"));
        }
        if coeffs.len() != q as usize {
            return Err(Error::invalid(format!(
                "coefficient vector has length {}, expected q = {q}",
                coeffs.len()
            )));
        }
        Ok(CycElem { q, coeffs })
    }

    pub fn zero(q: u32) -> CycElem {
        assert!(q >= 1, "root order q must be at least 1");
        CycElem { q, coeffs: vec![0; q as usize] }
    }

    /// `ζ^j`.
    pub fn root(q: u32, j: u32) -> CycElem {
        let mut e = CycElem::zero(q);
        e.coeffs[(j % q) as usize] = 1;
        e
    }

    pub fn from_int(q: u32, k: i64) -> CycElem {
        let mut e = CycElem::zero(q);
        e.coeffs[0] = k;
        e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn same_modulus(&self, other: &CycElem) -> Result<()> {
        if self.q != other.q {
            return Err(Error::invalid(format!(
                "modulus mismatch: q = {} vs q = {}",
                self.q, other.q
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &CycElem) -> Result<CycElem> {
        self.same_modulus(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CycElem { q: self.q, coeffs })
    }

    pub fn sub(&self, other: &CycElem) -> Result<CycElem> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<CycElem> {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Result<CycElem> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(CycElem { q: self.q, coeffs })
    }

    /// Adds one copy of `ζ^j` in place.
    pub fn add_root(&mut self, j: u32) -> Result<()> {
        let slot = &mut self.coeffs[(j % self.q) as usize];
        *slot = slot.checked_add(1).ok_or(Error::Overflow)?;
        Ok(())
    }

    /// `ζ^j · a`: a cyclic shift of the multiplicities.
    pub fn mul_root(&self, j: u32) -> CycElem {
        let q = self.q as usize;
        let j = j as usize % q;
        let mut coeffs = vec![0; q];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(k + j) % q] = c;
        }
        CycElem { q: self.q, coeffs }
    }

    /// Complex conjugate: `ζ^j ↦ ζ^{-j}`.
    pub fn conj(&self) -> CycElem {
        let q = self.q as usize;
        let mut coeffs = vec![0; q];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[(q - k) % q] = c;
        }
        CycElem { q: self.q, coeffs }
    }

    /// Product in `Z[x]/(x^q - 1)`, which maps onto `Z[ζ_q]`.
    pub fn mul(&self, other: &CycElem) -> Result<CycElem> {
        self.same_modulus(other)?;
        let q = self.q as usize;
        let mut coeffs = vec![0i64; q];
        for (j, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (k, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow)?;
                let slot = &mut coeffs[(j + k) % q];
                *slot = slot.checked_add(t).ok_or(Error::Overflow)?;
            }
        }
        Ok(CycElem { q: self.q, coeffs })
    }

    /// Coefficients of the canonical representative modulo `Φ_q` (length `φ(q)`).
    pub fn reduced(&self) -> Result<Vec<i64>> {
        reducer(self.q)?.reduce(&self.coeffs)
    }

    /// The canonical representative, padded back to a length-`q` vector.
    pub fn canonical(&self) -> Result<CycElem> {
        let mut coeffs = self.reduced()?;
        coeffs.resize(self.q as usize, 0);
        Ok(CycElem { q: self.q, coeffs })
    }

    /// Whether the element is exactly `0` as a complex number.
    pub fn is_zero(&self) -> bool {
        let r = reducer(self.q).expect("q >= 1 by construction");
        r.reduce_wide(self.coeffs.iter().map(|&c| c as i128))
            .iter()
            .all(|&c| c == 0)
    }

    /// `b` with `k·b = self`, when the canonical form is divisible by `k` coefficientwise.
    pub fn div_exact(&self, k: i64) -> Result<CycElem> {
        if k < 1 {
            return Err(Error::invalid(format!("divisor must be positive, got {k}")));
        }
        let mut coeffs = self.reduced()?;
        for c in coeffs.iter_mut() {
            if *c % k != 0 {
                return Err(Error::NotDivisible { divisor: k });
            }
            *c /= k;
        }
        coeffs.resize(self.q as usize, 0);
        Ok(CycElem { q: self.q, coeffs })
    }

    /// Floating-point value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let q = self.q as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (j, &c)| {
            let t = std::f64::consts::TAU * j as f64 / q;
            (re + c as f64 * t.cos(), im + c as f64 * t.sin())
        })
    }
}

impl PartialEq for CycElem {
    fn eq(&self, other: &CycElem) -> bool {
        if self.q != other.q {
            return false;
        }
        let r = reducer(self.q).expect("q >= 1 by construction");
        r.reduce_wide(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| a as i128 - b as i128),
        )
        .iter()
        .all(|&c| c == 0)
    }
}

impl Eq for CycElem {}

impl fmt::Display for CycElem {
    /// Prints the canonical form, e.g. `3 + 2z` for `3 + 2ζ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let reduced = match self.reduced() {
            Ok(r) => r,
            Err(_) => return write!(f, "<overflow>"),
        };
        let mut first = true;
        for (k, &c) in reduced.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            first = false;
            let m = c.unsigned_abs();
            match (k, m) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "z")?,
                (1, m) => write!(f, "{m}z")?,
                (k, 1) => write!(f, "z^{k}")?,
                (k, m) => write!(f, "{m}z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6(v: [i64; 6]) -> CycElem {
        CycElem::new(6, v.to_vec()).unwrap()
    }

    #[test]
    fn zero_tests() {
        assert!(c6([1, 0, 0, 1, 0, 0]).is_zero());
        assert!(c6([1, 0, 1, 0, 1, 0]).is_zero());
        assert!(!c6([2, 0, 0, 1, 0, 0]).is_zero());
        assert!(CycElem::new(2, vec![1, 1]).unwrap().is_zero());
        assert!(CycElem::new(1, vec![0]).unwrap().is_zero());
        assert!(!CycElem::new(1, vec![3]).unwrap().is_zero());
    }

    #[test]
    fn componentwise_ops() {
        assert_eq!(
            c6([1, 0, 0, 0, 0, 0]).add(&c6([0, 1, 0, 0, 0, 0])).unwrap().coeffs(),
            &[1, 1, 0, 0, 0, 0]
        );
        assert_eq!(c6([1, 0, 0, 1, 0, 0]).neg().unwrap().coeffs(), &[-1, 0, 0, -1, 0, 0]);
        assert_eq!(c6([1, 1, 0, 0, 0, 0]).scale(3).unwrap().coeffs(), &[3, 3, 0, 0, 0, 0]);
        let other = CycElem::root(4, 1);
        assert!(matches!(c6([0; 6]).add(&other), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn overflow_is_reported() {
        let big = CycElem::from_int(6, i64::MAX);
        assert_eq!(big.add(&CycElem::from_int(6, 1)), Err(Error::Overflow));
        assert_eq!(big.scale(2).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn rotation_and_conjugation() {
        assert_eq!(c6([1, 0, 0, 0, 0, 0]).mul_root(2).coeffs(), &[0, 0, 1, 0, 0, 0]);
        assert_eq!(c6([1, 0, 0, 1, 0, 0]).mul_root(3).coeffs(), &[1, 0, 0, 1, 0, 0]);
        assert_eq!(c6([0, 1, 0, 0, 0, 0]).mul_root(5).coeffs(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(c6([1, 0, 0, 0, 0, 0]).conj().coeffs(), &[1, 0, 0, 0, 0, 0]);
        assert_eq!(c6([0, 1, 0, 0, 0, 0]).conj().coeffs(), &[0, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            c6([7, 0, 0, 0, 0, 0]).div_exact(7).unwrap().coeffs(),
            &[1, 0, 0, 0, 0, 0]
        );
        assert_eq!(
            c6([3, 1, 0, 0, 0, 0]).div_exact(7),
            Err(Error::NotDivisible { divisor: 7 })
        );
        assert_eq!(
            c6([7, 14, 0, 0, 0, 0]).div_exact(7).unwrap().coeffs(),
            &[1, 2, 0, 0, 0, 0]
        );
        // 7ζ² reduces to -7 + 7ζ before dividing.
        assert_eq!(
            c6([0, 0, 7, 0, 0, 0]).div_exact(7).unwrap().coeffs(),
            &[-1, 1, 0, 0, 0, 0]
        );
        assert!(c6([1, 0, 0, 0, 0, 0]).div_exact(0).is_err());
    }

    #[test]
    fn value_equality_uses_reduction() {
        // 1 + ζ² = ζ for q = 6
        assert_eq!(c6([1, 0, 1, 0, 0, 0]), c6([0, 1, 0, 0, 0, 0]));
        assert_ne!(c6([1, 0, 0, 0, 0, 0]), CycElem::from_int(3, 1));
    }

    #[test]
    fn display_uses_canonical_form() {
        assert_eq!(c6([4, 2, 0, 1, 0, 0]).to_string(), "3 + 2z");
        assert_eq!(c6([1, 0, 0, 1, 0, 0]).to_string(), "0");
        assert_eq!(c6([0, 0, 1, 0, 0, 0]).to_string(), "-1 + z");
    }

    #[test]
    fn reduction_table_for_sixth_roots() {
        let r = reducer(6).unwrap();
        let expected: [[i64; 2]; 6] = [[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]];
        for (j, e) in expected.iter().enumerate() {
            assert_eq!(r.power(j), e);
        }
    }
}
