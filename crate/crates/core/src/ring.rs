//! Arithmetic backends for the search: the element type and its exact operations
//! are chosen per engine, so the hot loops stay monomorphic.

use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use crate::cyclo::{reducer, CycElem, Eisenstein, Reducer};
use crate::error::{Error, Result};

pub trait RootRing: Send + Sync {
    type Elem: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn q(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn from_int(&self, k: i64) -> Self::Elem;
    fn root(&self, j: u32) -> Self::Elem;
    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem);
    fn sub_assign(&self, a: &mut Self::Elem, b: &Self::Elem);
    fn mul_root(&self, a: &Self::Elem, j: u32) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn div_exact(&self, a: &Self::Elem, k: i64) -> Option<Self::Elem>;
    /// Largest absolute coefficient of the canonical form.
    fn max_abs_coeff(&self, a: &Self::Elem) -> i64;
    fn to_cyc(&self, a: &Self::Elem) -> CycElem;
    fn from_cyc(&self, c: &CycElem) -> Result<Self::Elem>;

    fn add_root(&self, a: &mut Self::Elem, j: u32) {
        let r = self.root(j);
        self.add_assign(a, &r);
    }

    fn sub_root(&self, a: &mut Self::Elem, j: u32) {
        let r = self.root(j);
        self.sub_assign(a, &r);
    }

    fn sum_roots(&self, exps: impl IntoIterator<Item = u32>) -> Self::Elem
    where
        Self: Sized,
    {
        let mut acc = self.zero();
        for j in exps {
            self.add_root(&mut acc, j);
        }
        acc
    }

    /// `|a|² == n`.
    fn norm_equals(&self, a: &Self::Elem, n: i64) -> bool {
        let c = self.to_cyc(a);
        match c.mul(&c.conj()) {
            Ok(p) => p == CycElem::from_int(c.q(), n),
            Err(_) => false,
        }
    }
}

/// Any `q`: elements are canonical coefficient vectors modulo `Φ_q`.
#[derive(Debug, Clone)]
pub struct GenericRing {
    q: u32,
    red: Arc<Reducer>,
}

impl GenericRing {
    pub fn new(q: u32) -> Result<Self> {
        Ok(GenericRing { q, red: reducer(q)? })
    }
}

impl RootRing for GenericRing {
    type Elem = Vec<i64>;

    fn q(&self) -> u32 {
        self.q
    }

    fn zero(&self) -> Vec<i64> {
        vec![0; self.red.degree()]
    }

    fn from_int(&self, k: i64) -> Vec<i64> {
        let mut v = self.zero();
        v[0] = k;
        v
    }

    fn root(&self, j: u32) -> Vec<i64> {
        self.red.power(j as usize).to_vec()
    }

    fn add_assign(&self, a: &mut Vec<i64>, b: &Vec<i64>) {
        for (x, y) in a.iter_mut().zip(b) {
            *x += *y;
        }
    }

    fn sub_assign(&self, a: &mut Vec<i64>, b: &Vec<i64>) {
        for (x, y) in a.iter_mut().zip(b) {
            *x -= *y;
        }
    }

    fn add_root(&self, a: &mut Vec<i64>, j: u32) {
        for (x, y) in a.iter_mut().zip(self.red.power(j as usize)) {
            *x += *y;
        }
    }

    fn sub_root(&self, a: &mut Vec<i64>, j: u32) {
        for (x, y) in a.iter_mut().zip(self.red.power(j as usize)) {
            *x -= *y;
        }
    }

    fn mul_root(&self, a: &Vec<i64>, j: u32) -> Vec<i64> {
        let mut out = self.zero();
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &t) in out.iter_mut().zip(self.red.power(i + j as usize)) {
                *o += c * t;
            }
        }
        out
    }

    fn is_zero(&self, a: &Vec<i64>) -> bool {
        a.iter().all(|&c| c == 0)
    }

    fn div_exact(&self, a: &Vec<i64>, k: i64) -> Option<Vec<i64>> {
        if k < 1 || a.iter().any(|c| c % k != 0) {
            return None;
        }
        Some(a.iter().map(|c| c / k).collect())
    }

    fn max_abs_coeff(&self, a: &Vec<i64>) -> i64 {
        a.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    fn to_cyc(&self, a: &Vec<i64>) -> CycElem {
        let mut coeffs = a.clone();
        coeffs.resize(self.q as usize, 0);
        CycElem::new(self.q, coeffs).expect("length q")
    }

    fn from_cyc(&self, c: &CycElem) -> Result<Vec<i64>> {
        if c.q() != self.q {
            return Err(Error::invalid(format!("expected q = {}, got q = {}", self.q, c.q())));
        }
        c.reduced()
    }
}

/// `q = 6` only: elements are [`Eisenstein`] pairs.
#[derive(Debug, Clone, Copy, Default)]
pub struct SixthRing;

impl RootRing for SixthRing {
    type Elem = Eisenstein;

    fn q(&self) -> u32 {
        6
    }

    fn zero(&self) -> Eisenstein {
        Eisenstein::ZERO
    }

    fn from_int(&self, k: i64) -> Eisenstein {
        Eisenstein::from_int(k)
    }

    #[inline]
    fn root(&self, j: u32) -> Eisenstein {
        Eisenstein::root(j)
    }

    #[inline]
    fn add_assign(&self, a: &mut Eisenstein, b: &Eisenstein) {
        *a += *b;
    }

    #[inline]
    fn sub_assign(&self, a: &mut Eisenstein, b: &Eisenstein) {
        *a -= *b;
    }

    #[inline]
    fn mul_root(&self, a: &Eisenstein, j: u32) -> Eisenstein {
        a.mul_root(j)
    }

    #[inline]
    fn is_zero(&self, a: &Eisenstein) -> bool {
        a.is_zero()
    }

    fn div_exact(&self, a: &Eisenstein, k: i64) -> Option<Eisenstein> {
        a.div_exact(k)
    }

    fn max_abs_coeff(&self, a: &Eisenstein) -> i64 {
        a.a.abs().max(a.b.abs())
    }

    fn to_cyc(&self, a: &Eisenstein) -> CycElem {
        a.to_cyc()
    }

    fn from_cyc(&self, c: &CycElem) -> Result<Eisenstein> {
        Eisenstein::from_cyc(c)
    }

    fn norm_equals(&self, a: &Eisenstein, n: i64) -> bool {
        a.norm() == n
    }
}
