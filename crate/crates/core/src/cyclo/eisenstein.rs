use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use super::CycElem;
use crate::error::{Error, Result};

/// `a + b·ζ₆` with `ζ₆² = ζ₆ - 1`: the canonical form of `Z[ζ₆]` specialised to a pair of
/// integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

const ROOTS: [Eisenstein; 6] = [
    Eisenstein { a: 1, b: 0 },
    Eisenstein { a: 0, b: 1 },
    Eisenstein { a: -1, b: 1 },
    Eisenstein { a: -1, b: 0 },
    Eisenstein { a: 0, b: -1 },
    Eisenstein { a: 1, b: -1 },
];

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub const fn from_int(k: i64) -> Self {
        Eisenstein { a: k, b: 0 }
    }

    #[inline]
    pub fn root(j: u32) -> Self {
        ROOTS[(j % 6) as usize]
    }

    #[inline]
    pub fn mul(self, o: Eisenstein) -> Self {
        Eisenstein {
            a: self.a * o.a - self.b * o.b,
            b: self.a * o.b + self.b * o.a + self.b * o.b,
        }
    }

    #[inline]
    pub fn mul_root(self, j: u32) -> Self {
        self.mul(Self::root(j))
    }

    #[inline]
    pub fn conj(self) -> Self {
        Eisenstein { a: self.a + self.b, b: -self.b }
    }

    /// `|x|²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b + self.b * self.b
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn div_exact(self, k: i64) -> Option<Self> {
        if k < 1 || self.a % k != 0 || self.b % k != 0 {
            return None;
        }
        Some(Eisenstein { a: self.a / k, b: self.b / k })
    }

    pub fn from_cyc(e: &CycElem) -> Result<Self> {
        if e.q() != 6 {
            return Err(Error::invalid(format!("expected q = 6, got q = {}", e.q())));
        }
        let r = e.reduced()?;
        Ok(Eisenstein { a: r[0], b: r[1] })
    }

    pub fn to_cyc(self) -> CycElem {
        CycElem::new(6, vec![self.a, self.b, 0, 0, 0, 0]).expect("length 6")
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    #[inline]
    fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    #[inline]
    fn sub(self, o: Eisenstein) -> Eisenstein {
        Eisenstein { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein { a: -self.a, b: -self.b }
    }
}

impl AddAssign for Eisenstein {
    #[inline]
    fn add_assign(&mut self, o: Eisenstein) {
        self.a += o.a;
        self.b += o.b;
    }
}

impl SubAssign for Eisenstein {
    #[inline]
    fn sub_assign(&mut self, o: Eisenstein) {
        self.a -= o.a;
        self.b -= o.b;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_match_generic_reduction() {
        for j in 0..6 {
            assert_eq!(Eisenstein::from_cyc(&CycElem::root(6, j)).unwrap(), Eisenstein::root(j));
        }
    }

    #[test]
    fn rotation_and_conjugation() {
        for j in 0..6 {
            for k in 0..6 {
                assert_eq!(Eisenstein::root(j).mul_root(k), Eisenstein::root(j + k));
            }
            assert_eq!(Eisenstein::root(j).conj(), Eisenstein::root((6 - j) % 6));
            assert_eq!(Eisenstein::root(j).norm(), 1);
        }
        assert_eq!(Eisenstein::new(3, 2).norm(), 19);
    }

    #[test]
    fn division() {
        assert_eq!(Eisenstein::new(7, 14).div_exact(7), Some(Eisenstein::new(1, 2)));
        assert_eq!(Eisenstein::new(3, 1).div_exact(7), None);
    }
}
