use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::fmt_rational;
use super::Rational;

/// An element `a + b*sqrt(2)` of the quadratic field Q(sqrt 2).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadExt {
    pub a: Rational,
    pub b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(a: i64) -> Self {
        Self::rational(Rational::from_integer(a.into()))
    }

    pub fn sqrt2() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// `1/sqrt(2) = sqrt(2)/2`.
    pub fn inv_sqrt2() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::new(1.into(), 2.into()),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a^2 - 2 b^2`; nonzero for nonzero elements since sqrt 2 is
    /// irrational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(2.into()) * &self.b * &self.b
    }

    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Self {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            a: &self.a * r,
            b: &self.b * r,
        }
    }
}

impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let two = Rational::from_integer(2.into());
        QuadExt {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl Div for &QuadExt {
    type Output = QuadExt;
    fn div(self, rhs: &QuadExt) -> QuadExt {
        self * &rhs.recip().expect("division by zero in Q(sqrt 2)")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl AddAssign<&QuadExt> for QuadExt {
    fn add_assign(&mut self, rhs: &QuadExt) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QuadExt {
            type Output = QuadExt;
            fn $m(self, rhs: QuadExt) -> QuadExt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        -&self
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rt = |b: &Rational| {
            if b.is_one() {
                "sqrt2".to_string()
            } else if (-b).is_one() {
                "-sqrt2".to_string()
            } else {
                format!("{}*sqrt2", fmt_rational(b))
            }
        };
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => f.write_str(&fmt_rational(&self.a)),
            (true, false) => f.write_str(&rt(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}", fmt_rational(&self.a), sign, rt(&self.b.abs()))
            }
        }
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qe(a: i64, b: i64) -> QuadExt {
        QuadExt::new(Rational::from_integer(a.into()), Rational::from_integer(b.into()))
    }

    #[test]
    fn product_formula() {
        // (1 + 2r)(3 - r) = 3 - 4 + (6 - 1) r
        assert_eq!(&qe(1, 2) * &qe(3, -1), qe(-1, 5));
        assert_eq!(&QuadExt::sqrt2() * &QuadExt::sqrt2(), qe(2, 0));
        assert_eq!(&QuadExt::sqrt2() * &QuadExt::inv_sqrt2(), qe(1, 0));
    }

    #[test]
    fn reciprocal() {
        let x = qe(3, -2);
        assert_eq!(&x * &x.recip().unwrap(), QuadExt::one());
        assert!(QuadExt::zero().recip().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(qe(0, 1).to_string(), "sqrt2");
        assert_eq!(qe(2, -3).to_string(), "2 - 3*sqrt2");
        assert_eq!(qe(-5, 0).to_string(), "-5");
    }
}
