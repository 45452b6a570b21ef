use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::fmt_rational;
use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// A quotient `num / den` of polynomials in `H`.
///
/// Always stored in canonical form: `gcd(num, den) = 1` and `den` monic, so
/// structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// The symbol `H`.
    pub fn h() -> Self {
        Self::from_poly(Polynomial::h())
    }

    pub fn from_poly(num: Polynomial) -> Self {
        Self {
            num,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(Polynomial::from_int(c))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::constant(Rational::new(n.into(), d.into()))
    }

    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Polynomial, den: Polynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_rem(&g).0, den.div_rem(&g).0)
            }
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self * &Self {
            num: rhs.den.clone(),
            den: rhs.num.clone(),
        }
        .renormalized())
    }

    fn renormalized(self) -> Self {
        Self::normalized(self.num, self.den)
    }

    /// `f(H + k)`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 || (self.num.is_constant() && self.den.is_constant()) {
            return self.clone();
        }
        let k = Rational::from_integer(k.into());
        // Shifting is a ring automorphism, so the shifted pair stays coprime
        // and the denominator stays monic.
        Self {
            num: self.num.shift(&k),
            den: self.den.shift(&k),
        }
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::PoleEvaluation(x.clone()));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.is_zero() {
            return Self {
                num: rnum,
                den: rhs.den.clone(),
            };
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rnum;
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::normalized(num, self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): the sum a(d/g) + c(b/g) over
        // (b/g)(d/g)g can only share factors with g, so a trivial g means
        // the result is already reduced.
        let g = self.den.gcd(&rhs.den);
        let (ld, rd) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_rem(&g).0, rhs.den.div_rem(&g).0)
        };
        let num = &(&self.num * &rd) + &(&rnum * &ld);
        if num.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return Self {
                num,
                den: &self.den * &rhs.den,
            };
        }
        let common = num.gcd(&g);
        let (num, g) = if common.is_one() {
            (num, g)
        } else {
            (num.div_rem(&common).0, g.div_rem(&common).0)
        };
        Self {
            num,
            den: &(&ld * &rd) * &g,
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(&self.num * &rhs.num);
        }
        if let Some(c) = self.constant_value() {
            return Self {
                num: rhs.num.scale(&c),
                den: rhs.den.clone(),
            };
        }
        if let Some(c) = rhs.constant_value() {
            return Self {
                num: self.num.scale(&c),
                den: self.den.clone(),
            };
        }
        // Cross-cancel before multiplying to keep degrees small.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (an, bd) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_rem(&g1).0, rhs.den.div_rem(&g1).0)
        };
        let (bn, ad) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_rem(&g2).0, self.den.div_rem(&g2).0)
        };
        let num = &an * &bn;
        let den = &ad * &bd;
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    /// Splits the denominator into linear factors `(H - r)^m` with rational
    /// `r`, sorted by decreasing root, plus whatever does not split.
    fn factor_den(&self) -> (Vec<(Rational, u32)>, Polynomial) {
        let mut rest = self.den.clone();
        let mut roots: Vec<(Rational, u32)> = Vec::new();
        while let Some(r) = find_rational_root(&rest) {
            let lin = Polynomial::linear_root(r.clone());
            let mut m = 0;
            loop {
                let (q, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = q;
                m += 1;
            }
            roots.push((r, m));
        }
        roots.sort_by(|a, b| b.0.cmp(&a.0));
        (roots, rest)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn find_rational_root(p: &Polynomial) -> Option<Rational> {
    if p.degree().unwrap_or(0) == 0 {
        return None;
    }
    if p.coeff(0).is_zero() {
        return Some(Rational::zero());
    }
    let (_, ints) = p.integer_content();
    let a0 = ints.first()?.abs().to_u64()?;
    let an = ints.last()?.abs().to_u64()?;
    if a0 > 1 << 40 || an > 1 << 40 {
        return None;
    }
    let mut cands: Vec<Rational> = Vec::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            let r = Rational::new(BigInt::from(num), BigInt::from(den));
            cands.push(r.clone());
            cands.push(-r);
        }
    }
    cands.sort();
    cands.dedup();
    cands.into_iter().find(|r| p.eval(r).is_zero())
}

fn fmt_root_factor(r: &Rational, m: u32) -> String {
    let base = if r.is_zero() {
        "H".to_string()
    } else if r.is_positive() {
        format!("(H - {})", fmt_rational(r))
    } else {
        format!("(H + {})", fmt_rational(&-r))
    };
    if m == 1 {
        base
    } else {
        format!("{base}^{m}")
    }
}

fn fmt_int_poly(coeffs: &[BigInt]) -> String {
    Polynomial::from_coeffs(
        coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
    .to_string()
}

impl fmt::Display for RationalFunction {
    /// Canonical text: `2/H`, `-1/(H - 1)`, `1/(2*(H - 2)*(H - 1))`,
    /// `(H^2 - H - 1)/((H - 1)*H*(H + 1))`. Accepted back by the expression
    /// parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let (content, prim) = self.num.integer_content();
        let p = content.numer().clone();
        let q = content.denom().clone();
        let prim_is_one = prim.len() == 1;
        let prim_str = fmt_int_poly(&prim);
        let multi_term = prim.iter().filter(|c| !c.is_zero()).count() > 1;

        let mut num_str = String::new();
        if prim_is_one {
            num_str.push_str(&p.to_string());
        } else {
            if p.is_negative() {
                num_str.push('-');
            }
            let pa = p.abs();
            if !pa.is_one() {
                num_str.push_str(&format!("{pa}*"));
            }
            if multi_term {
                num_str.push_str(&format!("({prim_str})"));
            } else {
                num_str.push_str(&prim_str);
            }
        }

        let (roots, rest) = self.factor_den();
        let mut parts: Vec<String> = Vec::new();
        if !q.is_one() {
            parts.push(q.to_string());
        }
        for (r, m) in &roots {
            parts.push(fmt_root_factor(r, *m));
        }
        if !rest.is_constant() {
            parts.push(format!("({rest})"));
        }
        let den_str = if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            format!("({})", parts.join("*"))
        };
        write!(f, "{num_str}/{den_str}")
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, false)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self.add_impl(rhs, true)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        self.mul_impl(rhs)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics on a zero divisor; use [`RationalFunction::try_div`] to get an
    /// error instead.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.try_div(rhs).expect("rational function division by zero")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$m(rhs)
            }
        }
        impl $tr<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                self.$m(&rhs)
            }
        }
        impl $tr<i64> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: i64) -> RationalFunction {
                (&self).$m(&RationalFunction::from_int(rhs))
            }
        }
        impl $tr<RationalFunction> for i64 {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction {
                (&RationalFunction::from_int(self)).$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);
