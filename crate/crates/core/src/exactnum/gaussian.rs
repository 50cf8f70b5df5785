use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Scalar;
use crate::error::{Error, Result};

/// Complex number `re + im*i` with arbitrary-precision rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Conjugates the first operand; the second is ignored.
    Conj,
}

/// Dispatches one field operation.
pub fn scalar_arith(a: &GaussianRational, b: &GaussianRational, op: ScalarOp) -> Result<GaussianRational> {
    Ok(match op {
        ScalarOp::Add => a.clone() + b.clone(),
        ScalarOp::Sub => a.clone() - b.clone(),
        ScalarOp::Mul => a.clone() * b.clone(),
        ScalarOp::Div => a.checked_div(b)?,
        ScalarOp::Conj => a.conj(),
    })
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational::new(int(re), int(im))
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn from_fracs(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn real(r: BigRational) -> Self {
        GaussianRational::new(r, BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_imaginary(&self) -> bool {
        self.re.is_zero()
    }

    /// `|z|^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let n = other.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.clone() * other.conj();
        Ok(GaussianRational::new(num.re / &n, num.im / n))
    }

    pub fn inv(&self) -> Result<Self> {
        GaussianRational::from_ints(1, 0).checked_div(self)
    }

    /// `Some(s)` when the value is exactly `s` for `s` in {1, -1}.
    pub fn as_sign(&self) -> Option<i8> {
        if !self.im.is_zero() {
            return None;
        }
        if self.re.is_one() {
            Some(1)
        } else if (-self.re.clone()).is_one() {
            Some(-1)
        } else {
            None
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        GaussianRational::new(&self.re * r, &self.im * r)
    }
}

impl Scalar for GaussianRational {
    fn zero() -> Self {
        GaussianRational::from_ints(0, 0)
    }
    fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
    fn from_gaussian(g: GaussianRational) -> Self {
        g
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussianRational::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussianRational::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Renders as `a`, `bi`, `a+bi`; fractional imaginary parts as `(p/q)i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        if !self.re.is_zero() {
            write_rational(f, &self.re)?;
            if self.im.is_positive() {
                write!(f, "+")?;
            }
        }
        let mag = self.im.abs();
        if self.im.is_negative() {
            write!(f, "-")?;
        }
        if mag.is_one() {
            write!(f, "i")
        } else if mag.is_integer() {
            write!(f, "{}i", mag.numer())
        } else {
            write!(f, "({}/{})i", mag.numer(), mag.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(scalar_arith(&i, &i, ScalarOp::Mul).unwrap(), g(-1, 0));
    }

    #[test]
    fn conj_of_one_plus_i() {
        assert_eq!(scalar_arith(&g(1, 1), &g(0, 0), ScalarOp::Conj).unwrap(), g(1, -1));
    }

    #[test]
    fn half_plus_half_i_times_conjugate() {
        let a = GaussianRational::from_fracs(1, 2, 1, 2);
        let b = GaussianRational::from_fracs(1, 2, -1, 2);
        let p = scalar_arith(&a, &b, ScalarOp::Mul).unwrap();
        assert_eq!(p, GaussianRational::from_fracs(1, 2, 0, 1));
    }

    #[test]
    fn division_by_zero_is_error() {
        assert_eq!(scalar_arith(&g(1, 0), &g(0, 0), ScalarOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = g(3, -2);
        let b = GaussianRational::from_fracs(1, 3, 5, 7);
        let q = scalar_arith(&a, &b, ScalarOp::Div).unwrap();
        assert_eq!(q * b, a);
    }

    #[test]
    fn lowest_terms() {
        let a = GaussianRational::from_fracs(2, 4, -3, -6);
        assert_eq!(a.re.denom(), &BigInt::from(2));
        assert_eq!(a.im.numer(), &BigInt::from(1));
    }

    #[test]
    fn display() {
        assert_eq!(g(0, 0).to_string(), "0");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(2, 3).to_string(), "2+3i");
        assert_eq!(g(1, -1).to_string(), "1-i");
        assert_eq!(GaussianRational::from_fracs(1, 2, 1, 2).to_string(), "1/2+(1/2)i");
    }

    #[test]
    fn sign_detection() {
        assert_eq!(g(1, 0).as_sign(), Some(1));
        assert_eq!(g(-1, 0).as_sign(), Some(-1));
        assert_eq!(g(0, 1).as_sign(), None);
    }
}
