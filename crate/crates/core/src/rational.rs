//! Gaussian rationals: the field Q(i), kept exact via big rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element `re + im*i` of Q(i). Both parts are reduced fractions with
/// positive denominator (num-rational maintains that on every operation),
/// so equality is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `num/den`, real. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, a nonnegative rational; zero iff self is zero.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    /// True when the number should print with a leading minus sign
    /// (negative real part, or purely imaginary with negative imaginary part).
    pub fn is_display_negative(&self) -> bool {
        if !self.re.is_zero() {
            self.re.is_negative()
        } else {
            self.im.is_negative()
        }
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        let out = &*self * rhs;
        *self = out;
    }
}

fn ratio_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Imaginary part formatted as a product with `i`: `i`, `-i`, `2/3*i`.
fn imag_str(im: &BigRational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", ratio_str(im))
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical forms: `a/b`, `a/b*i`, or `a/b+c/d*i` (mixed, no parens --
    /// callers embedding a mixed value in a product add the parens).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", ratio_str(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{}", imag_str(&self.im));
        }
        let im = imag_str(&self.im);
        if im.starts_with('-') {
            write!(f, "{}-{}", ratio_str(&self.re), &im[1..])
        } else {
            write!(f, "{}+{}", ratio_str(&self.re), im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_on_samples() {
        let a = &GaussianRational::from_ratio(3, 2) + &GaussianRational::i();
        let b = &GaussianRational::from_int(-2) - &GaussianRational::i();
        let c = GaussianRational::from_ratio(-7, 5);

        let ab_c = &(&a * &b) * &c;
        let a_bc = &a * &(&b * &c);
        assert_eq!(ab_c, a_bc, "multiplication associates");

        let dist = &a * &(&b + &c);
        let expanded = &(&a * &b) + &(&a * &c);
        assert_eq!(dist, expanded, "distributivity");

        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one(), "a * a^-1 = 1");
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn conjugation_is_involutive_and_multiplicative() {
        let a = &GaussianRational::from_ratio(1, 3) - &GaussianRational::i();
        let b = &GaussianRational::from_int(5) + &GaussianRational::i();
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        assert_eq!(
            &a * &a.conj(),
            GaussianRational::new(a.norm_sq(), num_rational::BigRational::zero())
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::from_int(0).to_string(), "0");
        assert_eq!(GaussianRational::from_ratio(-3, 2).to_string(), "-3/2");
        assert_eq!(GaussianRational::i().to_string(), "i");
        assert_eq!((-GaussianRational::i()).to_string(), "-i");
        let mixed = &GaussianRational::from_int(2) - &GaussianRational::i();
        assert_eq!(mixed.to_string(), "2-i");
        let mixed2 = &GaussianRational::from_ratio(1, 2)
            + &(&GaussianRational::from_ratio(3, 4) * &GaussianRational::i());
        assert_eq!(mixed2.to_string(), "1/2+3/4*i");
    }
}
