//! The fraction field of a polynomial ring, without gcd reduction.
//!
//! A `RationalFunction` is a numerator/denominator pair that is never
//! cancelled; equality is decided by cross-multiplication, which is exact
//! over an integral domain and avoids multivariate gcd entirely. Matrix
//! inverses over the fraction field go through the adjugate.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::PolyRing;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Builds `num/den`. Panics if `den` is zero: a zero denominator is a
    /// programming error everywhere this type is used.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.ring(), den.ring(), "rings differ");
        RationalFunction { num, den }
    }

    pub fn from_poly(p: Poly) -> Self {
        let one = Poly::one(p.ring());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(ring: &PolyRing) -> Self {
        RationalFunction::from_poly(Poly::zero(ring))
    }

    pub fn one(ring: &PolyRing) -> Self {
        RationalFunction::from_poly(Poly::one(ring))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn ring(&self) -> &PolyRing {
        self.num.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact polynomial value if the denominator is a nonzero constant.
    pub fn as_poly_if_constant_den(&self) -> Option<Poly> {
        if self.den.is_constant() {
            let c = self.den.constant_term();
            Some(self.num.scale(&c.inv().expect("nonzero denominator")))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::Domain("inverse of zero rational function".into()));
        }
        Ok(RationalFunction {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }
}

/// Cross-multiplication equality: a/b = c/d iff ad = cb.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
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

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_term().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Determinant of a square polynomial matrix by cofactor expansion along the
/// first row. Exponential in size, fine at the ranks used here (<= 4).
pub fn poly_det(mat: &[Vec<Poly>]) -> Result<Poly> {
    let n = mat.len();
    if n == 0 {
        return Err(Error::Arity("determinant of empty matrix".into()));
    }
    let ring = mat[0][0].ring().clone();
    for row in mat {
        if row.len() != n {
            return Err(Error::Arity("matrix is not square".into()));
        }
        for entry in row {
            entry.ring().same_ring(&ring)?;
        }
    }
    Ok(det_rec(mat, &ring))
}

fn det_rec(mat: &[Vec<Poly>], ring: &PolyRing) -> Poly {
    let n = mat.len();
    if n == 1 {
        return mat[0][0].clone();
    }
    let mut acc = Poly::zero(ring);
    for (j, pivot) in mat[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = &*pivot * &det_rec(&minor, ring);
        if j % 2 == 0 {
            acc = &acc + &cof;
        } else {
            acc = &acc - &cof;
        }
    }
    acc
}

/// Inverse of a square polynomial matrix over the fraction field, via the
/// adjugate: entry (i,j) is cofactor(j,i) / det, left uncancelled.
pub fn fraction_matrix_inverse(mat: &[Vec<Poly>]) -> Result<Vec<Vec<RationalFunction>>> {
    let n = mat.len();
    let det = poly_det(mat)?;
    if det.is_zero() {
        return Err(Error::SingularMatrix(format!(
            "{n}x{n} polynomial matrix has determinant 0"
        )));
    }
    let ring = det.ring().clone();
    let mut inv = vec![vec![RationalFunction::zero(&ring); n]; n];
    for i in 0..n {
        for j in 0..n {
            // cofactor C_{j,i} for the (i,j) entry of the inverse
            let minor: Vec<Vec<Poly>> = (0..n)
                .filter(|&r| r != j)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != i)
                        .map(|c| mat[r][c].clone())
                        .collect()
                })
                .collect();
            let m = if n == 1 {
                Poly::one(&ring)
            } else {
                det_rec(&minor, &ring)
            };
            let signed = if (i + j) % 2 == 0 { m } else { -&m };
            inv[i][j] = RationalFunction::new(signed, det.clone());
        }
    }
    Ok(inv)
}
