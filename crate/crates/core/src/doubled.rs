//! Polynomials in the conjugate-doubled ring.
//!
//! For a base ring Q(i)[x_1..x_n] the doubled ring is
//! Q(i)[x_1..x_n, x_1bar..x_nbar]; the conjugation involution swaps each
//! variable with its bar partner and conjugates coefficients. Hermitian
//! pairings live here: they are honest polynomials, printed with the
//! `xbar` variable names.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::PolyRing;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledPoly {
    poly: Poly,
    base_vars: usize,
}

impl DoubledPoly {
    /// Wraps a polynomial that already lives in a doubled ring with
    /// `base_vars` original variables.
    pub fn new(poly: Poly, base_vars: usize) -> Result<Self> {
        if poly.ring().nvars() != 2 * base_vars {
            return Err(Error::Arity(format!(
                "doubled ring needs {} variables, polynomial ring has {}",
                2 * base_vars,
                poly.ring().nvars()
            )));
        }
        Ok(DoubledPoly { poly, base_vars })
    }

    /// Embeds a base-ring polynomial into the doubled ring (bar exponents 0).
    pub fn embed(p: &Poly, doubled: &PolyRing) -> Result<Self> {
        let n = p.ring().nvars();
        p.ring().doubled()?.same_ring(doubled)?;
        let mut out = Poly::zero(doubled);
        for (e, c) in p.terms() {
            let mut exps = vec![0u32; 2 * n];
            exps[..n].copy_from_slice(e);
            out = &out + &Poly::monomial(doubled, exps, c.clone());
        }
        DoubledPoly::new(out, n)
    }

    /// Embeds the conjugate of a base-ring polynomial: exponents land on the
    /// bar block and coefficients are conjugated.
    pub fn conj_embed(p: &Poly, doubled: &PolyRing) -> Result<Self> {
        Ok(DoubledPoly::embed(p, doubled)?.conj())
    }

    /// The conjugation involution of the doubled ring.
    pub fn conj(&self) -> Self {
        let n = self.base_vars;
        let ring = self.poly.ring().clone();
        let mut out = Poly::zero(&ring);
        for (e, c) in self.poly.terms() {
            let mut exps = vec![0u32; 2 * n];
            exps[..n].copy_from_slice(&e[n..]);
            exps[n..].copy_from_slice(&e[..n]);
            out = &out + &Poly::monomial(&ring, exps, c.conj());
        }
        DoubledPoly {
            poly: out,
            base_vars: n,
        }
    }

    pub fn as_poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn base_vars(&self) -> usize {
        self.base_vars
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

impl Add for &DoubledPoly {
    type Output = DoubledPoly;
    fn add(self, rhs: &DoubledPoly) -> DoubledPoly {
        assert_eq!(self.base_vars, rhs.base_vars);
        DoubledPoly {
            poly: &self.poly + &rhs.poly,
            base_vars: self.base_vars,
        }
    }
}

impl Sub for &DoubledPoly {
    type Output = DoubledPoly;
    fn sub(self, rhs: &DoubledPoly) -> DoubledPoly {
        assert_eq!(self.base_vars, rhs.base_vars);
        DoubledPoly {
            poly: &self.poly - &rhs.poly,
            base_vars: self.base_vars,
        }
    }
}

impl Mul for &DoubledPoly {
    type Output = DoubledPoly;
    fn mul(self, rhs: &DoubledPoly) -> DoubledPoly {
        assert_eq!(self.base_vars, rhs.base_vars);
        DoubledPoly {
            poly: &self.poly * &rhs.poly,
            base_vars: self.base_vars,
        }
    }
}

impl Neg for &DoubledPoly {
    type Output = DoubledPoly;
    fn neg(self) -> DoubledPoly {
        DoubledPoly {
            poly: -&self.poly,
            base_vars: self.base_vars,
        }
    }
}

impl fmt::Display for DoubledPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::GaussianRational;

    #[test]
    fn conjugation_is_involutive() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let d = r.doubled().unwrap();
        let p = r.parse("(1+i)*x^2*y - 3*y").unwrap();
        let e = DoubledPoly::embed(&p, &d).unwrap();
        assert_eq!(e.conj().conj(), e);
    }

    #[test]
    fn conj_embed_moves_to_bar_block() {
        let r = PolyRing::new(&["x"]).unwrap();
        let d = r.doubled().unwrap();
        let p = r.parse("i*x").unwrap();
        let c = DoubledPoly::conj_embed(&p, &d).unwrap();
        assert_eq!(c.as_poly().to_string(), "-i*xbar");
        // product f * conj(f) = |f|^2 is fixed by conjugation
        let f = DoubledPoly::embed(&p, &d).unwrap();
        let prod = &f * &c;
        assert_eq!(prod.conj(), prod);
        assert_eq!(prod.as_poly().to_string(), "x*xbar");
    }

    #[test]
    fn embed_rejects_wrong_target() {
        let r = PolyRing::new(&["x"]).unwrap();
        let wrong = PolyRing::new(&["x", "y"]).unwrap();
        let p = Poly::constant(&r, GaussianRational::one());
        assert!(DoubledPoly::embed(&p, &wrong).is_err());
    }
}
