//! Polynomial vector fields: derivations sum(f_i d/dx_i) of the coordinate
//! ring, with application, Lie bracket and the coordinate gradient.

use crate::error::{Error, Result};
use crate::groebner::PolyVec;
use crate::poly::Poly;
use crate::ring::PolyRing;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorField {
    ring: PolyRing,
    coeffs: Vec<Poly>,
}

impl VectorField {
    /// A field from its coefficient vector; `coeffs[i]` multiplies d/dx_i.
    pub fn new(ring: &PolyRing, coeffs: Vec<Poly>) -> Result<Self> {
        if coeffs.len() != ring.nvars() {
            return Err(Error::Arity(format!(
                "field needs {} coefficients, got {}",
                ring.nvars(),
                coeffs.len()
            )));
        }
        for c in &coeffs {
            c.ring().same_ring(ring)?;
        }
        Ok(VectorField {
            ring: ring.clone(),
            coeffs,
        })
    }

    pub fn parse(ring: &PolyRing, coeffs: &[&str]) -> Result<Self> {
        let polys: Result<Vec<Poly>> = coeffs.iter().map(|s| ring.parse(s)).collect();
        VectorField::new(ring, polys?)
    }

    pub fn zero(ring: &PolyRing) -> Self {
        VectorField {
            ring: ring.clone(),
            coeffs: vec![Poly::zero(ring); ring.nvars()],
        }
    }

    /// The coordinate field d/dx_index.
    pub fn basis(ring: &PolyRing, index: usize) -> Self {
        let mut v = VectorField::zero(ring);
        v.coeffs[index] = Poly::one(ring);
        v
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Apply the derivation to a function: sum(f_i * dg/dx_i).
    pub fn apply(&self, g: &Poly) -> Result<Poly> {
        g.ring().same_ring(&self.ring)?;
        let mut acc = Poly::zero(&self.ring);
        for (i, f) in self.coeffs.iter().enumerate() {
            if !f.is_zero() {
                acc = &acc + &(f * &g.derivative(i));
            }
        }
        Ok(acc)
    }

    /// Lie bracket [self, other] as a derivation: coefficients
    /// self(other_k) - other(self_k).
    pub fn lie_bracket(&self, other: &VectorField) -> Result<VectorField> {
        other.ring.same_ring(&self.ring)?;
        let mut coeffs = Vec::with_capacity(self.ring.nvars());
        for k in 0..self.ring.nvars() {
            coeffs.push(&self.apply(&other.coeffs[k])? - &other.apply(&self.coeffs[k])?);
        }
        VectorField::new(&self.ring, coeffs)
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        other.ring.same_ring(&self.ring)?;
        VectorField::new(
            &self.ring,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        other.ring.same_ring(&self.ring)?;
        VectorField::new(
            &self.ring,
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, f: &Poly) -> Result<VectorField> {
        f.ring().same_ring(&self.ring)?;
        VectorField::new(&self.ring, self.coeffs.iter().map(|c| c * f).collect())
    }

    pub fn neg(&self) -> VectorField {
        VectorField {
            ring: self.ring.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn to_vec(&self) -> PolyVec {
        PolyVec::new(&self.ring, self.coeffs.clone()).expect("same ring by construction")
    }

    pub fn from_vec(v: &PolyVec) -> Result<VectorField> {
        VectorField::new(v.ring(), v.comps().to_vec())
    }
}

/// The coordinate gradient of g with respect to the standard pairing:
/// sum(dg/dx_j * d/dx_j).
pub fn gradient(g: &Poly) -> VectorField {
    let ring = g.ring().clone();
    let coeffs = (0..ring.nvars()).map(|j| g.derivative(j)).collect();
    VectorField { ring, coeffs }
}

impl fmt::Display for VectorField {
    /// Coefficient-list form `[f_1, ..., f_n]`; each entry re-parses.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn apply_is_a_derivation() {
        let r = ring3();
        let d = VectorField::parse(&r, &["y", "x^2", "1"]).unwrap();
        let f = r.parse("x*y - z^2").unwrap();
        let g = r.parse("x + y^3").unwrap();
        let lhs = d.apply(&(&f * &g)).unwrap();
        let rhs = &(&d.apply(&f).unwrap() * &g) + &(&f * &d.apply(&g).unwrap());
        assert_eq!(lhs, rhs, "Leibniz rule");
        assert_eq!(d.apply(&Poly::one(&r)).unwrap(), Poly::zero(&r));
    }

    #[test]
    fn hamiltonian_fields_of_the_cone_close_under_bracket() {
        let r = ring3();
        let dx = VectorField::parse(&r, &["0", "2*y", "-2*z"]).unwrap();
        let dy = VectorField::parse(&r, &["-2*y", "0", "x"]).unwrap();
        let dz = VectorField::parse(&r, &["2*z", "-x", "0"]).unwrap();
        assert_eq!(dy.lie_bracket(&dz).unwrap(), dx, "[D_y, D_z] = D_x");
        assert_eq!(
            dx.lie_bracket(&dy).unwrap(),
            dy.scale(&r.parse("2").unwrap()).unwrap(),
            "[D_x, D_y] = 2 D_y"
        );
        assert_eq!(
            dx.lie_bracket(&dz).unwrap(),
            dz.scale(&r.parse("-2").unwrap()).unwrap(),
            "[D_x, D_z] = -2 D_z"
        );
    }

    #[test]
    fn bracket_satisfies_jacobi_on_samples() {
        let r = ring3();
        let a = VectorField::parse(&r, &["y*z", "x", "0"]).unwrap();
        let b = VectorField::parse(&r, &["1", "z^2", "x*y"]).unwrap();
        let c = VectorField::parse(&r, &["x", "0", "y"]).unwrap();
        let j1 = a.lie_bracket(&b).unwrap().lie_bracket(&c).unwrap();
        let j2 = b.lie_bracket(&c).unwrap().lie_bracket(&a).unwrap();
        let j3 = c.lie_bracket(&a).unwrap().lie_bracket(&b).unwrap();
        assert!(j1.add(&j2).unwrap().add(&j3).unwrap().is_zero());
    }

    #[test]
    fn gradient_of_cone_function() {
        let r = ring3();
        let g = r.parse("x^2+4*y*z").unwrap();
        let grad = gradient(&g);
        assert_eq!(grad, VectorField::parse(&r, &["2*x", "4*z", "4*y"]).unwrap());
    }
}
