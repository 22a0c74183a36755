//! Multivariate polynomials over Q(i) with exact coefficient arithmetic.
//!
//! Terms are stored in a `BTreeMap` keyed by exponent vectors, so two equal
//! polynomials always compare equal structurally. Leading terms are computed
//! on demand against whichever monomial order the caller is working with;
//! nothing about the stored representation depends on the order.

use crate::error::{Error, Result};
use crate::rational::GaussianRational;
use crate::ring::{MonomialOrder, PolyRing};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    ring: PolyRing,
    terms: BTreeMap<Vec<u32>, GaussianRational>,
}

impl Poly {
    pub fn zero(ring: &PolyRing) -> Self {
        Poly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &PolyRing, c: GaussianRational) -> Self {
        let mut p = Poly::zero(ring);
        if !c.is_zero() {
            p.terms.insert(vec![0; ring.nvars()], c);
        }
        p
    }

    pub fn one(ring: &PolyRing) -> Self {
        Poly::constant(ring, GaussianRational::one())
    }

    pub fn from_int(ring: &PolyRing, n: i64) -> Self {
        Poly::constant(ring, GaussianRational::from_int(n))
    }

    /// The variable with the given index.
    pub fn var(ring: &PolyRing, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        let mut exps = vec![0; ring.nvars()];
        exps[index] = 1;
        let mut p = Poly::zero(ring);
        p.terms.insert(exps, GaussianRational::one());
        p
    }

    pub fn var_named(ring: &PolyRing, name: &str) -> Result<Self> {
        let idx = ring
            .var_index(name)
            .ok_or_else(|| Error::Domain(format!("unknown variable `{name}`")))?;
        Ok(Poly::var(ring, idx))
    }

    pub fn monomial(ring: &PolyRing, exps: Vec<u32>, coeff: GaussianRational) -> Self {
        assert_eq!(exps.len(), ring.nvars(), "exponent vector length mismatch");
        let mut p = Poly::zero(ring);
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().iter().all(|&e| e == 0))
    }

    /// The constant coefficient (zero if absent).
    pub fn constant_term(&self) -> GaussianRational {
        self.terms
            .get(&vec![0u32; self.ring.nvars()])
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> GaussianRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
    }

    fn insert_term(&mut self, exps: Vec<u32>, coeff: GaussianRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading (exponents, coefficient) under `order`; `None` for zero.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Vec<u32>, &GaussianRational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp_exponents(a.0, b.0))
    }

    pub fn map_coeffs(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), f(c));
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        self.map_coeffs(|x| x * c)
    }

    /// Multiply by the single term `c * x^exps`.
    pub fn mul_term(&self, exps: &[u32], c: &GaussianRational) -> Poly {
        let mut out = Poly::zero(&self.ring);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &self.terms {
            let shifted: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.terms.insert(shifted, k * c);
        }
        out
    }

    /// Coefficient-wise complex conjugation (variables untouched).
    pub fn conj_coeffs(&self) -> Poly {
        self.map_coeffs(|c| c.conj())
    }

    /// Partial derivative with respect to variable `index`.
    pub fn derivative(&self, index: usize) -> Poly {
        assert!(index < self.ring.nvars());
        let mut out = Poly::zero(&self.ring);
        for (e, c) in &self.terms {
            let k = e[index];
            if k == 0 {
                continue;
            }
            let mut ne = e.clone();
            ne[index] = k - 1;
            out.insert_term(ne, c * &GaussianRational::from_int(k as i64));
        }
        out
    }

    pub fn pow(&self, mut n: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitute each variable by the polynomial `images[idx]` (all in the
    /// target ring of `images[0]`). Used for linear group substitutions but
    /// supports arbitrary polynomial images.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars(), "one image per variable");
        let target = if images.is_empty() {
            self.ring.clone()
        } else {
            images[0].ring().clone()
        };
        let mut out = Poly::zero(&target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (idx, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = &t * &images[idx].pow(k);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Evaluate at a point of Q(i)^n.
    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (idx, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t *= &point[idx];
                }
            }
            acc += &t;
        }
        acc
    }
}

/// Exponent vectors of total degree at most `cap` over `nvars`
/// variables, ordered by degree and then lexicographically.
pub fn monomials_up_to(nvars: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; nvars]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for exps in &out {
            for i in 0..nvars {
                let mut e = exps.clone();
                e[i] += 1;
                next.push(e);
            }
        }
        out.extend(next);
    }
    out.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    out.dedup();
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "polynomial rings differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "polynomial rings differ");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.ring, rhs.ring, "polynomial rings differ");
        let mut out = Poly::zero(&self.ring);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.map_coeffs(|c| -c)
    }
}

fn monomial_str(ring: &PolyRing, exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (idx, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(ring.vars()[idx].clone()),
            _ => parts.push(format!("{}^{}", ring.vars()[idx], e)),
        }
    }
    parts.join("*")
}

/// Renders `coeff * mono` without a sign, assuming the caller already
/// extracted the display sign from `coeff`.
fn term_str(ring: &PolyRing, exps: &[u32], coeff: &GaussianRational) -> String {
    let mono = monomial_str(ring, exps);
    if mono.is_empty() {
        let s = coeff.to_string();
        return if coeff.is_real() || coeff.re().is_zero() {
            s
        } else {
            format!("({s})")
        };
    }
    if coeff.is_one() {
        return mono;
    }
    if coeff.is_real() || coeff.re().is_zero() {
        format!("{coeff}*{mono}")
    } else {
        // mixed real+imaginary coefficient needs parens inside a product
        format!("({coeff})*{mono}")
    }
}

impl fmt::Display for Poly {
    /// Canonical text form: terms in descending grevlex order, `^` for
    /// powers, explicit `*` between factors. Re-parses to an equal Poly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| MonomialOrder::GrevLex.cmp_exponents(b, a));
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            let neg = c.is_display_negative();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                write!(f, "{}", term_str(&self.ring, e, &mag))?;
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
                write!(f, "{}", term_str(&self.ring, e, &mag))?;
            }
        }
        Ok(())
    }
}
