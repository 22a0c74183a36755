//! Differential forms with polynomial coefficients, and foliations.
//!
//! A k-form is stored on strictly increasing index tuples; wedge, exterior
//! derivative, contraction and the Lie derivative (via Cartan's formula) are
//! all exact. A `Foliation` carries a set-once involutivity flag: the check
//! runs at most once and its verdict is cached for the lifetime of the value.

use crate::error::{Error, Result};
use crate::fields::VectorField;
use crate::groebner::{PolyVec, Submodule};
use crate::parse::{parse_power_at, tokenize, Spanned, Tok};
use crate::poly::Poly;
use crate::ring::PolyRing;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffForm {
    ring: PolyRing,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

/// Sorts `idx` ascending, returning the permutation sign; `None` when an
/// index repeats (the wedge term vanishes).
fn sort_with_sign(idx: &mut Vec<usize>) -> Option<bool> {
    let mut swaps = 0usize;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some(swaps % 2 == 1)
}

impl DiffForm {
    pub fn zero(ring: &PolyRing, degree: usize) -> Self {
        DiffForm {
            ring: ring.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// A 0-form, i.e. a function.
    pub fn from_poly(p: &Poly) -> Self {
        let mut f = DiffForm::zero(p.ring(), 0);
        if !p.is_zero() {
            f.terms.insert(Vec::new(), p.clone());
        }
        f
    }

    /// The basis 1-form dual to the coordinate `index`.
    pub fn coordinate(ring: &PolyRing, index: usize) -> Self {
        assert!(index < ring.nvars());
        let mut f = DiffForm::zero(ring, 1);
        f.terms.insert(vec![index], Poly::one(ring));
        f
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> Poly {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.ring))
    }

    /// The underlying function of a 0-form.
    pub fn as_poly(&self) -> Result<Poly> {
        if self.degree != 0 {
            return Err(Error::Degree(format!(
                "expected a 0-form, got degree {}",
                self.degree
            )));
        }
        Ok(self.coeff(&[]))
    }

    fn insert(&mut self, idx: Vec<usize>, coeff: Poly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = &*o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Adds `coeff * dx_idx` for a possibly unsorted, possibly repeating
    /// tuple, with the wedge sign worked in.
    fn insert_unsorted(&mut self, mut idx: Vec<usize>, coeff: Poly) {
        match sort_with_sign(&mut idx) {
            None => {}
            Some(flip) => {
                let c = if flip { -&coeff } else { coeff };
                self.insert(idx, c);
            }
        }
    }

    pub fn add(&self, other: &DiffForm) -> Result<DiffForm> {
        other.ring.same_ring(&self.ring)?;
        // zero forms act as the identity in every degree
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::Degree(format!(
                "cannot add a {}-form and a {}-form",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.insert(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DiffForm) -> Result<DiffForm> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DiffForm {
        DiffForm {
            ring: self.ring.clone(),
            degree: self.degree,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, f: &Poly) -> Result<DiffForm> {
        f.ring().same_ring(&self.ring)?;
        let mut out = DiffForm::zero(&self.ring, self.degree);
        for (idx, c) in &self.terms {
            out.insert(idx.clone(), c * f);
        }
        Ok(out)
    }

    pub fn wedge(&self, other: &DiffForm) -> Result<DiffForm> {
        other.ring.same_ring(&self.ring)?;
        let mut out = DiffForm::zero(&self.ring, self.degree + other.degree);
        for (ia, ca) in &self.terms {
            for (ib, cb) in &other.terms {
                let mut idx = ia.clone();
                idx.extend_from_slice(ib);
                out.insert_unsorted(idx, ca * cb);
            }
        }
        Ok(out)
    }

    /// Exterior derivative: d(f dx_T) = sum_j (df/dx_j) dx_j ^ dx_T.
    pub fn exterior_d(&self) -> DiffForm {
        let mut out = DiffForm::zero(&self.ring, self.degree + 1);
        for (idx, c) in &self.terms {
            for j in 0..self.ring.nvars() {
                let dj = c.derivative(j);
                if dj.is_zero() {
                    continue;
                }
                let mut nidx = Vec::with_capacity(idx.len() + 1);
                nidx.push(j);
                nidx.extend_from_slice(idx);
                out.insert_unsorted(nidx, dj);
            }
        }
        out
    }

    /// Interior product i_D: the degree -1 antiderivation pairing the first
    /// slot with D.
    pub fn contract(&self, d: &VectorField) -> Result<DiffForm> {
        d.ring().same_ring(&self.ring)?;
        if self.degree == 0 {
            return Ok(DiffForm::zero(&self.ring, 0));
        }
        let mut out = DiffForm::zero(&self.ring, self.degree - 1);
        for (idx, c) in &self.terms {
            for (m, &im) in idx.iter().enumerate() {
                let di = &d.coeffs()[im];
                if di.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != m)
                    .map(|(_, &v)| v)
                    .collect();
                let signed = if m % 2 == 0 { c * di } else { -&(c * di) };
                out.insert(rest, signed);
            }
        }
        Ok(out)
    }

    /// Lie derivative along D by Cartan's formula: L_D = i_D d + d i_D.
    pub fn lie_derivative(&self, d: &VectorField) -> Result<DiffForm> {
        let a = self.exterior_d().contract(d)?;
        let b = self.contract(d)?.exterior_d();
        a.add(&b)
    }
}

fn coeff_str(c: &Poly) -> String {
    let s = c.to_string();
    if c.num_terms() > 1 {
        format!("({s})")
    } else {
        s
    }
}

impl fmt::Display for DiffForm {
    /// `coeff*dx^dy` terms joined with `+`/`-`; 0-forms print as plain
    /// polynomials. Output re-parses via `parse_form`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        if self.degree == 0 {
            return write!(f, "{}", self.coeff(&[]));
        }
        let mut first = true;
        for (idx, c) in &self.terms {
            let wedge = idx
                .iter()
                .map(|&i| format!("d{}", self.ring.vars()[i]))
                .collect::<Vec<_>>()
                .join("^");
            // single-term coefficients have their sign pulled out front
            let (neg, mag) = if c.num_terms() == 1 {
                let (_, lc) = c.terms().next().expect("one term");
                if lc.is_display_negative() {
                    (true, -c)
                } else {
                    (false, c.clone())
                }
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mag.is_constant() && mag.constant_term().is_one() {
                write!(f, "{wedge}")?;
            } else {
                write!(f, "{}*{}", coeff_str(&mag), wedge)?;
            }
        }
        Ok(())
    }
}

/// Parses a form from text: `dx^dy` wedge monomials with polynomial
/// coefficients, e.g. `x*y*dx^dz - dy`. All terms must share one degree.
pub fn parse_form(ring: &PolyRing, input: &str) -> Result<DiffForm> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "empty form".into(),
        });
    }
    let diff_index = |t: &Tok| -> Option<usize> {
        if let Tok::Ident(name) = t {
            if ring.var_index(name).is_some() {
                return None; // a plain variable, even if it starts with d
            }
            if let Some(rest) = name.strip_prefix('d') {
                return ring.var_index(rest);
            }
        }
        None
    };

    let mut pos = 0usize;
    let mut result: Option<DiffForm> = None;
    let mut sign_negative = false;
    loop {
        // one product term: polynomial factors and differentials
        let mut coeff = Poly::one(ring);
        let mut indices: Vec<usize> = Vec::new();
        let mut parsed_any = false;
        loop {
            while let Some(s) = toks.get(pos) {
                if !parsed_any && indices.is_empty() && coeff == Poly::one(ring) {
                    match s.tok {
                        Tok::Minus => {
                            sign_negative = !sign_negative;
                            pos += 1;
                            continue;
                        }
                        Tok::Plus => {
                            pos += 1;
                            continue;
                        }
                        _ => {}
                    }
                }
                break;
            }
            let Some(s) = toks.get(pos) else {
                return Err(Error::Parse {
                    offset: input.len(),
                    message: "unexpected end of form".into(),
                });
            };
            if let Some(vi) = diff_index(&s.tok) {
                indices.push(vi);
                pos += 1;
                parsed_any = true;
                // a caret after a differential wedges in the next one
                if let Some(Spanned {
                    tok: Tok::Caret, ..
                }) = toks.get(pos)
                {
                    let next_is_diff = toks
                        .get(pos + 1)
                        .map(|n| diff_index(&n.tok).is_some())
                        .unwrap_or(false);
                    if !next_is_diff {
                        return Err(Error::Parse {
                            offset: toks[pos].offset,
                            message: "expected differential after `^` in wedge".into(),
                        });
                    }
                    pos += 1;
                    continue;
                }
            } else {
                let (p, next) = parse_power_at(ring, &toks, pos, input.len())?;
                coeff = &coeff * &p;
                pos = next;
                parsed_any = true;
            }
            match toks.get(pos).map(|s| &s.tok) {
                Some(Tok::Star) => {
                    pos += 1;
                }
                _ => break,
            }
        }

        let signed = if sign_negative { -&coeff } else { coeff };
        let mut term = DiffForm::zero(ring, indices.len());
        term.insert_unsorted(indices, signed);
        result = Some(match result {
            None => term,
            Some(acc) => {
                if acc.degree() != term.degree() && !term.is_zero() && !acc.is_zero() {
                    return Err(Error::Degree(
                        "form mixes terms of different degrees".into(),
                    ));
                }
                // zero terms may have lost their nominal degree; normalize
                if acc.is_zero() && !term.is_zero() {
                    term
                } else if term.is_zero() {
                    acc
                } else {
                    acc.add(&term)?
                }
            }
        });

        match toks.get(pos).map(|s| &s.tok) {
            None => break,
            Some(Tok::Plus) => {
                sign_negative = false;
                pos += 1;
            }
            Some(Tok::Minus) => {
                sign_negative = true;
                pos += 1;
            }
            Some(_) => {
                return Err(Error::Parse {
                    offset: toks[pos].offset,
                    message: "expected `+`, `-` or end of form".into(),
                })
            }
        }
    }
    result.ok_or(Error::Parse {
        offset: 0,
        message: "empty form".into(),
    })
}

/// A finitely generated foliation: generating fields plus a set-once
/// involutivity verdict.
#[derive(Debug)]
pub struct Foliation {
    ring: PolyRing,
    gens: Vec<VectorField>,
    involutive: OnceLock<bool>,
}

impl Clone for Foliation {
    fn clone(&self) -> Self {
        let f = Foliation {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            involutive: OnceLock::new(),
        };
        if let Some(v) = self.involutive.get() {
            let _ = f.involutive.set(*v);
        }
        f
    }
}

impl Foliation {
    pub fn new(ring: &PolyRing, gens: Vec<VectorField>) -> Result<Self> {
        for g in &gens {
            g.ring().same_ring(ring)?;
        }
        Ok(Foliation {
            ring: ring.clone(),
            gens,
            involutive: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn gens(&self) -> &[VectorField] {
        &self.gens
    }

    /// The submodule of the tangent module spanned by the generators.
    pub fn module(&self) -> Submodule {
        let vecs: Vec<PolyVec> = self.gens.iter().map(|g| g.to_vec()).collect();
        Submodule::new(&self.ring, self.ring.nvars(), vecs).expect("gens validated at build")
    }

    /// The involutivity verdict; computed on first call, cached forever.
    pub fn check_involutivity(&self) -> bool {
        *self.involutive.get_or_init(|| {
            involutivity_check(&self.gens).unwrap_or(false)
        })
    }

    /// `None` until `check_involutivity` has run on this value.
    pub fn status(&self) -> Option<bool> {
        self.involutive.get().copied()
    }
}

/// Do all pairwise brackets of `gens` stay inside the module they span?
pub fn involutivity_check(gens: &[VectorField]) -> Result<bool> {
    if gens.is_empty() {
        return Ok(true);
    }
    let ring = gens[0].ring().clone();
    let vecs: Vec<PolyVec> = gens.iter().map(|g| g.to_vec()).collect();
    let module = Submodule::new(&ring, ring.nvars(), vecs)?;
    for (a, ga) in gens.iter().enumerate() {
        for gb in gens.iter().skip(a + 1) {
            let br = ga.lie_bracket(gb)?;
            if !module.contains(&br.to_vec())? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A form is basic for the foliation when both it and its exterior
/// derivative are annihilated by every generator: i_D w = 0 and i_D dw = 0.
pub fn is_basic(form: &DiffForm, foliation: &Foliation) -> Result<bool> {
    form.ring().same_ring(foliation.ring())?;
    let d = form.exterior_d();
    for g in foliation.gens() {
        if !form.contract(g)?.is_zero() {
            return Ok(false);
        }
        if !d.contract(g)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}
