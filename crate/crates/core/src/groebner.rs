//! Groebner bases for ideals and submodules of free modules, Buchberger's
//! algorithm with the two classical pair-dropping criteria, and syzygy
//! computation by position-over-term elimination.
//!
//! The reduced basis is unique for a fixed order: leading coefficients are 1,
//! no term of any element is divisible by another element's leading monomial,
//! and elements are sorted ascending by leading monomial. Every `Submodule`
//! caches its basis in a `OnceLock`, so concurrent fills race harmlessly to
//! the same value.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::GaussianRational;
use crate::ring::{ModuleOrder, MonomialOrder, PolyRing};
use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

/// An element of the free module Poly^rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVec {
    ring: PolyRing,
    comps: Vec<Poly>,
}

impl PolyVec {
    pub fn new(ring: &PolyRing, comps: Vec<Poly>) -> Result<Self> {
        for c in &comps {
            c.ring().same_ring(ring)?;
        }
        Ok(PolyVec {
            ring: ring.clone(),
            comps,
        })
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        PolyVec {
            ring: ring.clone(),
            comps: vec![Poly::zero(ring); rank],
        }
    }

    /// Standard basis vector `e_pos` of Poly^rank.
    pub fn unit(ring: &PolyRing, rank: usize, pos: usize) -> Self {
        let mut v = PolyVec::zero(ring, rank);
        v.comps[pos] = Poly::one(ring);
        v
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Poly] {
        &self.comps
    }

    pub fn comp(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, rhs: &PolyVec) -> PolyVec {
        assert_eq!(self.rank(), rhs.rank());
        PolyVec {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &PolyVec) -> PolyVec {
        assert_eq!(self.rank(), rhs.rank());
        PolyVec {
            ring: self.ring.clone(),
            comps: self
                .comps
                .iter()
                .zip(&rhs.comps)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> PolyVec {
        PolyVec {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale_poly(&self, p: &Poly) -> PolyVec {
        PolyVec {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| c * p).collect(),
        }
    }

    fn mul_term(&self, exps: &[u32], coeff: &GaussianRational) -> PolyVec {
        PolyVec {
            ring: self.ring.clone(),
            comps: self.comps.iter().map(|c| c.mul_term(exps, coeff)).collect(),
        }
    }

    /// Leading module term under the given orders: `None` for zero.
    fn leading(&self, mo: ModuleOrder, to: MonomialOrder) -> Option<VecTerm> {
        let mut best: Option<VecTerm> = None;
        for (pos, comp) in self.comps.iter().enumerate() {
            for (e, c) in comp.terms() {
                let better = match &best {
                    None => true,
                    Some(b) => {
                        mo.cmp(to, (pos, e.as_slice()), (b.pos, b.exps.as_slice()))
                            == Ordering::Greater
                    }
                };
                if better {
                    best = Some(VecTerm {
                        pos,
                        exps: e.clone(),
                        coeff: c.clone(),
                    });
                }
            }
        }
        best
    }
}

impl fmt::Display for PolyVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone)]
struct VecTerm {
    pos: usize,
    exps: Vec<u32>,
    coeff: GaussianRational,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn exp_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Full multivariate division: returns quotients (aligned with `divisors`)
/// and the remainder, none of whose terms is divisible by any divisor's
/// leading monomial. `v = sum(q_l * divisors[l]) + r` holds exactly.
fn divide(
    v: &PolyVec,
    divisors: &[PolyVec],
    leads: &[VecTerm],
    mo: ModuleOrder,
    to: MonomialOrder,
) -> (Vec<Poly>, PolyVec) {
    let ring = v.ring().clone();
    let mut p = v.clone();
    let mut r = PolyVec::zero(&ring, v.rank());
    let mut q = vec![Poly::zero(&ring); divisors.len()];
    while let Some(t) = p.leading(mo, to) {
        let mut reduced = false;
        for (l, lead) in leads.iter().enumerate() {
            if lead.pos == t.pos && divides(&lead.exps, &t.exps) {
                let fac_exps = exp_sub(&t.exps, &lead.exps);
                let fac_coeff = &t.coeff / &lead.coeff;
                q[l] = &q[l] + &Poly::monomial(&ring, fac_exps.clone(), fac_coeff.clone());
                p = p.sub(&divisors[l].mul_term(&fac_exps, &fac_coeff));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let term = Poly::monomial(&ring, t.exps.clone(), t.coeff.clone());
            let mut unit = PolyVec::zero(&ring, v.rank());
            unit.comps[t.pos] = term;
            r = r.add(&unit);
            p = p.sub(&unit);
        }
    }
    (q, r)
}

/// A computed reduced basis along with, per element, its expression in the
/// original generators (one cofactor polynomial per original generator).
#[derive(Debug, Clone)]
pub struct GbData {
    pub basis: Vec<PolyVec>,
    leads: Vec<VecTerm>,
    transform: Vec<Vec<Poly>>,
}

fn buchberger(
    ring: &PolyRing,
    rank: usize,
    gens: &[PolyVec],
    mo: ModuleOrder,
    to: MonomialOrder,
) -> GbData {
    let n_orig = gens.len();
    let mut basis: Vec<PolyVec> = Vec::new();
    let mut leads: Vec<VecTerm> = Vec::new();
    let mut transform: Vec<Vec<Poly>> = Vec::new();

    for (idx, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut row = vec![Poly::zero(ring); n_orig];
        row[idx] = Poly::one(ring);
        leads.push(g.leading(mo, to).expect("nonzero"));
        basis.push(g.clone());
        transform.push(row);
    }

    // pending S-pairs (i < j), leading terms in the same position
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if leads[i].pos == leads[j].pos {
                pending.push((i, j));
            }
        }
    }

    while !pending.is_empty() {
        // normal selection: smallest lcm first, ties by index
        let mut best = 0;
        for k in 1..pending.len() {
            let (ai, aj) = pending[k];
            let (bi, bj) = pending[best];
            let la = exp_lcm(&leads[ai].exps, &leads[aj].exps);
            let lb = exp_lcm(&leads[bi].exps, &leads[bj].exps);
            let ord = mo
                .cmp(to, (leads[ai].pos, &la), (leads[bi].pos, &lb))
                .then_with(|| (ai, aj).cmp(&(bi, bj)));
            if ord == Ordering::Less {
                best = k;
            }
        }
        let (i, j) = pending.swap_remove(best);
        let lcm = exp_lcm(&leads[i].exps, &leads[j].exps);

        // product criterion: only valid in the rank-1 (ideal) case
        if rank == 1 {
            let product: Vec<u32> = leads[i]
                .exps
                .iter()
                .zip(&leads[j].exps)
                .map(|(a, b)| a + b)
                .collect();
            if lcm == product {
                continue;
            }
        }

        // chain criterion: some k with LM(k) | lcm(i,j), both pairs with k
        // already off the queue
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].pos == leads[i].pos
                && divides(&leads[k].exps, &lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        // S-vector: cancel the leading terms against the lcm
        let fi = exp_sub(&lcm, &leads[i].exps);
        let fj = exp_sub(&lcm, &leads[j].exps);
        let ci = leads[i].coeff.inv().expect("nonzero lead");
        let cj = leads[j].coeff.inv().expect("nonzero lead");
        let s = basis[i]
            .mul_term(&fi, &ci)
            .sub(&basis[j].mul_term(&fj, &cj));
        let (q, r) = divide(&s, &basis, &leads, mo, to);
        if r.is_zero() {
            continue;
        }

        let mut row = vec![Poly::zero(ring); n_orig];
        for c in 0..n_orig {
            let ti = transform[i][c].mul_term(&fi, &ci);
            let tj = transform[j][c].mul_term(&fj, &cj);
            let mut acc = &ti - &tj;
            for (l, ql) in q.iter().enumerate() {
                if !ql.is_zero() {
                    acc = &acc - &(ql * &transform[l][c]);
                }
            }
            row[c] = acc;
        }
        let lead = r.leading(mo, to).expect("nonzero remainder");
        let new_idx = basis.len();
        for k in 0..new_idx {
            if leads[k].pos == lead.pos {
                pending.push((k, new_idx));
            }
        }
        basis.push(r);
        leads.push(lead);
        transform.push(row);
    }

    reduce_basis(ring, n_orig, basis, leads, transform, mo, to)
}

/// Minimalize, make monic, fully interreduce tails and sort ascending by
/// leading monomial. Transform rows are carried through every step.
fn reduce_basis(
    ring: &PolyRing,
    n_orig: usize,
    basis: Vec<PolyVec>,
    leads: Vec<VecTerm>,
    transform: Vec<Vec<Poly>>,
    mo: ModuleOrder,
    to: MonomialOrder,
) -> GbData {
    let mut idx: Vec<usize> = (0..basis.len()).collect();
    idx.sort_by(|&a, &b| {
        mo.cmp(
            to,
            (leads[a].pos, &leads[a].exps),
            (leads[b].pos, &leads[b].exps),
        )
        .then(a.cmp(&b))
    });

    // minimal set: drop any element whose lead is divisible by a kept lead
    let mut kept: Vec<usize> = Vec::new();
    for &k in &idx {
        let dominated = kept.iter().any(|&h| {
            leads[h].pos == leads[k].pos && divides(&leads[h].exps, &leads[k].exps)
        });
        if !dominated {
            kept.push(k);
        }
    }

    // monic
    let mut out: Vec<PolyVec> = Vec::with_capacity(kept.len());
    let mut out_tf: Vec<Vec<Poly>> = Vec::with_capacity(kept.len());
    let mut out_leads: Vec<VecTerm> = Vec::with_capacity(kept.len());
    for &k in &kept {
        let inv = leads[k].coeff.inv().expect("nonzero lead");
        out.push(basis[k].mul_term(&vec![0; ring.nvars()], &inv));
        out_tf.push(
            transform[k]
                .iter()
                .map(|p| p.scale(&inv))
                .collect::<Vec<_>>(),
        );
        let mut l = leads[k].clone();
        l.coeff = GaussianRational::one();
        out_leads.push(l);
    }

    // interreduce tails against all other elements
    for k in 0..out.len() {
        let others: Vec<PolyVec> = out
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, v)| v.clone())
            .collect();
        let other_leads: Vec<VecTerm> = out_leads
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, t)| t.clone())
            .collect();
        let (q, r) = divide(&out[k], &others, &other_leads, mo, to);
        if out[k] != r {
            let mut row = out_tf[k].clone();
            let other_tf: Vec<&Vec<Poly>> = out_tf
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, t)| t)
                .collect();
            for c in 0..n_orig {
                let mut acc = row[c].clone();
                for (l, ql) in q.iter().enumerate() {
                    if !ql.is_zero() {
                        acc = &acc - &(ql * &other_tf[l][c]);
                    }
                }
                row[c] = acc;
            }
            out[k] = r;
            out_tf[k] = row;
        }
    }

    GbData {
        basis: out,
        leads: out_leads,
        transform: out_tf,
    }
}

/// A finitely generated submodule of Poly^rank, with a lazily computed
/// reduced Groebner basis.
#[derive(Debug, Clone)]
pub struct Submodule {
    ring: PolyRing,
    rank: usize,
    gens: Vec<PolyVec>,
    term_order: MonomialOrder,
    module_order: ModuleOrder,
    gb: OnceLock<Arc<GbData>>,
}

impl Submodule {
    pub fn new(ring: &PolyRing, rank: usize, gens: Vec<PolyVec>) -> Result<Self> {
        Self::with_orders(
            ring,
            rank,
            gens,
            MonomialOrder::default(),
            ModuleOrder::default(),
        )
    }

    pub fn with_orders(
        ring: &PolyRing,
        rank: usize,
        gens: Vec<PolyVec>,
        term_order: MonomialOrder,
        module_order: ModuleOrder,
    ) -> Result<Self> {
        for g in &gens {
            g.ring().same_ring(ring)?;
            if g.rank() != rank {
                return Err(Error::Arity(format!(
                    "generator has rank {}, module has rank {rank}",
                    g.rank()
                )));
            }
        }
        Ok(Submodule {
            ring: ring.clone(),
            rank,
            gens,
            term_order,
            module_order,
            gb: OnceLock::new(),
        })
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        Submodule::new(ring, rank, Vec::new()).expect("empty generator list is valid")
    }

    /// The full free module Poly^rank.
    pub fn full(ring: &PolyRing, rank: usize) -> Self {
        let gens = (0..rank).map(|i| PolyVec::unit(ring, rank, i)).collect();
        Submodule::new(ring, rank, gens).expect("unit vectors are valid")
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[PolyVec] {
        &self.gens
    }

    pub fn term_order(&self) -> MonomialOrder {
        self.term_order
    }

    pub fn module_order(&self) -> ModuleOrder {
        self.module_order
    }

    fn gb_data(&self) -> &GbData {
        self.gb.get_or_init(|| {
            Arc::new(buchberger(
                &self.ring,
                self.rank,
                &self.gens,
                self.module_order,
                self.term_order,
            ))
        })
    }

    /// The unique reduced Groebner basis for this module's orders, sorted
    /// ascending by leading monomial, leading coefficients 1.
    pub fn reduced_basis(&self) -> &[PolyVec] {
        &self.gb_data().basis
    }

    /// The same module regenerated from its reduced basis, making the
    /// generator list itself canonical.
    pub fn canonicalized(&self) -> Result<Submodule> {
        Submodule::with_orders(
            &self.ring,
            self.rank,
            self.reduced_basis().to_vec(),
            self.term_order,
            self.module_order,
        )
    }

    /// Unique remainder of `v` on division by the reduced basis.
    pub fn normal_form(&self, v: &PolyVec) -> Result<PolyVec> {
        v.ring().same_ring(&self.ring)?;
        if v.rank() != self.rank {
            return Err(Error::Arity(format!(
                "vector rank {} vs module rank {}",
                v.rank(),
                self.rank
            )));
        }
        let gb = self.gb_data();
        let (_, r) = divide(v, &gb.basis, &gb.leads, self.module_order, self.term_order);
        Ok(r)
    }

    pub fn contains(&self, v: &PolyVec) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Membership with an explicit certificate: cofactors against the
    /// *original* generators, recovered through the transform rows.
    pub fn represent(&self, v: &PolyVec) -> Result<Option<Vec<Poly>>> {
        v.ring().same_ring(&self.ring)?;
        let gb = self.gb_data();
        let (q, r) = divide(v, &gb.basis, &gb.leads, self.module_order, self.term_order);
        if !r.is_zero() {
            return Ok(None);
        }
        let mut coeffs = vec![Poly::zero(&self.ring); self.gens.len()];
        for (l, ql) in q.iter().enumerate() {
            if ql.is_zero() {
                continue;
            }
            for (c, coeff) in coeffs.iter_mut().enumerate() {
                *coeff = &*coeff + &(ql * &gb.transform[l][c]);
            }
        }
        Ok(Some(coeffs))
    }

    pub fn module_equal(&self, other: &Submodule) -> Result<bool> {
        self.ring.same_ring(&other.ring)?;
        if self.rank != other.rank {
            return Err(Error::Arity(format!(
                "module ranks differ: {} vs {}",
                self.rank, other.rank
            )));
        }
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Module sum: generators concatenated.
    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.ring.same_ring(&other.ring)?;
        if self.rank != other.rank {
            return Err(Error::Arity("module ranks differ in sum".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Submodule::with_orders(&self.ring, self.rank, gens, self.term_order, self.module_order)
    }

    pub fn is_zero_module(&self) -> bool {
        self.reduced_basis().is_empty()
    }
}

/// The syzygy module of `vectors` v_1..v_m in Poly^k: all (c_1..c_m) with
/// sum(c_i v_i) = 0, as a submodule of Poly^m.
///
/// Computed by elimination: the module generated by (v_i, e_i) in Poly^(k+m)
/// is intersected with the last block by taking the reduced POT basis and
/// keeping the elements whose first k components vanish.
pub fn syzygy_module(ring: &PolyRing, rank: usize, vectors: &[PolyVec]) -> Result<Submodule> {
    let m = vectors.len();
    for v in vectors {
        v.ring().same_ring(ring)?;
        if v.rank() != rank {
            return Err(Error::Arity(format!(
                "syzygy input has rank {}, expected {rank}",
                v.rank()
            )));
        }
    }
    let big_rank = rank + m;
    let mut gens = Vec::with_capacity(m);
    for (i, v) in vectors.iter().enumerate() {
        let mut comps = v.comps().to_vec();
        comps.extend((0..m).map(|j| {
            if j == i {
                Poly::one(ring)
            } else {
                Poly::zero(ring)
            }
        }));
        gens.push(PolyVec::new(ring, comps)?);
    }
    let embedded = Submodule::with_orders(
        ring,
        big_rank,
        gens,
        MonomialOrder::default(),
        ModuleOrder::PositionOverTerm,
    )?;
    let mut syz_gens = Vec::new();
    for b in embedded.reduced_basis() {
        if b.comps()[..rank].iter().all(|c| c.is_zero()) {
            syz_gens.push(PolyVec::new(ring, b.comps()[rank..].to_vec())?);
        }
    }
    Submodule::new(ring, m, syz_gens)
}

/// Syzygies of a list of polynomials, as the rank-1 case of `syzygy_module`.
pub fn syzygy_of_polys(ring: &PolyRing, polys: &[Poly]) -> Result<Submodule> {
    let vectors: Vec<PolyVec> = polys
        .iter()
        .map(|p| PolyVec::new(ring, vec![p.clone()]))
        .collect::<Result<_>>()?;
    syzygy_module(ring, 1, &vectors)
}

/// An ideal of the polynomial ring: the rank-1 specialization of `Submodule`
/// with a polynomial-level API.
#[derive(Debug, Clone)]
pub struct Ideal {
    module: Submodule,
}

impl Ideal {
    pub fn new(ring: &PolyRing, gens: Vec<Poly>) -> Result<Self> {
        Self::with_order(ring, gens, MonomialOrder::default())
    }

    pub fn with_order(ring: &PolyRing, gens: Vec<Poly>, order: MonomialOrder) -> Result<Self> {
        let vecs: Vec<PolyVec> = gens
            .into_iter()
            .map(|p| PolyVec::new(ring, vec![p]))
            .collect::<Result<_>>()?;
        Ok(Ideal {
            module: Submodule::with_orders(ring, 1, vecs, order, ModuleOrder::default())?,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        self.module.ring()
    }

    pub fn gens(&self) -> Vec<&Poly> {
        self.module.gens().iter().map(|v| v.comp(0)).collect()
    }

    pub fn order(&self) -> MonomialOrder {
        self.module.term_order()
    }

    /// The unique reduced Groebner basis.
    pub fn groebner_basis(&self) -> Vec<&Poly> {
        self.module
            .reduced_basis()
            .iter()
            .map(|v| v.comp(0))
            .collect()
    }

    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        let v = PolyVec::new(self.ring(), vec![f.clone()])?;
        Ok(self.module.normal_form(&v)?.comp(0).clone())
    }

    pub fn normal_form_vec(&self, v: &PolyVec) -> Result<PolyVec> {
        let ring = self.ring().clone();
        let comps: Result<Vec<Poly>> = v.comps().iter().map(|c| self.normal_form(c)).collect();
        PolyVec::new(&ring, comps?)
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Cofactors of `f` against the original generators, if `f` is a member.
    pub fn represent(&self, f: &Poly) -> Result<Option<Vec<Poly>>> {
        let v = PolyVec::new(self.ring(), vec![f.clone()])?;
        self.module.represent(&v)
    }

    pub fn is_zero(&self) -> bool {
        self.module.reduced_basis().is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.module
            .reduced_basis()
            .iter()
            .any(|v| v.comp(0).is_constant() && !v.comp(0).is_zero())
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn ideal_equal(&self, other: &Ideal) -> Result<bool> {
        self.module.module_equal(&other.module)
    }

    pub fn as_module(&self) -> &Submodule {
        &self.module
    }
}

pub fn ideal_member(f: &Poly, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn module_member(v: &PolyVec, module: &Submodule) -> Result<bool> {
    module.contains(v)
}

pub fn module_equal(a: &Submodule, b: &Submodule) -> Result<bool> {
    a.module_equal(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring2() -> PolyRing {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    fn ring3() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    fn pv(ring: &PolyRing, comps: &[&str]) -> PolyVec {
        PolyVec::new(
            ring,
            comps.iter().map(|s| ring.parse(s).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn monomial_ideal_basis_is_itself() {
        let r = ring2();
        let i = Ideal::new(&r, vec![r.parse("x*y").unwrap(), r.parse("x^2").unwrap()]).unwrap();
        let gb: Vec<String> = i.groebner_basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(gb, vec!["x*y", "x^2"], "sorted ascending by leading monomial");
    }

    #[test]
    fn univariate_buchberger_computes_gcd() {
        let r = PolyRing::new(&["x"]).unwrap();
        let i = Ideal::new(
            &r,
            vec![r.parse("x^3-1").unwrap(), r.parse("x^2-1").unwrap()],
        )
        .unwrap();
        let gb: Vec<String> = i.groebner_basis().iter().map(|p| p.to_string()).collect();
        assert_eq!(gb, vec!["x - 1"]);
    }

    #[test]
    fn normal_form_against_cone_ideal() {
        let r = ring3();
        let i = Ideal::new(&r, vec![r.parse("x^2+4*y*z").unwrap()]).unwrap();
        let f = r.parse("4*x^2+16*y^2+16*z^2").unwrap();
        let nf = i.normal_form(&f).unwrap();
        assert_eq!(nf, r.parse("16*y^2+16*z^2-16*y*z").unwrap());
    }

    #[test]
    fn normal_form_against_crossing_ideal_is_nonzero() {
        let r = ring2();
        let i = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let f = r.parse("1-(x^2+y^2)").unwrap();
        let nf = i.normal_form(&f).unwrap();
        assert_eq!(nf, r.parse("1-x^2-y^2").unwrap());
        assert!(!i.contains(&f).unwrap());
    }

    #[test]
    fn zero_and_unit_ideals_are_flagged() {
        let r = ring2();
        let z = Ideal::new(&r, vec![Poly::zero(&r)]).unwrap();
        assert!(z.is_zero() && !z.is_unit());
        let u = Ideal::new(&r, vec![r.parse("x").unwrap(), r.parse("x+1").unwrap()]).unwrap();
        assert!(u.is_unit() && !u.is_proper_nonzero());
        assert_eq!(u.groebner_basis().len(), 1);
    }

    #[test]
    fn groebner_is_idempotent() {
        let r = ring3();
        let i = Ideal::new(
            &r,
            vec![
                r.parse("x^2+4*y*z").unwrap(),
                r.parse("x*y - z^2").unwrap(),
            ],
        )
        .unwrap();
        let gb1: Vec<Poly> = i.groebner_basis().into_iter().cloned().collect();
        let j = Ideal::new(&r, gb1.clone()).unwrap();
        let gb2: Vec<Poly> = j.groebner_basis().into_iter().cloned().collect();
        assert_eq!(gb1, gb2);
    }

    #[test]
    fn lex_and_grevlex_bases_generate_the_same_ideal() {
        let r = ring2();
        let gens = vec![r.parse("x^2 - y").unwrap(), r.parse("y^2 - x").unwrap()];
        let a = Ideal::with_order(&r, gens.clone(), MonomialOrder::GrevLex).unwrap();
        let b = Ideal::with_order(&r, gens, MonomialOrder::Lex).unwrap();
        for p in a.groebner_basis() {
            assert!(b.contains(p).unwrap());
        }
        for p in b.groebner_basis() {
            assert!(a.contains(p).unwrap());
        }
        // lex basis of this ideal eliminates x from some element
        assert!(b
            .groebner_basis()
            .iter()
            .any(|p| p.terms().all(|(e, _)| e[0] == 0)));
    }

    #[test]
    fn syzygies_of_crossing_jacobian() {
        let r = ring2();
        let syz = syzygy_of_polys(
            &r,
            &[
                r.parse("y").unwrap(),
                r.parse("x").unwrap(),
                r.parse("-x*y").unwrap(),
            ],
        )
        .unwrap();
        assert!(syz.contains(&pv(&r, &["x", "0", "1"])).unwrap());
        assert!(syz.contains(&pv(&r, &["0", "y", "1"])).unwrap());
        // every syzygy generator actually annihilates the input
        let v = [
            r.parse("y").unwrap(),
            r.parse("x").unwrap(),
            r.parse("-x*y").unwrap(),
        ];
        for s in syz.reduced_basis() {
            let mut acc = Poly::zero(&r);
            for (c, p) in s.comps().iter().zip(&v) {
                acc = &acc + &(c * p);
            }
            assert!(acc.is_zero(), "syzygy {s} fails to annihilate");
        }
    }

    #[test]
    fn syzygy_of_two_variables_is_the_koszul_relation() {
        let r = ring2();
        let syz =
            syzygy_of_polys(&r, &[r.parse("x").unwrap(), r.parse("y").unwrap()]).unwrap();
        let expect = Submodule::new(&r, 2, vec![pv(&r, &["y", "-x"])]).unwrap();
        assert!(syz.module_equal(&expect).unwrap());
    }

    #[test]
    fn module_membership_and_equality() {
        let r = ring2();
        let m = Submodule::new(&r, 2, vec![pv(&r, &["x", "0"]), pv(&r, &["0", "y"])]).unwrap();
        assert!(m.contains(&pv(&r, &["x", "0"])).unwrap());
        assert!(m.contains(&pv(&r, &["x^2*y", "x*y^2"])).unwrap());
        assert!(!m.contains(&pv(&r, &["1", "0"])).unwrap());
        assert!(!m.contains(&pv(&r, &["y", "0"])).unwrap());

        let bigger = Submodule::new(
            &r,
            2,
            vec![pv(&r, &["x", "0"]), pv(&r, &["0", "y"]), pv(&r, &["x", "y"])],
        )
        .unwrap();
        assert!(m.module_equal(&bigger).unwrap());
        let other = Submodule::new(&r, 2, vec![pv(&r, &["y", "0"]), pv(&r, &["0", "y"])]).unwrap();
        assert!(!m.module_equal(&other).unwrap());
    }

    #[test]
    fn represent_recovers_exact_cofactors() {
        let r = ring3();
        let gens = vec![
            r.parse("x^2+4*y*z").unwrap(),
            r.parse("y^2 - x").unwrap(),
        ];
        let i = Ideal::new(&r, gens.clone()).unwrap();
        let f = &(&r.parse("z").unwrap() * &gens[0]) + &(&r.parse("x*y-1").unwrap() * &gens[1]);
        let cofs = i.represent(&f).unwrap().expect("member by construction");
        let mut recon = Poly::zero(&r);
        for (c, g) in cofs.iter().zip(&gens) {
            recon = &recon + &(c * g);
        }
        assert_eq!(recon, f, "certificate must re-expand to the input");
        assert_eq!(i.represent(&r.parse("x").unwrap()).unwrap(), None);
    }

    #[test]
    fn reduced_basis_is_self_reduced() {
        let r = ring3();
        let i = Ideal::new(
            &r,
            vec![
                r.parse("x^2 + y^2 + z^2 - 1").unwrap(),
                r.parse("x*y - z").unwrap(),
                r.parse("x - z^2").unwrap(),
            ],
        )
        .unwrap();
        let gb = i.groebner_basis();
        for (k, g) in gb.iter().enumerate() {
            let (le, lc) = g.leading_term(MonomialOrder::GrevLex).unwrap();
            assert!(lc.is_one(), "leading coefficient normalized");
            for (h_idx, h) in gb.iter().enumerate() {
                if h_idx == k {
                    continue;
                }
                let (he, _) = h.leading_term(MonomialOrder::GrevLex).unwrap();
                for (e, _) in g.terms() {
                    assert!(
                        !divides(he, e),
                        "term of basis element {k} divisible by lead of {h_idx}"
                    );
                }
                let _ = le;
            }
        }
    }
}
