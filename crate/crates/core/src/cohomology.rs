//! Chevalley-Eilenberg complex of a free Lie algebroid with module
//! coefficients: the differential, degree-truncated rank reports, the Bott
//! connection on a free complement of a foliation, and dual bases for free
//! logarithmic generator systems.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebroid::LieAlgebroid;
use crate::error::{Error, Result};
use crate::fields::VectorField;
use crate::forms::Foliation;
use crate::groebner::Submodule;
use crate::linalg::{self, ScalarMatrix};
use crate::loggeo::{saito_free_check, DivisorChart};
use crate::poly::{monomials_up_to, Poly};
use crate::ratfun::{fraction_matrix_inverse, RationalFunction};
use crate::rational::GaussianRational;
use crate::ring::PolyRing;

/// Coefficients for the complex: a free module of rank `q` together with the
/// action of every algebroid basis section, flat along the algebroid.
///
/// `actions[s]` is the q x q matrix whose column `j` is the action of basis
/// section `e_s` on the j-th module basis element.
#[derive(Debug, Clone)]
pub struct CoefficientModule {
    ring: PolyRing,
    rank: usize,
    actions: Vec<Vec<Vec<Poly>>>,
}

impl CoefficientModule {
    /// Validates shapes and flatness: for all basis pairs the curvature
    /// operator must equal the action of the bracket.
    pub fn new(a: &LieAlgebroid, rank: usize, actions: Vec<Vec<Vec<Poly>>>) -> Result<Self> {
        let ring = a.ring().clone();
        let r = a.rank();
        if actions.len() != r {
            return Err(Error::Arity(format!(
                "expected {} action matrices, got {}",
                r,
                actions.len()
            )));
        }
        for mat in &actions {
            if mat.len() != rank || mat.iter().any(|row| row.len() != rank) {
                return Err(Error::Arity(format!(
                    "action matrices must be {rank} x {rank}"
                )));
            }
            for row in mat {
                for p in row {
                    ring.same_ring(p.ring())?;
                }
            }
        }
        // Curvature on basis pairs: a(e_s)(A_t) - a(e_t)(A_s) + [A_s, A_t]
        // must equal sum_u c^u_{st} A_u entrywise.
        for s in 0..r {
            for t in (s + 1)..r {
                for i in 0..rank {
                    for j in 0..rank {
                        let mut lhs = &a.anchor_field(s).apply(&actions[t][i][j])?
                            - &a.anchor_field(t).apply(&actions[s][i][j])?;
                        for l in 0..rank {
                            lhs = &lhs + &(&actions[s][i][l] * &actions[t][l][j]);
                            lhs = &lhs - &(&actions[t][i][l] * &actions[s][l][j]);
                        }
                        let mut rhs = Poly::zero(&ring);
                        for u in 0..r {
                            rhs = &rhs + &(a.struct_const(s, t, u) * &actions[u][i][j]);
                        }
                        if lhs != rhs {
                            return Err(Error::Domain(format!(
                                "coefficient action is not flat on the basis pair ({s}, {t})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(CoefficientModule {
            ring,
            rank,
            actions,
        })
    }

    /// Rank-`q` module with the zero action: sections act through the anchor
    /// alone.
    pub fn trivial(a: &LieAlgebroid, rank: usize) -> Self {
        let ring = a.ring().clone();
        let zero = Poly::zero(&ring);
        let actions = vec![vec![vec![zero; rank]; rank]; a.rank()];
        CoefficientModule {
            ring,
            rank,
            actions,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn action(&self, s: usize) -> &[Vec<Poly>] {
        &self.actions[s]
    }

    /// Applies the covariant derivative along basis section `s` to a section
    /// given by its coefficient vector.
    pub fn nabla(&self, a: &LieAlgebroid, s: usize, v: &[Poly]) -> Result<Vec<Poly>> {
        self.ring.same_ring(a.ring())?;
        if self.actions.len() != a.rank() {
            return Err(Error::Arity(format!(
                "coefficient module carries {} actions, algebroid has rank {}",
                self.actions.len(),
                a.rank()
            )));
        }
        if v.len() != self.rank {
            return Err(Error::Arity(format!(
                "section has {} components, module rank is {}",
                v.len(),
                self.rank
            )));
        }
        let anchor = a.anchor_field(s);
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut comp = anchor.apply(&v[i])?;
            for l in 0..self.rank {
                comp = &comp + &(&self.actions[s][i][l] * &v[l]);
            }
            out.push(comp);
        }
        Ok(out)
    }
}

/// Alternating cochain: a map from strictly increasing index tuples to
/// coefficient vectors. Zero values are not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct CECochain {
    ring: PolyRing,
    degree: usize,
    rank: usize,
    values: BTreeMap<Vec<usize>, Vec<Poly>>,
}

impl CECochain {
    pub fn new(
        ring: &PolyRing,
        degree: usize,
        rank: usize,
        entries: Vec<(Vec<usize>, Vec<Poly>)>,
    ) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (tuple, vals) in entries {
            if tuple.len() != degree {
                return Err(Error::Arity(format!(
                    "tuple {:?} does not have degree {}",
                    tuple, degree
                )));
            }
            if !tuple.windows(2).all(|w| w[0] < w[1]) {
                return Err(Error::Domain(format!(
                    "tuple {:?} is not strictly increasing",
                    tuple
                )));
            }
            if vals.len() != rank {
                return Err(Error::Arity(format!(
                    "value for {:?} has {} components, expected {}",
                    tuple,
                    vals.len(),
                    rank
                )));
            }
            for p in &vals {
                ring.same_ring(p.ring())?;
            }
            if vals.iter().any(|p| !p.is_zero()) {
                values.insert(tuple, vals);
            }
        }
        Ok(CECochain {
            ring: ring.clone(),
            degree,
            rank,
            values,
        })
    }

    pub fn zero(ring: &PolyRing, degree: usize, rank: usize) -> Self {
        CECochain {
            ring: ring.clone(),
            degree,
            rank,
            values: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Value on a sorted tuple; zero vector if absent.
    pub fn value(&self, tuple: &[usize]) -> Vec<Poly> {
        match self.values.get(tuple) {
            Some(v) => v.clone(),
            None => vec![Poly::zero(&self.ring); self.rank],
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Poly>)> {
        self.values.iter()
    }
}

/// All strictly increasing k-tuples over 0..n, lexicographically.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// The Chevalley-Eilenberg differential with module coefficients:
///
/// (dc)(e_0..e_k) = sum_j (-1)^j nabla_{e_j} c(.. e_j omitted ..)
///               + sum_{a<b} (-1)^{a+b} c([e_a, e_b], .. both omitted ..),
///
/// where the bracket argument is expanded through the structure functions
/// and re-sorted with the alternating sign.
pub fn ce_differential(
    c: &CECochain,
    a: &LieAlgebroid,
    m: &CoefficientModule,
) -> Result<CECochain> {
    let ring = a.ring().clone();
    ring.same_ring(c.ring())?;
    ring.same_ring(m.ring())?;
    if c.rank != m.rank() {
        return Err(Error::Arity(format!(
            "cochain rank {} does not match module rank {}",
            c.rank,
            m.rank()
        )));
    }
    if m.actions.len() != a.rank() {
        return Err(Error::Arity(format!(
            "coefficient module carries {} actions, algebroid has rank {}",
            m.actions.len(),
            a.rank()
        )));
    }
    let r = a.rank();
    if let Some(t) = c.values.keys().find(|t| t.iter().any(|&i| i >= r)) {
        return Err(Error::Domain(format!(
            "tuple {:?} indexes past the algebroid rank {}",
            t, r
        )));
    }
    let k = c.degree;
    let q = c.rank;
    let mut values = BTreeMap::new();
    for tuple in combinations(r, k + 1) {
        let mut acc = vec![Poly::zero(&ring); q];
        // Derivative terms.
        for j in 0..=k {
            let mut rest = tuple.clone();
            rest.remove(j);
            if let Some(w) = c.values.get(&rest) {
                let nab = m.nabla(a, tuple[j], w)?;
                for i in 0..q {
                    acc[i] = if j % 2 == 0 {
                        &acc[i] + &nab[i]
                    } else {
                        &acc[i] - &nab[i]
                    };
                }
            }
        }
        // Bracket terms, expanded through the structure functions.
        for pa in 0..=k {
            for pb in (pa + 1)..=k {
                let mut rest = tuple.clone();
                rest.remove(pb);
                rest.remove(pa);
                for u in 0..r {
                    let cu = a.struct_const(tuple[pa], tuple[pb], u);
                    if cu.is_zero() || rest.contains(&u) {
                        continue;
                    }
                    let pos = rest.iter().filter(|&&x| x < u).count();
                    let mut full = rest.clone();
                    full.insert(pos, u);
                    if let Some(w) = c.values.get(&full) {
                        let negate = (pa + pb + pos) % 2 == 1;
                        for i in 0..q {
                            let term = cu * &w[i];
                            acc[i] = if negate {
                                &acc[i] - &term
                            } else {
                                &acc[i] + &term
                            };
                        }
                    }
                }
            }
        }
        if acc.iter().any(|p| !p.is_zero()) {
            values.insert(tuple, acc);
        }
    }
    Ok(CECochain {
        ring,
        degree: k + 1,
        rank: q,
        values,
    })
}

/// True iff the differential squares to zero on every basis cochain of
/// degree 0 and 1 with a monomial coefficient of total degree at most `dmax`.
pub fn d_squared_check(a: &LieAlgebroid, m: &CoefficientModule, dmax: u32) -> Result<bool> {
    let ring = a.ring().clone();
    let q = m.rank();
    let monos = monomials_up_to(ring.nvars(), dmax);
    for k in 0..=1usize {
        for tuple in combinations(a.rank(), k) {
            for alpha in &monos {
                for p in 0..q {
                    let mut v = vec![Poly::zero(&ring); q];
                    v[p] = Poly::monomial(&ring, alpha.clone(), GaussianRational::one());
                    let c = CECochain::new(&ring, k, q, vec![(tuple.clone(), v)])?;
                    let dd = ce_differential(&ce_differential(&c, a, m)?, a, m)?;
                    if !dd.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Total-degree bound for the polynomial coefficients of a slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationWindow {
    pub dmax: u32,
}

impl TruncationWindow {
    pub fn new(dmax: u32) -> Self {
        TruncationWindow { dmax }
    }
}

/// Exact dimensions for one cohomological degree of the truncated complex.
///
/// `kernel_dim` is the dimension of the full kernel of the differential
/// restricted to the slice; `image_dim` is the dimension of the part of the
/// incoming image that lands inside the slice. `edge_affected` records
/// whether the window clipped a coefficient while either map was applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub slice_dim: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub betti_estimate: usize,
    pub edge_affected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub dmax: u32,
    pub degrees: Vec<DegreeReport>,
}

impl CohomologyReport {
    /// One line per degree: degree, slice dimension, kernel, image, estimate,
    /// edge flag.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "coefficient degree window: {}", self.dmax);
        for d in &self.degrees {
            let _ = writeln!(
                out,
                "degree {}: slice {}, kernel {}, image {}, estimate {}, edge-affected {}",
                d.degree, d.slice_dim, d.kernel_dim, d.image_dim, d.betti_estimate, d.edge_affected
            );
        }
        out
    }
}

struct SliceDifferential {
    domain_dim: usize,
    rank_full: usize,
    rank_high: usize,
    clipped: bool,
}

/// Matrix data of the differential restricted to the degree-`k` slice with
/// coefficients of total degree <= dmax. Output coordinates are not
/// truncated, so kernel ranks are exact; the high-coordinate rank lets the
/// caller cut images back down to the slice.
fn slice_differential(
    a: &LieAlgebroid,
    m: &CoefficientModule,
    dmax: u32,
    k: usize,
) -> Result<SliceDifferential> {
    let ring = a.ring();
    let q = m.rank();
    let monos = monomials_up_to(ring.nvars(), dmax);
    let mut cols: Vec<BTreeMap<(Vec<usize>, Vec<u32>, usize), GaussianRational>> = Vec::new();
    let mut clipped = false;
    for tuple in combinations(a.rank(), k) {
        for alpha in &monos {
            for p in 0..q {
                let mut v = vec![Poly::zero(ring); q];
                v[p] = Poly::monomial(ring, alpha.clone(), GaussianRational::one());
                let c = CECochain::new(ring, k, q, vec![(tuple.clone(), v)])?;
                let dc = ce_differential(&c, a, m)?;
                let mut col = BTreeMap::new();
                for (out_tuple, vals) in dc.entries() {
                    for (i, poly) in vals.iter().enumerate() {
                        for (exps, coeff) in poly.terms() {
                            if exps.iter().sum::<u32>() > dmax {
                                clipped = true;
                            }
                            col.insert((out_tuple.clone(), exps.clone(), i), coeff.clone());
                        }
                    }
                }
                cols.push(col);
            }
        }
    }
    let domain_dim = cols.len();
    let mut coord_index = BTreeMap::new();
    for col in &cols {
        for key in col.keys() {
            let next = coord_index.len();
            coord_index.entry(key.clone()).or_insert(next);
        }
    }
    if coord_index.is_empty() {
        return Ok(SliceDifferential {
            domain_dim,
            rank_full: 0,
            rank_high: 0,
            clipped,
        });
    }
    let high: Vec<usize> = coord_index
        .iter()
        .filter(|((_, exps, _), _)| exps.iter().sum::<u32>() > dmax)
        .map(|(_, &idx)| idx)
        .collect();
    let width = coord_index.len();
    let mat: ScalarMatrix = cols
        .iter()
        .map(|col| {
            let mut row = vec![GaussianRational::zero(); width];
            for (key, coeff) in col {
                row[coord_index[key]] = coeff.clone();
            }
            row
        })
        .collect();
    let rank_full = linalg::rank(&mat);
    let rank_high = if high.is_empty() {
        0
    } else {
        let sub: ScalarMatrix = mat
            .iter()
            .map(|row| high.iter().map(|&j| row[j].clone()).collect())
            .collect();
        linalg::rank(&sub)
    };
    Ok(SliceDifferential {
        domain_dim,
        rank_full,
        rank_high,
        clipped,
    })
}

/// Truncated rank report in degrees 0 and 1.
pub fn truncated_cohomology_ranks(
    a: &LieAlgebroid,
    m: &CoefficientModule,
    w: TruncationWindow,
) -> Result<CohomologyReport> {
    truncated_cohomology_ranks_up_to(a, m, w, 1)
}

/// Truncated rank report up to the requested cohomological degree (clamped
/// at the algebroid rank). Kernel dimensions are exact on the slice; image
/// dimensions count the incoming image intersected with the slice, so the
/// estimate is kernel minus image of the stated finite-dimensional spaces.
pub fn truncated_cohomology_ranks_up_to(
    a: &LieAlgebroid,
    m: &CoefficientModule,
    w: TruncationWindow,
    max_degree: usize,
) -> Result<CohomologyReport> {
    a.ring().same_ring(m.ring())?;
    let kmax = max_degree.min(a.rank());
    let mut diffs = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        diffs.push(slice_differential(a, m, w.dmax, k)?);
    }
    let mut degrees = Vec::with_capacity(kmax + 1);
    for k in 0..=kmax {
        let d = &diffs[k];
        let kernel_dim = d.domain_dim - d.rank_full;
        let image_dim = if k == 0 {
            0
        } else {
            diffs[k - 1].rank_full - diffs[k - 1].rank_high
        };
        degrees.push(DegreeReport {
            degree: k,
            slice_dim: d.domain_dim,
            kernel_dim,
            image_dim,
            betti_estimate: kernel_dim.saturating_sub(image_dim),
            edge_affected: d.clipped || (k > 0 && diffs[k - 1].clipped),
        });
    }
    Ok(CohomologyReport {
        dmax: w.dmax,
        degrees,
    })
}

/// Lie algebroid whose sections are the foliation generators: the anchor is
/// the identity inclusion and the structure functions come from expanding
/// pairwise brackets over the generators.
pub fn foliation_algebroid(f: &Foliation) -> Result<LieAlgebroid> {
    let ring = f.ring().clone();
    if f.gens().is_empty() {
        return Err(Error::Arity("foliation has no generators".into()));
    }
    if !f.check_involutivity() {
        return Err(Error::Domain(
            "foliation is not involutive, so its generators do not span a bracket-closed module"
                .into(),
        ));
    }
    let k = f.gens().len();
    let module = f.module();
    let zero = Poly::zero(&ring);
    let mut consts = vec![vec![vec![zero; k]; k]; k];
    for s in 0..k {
        for t in (s + 1)..k {
            let br = f.gens()[s].lie_bracket(&f.gens()[t])?;
            let rep = module.represent(&br.to_vec())?.ok_or_else(|| {
                Error::Domain(format!(
                    "bracket of generators {s} and {t} leaves the generated module"
                ))
            })?;
            for (u, coeff) in rep.into_iter().enumerate() {
                consts[t][s][u] = -&coeff;
                consts[s][t][u] = coeff;
            }
        }
    }
    LieAlgebroid::new(&ring, f.gens().to_vec(), consts)
}

/// Flat action of an involutive foliation on a free complement inside the
/// tangent module: the class of the bracket, re-expanded over the complement
/// basis modulo the foliation.
pub fn bott_connection(f: &Foliation, normal_basis: &[VectorField]) -> Result<CoefficientModule> {
    let ring = f.ring().clone();
    if normal_basis.is_empty() {
        return Err(Error::Arity("complement basis is empty".into()));
    }
    for nb in normal_basis {
        ring.same_ring(nb.ring())?;
    }
    if !f.check_involutivity() {
        return Err(Error::Domain(
            "foliation is not involutive; the quotient carries no canonical flat action".into(),
        ));
    }
    let alg = foliation_algebroid(f)?;
    let q = normal_basis.len();
    let n = ring.nvars();
    let mut gens: Vec<_> = normal_basis.iter().map(|v| v.to_vec()).collect();
    gens.extend(f.gens().iter().map(|v| v.to_vec()));
    let combined = Submodule::new(&ring, n, gens)?;
    let mut actions = Vec::with_capacity(f.gens().len());
    for (s, fs) in f.gens().iter().enumerate() {
        let mut mat = vec![vec![Poly::zero(&ring); q]; q];
        for (j, nj) in normal_basis.iter().enumerate() {
            let br = fs.lie_bracket(nj)?;
            let rep = combined.represent(&br.to_vec())?.ok_or_else(|| {
                Error::Basis(format!(
                    "bracket of foliation generator {s} with complement section {j} \
                     leaves the span of complement and foliation"
                ))
            })?;
            for i in 0..q {
                mat[i][j] = rep[i].clone();
            }
        }
        actions.push(mat);
    }
    // A flatness failure here means the complement classes were not a free
    // basis: the expansion coefficients were not canonical.
    CoefficientModule::new(&alg, q, actions).map_err(|e| match e {
        Error::Domain(msg) => Error::Basis(msg),
        other => other,
    })
}

/// Dual basis to a free system of logarithmic generators, with rational
/// function coefficients whose denominators divide the chart generator.
#[derive(Debug, Clone)]
pub struct DualBasis {
    ring: PolyRing,
    forms: Vec<Vec<RationalFunction>>,
}

impl DualBasis {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    /// `forms()[i][k]` is the coefficient of the k-th coordinate differential
    /// in the i-th dual form.
    pub fn forms(&self) -> &[Vec<RationalFunction>] {
        &self.forms
    }

    /// Pairing of the i-th dual form against a field.
    pub fn pair(&self, i: usize, d: &VectorField) -> Result<RationalFunction> {
        self.ring.same_ring(d.ring())?;
        if i >= self.forms.len() {
            return Err(Error::Arity(format!(
                "form index {i} out of range ({} forms)",
                self.forms.len()
            )));
        }
        let mut acc = RationalFunction::zero(&self.ring);
        for (k, coeff) in self.forms[i].iter().enumerate() {
            acc = &acc + &(coeff * &RationalFunction::from_poly(d.coeffs()[k].clone()));
        }
        Ok(acc)
    }
}

/// Dual basis of a generator system passing the freeness determinant test:
/// the inverse transpose of the coefficient matrix, so that form `i` pairs
/// with generator `j` to the Kronecker delta.
pub fn log_derham_generators(chart: &DivisorChart, log_gens: &[VectorField]) -> Result<DualBasis> {
    let report = saito_free_check(log_gens, chart)?;
    if !report.free {
        return Err(Error::NotFree(format!(
            "generator determinant {} is not a unit multiple of {}",
            report.determinant,
            chart.generator()
        )));
    }
    let ring = chart.ring().clone();
    let n = ring.nvars();
    let mut mt = vec![vec![Poly::zero(&ring); n]; n];
    for (j, d) in log_gens.iter().enumerate() {
        for (i, c) in d.coeffs().iter().enumerate() {
            mt[i][j] = c.clone();
        }
    }
    let forms = fraction_matrix_inverse(&mt)?;
    Ok(DualBasis { ring, forms })
}
