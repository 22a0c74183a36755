//! Bilinear and Hermitian pairings on free modules, quotient metrics on
//! a subvariety, coefficientwise and Koszul/Levi-Civita connections, and
//! invariance of the standard connection under finite linear group
//! actions.

use crate::algebroid::LieAlgebroid;
use crate::doubled::DoubledPoly;
use crate::error::{Error, Result};
use crate::fields::VectorField;
use crate::groebner::{Ideal, PolyVec};
use crate::linalg::{self, ScalarMatrix};
use crate::loggeo::{
    cond1_check, log_derivations, quotient_representative, tangential_projection, DivisorChart,
};
use crate::poly::{monomials_up_to, Poly};
use crate::ratfun::{fraction_matrix_inverse, poly_det, RationalFunction};
use crate::ring::PolyRing;

/// A symmetric bilinear form on a free module, given by its Gram matrix
/// over the polynomial ring.
#[derive(Debug, Clone)]
pub struct BilinearMetric {
    ring: PolyRing,
    mat: Vec<Vec<Poly>>,
    det: Poly,
}

impl BilinearMetric {
    pub fn new(ring: &PolyRing, mat: Vec<Vec<Poly>>) -> Result<Self> {
        let r = mat.len();
        for row in &mat {
            if row.len() != r {
                return Err(Error::Arity(format!(
                    "metric matrix must be square, got a row of length {}",
                    row.len()
                )));
            }
            for entry in row {
                ring.same_ring(entry.ring())?;
            }
        }
        for i in 0..r {
            for j in 0..i {
                if mat[i][j] != mat[j][i] {
                    return Err(Error::Domain(format!(
                        "metric matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        let det = poly_det(&mat)?;
        Ok(BilinearMetric {
            ring: ring.clone(),
            mat,
            det,
        })
    }

    pub fn identity(ring: &PolyRing, rank: usize) -> Self {
        let mat = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            Poly::one(ring)
                        } else {
                            Poly::zero(ring)
                        }
                    })
                    .collect()
            })
            .collect();
        BilinearMetric::new(ring, mat).expect("identity matrix is a metric")
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.mat.len()
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.mat[i][j]
    }

    pub fn det(&self) -> &Poly {
        &self.det
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.det.is_zero()
    }

    /// Pairs two coefficient vectors: sum of v_i g_ij w_j.
    pub fn pair(&self, v: &PolyVec, w: &PolyVec) -> Result<Poly> {
        if v.rank() != self.rank() || w.rank() != self.rank() {
            return Err(Error::Arity(format!(
                "metric of rank {} cannot pair vectors of rank {} and {}",
                self.rank(),
                v.rank(),
                w.rank()
            )));
        }
        self.ring.same_ring(v.ring())?;
        self.ring.same_ring(w.ring())?;
        let mut out = Poly::zero(&self.ring);
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                out = &out + &(&(v.comp(i) * &self.mat[i][j]) * w.comp(j));
            }
        }
        Ok(out)
    }
}

/// A conjugate-symmetric form on a free module; entries live in the
/// doubled ring where `xbar` denotes the conjugate of `x`.
#[derive(Debug, Clone)]
pub struct HermitianMetric {
    base: PolyRing,
    mat: Vec<Vec<DoubledPoly>>,
}

impl HermitianMetric {
    pub fn new(base: &PolyRing, mat: Vec<Vec<DoubledPoly>>) -> Result<Self> {
        let r = mat.len();
        for row in &mat {
            if row.len() != r {
                return Err(Error::Arity(
                    "Hermitian matrix must be square".into(),
                ));
            }
        }
        // Conjugate symmetry; at i = j this pins the diagonal under conj.
        for i in 0..r {
            for j in 0..=i {
                if mat[i][j] != mat[j][i].conj() {
                    return Err(Error::Domain(format!(
                        "matrix is not conjugate-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(HermitianMetric {
            base: base.clone(),
            mat,
        })
    }

    /// Gram matrix of the standard Hermitian pairing on the given fields.
    pub fn from_fields(fields: &[VectorField]) -> Result<Self> {
        let base = match fields.first() {
            Some(f) => f.ring().clone(),
            None => return Err(Error::Arity("need at least one field".into())),
        };
        let mut mat = Vec::with_capacity(fields.len());
        for f in fields {
            let mut row = Vec::with_capacity(fields.len());
            for g in fields {
                row.push(standard_hermitian(f, g)?);
            }
            mat.push(row);
        }
        HermitianMetric::new(&base, mat)
    }

    pub fn base_ring(&self) -> &PolyRing {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.mat.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &DoubledPoly {
        &self.mat[i][j]
    }
}

/// The flat pairing: sum of the products of matching coefficients.
pub fn standard_bilinear(d1: &VectorField, d2: &VectorField) -> Result<Poly> {
    d1.ring().same_ring(d2.ring())?;
    let mut out = Poly::zero(d1.ring());
    for (f, g) in d1.coeffs().iter().zip(d2.coeffs()) {
        out = &out + &(f * g);
    }
    Ok(out)
}

/// The sesquilinear pairing: sum of f_i conj(g_i), conjugation applied
/// to the second slot. The result lives in the doubled ring.
pub fn standard_hermitian(d1: &VectorField, d2: &VectorField) -> Result<DoubledPoly> {
    d1.ring().same_ring(d2.ring())?;
    let doubled = d1.ring().doubled()?;
    let n = d1.ring().nvars();
    let mut out = DoubledPoly::new(Poly::zero(&doubled), n)?;
    for (f, g) in d1.coeffs().iter().zip(d2.coeffs()) {
        let lhs = DoubledPoly::embed(f, &doubled)?;
        let rhs = DoubledPoly::conj_embed(g, &doubled)?;
        out = &out + &(&lhs * &rhs);
    }
    Ok(out)
}

/// The induced pairing on Y = V(I): pair, then reduce. Both inputs must
/// preserve the ideal so the value only depends on their classes.
pub fn quotient_metric(d1: &VectorField, d2: &VectorField, ideal: &Ideal) -> Result<Poly> {
    let log = log_derivations(ideal)?;
    for d in [d1, d2] {
        if !log.contains(d)? {
            return Err(Error::Domain(format!(
                "{d} does not preserve the ideal; the quotient pairing is undefined"
            )));
        }
    }
    ideal.normal_form(&standard_bilinear(d1, d2)?)
}

/// The coefficientwise connection on a trivialized module: the field is
/// applied to each coefficient of the section.
pub fn standard_connection(d: &VectorField, s: &PolyVec) -> Result<PolyVec> {
    d.ring().same_ring(s.ring())?;
    let comps = s
        .comps()
        .iter()
        .map(|c| d.apply(c))
        .collect::<Result<Vec<Poly>>>()?;
    PolyVec::new(d.ring(), comps)
}

/// Christoffel data of a metric connection on a rank-r algebroid.
/// Entries are exact fractions; denominators divide a power of the
/// metric determinant.
#[derive(Debug, Clone)]
pub struct Connection {
    ring: PolyRing,
    // gamma[i][j][k] is the e_k coefficient of the derivative of e_j
    // along e_i.
    gamma: Vec<Vec<Vec<RationalFunction>>>,
}

impl Connection {
    pub fn new(ring: &PolyRing, gamma: Vec<Vec<Vec<RationalFunction>>>) -> Result<Self> {
        let r = gamma.len();
        for plane in &gamma {
            if plane.len() != r {
                return Err(Error::Arity("Christoffel tensor must be cubic".into()));
            }
            for row in plane {
                if row.len() != r {
                    return Err(Error::Arity("Christoffel tensor must be cubic".into()));
                }
            }
        }
        Ok(Connection {
            ring: ring.clone(),
            gamma,
        })
    }

    pub fn zero(ring: &PolyRing, rank: usize) -> Self {
        let gamma =
            vec![vec![vec![RationalFunction::zero(ring); rank]; rank]; rank];
        Connection {
            ring: ring.clone(),
            gamma,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.gamma.len()
    }

    pub fn entry(&self, i: usize, j: usize, k: usize) -> &RationalFunction {
        &self.gamma[i][j][k]
    }
}

/// Builds the Levi-Civita connection of `metric` on `algebroid` from the
/// Koszul formula on basis sections.
pub fn koszul_christoffel(
    algebroid: &LieAlgebroid,
    metric: &BilinearMetric,
) -> Result<Connection> {
    let ring = algebroid.ring().clone();
    metric.ring().same_ring(&ring)?;
    let r = algebroid.rank();
    if metric.rank() != r {
        return Err(Error::Arity(format!(
            "metric rank {} does not match algebroid rank {r}",
            metric.rank()
        )));
    }
    if !metric.is_nondegenerate() {
        return Err(Error::SingularMetric(
            "Koszul formula needs an invertible Gram matrix".into(),
        ));
    }
    let ginv = fraction_matrix_inverse(metric.matrix())?;

    // koszul[i][j][l] = twice the pairing of the derivative of e_j along
    // e_i with e_l.
    let mut koszul = vec![vec![vec![Poly::zero(&ring); r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for l in 0..r {
                let mut k = algebroid.anchor_field(i).apply(metric.entry(j, l))?;
                k = &k + &algebroid.anchor_field(j).apply(metric.entry(i, l))?;
                k = &k - &algebroid.anchor_field(l).apply(metric.entry(i, j))?;
                for u in 0..r {
                    k = &k + &(algebroid.struct_const(i, j, u) * metric.entry(u, l));
                    k = &k - &(algebroid.struct_const(i, l, u) * metric.entry(u, j));
                    k = &k - &(algebroid.struct_const(j, l, u) * metric.entry(u, i));
                }
                koszul[i][j][l] = k;
            }
        }
    }

    let half = RationalFunction::new(
        Poly::from_int(&ring, 1),
        Poly::from_int(&ring, 2),
    );
    let mut gamma = vec![vec![vec![RationalFunction::zero(&ring); r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut acc = RationalFunction::zero(&ring);
                for l in 0..r {
                    let term = &RationalFunction::from_poly(koszul[i][j][l].clone())
                        * &ginv[l][k];
                    acc = &acc + &term;
                }
                gamma[i][j][k] = &half * &acc;
            }
        }
    }
    Connection::new(&ring, gamma)
}

/// Verifies metric compatibility and torsion-freeness of `conn` on all
/// basis triples, with equalities decided exactly in the fraction field.
pub fn levi_civita_check(
    conn: &Connection,
    algebroid: &LieAlgebroid,
    metric: &BilinearMetric,
) -> Result<bool> {
    let ring = algebroid.ring();
    let r = algebroid.rank();
    if conn.rank() != r || metric.rank() != r {
        return Err(Error::Arity("connection/metric/algebroid ranks differ".into()));
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                // a(e_i)(g_jk) = <de_j, e_k> + <e_j, de_k> along e_i.
                let lhs = RationalFunction::from_poly(
                    algebroid.anchor_field(i).apply(metric.entry(j, k))?,
                );
                let mut rhs = RationalFunction::zero(ring);
                for l in 0..r {
                    let gl = RationalFunction::from_poly(metric.entry(l, k).clone());
                    rhs = &rhs + &(conn.entry(i, j, l) * &gl);
                    let gl = RationalFunction::from_poly(metric.entry(j, l).clone());
                    rhs = &rhs + &(conn.entry(i, k, l) * &gl);
                }
                if lhs != rhs {
                    return Ok(false);
                }
                // Torsion along e_k: Gamma^k_ij - Gamma^k_ji = c^k_ij.
                let torsion = &(conn.entry(i, j, k) - conn.entry(j, i, k))
                    - &RationalFunction::from_poly(algebroid.struct_const(i, j, k).clone());
                if !torsion.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The induced connection on Y = V(g): derive coefficientwise, project
/// tangentially, take the canonical representative. Needs the chart to
/// pass the cond-1 test so the projection lands among the logarithmic
/// derivations.
pub fn induced_connection_on_y(
    d1: &VectorField,
    d2: &VectorField,
    ideal: &Ideal,
) -> Result<VectorField> {
    let gens = ideal.gens();
    if gens.len() != 1 {
        return Err(Error::UnsupportedChart(
            "the induced connection needs a principal chart".into(),
        ));
    }
    let chart = DivisorChart::new(gens[0].clone())?;
    let cond1 = cond1_check(&chart)?;
    if !cond1.holds {
        return Err(Error::UnsupportedChart(format!(
            "gradient pairing defect {} is not in the ideal",
            cond1.witness
        )));
    }
    let log = log_derivations(ideal)?;
    for d in [d1, d2] {
        if !log.contains(d)? {
            return Err(Error::Domain(format!(
                "{d} does not preserve the ideal"
            )));
        }
    }
    let derived = standard_connection(d1, &d2.to_vec())?;
    let projected = tangential_projection(&VectorField::from_vec(&derived)?, &chart)?;
    quotient_representative(&projected.projected, ideal)
}

/// A connection on the trivialized module over the chart, used as the
/// ingredient for the two canonical algebroid connections.
pub type ChartConnection = Box<dyn Fn(&VectorField, &PolyVec) -> Result<PolyVec> + Send + Sync>;

/// The coefficientwise connection as a boxed evaluator.
pub fn standard_chart_connection() -> ChartConnection {
    Box::new(|d, s| standard_connection(d, s))
}

/// The two canonical connections an algebroid carries over a chart
/// connection: derivative along the anchor of the first argument, and
/// derivative along the anchor of the second argument plus the bracket.
pub struct LConnections {
    algebroid: LieAlgebroid,
    chart: ChartConnection,
}

impl LConnections {
    pub fn algebroid(&self) -> &LieAlgebroid {
        &self.algebroid
    }

    /// nabla0_D D' = chart derivative of D' along a(D).
    pub fn nabla_zero(&self, d: &PolyVec, dp: &PolyVec) -> Result<PolyVec> {
        let x = self.algebroid.anchor_of_section(d)?;
        (self.chart)(&x, dp)
    }

    /// nabla1_D D' = chart derivative of D along a(D') plus [D, D'].
    pub fn nabla_one(&self, d: &PolyVec, dp: &PolyVec) -> Result<PolyVec> {
        let y = self.algebroid.anchor_of_section(dp)?;
        let first = (self.chart)(&y, d)?;
        let second = self.algebroid.section_bracket(d, dp)?;
        Ok(first.add(&second))
    }
}

pub fn two_canonical_l_connections(
    algebroid: &LieAlgebroid,
    chart: ChartConnection,
) -> LConnections {
    LConnections {
        algebroid: algebroid.clone(),
        chart,
    }
}

/// A finite group of linear changes of variables, each element stored as
/// the matrix of its action on the coordinates.
#[derive(Debug, Clone)]
pub struct GroupAction {
    ring: PolyRing,
    elements: Vec<ScalarMatrix>,
    inverses: Vec<ScalarMatrix>,
}

impl GroupAction {
    /// Validates that the list is a group: every element invertible,
    /// closed under products and inverses, identity included.
    pub fn new(ring: &PolyRing, elements: Vec<ScalarMatrix>) -> Result<Self> {
        let n = ring.nvars();
        if elements.is_empty() {
            return Err(Error::InvalidAction("empty element list".into()));
        }
        let mut inverses = Vec::with_capacity(elements.len());
        for m in &elements {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(Error::InvalidAction(format!(
                    "element is not an {n}x{n} matrix"
                )));
            }
            match linalg::inverse(m) {
                Some(inv) => inverses.push(inv),
                None => {
                    return Err(Error::InvalidAction(
                        "element is not invertible".into(),
                    ))
                }
            }
        }
        let contains = |m: &ScalarMatrix| elements.iter().any(|e| e == m);
        if !contains(&linalg::identity(n)) {
            return Err(Error::InvalidAction("identity is missing".into()));
        }
        for inv in &inverses {
            if !contains(inv) {
                return Err(Error::InvalidAction(
                    "element list is not closed under inverses".into(),
                ));
            }
        }
        for a in &elements {
            for b in &elements {
                if !contains(&linalg::mat_mul(a, b)) {
                    return Err(Error::InvalidAction(
                        "element list is not closed under products".into(),
                    ));
                }
            }
        }
        Ok(GroupAction {
            ring: ring.clone(),
            elements,
            inverses,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn substitute(&self, mat: &ScalarMatrix, f: &Poly) -> Poly {
        let images: Vec<Poly> = (0..self.ring.nvars())
            .map(|i| {
                let mut img = Poly::zero(&self.ring);
                for (j, c) in mat[i].iter().enumerate() {
                    img = &img + &Poly::var(&self.ring, j).scale(c);
                }
                img
            })
            .collect();
        f.substitute(&images)
    }

    /// (g . f)(x) = f(g^{-1} x).
    pub fn act_on_poly(&self, idx: usize, f: &Poly) -> Poly {
        self.substitute(&self.inverses[idx], f)
    }

    /// (g^{-1} . f)(x) = f(g x).
    pub fn inverse_act_on_poly(&self, idx: usize, f: &Poly) -> Poly {
        self.substitute(&self.elements[idx], f)
    }

    /// Pushforward of a field: coefficients compose with g^{-1} and then
    /// rotate by the matrix of g.
    pub fn act_on_field(&self, idx: usize, d: &VectorField) -> Result<VectorField> {
        self.transform_field(&self.elements[idx], d)
    }

    pub fn inverse_act_on_field(&self, idx: usize, d: &VectorField) -> Result<VectorField> {
        self.transform_field(&self.inverses[idx], d)
    }

    fn transform_field(&self, mat: &ScalarMatrix, d: &VectorField) -> Result<VectorField> {
        let n = self.ring.nvars();
        let inv = linalg::inverse(mat).expect("group elements are invertible");
        let moved: Vec<Poly> = d.coeffs().iter().map(|c| self.substitute(&inv, c)).collect();
        let mut coeffs = vec![Poly::zero(&self.ring); n];
        for i in 0..n {
            for (j, c) in moved.iter().enumerate() {
                coeffs[i] = &coeffs[i] + &c.scale(&mat[i][j]);
            }
        }
        VectorField::new(&self.ring, coeffs)
    }

    /// Sections of the trivial module transform coefficientwise.
    pub fn act_on_section(&self, idx: usize, s: &PolyVec) -> Result<PolyVec> {
        let comps = s.comps().iter().map(|c| self.act_on_poly(idx, c)).collect();
        PolyVec::new(&self.ring, comps)
    }

    pub fn inverse_act_on_section(&self, idx: usize, s: &PolyVec) -> Result<PolyVec> {
        let comps = s
            .comps()
            .iter()
            .map(|c| self.inverse_act_on_poly(idx, c))
            .collect();
        PolyVec::new(&self.ring, comps)
    }
}

/// Tests invariance of the standard connection under the action:
/// transporting the direction and the section through any group element
/// must reproduce the plain derivative. Directions run over the
/// coordinate fields and sections over monomial multiples of the basis
/// up to degree 2, which generate by the Leibniz rule.
pub fn group_invariance_check(action: &GroupAction, rank: usize) -> Result<bool> {
    let n = action.ring().nvars();
    let zero = vec![vec![vec![Poly::zero(action.ring()); rank]; rank]; n];
    group_invariance_check_with_christoffel(action, rank, &zero)
}

/// Same test for a chart connection with polynomial Christoffel data;
/// gamma[i][j][k] is the e_k coefficient of the derivative of e_j along
/// the i-th coordinate field.
pub fn group_invariance_check_with_christoffel(
    action: &GroupAction,
    rank: usize,
    gamma: &[Vec<Vec<Poly>>],
) -> Result<bool> {
    let ring = action.ring().clone();
    let n = ring.nvars();
    if gamma.len() != n || gamma.iter().any(|p| p.len() != rank || p.iter().any(|r| r.len() != rank))
    {
        return Err(Error::Arity(
            "Christoffel data must be indexed direction x basis x basis".into(),
        ));
    }

    let nabla = |d: &VectorField, s: &PolyVec| -> Result<PolyVec> {
        let mut out = standard_connection(d, s)?;
        for i in 0..n {
            for j in 0..rank {
                let scale = &d.coeffs()[i] * s.comp(j);
                let mut extra = vec![Poly::zero(&ring); rank];
                for (k, e) in extra.iter_mut().enumerate() {
                    *e = &*e + &(&scale * &gamma[i][j][k]);
                }
                out = out.add(&PolyVec::new(&ring, extra)?);
            }
        }
        Ok(out)
    };

    let monomials = monomials_up_to(n, 2);
    for idx in 0..action.len() {
        for i in 0..n {
            let d = VectorField::basis(&ring, i);
            let moved_d = action.inverse_act_on_field(idx, &d)?;
            for exps in &monomials {
                let m = Poly::monomial(&ring, exps.clone(), crate::rational::GaussianRational::one());
                for k in 0..rank {
                    let s = PolyVec::unit(&ring, rank, k).scale_poly(&m);
                    let lhs = nabla(&d, &s)?;
                    let moved_s = action.inverse_act_on_section(idx, &s)?;
                    let transported = nabla(&moved_d, &moved_s)?;
                    let rhs = action.act_on_section(idx, &transported)?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebroid::{from_poisson, PoissonStructure};
    use crate::rational::GaussianRational;

    fn ring2() -> PolyRing {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    fn ring3() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    fn sl2() -> LieAlgebroid {
        let r = ring3();
        let p = PoissonStructure::from_upper(
            &r,
            &[
                r.parse("2*y").unwrap(),
                r.parse("-2*z").unwrap(),
                r.parse("x").unwrap(),
            ],
        )
        .unwrap();
        from_poisson(&p).unwrap()
    }

    #[test]
    fn bilinear_pairing_values() {
        let r = ring2();
        let dx = VectorField::basis(&r, 0);
        let dy = VectorField::basis(&r, 1);
        assert!(standard_bilinear(&dx, &dy).unwrap().is_zero());

        let d = VectorField::parse(&r, &["y", "x"]).unwrap();
        assert_eq!(standard_bilinear(&d, &d).unwrap(), r.parse("x^2+y^2").unwrap());

        let r3 = ring3();
        let hx = VectorField::parse(&r3, &["0", "2*y", "-2*z"]).unwrap();
        assert_eq!(
            standard_bilinear(&hx, &hx).unwrap(),
            r3.parse("4*y^2+4*z^2").unwrap()
        );
    }

    #[test]
    fn hermitian_table_of_the_cone_hamiltonians() {
        let r = ring3();
        let d = r.doubled().unwrap();
        let hx = VectorField::parse(&r, &["0", "2*y", "-2*z"]).unwrap();
        let hy = VectorField::parse(&r, &["-2*y", "0", "x"]).unwrap();
        let hz = VectorField::parse(&r, &["2*z", "-x", "0"]).unwrap();

        let val = |s: &str| DoubledPoly::new(d.parse(s).unwrap(), 3).unwrap();
        assert_eq!(standard_hermitian(&hx, &hx).unwrap(), val("4*y*ybar+4*z*zbar"));
        assert_eq!(standard_hermitian(&hy, &hy).unwrap(), val("x*xbar+4*y*ybar"));
        assert_eq!(standard_hermitian(&hz, &hz).unwrap(), val("x*xbar+4*z*zbar"));
        assert_eq!(standard_hermitian(&hx, &hy).unwrap(), val("-2*z*xbar"));
        assert_eq!(standard_hermitian(&hx, &hz).unwrap(), val("-2*y*xbar"));
        assert_eq!(standard_hermitian(&hy, &hz).unwrap(), val("-4*y*zbar"));
    }

    #[test]
    fn hermitian_pairing_is_conjugate_symmetric() {
        let r = ring2();
        let samples = [
            VectorField::parse(&r, &["x+y", "2"]).unwrap(),
            VectorField::parse(&r, &["i*x", "y^2-1"]).unwrap(),
            VectorField::parse(&r, &["3*x*y", "x-i*y"]).unwrap(),
        ];
        for a in &samples {
            for b in &samples {
                let h1 = standard_hermitian(a, b).unwrap();
                let h2 = standard_hermitian(b, a).unwrap();
                assert_eq!(h1, h2.conj());
            }
        }
        // Gram matrices built from fields pass the constructor checks.
        let h = HermitianMetric::from_fields(&samples).unwrap();
        assert_eq!(h.rank(), 3);
        assert_eq!(h.entry(0, 0).conj(), h.entry(0, 0).clone());
    }

    #[test]
    fn self_pairing_pairs_monomials_with_their_conjugates() {
        let r = ring3();
        let d = VectorField::parse(&r, &["2*y", "-x", "3*z"]).unwrap();
        let h = standard_hermitian(&d, &d).unwrap();
        for (exps, coeff) in h.as_poly().terms() {
            let (head, tail) = exps.split_at(3);
            assert_eq!(head, tail);
            assert!(coeff.is_real());
            assert!(!coeff.is_display_negative());
        }
    }

    #[test]
    fn quotient_metric_examples_and_well_definedness() {
        let r = ring2();
        let crossing = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let xdx = VectorField::parse(&r, &["x", "0"]).unwrap();
        let ydy = VectorField::parse(&r, &["0", "y"]).unwrap();
        assert!(quotient_metric(&xdx, &ydy, &crossing).unwrap().is_zero());
        assert_eq!(
            quotient_metric(&xdx, &xdx, &crossing).unwrap(),
            r.parse("x^2").unwrap()
        );
        // Non-logarithmic input is refused.
        let dx = VectorField::basis(&r, 0);
        assert!(matches!(
            quotient_metric(&dx, &xdx, &crossing),
            Err(Error::Domain(_))
        ));

        let r3 = ring3();
        let plane = Ideal::new(&r3, vec![r3.parse("z").unwrap()]).unwrap();
        let d1 = VectorField::basis(&r3, 0);
        assert_eq!(quotient_metric(&d1, &d1, &plane).unwrap(), Poly::one(&r3));

        // Shifting by ideal multiples of the coordinate fields does not
        // change the value.
        let shift = VectorField::parse(&r3, &["z", "x*z", "z^2"]).unwrap();
        let shifted = d1.add(&shift).unwrap();
        assert_eq!(
            quotient_metric(&shifted, &d1, &plane).unwrap(),
            quotient_metric(&d1, &d1, &plane).unwrap()
        );
    }

    #[test]
    fn standard_connection_leibniz_and_compatibility() {
        let r = ring2();
        let d = VectorField::parse(&r, &["y", "x^2"]).unwrap();
        let f = r.parse("x*y+1").unwrap();
        let s = PolyVec::new(&r, vec![r.parse("x^2").unwrap(), r.parse("y").unwrap()]).unwrap();

        // Leibniz: derivative of f s = f (derivative of s) + D(f) s.
        let lhs = standard_connection(&d, &s.scale_poly(&f)).unwrap();
        let rhs = standard_connection(&d, &s)
            .unwrap()
            .scale_poly(&f)
            .add(&s.scale_poly(&d.apply(&f).unwrap()));
        assert_eq!(lhs, rhs);

        // Compatibility with the flat pairing.
        let a = VectorField::parse(&r, &["x^2-y", "2*x*y"]).unwrap();
        let b = VectorField::parse(&r, &["1+x", "y^2"]).unwrap();
        let pair = standard_bilinear(&a, &b).unwrap();
        let left = d.apply(&pair).unwrap();
        let da = VectorField::from_vec(&standard_connection(&d, &a.to_vec()).unwrap()).unwrap();
        let db = VectorField::from_vec(&standard_connection(&d, &b.to_vec()).unwrap()).unwrap();
        let right = &standard_bilinear(&da, &b).unwrap() + &standard_bilinear(&a, &db).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn koszul_on_flat_data_vanishes() {
        let r = ring2();
        let tangent = LieAlgebroid::tangent(&r);
        let id = BilinearMetric::identity(&r, 2);
        let conn = koszul_christoffel(&tangent, &id).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert!(conn.entry(i, j, k).is_zero());
                }
            }
        }
        assert!(levi_civita_check(&conn, &tangent, &id).unwrap());

        let abelian = LieAlgebroid::abelian(&r, 2);
        let conn = koszul_christoffel(&abelian, &id).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    assert!(conn.entry(i, j, k).is_zero());
                }
            }
        }
    }

    #[test]
    fn koszul_on_the_cone_algebroid() {
        let a = sl2();
        let id = BilinearMetric::identity(a.ring(), 3);
        let conn = koszul_christoffel(&a, &id).unwrap();
        // Constant metric kills the anchor terms; the expected entry is
        // read off from the structure functions alone.
        let minus_half = RationalFunction::new(
            Poly::from_int(a.ring(), -1),
            Poly::from_int(a.ring(), 2),
        );
        assert_eq!(conn.entry(0, 1, 2), &minus_half);
        assert!(levi_civita_check(&conn, &a, &id).unwrap());
    }

    #[test]
    fn levi_civita_rejects_torsion() {
        let r = ring2();
        let abelian = LieAlgebroid::abelian(&r, 2);
        let id = BilinearMetric::identity(&r, 2);
        let mut gamma = vec![vec![vec![RationalFunction::zero(&r); 2]; 2]; 2];
        gamma[0][1][0] = RationalFunction::one(&r);
        let conn = Connection::new(&r, gamma).unwrap();
        assert!(!levi_civita_check(&conn, &abelian, &id).unwrap());
    }

    #[test]
    fn singular_metric_is_rejected() {
        let r = ring2();
        let tangent = LieAlgebroid::tangent(&r);
        let mat = vec![
            vec![r.parse("x").unwrap(), r.parse("x").unwrap()],
            vec![r.parse("x").unwrap(), r.parse("x").unwrap()],
        ];
        let g = BilinearMetric::new(&r, mat).unwrap();
        assert!(!g.is_nondegenerate());
        assert!(matches!(
            koszul_christoffel(&tangent, &g),
            Err(Error::SingularMetric(_))
        ));
    }

    #[test]
    fn induced_connection_on_a_hyperplane() {
        let r = ring3();
        let plane = Ideal::new(&r, vec![r.parse("z").unwrap()]).unwrap();
        let d1 = VectorField::basis(&r, 0);
        let d2 = VectorField::basis(&r, 1);
        assert!(induced_connection_on_y(&d1, &d2, &plane).unwrap().is_zero());

        let s = VectorField::parse(&r, &["0", "x", "0"]).unwrap();
        assert_eq!(
            induced_connection_on_y(&d1, &s, &plane).unwrap(),
            VectorField::basis(&r, 1)
        );

        // cond-1 failure surfaces as an unsupported chart.
        let r2 = ring2();
        let crossing = Ideal::new(&r2, vec![r2.parse("x*y").unwrap()]).unwrap();
        let xdx = VectorField::parse(&r2, &["x", "0"]).unwrap();
        assert!(matches!(
            induced_connection_on_y(&xdx, &xdx, &crossing),
            Err(Error::UnsupportedChart(_))
        ));
    }

    #[test]
    fn the_two_canonical_connections_agree_on_flat_tangent_data() {
        let r = ring2();
        let tangent = LieAlgebroid::tangent(&r);
        let conns = two_canonical_l_connections(&tangent, standard_chart_connection());

        let e1 = PolyVec::unit(&r, 2, 0);
        let xe2 = PolyVec::unit(&r, 2, 1).scale_poly(&r.parse("x").unwrap());
        let expected = PolyVec::unit(&r, 2, 1);
        assert_eq!(conns.nabla_zero(&e1, &xe2).unwrap(), expected);
        assert_eq!(conns.nabla_one(&e1, &xe2).unwrap(), expected);

        // Leibniz rule for nabla0 in the section slot.
        let f = r.parse("x*y").unwrap();
        let lhs = conns.nabla_zero(&e1, &xe2.scale_poly(&f)).unwrap();
        let af = tangent
            .anchor_of_section(&e1)
            .unwrap()
            .apply(&f)
            .unwrap();
        let rhs = conns
            .nabla_zero(&e1, &xe2)
            .unwrap()
            .scale_poly(&f)
            .add(&xe2.scale_poly(&af));
        assert_eq!(lhs, rhs);

        // Zero anchor renders nabla0 identically zero.
        let abelian = LieAlgebroid::abelian(&r, 2);
        let conns = two_canonical_l_connections(&abelian, standard_chart_connection());
        assert!(conns.nabla_zero(&xe2, &e1).unwrap().is_zero());
    }

    #[test]
    fn nabla_one_on_equal_arguments_drops_the_bracket() {
        let a = sl2();
        let r = a.ring().clone();
        let d = PolyVec::unit(&r, 3, 1);
        let conns = two_canonical_l_connections(&a, standard_chart_connection());
        let direct = standard_connection(&a.anchor_of_section(&d).unwrap(), &d).unwrap();
        assert_eq!(conns.nabla_one(&d, &d).unwrap(), direct);
    }

    fn q(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn group_actions_validate_closure() {
        let r = ring2();
        let id = linalg::identity(2);
        let swap = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        assert!(GroupAction::new(&r, vec![id.clone(), swap.clone()]).is_ok());
        // Missing identity.
        assert!(matches!(
            GroupAction::new(&r, vec![swap.clone()]),
            Err(Error::InvalidAction(_))
        ));
        // Singular element.
        let sing = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(matches!(
            GroupAction::new(&r, vec![id, sing]),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn standard_connection_is_invariant_under_linear_groups() {
        let r = ring2();
        let id = linalg::identity(2);
        let swap = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        let action = GroupAction::new(&r, vec![id, swap]).unwrap();
        assert!(group_invariance_check(&action, 1).unwrap());
        assert!(group_invariance_check(&action, 2).unwrap());

        let r1 = PolyRing::new(&["x"]).unwrap();
        let sign = GroupAction::new(&r1, vec![linalg::identity(1), vec![vec![q(-1)]]]).unwrap();
        assert!(group_invariance_check(&sign, 1).unwrap());
    }

    #[test]
    fn christoffel_invariance_depends_on_the_data() {
        let r1 = PolyRing::new(&["x"]).unwrap();
        let sign = GroupAction::new(&r1, vec![linalg::identity(1), vec![vec![q(-1)]]]).unwrap();

        // Coefficient x transforms with two cancelling signs, so this
        // connection is invariant under x -> -x.
        let odd = vec![vec![vec![r1.parse("x").unwrap()]]];
        assert!(group_invariance_check_with_christoffel(&sign, 1, &odd).unwrap());

        // A constant coefficient picks up a single sign and is not.
        let even = vec![vec![vec![Poly::one(&r1)]]];
        assert!(!group_invariance_check_with_christoffel(&sign, 1, &even).unwrap());
    }
}
