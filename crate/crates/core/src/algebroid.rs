//! Lie algebroids over polynomial rings: Poisson-induced cotangent
//! algebroids, characteristic foliations, ideal invariance under the
//! anchor image, kernel/orthogonal splits of the section module, the
//! induced pairing on the anchor image, and truncated invariant-function
//! solving.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::fields::VectorField;
use crate::forms::Foliation;
use crate::groebner::{syzygy_module, Ideal, PolyVec, Submodule};
use crate::linalg::nullspace;
use crate::metrics::BilinearMetric;
use crate::poly::{monomials_up_to, Poly};
use crate::rational::GaussianRational;
use crate::ratfun::{fraction_matrix_inverse, RationalFunction};
use crate::ring::PolyRing;

/// A Lie algebroid on a free module of rank r: an anchor row per basis
/// section and polynomial structure functions for the bracket.
#[derive(Debug, Clone)]
pub struct LieAlgebroid {
    ring: PolyRing,
    anchor: Vec<VectorField>,
    // struct_const[s][t][u] is the e_u coefficient of [e_s, e_t].
    struct_const: Vec<Vec<Vec<Poly>>>,
}

impl LieAlgebroid {
    /// Validates antisymmetry, compatibility of the anchor with the
    /// bracket, and the Jacobi identity on basis sections.
    pub fn new(
        ring: &PolyRing,
        anchor: Vec<VectorField>,
        struct_const: Vec<Vec<Vec<Poly>>>,
    ) -> Result<Self> {
        let a = LieAlgebroid::new_unchecked(ring, anchor, struct_const)?;
        let r = a.rank();
        for s in 0..r {
            for t in 0..r {
                for u in 0..r {
                    if a.struct_const(s, t, u) != &-a.struct_const(t, s, u) {
                        return Err(Error::Domain(format!(
                            "structure functions are not antisymmetric at ({s},{t},{u})"
                        )));
                    }
                }
            }
        }
        for s in 0..r {
            for t in 0..r {
                // a([e_s, e_t]) must equal [a(e_s), a(e_t)].
                let mut image = VectorField::zero(ring);
                for u in 0..r {
                    image = image.add(&a.anchor[u].scale(a.struct_const(s, t, u))?)?;
                }
                let direct = a.anchor[s].lie_bracket(&a.anchor[t])?;
                if image != direct {
                    return Err(Error::Domain(format!(
                        "anchor does not intertwine the bracket at ({s},{t})"
                    )));
                }
            }
        }
        for s in 0..r {
            for t in (s + 1)..r {
                for w in (t + 1)..r {
                    let es = PolyVec::unit(ring, r, s);
                    let et = PolyVec::unit(ring, r, t);
                    let ew = PolyVec::unit(ring, r, w);
                    let j1 = a.section_bracket(&a.section_bracket(&es, &et)?, &ew)?;
                    let j2 = a.section_bracket(&a.section_bracket(&et, &ew)?, &es)?;
                    let j3 = a.section_bracket(&a.section_bracket(&ew, &es)?, &et)?;
                    if !j1.add(&j2).add(&j3).is_zero() {
                        return Err(Error::Domain(format!(
                            "Jacobi identity fails on basis sections ({s},{t},{w})"
                        )));
                    }
                }
            }
        }
        Ok(a)
    }

    /// Shape checks only; callers take responsibility for the axioms.
    pub fn new_unchecked(
        ring: &PolyRing,
        anchor: Vec<VectorField>,
        struct_const: Vec<Vec<Vec<Poly>>>,
    ) -> Result<Self> {
        let r = anchor.len();
        for d in &anchor {
            ring.same_ring(d.ring())?;
        }
        if struct_const.len() != r
            || struct_const
                .iter()
                .any(|p| p.len() != r || p.iter().any(|q| q.len() != r))
        {
            return Err(Error::Arity(format!(
                "structure functions must form an {r}x{r}x{r} table"
            )));
        }
        Ok(LieAlgebroid {
            ring: ring.clone(),
            anchor,
            struct_const,
        })
    }

    /// The tangent algebroid: identity anchor, vanishing bracket table.
    pub fn tangent(ring: &PolyRing) -> Self {
        let n = ring.nvars();
        let anchor = (0..n).map(|i| VectorField::basis(ring, i)).collect();
        let struct_const = vec![vec![vec![Poly::zero(ring); n]; n]; n];
        LieAlgebroid {
            ring: ring.clone(),
            anchor,
            struct_const,
        }
    }

    /// Zero anchor and zero bracket in the given rank.
    pub fn abelian(ring: &PolyRing, rank: usize) -> Self {
        let anchor = vec![VectorField::zero(ring); rank];
        let struct_const = vec![vec![vec![Poly::zero(ring); rank]; rank]; rank];
        LieAlgebroid {
            ring: ring.clone(),
            anchor,
            struct_const,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.anchor.len()
    }

    pub fn anchor(&self) -> &[VectorField] {
        &self.anchor
    }

    pub fn anchor_field(&self, s: usize) -> &VectorField {
        &self.anchor[s]
    }

    pub fn struct_const(&self, s: usize, t: usize, u: usize) -> &Poly {
        &self.struct_const[s][t][u]
    }

    /// Anchor of a section with polynomial coefficients.
    pub fn anchor_of_section(&self, s: &PolyVec) -> Result<VectorField> {
        if s.rank() != self.rank() {
            return Err(Error::Arity(format!(
                "section rank {} does not match algebroid rank {}",
                s.rank(),
                self.rank()
            )));
        }
        self.ring.same_ring(s.ring())?;
        let mut out = VectorField::zero(&self.ring);
        for (u, c) in s.comps().iter().enumerate() {
            out = out.add(&self.anchor[u].scale(c)?)?;
        }
        Ok(out)
    }

    /// Bracket of two sections, extending the basis table by the
    /// Leibniz rule in each slot.
    pub fn section_bracket(&self, x: &PolyVec, y: &PolyVec) -> Result<PolyVec> {
        let r = self.rank();
        if x.rank() != r || y.rank() != r {
            return Err(Error::Arity("section ranks differ from the algebroid".into()));
        }
        let ax = self.anchor_of_section(x)?;
        let ay = self.anchor_of_section(y)?;
        let mut comps = Vec::with_capacity(r);
        for u in 0..r {
            let mut c = &ax.apply(y.comp(u))? - &ay.apply(x.comp(u))?;
            for s in 0..r {
                for t in 0..r {
                    c = &c + &(&(x.comp(s) * y.comp(t)) * self.struct_const(s, t, u));
                }
            }
            comps.push(c);
        }
        PolyVec::new(&self.ring, comps)
    }
}

/// An antisymmetric bracket table on the coordinates.
#[derive(Debug, Clone)]
pub struct PoissonStructure {
    ring: PolyRing,
    mat: Vec<Vec<Poly>>,
}

impl PoissonStructure {
    /// Builds from the upper triangle listed row-major: the bracket of
    /// x_i with x_j for i < j.
    pub fn from_upper(ring: &PolyRing, upper: &[Poly]) -> Result<Self> {
        let n = ring.nvars();
        if upper.len() != n * (n - 1) / 2 {
            return Err(Error::Arity(format!(
                "expected {} upper-triangle entries for {n} variables, got {}",
                n * (n - 1) / 2,
                upper.len()
            )));
        }
        let mut mat = vec![vec![Poly::zero(ring); n]; n];
        let mut it = upper.iter();
        for i in 0..n {
            for j in (i + 1)..n {
                let p = it.next().expect("length checked");
                ring.same_ring(p.ring())?;
                mat[i][j] = p.clone();
                mat[j][i] = -p;
            }
        }
        Ok(PoissonStructure {
            ring: ring.clone(),
            mat,
        })
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn matrix(&self) -> &[Vec<Poly>] {
        &self.mat
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.mat[i][j]
    }

    /// The bracket of two polynomials induced by the table.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let n = self.ring.nvars();
        let mut out = Poly::zero(&self.ring);
        for s in 0..n {
            if self.mat[s].iter().all(|p| p.is_zero()) {
                continue;
            }
            let df = f.derivative(s);
            if df.is_zero() {
                continue;
            }
            for t in 0..n {
                if self.mat[s][t].is_zero() {
                    continue;
                }
                out = &out + &(&(&self.mat[s][t] * &df) * &g.derivative(t));
            }
        }
        out
    }
}

/// The cyclic sum of nested coordinate brackets vanishes for all triples
/// iff the table is a Poisson structure.
pub fn jacobi_check(p: &PoissonStructure) -> bool {
    let ring = p.ring();
    let n = ring.nvars();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let xi = Poly::var(ring, i);
                let xj = Poly::var(ring, j);
                let xk = Poly::var(ring, k);
                let cyc = &(&p.bracket(&xi, &p.bracket(&xj, &xk))
                    + &p.bracket(&xj, &p.bracket(&xk, &xi)))
                    + &p.bracket(&xk, &p.bracket(&xi, &xj));
                if !cyc.is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// The derivation {f, -}: its t-th coefficient pairs the table against
/// the gradient of f.
pub fn hamiltonian_field(f: &Poly, p: &PoissonStructure) -> VectorField {
    let ring = p.ring();
    let n = ring.nvars();
    let mut coeffs = vec![Poly::zero(ring); n];
    for (t, c) in coeffs.iter_mut().enumerate() {
        for s in 0..n {
            *c = &*c + &(p.entry(s, t) * &f.derivative(s));
        }
    }
    VectorField::new(ring, coeffs).expect("coefficients live in the table's ring")
}

/// The cotangent algebroid of a Poisson table: anchor rows are the
/// coordinate Hamiltonian fields and the bracket of two coordinate
/// differentials is the differential of their table entry.
pub fn from_poisson(p: &PoissonStructure) -> Result<LieAlgebroid> {
    if !jacobi_check(p) {
        return Err(Error::InvalidPoisson(
            "coordinate Jacobiator does not vanish".into(),
        ));
    }
    let ring = p.ring();
    let n = ring.nvars();
    let anchor: Vec<VectorField> = (0..n)
        .map(|s| hamiltonian_field(&Poly::var(ring, s), p))
        .collect();
    let mut struct_const = vec![vec![vec![Poly::zero(ring); n]; n]; n];
    for s in 0..n {
        for t in 0..n {
            for u in 0..n {
                struct_const[s][t][u] = p.entry(s, t).derivative(u);
            }
        }
    }
    // Full validation replays the axioms on the derived data.
    LieAlgebroid::new(ring, anchor, struct_const)
}

/// The involutive family spanned by the anchor image.
pub fn characteristic_foliation(a: &LieAlgebroid) -> Result<Foliation> {
    let gens: Vec<VectorField> = a
        .anchor()
        .iter()
        .filter(|d| !d.is_zero())
        .cloned()
        .collect();
    let foliation = Foliation::new(a.ring(), gens)?;
    foliation.check_involutivity();
    Ok(foliation)
}

/// True iff every anchor row sends every ideal generator into the ideal.
pub fn l_invariance_check(a: &LieAlgebroid, ideal: &Ideal) -> Result<bool> {
    for d in a.anchor() {
        for g in ideal.gens() {
            if !ideal.contains(&d.apply(g)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The kernel of the anchor and its metric orthogonal inside the section
/// module. The two need not span at singular points; `spans` records
/// whether they do.
#[derive(Debug, Clone)]
pub struct KernelSplit {
    pub kernel: Submodule,
    pub complement: Submodule,
    pub spans: bool,
}

pub fn kernel_split(a: &LieAlgebroid, metric: &BilinearMetric) -> Result<KernelSplit> {
    let ring = a.ring().clone();
    let r = a.rank();
    metric.ring().same_ring(&ring)?;
    if metric.rank() != r {
        return Err(Error::Arity(format!(
            "metric rank {} does not match algebroid rank {r}",
            metric.rank()
        )));
    }
    if !metric.is_nondegenerate() {
        return Err(Error::SingularMetric(
            "the orthogonal complement needs an invertible Gram matrix".into(),
        ));
    }

    let rows: Vec<PolyVec> = a.anchor().iter().map(VectorField::to_vec).collect();
    let kernel = syzygy_module(&ring, ring.nvars(), &rows)?.canonicalized()?;

    let kgens = kernel.gens();
    let complement = if kgens.is_empty() {
        Submodule::full(&ring, r)
    } else {
        // v is orthogonal to the kernel iff it annihilates the columns
        // of (Gram * kernel generators).
        let mut paired = Vec::with_capacity(r);
        for i in 0..r {
            let comps: Vec<Poly> = kgens
                .iter()
                .map(|k| {
                    let mut c = Poly::zero(&ring);
                    for j in 0..r {
                        c = &c + &(metric.entry(i, j) * k.comp(j));
                    }
                    c
                })
                .collect();
            paired.push(PolyVec::new(&ring, comps)?);
        }
        syzygy_module(&ring, kgens.len(), &paired)?.canonicalized()?
    };

    let spans = kernel
        .sum(&complement)?
        .module_equal(&Submodule::full(&ring, r))?;
    Ok(KernelSplit {
        kernel,
        complement,
        spans,
    })
}

fn check_preimage(
    a: &LieAlgebroid,
    field: &VectorField,
    section: &PolyVec,
) -> Result<()> {
    if &a.anchor_of_section(section)? != field {
        return Err(Error::Domain(format!(
            "supplied section does not anchor to {field}"
        )));
    }
    Ok(())
}

/// Pairs the supplied anchor preimages directly under the metric.
pub fn image_metric_naive(
    a: &LieAlgebroid,
    metric: &BilinearMetric,
    d1: &VectorField,
    pre1: &PolyVec,
    d2: &VectorField,
    pre2: &PolyVec,
) -> Result<Poly> {
    check_preimage(a, d1, pre1)?;
    check_preimage(a, d2, pre2)?;
    metric.pair(pre1, pre2)
}

/// Pairs the preimages after removing their metric projection onto the
/// anchor kernel, making the value independent of the preimage choice.
/// Entries land in the fraction field through the kernel Gram inverse.
pub fn image_metric_orthogonal(
    a: &LieAlgebroid,
    metric: &BilinearMetric,
    d1: &VectorField,
    pre1: &PolyVec,
    d2: &VectorField,
    pre2: &PolyVec,
) -> Result<RationalFunction> {
    check_preimage(a, d1, pre1)?;
    check_preimage(a, d2, pre2)?;
    let ring = a.ring().clone();
    let r = a.rank();

    let rows: Vec<PolyVec> = a.anchor().iter().map(VectorField::to_vec).collect();
    let kernel = syzygy_module(&ring, ring.nvars(), &rows)?.canonicalized()?;
    let kgens = kernel.gens();
    if kgens.is_empty() {
        return Ok(RationalFunction::from_poly(metric.pair(pre1, pre2)?));
    }

    let kk = kgens.len();
    let mut gram = vec![vec![Poly::zero(&ring); kk]; kk];
    for l in 0..kk {
        for m in 0..kk {
            gram[l][m] = metric.pair(&kgens[l], &kgens[m])?;
        }
    }
    let gram_inv = fraction_matrix_inverse(&gram).map_err(|_| {
        Error::SingularMetric("kernel Gram matrix is singular".into())
    })?;

    let orthogonalize = |p: &PolyVec| -> Result<Vec<RationalFunction>> {
        let b: Vec<RationalFunction> = kgens
            .iter()
            .map(|k| Ok(RationalFunction::from_poly(metric.pair(p, k)?)))
            .collect::<Result<_>>()?;
        let mut lambda = vec![RationalFunction::zero(&ring); kk];
        for (l, lam) in lambda.iter_mut().enumerate() {
            for m in 0..kk {
                *lam = &*lam + &(&gram_inv[l][m] * &b[m]);
            }
        }
        let mut out = Vec::with_capacity(r);
        for i in 0..r {
            let mut c = RationalFunction::from_poly(p.comp(i).clone());
            for (l, lam) in lambda.iter().enumerate() {
                c = &c - &(lam * &RationalFunction::from_poly(kgens[l].comp(i).clone()));
            }
            out.push(c);
        }
        Ok(out)
    };

    let p1 = orthogonalize(pre1)?;
    let p2 = orthogonalize(pre2)?;
    let mut out = RationalFunction::zero(&ring);
    for i in 0..r {
        for j in 0..r {
            let gij = RationalFunction::from_poly(metric.entry(i, j).clone());
            out = &out + &(&(&p1[i] * &gij) * &p2[j]);
        }
    }
    Ok(out)
}

/// A basis of the polynomials of total degree at most `degree` that all
/// foliation generators annihilate, found by exact linear algebra on
/// monomial coefficients. Output order follows the graded monomial list,
/// so results are deterministic.
pub fn invariant_functions(foliation: &Foliation, degree: u32) -> Result<Vec<Poly>> {
    let ring = foliation.ring().clone();
    let n = ring.nvars();
    let cols = monomials_up_to(n, degree);
    let one = GaussianRational::one();

    let mut rows: Vec<Vec<GaussianRational>> = Vec::new();
    for d in foliation.gens() {
        let mut by_image: BTreeMap<Vec<u32>, Vec<GaussianRational>> = BTreeMap::new();
        for (ci, alpha) in cols.iter().enumerate() {
            let image = d.apply(&Poly::monomial(&ring, alpha.clone(), one.clone()))?;
            for (beta, c) in image.terms() {
                by_image
                    .entry(beta.clone())
                    .or_insert_with(|| vec![GaussianRational::zero(); cols.len()])[ci] =
                    c.clone();
            }
        }
        rows.extend(by_image.into_values());
    }

    if rows.is_empty() {
        return Ok(cols
            .iter()
            .map(|alpha| Poly::monomial(&ring, alpha.clone(), one.clone()))
            .collect());
    }

    let basis = nullspace(&rows);
    Ok(basis
        .into_iter()
        .map(|v| {
            let mut f = Poly::zero(&ring);
            for (c, alpha) in v.iter().zip(&cols) {
                if !c.is_zero() {
                    f = &f + &Poly::monomial(&ring, alpha.clone(), c.clone());
                }
            }
            f
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::module_equal;

    fn ring3() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    fn sl2_poisson() -> PoissonStructure {
        let r = ring3();
        PoissonStructure::from_upper(
            &r,
            &[
                r.parse("2*y").unwrap(),
                r.parse("-2*z").unwrap(),
                r.parse("x").unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn jacobi_holds_for_the_cone_table_and_fails_for_the_plant() {
        let r = ring3();
        assert!(jacobi_check(&sl2_poisson()));

        let bad = PoissonStructure::from_upper(
            &r,
            &[
                r.parse("y").unwrap(),
                r.parse("x").unwrap(),
                Poly::one(&r),
            ],
        )
        .unwrap();
        assert!(!jacobi_check(&bad));
        assert!(matches!(from_poisson(&bad), Err(Error::InvalidPoisson(_))));

        let r2 = PolyRing::new(&["x", "y"]).unwrap();
        let any2 = PoissonStructure::from_upper(&r2, &[r2.parse("x^2+y").unwrap()]).unwrap();
        assert!(jacobi_check(&any2));
    }

    #[test]
    fn cotangent_algebroid_of_the_cone() {
        let a = from_poisson(&sl2_poisson()).unwrap();
        let r = a.ring().clone();
        assert_eq!(a.rank(), 3);
        assert_eq!(a.anchor_field(0), &VectorField::parse(&r, &["0", "2*y", "-2*z"]).unwrap());
        assert_eq!(a.anchor_field(1), &VectorField::parse(&r, &["-2*y", "0", "x"]).unwrap());
        assert_eq!(a.anchor_field(2), &VectorField::parse(&r, &["2*z", "-x", "0"]).unwrap());
        // Bracket table: [dx,dy] = 2dy, [dx,dz] = -2dz, [dy,dz] = dx.
        assert_eq!(a.struct_const(0, 1, 1), &r.parse("2").unwrap());
        assert_eq!(a.struct_const(0, 2, 2), &r.parse("-2").unwrap());
        assert_eq!(a.struct_const(1, 2, 0), &Poly::one(&r));
    }

    #[test]
    fn hamiltonian_fields_are_derivations_and_kill_casimirs() {
        let p = sl2_poisson();
        let r = p.ring().clone();
        let f = r.parse("x+y^2").unwrap();
        let g = r.parse("x*z").unwrap();
        let h = r.parse("y-1").unwrap();
        // {f, gh} = g {f,h} + h {f,g}.
        let lhs = p.bracket(&f, &(&g * &h));
        let rhs = &(&g * &p.bracket(&f, &h)) + &(&h * &p.bracket(&f, &g));
        assert_eq!(lhs, rhs);
        // The bracket agrees with the Hamiltonian field's action.
        assert_eq!(hamiltonian_field(&f, &p).apply(&g).unwrap(), p.bracket(&f, &g));

        let casimir = r.parse("x^2+4*y*z").unwrap();
        assert!(hamiltonian_field(&casimir, &p).is_zero());
        assert!(hamiltonian_field(&Poly::from_int(&r, 7), &p).is_zero());
    }

    #[test]
    fn characteristic_foliation_is_involutive() {
        let a = from_poisson(&sl2_poisson()).unwrap();
        let fol = characteristic_foliation(&a).unwrap();
        assert_eq!(fol.gens().len(), 3);
        assert_eq!(fol.status(), Some(true));

        let r = ring3();
        let zero = LieAlgebroid::abelian(&r, 2);
        let fol = characteristic_foliation(&zero).unwrap();
        assert!(fol.gens().is_empty());

        let tangent = LieAlgebroid::tangent(&r);
        let fol = characteristic_foliation(&tangent).unwrap();
        assert!(fol
            .module()
            .module_equal(&Submodule::full(&r, 3))
            .unwrap());
    }

    #[test]
    fn level_ideals_are_invariant_for_the_cone() {
        let a = from_poisson(&sl2_poisson()).unwrap();
        let r = a.ring().clone();
        for shift in ["", "-1", "+3"] {
            let g = r.parse(&format!("x^2+4*y*z{shift}")).unwrap();
            let ideal = Ideal::new(&r, vec![g]).unwrap();
            assert!(l_invariance_check(&a, &ideal).unwrap());
        }
        let coord = Ideal::new(&r, vec![r.parse("x").unwrap()]).unwrap();
        assert!(!l_invariance_check(&a, &coord).unwrap());
    }

    #[test]
    fn invalid_structure_tables_are_rejected() {
        let r = PolyRing::new(&["x", "y"]).unwrap();
        let anchor = vec![VectorField::basis(&r, 0), VectorField::basis(&r, 1)];
        // c[0][1][0] = 1 without the antisymmetric partner.
        let mut c = vec![vec![vec![Poly::zero(&r); 2]; 2]; 2];
        c[0][1][0] = Poly::one(&r);
        assert!(matches!(
            LieAlgebroid::new(&r, anchor.clone(), c),
            Err(Error::Domain(_))
        ));

        // Antisymmetric but incompatible with the commuting anchor.
        let mut c = vec![vec![vec![Poly::zero(&r); 2]; 2]; 2];
        c[0][1][0] = Poly::one(&r);
        c[1][0][0] = -&Poly::one(&r);
        assert!(matches!(
            LieAlgebroid::new(&r, anchor, c),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn kernel_split_of_the_cone_algebroid() {
        let a = from_poisson(&sl2_poisson()).unwrap();
        let r = a.ring().clone();
        let id = BilinearMetric::identity(&r, 3);
        let split = kernel_split(&a, &id).unwrap();

        let expected = Submodule::new(
            &r,
            3,
            vec![PolyVec::new(
                &r,
                vec![
                    r.parse("x").unwrap(),
                    r.parse("2*z").unwrap(),
                    r.parse("2*y").unwrap(),
                ],
            )
            .unwrap()],
        )
        .unwrap();
        assert!(module_equal(&split.kernel, &expected).unwrap());

        // Kernel members anchor to zero.
        for k in split.kernel.gens() {
            assert!(a.anchor_of_section(k).unwrap().is_zero());
        }
        // Complement members pair to zero with the kernel.
        for c in split.complement.gens() {
            for k in split.kernel.gens() {
                assert!(id.pair(c, k).unwrap().is_zero());
            }
        }
        // The split degenerates at the cone point.
        assert!(!split.spans);
    }

    #[test]
    fn kernel_split_extremes() {
        let r = ring3();
        let id = BilinearMetric::identity(&r, 3);

        let tangent = LieAlgebroid::tangent(&r);
        let split = kernel_split(&tangent, &id).unwrap();
        assert!(split.kernel.is_zero_module());
        assert!(split
            .complement
            .module_equal(&Submodule::full(&r, 3))
            .unwrap());
        assert!(split.spans);

        let abelian = LieAlgebroid::abelian(&r, 3);
        let split = kernel_split(&abelian, &id).unwrap();
        assert!(split.kernel.module_equal(&Submodule::full(&r, 3)).unwrap());
        assert!(split.complement.is_zero_module());
        // Trivially spans: everything is kernel.
        assert!(split.spans);
    }

    #[test]
    fn image_metric_naive_and_orthogonal() {
        let a = from_poisson(&sl2_poisson()).unwrap();
        let r = a.ring().clone();
        let id = BilinearMetric::identity(&r, 3);
        let e = |i: usize| PolyVec::unit(&r, 3, i);

        let naive = image_metric_naive(
            &a,
            &id,
            a.anchor_field(0),
            &e(0),
            a.anchor_field(0),
            &e(0),
        )
        .unwrap();
        assert_eq!(naive, Poly::one(&r));
        let naive = image_metric_naive(
            &a,
            &id,
            a.anchor_field(0),
            &e(0),
            a.anchor_field(1),
            &e(1),
        )
        .unwrap();
        assert!(naive.is_zero());

        let ortho = image_metric_orthogonal(
            &a,
            &id,
            a.anchor_field(0),
            &e(0),
            a.anchor_field(0),
            &e(0),
        )
        .unwrap();
        let expected = RationalFunction::new(
            r.parse("4*y^2+4*z^2").unwrap(),
            r.parse("x^2+4*y^2+4*z^2").unwrap(),
        );
        assert_eq!(ortho, expected);

        // Mismatched preimages are caught.
        assert!(matches!(
            image_metric_naive(&a, &id, a.anchor_field(0), &e(1), a.anchor_field(0), &e(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn invariant_functions_of_the_cone_foliation() {
        let a = from_poisson(&sl2_poisson()).unwrap();
        let r = a.ring().clone();
        let fol = characteristic_foliation(&a).unwrap();

        let deg2 = invariant_functions(&fol, 2).unwrap();
        assert_eq!(deg2.len(), 2);
        assert_eq!(deg2[0], Poly::one(&r));
        assert_eq!(deg2[1], r.parse("x^2+4*y*z").unwrap());
        for f in &deg2 {
            for d in fol.gens() {
                assert!(d.apply(f).unwrap().is_zero());
            }
        }

        let deg1 = invariant_functions(&fol, 1).unwrap();
        assert_eq!(deg1, vec![Poly::one(&r)]);

        let empty = Foliation::new(&r, vec![]).unwrap();
        let all = invariant_functions(&empty, 2).unwrap();
        assert_eq!(all.len(), 10);
    }
}
