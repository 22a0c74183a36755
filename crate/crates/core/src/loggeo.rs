//! Logarithmic geometry of a subvariety Y = V(I): derivations that
//! preserve the ideal, the zero and normal modules, tangential
//! projection against a principal generator, the cond-1 test, Saito's
//! freeness criterion and canonical representatives on the quotient.

use crate::error::{Error, Result};
use crate::fields::{gradient, VectorField};
use crate::groebner::{syzygy_module, Ideal, PolyVec, Submodule};
use crate::poly::Poly;
use crate::rational::GaussianRational;
use crate::ratfun::poly_det;
use crate::ring::PolyRing;

/// A chart where the divisor is cut out by a single polynomial.
#[derive(Debug, Clone)]
pub struct DivisorChart {
    g: Poly,
    ideal: Ideal,
    grad: VectorField,
}

impl DivisorChart {
    /// Builds the chart for the principal ideal `<g>`.
    ///
    /// `g` must be nonzero and nonconstant; otherwise V(g) is empty or
    /// the whole space and none of the constructions below apply.
    pub fn new(g: Poly) -> Result<Self> {
        if g.is_zero() || g.is_constant() {
            return Err(Error::DegenerateIdeal(format!(
                "divisor generator must be nonconstant, got {g}"
            )));
        }
        let ring = g.ring().clone();
        let grad = gradient(&g);
        let ideal = Ideal::new(&ring, vec![g.clone()])?;
        Ok(DivisorChart { g, ideal, grad })
    }

    pub fn ring(&self) -> &PolyRing {
        self.g.ring()
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The gradient field of the generator, with respect to the
    /// coordinate basis.
    pub fn grad(&self) -> &VectorField {
        &self.grad
    }
}

/// The module of derivations D with D(I) contained in I, together with
/// membership certificates for its generators.
#[derive(Debug, Clone)]
pub struct LogDerivationModule {
    ideal: Ideal,
    module: Submodule,
    // witnesses[r][j] = cofactors expressing gens[r](g_j) over the ideal
    // generators, in the order ideal.gens() lists them.
    witnesses: Vec<Vec<Vec<Poly>>>,
}

impl LogDerivationModule {
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The underlying submodule of the free module of vector fields.
    pub fn module(&self) -> &Submodule {
        &self.module
    }

    /// Canonical generators (the reduced basis of the module).
    pub fn generators(&self) -> Result<Vec<VectorField>> {
        self.module.gens().iter().map(VectorField::from_vec).collect()
    }

    /// Cofactors certifying gens[r](g_j) lies in the ideal.
    pub fn witnesses(&self) -> &[Vec<Vec<Poly>>] {
        &self.witnesses
    }

    pub fn contains(&self, d: &VectorField) -> Result<bool> {
        self.module.contains(&d.to_vec())
    }
}

/// Computes the module of derivations preserving `ideal`.
///
/// A derivation D = sum a_i d/dx_i preserves the ideal iff D(g_j) lies
/// in it for every generator g_j. Writing the reduction cofactors as
/// extra unknowns turns this into one syzygy computation: the columns
/// of the Jacobian of (g_1, ..., g_m) together with the vectors g_k e_j
/// are placed in a rank-m free module, and the first n coordinates of
/// each syzygy give a solution. The projection of the syzygy module is
/// exactly the solution module.
pub fn log_derivations(ideal: &Ideal) -> Result<LogDerivationModule> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal(
            "log derivations need a nonzero proper ideal".into(),
        ));
    }
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let gens: Vec<Poly> = ideal.gens().into_iter().cloned().collect();
    let m = gens.len();

    let mut vectors = Vec::with_capacity(n + m * m);
    for i in 0..n {
        let comps: Vec<Poly> = gens.iter().map(|g| g.derivative(i)).collect();
        vectors.push(PolyVec::new(&ring, comps)?);
    }
    for j in 0..m {
        for g in &gens {
            vectors.push(PolyVec::unit(&ring, m, j).scale_poly(g));
        }
    }

    let syz = syzygy_module(&ring, m, &vectors)?;
    let mut candidates = Vec::new();
    for s in syz.gens() {
        let head = PolyVec::new(&ring, s.comps()[..n].to_vec())?;
        if !head.is_zero() {
            candidates.push(head);
        }
    }
    let module = canonicalize(&ring, n, candidates)?;

    let mut witnesses = Vec::with_capacity(module.gens().len());
    for v in module.gens() {
        let d = VectorField::from_vec(v)?;
        let mut per_gen = Vec::with_capacity(m);
        for g in &gens {
            let image = d.apply(g)?;
            let cert = ideal.represent(&image)?.ok_or_else(|| {
                Error::Domain(format!("derivation {d} does not preserve the ideal"))
            })?;
            per_gen.push(cert);
        }
        witnesses.push(per_gen);
    }

    Ok(LogDerivationModule {
        ideal: ideal.clone(),
        module,
        witnesses,
    })
}

/// Rebuilds a submodule whose generator list is its own reduced basis,
/// so downstream reports are deterministic.
fn canonicalize(ring: &PolyRing, rank: usize, gens: Vec<PolyVec>) -> Result<Submodule> {
    Submodule::new(ring, rank, gens)?.canonicalized()
}

/// The submodule I * T of vector fields with all coefficients in the
/// ideal. These are exactly the derivations sending every function into
/// the ideal.
pub fn zero_module(ideal: &Ideal) -> Result<Submodule> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let mut gens = Vec::new();
    for g in ideal.gens() {
        for i in 0..n {
            gens.push(PolyVec::unit(&ring, n, i).scale_poly(g));
        }
    }
    canonicalize(&ring, n, gens)
}

/// True iff the pairing of `d` with every coordinate field lies in the
/// ideal. Since the pairing with d/dx_j is the j-th coefficient, this
/// is membership in the zero module, stated metrically.
pub fn metric_t0_test(d: &VectorField, ideal: &Ideal) -> Result<bool> {
    for c in d.coeffs() {
        if !ideal.contains(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The normal module of Y = V(I) plus a comparison against the span of
/// the generator gradients.
#[derive(Debug, Clone)]
pub struct NormalModuleReport {
    /// {D : pairing of D with every logarithmic derivation lies in I}.
    pub module: Submodule,
    /// Zero or unit ideal: the module degenerates to 0 or everything.
    pub degenerate: bool,
    /// Does the module equal <grad g_j> + (zero module)?
    pub matches_grad_plus_zero: bool,
    /// Does the module equal <grad g_j> alone?
    pub matches_grad_span: bool,
    /// Membership of each generator gradient in the module.
    pub grad_members: Vec<bool>,
}

/// Computes {D : <L, D> in I for all logarithmic L} by the same
/// one-shot syzygy encoding as `log_derivations`, with the Jacobian
/// columns replaced by the columns of the logarithmic generator matrix.
pub fn normal_module(ideal: &Ideal) -> Result<NormalModuleReport> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();

    let (module, degenerate) = if ideal.is_zero() {
        // Pairings against the full coordinate basis must vanish.
        (Submodule::zero(&ring, n), true)
    } else if ideal.is_unit() {
        (Submodule::full(&ring, n), true)
    } else {
        let log = log_derivations(ideal)?;
        let rows: Vec<&PolyVec> = log.module().gens().iter().collect();
        let k = rows.len();
        let gens: Vec<Poly> = ideal.gens().into_iter().cloned().collect();

        let mut vectors = Vec::new();
        for i in 0..n {
            let comps: Vec<Poly> = rows.iter().map(|r| r.comp(i).clone()).collect();
            vectors.push(PolyVec::new(&ring, comps)?);
        }
        for j in 0..k {
            for g in &gens {
                vectors.push(PolyVec::unit(&ring, k, j).scale_poly(g));
            }
        }
        let syz = syzygy_module(&ring, k, &vectors)?;
        let mut candidates = Vec::new();
        for s in syz.gens() {
            let head = PolyVec::new(&ring, s.comps()[..n].to_vec())?;
            if !head.is_zero() {
                candidates.push(head);
            }
        }
        (canonicalize(&ring, n, candidates)?, false)
    };

    let grads: Vec<PolyVec> = ideal
        .gens()
        .iter()
        .map(|g| gradient(g).to_vec())
        .collect();
    let grad_span = canonicalize(&ring, n, grads.clone())?;
    let grad_plus_zero = grad_span.sum(&zero_module(ideal)?)?;

    let matches_grad_plus_zero = module.module_equal(&grad_plus_zero)?;
    let matches_grad_span = module.module_equal(&grad_span)?;
    let grad_members = grads
        .iter()
        .map(|v| module.contains(v))
        .collect::<Result<Vec<bool>>>()?;

    Ok(NormalModuleReport {
        module,
        degenerate,
        matches_grad_plus_zero,
        matches_grad_span,
        grad_members,
    })
}

/// Result of projecting a field tangentially to a principal divisor.
#[derive(Debug, Clone)]
pub struct TangentialProjection {
    /// D - <D, grad g> grad g.
    pub projected: VectorField,
    /// The discarded part <D, grad g> grad g; the two sum back to D.
    pub perpendicular: VectorField,
    /// Whether the projected field preserves the ideal. Guaranteed when
    /// the chart passes the cond-1 test, reported either way.
    pub in_log_derivations: bool,
}

/// Projects `d` onto the tangential part relative to `chart`.
pub fn tangential_projection(d: &VectorField, chart: &DivisorChart) -> Result<TangentialProjection> {
    chart.ring().same_ring(d.ring())?;
    let pairing = d.apply(chart.generator())?;
    let perpendicular = chart.grad().scale(&pairing)?;
    let projected = d.sub(&perpendicular)?;
    let log = log_derivations(chart.ideal())?;
    let in_log = log.contains(&projected)?;
    Ok(TangentialProjection {
        projected,
        perpendicular,
        in_log_derivations: in_log,
    })
}

/// Result of the cond-1 membership test for a chart.
#[derive(Debug, Clone)]
pub struct Cond1Report {
    pub holds: bool,
    /// Normal form of 1 - <grad g, grad g> against the ideal; zero iff
    /// the condition holds.
    pub witness: Poly,
}

/// Tests whether 1 - <grad g, grad g> lies in the ideal of the chart.
pub fn cond1_check(chart: &DivisorChart) -> Result<Cond1Report> {
    let ring = chart.ring();
    let mut pairing = Poly::zero(ring);
    for c in chart.grad().coeffs() {
        pairing = &pairing + &(c * c);
    }
    let expr = &Poly::one(ring) - &pairing;
    let witness = chart.ideal().normal_form(&expr)?;
    Ok(Cond1Report {
        holds: witness.is_zero(),
        witness,
    })
}

/// Outcome of Saito's determinant test for a candidate basis.
#[derive(Debug, Clone)]
pub struct SaitoReport {
    pub free: bool,
    /// Determinant of the coefficient matrix of the candidate fields.
    pub determinant: Poly,
    /// The constant c with det = c * g, when the test passes.
    pub unit_factor: Option<GaussianRational>,
}

/// Saito's criterion: n fields generate the logarithmic derivations of
/// a free divisor iff their coefficient determinant equals the divisor
/// generator times a nonzero constant.
pub fn saito_free_check(fields: &[VectorField], chart: &DivisorChart) -> Result<SaitoReport> {
    let ring = chart.ring();
    let n = ring.nvars();
    if fields.len() != n {
        return Err(Error::Arity(format!(
            "Saito's criterion needs exactly {n} fields, got {}",
            fields.len()
        )));
    }
    let mat: Vec<Vec<Poly>> = fields.iter().map(|f| f.coeffs().to_vec()).collect();
    let determinant = poly_det(&mat)?;

    let mut free = false;
    let mut unit_factor = None;
    if !determinant.is_zero() {
        if let Some(cert) = chart.ideal().represent(&determinant)? {
            // det = q * g exactly; freeness needs q to be a nonzero constant.
            let q = &cert[0];
            if q.is_constant() && !q.is_zero() {
                free = true;
                unit_factor = Some(q.constant_term());
            }
        }
    }
    Ok(SaitoReport {
        free,
        determinant,
        unit_factor,
    })
}

/// Per-generator outcome of the splitting identities.
#[derive(Debug, Clone)]
pub struct AtiyahGeneratorCheck {
    pub generator: String,
    /// D(q g) = q D(g) + D(q) g for every sample coefficient q.
    pub leibniz_identity: bool,
    /// Both summands land in the ideal for every sample q.
    pub summands_in_ideal: bool,
}

/// Generator-level verification that first-order operators on the
/// principal ideal split into a logarithmic part and an ideal part.
#[derive(Debug, Clone)]
pub struct AtiyahSplitReport {
    /// q g -> q grad g respects sums and coefficient scaling.
    pub correspondence_respects_operations: bool,
    /// Multiplication by an ideal element is coefficient-linear on the
    /// ideal, i.e. carries zero symbol.
    pub multiplication_has_zero_symbol: bool,
    pub generators: Vec<AtiyahGeneratorCheck>,
    pub all_pass: bool,
}

/// Checks the two halves of the splitting argument on the canonical
/// logarithmic generators, using 1, the coordinates and g itself as
/// sample coefficients.
pub fn atiyah_split_report(chart: &DivisorChart) -> Result<AtiyahSplitReport> {
    let ring = chart.ring();
    let g = chart.generator();
    let grad = chart.grad();
    let ideal = chart.ideal();

    let mut samples = vec![Poly::one(ring)];
    for i in 0..ring.nvars() {
        samples.push(Poly::var(ring, i));
    }
    samples.push(g.clone());

    // q g -> q grad g: additivity and scaling by a coefficient.
    let mut correspondence = true;
    for q1 in &samples {
        for q2 in &samples {
            let sum_image = grad.scale(&(q1 + q2))?;
            let image_sum = grad.scale(q1)?.add(&grad.scale(q2)?)?;
            if sum_image != image_sum {
                correspondence = false;
            }
            let scaled_image = grad.scale(&(q1 * q2))?;
            let image_scaled = grad.scale(q2)?.scale(q1)?;
            if scaled_image != image_scaled {
                correspondence = false;
            }
        }
    }

    // h * (q' (q g)) = q' (h (q g)): multiplication by h has no symbol.
    let mut zero_symbol = true;
    for q in &samples {
        for q2 in &samples {
            let h = &(q * g); // runs over ideal elements
            let lhs = h * &(q2 * &(q * g));
            let rhs = q2 * &(h * &(q * g));
            if lhs != rhs {
                zero_symbol = false;
            }
        }
    }

    let log = log_derivations(ideal)?;
    let mut generators = Vec::new();
    let mut all_pass = correspondence && zero_symbol;
    for d in log.generators()? {
        let dg = d.apply(g)?;
        let mut leibniz = true;
        let mut in_ideal = true;
        for q in &samples {
            let lhs = d.apply(&(q * g))?;
            let first = q * &dg;
            let second = &d.apply(q)? * g;
            if lhs != &first + &second {
                leibniz = false;
            }
            if !ideal.contains(&first)? || !ideal.contains(&second)? {
                in_ideal = false;
            }
        }
        all_pass &= leibniz && in_ideal;
        generators.push(AtiyahGeneratorCheck {
            generator: d.to_string(),
            leibniz_identity: leibniz,
            summands_in_ideal: in_ideal,
        });
    }

    Ok(AtiyahSplitReport {
        correspondence_respects_operations: correspondence,
        multiplication_has_zero_symbol: zero_symbol,
        generators,
        all_pass,
    })
}

/// Canonical representative of a logarithmic derivation on Y = V(I):
/// coefficients are reduced against the ideal, then the vector against
/// the zero module, so fields differing by a vanishing derivation agree.
pub fn quotient_representative(d: &VectorField, ideal: &Ideal) -> Result<VectorField> {
    let log = log_derivations(ideal)?;
    if !log.contains(d)? {
        return Err(Error::Domain(format!(
            "{d} does not preserve the ideal; no class on the quotient"
        )));
    }
    let reduced = ideal.normal_form_vec(&d.to_vec())?;
    let canonical = zero_module(ideal)?.normal_form(&reduced)?;
    VectorField::from_vec(&canonical)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::module_equal;

    fn ring2() -> PolyRing {
        PolyRing::new(&["x", "y"]).unwrap()
    }

    fn ring3() -> PolyRing {
        PolyRing::new(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn normal_crossing_log_derivations_are_the_coordinate_scalings() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let log = log_derivations(&ideal).unwrap();

        let expected = Submodule::new(
            &r,
            2,
            vec![
                VectorField::parse(&r, &["x", "0"]).unwrap().to_vec(),
                VectorField::parse(&r, &["0", "y"]).unwrap().to_vec(),
            ],
        )
        .unwrap();
        assert!(log.module().module_equal(&expected).unwrap());

        // Reduced generators are exactly the two scalings, monic.
        let gens = log.generators().unwrap();
        assert_eq!(gens.len(), 2);
        let printed: Vec<String> = gens.iter().map(|d| d.to_string()).collect();
        assert!(printed.contains(&"[x, 0]".to_string()));
        assert!(printed.contains(&"[0, y]".to_string()));
    }

    #[test]
    fn smooth_divisor_log_derivations() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x").unwrap()]).unwrap();
        let log = log_derivations(&ideal).unwrap();
        let expected = Submodule::new(
            &r,
            2,
            vec![
                VectorField::parse(&r, &["x", "0"]).unwrap().to_vec(),
                VectorField::parse(&r, &["0", "1"]).unwrap().to_vec(),
            ],
        )
        .unwrap();
        assert!(log.module().module_equal(&expected).unwrap());
    }

    #[test]
    fn cone_log_derivations_contain_hamiltonians_and_euler() {
        let r = ring3();
        let ideal = Ideal::new(&r, vec![r.parse("x^2+4*y*z").unwrap()]).unwrap();
        let log = log_derivations(&ideal).unwrap();
        for coeffs in [
            ["0", "2*y", "-2*z"],
            ["-2*y", "0", "x"],
            ["2*z", "-x", "0"],
            ["x", "y", "z"],
        ] {
            let d = VectorField::parse(&r, &coeffs).unwrap();
            assert!(log.contains(&d).unwrap(), "missing {d}");
        }
        // Witness data certifies D(g) in the ideal for each generator.
        for (v, per_gen) in log.module().gens().iter().zip(log.witnesses()) {
            let d = VectorField::from_vec(v).unwrap();
            let image = d.apply(&r.parse("x^2+4*y*z").unwrap()).unwrap();
            let mut recombined = Poly::zero(&r);
            for (c, g) in per_gen[0].iter().zip(ideal.gens()) {
                recombined = &recombined + &(c * g);
            }
            assert_eq!(image, recombined);
        }
    }

    #[test]
    fn log_derivations_are_involutive_and_sandwiched() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let log = log_derivations(&ideal).unwrap();
        let gens = log.generators().unwrap();
        assert!(crate::forms::involutivity_check(&gens).unwrap());

        let zero = zero_module(&ideal).unwrap();
        for v in zero.gens() {
            assert!(log.module().contains(v).unwrap());
        }
        let full = Submodule::full(&r, 2);
        for v in log.module().gens() {
            assert!(full.contains(v).unwrap());
        }
    }

    #[test]
    fn zero_module_of_crossing() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let z = zero_module(&ideal).unwrap();
        let expected = Submodule::new(
            &r,
            2,
            vec![
                VectorField::parse(&r, &["x*y", "0"]).unwrap().to_vec(),
                VectorField::parse(&r, &["0", "x*y"]).unwrap().to_vec(),
            ],
        )
        .unwrap();
        assert!(module_equal(&z, &expected).unwrap());
        assert!(zero_module(&Ideal::new(&r, vec![]).unwrap())
            .unwrap()
            .is_zero_module());
    }

    #[test]
    fn metric_pairing_detects_the_zero_module() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x").unwrap()]).unwrap();
        let inside = VectorField::parse(&r, &["x", "x"]).unwrap();
        let outside = VectorField::parse(&r, &["1", "0"]).unwrap();
        assert!(metric_t0_test(&inside, &ideal).unwrap());
        assert!(!metric_t0_test(&outside, &ideal).unwrap());
        assert!(metric_t0_test(&VectorField::zero(&r), &ideal).unwrap());
        // Agreement with zero-module membership.
        let z = zero_module(&ideal).unwrap();
        assert!(z.contains(&inside.to_vec()).unwrap());
        assert!(!z.contains(&outside.to_vec()).unwrap());
    }

    #[test]
    fn normal_module_of_crossing_disagrees_with_the_gradient_span() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let report = normal_module(&ideal).unwrap();
        let expected = Submodule::new(
            &r,
            2,
            vec![
                VectorField::parse(&r, &["y", "0"]).unwrap().to_vec(),
                VectorField::parse(&r, &["0", "x"]).unwrap().to_vec(),
            ],
        )
        .unwrap();
        assert!(report.module.module_equal(&expected).unwrap());
        assert!(!report.degenerate);
        // The gradient span misses y d/dx, even after adding the zero module.
        assert!(!report.matches_grad_span);
        assert!(!report.matches_grad_plus_zero);
        // But the gradient itself is normal.
        assert_eq!(report.grad_members, vec![true]);
    }

    #[test]
    fn normal_module_of_smooth_divisor_matches_gradient_plus_zero() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x").unwrap()]).unwrap();
        let report = normal_module(&ideal).unwrap();
        let expected = Submodule::new(
            &r,
            2,
            vec![
                VectorField::parse(&r, &["1", "0"]).unwrap().to_vec(),
                VectorField::parse(&r, &["0", "x"]).unwrap().to_vec(),
            ],
        )
        .unwrap();
        assert!(report.module.module_equal(&expected).unwrap());
        assert!(report.matches_grad_plus_zero);
        assert!(!report.matches_grad_span);
    }

    #[test]
    fn normal_module_degenerate_cases() {
        let r = ring2();
        let zero_report = normal_module(&Ideal::new(&r, vec![]).unwrap()).unwrap();
        assert!(zero_report.degenerate);
        assert!(zero_report.module.is_zero_module());

        let unit_report =
            normal_module(&Ideal::new(&r, vec![Poly::one(&r)]).unwrap()).unwrap();
        assert!(unit_report.degenerate);
        assert!(unit_report
            .module
            .module_equal(&Submodule::full(&r, 2))
            .unwrap());
    }

    #[test]
    fn tangential_projection_examples() {
        let r = ring2();

        let smooth = DivisorChart::new(r.parse("x").unwrap()).unwrap();
        let dx = VectorField::basis(&r, 0);
        let proj = tangential_projection(&dx, &smooth).unwrap();
        assert!(proj.projected.is_zero());
        assert!(proj.in_log_derivations);

        let d = VectorField::parse(&r, &["y", "x"]).unwrap();
        let proj = tangential_projection(&d, &smooth).unwrap();
        assert_eq!(proj.projected, VectorField::parse(&r, &["0", "x"]).unwrap());
        assert!(proj.in_log_derivations);

        let crossing = DivisorChart::new(r.parse("x*y").unwrap()).unwrap();
        let proj = tangential_projection(&dx, &crossing).unwrap();
        assert_eq!(
            proj.projected,
            VectorField::parse(&r, &["1-y^2", "-x*y"]).unwrap()
        );
        assert!(!proj.in_log_derivations);
        // The split D = D^T + D^perp is exact regardless.
        assert_eq!(proj.projected.add(&proj.perpendicular).unwrap(), dx);
    }

    #[test]
    fn cond1_examples() {
        let r = ring2();
        let coordinate = DivisorChart::new(r.parse("x").unwrap()).unwrap();
        let report = cond1_check(&coordinate).unwrap();
        assert!(report.holds);
        assert!(report.witness.is_zero());

        let crossing = DivisorChart::new(r.parse("x*y").unwrap()).unwrap();
        let report = cond1_check(&crossing).unwrap();
        assert!(!report.holds);
        assert_eq!(report.witness, r.parse("1-x^2-y^2").unwrap());

        let r3 = ring3();
        let cone = DivisorChart::new(r3.parse("x^2+4*y*z").unwrap()).unwrap();
        assert!(!cond1_check(&cone).unwrap().holds);
    }

    #[test]
    fn saito_criterion() {
        let r = ring2();
        let crossing = DivisorChart::new(r.parse("x*y").unwrap()).unwrap();
        let fields = vec![
            VectorField::parse(&r, &["x", "0"]).unwrap(),
            VectorField::parse(&r, &["0", "y"]).unwrap(),
        ];
        let report = saito_free_check(&fields, &crossing).unwrap();
        assert!(report.free);
        assert_eq!(report.determinant, r.parse("x*y").unwrap());
        assert_eq!(report.unit_factor, Some(GaussianRational::one()));

        let smooth = DivisorChart::new(r.parse("x").unwrap()).unwrap();
        let fields = vec![
            VectorField::parse(&r, &["x", "0"]).unwrap(),
            VectorField::parse(&r, &["0", "1"]).unwrap(),
        ];
        assert!(saito_free_check(&fields, &smooth).unwrap().free);

        // Hamiltonian fields of the cone are dependent: determinant 0.
        let r3 = ring3();
        let cone = DivisorChart::new(r3.parse("x^2+4*y*z").unwrap()).unwrap();
        let fields = vec![
            VectorField::parse(&r3, &["0", "2*y", "-2*z"]).unwrap(),
            VectorField::parse(&r3, &["-2*y", "0", "x"]).unwrap(),
            VectorField::parse(&r3, &["2*z", "-x", "0"]).unwrap(),
        ];
        let report = saito_free_check(&fields, &cone).unwrap();
        assert!(!report.free);
        assert!(report.determinant.is_zero());

        assert!(matches!(
            saito_free_check(&fields[..2], &cone),
            Err(Error::Arity(_))
        ));
    }

    #[test]
    fn atiyah_split_passes_on_the_three_charts() {
        for (vars, g) in [
            (&["x", "y"][..], "x*y"),
            (&["x", "y"][..], "x"),
            (&["x", "y", "z"][..], "x^2+4*y*z"),
        ] {
            let r = PolyRing::new(vars).unwrap();
            let chart = DivisorChart::new(r.parse(g).unwrap()).unwrap();
            let report = atiyah_split_report(&chart).unwrap();
            assert!(report.all_pass, "split failed for {g}");
            assert!(!report.generators.is_empty());
        }
    }

    #[test]
    fn quotient_representative_canonicalizes() {
        let r = ring2();
        let ideal = Ideal::new(&r, vec![r.parse("x").unwrap()]).unwrap();

        let d = VectorField::parse(&r, &["x", "1+x"]).unwrap();
        let rep = quotient_representative(&d, &ideal).unwrap();
        assert_eq!(rep, VectorField::parse(&r, &["0", "1"]).unwrap());

        // Zero-module elements map to zero.
        let z = VectorField::parse(&r, &["x^2", "x*y"]).unwrap();
        assert!(quotient_representative(&z, &ideal).unwrap().is_zero());

        // Representatives are insensitive to zero-module shifts.
        let shifted = d.add(&z).unwrap();
        assert_eq!(quotient_representative(&shifted, &ideal).unwrap(), rep);

        let crossing = Ideal::new(&r, vec![r.parse("x*y").unwrap()]).unwrap();
        let xdx = VectorField::parse(&r, &["x", "0"]).unwrap();
        assert_eq!(quotient_representative(&xdx, &crossing).unwrap(), xdx);

        // Non-logarithmic input is rejected.
        let bad = VectorField::parse(&r, &["1", "0"]).unwrap();
        assert!(matches!(
            quotient_representative(&bad, &crossing),
            Err(Error::Domain(_))
        ));
    }
}
