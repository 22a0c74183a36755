//! Exact symbolic geometry over Q(i)[x_1..x_n]: polynomial and module
//! Groebner machinery, vector fields and differential forms, logarithmic
//! derivation modules of divisors, metrics and connections, Lie algebroids
//! (including those induced by Poisson structures), and a truncated
//! Lie-Rinehart cohomology toolkit.
//!
//! Everything is computed over the Gaussian rationals with decidable
//! equality; there are no floating point numbers anywhere.

pub mod error;
pub mod rational;
pub mod ring;
pub mod poly;
pub mod parse;
pub mod doubled;
pub mod linalg;
pub mod ratfun;
pub mod groebner;
pub mod fields;
pub mod forms;
pub mod loggeo;
pub mod metrics;
pub mod algebroid;
pub mod cohomology;

pub use error::{Error, Result};
pub use rational::GaussianRational;
pub use ring::{ModuleOrder, MonomialOrder, PolyRing};
pub use poly::Poly;
pub use parse::parse_poly;
pub use doubled::DoubledPoly;
pub use ratfun::{fraction_matrix_inverse, poly_det, RationalFunction};
pub use groebner::{
    ideal_member, module_equal, module_member, syzygy_module, syzygy_of_polys, GbData, Ideal,
    PolyVec, Submodule,
};
pub use fields::{gradient, VectorField};
pub use forms::{involutivity_check, is_basic, parse_form, DiffForm, Foliation};
pub use loggeo::{
    atiyah_split_report, cond1_check, log_derivations, metric_t0_test, normal_module,
    quotient_representative, saito_free_check, tangential_projection, zero_module,
    AtiyahGeneratorCheck, AtiyahSplitReport, Cond1Report, DivisorChart, LogDerivationModule,
    NormalModuleReport, SaitoReport, TangentialProjection,
};
pub use metrics::{
    group_invariance_check, group_invariance_check_with_christoffel, induced_connection_on_y,
    koszul_christoffel, levi_civita_check, quotient_metric, standard_bilinear,
    standard_chart_connection, standard_connection, standard_hermitian,
    two_canonical_l_connections, BilinearMetric, ChartConnection, Connection, GroupAction,
    HermitianMetric, LConnections,
};
pub use algebroid::{
    characteristic_foliation, from_poisson, hamiltonian_field, image_metric_naive,
    image_metric_orthogonal, invariant_functions, jacobi_check, kernel_split,
    l_invariance_check, KernelSplit, LieAlgebroid, PoissonStructure,
};
pub use cohomology::{
    bott_connection, ce_differential, d_squared_check, foliation_algebroid,
    log_derham_generators, truncated_cohomology_ranks, truncated_cohomology_ranks_up_to,
    CECochain, CoefficientModule, CohomologyReport, DegreeReport, DualBasis, TruncationWindow,
};




