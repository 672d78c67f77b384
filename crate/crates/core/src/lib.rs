//! Exact finite-field tooling for Roth-Lempel codes and their three-column
//! extension `C2`.
//!
//! The crate builds the codes, evaluates the closed-form MDS / AMDS / NMDS
//! criteria on their parameters, and checks every criterion against
//! brute-force distance computations. It also covers the covering radius of
//! Roth-Lempel duals and the optimal extendability of dimension-three
//! Reed-Solomon codes.
//!
//! ```
//! use rlmds::{c2_generator, field_of_order, ConstructionParams, Elem, Triple, Verdict};
//!
//! let f = field_of_order(5).unwrap();
//! let alpha = vec![Elem(1), Elem(2), Elem(3)];
//! let p = ConstructionParams::new(&f, alpha, 3, Triple::new(Elem(2), Elem(0), Elem(1))).unwrap();
//! let c = c2_generator(&p).unwrap().classify().unwrap();
//! assert_eq!((c.n, c.k, c.d, c.verdict), (6, 3, 4, Verdict::Mds));
//! ```

pub mod code;
pub mod construct;
pub mod covering;
pub mod criteria;
pub mod error;
pub mod extendable;
pub mod fixtures;
pub mod gf;
pub mod matrix;
pub mod search;

pub use code::{Classification, CodeJson, CosetLeaderTable, DistanceStrategy, LinearCode, Verdict, DEFAULT_BUDGET};
pub use construct::{
    c2_generator, c2_generator_matrix, c2_parity, grs, reed_solomon, roth_lempel, roth_lempel_generator, theorem1_u,
    ConstructionParams, Triple,
};
pub use covering::{sweep_covering, verify_covering, CoveringReport};
pub use criteria::{
    corollary_nmds, dual_amds_exact, is_ntd_set, mds_bruteforce, theorem2_mds, theorem_c2_amds, theorem_dual_amds,
    Condition, ConditionReport,
};
pub use error::{Error, Result};
pub use extendable::{augment_identity, theorem5_verdict, Extendability, ExtendabilityReport};
pub use gf::{field_of_order, make_field, primitive_elements, Elem, Field, FieldElement, FieldSpec};
pub use matrix::Matrix;
pub use search::{search, SearchReport, Target, TripleRow};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
