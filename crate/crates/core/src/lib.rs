//! Exact rational computations for finite-dimensional quasi-Hopf algebras,
//! their Yetter-Drinfeld modules and braided Hopf algebras in those categories.

pub mod braided;
pub mod calc;
pub mod category;
pub mod derived;
pub mod dual;
pub mod error;
pub mod format;
pub mod hopf_module;
pub mod hzero;
pub mod instances;
pub mod linalg;
pub mod qha;
pub mod quasitriangular;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod tensor;
pub mod yd;

pub use derived::{check_lemma41, check_pq, check_twist, Pq, Twist};
pub use error::{QhaError, Result};
pub use qha::{check_quasi_bialgebra, check_quasi_hopf, QuasiBialgebra, QuasiHopf};
pub use report::{Entry, VerificationReport, Witness};
pub use scalar::Scalar;
pub use tensor::{map_equal, Leg, LinearMap, Mismatch, Tensor};
