//! Exact computer algebra for the quantised enveloping algebras U_q(sl n)
//! and the quantum Lie algebras they contain.
//!
//! Everything is computed over the rational function field Q(v), v = q^{1/2},
//! with zero-tolerance arithmetic: an identity either holds on the nose or it
//! does not. The layers are
//!
//! - [`scalar`]: canonical rational functions in v, q-numbers, q-conjugation;
//! - [`rewrite`]: noncommutative rewriting with diamond-lemma confluence
//!   certificates;
//! - [`linalg`]: exact sparse linear algebra (echelon bases, coordinates,
//!   kernels);
//! - [`uq`]: the algebras U_q(sl n) for n = 2, 3, 4 in PBW normal form, their
//!   Hopf structure, the adjoint action, and the recursive central elements;
//! - [`qlie`]: the quantum Lie algebras L inside U_q(sl n), the bracket
//!   tensor, the antisymmetriser, and the verification suites;
//! - [`report`]: check/verdict bookkeeping shared by the suites.

pub mod linalg;
pub mod qlie;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod uq;
pub mod weight;

pub use qlie::{sl2_suite, sl3_suite, QlieError, QuantumLieAlgebra};
pub use report::{Check, VerificationReport, Verdict};
pub use scalar::{q_number, QNumber, Scalar, ScalarError};
pub use uq::{make_algebra, Algebra, AlgebraElement, PBWMonomial, TensorElement, UqError};
pub use weight::Weight;
