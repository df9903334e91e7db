//! Scalars, dense matrices, subspaces and polynomials.

pub mod eigen;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod scalar;
pub mod subspace;
pub mod vector;

pub use eigen::{eigenvalues_in_field, generalized_eigenspace, jordan_chevalley_semisimple};
pub use matrix::Matrix;
pub use mpoly::MPoly;
pub use poly::{characteristic_polynomial, UPoly};
pub use scalar::{numeric_eps, set_numeric_eps, Cf, Qi, Scalar, DEFAULT_EPS};
pub use subspace::Subspace;

/// `x` with `A x = b`, or `None` when the system is inconsistent.
pub fn solve_linear<F: Scalar>(a: &Matrix<F>, b: &[F]) -> crate::Result<Option<Vec<F>>> {
    a.solve(b)
}
