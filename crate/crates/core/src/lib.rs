//! Exact Jordan-Chevalley decomposition of square matrices.
//!
//! Every matrix `U` over a perfect field splits uniquely as `U = D + N` with
//! `D` diagonalizable over an extension, `N` nilpotent and `DN = ND`. This
//! crate computes the split over the rationals with Chevalley's Newton
//! iteration: from an annihilating polynomial `p` of `U` (the characteristic
//! polynomial by default) it builds a polynomial `h` with `D = h(U)`, using
//! only gcds and exact division. No eigenvalue is ever computed.
//!
//! The algebra is generic over a [`Scalar`] field; the aliases below fix it
//! to arbitrary-precision rationals, which is what the text formats and the
//! command-line tool use.
//!
//! ```
//! use chevalley::{jordan_chevalley, text::parse_matrix};
//!
//! let u = parse_matrix("[[3, 1], [0, 3]]").unwrap();
//! let dec = jordan_chevalley(&u, None).unwrap();
//! assert_eq!(dec.d, parse_matrix("[[3, 0], [0, 3]]").unwrap());
//! assert_eq!(dec.n, parse_matrix("[[0, 1], [0, 0]]").unwrap());
//! ```

pub mod apps;
pub mod decomp;
pub mod document;
pub mod error;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod text;

pub use apps::{exp_nilpotent_factor, matrix_power};
pub use decomp::{
    crt_solve, iteration_bound, jordan_chevalley, multiplicative, newton_matrix, newton_quotient,
    verify_decomposition,
};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::{Degree, Poly};
pub use scalar::Scalar;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;
pub type Polynomial = poly::Poly<Rational>;
pub type SquareMatrix = matrix::Matrix<Rational>;
pub type PolyMatrix = apps::PolyMatrix<Rational>;
pub type Decomposition = decomp::Decomposition<Rational>;
pub type CrtSystem = decomp::CrtSystem<Rational>;
pub type SeparablePart = poly::SeparablePart<Rational>;
