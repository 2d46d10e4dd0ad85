//! Exact computer algebra for the graded rings spanned by Hodge, Betti,
//! Chern and Pontryagin numbers of compact Kähler manifolds.
//!
//! The library models each ring degree-by-degree as a free module over ℤ
//! (or ℚ) in canonical coordinates, computes the structural isomorphisms
//! onto polynomial generators, and decides — with machine-checkable
//! certificates — which linear combinations of the underlying numbers are
//! birational invariants, topological invariants, or expressible through
//! characteristic numbers, over ℤ, ℤ/m, or ℚ.
//!
//! Everything is exact: coefficients are arbitrary-precision integers or
//! rationals, lattice questions are settled by Hermite/Smith normal forms,
//! and every classifier answer carries either an explicit reduction over an
//! invariant basis or an explicit violating element of the relevant ideal.
//!
//! Module map:
//!
//! - [`exactring`]: sparse multivariate polynomials with weighted variables
//!   over ℤ, ℤ/m and ℚ, plus substitution homomorphisms.
//! - [`intlinalg`]: exact integer/rational linear algebra — Hermite and
//!   Smith normal forms, linear solving in all three domains, and lattice
//!   (submodule) arithmetic.
//! - [`hodge`]: the Hodge ring, its canonical bases, the generator systems
//!   A,B,C and E,L,S, genus homomorphisms, and graded ideal pieces.
//! - [`poincare`]: the oriented Poincaré ring, its W,X,Y,Z presentation
//!   with rewriting normal forms, and the Kähler Poincaré subring.
//! - [`comparison`]: the forgetful map from Hodge to Poincaré data and the
//!   graded pieces of its kernel.
//! - [`bordism`]: rational unitary bordism in projective-space coordinates,
//!   Chern/Pontryagin numbers, the Todd genus, and the oriented projection.
//! - [`chernhodge`]: the rational Chern–Hodge ring as a diagonal kernel,
//!   its ideals, and linear functionals on it.
//! - [`classify`]: certificate-producing classifiers for user functionals.
//! - [`verify`]: the self-verification suite behind `hodgering verify`.

#![allow(clippy::needless_range_loop)]

pub mod bordism;
pub mod chernhodge;
pub mod classify;
pub mod comparison;
pub mod error;
pub mod exactring;
pub mod hodge;
pub mod intlinalg;
pub mod poincare;
pub mod verify;

mod cache;
mod jsonnum;

pub use bordism::{BordismClassQ, CharNumberVector, HirPolynomialQ, OrientedClassQ};
pub use chernhodge::{ChFunctional, ChSubspaceQ, ChernHodgeElementQ};
pub use classify::{Certificate, Functional, FunctionalDomain, Report, Verdict};
pub use error::{Error, Result};
pub use exactring::{Polynomial, Scalar, ScalarDomain, VarSet};
pub use hodge::{HirPolynomial, HodgePolynomial};
pub use intlinalg::{IntMatrix, SnfDecomposition, Submodule};
pub use poincare::{PoincarePolynomial, WxyzNormalForm};

