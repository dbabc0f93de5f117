#pragma once

// Dense complex numerics: Kronecker products, nonsymmetric eigendecomposition,
// matrix exponential / propagator, and SVD-based rank tests.
//
// Residuals and matrix magnitudes use the Frobenius norm throughout.

#include <span>
#include <vector>

#include "liolab/cmatrix.hpp"

namespace liolab {

inline constexpr double kDefaultEigTol = 1e-10;
inline constexpr double kDefaultPropagateTol = 1e-9;
inline constexpr double kDefaultRankTol = 1e-8;

struct EigenResult {
    std::vector<Complex> values;
    /// Unit Euclidean norm, largest-magnitude component real positive.
    std::vector<CVector> right_vectors;
    /// max over pairs of ||M v - lambda v||_F / ||M||_F (0 when M = 0).
    double residual_bound = 0.0;
};

CMatrix kron(const CMatrix& a, const CMatrix& b);

/// All eigenpairs of a square matrix, sorted by (Re, Im).
///
/// Defective matrices yield repeated eigenvalues with nearly parallel
/// vectors; use rank_at() to measure geometric multiplicity. Throws
/// NumericError when the achieved residual exceeds `tol`.
EigenResult eig(const CMatrix& m, double tol = kDefaultEigTol);

/// Eigenvalues only (same ordering and failure contract as eig()).
std::vector<Complex> eigenvalues(const CMatrix& m, double tol = kDefaultEigTol);

/// e^{a}, by Taylor scaling and squaring with truncation error below tol.
CMatrix expm(const CMatrix& a, double tol = kDefaultPropagateTol);

/// e^{-i m t} v to relative accuracy tol.
CVector propagate(const CMatrix& m, std::span<const Complex> v, double t,
                  double tol = kDefaultPropagateTol);

/// Singular values of m - lambda I in descending order.
std::vector<double> shifted_singular_values(const CMatrix& m, Complex lambda);

/// Numerical rank of m - lambda I; singular values <= tol * sigma_max count as zero.
std::size_t rank_at(const CMatrix& m, Complex lambda, double tol = kDefaultRankTol);

/// Orthonormal basis of the numerical null space of m - lambda I.
std::vector<CVector> null_space(const CMatrix& m, Complex lambda, double tol = kDefaultRankTol);

/// Scales v to unit norm with its largest-magnitude component real positive.
void normalize_phase(std::span<Complex> v);

}  // namespace liolab
