#pragma once

// Row-stacked vectorization of the non-Hermitian Lindblad equation
//
//   d rho/dt = -i (H rho - rho H^dag) + sum_mu r_mu (C rho C^dag - {C^dag C, rho}/2)
//
// into d vec(rho)/dt = -i L vec(rho). Under row stacking
// vec(A X B) = (A (x) B^T) vec(X), which gives
//
//   L = H (x) I - I (x) conj(H)
//       + i sum_mu r_mu [C (x) conj(C) - (C^dag C) (x) I / 2 - I (x) conj(C^dag C) / 2].
//
// An eigenvalue lambda of L evolves as e^{-i lambda t}: Im lambda = 0 is
// stationary, Im lambda < 0 decays.

#include <span>
#include <string_view>
#include <vector>

#include "liolab/cmatrix.hpp"

namespace liolab {

/// Dissipative channel with effective jump operator sqrt(rate) * op.
struct Channel {
    double rate = 0.0;
    CMatrix op;
};

struct OpenSystem {
    CMatrix hamiltonian;  // N x N, need not be Hermitian
    std::vector<Channel> channels;

    std::size_t dim() const noexcept { return hamiltonian.rows(); }
    /// Throws DimensionError / std::invalid_argument on broken invariants.
    void validate() const;
};

inline constexpr std::string_view kLiouvillianConvention = "hamiltonian-convention-row-stacking";

struct Liouvillian {
    std::size_t dim = 0;  // N; matrix is N^2 x N^2
    CMatrix matrix;
    std::string_view convention = kLiouvillianConvention;
};

CVector vec_row(const CMatrix& rho);
CMatrix unvec_row(std::span<const Complex> v);

Liouvillian build_liouvillian(const OpenSystem& sys);

/// Master-equation right-hand side evaluated directly in matrix form.
CMatrix rhs_direct(const OpenSystem& sys, const CMatrix& rho);

}  // namespace liolab
