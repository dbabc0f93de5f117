#pragma once

#include <optional>
#include <span>
#include <vector>

#include "liolab/cmatrix.hpp"
#include "liolab/vectorize.hpp"

namespace liolab::dynamics {

struct Trajectory {
    std::size_t dim = 0;  // N
    std::vector<double> times;
    std::vector<CVector> raw_states;
    std::vector<Complex> traces;
    /// raw / trace, empty where |trace| <= 1e-12 ||state||.
    std::vector<std::optional<CVector>> normalized_states;
};

/// Sum of the diagonal entries of a row-stacked N^2 vector.
Complex vec_trace(std::span<const Complex> state, std::size_t dim);

/// rho(t) = e^{-i L t} rho0 sampled on `times`, which must start at 0 and
/// increase strictly. Each sample is within tol (relative) of the exact value.
Trajectory evolve(const Liouvillian& l, std::span<const Complex> rho0, std::span<const double> times,
                  double tol = 1e-9);

/// n + 1 equally spaced points on [0, t_max].
std::vector<double> uniform_grid(double t_max, std::size_t steps);

enum class Normalization { Raw, Trace };

struct ObservableRow {
    double t;
    double rho00;
    double rho11;
    double re_rho10;
    double im_rho10;
    double re_trace;
    double im_trace;
};

/// Two-level observables; NaN population/coherence columns where the
/// normalized state is undefined.
std::vector<ObservableRow> observables(const Trajectory& traj,
                                       Normalization mode = Normalization::Trace);

enum class LimitStatus { Converged, Diverging, NotConverged };

struct SteadyLimit {
    LimitStatus status = LimitStatus::NotConverged;
    CVector state;  // mean of the window when Converged
};

/// Diverging when |trace| grows monotonically over the window to more than
/// 1e6 x its initial value; Converged when the last `window` normalized
/// states agree pairwise within tol.
SteadyLimit steady_limit(const Trajectory& traj, std::size_t window, double tol);

}  // namespace liolab::dynamics
