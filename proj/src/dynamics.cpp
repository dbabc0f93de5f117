#include "liolab/dynamics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "liolab/densec.hpp"

namespace liolab::dynamics {

namespace {

std::optional<CVector> normalize_by_trace(const CVector& state, Complex tr) {
    if (!(std::abs(tr) > 1e-12 * norm2(state))) return std::nullopt;
    CVector out = state;
    for (auto& z : out) z /= tr;
    return out;
}

}  // namespace

Complex vec_trace(std::span<const Complex> state, std::size_t dim) {
    if (state.size() != dim * dim) throw DimensionError("vec_trace: length is not dim^2");
    Complex t{};
    for (std::size_t i = 0; i < dim; ++i) t += state[i * dim + i];
    return t;
}

std::vector<double> uniform_grid(double t_max, std::size_t steps) {
    if (steps == 0 || !(t_max > 0.0)) throw std::invalid_argument("uniform_grid: need steps >= 1, t_max > 0");
    std::vector<double> g(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) g[i] = t_max * static_cast<double>(i) / static_cast<double>(steps);
    return g;
}

Trajectory evolve(const Liouvillian& l, std::span<const Complex> rho0, std::span<const double> times,
                  double tol) {
    const std::size_t n = l.matrix.rows();
    if (rho0.size() != n) {
        throw DimensionError("evolve: initial state has length " + std::to_string(rho0.size()) +
                             ", Liouvillian acts on length " + std::to_string(n));
    }
    if (times.empty() || times.front() != 0.0) throw std::invalid_argument("evolve: grid must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) throw std::invalid_argument("evolve: grid must increase strictly");
    }

    Trajectory traj;
    traj.dim = l.dim;
    traj.times.assign(times.begin(), times.end());
    traj.raw_states.reserve(times.size());
    traj.raw_states.emplace_back(rho0.begin(), rho0.end());

    const double step_tol = tol / static_cast<double>(std::max<std::size_t>(1, times.size() - 1));
    // Uniform grids reuse one step propagator.
    double cached_dt = std::numeric_limits<double>::quiet_NaN();
    CMatrix step;
    for (std::size_t i = 1; i < times.size(); ++i) {
        const double dt = times[i] - times[i - 1];
        if (dt != cached_dt) {
            step = expm(Complex(0.0, -dt) * l.matrix, step_tol);
            cached_dt = dt;
        }
        traj.raw_states.push_back(step * std::span<const Complex>(traj.raw_states.back()));
    }

    traj.traces.reserve(times.size());
    traj.normalized_states.reserve(times.size());
    for (const auto& s : traj.raw_states) {
        const Complex tr = vec_trace(s, l.dim);
        traj.traces.push_back(tr);
        traj.normalized_states.push_back(normalize_by_trace(s, tr));
    }
    return traj;
}

std::vector<ObservableRow> observables(const Trajectory& traj, Normalization mode) {
    if (traj.dim != 2) throw DimensionError("observables: two-level trajectory required");
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<ObservableRow> rows;
    rows.reserve(traj.times.size());
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        ObservableRow row{traj.times[i], nan, nan, nan, nan, traj.traces[i].real(), traj.traces[i].imag()};
        const CVector* s = nullptr;
        if (mode == Normalization::Raw) {
            s = &traj.raw_states[i];
        } else if (traj.normalized_states[i]) {
            s = &*traj.normalized_states[i];
        }
        if (s) {
            row.rho00 = (*s)[0].real();
            row.rho11 = (*s)[3].real();
            row.re_rho10 = (*s)[2].real();
            row.im_rho10 = (*s)[2].imag();
        }
        rows.push_back(row);
    }
    return rows;
}

SteadyLimit steady_limit(const Trajectory& traj, std::size_t window, double tol) {
    const std::size_t n = traj.times.size();
    if (window == 0 || window > n) throw std::invalid_argument("steady_limit: window exceeds trajectory");
    SteadyLimit out;

    const double tr0 = std::abs(traj.traces.front());
    bool monotone = true;
    for (std::size_t i = n - window + 1; i < n; ++i) {
        if (!(std::abs(traj.traces[i]) > std::abs(traj.traces[i - 1]))) monotone = false;
    }
    if (monotone && std::abs(traj.traces.back()) > 1e6 * tr0) {
        out.status = LimitStatus::Diverging;
        return out;
    }

    for (std::size_t i = n - window; i < n; ++i) {
        if (!traj.normalized_states[i]) return out;
    }
    for (std::size_t i = n - window; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(*traj.normalized_states[i], *traj.normalized_states[j]) > tol) return out;

    CVector mean(traj.normalized_states.back()->size());
    for (std::size_t i = n - window; i < n; ++i)
        for (std::size_t k = 0; k < mean.size(); ++k) mean[k] += (*traj.normalized_states[i])[k];
    for (auto& z : mean) z /= static_cast<double>(window);
    out.status = LimitStatus::Converged;
    out.state = std::move(mean);
    return out;
}

}  // namespace liolab::dynamics
