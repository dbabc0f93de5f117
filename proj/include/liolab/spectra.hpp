#pragma once

// Spectral classification on generic Liouvillians: steady-state verdicts,
// exceptional-point clusters, gauge fixing, coherence phase checks,
// continuity-sorted branches and Fermi-arc segments along sweeps.

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "liolab/cmatrix.hpp"
#include "liolab/twolevel.hpp"
#include "liolab/vectorize.hpp"

namespace liolab::spectra {

struct Tolerances {
    double eig = 1e-10;
    /// Relative: |Im lambda| <= steady * (1 + max|lambda|) counts as zero.
    double steady = 1e-9;
    /// |Re lambda| bound for arc membership.
    double arc = 1e-9;
    /// Relative single-linkage radius for eigenvalue clusters.
    double ep_cluster = 1e-4;
    double rank = 1e-8;
    /// Bound on |Re rho01| for the half-pi coherence check.
    double phase = 1e-8;

    friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

enum class SteadyVerdict { HasSteadyState, AllDecaying, Unstable };
std::string_view to_string(SteadyVerdict v);

struct SteadyClassification {
    SteadyVerdict verdict = SteadyVerdict::AllDecaying;
    std::vector<std::size_t> indices;
};

/// Stationarity rule: some Im lambda_j = 0 while every Im lambda_i <= 0, both within tol_s.
SteadyClassification classify_steady(std::span<const Complex> eigs, double tol_s);

/// tol * (1 + max|lambda|)
double relative_steady_tol(std::span<const Complex> eigs, double tol = 1e-9);

struct EpCluster {
    Complex mean;
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
    std::vector<std::size_t> members;

    bool exceptional() const noexcept { return geometric < algebraic; }
};

/// Single-linkage clusters of size >= 2 with radius tol * (1 + max|lambda|).
/// Geometric multiplicity is dim - rank(M - mean I).
std::vector<EpCluster> detect_ep(const CMatrix& m, std::span<const Complex> eigs, double tol = 1e-4,
                                 double rank_tol = 1e-8);
std::vector<EpCluster> detect_ep(const Liouvillian& l, double tol = 1e-4, double rank_tol = 1e-8);

/// Scales the vector so its last diagonal element (rho_{N-1,N-1}) is 1. When
/// that element is negligible (< 1e-12 ||v||), the largest component becomes 1.
CVector gauge_fix(std::span<const Complex> state);

enum class PhaseVerdict { HalfPi, NotApplicable, Violated };
std::string_view to_string(PhaseVerdict v);

struct PhaseTolerances {
    double arc = 1e-9;
    double phase = 1e-8;
};

/// Two-level coherence phase test on a gauge-fixed state (rho00, rho01, rho10, rho11).
PhaseVerdict phase_check(std::span<const Complex> state, Complex lambda,
                         const twolevel::TwoLevelParams& p, PhaseTolerances tol = {});
PhaseVerdict phase_check(std::span<const Complex> state, Complex lambda,
                         const twolevel::TwoLevelParams& p, double tol);

struct Eigenpair {
    Complex value;
    CVector state;  // gauge-fixed
};

struct SpectralReport {
    std::vector<Eigenpair> eigenpairs;
    SteadyVerdict verdict = SteadyVerdict::AllDecaying;
    std::vector<std::size_t> steady_indices;
    std::vector<std::size_t> arc_indices;
    std::vector<EpCluster> ep_clusters;
    /// Two-level only: index of the i eta_-/2 branch with state (0, 1, 1, 0).
    std::optional<std::size_t> trivial_index;
    double residual_bound = 0.0;
    Tolerances tol;

    bool has_ep() const;
};

/// Numeric eigendecomposition plus classification. Non-defective repeated
/// eigenvalues get an orthonormal null-space basis; when `preferred` lies in
/// such an eigenspace it is used as the first basis vector.
SpectralReport analyze(const Liouvillian& l, const Tolerances& tol = {},
                       std::span<const Complex> preferred = {});

/// analyze() on the two-level Liouvillian with the trivial branch identified.
SpectralReport analyze_two_level(const twolevel::TwoLevelParams& p, const Tolerances& tol = {});

struct BranchTable {
    std::vector<double> params;
    /// rows[i][b]: eigenvalue of branch b at params[i].
    std::vector<std::vector<Complex>> rows;
    /// permutation[i][b]: index into the i-th input multiset.
    std::vector<std::vector<std::size_t>> permutation;
    /// Rows whose matching margin fell below 10x the eigensolver tolerance.
    std::vector<std::size_t> warnings;
};

/// Minimal-total-distance matching between consecutive multisets. The first
/// row is ordered lexicographically by (Re, Im).
BranchTable continuity_sort(std::span<const std::vector<Complex>> spectra, double eig_tol = 1e-10);

struct ArcSegment {
    std::size_t branch = 0;
    std::size_t first_row = 0;
    std::size_t last_row = 0;
    double from = 0.0;
    double to = 0.0;
    bool trivial = false;
    bool starts_at_boundary = false;
    bool ends_at_boundary = false;
};

/// Maximal runs of rows where |Re lambda| <= tol * (1 + |lambda|) per branch.
std::vector<ArcSegment> fermi_arc_scan(const BranchTable& table, double tol = 1e-9,
                                       std::optional<std::size_t> trivial_branch = std::nullopt);

/// Exact minimal-cost assignment: result[r] is the column matched to row r.
std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost);

}  // namespace liolab::spectra
