#include "liolab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "liolab/densec.hpp"

namespace liolab::spectra {

namespace {

double max_abs(std::span<const Complex> values) {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
    Complex acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

// Orthonormal basis of span(basis) whose first vector is `preferred` when it
// lies in that span.
std::vector<CVector> rotate_basis(std::vector<CVector> basis, std::span<const Complex> preferred) {
    if (preferred.empty() || basis.empty()) return basis;
    CVector p(preferred.begin(), preferred.end());
    const double pn = norm2(p);
    if (pn == 0.0) return basis;
    for (auto& z : p) z /= pn;

    CVector proj(p.size());
    for (const auto& b : basis) {
        const Complex c = inner(b, p);
        for (std::size_t i = 0; i < p.size(); ++i) proj[i] += c * b[i];
    }
    if (distance(proj, p) > 1e-8) return basis;

    std::vector<CVector> out{p};
    for (const auto& b : basis) {
        if (out.size() == basis.size()) break;
        CVector r = b;
        for (const auto& q : out) {
            const Complex c = inner(q, r);
            for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * q[i];
        }
        const double rn = norm2(r);
        if (rn < 1e-6) continue;
        for (auto& z : r) z /= rn;
        out.push_back(std::move(r));
    }
    return out.size() == basis.size() ? out : basis;
}

}  // namespace

std::string_view to_string(SteadyVerdict v) {
    switch (v) {
        case SteadyVerdict::HasSteadyState: return "HasSteadyState";
        case SteadyVerdict::AllDecaying: return "AllDecaying";
        case SteadyVerdict::Unstable: return "Unstable";
    }
    return "?";
}

std::string_view to_string(PhaseVerdict v) {
    switch (v) {
        case PhaseVerdict::HalfPi: return "HalfPi";
        case PhaseVerdict::NotApplicable: return "NotApplicable";
        case PhaseVerdict::Violated: return "Violated";
    }
    return "?";
}

double relative_steady_tol(std::span<const Complex> eigs, double tol) {
    return tol * (1.0 + max_abs(eigs));
}

SteadyClassification classify_steady(std::span<const Complex> eigs, double tol_s) {
    if (eigs.empty()) throw std::invalid_argument("classify_steady: empty spectrum");
    SteadyClassification out;
    bool unstable = false;
    for (std::size_t i = 0; i < eigs.size(); ++i) {
        const double im = eigs[i].imag();
        if (im > tol_s) unstable = true;
        if (std::abs(im) <= tol_s) out.indices.push_back(i);
    }
    if (unstable) {
        out.verdict = SteadyVerdict::Unstable;
    } else if (!out.indices.empty()) {
        out.verdict = SteadyVerdict::HasSteadyState;
    } else {
        out.verdict = SteadyVerdict::AllDecaying;
    }
    return out;
}

std::vector<EpCluster> detect_ep(const CMatrix& m, std::span<const Complex> eigs, double tol,
                                 double rank_tol) {
    const std::size_t n = eigs.size();
    const double radius = tol * (1.0 + max_abs(eigs));

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(eigs[i] - eigs[j]) <= radius) parent[find(j)] = find(i);

    std::vector<EpCluster> clusters;
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = find(i);
        if (done[root]) continue;
        done[root] = true;
        EpCluster c;
        for (std::size_t j = i; j < n; ++j)
            if (find(j) == root) c.members.push_back(j);
        if (c.members.size() < 2) continue;
        for (std::size_t j : c.members) c.mean += eigs[j];
        c.mean /= static_cast<double>(c.members.size());
        c.algebraic = c.members.size();
        const std::size_t nullity = m.rows() - rank_at(m, c.mean, rank_tol);
        c.geometric = std::min(nullity, c.algebraic);
        clusters.push_back(std::move(c));
    }
    return clusters;
}

std::vector<EpCluster> detect_ep(const Liouvillian& l, double tol, double rank_tol) {
    const auto values = eigenvalues(l.matrix);
    return detect_ep(l.matrix, values, tol, rank_tol);
}

CVector gauge_fix(std::span<const Complex> state) {
    if (state.empty()) throw std::invalid_argument("gauge_fix: empty vector");
    const double nrm = norm2(state);
    if (nrm == 0.0) throw std::invalid_argument("gauge_fix: zero vector");
    std::size_t anchor = state.size() - 1;
    if (std::abs(state[anchor]) < 1e-12 * nrm) {
        double best = 0.0;
        for (const auto& z : state) best = std::max(best, std::abs(z));
        for (std::size_t i = 0; i < state.size(); ++i) {
            if (std::abs(state[i]) >= best * (1.0 - 1e-12)) {
                anchor = i;
                break;
            }
        }
    }
    const Complex s = state[anchor];
    CVector out(state.begin(), state.end());
    for (auto& z : out) z /= s;
    out[anchor] = 1.0;
    return out;
}

PhaseVerdict phase_check(std::span<const Complex> state, Complex lambda,
                         const twolevel::TwoLevelParams& p, PhaseTolerances tol) {
    if (state.size() != 4) throw DimensionError("phase_check: expected a two-level (length 4) state");
    const Complex rho00 = state[0];
    const Complex rho01 = state[1];
    const Complex rho10 = state[2];
    const Complex rho11 = state[3];
    if (std::abs(lambda.real()) > tol.arc) return PhaseVerdict::NotApplicable;
    if (p.omega == 0.0) return PhaseVerdict::NotApplicable;
    if (std::abs(rho00 - rho11) <= tol.phase) return PhaseVerdict::NotApplicable;
    if (std::abs(2.0 * lambda - kI * p.eta_minus()) <= tol.phase * (1.0 + std::abs(lambda))) {
        return PhaseVerdict::NotApplicable;
    }
    const bool real_parts_vanish =
        std::abs(rho01.real()) <= tol.phase && std::abs(rho10.real()) <= tol.phase;
    if (real_parts_vanish && std::abs(rho01.imag()) > tol.phase) return PhaseVerdict::HalfPi;
    return PhaseVerdict::Violated;
}

PhaseVerdict phase_check(std::span<const Complex> state, Complex lambda,
                         const twolevel::TwoLevelParams& p, double tol) {
    return phase_check(state, lambda, p, PhaseTolerances{tol, tol});
}

bool SpectralReport::has_ep() const {
    return std::any_of(ep_clusters.begin(), ep_clusters.end(),
                       [](const EpCluster& c) { return c.exceptional(); });
}

SpectralReport analyze(const Liouvillian& l, const Tolerances& tol,
                       std::span<const Complex> preferred) {
    const EigenResult er = eig(l.matrix, tol.eig);
    SpectralReport rep;
    rep.tol = tol;
    rep.residual_bound = er.residual_bound;

    std::vector<CVector> vectors = er.right_vectors;
    rep.ep_clusters = detect_ep(l.matrix, er.values, tol.ep_cluster, tol.rank);
    for (const auto& c : rep.ep_clusters) {
        if (c.exceptional()) continue;
        auto basis = rotate_basis(null_space(l.matrix, c.mean, tol.rank), preferred);
        if (basis.size() != c.members.size()) continue;
        for (std::size_t k = 0; k < basis.size(); ++k) vectors[c.members[k]] = std::move(basis[k]);
    }

    rep.eigenpairs.reserve(er.values.size());
    for (std::size_t i = 0; i < er.values.size(); ++i) {
        rep.eigenpairs.push_back({er.values[i], gauge_fix(vectors[i])});
    }

    const auto steady = classify_steady(er.values, relative_steady_tol(er.values, tol.steady));
    rep.verdict = steady.verdict;
    rep.steady_indices = steady.indices;
    for (std::size_t i = 0; i < er.values.size(); ++i) {
        const Complex v = er.values[i];
        if (std::abs(v.real()) <= tol.arc * (1.0 + std::abs(v))) rep.arc_indices.push_back(i);
    }
    return rep;
}

SpectralReport analyze_two_level(const twolevel::TwoLevelParams& p, const Tolerances& tol) {
    const CVector trivial{0.0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0};
    SpectralReport rep = analyze(twolevel::liouvillian(p), tol, trivial);

    const Complex target = kI * p.eta_minus() / 2.0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rep.eigenpairs.size(); ++i) {
        best_dist = std::min(best_dist, std::abs(rep.eigenpairs[i].value - target));
    }
    const double radius = best_dist + tol.ep_cluster * (1.0 + std::abs(target));
    double best_overlap = -1.0;
    for (std::size_t i = 0; i < rep.eigenpairs.size(); ++i) {
        const auto& ep = rep.eigenpairs[i];
        if (std::abs(ep.value - target) > radius) continue;
        const double overlap = std::abs(inner(trivial, ep.state)) / norm2(ep.state);
        if (overlap > best_overlap) {
            best_overlap = overlap;
            rep.trivial_index = i;
        }
    }
    // (0, 1, 1, 0) is an exact eigenvector for every parameter set.
    if (rep.trivial_index) rep.eigenpairs[*rep.trivial_index].state = {0.0, 1.0, 1.0, 0.0};
    return rep;
}

std::vector<std::size_t> min_cost_assignment(const std::vector<std::vector<double>>& cost) {
    // Kuhn-Munkres with potentials, 1-based internally.
    const std::size_t n = cost.size();
    if (n == 0) return {};
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        if (cost[i - 1].size() != n) throw DimensionError("min_cost_assignment: cost must be square");
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> result(n);
    for (std::size_t j = 1; j <= n; ++j) result[p[j] - 1] = j - 1;
    return result;
}

BranchTable continuity_sort(std::span<const std::vector<Complex>> spectra, double eig_tol) {
    BranchTable table;
    if (spectra.empty()) return table;
    const std::size_t n = spectra.front().size();

    std::vector<std::size_t> first(n);
    std::iota(first.begin(), first.end(), std::size_t{0});
    std::stable_sort(first.begin(), first.end(), [&](std::size_t a, std::size_t b) {
        const Complex x = spectra.front()[a];
        const Complex y = spectra.front()[b];
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    table.permutation.push_back(first);
    std::vector<Complex> prev(n);
    for (std::size_t b = 0; b < n; ++b) prev[b] = spectra.front()[first[b]];
    table.rows.push_back(prev);

    for (std::size_t r = 1; r < spectra.size(); ++r) {
        const auto& cur = spectra[r];
        if (cur.size() != n) throw DimensionError("continuity_sort: spectra differ in size");
        std::vector<std::vector<double>> cost(n, std::vector<double>(n));
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t j = 0; j < n; ++j) cost[b][j] = std::abs(prev[b] - cur[j]);
        const auto match = min_cost_assignment(cost);

        double margin = std::numeric_limits<double>::infinity();
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j == match[b]) continue;
                margin = std::min(margin, cost[b][j] - cost[b][match[b]]);
            }
        }
        std::vector<Complex> row(n);
        for (std::size_t b = 0; b < n; ++b) row[b] = cur[match[b]];
        if (n > 1 && margin < 10.0 * eig_tol * (1.0 + max_abs(row))) table.warnings.push_back(r);
        table.permutation.push_back(match);
        table.rows.push_back(row);
        prev = std::move(row);
    }
    return table;
}

std::vector<ArcSegment> fermi_arc_scan(const BranchTable& table, double tol,
                                       std::optional<std::size_t> trivial_branch) {
    std::vector<ArcSegment> segments;
    if (table.rows.empty()) return segments;
    const std::size_t rows = table.rows.size();
    const std::size_t branches = table.rows.front().size();
    auto param = [&](std::size_t r) {
        return r < table.params.size() ? table.params[r] : static_cast<double>(r);
    };
    for (std::size_t b = 0; b < branches; ++b) {
        std::size_t r = 0;
        while (r < rows) {
            auto on_arc = [&](std::size_t i) {
                const Complex v = table.rows[i][b];
                return std::abs(v.real()) <= tol * (1.0 + std::abs(v));
            };
            if (!on_arc(r)) {
                ++r;
                continue;
            }
            std::size_t end = r;
            while (end + 1 < rows && on_arc(end + 1)) ++end;
            ArcSegment seg;
            seg.branch = b;
            seg.first_row = r;
            seg.last_row = end;
            seg.from = param(r);
            seg.to = param(end);
            seg.trivial = trivial_branch && *trivial_branch == b;
            seg.starts_at_boundary = r == 0;
            seg.ends_at_boundary = end + 1 == rows;
            segments.push_back(seg);
            r = end + 1;
        }
    }
    return segments;
}

}  // namespace liolab::spectra
