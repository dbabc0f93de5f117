#include "liolab/densec.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "liolab/kernels.hpp"

namespace liolab {

namespace {

using EigenMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMat to_eigen(const CMatrix& m) {
    return Eigen::Map<const EigenMat>(m.data().data(), static_cast<Eigen::Index>(m.rows()),
                                      static_cast<Eigen::Index>(m.cols()));
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

double residual(const CMatrix& m, Complex lambda, std::span<const Complex> v) {
    CVector mv = m * v;
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::norm(mv[i] - lambda * v[i]);
    return std::sqrt(acc);
}

EigenResult eig_impl(const CMatrix& m, double tol, bool want_vectors) {
    require_square(m, "eig");
    require_finite(m, "eig");
    const std::size_t n = m.rows();
    EigenResult out;
    if (n == 0) return out;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver;
    solver.compute(to_eigen(m), /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw NumericError("eig: QR iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto& vals = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return lex_less(vals(static_cast<Eigen::Index>(a)), vals(static_cast<Eigen::Index>(b)));
    });

    const double mnorm = frobenius_norm(m);
    double worst = 0.0;
    out.values.reserve(n);
    out.right_vectors.reserve(n);
    for (std::size_t k : order) {
        const auto kk = static_cast<Eigen::Index>(k);
        const Complex lambda = vals(kk);
        CVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = solver.eigenvectors()(static_cast<Eigen::Index>(i), kk);
        normalize_phase(v);
        if (mnorm > 0.0) worst = std::max(worst, residual(m, lambda, v) / mnorm);
        out.values.push_back(lambda);
        if (want_vectors) out.right_vectors.push_back(std::move(v));
    }
    out.residual_bound = worst;
    if (!(worst <= tol)) {
        throw NumericError("eig: achieved residual " + std::to_string(worst) + " exceeds tol " +
                           std::to_string(tol));
    }
    return out;
}

// Frobenius norm bounds the spectral norm, so ||a||_F^k / k! bounds the Taylor tail term.
int taylor_terms(double anorm, double tol) {
    double term = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= anorm / k;
        if (term <= tol) return k;
    }
    throw NumericError("expm: Taylor series failed to converge");
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    require_finite(a, "kron");
    require_finite(b, "kron");
    const std::size_t br = b.rows();
    const std::size_t bc = b.cols();
    CMatrix out(a.rows() * br, a.cols() * bc);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < br; ++k)
                for (std::size_t l = 0; l < bc; ++l) out(i * br + k, j * bc + l) = aij * b(k, l);
        }
    return out;
}

EigenResult eig(const CMatrix& m, double tol) { return eig_impl(m, tol, true); }

std::vector<Complex> eigenvalues(const CMatrix& m, double tol) {
    return eig_impl(m, tol, false).values;
}

void normalize_phase(std::span<Complex> v) {
    const double nrm = norm2(v);
    if (nrm == 0.0) return;
    double best = 0.0;
    for (const auto& z : v) best = std::max(best, std::abs(z));
    // First component within a relative hair of the maximum anchors the phase.
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) >= best * (1.0 - 1e-12)) {
            anchor = i;
            break;
        }
    }
    const Complex scale = std::abs(v[anchor]) / (v[anchor] * nrm);
    for (auto& z : v) z *= scale;
    v[anchor] = Complex(v[anchor].real(), 0.0);
}

CMatrix expm(const CMatrix& a, double tol) {
    require_square(a, "expm");
    require_finite(a, "expm");
    const std::size_t n = a.rows();
    const double anorm = frobenius_norm(a);
    int squarings = 0;
    if (anorm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(anorm / 0.5)));
    const double scale = std::ldexp(1.0, -squarings);
    CMatrix b = Complex(scale) * a;

    // Squaring amplifies the truncation error by at most 2^s in relative terms.
    const double step_tol = std::max(tol * scale * 1e-2, 1e-17);
    const int terms = taylor_terms(anorm * scale, step_tol);

    const auto& k = kernels::active();
    CMatrix result = CMatrix::identity(n);
    CMatrix term = CMatrix::identity(n);
    CMatrix next(n, n);
    for (int j = 1; j <= terms; ++j) {
        k.gemm(n, n, n, term.data().data(), b.data().data(), next.data().data());
        next *= Complex(1.0 / j);
        std::swap(term, next);
        result += term;
    }
    for (int s = 0; s < squarings; ++s) {
        k.gemm(n, n, n, result.data().data(), result.data().data(), next.data().data());
        std::swap(result, next);
    }
    return result;
}

CVector propagate(const CMatrix& m, std::span<const Complex> v, double t, double tol) {
    require_square(m, "propagate");
    require_finite(m, "propagate");
    if (m.rows() != v.size()) {
        throw DimensionError("propagate: generator is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + " but vector has length " +
                             std::to_string(v.size()));
    }
    CVector x(v.begin(), v.end());
    const double gnorm = frobenius_norm(m) * std::abs(t);
    if (gnorm == 0.0) return x;

    // Substeps keep ||A_step|| <= 1, so each Taylor series converges quickly.
    const auto substeps = static_cast<std::size_t>(std::max(1.0, std::ceil(gnorm)));
    const double h = t / static_cast<double>(substeps);
    const double hnorm = gnorm / static_cast<double>(substeps);
    const double step_tol = std::max(tol * 1e-2 / static_cast<double>(substeps), 1e-17);
    const int terms = taylor_terms(hnorm, step_tol);
    const Complex coeff = Complex(0.0, -h);

    const auto& k = kernels::active();
    const std::size_t n = x.size();
    CVector term(n);
    CVector next(n);
    for (std::size_t s = 0; s < substeps; ++s) {
        term = x;
        for (int j = 1; j <= terms; ++j) {
            k.gemv(n, n, m.data().data(), term.data(), next.data());
            const Complex c = coeff / static_cast<double>(j);
            for (std::size_t i = 0; i < n; ++i) term[i] = c * next[i];
            k.axpy(n, Complex(1.0), term.data(), x.data());
        }
    }
    return x;
}

std::vector<double> shifted_singular_values(const CMatrix& m, Complex lambda) {
    require_square(m, "rank_at");
    EigenMat shifted = to_eigen(m);
    for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
    const auto& sv = svd.singularValues();
    return {sv.data(), sv.data() + sv.size()};
}

std::size_t rank_at(const CMatrix& m, Complex lambda, double tol) {
    const auto sv = shifted_singular_values(m, lambda);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double cutoff = tol * sv.front();
    return static_cast<std::size_t>(
        std::count_if(sv.begin(), sv.end(), [cutoff](double s) { return s > cutoff; }));
}

std::vector<CVector> null_space(const CMatrix& m, Complex lambda, double tol) {
    require_square(m, "null_space");
    EigenMat shifted = to_eigen(m);
    for (Eigen::Index i = 0; i < shifted.rows(); ++i) shifted(i, i) -= lambda;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() ? tol * sv(0) : 0.0;
    std::vector<CVector> basis;
    for (Eigen::Index j = 0; j < sv.size(); ++j) {
        if (sv(0) != 0.0 && sv(j) > cutoff) continue;
        CVector v(static_cast<std::size_t>(shifted.cols()));
        for (Eigen::Index i = 0; i < shifted.cols(); ++i) v[static_cast<std::size_t>(i)] = svd.matrixV()(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace liolab
