#include "liolab/twolevel.hpp"

#include <cmath>
#include <string>

#include "liolab/densec.hpp"

namespace liolab::twolevel {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

bool omega_vanishes(const TwoLevelParams& p) {
    return std::abs(p.omega) <= 1e-12 * (1.0 + std::abs(p.eta_plus()) + p.dissipation);
}

void require_theta(const TwoLevelParams& p, const Intermediates& in, const char* what) {
    if (std::abs(in.theta) < theta_floor(p)) {
        throw DegenerateTheta(std::string(what) + ": |Theta| = " + std::to_string(std::abs(in.theta)) +
                              " below floor; use numeric eig");
    }
}

// Largest-magnitude fallback keeps state 1, which has rho11 = 0, well defined.
void anchor_last_component(CVector& v) {
    std::size_t anchor = v.size() - 1;
    double best = 0.0;
    for (const auto& z : v) best = std::max(best, std::abs(z));
    if (std::abs(v.back()) <= 1e-12 * best) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (std::abs(v[i]) >= best * (1.0 - 1e-12)) {
                anchor = i;
                break;
            }
        }
    }
    const Complex s = v[anchor];
    for (auto& z : v) z /= s;
}

CVector coherent_state(double omega, Complex first_shift, Complex coherence) {
    // (1 + shift, -i c / (2W), i c / (2W), 1)
    const Complex off = kI * coherence / (2.0 * omega);
    return {1.0 + first_shift, -off, off, 1.0};
}

}  // namespace

void TwoLevelParams::validate() const {
    for (double v : {gamma1, gamma2, omega, dissipation}) {
        if (!std::isfinite(v)) throw std::invalid_argument("TwoLevelParams: non-finite parameter");
    }
    if (gamma1 < 0.0) throw std::invalid_argument("TwoLevelParams: gamma1 must be >= 0");
    if (gamma2 < 0.0) throw std::invalid_argument("TwoLevelParams: gamma2 must be >= 0");
    if (dissipation < 0.0) throw std::invalid_argument("TwoLevelParams: dissipation must be >= 0");
}

Complex Intermediates::lambda_of(double x) const {
    return (kI + x) * theta / 6.0 + (kI - x) * q / (2.0 * theta);
}

Intermediates intermediates(const TwoLevelParams& p) {
    Intermediates in;
    in.eta_plus = p.eta_plus();
    in.eta_minus = p.eta_minus();
    in.omega = p.omega;
    const double g = p.dissipation;
    const double w2 = p.omega * p.omega;
    in.q = in.eta_plus * in.eta_plus - 4.0 * w2;
    const Complex disc(2916.0 * g * g * w2 * w2 - 27.0 * in.q * in.q * in.q, 0.0);
    const Complex cube = 54.0 * g * w2 + std::sqrt(disc);
    in.theta = cube == Complex{} ? Complex{} : std::pow(cube, 1.0 / 3.0);
    return in;
}

double theta_floor(const TwoLevelParams& p) {
    return 1e-6 * (1.0 + std::abs(p.eta_plus()) + std::abs(p.omega) + p.dissipation);
}

CMatrix hamiltonian(const TwoLevelParams& p) {
    return CMatrix{{Complex(0.0, -0.5 * p.gamma1), 0.5 * p.omega},
                   {0.5 * p.omega, Complex(0.0, 0.5 * p.gamma2)}};
}

CMatrix sigma_minus() { return CMatrix{{0.0, 1.0}, {0.0, 0.0}}; }

OpenSystem open_system(const TwoLevelParams& p) {
    p.validate();
    OpenSystem sys{hamiltonian(p), {}};
    if (p.dissipation > 0.0) sys.channels.push_back(Channel{p.dissipation, sigma_minus()});
    return sys;
}

Liouvillian liouvillian(const TwoLevelParams& p) { return build_liouvillian(open_system(p)); }

std::array<Complex, 4> analytic_eigenvalues(const TwoLevelParams& p) {
    p.validate();
    const Intermediates in = intermediates(p);
    require_theta(p, in, "analytic_eigenvalues");
    const double em = in.eta_minus;
    return {kI * em / 2.0, kI * (em - 2.0 * kI * in.lambda_of(0.0)) / 2.0,
            kI * (em + kI * in.lambda_of(kSqrt3)) / 2.0,
            kI * (em + kI * in.lambda_of(-kSqrt3)) / 2.0};
}

std::array<CVector, 4> analytic_eigenstates(const TwoLevelParams& p) {
    p.validate();
    const Intermediates in = intermediates(p);
    require_theta(p, in, "analytic_eigenstates");
    if (omega_vanishes(p)) throw OmegaZero("analytic_eigenstates: states 2-4 divide by omega");

    const double ep = in.eta_plus;
    const double w2 = p.omega * p.omega;
    const Complex th = in.theta;

    std::array<CVector, 4> out;
    out[0] = {0.0, 1.0, 1.0, 0.0};

    const Complex a = ep + 2.0 * kI * in.lambda_of(0.0);
    out[1] = coherent_state(p.omega, -a * (3.0 * ep * ep + th * th - 12.0 * w2) / (6.0 * w2 * th), a);

    for (int k = 0; k < 2; ++k) {
        const Complex lam = in.lambda_of(k == 0 ? kSqrt3 : -kSqrt3);
        const Complex b = ep - kI * lam;
        out[2 + k] = coherent_state(p.omega, b * (-kI * lam) / (2.0 * w2), b);
    }
    for (auto& v : out) anchor_last_component(v);
    return out;
}

CoherencePrediction coherence_relation(Complex rho00, Complex rho11, Complex lambda,
                                       const TwoLevelParams& p, double tol) {
    const Complex denom = 2.0 * lambda - kI * p.eta_minus();
    if (std::abs(denom) <= tol * (1.0 + std::abs(lambda) + std::abs(p.eta_minus()))) {
        throw TrivialBranch("coherence_relation: 2 lambda = i eta_minus");
    }
    const Complex rho10 = p.omega * (rho00 - rho11) / denom;
    return {-rho10, rho10};
}

SteadyS1 steady_s1(double gamma1, double gamma2) {
    if (gamma1 < 0.0 || gamma2 < 0.0) throw std::invalid_argument("steady_s1: rates must be >= 0");
    const bool exact = std::abs(gamma1 - gamma2) <= 1e-12 * (1.0 + gamma1 + gamma2);
    return {0.5 * (gamma1 + gamma2), {0.5, 0.0, 0.0, 0.5}, exact};
}

SteadyS2 steady_s2(double gamma1, double dissipation) {
    if (gamma1 < 0.0 || dissipation < 0.0) {
        throw std::invalid_argument("steady_s2: rates must be >= 0");
    }
    const double total = gamma1 + dissipation;
    if (!(total > 0.0)) throw std::invalid_argument("steady_s2: gamma1 + dissipation must be > 0");
    return {dissipation, {dissipation / total, 0.0, 0.0, gamma1 / total}};
}

IncoherentNlep nlep_incoherent(double gamma1, double gamma2) {
    IncoherentNlep out;
    out.dissipation = gamma1 + gamma2;
    out.lambda_nominal = Complex(0.0, -2.0 * gamma1);
    const TwoLevelParams p{gamma1, gamma2, 0.0, out.dissipation};
    out.lambda_closed_form = kI * p.eta_minus() / 2.0;

    const Liouvillian l = liouvillian(p);
    const auto values = eigenvalues(l.matrix);
    Complex mean{};
    for (const auto& v : values) mean += v;
    mean /= static_cast<double>(values.size());
    out.lambda_derived = mean;
    for (const auto& v : values) out.spectrum_spread = std::max(out.spectrum_spread, std::abs(v - mean));

    const double radius = 1e-6 * (1.0 + std::abs(mean));
    for (const auto& v : values)
        if (std::abs(v - mean) <= radius) ++out.algebraic;
    out.geometric = l.matrix.rows() - rank_at(l.matrix, mean);
    out.state = {1.0, 0.0, 0.0, 0.0};
    out.nominal_value_confirmed = std::abs(out.lambda_nominal - mean) <= radius;
    return out;
}

Gamma0Eps ep_locus_gamma0(double gamma1, double omega) {
    return {2.0 * omega - gamma1, -2.0 * omega - gamma1};
}

CoherentLocus nlep_coherent_locus(double omega, double dissipation) {
    if (!(dissipation > 0.0)) throw std::invalid_argument("nlep_coherent_locus: requires dissipation > 0");
    if (omega == 0.0) throw std::invalid_argument("nlep_coherent_locus: requires omega != 0");
    const double w2 = omega * omega;
    const double root =
        std::sqrt(3.0 * std::cbrt(4.0 * dissipation * dissipation * w2 * w2) + 4.0 * w2);
    return {root, -root};
}

CoherentNlep nlep_coherent_pair(const TwoLevelParams& p, double rel_tol) {
    p.validate();
    const CoherentLocus locus = nlep_coherent_locus(p.omega, p.dissipation);
    const double ep = p.eta_plus();
    const double miss = std::min(std::abs(ep - locus.eta_plus_pos), std::abs(ep - locus.eta_plus_neg));
    if (miss > rel_tol * (1.0 + std::abs(ep))) {
        throw OffLocus("nlep_coherent_pair: eta_plus misses the locus by " + std::to_string(miss));
    }
    const double w2 = p.omega * p.omega;
    const double c = std::cbrt(2.0 * p.dissipation * w2);
    CoherentNlep out;
    out.lambda = kI * (p.eta_minus() - c) / 2.0;
    out.state = coherent_state(p.omega, (ep + c) * c / (2.0 * w2), ep + c);
    return out;
}

}  // namespace liolab::twolevel
