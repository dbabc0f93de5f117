#pragma once

// Closed forms for the driven two-level system with loss gamma1 on |0>,
// gain gamma2 on |1>, coupling omega and decay |1> -> |0> at rate
// `dissipation`:
//
//   H = 1/2 [[-i gamma1, omega], [omega, i gamma2]],  channel (dissipation, sigma_-).
//
// Row-stacked states are ordered (rho00, rho01, rho10, rho11).

#include <array>
#include <stdexcept>

#include "liolab/cmatrix.hpp"
#include "liolab/vectorize.hpp"

namespace liolab::twolevel {

struct TwoLevelParams {
    double gamma1 = 1.0;       // loss
    double gamma2 = 1.0;       // gain
    double omega = 0.0;        // coupling
    double dissipation = 0.0;  // decay rate Gamma

    double eta_plus() const noexcept { return gamma1 + gamma2 - dissipation; }
    double eta_minus() const noexcept { return -gamma1 + gamma2 - dissipation; }

    /// Throws std::invalid_argument for negative rates or non-finite values.
    void validate() const;

    friend bool operator==(const TwoLevelParams&, const TwoLevelParams&) = default;
};

/// Thrown when |Theta| falls below its floor; numeric eig is exact there.
class DegenerateTheta : public NumericError {
public:
    using NumericError::NumericError;
};

/// The closed-form eigenstates 2..4 divide by omega.
class OmegaZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// 2 lambda = i eta_minus: the coherence relation is 0/0 on this branch.
class TrivialBranch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters are not on the coherent degeneracy locus.
class OffLocus : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Intermediates {
    double eta_plus = 0.0;
    double eta_minus = 0.0;
    double omega = 0.0;
    /// eta_plus^2 - 4 omega^2
    double q = 0.0;
    /// Principal cube root of 54 G W^2 + sqrt(2916 G^2 W^4 - 27 q^3), principal sqrt.
    Complex theta;

    /// (i + x) Theta / 6 + (i - x) q / (2 Theta); x in {0, +-sqrt(3)}.
    Complex lambda_of(double x) const;
};

Intermediates intermediates(const TwoLevelParams& p);

/// |Theta| below this is treated as degenerate.
double theta_floor(const TwoLevelParams& p);

CMatrix hamiltonian(const TwoLevelParams& p);
CMatrix sigma_minus();
OpenSystem open_system(const TwoLevelParams& p);
Liouvillian liouvillian(const TwoLevelParams& p);

/// {i eta_-/2, i[eta_- - 2i Lambda(0)]/2, i[eta_- + i Lambda(sqrt3)]/2, i[eta_- + i Lambda(-sqrt3)]/2}.
/// Branch choice permutes the last three, so compare as multisets.
std::array<Complex, 4> analytic_eigenvalues(const TwoLevelParams& p);

/// Eigenstates matching analytic_eigenvalues() index-wise, last component 1
/// (largest component 1 when the last one vanishes, as for state 1).
std::array<CVector, 4> analytic_eigenstates(const TwoLevelParams& p);

struct CoherencePrediction {
    Complex rho01;
    Complex rho10;
};

/// Off-diagonal elements implied by rows 2 and 3 of the eigen-equation:
/// rho10 = omega (rho00 - rho11) / (2 lambda - i eta_-), rho01 = -rho10.
CoherencePrediction coherence_relation(Complex rho00, Complex rho11, Complex lambda,
                                       const TwoLevelParams& p, double tol = 1e-12);

struct SteadyS1 {
    double dissipation;
    CVector state;
    /// The state is a zero mode only when gamma1 == gamma2 (then Gamma = gamma1 = gamma2).
    /// Otherwise det L = (g1 - g2)(3 g1 - g2)(4 W^2 + 3 g1^2 - g1 g2) / 32 at this Gamma.
    bool exact = false;
};
/// Gamma = (gamma1 + gamma2)/2 with the incoherent state (1/2, 0, 0, 1/2).
SteadyS1 steady_s1(double gamma1, double gamma2);

struct SteadyS2 {
    double gamma2;
    CVector state;
};
/// At omega = 0, gamma2 = Gamma makes (G/(g1+G), 0, 0, g1/(g1+G)) a zero mode.
SteadyS2 steady_s2(double gamma1, double dissipation);

struct IncoherentNlep {
    double dissipation = 0.0;       // gamma1 + gamma2
    Complex lambda_nominal;         // -2 i gamma1, as printed
    Complex lambda_closed_form;     // i eta_-/2 = -i gamma1
    Complex lambda_derived;         // mean of the numeric spectrum
    double spectrum_spread = 0.0;   // max |lambda_k - lambda_derived|
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
    CVector state;                  // (1, 0, 0, 0)
    bool nominal_value_confirmed = false;
};
/// Omega = 0, Gamma = gamma1 + gamma2: every eigenvalue coincides.
IncoherentNlep nlep_incoherent(double gamma1, double gamma2);

struct Gamma0Eps {
    double gamma2_plus;   //  2 omega - gamma1
    double gamma2_minus;  // -2 omega - gamma1
};
Gamma0Eps ep_locus_gamma0(double gamma1, double omega);

struct CoherentLocus {
    double eta_plus_pos;
    double eta_plus_neg;
};
/// eta_+ = +-sqrt(3 (4 G^2 W^4)^{1/3} + 4 W^2). Requires Gamma > 0, omega != 0.
CoherentLocus nlep_coherent_locus(double omega, double dissipation);

/// gamma2 such that gamma1 + gamma2 - Gamma = eta_plus.
inline double gamma2_for_eta_plus(double gamma1, double dissipation, double eta_plus) {
    return eta_plus - gamma1 + dissipation;
}

struct CoherentNlep {
    Complex lambda;  // i [eta_- - (2 G W^2)^{1/3}] / 2
    CVector state;   // last component 1
};
/// Throws OffLocus when |eta_+| misses the locus by more than rel_tol (relative).
CoherentNlep nlep_coherent_pair(const TwoLevelParams& p, double rel_tol = 1e-8);

}  // namespace liolab::twolevel
