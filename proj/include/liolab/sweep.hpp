#pragma once

// One-parameter sweeps of the two-level model: continuity-sorted spectra,
// gauge-fixed coherences, arc and EP annotations, plus CSV/JSON emission.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liolab/spectra.hpp"
#include "liolab/twolevel.hpp"

namespace liolab::sweep {

inline constexpr std::string_view kArtifactVersion = "0.1.0";
inline constexpr std::string_view kThreadsEnv = "LIOUVILLIAN_LAB_THREADS";

enum class Param { Gamma1, Gamma2, Omega, Dissipation };
std::string_view to_string(Param p);
/// Accepts gamma1, gamma2, omega, dissipation.
std::optional<Param> parse_param(std::string_view name);

struct OutputFlags {
    bool eigenvalues = true;
    bool eigenstates = true;
    bool arcs = true;
    bool eps = true;

    bool any() const noexcept { return eigenvalues || eigenstates || arcs || eps; }
    friend bool operator==(const OutputFlags&, const OutputFlags&) = default;
};

struct SweepSpec {
    Param varied = Param::Gamma2;
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 2;
    twolevel::TwoLevelParams fixed;
    OutputFlags outputs;
    spectra::Tolerances tol;
    /// 0 = hardware concurrency; always capped by LIOUVILLIAN_LAB_THREADS.
    std::size_t threads = 0;

    void validate() const;
    twolevel::TwoLevelParams at(std::size_t row) const;
    double value_at(std::size_t row) const;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

inline constexpr std::size_t kBranches = 4;

struct SweepRow {
    double param = 0.0;
    /// Branch 0 is the trivial i eta_-/2 branch; 1..3 are continuity sorted.
    std::array<Complex, kBranches> eigenvalues{};
    /// Gauge-fixed states per branch (rho00, rho01, rho10, rho11).
    std::array<CVector, kBranches> states{};
    /// '1' where the branch is on an arc, one character per branch.
    std::string arc_flags;
    bool ep_flag = false;
    /// Branch matching margin below 10x the eigensolver tolerance.
    bool warning = false;
    /// Non-empty when the numeric analysis failed for this row.
    std::string error;

    Complex rho10(std::size_t branch) const { return states[branch].empty() ? Complex{} : states[branch][2]; }
    friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows;

    spectra::BranchTable branch_table() const;

    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

SweepResult run_sweep(const SweepSpec& spec);

/// Worker count after applying the environment cap; never below 1.
std::size_t resolve_threads(std::size_t requested);

/// Arc segments along the sweep; branch 0 is flagged trivial.
std::vector<spectra::ArcSegment> fermi_arc_scan(const SweepResult& result, double tol = 1e-9);

struct Bracket {
    double lo;
    double hi;
};

/// gamma2 at which the largest Im lambda crosses zero, by bisection to
/// |Im lambda| <= 1e-10. Throws std::invalid_argument without a sign change.
double find_steady_gamma2(double gamma1, double omega, double dissipation, Bracket bracket);

enum class Format { Csv, Json };

std::vector<std::string> csv_columns(const OutputFlags& outputs);
void emit(const SweepResult& result, Format format, std::ostream& out);
/// Writes to a file; errors name the destination.
void emit(const SweepResult& result, Format format, const std::string& path);

std::string to_json(const SweepResult& result);
SweepResult from_json(std::string_view text);

/// Shortest round-trip decimal form; "nan"/"inf"/"-inf" for non-finite values.
std::string format_double(double v);

}  // namespace liolab::sweep
