#include "liolab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "liolab/densec.hpp"

namespace liolab::sweep {

namespace {

using json = nlohmann::json;

struct RowAnalysis {
    std::string error;
    Complex trivial_value;
    CVector trivial_state;
    std::vector<Complex> others;
    std::vector<CVector> other_states;
    bool ep = false;
};

RowAnalysis analyze_row(const twolevel::TwoLevelParams& p, const spectra::Tolerances& tol) {
    RowAnalysis out;
    try {
        const auto rep = spectra::analyze_two_level(p, tol);
        if (!rep.trivial_index) throw NumericError("trivial branch not found");
        for (std::size_t i = 0; i < rep.eigenpairs.size(); ++i) {
            const auto& ep = rep.eigenpairs[i];
            if (i == *rep.trivial_index) {
                out.trivial_value = ep.value;
                out.trivial_state = ep.state;
            } else {
                out.others.push_back(ep.value);
                out.other_states.push_back(ep.state);
            }
        }
        out.ep = rep.has_ep();
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

bool on_arc(Complex v, double tol) { return std::abs(v.real()) <= tol * (1.0 + std::abs(v)); }

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

double json_double(const json& j) {
    return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

Complex json_complex(const json& j) { return {json_double(j.at(0)), json_double(j.at(1))}; }

}  // namespace

std::string_view to_string(Param p) {
    switch (p) {
        case Param::Gamma1: return "gamma1";
        case Param::Gamma2: return "gamma2";
        case Param::Omega: return "omega";
        case Param::Dissipation: return "dissipation";
    }
    return "?";
}

std::optional<Param> parse_param(std::string_view name) {
    for (Param p : {Param::Gamma1, Param::Gamma2, Param::Omega, Param::Dissipation})
        if (to_string(p) == name) return p;
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (!std::isfinite(from) || !std::isfinite(to) || !(from < to)) {
        throw std::invalid_argument("SweepSpec: need finite from < to");
    }
    if (steps < 2) throw std::invalid_argument("SweepSpec: steps must be >= 2");
    at(0).validate();
    at(steps - 1).validate();
}

double SweepSpec::value_at(std::size_t row) const {
    if (row + 1 == steps) return to;
    return from + (to - from) * static_cast<double>(row) / static_cast<double>(steps - 1);
}

twolevel::TwoLevelParams SweepSpec::at(std::size_t row) const {
    twolevel::TwoLevelParams p = fixed;
    const double v = value_at(row);
    switch (varied) {
        case Param::Gamma1: p.gamma1 = v; break;
        case Param::Gamma2: p.gamma2 = v; break;
        case Param::Omega: p.omega = v; break;
        case Param::Dissipation: p.dissipation = v; break;
    }
    return p;
}

std::size_t resolve_threads(std::size_t requested) {
    std::size_t n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv(std::string(kThreadsEnv).c_str())) {
        std::size_t cap = 0;
        const std::string_view s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), cap);
        if (res.ec == std::errc{} && cap > 0) n = std::min(n, cap);
    }
    return std::max<std::size_t>(n, 1);
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<RowAnalysis> work(spec.steps);

    const std::size_t workers = std::min(resolve_threads(spec.threads), spec.steps);
    if (workers <= 1) {
        for (std::size_t i = 0; i < spec.steps; ++i) work[i] = analyze_row(spec.at(i), spec.tol);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < spec.steps; i = next++) {
                    work[i] = analyze_row(spec.at(i), spec.tol);
                }
            });
        }
    }

    // Continuity sorting runs over rows that produced a spectrum.
    std::vector<std::size_t> valid;
    std::vector<std::vector<Complex>> others;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i].error.empty()) {
            valid.push_back(i);
            others.push_back(work[i].others);
        }
    }
    const spectra::BranchTable table = spectra::continuity_sort(others, spec.tol.eig);

    SweepResult result;
    result.spec = spec;
    result.rows.resize(spec.steps);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < spec.steps; ++i) {
        SweepRow& row = result.rows[i];
        row.param = spec.value_at(i);
        row.error = work[i].error;
        if (!row.error.empty()) {
            row.eigenvalues.fill(Complex(nan, nan));
            row.arc_flags = std::string(kBranches, '0');
        }
    }
    for (std::size_t k = 0; k < valid.size(); ++k) {
        const std::size_t i = valid[k];
        SweepRow& row = result.rows[i];
        const RowAnalysis& a = work[i];
        row.eigenvalues[0] = a.trivial_value;
        row.states[0] = a.trivial_state;
        for (std::size_t b = 0; b + 1 < kBranches; ++b) {
            const std::size_t src = table.permutation[k][b];
            row.eigenvalues[b + 1] = a.others[src];
            row.states[b + 1] = a.other_states[src];
        }
        row.arc_flags.clear();
        for (const auto& v : row.eigenvalues) row.arc_flags.push_back(on_arc(v, spec.tol.arc) ? '1' : '0');
        row.ep_flag = a.ep;
    }
    for (std::size_t k : table.warnings) result.rows[valid[k]].warning = true;
    return result;
}

spectra::BranchTable SweepResult::branch_table() const {
    spectra::BranchTable t;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.params.push_back(rows[i].param);
        t.rows.emplace_back(rows[i].eigenvalues.begin(), rows[i].eigenvalues.end());
        if (rows[i].warning) t.warnings.push_back(i);
    }
    return t;
}

std::vector<spectra::ArcSegment> fermi_arc_scan(const SweepResult& result, double tol) {
    return spectra::fermi_arc_scan(result.branch_table(), tol, std::size_t{0});
}

double find_steady_gamma2(double gamma1, double omega, double dissipation, Bracket bracket) {
    auto top = [&](double g2) {
        const auto values = eigenvalues(twolevel::liouvillian({gamma1, g2, omega, dissipation}).matrix);
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& v : values) m = std::max(m, v.imag());
        return m;
    };
    double lo = bracket.lo;
    double hi = bracket.hi;
    if (!(lo < hi)) throw std::invalid_argument("find_steady_gamma2: empty bracket");
    double flo = top(lo);
    const double fhi = top(hi);
    if (std::abs(flo) <= 1e-10) return lo;
    if (std::abs(fhi) <= 1e-10) return hi;
    if ((flo < 0.0) == (fhi < 0.0)) {
        throw std::invalid_argument("find_steady_gamma2: no sign change of max Im(lambda) over [" +
                                    format_double(lo) + ", " + format_double(hi) + "]");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = top(mid);
        if (std::abs(fm) <= 1e-10 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw NumericError("find_steady_gamma2: bisection did not converge");
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> csv_columns(const OutputFlags& outputs) {
    std::vector<std::string> cols{"param"};
    if (!outputs.any()) return cols;
    if (outputs.eigenvalues) {
        for (std::size_t b = 1; b <= kBranches; ++b) {
            cols.push_back("re_l" + std::to_string(b));
            cols.push_back("im_l" + std::to_string(b));
        }
    }
    if (outputs.eigenstates) {
        for (std::size_t b = 2; b <= kBranches; ++b) {
            cols.push_back("re_rho10_b" + std::to_string(b));
            cols.push_back("im_rho10_b" + std::to_string(b));
        }
    }
    if (outputs.arcs) cols.emplace_back("arc_flags");
    if (outputs.eps) cols.emplace_back("ep_flag");
    return cols;
}

void emit(const SweepResult& result, Format format, std::ostream& out) {
    if (format == Format::Json) {
        out << to_json(result) << '\n';
        return;
    }
    const OutputFlags& f = result.spec.outputs;
    const auto cols = csv_columns(f);
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
    out << '\n';
    if (!f.any()) return;
    for (const auto& row : result.rows) {
        out << format_double(row.param);
        if (f.eigenvalues) {
            for (const auto& v : row.eigenvalues)
                out << ',' << format_double(v.real()) << ',' << format_double(v.imag());
        }
        if (f.eigenstates) {
            for (std::size_t b = 1; b < kBranches; ++b) {
                const Complex z = row.error.empty() ? row.rho10(b)
                                                    : Complex(std::numeric_limits<double>::quiet_NaN(),
                                                              std::numeric_limits<double>::quiet_NaN());
                out << ',' << format_double(z.real()) << ',' << format_double(z.imag());
            }
        }
        if (f.arcs) out << ',' << row.arc_flags;
        if (f.eps) out << ',' << (row.ep_flag ? 1 : 0);
        out << '\n';
    }
}

void emit(const SweepResult& result, Format format, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("emit: cannot open '" + path + "' for writing");
    emit(result, format, file);
    file.flush();
    if (!file) throw std::runtime_error("emit: write to '" + path + "' failed");
}

std::string to_json(const SweepResult& result) {
    const SweepSpec& s = result.spec;
    json meta;
    meta["artifact"] = "liouvillian-lab";
    meta["version"] = kArtifactVersion;
    meta["convention"] = kLiouvillianConvention;
    meta["varied"] = to_string(s.varied);
    meta["from"] = s.from;
    meta["to"] = s.to;
    meta["steps"] = s.steps;
    meta["fixed"] = {{"gamma1", s.fixed.gamma1},
                     {"gamma2", s.fixed.gamma2},
                     {"omega", s.fixed.omega},
                     {"dissipation", s.fixed.dissipation}};
    meta["tolerances"] = {{"eig", s.tol.eig},         {"steady", s.tol.steady},
                          {"arc", s.tol.arc},         {"ep_cluster", s.tol.ep_cluster},
                          {"rank", s.tol.rank},       {"phase", s.tol.phase}};
    meta["outputs"] = {{"eigenvalues", s.outputs.eigenvalues},
                       {"eigenstates", s.outputs.eigenstates},
                       {"arcs", s.outputs.arcs},
                       {"eps", s.outputs.eps}};
    meta["columns"] = csv_columns(s.outputs);

    json rows = json::array();
    for (const auto& r : result.rows) {
        json row;
        row["param"] = r.param;
        json ev = json::array();
        for (const auto& v : r.eigenvalues) ev.push_back(complex_json(v));
        row["eigenvalues"] = ev;
        json states = json::array();
        for (const auto& st : r.states) {
            json v = json::array();
            for (const auto& z : st) v.push_back(complex_json(z));
            states.push_back(v);
        }
        row["states"] = states;
        json rho10 = json::array();
        for (std::size_t b = 1; b < kBranches; ++b) rho10.push_back(complex_json(r.rho10(b)));
        row["rho10"] = rho10;
        row["arc_flags"] = r.arc_flags;
        row["ep_flag"] = r.ep_flag;
        row["warning"] = r.warning;
        row["error"] = r.error;
        rows.push_back(std::move(row));
    }
    json doc;
    doc["metadata"] = std::move(meta);
    doc["rows"] = std::move(rows);
    return doc.dump(1);
}

SweepResult from_json(std::string_view text) {
    const json doc = json::parse(text);
    const json& meta = doc.at("metadata");
    SweepResult result;
    SweepSpec& s = result.spec;
    const auto varied = parse_param(meta.at("varied").get<std::string>());
    if (!varied) throw std::invalid_argument("from_json: unknown varied parameter");
    s.varied = *varied;
    s.from = meta.at("from").get<double>();
    s.to = meta.at("to").get<double>();
    s.steps = meta.at("steps").get<std::size_t>();
    const json& fx = meta.at("fixed");
    s.fixed = {fx.at("gamma1").get<double>(), fx.at("gamma2").get<double>(), fx.at("omega").get<double>(),
               fx.at("dissipation").get<double>()};
    const json& tl = meta.at("tolerances");
    s.tol.eig = tl.at("eig").get<double>();
    s.tol.steady = tl.at("steady").get<double>();
    s.tol.arc = tl.at("arc").get<double>();
    s.tol.ep_cluster = tl.at("ep_cluster").get<double>();
    s.tol.rank = tl.at("rank").get<double>();
    s.tol.phase = tl.at("phase").get<double>();
    const json& of = meta.at("outputs");
    s.outputs = {of.at("eigenvalues").get<bool>(), of.at("eigenstates").get<bool>(), of.at("arcs").get<bool>(),
                 of.at("eps").get<bool>()};

    for (const json& r : doc.at("rows")) {
        SweepRow row;
        row.param = json_double(r.at("param"));
        const json& ev = r.at("eigenvalues");
        for (std::size_t b = 0; b < kBranches; ++b) row.eigenvalues[b] = json_complex(ev.at(b));
        const json& st = r.at("states");
        for (std::size_t b = 0; b < kBranches; ++b)
            for (const json& z : st.at(b)) row.states[b].push_back(json_complex(z));
        row.arc_flags = r.at("arc_flags").get<std::string>();
        row.ep_flag = r.at("ep_flag").get<bool>();
        row.warning = r.at("warning").get<bool>();
        row.error = r.at("error").get<std::string>();
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace liolab::sweep
