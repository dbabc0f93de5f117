#include "liolab/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liolab/densec.hpp"
#include "liolab/dynamics.hpp"
#include "liolab/sweep.hpp"

namespace liolab::cli {

namespace {

using json = nlohmann::json;
using sweep::format_double;

double parse_real(std::string_view s, std::string_view context) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw std::invalid_argument("cannot parse '" + std::string(context) + "' as a complex number");
    }
    return v;
}

std::string fmt_complex(Complex z) {
    return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") + format_double(z.imag()) + "i";
}

// Flag values that override the config file only when given.
struct ParamFlags {
    std::optional<double> gamma1, gamma2, omega, dissipation;
    std::string config;
    bool normalized = false;

    void add_to(CLI::App& app) {
        app.add_option("--gamma1", gamma1, "loss rate");
        app.add_option("--gamma2", gamma2, "gain rate");
        app.add_option("--omega", omega, "coupling");
        app.add_option("--dissipation", dissipation, "decay rate |1> -> |0>");
        app.add_option("--config", config, "JSON config file")->check(CLI::ExistingFile);
        app.add_flag("--normalized", normalized, "express all rates in units of gamma1");
    }

    Config resolve() const {
        Config cfg = config.empty() ? Config{} : load_config(config);
        if (gamma1) cfg.params.gamma1 = *gamma1;
        if (gamma2) cfg.params.gamma2 = *gamma2;
        if (omega) cfg.params.omega = *omega;
        if (dissipation) cfg.params.dissipation = *dissipation;
        if (normalized) {
            const double unit = cfg.params.gamma1;
            if (!(unit > 0.0)) throw std::invalid_argument("--normalized requires gamma1 > 0");
            cfg.params = {1.0, cfg.params.gamma2 / unit, cfg.params.omega / unit, cfg.params.dissipation / unit};
        }
        cfg.validate();
        return cfg;
    }
};

struct OutputFlags {
    std::optional<std::string> format;
    std::optional<std::string> out;

    void add_to(CLI::App& app) {
        app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        app.add_option("--out", out, "output path (stdout when omitted)");
    }
    void apply(Config& cfg) const {
        if (format) cfg.format = *format;
        if (out) cfg.out_path = *out;
    }
};

void print_header(std::ostream& out, const Config& cfg) {
    const auto& p = cfg.params;
    const auto& t = cfg.tol;
    out << "# liouvillian-lab " << sweep::kArtifactVersion << " (" << kLiouvillianConvention << ")\n";
    out << "# params gamma1=" << format_double(p.gamma1) << " gamma2=" << format_double(p.gamma2)
        << " omega=" << format_double(p.omega) << " dissipation=" << format_double(p.dissipation) << '\n';
    out << "# tolerances eig=" << format_double(t.eig) << " steady=" << format_double(t.steady)
        << " arc=" << format_double(t.arc) << " ep_cluster=" << format_double(t.ep_cluster)
        << " rank=" << format_double(t.rank) << " phase=" << format_double(t.phase) << '\n';
}

struct AnalyticCheck {
    bool fallback = false;
    double deviation = 0.0;
};

AnalyticCheck analytic_check(const twolevel::TwoLevelParams& p, const spectra::SpectralReport& rep) {
    AnalyticCheck out;
    std::array<Complex, 4> analytic{};
    try {
        analytic = twolevel::analytic_eigenvalues(p);
    } catch (const twolevel::DegenerateTheta&) {
        out.fallback = true;
        return out;
    }
    std::vector<std::vector<double>> cost(4, std::vector<double>(4));
    double scale = 1.0;
    for (const auto& ep : rep.eigenpairs) scale = std::max(scale, 1.0 + std::abs(ep.value));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) cost[i][j] = std::abs(analytic[i] - rep.eigenpairs[j].value);
    const auto match = spectra::min_cost_assignment(cost);
    for (std::size_t i = 0; i < 4; ++i) out.deviation = std::max(out.deviation, cost[i][match[i]] / scale);
    return out;
}

json cluster_json(const spectra::EpCluster& c) {
    return {{"mean", {c.mean.real(), c.mean.imag()}},
            {"algebraic", c.algebraic},
            {"geometric", c.geometric},
            {"exceptional", c.exceptional()}};
}

int cmd_spectrum(const Config& cfg, bool analytic, std::ostream& out) {
    const auto& p = cfg.params;
    const auto rep = spectra::analyze_two_level(p, cfg.tol);
    const spectra::PhaseTolerances ptol{cfg.tol.arc, cfg.tol.phase};
    std::optional<AnalyticCheck> check;
    if (analytic) check = analytic_check(p, rep);

    auto contains = [](const std::vector<std::size_t>& v, std::size_t i) {
        return std::find(v.begin(), v.end(), i) != v.end();
    };

    if (cfg.format == "json") {
        json doc;
        doc["metadata"] = {{"artifact", "liouvillian-lab"},
                           {"version", sweep::kArtifactVersion},
                           {"convention", kLiouvillianConvention},
                           {"params",
                            {{"gamma1", p.gamma1}, {"gamma2", p.gamma2}, {"omega", p.omega},
                             {"dissipation", p.dissipation}}},
                           {"tolerances",
                            {{"eig", cfg.tol.eig}, {"steady", cfg.tol.steady}, {"arc", cfg.tol.arc},
                             {"ep_cluster", cfg.tol.ep_cluster}, {"rank", cfg.tol.rank},
                             {"phase", cfg.tol.phase}}}};
        json pairs = json::array();
        for (std::size_t i = 0; i < rep.eigenpairs.size(); ++i) {
            const auto& ep = rep.eigenpairs[i];
            json state = json::array();
            for (const auto& z : ep.state) state.push_back({z.real(), z.imag()});
            pairs.push_back({{"value", {ep.value.real(), ep.value.imag()}},
                             {"state", state},
                             {"steady", contains(rep.steady_indices, i)},
                             {"arc", contains(rep.arc_indices, i)},
                             {"trivial", rep.trivial_index == i},
                             {"phase", spectra::to_string(spectra::phase_check(ep.state, ep.value, p, ptol))}});
        }
        doc["eigenpairs"] = pairs;
        doc["verdict"] = spectra::to_string(rep.verdict);
        doc["steady_indices"] = rep.steady_indices;
        json clusters = json::array();
        for (const auto& c : rep.ep_clusters) clusters.push_back(cluster_json(c));
        doc["ep_clusters"] = clusters;
        doc["residual_bound"] = rep.residual_bound;
        if (check) {
            doc["analytic"] = check->fallback ? json{{"fallback", "numeric"}}
                                              : json{{"max_deviation", check->deviation}};
        }
        out << doc.dump(1) << '\n';
        return kOk;
    }

    print_header(out, cfg);
    out << "eigenpairs:\n";
    for (std::size_t i = 0; i < rep.eigenpairs.size(); ++i) {
        const auto& ep = rep.eigenpairs[i];
        out << "  [" << i << "] lambda=" << fmt_complex(ep.value) << " state=(";
        for (std::size_t k = 0; k < ep.state.size(); ++k) out << (k ? ", " : "") << fmt_complex(ep.state[k]);
        out << ")";
        if (contains(rep.steady_indices, i)) out << " steady";
        if (contains(rep.arc_indices, i)) out << " arc";
        if (rep.trivial_index == i) out << " trivial";
        out << " phase=" << spectra::to_string(spectra::phase_check(ep.state, ep.value, p, ptol)) << '\n';
    }
    out << "verdict: " << spectra::to_string(rep.verdict) << '\n';
    out << "ep_clusters:";
    if (rep.ep_clusters.empty()) out << " none";
    out << '\n';
    for (const auto& c : rep.ep_clusters) {
        out << "  mean=" << fmt_complex(c.mean) << " algebraic=" << c.algebraic << " geometric=" << c.geometric
            << (c.exceptional() ? " EP" : " semisimple") << '\n';
    }
    out << "residual_bound: " << format_double(rep.residual_bound) << '\n';
    if (check) {
        if (check->fallback) {
            out << "analytic: Theta below degeneracy floor, numeric fallback used\n";
        } else {
            out << "analytic: max multiset deviation " << format_double(check->deviation) << '\n';
        }
    }
    return kOk;
}

struct Preset {
    std::string_view name;
    double omega;
    double dissipation;
    double from;
    double to;
};

constexpr Preset kSweepPresets[] = {
    {"fig2a", 2.0, 1.0, 0.0, 3.0}, {"fig2c", 0.0, 2.0, 0.0, 4.0}, {"fig3", 2.0, 0.0, 0.0, 6.0},
    {"fig4ab", 2.0, 2.0, 0.0, 8.0}, {"fig4ef", 2.0, 2.0, 0.0, 8.0},
};

std::optional<sweep::OutputFlags> parse_outputs(const std::string& text) {
    sweep::OutputFlags f{false, false, false, false};
    if (text == "none") return f;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "eigenvalues") f.eigenvalues = true;
        else if (item == "eigenstates") f.eigenstates = true;
        else if (item == "arcs") f.arcs = true;
        else if (item == "eps") f.eps = true;
        else return std::nullopt;
    }
    return f;
}

template <typename Fn>
void with_output(const Config& cfg, std::ostream& out, Fn&& fn) {
    if (cfg.out_path.empty()) {
        fn(out);
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + cfg.out_path + "' for writing");
    fn(file);
    file.flush();
    if (!file) throw std::runtime_error("write to '" + cfg.out_path + "' failed");
}

struct EvolvePreset {
    std::string_view name;
    twolevel::TwoLevelParams params;
    CVector initial;
    std::string_view note;
};

const std::vector<EvolvePreset>& evolve_presets() {
    static const std::vector<EvolvePreset> presets{
        {"fig2b", {1.0, 1.0, 2.0, 1.0}, {0.25, 0.0, 0.0, 0.75}, ""},
        {"fig2d", {1.0, 2.0, 0.0, 2.0}, {0.25, 0.0, 0.0, 0.75},
         "gamma2 = 2 gamma1 is assumed (the steady point of the Omega = 0, Gamma = 2 gamma1 spectrum)"},
        {"fig4cd", {1.0, 1.298, 2.0, 2.0}, {0.5, 0.5, 0.5, 0.5}, ""},
        {"zero", {0.0, 0.0, 0.0, 0.0}, {0.25, 0.0, 0.0, 0.75}, ""},
    };
    return presets;
}

void print_clusters(std::ostream& out, const twolevel::TwoLevelParams& p, const spectra::Tolerances& tol) {
    const auto l = twolevel::liouvillian(p);
    const auto values = eigenvalues(l.matrix, tol.eig);
    const auto clusters = spectra::detect_ep(l.matrix, values, tol.ep_cluster, tol.rank);
    if (clusters.empty()) out << "    numeric: no coalescing eigenvalues\n";
    for (const auto& c : clusters) {
        out << "    numeric: cluster at " << fmt_complex(c.mean) << " algebraic=" << c.algebraic
            << " geometric=" << c.geometric << (c.exceptional() ? " EP" : " semisimple") << '\n';
    }
}

int cmd_find_eps(const Config& cfg, std::ostream& out) {
    const auto& p = cfg.params;
    print_header(out, cfg);
    if (p.omega == 0.0) {
        const auto n = twolevel::nlep_incoherent(p.gamma1, p.gamma2);
        out << "incoherent NLEP (omega = 0): dissipation = gamma1 + gamma2 = " << format_double(n.dissipation) << '\n';
        out << "  lambda_nominal = " << fmt_complex(n.lambda_nominal) << " (printed value -2i gamma1)\n";
        out << "  lambda_derived = " << fmt_complex(n.lambda_derived) << " (numeric eig, spread "
            << format_double(n.spectrum_spread) << ")\n";
        out << "  lambda_closed  = " << fmt_complex(n.lambda_closed_form) << " (i eta_-/2)\n";
        out << "  algebraic=" << n.algebraic << " geometric=" << n.geometric << '\n';
        out << "  nominal value " << (n.nominal_value_confirmed ? "confirmed" : "NOT confirmed by the numeric spectrum")
            << '\n';
        return kOk;
    }
    if (p.dissipation == 0.0) {
        const auto loci = twolevel::ep_locus_gamma0(p.gamma1, p.omega);
        out << "gamma0 EPs: gamma2 in {" << format_double(loci.gamma2_plus) << ", "
            << format_double(loci.gamma2_minus) << "}\n";
        for (double g2 : {loci.gamma2_plus, loci.gamma2_minus}) {
            out << "  gamma2=" << format_double(g2);
            if (g2 < 0.0) {
                out << ": negative gain, not a valid parameter set\n";
                continue;
            }
            out << '\n';
            print_clusters(out, {p.gamma1, g2, p.omega, 0.0}, cfg.tol);
        }
        return kOk;
    }
    const auto locus = twolevel::nlep_coherent_locus(p.omega, p.dissipation);
    out << "coherent NLEP locus: eta_plus in {" << format_double(locus.eta_plus_pos) << ", "
        << format_double(locus.eta_plus_neg) << "}\n";
    for (double ep : {locus.eta_plus_pos, locus.eta_plus_neg}) {
        const double g2 = twolevel::gamma2_for_eta_plus(p.gamma1, p.dissipation, ep);
        out << "  gamma2=" << format_double(g2);
        if (g2 < 0.0) {
            out << ": negative gain, not a valid parameter set\n";
            continue;
        }
        const twolevel::TwoLevelParams at{p.gamma1, g2, p.omega, p.dissipation};
        const auto pair = twolevel::nlep_coherent_pair(at);
        out << " lambda=" << fmt_complex(pair.lambda) << '\n';
        print_clusters(out, at, cfg.tol);
    }
    return kOk;
}

}  // namespace

void Config::validate() const {
    params.validate();
    for (double t : {tol.eig, tol.steady, tol.arc, tol.ep_cluster, tol.rank, tol.phase}) {
        if (!(t > 0.0)) throw std::invalid_argument("Config: tolerances must be positive");
    }
    if (format != "csv" && format != "json") throw std::invalid_argument("Config: format must be csv or json");
}

Config parse_config(std::string_view json_text) {
    const json doc = json::parse(json_text);
    Config cfg;
    if (doc.contains("params")) {
        const json& p = doc["params"];
        cfg.params.gamma1 = p.value("gamma1", cfg.params.gamma1);
        cfg.params.gamma2 = p.value("gamma2", cfg.params.gamma2);
        cfg.params.omega = p.value("omega", cfg.params.omega);
        cfg.params.dissipation = p.value("dissipation", cfg.params.dissipation);
    }
    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        cfg.tol.eig = t.value("eig", cfg.tol.eig);
        cfg.tol.steady = t.value("steady", cfg.tol.steady);
        cfg.tol.phase = t.value("phase", cfg.tol.phase);
        cfg.tol.arc = t.value("arc", cfg.tol.arc);
        cfg.tol.ep_cluster = t.value("ep_cluster", cfg.tol.ep_cluster);
        cfg.tol.rank = t.value("rank", cfg.tol.rank);
    }
    if (doc.contains("output")) {
        const json& o = doc["output"];
        cfg.format = o.value("format", cfg.format);
        cfg.out_path = o.value("path", cfg.out_path);
    }
    cfg.validate();
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config(ss.str());
    } catch (const json::exception& e) {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
}

Complex parse_complex(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};

    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view im) {
        if (im.empty() || im == "+") return 1.0;
        if (im == "-") return -1.0;
        if (im.front() == '+') im.remove_prefix(1);
        return parse_real(im, text);
    };
    if (split == std::string::npos) return {0.0, imag_part(body)};
    return {parse_real(std::string_view(body).substr(0, split), text),
            imag_part(std::string_view(body).substr(split))};
}

CVector parse_complex_list(std::string_view text) {
    CVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        out.push_back(parse_complex(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-Hermitian Liouvillian spectra, exceptional points and dynamics", "liouvillian-lab"};
    app.require_subcommand(1);

    auto* spectrum = app.add_subcommand("spectrum", "eigenpairs, steady verdict, EP clusters, phase verdicts");
    ParamFlags spectrum_params;
    OutputFlags spectrum_out;
    bool analytic = false;
    spectrum_params.add_to(*spectrum);
    spectrum_out.add_to(*spectrum);
    spectrum->add_flag("--analytic", analytic, "cross-check against the closed-form eigenvalues");

    auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter sweep to CSV/JSON");
    ParamFlags sweep_params;
    OutputFlags sweep_out;
    std::optional<std::string> figure, param, outputs;
    std::optional<double> from, to;
    std::optional<std::size_t> steps;
    std::size_t threads = 0;
    sweep_params.add_to(*sweep_cmd);
    sweep_out.add_to(*sweep_cmd);
    sweep_cmd->add_option("--figure", figure, "preset: fig2a, fig2c, fig3, fig4ab, fig4ef");
    sweep_cmd->add_option("--param", param, "varied parameter: gamma1, gamma2, omega, dissipation");
    sweep_cmd->add_option("--from", from);
    sweep_cmd->add_option("--to", to);
    sweep_cmd->add_option("--steps", steps, "grid points (>= 2)");
    sweep_cmd->add_option("--outputs", outputs, "comma list of eigenvalues,eigenstates,arcs,eps or 'none'");
    sweep_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");

    auto* evolve = app.add_subcommand("evolve", "time evolution observables as CSV");
    ParamFlags evolve_params;
    OutputFlags evolve_out;
    std::optional<std::string> evolve_figure, initial;
    double t_max = 10.0;
    std::size_t evolve_steps = 1000;
    std::string normalize = "trace";
    evolve_params.add_to(*evolve);
    evolve_out.add_to(*evolve);
    evolve->add_option("--figure", evolve_figure, "preset: fig2b, fig2d, fig4cd, zero");
    evolve->add_option("--initial", initial, "four complex values rho00,rho01,rho10,rho11");
    evolve->add_option("--t-max", t_max);
    evolve->add_option("--steps", evolve_steps);
    evolve->add_option("--normalize", normalize)->check(CLI::IsMember({"raw", "trace"}));

    auto* find_eps = app.add_subcommand("find-eps", "closed-form EP loci with numeric confirmation");
    ParamFlags eps_params;
    eps_params.add_to(*find_eps);

    std::vector<std::string> argv_store{"liouvillian-lab"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (spectrum->parsed()) {
            Config cfg = spectrum_params.resolve();
            spectrum_out.apply(cfg);
            cfg.validate();
            int rc = kOk;
            with_output(cfg, out, [&](std::ostream& o) { rc = cmd_spectrum(cfg, analytic, o); });
            return rc;
        }
        if (sweep_cmd->parsed()) {
            Config cfg = sweep_params.resolve();
            sweep_out.apply(cfg);
            cfg.validate();
            sweep::SweepSpec spec;
            spec.fixed = cfg.params;
            spec.tol = cfg.tol;
            spec.threads = threads;
            spec.steps = 200;
            if (figure) {
                const auto* it = std::find_if(std::begin(kSweepPresets), std::end(kSweepPresets),
                                              [&](const Preset& p) { return p.name == *figure; });
                if (it == std::end(kSweepPresets)) throw std::invalid_argument("unknown preset '" + *figure + "'");
                spec.varied = sweep::Param::Gamma2;
                spec.fixed = {1.0, 1.0, it->omega, it->dissipation};
                spec.from = it->from;
                spec.to = it->to;
            } else if (!param || !from || !to) {
                throw std::invalid_argument("sweep needs --figure or --param/--from/--to");
            }
            if (param) {
                const auto p = sweep::parse_param(*param);
                if (!p) throw std::invalid_argument("unknown parameter '" + *param + "'");
                spec.varied = *p;
            }
            if (from) spec.from = *from;
            if (to) spec.to = *to;
            if (steps) spec.steps = *steps;
            if (outputs) {
                const auto f = parse_outputs(*outputs);
                if (!f) throw std::invalid_argument("bad --outputs '" + *outputs + "'");
                spec.outputs = *f;
            }
            const auto result = sweep::run_sweep(spec);
            const auto format = cfg.format == "json" ? sweep::Format::Json : sweep::Format::Csv;
            with_output(cfg, out, [&](std::ostream& o) { sweep::emit(result, format, o); });
            return kOk;
        }
        if (evolve->parsed()) {
            Config cfg = evolve_params.resolve();
            evolve_out.apply(cfg);
            CVector rho0{0.25, 0.0, 0.0, 0.75};
            if (evolve_figure) {
                const auto& presets = evolve_presets();
                const auto it = std::find_if(presets.begin(), presets.end(),
                                             [&](const EvolvePreset& p) { return p.name == *evolve_figure; });
                if (it == presets.end()) throw std::invalid_argument("unknown preset '" + *evolve_figure + "'");
                cfg.params = it->params;
                rho0 = it->initial;
                if (!it->note.empty()) err << "note: " << it->note << '\n';
            }
            if (initial) {
                rho0 = parse_complex_list(*initial);
                if (rho0.size() != 4) throw std::invalid_argument("--initial needs exactly 4 complex values");
            }
            cfg.validate();
            const auto grid = dynamics::uniform_grid(t_max, evolve_steps);
            const auto traj = dynamics::evolve(twolevel::liouvillian(cfg.params), rho0, grid);
            const auto rows = dynamics::observables(
                traj, normalize == "raw" ? dynamics::Normalization::Raw : dynamics::Normalization::Trace);
            with_output(cfg, out, [&](std::ostream& o) {
                o << "t,rho00,rho11,re_rho10,im_rho10,re_trace,im_trace\n";
                for (const auto& r : rows) {
                    o << format_double(r.t) << ',' << format_double(r.rho00) << ',' << format_double(r.rho11) << ','
                      << format_double(r.re_rho10) << ',' << format_double(r.im_rho10) << ','
                      << format_double(r.re_trace) << ',' << format_double(r.im_trace) << '\n';
                }
            });
            return kOk;
        }
        if (find_eps->parsed()) {
            const Config cfg = eps_params.resolve();
            return cmd_find_eps(cfg, out);
        }
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace liolab::cli
