#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "liolab/cli.hpp"
#include "liolab/sweep.hpp"
#include "test_support.hpp"

using namespace liolab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::vector<double> cells(const std::string& line) {
    std::vector<double> out;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) out.push_back(std::stod(c));
    return out;
}

}  // namespace

TEST_CASE("parse_complex forms") {
    CHECK(cli::parse_complex("0.25") == Complex(0.25, 0));
    CHECK(cli::parse_complex("1+2i") == Complex(1, 2));
    CHECK(cli::parse_complex("1-2i") == Complex(1, -2));
    CHECK(cli::parse_complex("-0.5i") == Complex(0, -0.5));
    CHECK(cli::parse_complex("i") == Complex(0, 1));
    CHECK(cli::parse_complex("-i") == Complex(0, -1));
    CHECK(cli::parse_complex(" 1e-3+1e+2i ") == Complex(1e-3, 1e2));
    CHECK(cli::parse_complex("2-j") == Complex(2, -1));
    CHECK_THROWS_AS(cli::parse_complex(""), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_complex("abc"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_complex("1+2"), std::invalid_argument);
    CHECK(cli::parse_complex_list("0.5,0.5i,-0.5i,0.5").size() == 4);
    CHECK_THROWS_AS(cli::parse_complex_list("0.5,,0.5"), std::invalid_argument);
}

TEST_CASE("config parsing") {
    const auto cfg = cli::parse_config(R"({"params": {"gamma2": 3, "omega": 2},
                                           "tolerances": {"eig": 1e-11},
                                           "output": {"format": "json"}})");
    CHECK(cfg.params.gamma1 == 1.0);
    CHECK(cfg.params.gamma2 == 3.0);
    CHECK(cfg.params.omega == 2.0);
    CHECK(cfg.tol.eig == 1e-11);
    CHECK(cfg.format == "json");
    CHECK_THROWS_AS(cli::parse_config(R"({"tolerances": {"eig": -1}})"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_config(R"({"params": {"gamma1": -1}})"), std::invalid_argument);
    CHECK_THROWS(cli::parse_config("{not json"));
}

TEST_CASE("spectrum: first steady family") {
    const auto o = call({"spectrum", "--gamma1", "1", "--gamma2", "1", "--omega", "2", "--dissipation", "1", "--analytic"});
    CHECK(o.code == 0);
    CHECK(o.out.find("verdict: HasSteadyState") != std::string::npos);
    CHECK(o.out.find("max multiset deviation") != std::string::npos);
    CHECK(o.out.find("-1.98431348") != std::string::npos);
    CHECK(o.out.find("tolerances eig=1e-10") != std::string::npos);
}

TEST_CASE("spectrum: Gamma = 0 exceptional point and degenerate Theta fallback") {
    const auto o = call({"spectrum", "--gamma1", "1", "--gamma2", "3", "--omega", "2", "--dissipation", "0", "--analytic"});
    CHECK(o.code == 0);
    CHECK(o.out.find(" EP\n") != std::string::npos);
    CHECK(o.out.find("numeric fallback") != std::string::npos);
}

TEST_CASE("spectrum: trivial system") {
    const auto o = call({"spectrum", "--gamma1", "0", "--gamma2", "0", "--omega", "0", "--dissipation", "0", "--format", "json"});
    REQUIRE(o.code == 0);
    const auto doc = nlohmann::json::parse(o.out);
    REQUIRE(doc["eigenpairs"].size() == 4);
    for (const auto& p : doc["eigenpairs"]) {
        CHECK(p["value"][0].get<double>() == 0.0);
        CHECK(p["value"][1].get<double>() == 0.0);
    }
    CHECK(doc["metadata"]["version"] == std::string(sweep::kArtifactVersion));
}

TEST_CASE("spectrum: normalized units") {
    const auto a = call({"spectrum", "--gamma1", "2", "--gamma2", "2", "--omega", "4", "--dissipation", "2", "--normalized"});
    const auto b = call({"spectrum", "--gamma1", "1", "--gamma2", "1", "--omega", "2", "--dissipation", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"spectrum", "--bogus"}).code == cli::kUsage);
    CHECK(call({"spectrum", "--gamma1", "-1"}).code == cli::kUsage);
    CHECK(call({"spectrum", "--gamma1", "abc"}).code == cli::kUsage);
    CHECK(call({"sweep", "--figure", "fig9"}).code == cli::kUsage);
    CHECK(call({"sweep", "--param", "gamma2", "--from", "1", "--to", "0"}).code == cli::kUsage);
    CHECK(call({"evolve", "--initial", "1,2,x,4"}).code == cli::kUsage);
    CHECK(call({"evolve", "--initial", "1,2,3"}).code == cli::kUsage);
    CHECK(call({"--help"}).code == cli::kOk);
    CHECK(call({"spectrum", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("sweep: presets and minimal grid") {
    const auto o = call({"sweep", "--param", "gamma2", "--from", "0", "--to", "1", "--steps", "2", "--omega", "2"});
    REQUIRE(o.code == 0);
    const auto ls = lines(o.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].rfind("param,re_l1", 0) == 0);

    const auto fig3 = call({"sweep", "--figure", "fig3"});
    REQUIRE(fig3.code == 0);
    CHECK(lines(fig3.out).size() == 201);
    CHECK(cells(lines(fig3.out).back())[0] == 6.0);

    const auto none = call({"sweep", "--figure", "fig3", "--outputs", "none"});
    CHECK(none.out == "param\n");
    CHECK(call({"sweep", "--figure", "fig3", "--outputs", "bogus"}).code == cli::kUsage);

    const auto path = std::filesystem::temp_directory_path() / "liolab_cli_fig4.json";
    const auto fig4 = call({"sweep", "--figure", "fig4ab", "--format", "json", "--out", path.string(), "--steps", "20"});
    REQUIRE(fig4.code == 0);
    CHECK(fig4.out.empty());
    std::ifstream in(path);
    const auto doc = nlohmann::json::parse(in);
    CHECK(doc["metadata"]["fixed"]["omega"] == 2.0);
    CHECK(doc["metadata"]["fixed"]["dissipation"] == 2.0);
    CHECK(doc["rows"].size() == 20);
    std::filesystem::remove(path);

    CHECK(call({"sweep", "--figure", "fig3", "--out", "/nonexistent-dir/x.csv"}).code == cli::kUsage);
}

TEST_CASE("sweep output is byte-identical across runs and thread counts") {
    const auto a = call({"sweep", "--figure", "fig2a", "--threads", "1"});
    const auto b = call({"sweep", "--figure", "fig2a", "--threads", "3"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("evolve: first steady family converges") {
    const auto o = call({"evolve", "--gamma1", "1", "--gamma2", "1", "--omega", "2", "--dissipation", "1", "--initial",
                         "0.25,0,0,0.75", "--t-max", "10", "--steps", "1000"});
    REQUIRE(o.code == 0);
    const auto ls = lines(o.out);
    REQUIRE(ls.size() == 1002);
    CHECK(ls[0] == "t,rho00,rho11,re_rho10,im_rho10,re_trace,im_trace");
    const auto last = cells(ls.back());
    CHECK(last[0] == 10.0);
    CHECK(last[1] == doctest::Approx(0.5).epsilon(1e-4));
    CHECK(last[2] == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_CASE("evolve: balanced gain point, presets and raw mode") {
    const auto o = call({"evolve", "--gamma1", "1", "--gamma2", "1.298", "--omega", "2", "--dissipation", "2", "--initial",
                         "0.5,0.5,0.5,0.5", "--t-max", "200", "--steps", "400"});
    REQUIRE(o.code == 0);
    CHECK(std::abs(cells(lines(o.out).back())[3]) < 1e-4);

    const auto zero = call({"evolve", "--figure", "zero", "--t-max", "3", "--steps", "3"});
    REQUIRE(zero.code == 0);
    const auto ls = lines(zero.out);
    for (std::size_t i = 2; i < ls.size(); ++i) {
        auto a = cells(ls[1]), b = cells(ls[i]);
        for (std::size_t k = 1; k < a.size(); ++k) CHECK(a[k] == b[k]);
    }

    const auto fig2d = call({"evolve", "--figure", "fig2d", "--t-max", "30", "--steps", "300"});
    REQUIRE(fig2d.code == 0);
    CHECK(fig2d.err.find("gamma2 = 2 gamma1") != std::string::npos);
    CHECK(cells(lines(fig2d.out).back())[1] == doctest::Approx(2.0 / 3.0).epsilon(1e-4));

    const auto raw = call({"evolve", "--figure", "fig2b", "--normalize", "raw", "--t-max", "1", "--steps", "2"});
    REQUIRE(raw.code == 0);
    CHECK(cells(lines(raw.out)[1])[1] == 0.25);
}

TEST_CASE("find-eps reports") {
    const auto g0 = call({"find-eps", "--gamma1", "1", "--omega", "2", "--dissipation", "0"});
    REQUIRE(g0.code == 0);
    CHECK(g0.out.find("gamma2 in {3, -5}") != std::string::npos);
    CHECK(g0.out.find("negative gain") != std::string::npos);

    const auto coh = call({"find-eps", "--gamma1", "1", "--omega", "2", "--dissipation", "2"});
    REQUIRE(coh.code == 0);
    CHECK(coh.out.find("gamma2=6.9202") != std::string::npos);
    CHECK(coh.out.find("lambda=0+0.70018") != std::string::npos);
    CHECK(coh.out.find("algebraic=2 geometric=1 EP") != std::string::npos);

    const auto inc = call({"find-eps", "--gamma1", "1", "--gamma2", "1", "--omega", "0"});
    REQUIRE(inc.code == 0);
    CHECK(inc.out.find("= 2\n") != std::string::npos);
    CHECK(inc.out.find("lambda_nominal = 0-2i") != std::string::npos);
    CHECK(inc.out.find("lambda_derived = 0-1i") != std::string::npos);
    CHECK(inc.out.find("geometric=3") != std::string::npos);
}

TEST_CASE("config file with flag overrides") {
    const auto path = std::filesystem::temp_directory_path() / "liolab_cli_config.json";
    {
        std::ofstream f(path);
        f << R"({"params": {"gamma1": 1, "gamma2": 5, "omega": 2, "dissipation": 1}})";
    }
    const auto a = call({"spectrum", "--config", path.string(), "--gamma2", "1"});
    const auto b = call({"spectrum", "--gamma1", "1", "--gamma2", "1", "--omega", "2", "--dissipation", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::filesystem::remove(path);
    CHECK(call({"spectrum", "--config", "/nonexistent.json"}).code == cli::kUsage);
}
