#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liolab/cmatrix.hpp"
#include "liolab/spectra.hpp"
#include "liolab/twolevel.hpp"

namespace liolab::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2 };

struct Config {
    twolevel::TwoLevelParams params{1.0, 1.0, 0.0, 0.0};
    spectra::Tolerances tol;
    std::string format = "csv";
    std::string out_path;  // empty = stdout

    void validate() const;
};

/// Reads the JSON config schema {"params": {...}, "tolerances": {...}, "output": {...}}.
Config load_config(const std::string& path);
Config parse_config(std::string_view json_text);

/// "a", "a+bi", "-bi", "i" ...
Complex parse_complex(std::string_view text);
/// Comma-separated list of complex literals.
CVector parse_complex_list(std::string_view text);

/// Runs the command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liolab::cli
