#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fixkit::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kOk = 0, kVerdictFail = 1, kUsage = 2, kDiverged = 3 };

struct RunConfig {
    std::string command;
    std::string mapping_label;
    std::size_t dim = 1;
    std::size_t points_per_axis = 201;
    std::size_t extra_random = 1000;
    std::uint64_t seed = 20240101;
    std::optional<double> k;
    std::optional<double> lambda;
    bool auto_k = false;
    double residual_tol = 1e-8;
    double step_tol = 0.0;
    double cert_tol = 1e-10;
    double k_ceiling = 0.9;
    std::string x0;
    std::size_t max_iters = 10000;
    std::string output_format;  // json | csv; empty = command default
    std::string output_path;    // empty = stdout
    std::string matrix_csv_path;
};

/// Parses and dispatches. Reports go to the configured file or `out`;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// "1" or "0.5,0.5"; throws "bad-vector-literal".
std::vector<double> parse_vector_literal(const std::string& text);

}  // namespace fixkit::cli
