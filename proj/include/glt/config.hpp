#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glt/dense_matrix.hpp"
#include "glt/function_spec.hpp"

namespace glt {

/// One batch run: which matrix family to assemble, its functions, the size /
/// estimation / truncation grids, and which artifacts to produce.
struct RunConfig {
    std::string family;  // toeplitz | lt | fd-diffusion | import
    std::optional<FunctionSpec> a;        // coefficient a(x)
    std::optional<FunctionSpec> f;        // generating function f(theta)
    std::optional<FunctionSpec> truth_a;  // optional reference symbol a(x)*g(theta)
    std::optional<FunctionSpec> truth_g;

    std::vector<std::size_t> n_sizes;     // comparison sizes
    std::vector<std::size_t> m_sizes;     // coefficient estimation sizes
    std::vector<std::size_t> l_values;    // truncation orders
    std::vector<std::size_t> ce_sizes;    // counterexample growth schedule

    std::vector<std::string> commands;    // subset of the known command names
    std::string out_dir = "out";
    std::string matrix_file;
    unsigned threads = 1;
    long fourier_order = 16;              // K for assembling Toeplitz/LT input tables
    std::size_t figure_n = 2500;          // grid for figure1.csv
    std::size_t figure_l = 7;

    std::vector<std::pair<std::string, std::string>> raw;  // as parsed, for the manifest
};

extern const std::vector<std::string> kKnownCommands;

/// Parses and validates a key=value config file (optional [section] headers,
/// '#' or ';' comments). Throws ConfigError with a line number on missing
/// keys, invalid values and constraint violations; IoError when unreadable.
RunConfig load_config(const std::string& path);

/// Validates a config assembled in code; same rules as load_config.
void validate_config(const RunConfig& cfg);

/// Reads a dense complex matrix: first line the order n, then n rows of n
/// comma-separated entries, each "re" or "re+imi" / "re-imi".
/// Malformed entries are reported with their row and column.
DenseMatrix import_matrix(const std::string& path);

}  // namespace glt
