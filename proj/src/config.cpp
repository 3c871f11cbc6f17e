#include "glt/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace glt {

const std::vector<std::string> kKnownCommands = {"extract",  "compare",        "tables",
                                                 "weyl",     "qcurve",         "counterexample"};

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace((unsigned char)s[b])) ++b;
    while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

std::size_t parse_count(const std::string& v, std::size_t line) {
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit((unsigned char)c); }))
        throw ConfigError("invalid count '" + v + "'", line);
    errno = 0;
    unsigned long long x = std::strtoull(v.c_str(), nullptr, 10);
    if (errno != 0) throw ConfigError("count out of range '" + v + "'", line);
    return (std::size_t)x;
}

std::vector<std::size_t> parse_count_list(const std::string& v, std::size_t line) {
    std::vector<std::size_t> out;
    for (const std::string& item : split(v, ','))
        out.push_back(parse_count(item, line));
    return out;
}

FunctionSpec parse_function(const std::string& v, Domain d, std::size_t line) {
    try {
        return FunctionSpec::from_text(v, d);
    } catch (const Error& e) {
        throw ConfigError("invalid function '" + v + "': " + e.what(), line);
    }
}

}  // namespace

void validate_config(const RunConfig& cfg) {
    if (cfg.family != "toeplitz" && cfg.family != "lt" && cfg.family != "fd-diffusion" &&
        cfg.family != "import")
        throw ConfigError("unknown family '" + cfg.family + "'");
    if (cfg.family == "import" && cfg.matrix_file.empty())
        throw ConfigError("family=import requires matrix_file");
    if ((cfg.family == "lt" || cfg.family == "fd-diffusion") && !cfg.a)
        throw ConfigError("family=" + cfg.family + " requires coefficient function a");
    if ((cfg.family == "toeplitz" || cfg.family == "lt") && !cfg.f)
        throw ConfigError("family=" + cfg.family + " requires generating function f");

    for (std::size_t n : cfg.n_sizes)
        if (n < 4) throw ConfigError("all n must be >= 4 (got " + std::to_string(n) + ")");
    for (std::size_t m : cfg.m_sizes)
        if (m < 4) throw ConfigError("all m must be >= 4 (got " + std::to_string(m) + ")");

    if (!cfg.m_sizes.empty()) {
        std::size_t m_max = *std::max_element(cfg.m_sizes.begin(), cfg.m_sizes.end());
        std::size_t bound = (std::size_t)std::floor(std::sqrt((double)m_max));
        for (std::size_t l : cfg.l_values)
            if (l >= bound)
                throw ConfigError("truncation l=" + std::to_string(l) +
                                  " violates l < floor(sqrt(max m)) = " + std::to_string(bound));
    }
    for (const std::string& c : cfg.commands)
        if (std::find(kKnownCommands.begin(), kKnownCommands.end(), c) == kKnownCommands.end())
            throw ConfigError("unknown command '" + c + "'");
    if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);

    RunConfig cfg;
    bool saw_family = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = line;
        std::size_t hash = s.find_first_of("#;");
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("malformed section header", line_no);
            continue;  // sections are organizational only
        }
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value", line_no);
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line_no);
        cfg.raw.push_back({key, value});

        if (key == "family") {
            cfg.family = value;
            saw_family = true;
        } else if (key == "a") {
            cfg.a = parse_function(value, Domain::UnitInterval, line_no);
        } else if (key == "f") {
            cfg.f = parse_function(value, Domain::Torus, line_no);
        } else if (key == "truth_a") {
            cfg.truth_a = parse_function(value, Domain::UnitInterval, line_no);
        } else if (key == "truth_f") {
            cfg.truth_g = parse_function(value, Domain::Torus, line_no);
        } else if (key == "a_singular") {
            if (value != "true" && value != "false")
                throw ConfigError("a_singular must be true or false", line_no);
            if (!cfg.a) throw ConfigError("a_singular must follow the a key", line_no);
            cfg.a->set_flagged_singular(value == "true");
        } else if (key == "n") {
            cfg.n_sizes = parse_count_list(value, line_no);
        } else if (key == "m") {
            cfg.m_sizes = parse_count_list(value, line_no);
        } else if (key == "l") {
            cfg.l_values = parse_count_list(value, line_no);
        } else if (key == "ce_n") {
            cfg.ce_sizes = parse_count_list(value, line_no);
        } else if (key == "commands") {
            cfg.commands = split(value, ',');
        } else if (key == "out") {
            cfg.out_dir = value;
        } else if (key == "matrix_file") {
            cfg.matrix_file = value;
        } else if (key == "threads") {
            cfg.threads = (unsigned)parse_count(value, line_no);
        } else if (key == "fourier_k") {
            cfg.fourier_order = (long)parse_count(value, line_no);
        } else if (key == "figure_n") {
            cfg.figure_n = parse_count(value, line_no);
        } else if (key == "figure_l") {
            cfg.figure_l = parse_count(value, line_no);
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
    }
    if (!saw_family) throw ConfigError("missing required key 'family'");
    if (cfg.ce_sizes.empty()) cfg.ce_sizes = {100, 1000, 10000, 100000, 1000000};
    validate_config(cfg);
    return cfg;
}

namespace {

cplx parse_entry(const std::string& tok, std::size_t row, std::size_t col) {
    auto fail = [&](const std::string& why) -> cplx {
        throw ConfigError("malformed matrix entry '" + tok + "' at row " + std::to_string(row) +
                          ", column " + std::to_string(col) + ": " + why);
    };
    std::string s = trim(tok);
    if (s.empty()) return fail("empty");
    const char* begin = s.c_str();
    char* end = nullptr;
    errno = 0;
    double re = std::strtod(begin, &end);
    if (end == begin || errno == ERANGE) return fail("bad real part");
    if (*end == '\0') {
        if (!std::isfinite(re)) return fail("non-finite");
        return cplx(re, 0.0);
    }
    if (*end != '+' && *end != '-') return fail("expected +/- before imaginary part");
    const char* ibegin = end;
    double im = std::strtod(ibegin, &end);
    if (end == ibegin || errno == ERANGE) return fail("bad imaginary part");
    if (*end != 'i' || *(end + 1) != '\0') return fail("imaginary part must end in 'i'");
    if (!std::isfinite(re) || !std::isfinite(im)) return fail("non-finite");
    return cplx(re, im);
}

}  // namespace

DenseMatrix import_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read matrix file " + path);
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("matrix file is empty");
    std::size_t n = parse_count(trim(line), 1);
    if (n == 0) throw ConfigError("matrix order must be positive", 1);

    std::vector<cplx> entries;
    entries.reserve(n * n);
    for (std::size_t r = 1; r <= n; ++r) {
        if (!std::getline(in, line))
            throw ConfigError("matrix file ends early: expected " + std::to_string(n) +
                              " rows, got " + std::to_string(r - 1));
        std::vector<std::string> toks = split(line, ',');
        if (toks.size() != n)
            throw ConfigError("row " + std::to_string(r) + " has " + std::to_string(toks.size()) +
                              " entries, expected " + std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) entries.push_back(parse_entry(toks[c], r, c + 1));
    }
    return DenseMatrix(n, n, std::move(entries));
}

}  // namespace glt
