#include "glt/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>

#include "glt/csv.hpp"
#include "glt/distribution.hpp"
#include "glt/eigen.hpp"
#include "glt/generators.hpp"
#include "glt/parallel.hpp"
#include "glt/symbol.hpp"
#include "glt/version.hpp"

namespace glt {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::size_t isqrt_floor(std::size_t n) {
    auto r = (std::size_t)std::floor(std::sqrt((double)n));
    while ((r + 1) * (r + 1) <= n) ++r;
    while (r * r > n) --r;
    return r;
}

/// Shared state across the commands of one run.
struct Pipeline {
    const RunConfig& cfg;
    std::optional<FourierTable> ftab;     // input coefficient table (toeplitz / lt)
    std::optional<DenseMatrix> imported;
    std::map<std::size_t, SymbolCoeffs> extracted;  // keyed by estimation size m
    std::vector<std::string> artifacts;

    explicit Pipeline(const RunConfig& c) : cfg(c) {
        if (cfg.family == "toeplitz" || cfg.family == "lt")
            ftab = fourier_coeffs_torus(*cfg.f, cfg.fourier_order);
        if (cfg.family == "import") imported = import_matrix(cfg.matrix_file);
    }

    std::vector<std::size_t> sizes() const {
        if (cfg.family == "import") return {imported->rows()};
        return cfg.n_sizes;
    }

    std::vector<std::size_t> estimation_sizes() const {
        if (cfg.family == "import") return {imported->rows()};
        return cfg.m_sizes;
    }

    DenseMatrix build(std::size_t n) const {
        if (cfg.family == "toeplitz") return toeplitz(*ftab, n);
        if (cfg.family == "lt") return lt_matrix(*cfg.a, *ftab, n, grid(n).m);
        if (cfg.family == "fd-diffusion") return fd_diffusion_matrix(*cfg.a, n);
        return *imported;
    }

    /// True when the family is representable by real symmetric tridiagonal
    /// bands, which keeps large-n eigenvalue runs cheap.
    bool banded(std::vector<double>& d, std::vector<double>& e, std::size_t n) const {
        if (cfg.family == "fd-diffusion") {
            fd_diffusion_bands(*cfg.a, n, d, e);
            return true;
        }
        if (cfg.family == "toeplitz") {
            for (long k = 2; k <= ftab->max_index(); ++k)
                if (ftab->at(k) != cplx(0.0, 0.0) || ftab->at(-k) != cplx(0.0, 0.0)) return false;
            cplx c0 = ftab->at(0), c1 = ftab->at(1);
            if (c0.imag() != 0.0 || c1.imag() != 0.0 || ftab->at(-1) != c1) return false;
            d.assign(n, c0.real());
            e.assign(n - 1, c1.real());
            return true;
        }
        return false;
    }

    /// Eigenvalues of the family matrix at size n, sorted non-increasing.
    std::vector<double> spectrum(std::size_t n) const {
        std::vector<double> d, e;
        if (banded(d, e, n)) return tridiagonal_eigenvalues(d, e).values;
        return hermitian_eigenvalues(build(n)).values;
    }

    /// Truncated symbol extracted at estimation size m; cached at the largest
    /// valid truncation so every smaller l is a slice of the same table.
    const SymbolCoeffs* symbol_at(std::size_t m) {
        auto it = extracted.find(m);
        if (it != extracted.end()) return &it->second;
        long lmax = max_valid_l(m);
        if (lmax < 0) return nullptr;
        SymbolCoeffs c = extract_symbol(build(m), lmax, cfg.threads);
        c.family_id = cfg.family;
        return &extracted.emplace(m, std::move(c)).first->second;
    }

    long max_valid_l(std::size_t m) const {
        GridSpec g = grid(m);
        long bound = (long)std::min(g.m, g.p);
        long best = -1;
        for (std::size_t l : cfg.l_values)
            if ((long)l < bound) best = std::max(best, (long)l);
        if (best < 0 && bound > 0 && cfg.l_values.empty()) best = -1;
        return best;
    }

    bool valid_l(std::size_t l, std::size_t m) const {
        GridSpec g = grid(m);
        return l < std::min(g.m, g.p);
    }

    /// Reference symbol a(x) * g(theta); empty when not derivable.
    std::optional<BivariateFn> truth() const {
        std::optional<FunctionSpec> fa = cfg.truth_a, fg = cfg.truth_g;
        if (!fa) {
            if (cfg.family == "toeplitz")
                fa = FunctionSpec::builtin("one", Domain::UnitInterval);
            else if (cfg.family == "lt" || cfg.family == "fd-diffusion")
                fa = cfg.a;
        }
        if (!fg) {
            if (cfg.family == "fd-diffusion")
                fg = FunctionSpec::builtin("laplacian-symbol", Domain::Torus);
            else if (cfg.family == "toeplitz" || cfg.family == "lt")
                fg = cfg.f;
        }
        if (!fa || !fg) return std::nullopt;
        return product_symbol(*fa, *fg);
    }

    BivariateFn require_truth(const char* command) const {
        auto t = truth();
        if (!t)
            throw ConfigError(std::string(command) +
                              " needs a reference symbol: set truth_a and truth_f");
        return *t;
    }

    void emit(const CsvTable& t) { artifacts.push_back(t.write(cfg.out_dir)); }
};

std::vector<double> sorted_descending(std::vector<double> v) {
    std::stable_sort(v.begin(), v.end(), std::greater<double>());
    return v;
}

/// Largest-index-per-bin subsample of a sorted vector; identity when sizes match.
std::vector<double> subsample_sorted(const std::vector<double>& v, std::size_t target) {
    if (v.size() == target) return v;
    std::vector<double> out(target);
    for (std::size_t t = 0; t < target; ++t) out[t] = v[(t + 1) * v.size() / target - 1];
    return out;
}

struct GridSamples {
    std::vector<double> re;  // grid order
    std::vector<double> im;  // grid order
};

/// Symbol samples on the (j/m, 2 pi k/m) grid of comparison size n.
GridSamples sample_symbol(const SymbolCoeffs& c, std::size_t n) {
    std::size_t m = isqrt_floor(n);
    std::vector<double> xs(m), ths(m);
    for (std::size_t j = 0; j < m; ++j) {
        xs[j] = (double)j / (double)m;
        ths[j] = 2.0 * kPi * (double)j / (double)m;
    }
    std::vector<cplx> vals = eval_symbol_grid(c, xs, ths);
    GridSamples s;
    s.re.resize(vals.size());
    s.im.resize(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        s.re[i] = vals[i].real();
        s.im[i] = vals[i].imag();
    }
    return s;
}

std::vector<double> sample_truth_sorted(const BivariateFn& truth, std::size_t n) {
    std::size_t m = isqrt_floor(n);
    std::vector<double> vals;
    vals.reserve(m * m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
            vals.push_back(truth((double)j / (double)m, 2.0 * kPi * (double)k / (double)m).real());
    return sorted_descending(std::move(vals));
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double diff_norm2(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

void cmd_extract(Pipeline& pl) {
    for (std::size_t m : pl.estimation_sizes()) {
        const SymbolCoeffs* c = pl.symbol_at(m);
        if (!c) continue;
        std::vector<std::string> header = {"j"};
        for (long k = -c->l_theta; k <= c->l_theta; ++k) {
            header.push_back("re_k" + std::to_string(k));
            header.push_back("im_k" + std::to_string(k));
        }
        CsvTable t("coeffs_m" + std::to_string(m) + ".csv", header);
        for (long j = -c->l_x; j <= c->l_x; ++j) {
            std::vector<double> row = {(double)j};
            for (long k = -c->l_theta; k <= c->l_theta; ++k) {
                row.push_back(c->at(j, k).real());
                row.push_back(c->at(j, k).imag());
            }
            t.add_row(std::move(row));
        }
        pl.emit(t);
    }
}

SymbolCoeffs slice_coeffs(const SymbolCoeffs& c, long l) {
    if (l > c.l_x || l > c.l_theta) throw DomainError("slice order exceeds table");
    SymbolCoeffs s;
    s.l_x = s.l_theta = l;
    s.m_used = c.m_used;
    s.family_id = c.family_id;
    s.table.assign((std::size_t)(2 * l + 1) * (std::size_t)(2 * l + 1), 0.0);
    for (long j = -l; j <= l; ++j)
        for (long k = -l; k <= l; ++k) s.at(j, k) = c.at(j, k);
    s.hermitian_defect = c.hermitian_defect;
    return s;
}

void cmd_compare(Pipeline& pl) {
    const std::vector<std::size_t> ms = pl.estimation_sizes();
    if (ms.empty()) throw ConfigError("compare needs estimation sizes m");
    std::size_t mstar = *std::max_element(ms.begin(), ms.end());
    const SymbolCoeffs* cfull = pl.symbol_at(mstar);
    if (!cfull) throw ConfigError("no truncation order in l is valid for m=" +
                                  std::to_string(mstar));

    CsvTable summary("compare.csv", {"n", "l", "zeta_eta_norm", "gamma_norm"});
    for (std::size_t n : pl.sizes()) {
        std::vector<double> zeta = subsample_sorted(pl.spectrum(n),
                                                    isqrt_floor(n) * isqrt_floor(n));
        for (std::size_t l : pl.cfg.l_values) {
            if ((long)l > cfull->l_x) {
                summary.add_row({(double)n, (double)l, kNaN, kNaN});
                continue;
            }
            SymbolCoeffs c = slice_coeffs(*cfull, (long)l);
            GridSamples s = sample_symbol(c, n);
            std::vector<double> eta = sorted_descending(s.re);
            summary.add_row({(double)n, (double)l, diff_norm2(zeta, eta), norm2(s.im)});
        }
    }
    pl.emit(summary);

    // figure data: sorted spectrum vs sorted symbol samples vs sorted truth
    if (pl.cfg.family != "import" || pl.imported) {
        std::size_t nf = pl.cfg.family == "import" ? pl.imported->rows() : pl.cfg.figure_n;
        std::size_t lf = pl.cfg.figure_l;
        if ((long)lf <= cfull->l_x) {
            std::vector<double> zeta = subsample_sorted(pl.spectrum(nf),
                                                        isqrt_floor(nf) * isqrt_floor(nf));
            SymbolCoeffs c = slice_coeffs(*cfull, (long)lf);
            GridSamples s = sample_symbol(c, nf);
            std::vector<double> eta = sorted_descending(s.re);
            auto t = pl.truth();
            std::vector<double> tr =
                t ? sample_truth_sorted(*t, nf) : std::vector<double>(zeta.size(), kNaN);
            CsvTable fig("figure1.csv", {"zeta", "eta", "truth"});
            for (std::size_t i = 0; i < zeta.size(); ++i)
                fig.add_row({zeta[i], eta[i], tr[i]});
            pl.emit(fig);
        }
    }
}

void cmd_tables(Pipeline& pl) {
    const auto& ms = pl.estimation_sizes();
    const auto& ns = pl.sizes();
    const auto& ls = pl.cfg.l_values;
    if (ms.empty() || ns.empty() || ls.empty())
        throw ConfigError("tables needs non-empty n, m and l");

    // table 1: imaginary-part norm against m, at the smallest l and n
    std::size_t l1 = *std::min_element(ls.begin(), ls.end());
    std::size_t n1 = *std::min_element(ns.begin(), ns.end());
    CsvTable t1("table1.csv", {"m", "gamma_norm"});
    for (std::size_t m : ms) {
        double val = kNaN;
        if (pl.valid_l(l1, m)) {
            const SymbolCoeffs* c = pl.symbol_at(m);
            if (c && (long)l1 <= c->l_x) {
                GridSamples s = sample_symbol(slice_coeffs(*c, (long)l1), n1);
                val = norm2(s.im);
            }
        }
        t1.add_row({(double)m, val});
    }
    pl.emit(t1);

    // table 2: || zeta_n - eta_n ||_2, rows l, columns n; extraction at max m
    std::size_t mstar = *std::max_element(ms.begin(), ms.end());
    const SymbolCoeffs* cstar = pl.symbol_at(mstar);
    std::vector<std::string> h2 = {"l"};
    for (std::size_t n : ns) h2.push_back(std::to_string(n));
    CsvTable t2("table2.csv", h2);
    {
        std::vector<std::vector<double>> zetas(ns.size());
        parallel_for(ns.size(), pl.cfg.threads, [&](std::size_t i) {
            zetas[i] = subsample_sorted(pl.spectrum(ns[i]),
                                        isqrt_floor(ns[i]) * isqrt_floor(ns[i]));
        });
        for (std::size_t l : ls) {
            std::vector<double> row = {(double)l};
            for (std::size_t i = 0; i < ns.size(); ++i) {
                if (!cstar || (long)l > cstar->l_x) {
                    row.push_back(kNaN);
                    continue;
                }
                GridSamples s = sample_symbol(slice_coeffs(*cstar, (long)l), ns[i]);
                row.push_back(diff_norm2(zetas[i], sorted_descending(s.re)));
            }
            t2.add_row(std::move(row));
        }
    }
    pl.emit(t2);

    // table 3: || f - f_l ||_2, rows l, columns m
    BivariateFn truth = pl.require_truth("table3");
    std::vector<std::string> h3 = {"l"};
    for (std::size_t m : ms) h3.push_back(std::to_string(m));
    CsvTable t3("table3.csv", h3);
    for (std::size_t l : ls) {
        std::vector<double> row = {(double)l};
        for (std::size_t m : ms) {
            double val = kNaN;
            if (pl.valid_l(l, m)) {
                const SymbolCoeffs* c = pl.symbol_at(m);
                if (c && (long)l <= c->l_x)
                    val = symbol_l2_error(slice_coeffs(*c, (long)l), truth);
            }
            row.push_back(val);
        }
        t3.add_row(std::move(row));
    }
    pl.emit(t3);
}

void cmd_weyl(Pipeline& pl) {
    BivariateFn truth = pl.require_truth("weyl");
    std::vector<TestFunction> fs = default_test_functions();
    CsvTable t("weyl.csv", {"n", "f_index", "eig_residual", "sv_residual"});
    for (std::size_t n : pl.sizes()) {
        std::vector<double> spec = pl.spectrum(n);
        std::vector<double> sv = spec;
        for (double& v : sv) v = std::abs(v);
        std::stable_sort(sv.begin(), sv.end(), std::greater<double>());

        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            double eig_avg = 0.0, sv_avg = 0.0;
            for (double v : spec) eig_avg += fs[fi].fn(v);
            for (double v : sv) sv_avg += fs[fi].fn(v);
            eig_avg /= (double)spec.size();
            sv_avg /= (double)sv.size();

            const std::size_t G = 256;
            double ref_eig = 0.0, ref_sv = 0.0;
            for (std::size_t xi = 0; xi < G; ++xi) {
                double x = ((double)xi + 0.5) / (double)G;
                for (std::size_t ti = 0; ti < G; ++ti) {
                    double th = -kPi + 2.0 * kPi * ((double)ti + 0.5) / (double)G;
                    cplx v = truth(x, th);
                    ref_eig += fs[fi].fn(v.real());
                    ref_sv += fs[fi].fn(std::abs(v));
                }
            }
            ref_eig /= (double)(G * G);
            ref_sv /= (double)(G * G);
            t.add_row({(double)n, (double)fi, std::abs(eig_avg - ref_eig),
                       std::abs(sv_avg - ref_sv)});
        }
    }
    pl.emit(t);
}

void cmd_qcurve(Pipeline& pl) {
    CsvTable t("qcurve.csv", {"n", "r", "q_acs", "q_matrix"});
    for (std::size_t n : pl.sizes()) {
        std::vector<std::size_t> ranks = default_rank_schedule(n);

        std::vector<double> d, e;
        std::vector<double> sv_a, sv_diff;
        bool have_diff = false;
        if (pl.banded(d, e, n) && pl.cfg.a) {
            sv_a = tridiagonal_eigenvalues(d, e).values;
            for (double& v : sv_a) v = std::abs(v);
            std::stable_sort(sv_a.begin(), sv_a.end(), std::greater<double>());
            // a.c.s. reference: the locally Toeplitz approximation with the
            // same coefficient and the tridiagonal generating table
            GridSpec g = grid(n);
            std::vector<double> dd(n, 0.0), ee(n > 1 ? n - 1 : 0, 0.0);
            FourierTable* tab = pl.ftab ? &*pl.ftab : nullptr;
            double c0 = tab ? tab->at(0).real() : 2.0;
            double c1 = tab ? tab->at(1).real() : -1.0;
            for (std::size_t i = 0; i < g.m; ++i) {
                double ai = eval(*pl.cfg.a, (double)(i + 1) / (double)g.m).real();
                for (std::size_t r = 0; r < g.p; ++r) {
                    std::size_t row = i * g.p + r;
                    dd[row] = ai * c0;
                    if (r + 1 < g.p) ee[row] = ai * c1;
                }
            }
            for (std::size_t i = 0; i < n; ++i) dd[i] = d[i] - dd[i];
            for (std::size_t i = 0; i + 1 < n; ++i) ee[i] = e[i] - ee[i];
            sv_diff = tridiagonal_eigenvalues(dd, ee).values;
            for (double& v : sv_diff) v = std::abs(v);
            std::stable_sort(sv_diff.begin(), sv_diff.end(), std::greater<double>());
            have_diff = true;
        } else {
            DenseMatrix a = pl.build(n);
            sv_a = singular_values(a).values;
        }

        auto tail_q = [n](const std::vector<double>& sv, std::size_t r) {
            double s = 0.0;
            for (std::size_t i = r; i < sv.size(); ++i) s += sv[i] * sv[i];
            return std::sqrt(s / (double)n);
        };
        for (std::size_t r : ranks)
            t.add_row({(double)n, (double)r, have_diff ? tail_q(sv_diff, r) : kNaN,
                       tail_q(sv_a, r)});
    }
    pl.emit(t);
}

void cmd_counterexample(Pipeline& pl) {
    if (!pl.cfg.a) throw ConfigError("counterexample needs coefficient function a");
    FourierTable f = pl.ftab ? *pl.ftab
                             : fourier_coeffs_torus(FunctionSpec::builtin("one", Domain::Torus),
                                                    pl.cfg.fourier_order);
    CsvTable t("counterexample.csv", {"n", "gnorm_sq_lt", "gnorm_sq_lt2"});
    for (std::size_t n : pl.cfg.ce_sizes) {
        std::size_t m = isqrt_floor(n);
        t.add_row({(double)n, lt_gnorm_squared(*pl.cfg.a, f, n, m, 1),
                   lt_gnorm_squared(*pl.cfg.a, f, n, m, 2)});
    }
    pl.emit(t);
}

void write_manifest(Pipeline& pl) {
    std::filesystem::path path = std::filesystem::path(pl.cfg.out_dir) / "manifest.txt";
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << "glt_version=" << kVersion << '\n';
    for (const auto& [k, v] : pl.cfg.raw) f << "config." << k << '=' << v << '\n';
    std::vector<std::string> names;
    for (const auto& a : pl.artifacts)
        names.push_back(std::filesystem::path(a).filename().string());
    std::sort(names.begin(), names.end());
    for (const auto& nm : names) f << "artifact=" << nm << '\n';
    if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        validate_config(cfg);
        if (cfg.commands.empty()) throw ConfigError("no commands requested");
        Pipeline pl(cfg);
        for (const std::string& c : cfg.commands) {
            if (c == "extract")
                cmd_extract(pl);
            else if (c == "compare")
                cmd_compare(pl);
            else if (c == "tables")
                cmd_tables(pl);
            else if (c == "weyl")
                cmd_weyl(pl);
            else if (c == "qcurve")
                cmd_qcurve(pl);
            else if (c == "counterexample")
                cmd_counterexample(pl);
            else
                throw ConfigError("unknown command '" + c + "'");
        }
        write_manifest(pl);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return 3;
    }
}

int cli_main(int argc, const char* const* argv) {
    auto usage = [] {
        std::cerr << "usage: glt <extract|compare|tables|weyl|qcurve|counterexample>"
                     " --config <path> [--out <dir>] [--threads <k>]\n";
        return 2;
    };
    if (argc < 2) return usage();
    std::string command = argv[1];
    if (std::find(kKnownCommands.begin(), kKnownCommands.end(), command) == kKnownCommands.end())
        return usage();

    std::string config_path, out_dir;
    unsigned threads = 0;
    for (int i = 2; i < argc; ++i) {
        std::string arg = argv[i];
        auto next = [&]() -> const char* {
            if (i + 1 >= argc) return nullptr;
            return argv[++i];
        };
        if (arg == "--config") {
            const char* v = next();
            if (!v) return usage();
            config_path = v;
        } else if (arg == "--out") {
            const char* v = next();
            if (!v) return usage();
            out_dir = v;
        } else if (arg == "--threads") {
            const char* v = next();
            if (!v) return usage();
            threads = (unsigned)std::strtoul(v, nullptr, 10);
            if (threads == 0) return usage();
        } else {
            return usage();
        }
    }
    if (config_path.empty()) return usage();

    RunConfig cfg;
    try {
        cfg = load_config(config_path);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    }
    cfg.commands = {command};
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (threads) cfg.threads = threads;
    return run(cfg);
}

}  // namespace glt
