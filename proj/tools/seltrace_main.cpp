// seltrace: evaluate trace-formula terms, Selberg zeta factors and
// regularized determinants for cofinite orbifold surfaces, and run the
// built-in verification suites.
//
// Exit codes: 0 success, 1 verification failure / internal mismatch,
// 2 configuration or domain error, 3 quadrature non-convergence,
// 4 scattering-model error.

#include <cmath>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seltrace/io.hpp"
#include "seltrace/scattering.hpp"
#include "seltrace/surface.hpp"
#include "seltrace/trace.hpp"
#include "seltrace/verify.hpp"
#include "seltrace/zeta_det.hpp"

namespace {

using namespace seltrace;
using nlohmann::json;

struct RunConfig {
    std::string surface_path;
    std::string spectrum_path;
    std::string scattering = "none";
    int n = 0;
    std::string s_list;
    int kmax = 64;
    std::string format = "csv";
    int jobs = 1;
    bool skip_scattering = false;
};

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw DomainError("bad grid entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw DomainError("empty s grid");
    for (double v : out)
        if (!(v > 0.0)) throw DomainError("grid points must be positive");
    return out;
}

ScatteringModel make_model(const RunConfig& cfg) {
    if (cfg.scattering == "none") return ScatteringModel::none();
    if (cfg.scattering == "modular") return ScatteringModel::modular();
    if (cfg.scattering.rfind("file:", 0) == 0)
        return load_sampled_model(cfg.scattering.substr(5));
    throw DomainError("unknown scattering selector: " + cfg.scattering);
}

LengthSpectrum make_spectrum(const RunConfig& cfg) {
    if (cfg.spectrum_path.empty()) return LengthSpectrum{};
    return load_spectrum(cfg.spectrum_path);
}

void emit(const Table& t, const RunConfig& cfg) {
    std::cout << (cfg.format == "json" ? table_to_json(t) + "\n" : table_to_csv(t));
}

// Evaluate one row per grid point, preserving input order under --jobs.
template <typename Fn>
std::vector<std::vector<double>> map_grid(const std::vector<double>& grid, int jobs,
                                          Fn&& fn) {
    std::vector<std::vector<double>> rows(grid.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = fn(grid[i]);
        return rows;
    }
    std::vector<std::future<void>> pending;
    std::size_t next = 0;
    while (next < grid.size()) {
        pending.clear();
        std::size_t batch = std::min<std::size_t>(jobs, grid.size() - next);
        for (std::size_t b = 0; b < batch; ++b) {
            std::size_t i = next + b;
            pending.push_back(std::async(std::launch::async,
                                         [i, &rows, &grid, &fn] { rows[i] = fn(grid[i]); }));
        }
        for (auto& f : pending) f.get();
        next += batch;
    }
    return rows;
}

int cmd_dims(const RunConfig& cfg) {
    SurfaceSignature sig = load_surface(cfg.surface_path);
    Table t;
    t.columns = {"n", "d_n", "d_n_residue"};
    bool mismatch = false;
    for (int n = 0; n <= cfg.n; ++n) {
        double dn = dim_holomorphic(sig, n);
        double res = std::nan("");
        if (n >= 1) {
            Rational r = dim_via_residue(sig, n);
            res = r.to_double();
            if (!r.is_integer() || double(r.num()) != dn) mismatch = true;
        }
        t.rows.push_back({double(n), dn, res});
    }
    emit(t, cfg);
    return mismatch ? 1 : 0;
}

int cmd_area(const RunConfig& cfg) {
    SurfaceSignature sig = load_surface(cfg.surface_path);
    Table t;
    t.columns = {"area", "area_over_2pi"};
    t.rows.push_back({area(sig), area_rational(sig).to_double()});
    emit(t, cfg);
    return 0;
}

int cmd_trace(const RunConfig& cfg) {
    SurfaceSignature sig = load_surface(cfg.surface_path);
    LengthSpectrum spec = make_spectrum(cfg);
    ScatteringModel model = make_model(cfg);
    std::vector<double> grid = parse_grid(cfg.s_list);
    Table t;
    t.columns = {"s",         "identity", "hyperbolic",       "elliptic",
                 "parabolic", "total",    "truncation_error", "partial"};
    t.rows = map_grid(grid, cfg.jobs, [&](double s) -> std::vector<double> {
        TraceBreakdown b =
            geometric_trace(sig, cfg.n, s, spec, model, cfg.kmax, cfg.skip_scattering);
        return {s,
                b.identity.real(),
                b.hyperbolic.real(),
                b.elliptic.real(),
                b.parabolic.real(),
                b.total.real(),
                b.truncation_error,
                b.partial ? 1.0 : 0.0};
    });
    emit(t, cfg);
    return 0;
}

int cmd_det(const RunConfig& cfg) {
    SurfaceSignature sig = load_surface(cfg.surface_path);
    LengthSpectrum spec = make_spectrum(cfg);
    ScatteringModel model = make_model(cfg);
    std::vector<double> grid = parse_grid(cfg.s_list);
    Table t;
    t.columns = {"s", "log_det"};
    t.rows = map_grid(grid, cfg.jobs, [&](double s) -> std::vector<double> {
        return {s, log_det_resolvent(sig, cfg.n, s, spec, model, cfg.kmax)};
    });
    emit(t, cfg);
    return 0;
}

int cmd_constants(const RunConfig& cfg) {
    SurfaceSignature sig = load_surface(cfg.surface_path);
    ScatteringModel model = make_model(cfg);
    if (sig.cusps() > 0 && model.kind() == ScatteringModel::Kind::None)
        throw ModelError("constants: q > 0 requires a scattering model");
    double A = a_constant(model);
    DetConstants bd = b_d_constants(sig, cfg.n);
    Table t;
    t.columns = {"n", "A", "B", "D", "C_n", "d_n"};
    t.rows.push_back({double(cfg.n), A, bd.B, bd.D, c_constant(sig, cfg.n, A),
                      double(dim_holomorphic(sig, cfg.n))});
    emit(t, cfg);
    return 0;
}

int cmd_zeta(const RunConfig& cfg) {
    LengthSpectrum spec = make_spectrum(cfg);
    std::vector<double> grid = parse_grid(cfg.s_list);
    Table t;
    t.columns = {"s", "log_z", "tail"};
    t.rows = map_grid(grid, cfg.jobs, [&](double s) -> std::vector<double> {
        ZetaTrunc z = selberg_zeta_log_trunc(spec, s, cfg.kmax);
        return {s, z.log_value.real(), z.tail_bound};
    });
    emit(t, cfg);
    return 0;
}

json report_to_json(const SuiteReport& rep) {
    json j;
    j["suite"] = rep.suite;
    j["cases"] = rep.cases();
    j["passed"] = rep.passed();
    j["failed"] = rep.failed();
    j["max_residual"] = rep.max_residual();
    json cases = json::array();
    for (const auto& c : rep.checks)
        cases.push_back({{"name", c.name},
                         {"residual", c.residual},
                         {"bound", c.bound},
                         {"passed", c.passed}});
    j["checks"] = cases;
    return j;
}

int cmd_verify(const std::string& suite) {
    std::vector<std::string> to_run;
    if (suite.empty()) {
        to_run = suite_names();
    } else if (has_suite(suite)) {
        to_run = {suite};
    } else {
        std::cerr << "unknown suite: " << suite << "\navailable:";
        for (const auto& s : suite_names()) std::cerr << " " << s;
        std::cerr << "\n";
        return 2;
    }
    json out = json::array();
    bool all_ok = true;
    for (const auto& name : to_run) {
        SuiteReport rep = run_suite(name);
        all_ok = all_ok && rep.ok();
        out.push_back(report_to_json(rep));
    }
    std::cout << (out.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-formula and determinant calculator for cofinite orbifold surfaces"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string verify_suite;

    auto add_common = [&cfg](CLI::App* sub, bool needs_surface) {
        auto* s = sub->add_option("--surface", cfg.surface_path, "surface signature JSON");
        if (needs_surface) s->required();
        sub->add_option("--spectrum", cfg.spectrum_path, "length spectrum JSON");
        sub->add_option("--scattering", cfg.scattering, "none|modular|file:PATH");
        sub->add_option("--n", cfg.n, "differential weight n");
        sub->add_option("--kmax", cfg.kmax, "k truncation for hyperbolic sums");
        sub->add_option("--format", cfg.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--jobs", cfg.jobs, "worker count for grid sweeps");
        sub->add_flag("--skip-scattering", cfg.skip_scattering,
                      "omit scattering-dependent terms (marks rows partial)");
    };

    CLI::App* dims = app.add_subcommand("dims", "dimensions of holomorphic n-differentials");
    add_common(dims, true);
    CLI::App* area_cmd = app.add_subcommand("area", "hyperbolic area");
    add_common(area_cmd, true);
    CLI::App* trace = app.add_subcommand("trace", "geometric trace breakdown on an s grid");
    add_common(trace, true);
    trace->add_option("--s", cfg.s_list, "comma-separated s grid")->required();
    CLI::App* det = app.add_subcommand("det", "log det(Delta_n + s(s+2n-1)) on an s grid");
    add_common(det, true);
    det->add_option("--s", cfg.s_list, "comma-separated s grid")->required();
    CLI::App* constants =
        app.add_subcommand("constants", "A, B, D, C_n and d_n for a signature");
    add_common(constants, true);
    CLI::App* zeta = app.add_subcommand("zeta", "truncated Selberg zeta on an s grid");
    add_common(zeta, false);
    zeta->add_option("--s", cfg.s_list, "comma-separated s grid")->required();
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", verify_suite, "suite name (default: all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed()) return cmd_dims(cfg);
        if (area_cmd->parsed()) return cmd_area(cfg);
        if (trace->parsed()) return cmd_trace(cfg);
        if (det->parsed()) return cmd_det(cfg);
        if (constants->parsed()) return cmd_constants(cfg);
        if (zeta->parsed()) return cmd_zeta(cfg);
        if (verify->parsed()) return cmd_verify(verify_suite);
    } catch (const ConvergenceError& e) {
        std::cerr << "convergence error: " << e.what() << "\n";
        return 3;
    } catch (const ModelError& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const DiagnosticError& e) {
        std::cerr << "diagnostic error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
