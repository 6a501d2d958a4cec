#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radstein/comb.hpp"
#include "radstein/traces.hpp"
#include "radstein/two_runs.hpp"
#include "radstein/verify.hpp"

using nlohmann::json;
using namespace radstein;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string engine_mode = "exact";
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    int cap = ExpectationEngine::kDefaultCap;
    std::string out;
    std::string csv_dir;
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--engine", o.engine_mode, "exact | mc")
        ->check(CLI::IsMember({"exact", "mc"}));
    cmd->add_option("--samples", o.samples, "Monte Carlo sample count");
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--cap", o.cap, "exact-enumeration dimension cap");
    cmd->add_option("--out", o.out, "report path (default: stdout)");
    cmd->add_option("--csv-dir", o.csv_dir, "directory for curve CSVs");
    cmd->add_option("--config", o.config_path, "JSON config file; overrides flags");
}

json load_config(CommonOpts& o) {
    json cfg = json::object();
    if (o.config_path.empty()) return cfg;
    std::ifstream is(o.config_path);
    if (!is) throw std::runtime_error("cannot open config file: " + o.config_path);
    is >> cfg;
    if (cfg.contains("engine")) o.engine_mode = cfg["engine"].get<std::string>();
    if (cfg.contains("samples")) o.samples = cfg["samples"].get<std::uint64_t>();
    if (cfg.contains("seed")) o.seed = cfg["seed"].get<std::uint64_t>();
    if (cfg.contains("cap")) o.cap = cfg["cap"].get<int>();
    if (cfg.contains("out")) o.out = cfg["out"].get<std::string>();
    if (cfg.contains("csv_dir")) o.csv_dir = cfg["csv_dir"].get<std::string>();
    return cfg;
}

ExpectationEngine make_engine(const CommonOpts& o) {
    if (o.engine_mode == "mc") return ExpectationEngine::monte_carlo(o.samples, o.seed);
    ExpectationEngine e = ExpectationEngine::exact(o.cap);
    return e;
}

json engine_json(const CommonOpts& o) {
    return json{{"mode", o.engine_mode},
                {"samples", o.engine_mode == "mc" ? o.samples : 0},
                {"seed", o.engine_mode == "mc" ? o.seed : 0},
                {"cap", o.cap},
                {"rng", CounterRng::name()}};
}

json report_json(const BoundReport& r) { return json::parse(bound_report_to_json(r)); }

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_curves(const std::string& dir, const std::vector<Curve>& curves) {
    if (dir.empty() || curves.empty()) return;
    std::filesystem::create_directories(dir);
    for (const auto& c : curves) {
        std::ofstream os(dir + "/" + c.name + ".csv", std::ios::binary);
        emit_curve_csv(os, c);
    }
}

int emit(const CommonOpts& o, const std::string& command, json config, json results,
         std::chrono::steady_clock::time_point t0) {
    config["command"] = command;
    config["engine"] = o.engine_mode;
    config["samples"] = o.samples;
    config["seed"] = o.seed;
    config["cap"] = o.cap;
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    json doc{{"config", config},
             {"results", results},
             {"engine", engine_json(o)},
             {"timing", {{"seconds", secs}}},
             {"version", kVersion}};
    const std::string text = doc.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(o.out, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write report: " + o.out);
        os << text;
    }
    return 0;
}

template <typename T>
void cfg_get(const json& cfg, const char* key, T& into) {
    if (cfg.contains(key)) into = cfg[key].get<T>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stein-method bounds and chaos experiments for Rademacher functionals"};
    app.require_subcommand(1);

    // verify-identities
    CommonOpts vo;
    int v_cases = 50, v_max_n = 10;
    double v_tol = 1e-10;
    auto* vcmd = app.add_subcommand("verify-identities", "randomized algebraic identity suite");
    add_common(vcmd, vo);
    vcmd->add_option("--cases", v_cases, "number of random cases");
    vcmd->add_option("--max-n", v_max_n, "largest dimension");
    vcmd->add_option("--tol", v_tol, "pass tolerance");

    // bound
    CommonOpts bo;
    std::string b_type = "first-chaos", b_kernel, b_kernel2, b_expansion;
    std::vector<double> b_weights;
    double b_sigma2 = 1.0;
    auto* bcmd = app.add_subcommand("bound", "evaluate a Kolmogorov bound");
    add_common(bcmd, bo);
    bcmd->add_option("--type", b_type, "first-chaos | chaos-q | sum12 | malliavin-stein")
        ->check(CLI::IsMember({"first-chaos", "chaos-q", "sum12", "malliavin-stein"}));
    bcmd->add_option("--weights", b_weights, "first-chaos weights")->delimiter(',');
    bcmd->add_option("--kernel", b_kernel, "kernel JSON path (chaos-q, sum12 order 1)");
    bcmd->add_option("--kernel2", b_kernel2, "order-2 kernel JSON path (sum12)");
    bcmd->add_option("--sigma2", b_sigma2, "target variance (chaos-q)");
    bcmd->add_option("--expansion", b_expansion, "chaos expansion JSON path (malliavin-stein)");

    // simulate
    CommonOpts so;
    std::string s_expansion;
    std::vector<double> s_weights;
    auto* scmd = app.add_subcommand("simulate", "moments and Kolmogorov distance of a functional");
    add_common(scmd, so);
    scmd->add_option("--expansion", s_expansion, "chaos expansion JSON path");
    scmd->add_option("--weights", s_weights, "first-chaos weights")->delimiter(',');

    // app-two-runs
    CommonOpts to;
    std::vector<double> t_weights;
    int t_ones = 0;
    std::vector<int> t_grid;
    auto* tcmd = app.add_subcommand("app-two-runs", "weighted 2-runs bound");
    add_common(tcmd, to);
    tcmd->add_option("--weights", t_weights, "window weights")->delimiter(',');
    tcmd->add_option("--ones", t_ones, "use m all-ones weights");
    tcmd->add_option("--grid", t_grid, "window lengths for the all-ones decay curve")
        ->delimiter(',');

    // app-comb
    CommonOpts co;
    std::string c_spec;
    bool c_with_bound = true;
    auto* ccmd = app.add_subcommand("app-comb", "combinatorial CLT ingredients");
    add_common(ccmd, co);
    ccmd->add_option("--spec", c_spec, "CombSpec JSON path: {q, tuples, b}")->required();
    ccmd->add_flag("--with-bound,!--no-bound", c_with_bound, "include the contraction bound");

    // app-fcp
    CommonOpts fo;
    int f_q = 3, f_m = 2;
    std::string f_cover = "1,2;2,3;1,3";
    std::vector<long long> f_ns = {16, 81, 256, 625};
    auto* fcmd = app.add_subcommand("app-fcp", "fractional Cartesian product decay");
    add_common(fcmd, fo);
    fcmd->add_option("--q", f_q, "tuple order");
    fcmd->add_option("--m", f_m, "cover set size");
    fcmd->add_option("--cover", f_cover, "semicolon-separated cover sets, e.g. 1,2;2,3;1,3");
    fcmd->add_option("--n-list", f_ns, "universe sizes")->delimiter(',');

    // app-matrix
    CommonOpts mo;
    mo.engine_mode = "mc";
    int m_n = 40;
    std::vector<int> m_orders = {1, 2, 3};
    std::vector<int> m_decay = {10, 20, 40, 80};
    auto* mcmd = app.add_subcommand("app-matrix", "Bernoulli matrix trace experiment");
    add_common(mcmd, mo);
    mcmd->add_option("--n", m_n, "matrix size");
    mcmd->add_option("--orders", m_orders, "trace powers")->delimiter(',');
    mcmd->add_option("--decay-ns", m_decay, "matrix sizes for contraction decay")->delimiter(',');

    CLI11_PARSE(app, argc, argv);
    const auto t0 = std::chrono::steady_clock::now();

    try {
        if (vcmd->parsed()) {
            json cfg = load_config(vo);
            cfg_get(cfg, "cases", v_cases);
            cfg_get(cfg, "max_n", v_max_n);
            cfg_get(cfg, "tol", v_tol);
            IdentityReport rep = run_identity_suite(vo.seed, v_cases, v_max_n);
            json res{{"max_residual", rep.max_residual()}, {"ok", rep.ok(v_tol)}};
            for (const auto& [name, r] : rep.residuals) res["residuals"][name] = r;
            json config{{"cases", v_cases}, {"max_n", v_max_n}, {"tol", v_tol}};
            int rc = emit(vo, "verify-identities", config, res, t0);
            return rep.ok(v_tol) ? rc : 3;
        }
        if (bcmd->parsed()) {
            json cfg = load_config(bo);
            cfg_get(cfg, "type", b_type);
            cfg_get(cfg, "weights", b_weights);
            cfg_get(cfg, "kernel", b_kernel);
            cfg_get(cfg, "kernel2", b_kernel2);
            cfg_get(cfg, "sigma2", b_sigma2);
            cfg_get(cfg, "expansion", b_expansion);
            BoundReport rep;
            if (b_type == "first-chaos") {
                if (b_weights.empty()) throw std::runtime_error("first-chaos needs --weights");
                rep = first_chaos_bound(b_weights, make_engine(bo));
            } else if (b_type == "chaos-q") {
                rep = chaos_q_bound(kernel_from_json(read_file(b_kernel)), b_sigma2);
            } else if (b_type == "sum12") {
                rep = sum12_bound(kernel_from_json(read_file(b_kernel)),
                                  kernel_from_json(read_file(b_kernel2)));
            } else {
                rep = malliavin_stein_terms(expansion_from_json(read_file(b_expansion)),
                                            make_engine(bo));
            }
            json config{{"type", b_type}};
            if (!b_weights.empty()) config["weights"] = b_weights;
            if (!b_kernel.empty()) config["kernel"] = b_kernel;
            if (!b_kernel2.empty()) config["kernel2"] = b_kernel2;
            if (!b_expansion.empty()) config["expansion"] = b_expansion;
            if (b_type == "chaos-q") config["sigma2"] = b_sigma2;
            return emit(bo, "bound", config, report_json(rep), t0);
        }
        if (scmd->parsed()) {
            json cfg = load_config(so);
            cfg_get(cfg, "expansion", s_expansion);
            cfg_get(cfg, "weights", s_weights);
            ChaosExpansion F(0);
            if (!s_expansion.empty()) {
                F = expansion_from_json(read_file(s_expansion));
            } else if (!s_weights.empty()) {
                Kernel f1(1);
                for (std::size_t i = 0; i < s_weights.size(); ++i)
                    f1.set({static_cast<Index>(i + 1)}, s_weights[i]);
                F = pure_chaos(static_cast<int>(s_weights.size()), f1);
            } else {
                throw std::runtime_error("simulate needs --expansion or --weights");
            }
            const ExpectationEngine engine = make_engine(so);
            const int n = F.dimension();
            json res;
            EstimatedValue m1 = moment(F, 1, engine), m2 = moment(F, 2, engine);
            EstimatedValue k4 = kappa4(F, engine);
            res["mean"] = m1.value;
            res["second_moment"] = m2.value;
            res["kappa4"] = k4.value;
            if (!engine.is_exact()) {
                res["mean_abs_error"] = m1.abs_error;
                res["second_moment_abs_error"] = m2.abs_error;
                res["kappa4_abs_error"] = k4.abs_error;
            }
            const double sigma2 = m2.value - m1.value * m1.value;
            if (engine.is_exact()) {
                res["exact_dK"] = exact_dK(exact_law(as_evaluator(F), n, engine.cap), sigma2);
            } else {
                EmpiricalDk dk = empirical_dK(
                    mc_sample_values(as_evaluator(F), n, engine.samples, engine.seed), sigma2);
                res["empirical_dK"] = dk.estimate;
                res["dkw_band"] = dk.dkw_band;
            }
            json config = json::object();
            if (!s_expansion.empty()) config["expansion"] = s_expansion;
            if (!s_weights.empty()) config["weights"] = s_weights;
            return emit(so, "simulate", config, res, t0);
        }
        if (tcmd->parsed()) {
            json cfg = load_config(to);
            cfg_get(cfg, "weights", t_weights);
            cfg_get(cfg, "ones", t_ones);
            cfg_get(cfg, "grid", t_grid);
            if (t_weights.empty() && t_ones > 0) t_weights.assign(t_ones, 1.0);
            if (t_weights.empty()) throw std::runtime_error("app-two-runs needs --weights or --ones");
            TwoRunsSpec spec{t_weights};
            json res{{"variance", two_runs_variance(spec)},
                     {"report", report_json(two_runs_bound(spec))}};
            std::vector<Curve> curves;
            if (!t_grid.empty()) {
                Curve c;
                c.name = "two_runs_max_arg";
                c.x_label = "m";
                c.y_label = "max_arg";
                for (int m : t_grid) {
                    TwoRunsSpec ones{std::vector<double>(m, 1.0)};
                    c.points.emplace_back(m, two_runs_bound(ones).get("theorem_max_arg"));
                }
                res["max_arg_slope"] = loglog_slope(c.points);
                curves.push_back(std::move(c));
            }
            write_curves(to.csv_dir, curves);
            json config{{"weights", t_weights}};
            if (!t_grid.empty()) config["grid"] = t_grid;
            return emit(to, "app-two-runs", config, res, t0);
        }
        if (ccmd->parsed()) {
            json cfg = load_config(co);
            cfg_get(cfg, "spec", c_spec);
            cfg_get(cfg, "with_bound", c_with_bound);
            json sj = json::parse(read_file(c_spec));
            CombSpec spec;
            spec.q = sj.at("q").get<int>();
            for (const auto& t : sj.at("tuples")) spec.tuples.push_back(t.get<Tuple>());
            spec.b = sj.at("b").get<std::vector<double>>();
            PhiPsi pp = comb_phi_psi(spec);
            json res{{"phi", pp.phi}, {"psi_sup", pp.psi_sup}, {"psi", pp.psi},
                     {"measure", comb_measure(spec)}};
            if (c_with_bound) res["report"] = report_json(comb_bound(spec));
            return emit(co, "app-comb", json{{"spec", c_spec}, {"with_bound", c_with_bound}},
                        res, t0);
        }
        if (fcmd->parsed()) {
            json cfg = load_config(fo);
            cfg_get(cfg, "q", f_q);
            cfg_get(cfg, "m", f_m);
            cfg_get(cfg, "cover", f_cover);
            cfg_get(cfg, "n_list", f_ns);
            FcpSpec fs;
            fs.q = f_q;
            fs.m = f_m;
            std::stringstream sets(f_cover);
            std::string part;
            while (std::getline(sets, part, ';')) {
                std::vector<int> M;
                std::stringstream ps(part);
                std::string tok;
                while (std::getline(ps, tok, ',')) M.push_back(std::stoi(tok));
                fs.cover.push_back(M);
            }
            Curve phi_curve{"fcp_phi", "n", "phi", {}};
            Curve size_curve{"fcp_size", "n", "tuples", {}};
            json per_n = json::array();
            for (long long n : f_ns) {
                fs.n = n;
                CombSpec spec = fcp_build(fs);
                PhiPsi pp = comb_phi_psi(spec);
                phi_curve.points.emplace_back(static_cast<double>(n), pp.phi);
                size_curve.points.emplace_back(static_cast<double>(n),
                                               static_cast<double>(spec.tuples.size()));
                per_n.push_back(json{{"n", n},
                                     {"tuples", spec.tuples.size()},
                                     {"phi", pp.phi},
                                     {"psi_sup", pp.psi_sup}});
            }
            json res{{"per_n", per_n}};
            if (f_ns.size() >= 2) {
                res["phi_slope"] = loglog_slope(phi_curve.points);
                res["size_slope"] = loglog_slope(size_curve.points);
            }
            write_curves(fo.csv_dir, {phi_curve, size_curve});
            json config{{"q", f_q}, {"m", f_m}, {"cover", f_cover}, {"n_list", f_ns}};
            return emit(fo, "app-fcp", config, res, t0);
        }
        if (mcmd->parsed()) {
            json cfg = load_config(mo);
            cfg_get(cfg, "n", m_n);
            cfg_get(cfg, "orders", m_orders);
            cfg_get(cfg, "decay_ns", m_decay);
            MatrixSpec spec{m_n, m_orders};
            TraceExperiment ex = trace_experiment(spec, make_engine(mo), m_decay);
            json res{{"chaos_variance", ex.chaos_variance},
                     {"covariance", ex.covariance},
                     {"covariance_se", ex.covariance_se},
                     {"contraction_bound", report_json(ex.contraction_bound)}};
            for (const auto& [name, slope] : ex.decay_slopes) res["decay_slopes"][name] = slope;
            write_curves(mo.csv_dir, ex.decay_curves);
            json config{{"n", m_n}, {"orders", m_orders}, {"decay_ns", m_decay}};
            return emit(mo, "app-matrix", config, res, t0);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
