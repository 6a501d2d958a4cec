#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "radstein/comb.hpp"
#include "radstein/traces.hpp"
#include "radstein/two_runs.hpp"
#include "radstein/verify.hpp"

namespace py = pybind11;
using namespace radstein;

namespace {

ExpectationEngine engine_from_args(const std::string& mode, std::uint64_t samples,
                                   std::uint64_t seed, int cap) {
    if (mode == "mc") return ExpectationEngine::monte_carlo(samples, seed);
    if (mode != "exact") throw std::invalid_argument("engine mode must be 'exact' or 'mc'");
    return ExpectationEngine::exact(cap);
}

py::dict report_dict(const BoundReport& r) {
    py::dict terms;
    for (const auto& [k, v] : r.terms) terms[py::str(k)] = v;
    py::dict engine;
    engine["mode"] = r.engine.mode;
    engine["samples"] = r.engine.samples;
    engine["seed"] = r.engine.seed;
    engine["rng"] = CounterRng::name();
    py::dict d;
    d["name"] = r.name;
    d["terms"] = terms;
    d["total"] = r.total;
    d["constants_policy"] = r.constants_policy == ConstantsPolicy::Explicit
                                ? "Explicit"
                                : "UnspecifiedPaperConstant";
    d["engine"] = engine;
    d["notes"] = r.notes;
    return d;
}

RademacherPoint point_from_signs(const std::vector<int>& signs) {
    RademacherPoint x(static_cast<int>(signs.size()));
    for (std::size_t k = 0; k < signs.size(); ++k) x.set(static_cast<int>(k + 1), signs[k]);
    return x;
}

}  // namespace

PYBIND11_MODULE(_radstein, m) {
    m.doc() = "Stein-method bounds for functionals of Rademacher sequences";

    py::class_<Kernel>(m, "Kernel")
        .def(py::init<int>(), py::arg("order"))
        .def("set", &Kernel::set, py::arg("tuple"), py::arg("value"))
        .def("value", &Kernel::value, py::arg("tuple"))
        .def("order", &Kernel::order)
        .def("support_size", &Kernel::support_size)
        .def("max_index", &Kernel::max_index)
        .def("norm2", &Kernel::norm2)
        .def("norm4", &Kernel::norm4)
        .def("to_json", [](const Kernel& f) { return kernel_to_json(f); })
        .def_static("from_json", [](const std::string& s) { return kernel_from_json(s); })
        .def_static("inner", &Kernel::inner);

    m.def("contraction_norm",
          [](const Kernel& f, const Kernel& g, int r) {
              return std::sqrt(contraction_norm2_rr(f, g, r));
          },
          py::arg("f"), py::arg("g"), py::arg("r"));

    py::class_<ChaosExpansion>(m, "ChaosExpansion")
        .def(py::init<int, double>(), py::arg("dimension"), py::arg("constant") = 0.0)
        .def("set_term", &ChaosExpansion::set_term)
        .def("dimension", &ChaosExpansion::dimension)
        .def("constant", &ChaosExpansion::constant)
        .def("degree", &ChaosExpansion::degree)
        .def("evaluate",
             [](const ChaosExpansion& F, const std::vector<int>& signs) {
                 return evaluate(F, point_from_signs(signs));
             })
        .def("to_json", [](const ChaosExpansion& F) { return expansion_to_json(F); })
        .def_static("from_json", [](const std::string& s) { return expansion_from_json(s); });

    m.def("pure_chaos", &pure_chaos, py::arg("dimension"), py::arg("kernel"));
    m.def("chaos_multiply", &chaos_multiply);

    m.def("first_chaos_bound",
          [](const std::vector<double>& a, const std::string& mode, std::uint64_t samples,
             std::uint64_t seed, int cap) {
              return report_dict(first_chaos_bound(a, engine_from_args(mode, samples, seed, cap)));
          },
          py::arg("weights"), py::arg("engine") = "exact", py::arg("samples") = 100000,
          py::arg("seed") = 1, py::arg("cap") = ExpectationEngine::kDefaultCap);

    m.def("chaos_q_bound",
          [](const Kernel& f, double sigma2) { return report_dict(chaos_q_bound(f, sigma2)); },
          py::arg("kernel"), py::arg("sigma2") = 1.0);

    m.def("sum12_bound", [](const Kernel& f1, const Kernel& f2) {
        return report_dict(sum12_bound(f1, f2));
    });

    m.def("malliavin_stein_terms",
          [](const ChaosExpansion& F, const std::string& mode, std::uint64_t samples,
             std::uint64_t seed, int cap) {
              return report_dict(
                  malliavin_stein_terms(F, engine_from_args(mode, samples, seed, cap)));
          },
          py::arg("expansion"), py::arg("engine") = "exact", py::arg("samples") = 100000,
          py::arg("seed") = 1, py::arg("cap") = ExpectationEngine::kDefaultCap);

    m.def("fourth_moment_J2", &fourth_moment_J2);
    m.def("necessary_statistic", &necessary_statistic);

    m.def("two_runs_variance",
          [](const std::vector<double>& a) { return two_runs_variance(TwoRunsSpec{a}); });
    m.def("two_runs_bound", [](const std::vector<double>& a) {
        return report_dict(two_runs_bound(TwoRunsSpec{a}));
    });

    m.def("comb_phi_psi",
          [](int q, const std::vector<Tuple>& tuples, const std::vector<double>& b) {
              CombSpec spec{q, tuples, b};
              PhiPsi pp = comb_phi_psi(spec);
              py::dict d;
              d["phi"] = pp.phi;
              d["psi_sup"] = pp.psi_sup;
              d["psi"] = pp.psi;
              return d;
          },
          py::arg("q"), py::arg("tuples"), py::arg("b"));

    m.def("fcp_build",
          [](int q, int m, const std::vector<std::vector<int>>& cover, long long n) {
              FcpSpec fs{q, m, cover, n};
              CombSpec spec = fcp_build(fs);
              py::dict d;
              d["q"] = spec.q;
              d["tuples"] = spec.tuples;
              d["b"] = spec.b;
              return d;
          },
          py::arg("q"), py::arg("m"), py::arg("cover"), py::arg("n"));

    m.def("expected_trace", &expected_trace, py::arg("q"), py::arg("n"));
    m.def("trace_kernel", &trace_kernel, py::arg("q"), py::arg("n"));

    m.def("exact_dK_weighted_sum", [](const std::vector<double>& a, double sigma2) {
        return exact_dK(weighted_sum_law(a), sigma2);
    });

    m.def("run_identity_suite",
          [](std::uint64_t seed, int cases, int max_n) {
              IdentityReport rep = run_identity_suite(seed, cases, max_n);
              py::dict d;
              for (const auto& [k, v] : rep.residuals) d[py::str(k)] = v;
              return d;
          },
          py::arg("seed") = 7, py::arg("cases") = 10, py::arg("max_n") = 8);
}
