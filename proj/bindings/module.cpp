#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lyapq/harper.hpp"
#include "lyapq/jensen.hpp"
#include "lyapq/lyapunov.hpp"
#include "lyapq/rootfind.hpp"
#include "lyapq/spectrum.hpp"
#include "lyapq/sweep.hpp"

namespace py = pybind11;
using namespace lyapq;

namespace {

Coupling to_coupling(const std::tuple<double, double, double>& l) {
    return {std::get<0>(l), std::get<1>(l), std::get<2>(l)};
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lyapunov exponents of analytic quasi-periodic 2x2 cocycles (all values in nats)";

    py::register_exception<Error>(m, "LyapqError");

    py::class_<Frequency>(m, "Frequency")
        .def_static("rational", &Frequency::rational, py::arg("p"), py::arg("q"))
        .def_static("golden", &Frequency::golden)
        .def_static("sqrt2m1", &Frequency::sqrt2m1)
        .def_static("parse", &Frequency::parse, py::arg("text"))
        .def_property_readonly("is_rational", &Frequency::is_rational)
        .def_property_readonly("p", &Frequency::p)
        .def_property_readonly("q", &Frequency::q)
        .def_property_readonly("value", [](const Frequency& f) { return static_cast<double>(f.value()); })
        .def("convergents",
             [](const Frequency& f) {
                 std::vector<std::pair<std::int64_t, std::int64_t>> out;
                 for (const auto& c : f.convergents()) out.emplace_back(c.p, c.q);
                 return out;
             })
        .def("__repr__", [](const Frequency& f) { return "Frequency(" + f.str() + ")"; });

    py::class_<TrigPoly>(m, "TrigPoly")
        .def(py::init([](const std::map<int, cplx>& coeffs) {
                 int deg = 0;
                 for (const auto& [k, v] : coeffs) deg = std::max(deg, std::abs(k));
                 TrigPoly p(deg);
                 for (const auto& [k, v] : coeffs) p.set_coeff(k, v);
                 return p;
             }),
             py::arg("coeffs"))
        .def("eval", [](const TrigPoly& p, cplx z) { return p.eval(z); }, py::arg("z"))
        .def("to_json", &TrigPoly::to_json)
        .def_static("from_json", &TrigPoly::from_json);

    py::class_<Cocycle>(m, "Cocycle")
        .def_static("from_json", &Cocycle::from_json, py::arg("freq"), py::arg("text"))
        .def_property_readonly("singular", [](const Cocycle& c) { return c.singular(); })
        .def("value", [](const Cocycle& c, cplx z) {
            const Mat2C v = c.value(z);
            return std::vector<std::vector<cplx>>{{v.a11, v.a12}, {v.a21, v.a22}};
        });

    m.def(
        "build_cocycle",
        [](const std::tuple<double, double, double>& lam, const Frequency& beta, double E,
           const std::string& which) {
            return build_cocycle(to_coupling(lam), beta, E,
                                 which == "A" ? TransferKind::A : TransferKind::B);
        },
        py::arg("coupling"), py::arg("beta"), py::arg("E"), py::arg("which") = "B");

    m.def(
        "le_iterative",
        [](const Cocycle& c, double eps, int n, int phase_samples) {
            const LeEstimate est = le_iterative(c, eps, n, phase_samples);
            py::dict d;
            d["estimate"] = est.estimate;
            d["upper_sequence"] = est.upper_sequence;
            d["flagged_samples"] = est.flagged_samples;
            d["phase_stderr"] = est.phase_stderr;
            return d;
        },
        py::arg("cocycle"), py::arg("eps") = 0.0, py::arg("n") = 10000, py::arg("phase_samples") = 8);

    m.def("le_rational", &le_rational, py::arg("cocycle"), py::arg("eps") = 0.0,
          py::arg("quad_points") = 2048);

    m.def(
        "epsilon_sweep",
        [](const Cocycle& c, double eps_min, double eps_max, int steps, const std::string& backend,
           int n, int phase_samples, int quad_points, int threads) {
            SweepOptions opt;
            opt.backend = backend == "rational" ? LeBackend::rational : LeBackend::iterative;
            opt.n = n;
            opt.phase_samples = phase_samples;
            opt.quad_points = quad_points;
            opt.threads = threads;
            const LEProfile prof = epsilon_sweep(c, eps_min, eps_max, steps, opt);
            py::dict d;
            d["eps"] = prof.eps_grid;
            d["le"] = prof.le_values;
            d["slopes_2pi"] = prof.slopes;
            d["kinks"] = prof.kinks;
            d["noise_floor"] = prof.noise_floor;
            return d;
        },
        py::arg("cocycle"), py::arg("eps_min"), py::arg("eps_max"), py::arg("steps"),
        py::arg("backend") = "iterative", py::arg("n") = 10000, py::arg("phase_samples") = 8,
        py::arg("quad_points") = 2048, py::arg("threads") = 1);

    m.def(
        "i_eps_quadrature",
        [](const TrigPoly& c, double eps, double tol) { return i_eps_quadrature(c, eps, tol); },
        py::arg("c"), py::arg("eps"), py::arg("tol") = 1e-9);

    m.def("i_eps_exact", [](const TrigPoly& c) {
        const JensenProfile prof = i_eps_exact(c);
        py::dict d;
        std::vector<std::tuple<double, double, double, double>> segs;
        for (const auto& s : prof.segments) segs.emplace_back(s.eps_lo, s.eps_hi, s.slope, s.intercept);
        d["segments"] = segs;
        d["kinks"] = prof.kink_eps;
        d["constant"] = prof.constant_d;
        return d;
    });

    m.def(
        "harper_i_eps",
        [](const std::tuple<double, double, double>& lam, double eps) {
            return harper_i_eps_closed(to_coupling(lam), eps);
        },
        py::arg("coupling"), py::arg("eps"));

    m.def("harper_c",
          [](const std::tuple<double, double, double>& lam, double beta) {
              return harper_c(to_coupling(lam), beta);
          },
          py::arg("coupling"), py::arg("beta"));

    m.def("thouless_le",
          [](const std::tuple<double, double, double>& lam) { return thouless_le(to_coupling(lam)); });
    m.def("delta", [](const std::tuple<double, double, double>& lam) { return delta(to_coupling(lam)); });
    m.def("L_M", [](const std::tuple<double, double, double>& lam) { return L_M(to_coupling(lam)); });
    m.def("region", [](const std::tuple<double, double, double>& lam) {
        return to_string(region(to_coupling(lam)).tag);
    });
    m.def("criticality", [](const std::tuple<double, double, double>& lam) {
        const HarperVerdict v = criticality(to_coupling(lam));
        py::dict d;
        d["le_on_spectrum"] = v.le_on_spectrum;
        d["delta"] = v.delta;
        d["L_M"] = v.L_M;
        d["criticality"] = to_string(v.criticality);
        return d;
    });
    m.def("duality", [](const std::tuple<double, double, double>& lam) {
        const Coupling s = duality(to_coupling(lam));
        return std::make_tuple(s.l1, s.l2, s.l3);
    });
    m.def(
        "complex_le",
        [](const std::tuple<double, double, double>& lam, double eps) {
            const ComplexLe c = complex_le(to_coupling(lam), eps);
            return std::make_pair(c.le_A_lower, c.le_B_on_spectrum);
        },
        py::arg("coupling"), py::arg("eps"));

    m.def(
        "spectrum_truncation",
        [](const std::tuple<double, double, double>& lam, const Frequency& beta, int theta_samples,
           int N, int threads) {
            const SpectrumApprox s = spectrum_truncation(to_coupling(lam), beta, theta_samples, N, threads);
            py::dict d;
            d["points"] = s.points;
            d["intervals"] = s.merged_intervals;
            d["method"] = s.method;
            return d;
        },
        py::arg("coupling"), py::arg("beta"), py::arg("theta_samples") = 32, py::arg("N") = 500,
        py::arg("threads") = 1);

    m.def(
        "spectrum_floquet",
        [](const std::tuple<double, double, double>& lam, std::int64_t p, std::int64_t q,
           int theta_samples, int threads) {
            const SpectrumApprox s = spectrum_floquet(to_coupling(lam), p, q, theta_samples, threads);
            py::dict d;
            d["points"] = s.points;
            d["intervals"] = s.merged_intervals;
            d["method"] = s.method;
            d["skipped_thetas"] = s.skipped_thetas;
            return d;
        },
        py::arg("coupling"), py::arg("p"), py::arg("q"), py::arg("theta_samples") = 64,
        py::arg("threads") = 1);

    m.def(
        "midband_energies",
        [](const std::tuple<double, double, double>& lam, const Frequency& beta, int count,
           int theta_samples, int N, int threads) {
            const SpectrumApprox s = spectrum_truncation(to_coupling(lam), beta, theta_samples, N, threads);
            return sample_midband(s, count);
        },
        py::arg("coupling"), py::arg("beta"), py::arg("count") = 7, py::arg("theta_samples") = 32,
        py::arg("N") = 500, py::arg("threads") = 1);

    m.def("roots_on_cylinder", [](const TrigPoly& p) {
        const RootList rl = roots_on_cylinder(p);
        py::dict d;
        std::vector<std::tuple<double, double, int>> roots;
        for (const auto& r : rl.roots) roots.emplace_back(r.x, r.eps, r.multiplicity);
        d["roots"] = roots;
        d["zeros_at_origin"] = rl.zeros_at_origin;
        return d;
    });

    m.def(
        "solution_growth",
        [](const Cocycle& c, double x, std::pair<cplx, cplx> w0, int n) {
            const GrowthRates g = solution_growth(c, x, {w0.first, w0.second}, n);
            py::dict d;
            d["forward_rate"] = g.forward_rate;
            if (g.backward_rate)
                d["backward_rate"] = *g.backward_rate;
            else
                d["backward_rate"] = py::none();
            return d;
        },
        py::arg("cocycle"), py::arg("x"), py::arg("w0"), py::arg("n"));
}
