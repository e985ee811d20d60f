#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <vector>

#include "tatezeta/errors.hpp"
#include "tatezeta/gamma.hpp"
#include "tatezeta/rootfind.hpp"
#include "tatezeta/sturm.hpp"
#include "tatezeta/verify.hpp"
#include "tatezeta/weil.hpp"
#include "tatezeta/zeta_numeric.hpp"

namespace py = pybind11;
using namespace tatezeta;

namespace {

std::vector<std::string> poly_strings(const RatPoly& p) {
    std::vector<std::string> out;
    if (p.is_zero()) {
        out.push_back("0");
        return out;
    }
    for (int i = 0; i <= p.degree(); ++i)
        out.push_back(to_string(p.coeff(static_cast<std::size_t>(i))));
    return out;
}

RatPoly poly_from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) c.push_back(rational_from_string(s));
    return RatPoly(std::move(c));
}

py::dict record_dict(const ZetaPolyRecord& rec) {
    py::dict d;
    d["m"] = rec.m;
    d["k"] = rec.k;
    d["degree"] = rec.is_zero ? 0 : rec.degree;
    d["is_zero"] = rec.is_zero;
    d["coeffs"] = poly_strings(rec.coeffs);
    d["route"] = to_string(rec.route);
    return d;
}

py::dict report_dict(const VerifyReport& rep) {
    py::dict d;
    d["m"] = rep.m;
    d["k"] = rep.k;
    d["degree"] = rep.degree;
    d["vacuous"] = rep.vacuous;
    d["route_agreement"] = rep.route_agreement;
    d["functional_eq"] = rep.functional_eq;
    d["symmetry"] = rep.symmetry;
    d["sturm_real_roots"] = rep.sturm_real_roots;
    d["distinct"] = rep.distinct;
    d["lrh_certified"] = rep.lrh_certified;
    d["passed"] = rep.passed();
    if (!rep.note.empty()) d["note"] = rep.note;
    return d;
}

BigComplex from_std(std::complex<double> z, mpfr_prec_t prec) {
    return BigComplex(z.real(), z.imag(), prec);
}

std::complex<double> to_std(const BigComplex& z) {
    return {z.re.to_double(), z.im.to_double()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact and high-precision verification of critical-line zeta polynomials";

    py::register_exception<Error>(m, "TatezetaError");

    m.def("hermite_poly", [](int n) { return poly_strings(hermite_poly(n)); },
          py::arg("m"), "Hermite polynomial coefficients, ascending degree, as fractions");
    m.def("laguerre_poly",
          [](int n, int alpha) { return poly_strings(laguerre_poly(n, alpha)); }, py::arg("n"),
          py::arg("alpha"));

    m.def(
        "zeta_poly",
        [](int mm, int k, const std::string& route) {
            if (route == "recurrence") return record_dict(zeta_poly_recurrence(mm, k));
            if (route != "expansion") throw DomainError("route must be expansion|recurrence");
            return record_dict(zeta_poly_expansion(mm, k));
        },
        py::arg("m"), py::arg("k"), py::arg("route") = "expansion",
        "Normalized polynomial factor of the local zeta function at (m, k)");

    m.def("lrh_verify", [](int mm, int k) { return report_dict(lrh_verify(mm, k)); },
          py::arg("m"), py::arg("k"),
          "Exact certificate that all zeros of the (m, k) polynomial lie on Re(s) = 1/2");

    m.def(
        "sturm_count",
        [](const std::vector<std::string>& coeffs, const std::string& lo, const std::string& hi) {
            return sturm_count(poly_from_strings(coeffs), rational_from_string(lo),
                               rational_from_string(hi));
        },
        py::arg("coeffs"), py::arg("lo"), py::arg("hi"),
        "Distinct real roots in (lo, hi) of the polynomial with the given rational coefficients");

    m.def("critical_line_restriction",
          [](const std::vector<std::string>& coeffs) {
              return poly_strings(critical_line_restriction(poly_from_strings(coeffs)));
          },
          py::arg("coeffs"));

    m.def("cauchy_root_bound",
          [](const std::vector<std::string>& coeffs) {
              return to_string(cauchy_root_bound(poly_from_strings(coeffs)));
          },
          py::arg("coeffs"));

    m.def(
        "gamma",
        [](std::complex<double> s) { return to_std(gamma_complex(from_std(s, 128))); },
        py::arg("s"), "Complex Gamma, computed at 128-bit precision, rounded to double");

    m.def(
        "ortho_weight",
        [](int k, double t) { return ortho_weight(k, BigFloat(t, 128)).to_double(); },
        py::arg("k"), py::arg("t"), "|Gamma((k+1)/2 + it)|^2");

    m.def(
        "zeta_numeric",
        [](int mm, int k, std::complex<double> s) {
            ZetaNumeric oracle(128);
            QuadratureResult res = oracle.zeta(hermite_fn(mm, 0), k, from_std(s, 128));
            return py::make_tuple(to_std(res.value), res.error_estimate);
        },
        py::arg("m"), py::arg("k"), py::arg("s"),
        "Quadrature value of the defining zeta integral for f_{m,0}; returns (value, error)");

    m.def(
        "zeta_roots",
        [](int mm, int k) {
            ZetaPolyRecord rec = zeta_poly_expansion(mm, k);
            std::vector<std::complex<double>> out;
            if (rec.is_zero || rec.degree == 0) return out;
            for (const auto& r : root_find(rec.coeffs)) out.push_back(to_std(r.root));
            return out;
        },
        py::arg("m"), py::arg("k"), "All complex roots of the (m, k) polynomial");

    m.def("strip_shrink_property", &strip_shrink_property, py::arg("trials"), py::arg("seed"));

    m.def(
        "run_suite_json",
        [](int m_max, int weil_bound, int jobs, unsigned long seed) {
            RunConfig cfg;
            cfg.m_max = m_max;
            cfg.weil_degree_bound = weil_bound;
            cfg.jobs = jobs;
            cfg.seed = seed;
            cfg.format = OutputFormat::json;
            return to_json(run_suite(cfg));
        },
        py::arg("m_max") = 8, py::arg("weil_bound") = 8, py::arg("jobs") = 1,
        py::arg("seed") = 42, "Full verification suite; returns the JSON report");

    m.def(
        "export_table_json",
        [](const std::vector<std::pair<int, int>>& pairs) {
            std::vector<ZetaPolyRecord> recs;
            recs.reserve(pairs.size());
            for (auto [mm, k] : pairs) recs.push_back(zeta_poly_expansion(mm, k));
            return export_table(recs, OutputFormat::json);
        },
        py::arg("pairs"), "Canonical polynomial table for the given (m, k) pairs");

    m.attr("__version__") = "0.1.0";
}
