#include "thetamod/modular.hpp"
#include "thetamod/numtheory.hpp"
#include "thetamod/thetaeval.hpp"
#include "thetamod/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace thetamod;

namespace {

py::int_ to_py(const BigInt& z) { return py::int_(py::module_::import("builtins").attr("int")(z.get_str())); }

BigInt from_py(const py::int_& z) { return BigInt(py::str(static_cast<py::handle>(z)).cast<std::string>()); }

py::dict report_dict(const ResidualReport& r) {
    py::dict d;
    d["identity"] = r.identity;
    d["sample"] = r.sample;
    d["residual"] = r.residual;
    d["scale"] = r.scale;
    d["tolerance"] = r.tolerance;
    d["verdict"] = r.passed() ? "pass" : "fail";
    d["precision_bits"] = r.precision_bits;
    return d;
}

py::tuple pair(const Complex& z, int digits) {
    return py::make_tuple(z.real().to_string(digits), z.imag().to_string(digits));
}

std::vector<SeedRecord> no_seeds;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bindings for the thetamod C++ core";

    py::register_exception<missing_seed_error>(m, "MissingSeedError", PyExc_LookupError);

    py::class_<SparsePoly>(m, "Poly")
        .def(py::init([](std::vector<std::string> vars) { return SparsePoly(std::move(vars)); }), py::arg("variables"))
        .def_static(
            "parse", [](const std::string& text, const std::vector<std::string>& vars) { return parse_poly(text, vars); },
            py::arg("text"), py::arg("variables") = std::vector<std::string>{"X", "Y"})
        .def_static(
            "from_json", [](const std::string& text) { return from_json(text); }, py::arg("text"))
        .def("to_json", [](const SparsePoly& p) { return to_json(p); })
        .def_property_readonly("variables", &SparsePoly::variables)
        .def_property_readonly("terms",
                               [](const SparsePoly& p) {
                                   py::list out;
                                   for (const auto& [mono, c] : p.terms()) {
                                       py::tuple e(p.variable_count());
                                       for (std::size_t i = 0; i < p.variable_count(); ++i) e[i] = mono[i];
                                       out.append(py::make_tuple(e, to_py(c)));
                                   }
                                   return out;
                               })
        .def("total_degree",
             [](const SparsePoly& p) -> std::optional<std::uint64_t> {
                 auto d = p.total_degree();
                 if (d.is_minus_infinity()) return std::nullopt;
                 return d.value();
             })
        .def("is_zero", &SparsePoly::is_zero)
        .def(
            "substitute",
            [](const SparsePoly& p, const std::string& var, const SparsePoly& r) { return substitute(p, var, r); },
            py::arg("var"), py::arg("replacement"))
        .def(
            "resultant", [](const SparsePoly& p, const SparsePoly& q, const std::string& var) {
                return resultant(p, q, var);
            },
            py::arg("other"), py::arg("var"))
        .def(
            "eval",
            [](const SparsePoly& p, const std::vector<py::int_>& point) {
                std::vector<Rational> pt;
                for (const auto& v : point) pt.emplace_back(from_py(v));
                Rational r = eval_exact(p, pt);
                return py::module_::import("fractions").attr("Fraction")(to_py(BigInt(r.get_num())),
                                                                          to_py(BigInt(r.get_den())));
            },
            py::arg("point"))
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__pow__", [](const SparsePoly& p, unsigned k) { return pow(p, k); })
        .def("__str__", [](const SparsePoly& p) { return to_string(p); })
        .def("__repr__", [](const SparsePoly& p) { return "Poly(" + to_string(p) + ")"; });

    m.def("psi", &psi, py::arg("n"));
    m.def("euler_phi", &euler_phi, py::arg("n"));
    m.def("omega", &omega, py::arg("a"), py::arg("b"));
    m.def("b_seq", &b_seq, py::arg("p"), py::arg("j"));
    m.def("constant_term", [](std::uint64_t mm) { return to_py(constant_term(mm)); }, py::arg("m"));
    m.def(
        "enumerate_triplets",
        [](std::uint64_t n) {
            std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> out;
            for (const auto& t : enumerate_triplets(n)) out.emplace_back(t.u, t.v, t.w);
            return out;
        },
        py::arg("n"));

    m.def("power_of_two_fixture", &power_of_two_fixture, py::arg("n"));
    m.def("homogeneous_relation", &homogeneous_relation);
    m.def("homogeneous_elimination", [] {
        EliminationResult r = homogeneous_elimination();
        py::dict d;
        d["resultant"] = r.resultant;
        d["multiplicity"] = r.multiplicity;
        d["cofactor"] = r.cofactor;
        return d;
    });
    m.def(
        "build_qn",
        [](std::uint64_t n, bool audit) {
            ConstructionResult r;
            {
                py::gil_scoped_release release;
                r = build_qn(n, no_seeds, audit);
            }
            py::dict d;
            d["n"] = r.n;
            d["alpha"] = r.alpha;
            d["m"] = r.m;
            d["c"] = to_py(r.c);
            d["Q"] = r.Q;
            py::list steps;
            for (const auto& s : r.steps) {
                py::dict sd;
                sd["B"] = s.B;
                sd["D"] = s.D;
                sd["E"] = s.E;
                sd["Qtilde"] = s.Qtilde;
                sd["Q"] = s.Q;
                sd["audit"] = factorization_audit(s);
                steps.append(sd);
            }
            d["steps"] = steps;
            return d;
        },
        py::arg("n"), py::arg("audit") = false);

    m.def(
        "theta",
        [](std::optional<std::string> q, std::optional<std::string> tau, long prec) {
            if (q.has_value() == tau.has_value()) throw std::invalid_argument("pass exactly one of q= or tau=");
            const auto p = static_cast<Precision>(prec);
            const Precision wp = p + kGuardBits;
            QPoint point =
                q ? QPoint::from_nome(Complex::parse_pair(*q, wp), p) : nome_from_tau(Complex::parse_pair(*tau, wp), p);
            ThetaValues v = theta_eval(point);
            const int digits = decimal_digits(p);
            py::dict d;
            d["theta2"] = pair(v.theta2, digits);
            d["theta3"] = pair(v.theta3, digits);
            d["theta4"] = pair(v.theta4, digits);
            d["trunc_error_bound"] = v.trunc_error_bound.to_double();
            d["terms"] = v.terms;
            return d;
        },
        py::kw_only(), py::arg("q") = py::none(), py::arg("tau") = py::none(), py::arg("prec") = 256);

    m.def(
        "check",
        [](const std::string& identity, const std::string& tau, long prec, std::uint64_t n, std::uint64_t p,
           unsigned j) {
            const auto bits = static_cast<Precision>(prec);
            const Complex t = Complex::parse_pair(tau, bits + kGuardBits);
            ResidualReport r;
            if (identity == "qn") {
                r = check_qn_vanishing(n, t, bits);
            } else if (identity == "pow2") {
                r = check_power_of_two_fixture(n, t, bits);
            } else if (identity == "product") {
                r = check_product_formula(n, t, bits);
            } else if (identity == "roots") {
                r = check_root_of_unity_product(p, j, t, bits);
            } else if (identity == "homogeneous") {
                r = check_homogeneous_relation(t, bits);
            } else if (identity == "jacobi") {
                r = check_jacobi_identity(t, bits);
            } else if (identity == "duplication") {
                r = check_duplication(t, bits);
            } else if (identity == "triple") {
                r = check_triple_product(t, bits);
            } else {
                throw std::invalid_argument("unknown identity '" + identity + "'");
            }
            return report_dict(r);
        },
        py::arg("identity"), py::kw_only(), py::arg("tau") = "0,1", py::arg("prec") = 256, py::arg("n") = 3,
        py::arg("p") = 3, py::arg("j") = 1);

    m.def(
        "run_suite",
        [](long prec, unsigned jobs) {
            SuiteConfig cfg = SuiteConfig::defaults();
            cfg.precision_bits = static_cast<Precision>(prec);
            cfg.jobs = jobs;
            std::vector<ResidualReport> reports;
            {
                py::gil_scoped_release release;
                reports = run_suite(cfg);
            }
            py::list out;
            for (const auto& r : reports) out.append(report_dict(r));
            return out;
        },
        py::kw_only(), py::arg("prec") = 256, py::arg("jobs") = 1);
}
