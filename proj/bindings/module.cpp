#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nilq/parse.hpp"
#include "nilq/suites.hpp"

namespace py = pybind11;

namespace {

std::optional<int> as_modulus(int modulus)
{
    if (modulus <= 0) return std::nullopt;
    return modulus;
}

nilq::Commutation as_mode(const std::string& mode)
{
    if (mode == "odd") return nilq::Commutation::odd;
    if (mode == "q") return nilq::Commutation::q_mode;
    throw std::invalid_argument("mode must be 'odd' or 'q'");
}

std::string apply_text(const std::string& expr, const std::string& poly, const std::string& mode,
                       int n, int modulus)
{
    nilq::RingConfig cfg{n, as_mode(mode), as_modulus(modulus)};
    nilq::OperatorExpr e = nilq::parse_operator(expr);
    nilq::SkewPoly f = nilq::parse_poly(poly, cfg);
    nilq::EvalContext ctx(cfg);
    return nilq::eval_expr(e, f, ctx).str();
}

std::string pair_text(const std::string& left, const std::string& right, bool oracle, int modulus)
{
    auto mod = as_modulus(modulus);
    return nilq::pairing(nilq::parse_nsym(left, mod), nilq::parse_nsym(right, mod), oracle).str();
}

py::list verify_suite(const std::string& suite, int n, int max_deg, int modulus)
{
    nilq::SuiteParams params;
    if (n > 0) params.n = n;
    if (max_deg >= 0) params.max_deg = max_deg;
    params.modulus = as_modulus(modulus);
    py::list out;
    for (const auto& rep : nilq::run_suite(suite, params)) {
        py::dict d;
        d["suite"] = rep.suite;
        d["relation"] = rep.name;
        d["n"] = rep.n;
        d["max_deg"] = rep.max_deg;
        d["pass"] = rep.pass;
        d["basis"] = rep.basis_size;
        if (!rep.pass) {
            d["counterexample_monomial"] = rep.counterexample_monomial;
            d["counterexample_residual"] = rep.counterexample_residual;
        }
        out.append(std::move(d));
    }
    return out;
}

std::string gaussian_text(int n, int k) { return nilq::gaussian_binomial(n, k).str(); }

std::string insertion_text(const std::vector<int>& lambda, int k, const std::string& x,
                           const std::vector<int>& prefix, const std::string& route, int modulus)
{
    auto mod = as_modulus(modulus);
    nilq::InsertionRoute r;
    if (route == "recursive")
        r = nilq::InsertionRoute::recursive;
    else if (route == "explicit")
        r = nilq::InsertionRoute::explicit_formula;
    else if (route == "direct")
        r = nilq::InsertionRoute::direct;
    else
        throw std::invalid_argument("route must be recursive, explicit or direct");
    return nilq::insertion_pairing(lambda, k, nilq::parse_nsym(x, mod), prefix, r).str();
}

py::dict factorization(int n)
{
    nilq::FactorizationReport rep = nilq::factorization_check(n);
    py::dict d;
    d["n"] = rep.n;
    d["pass"] = rep.pass;
    d["residual"] = rep.residual;
    return d;
}

} // namespace

PYBIND11_MODULE(nilq, m)
{
    m.doc() = "exact operator calculus on skew and q-commuting polynomials";

    m.def("apply", &apply_text, py::arg("expr"), py::arg("poly"), py::arg("mode") = "odd",
          py::arg("n") = 2, py::arg("modulus") = 0,
          "apply an operator expression to a polynomial; returns the normal form");
    m.def("pair", &pair_text, py::arg("left"), py::arg("right"), py::arg("oracle") = false,
          py::arg("modulus") = 0, "bilinear form of two NSym expressions");
    m.def("verify", &verify_suite, py::arg("suite"), py::arg("n") = 0, py::arg("max_deg") = -1,
          py::arg("modulus") = 0, "run a relation suite; returns one record per relation");
    m.def("suites", [] { return nilq::suite_names(); }, "available suite names");
    m.def("gaussian_binomial", &gaussian_text, py::arg("n"), py::arg("k"));
    m.def("insertion", &insertion_text, py::arg("lam"), py::arg("k"), py::arg("x"),
          py::arg("prefix") = std::vector<int>{}, py::arg("route") = "recursive",
          py::arg("modulus") = 0);
    m.def("factorization", &factorization, py::arg("n"));
}
