#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "unischubert/determinants.hpp"
#include "unischubert/errors.hpp"
#include "unischubert/locus.hpp"
#include "unischubert/poly_io.hpp"
#include "unischubert/product_rule.hpp"
#include "unischubert/ring.hpp"
#include "unischubert/schubert.hpp"
#include "unischubert/specialize.hpp"

namespace py = pybind11;
using namespace unischubert;

namespace {

Permutation perm(const std::vector<int>& word) { return Permutation(word); }

int ambient(const Permutation& w, std::optional<int> n) { return n ? *n : w.size() - 1; }

py::dict expansion_dict(const std::map<Permutation, Polynomial>& e)
{
    py::dict out;
    for (const auto& [w, c] : e) out[py::tuple(py::cast(w.word()))] = c;
    return out;
}

py::dict report_dict(const RingReport& r)
{
    py::list failures;
    for (const auto& f : r.failures) {
        py::dict d;
        d["u"] = f.u.word();
        d["v"] = f.v.word();
        d["value"] = f.value;
        failures.append(d);
    }
    py::dict out;
    out["n"] = r.n;
    out["checked"] = r.checked;
    out["failures"] = failures;
    return out;
}

} // namespace

PYBIND11_MODULE(unischubert, m)
{
    m.doc() = "Universal Schubert polynomials";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init<int>(), py::arg("constant") = 0)
        .def_static("parse", [](const std::string& s) { return parse_polynomial(s); })
        .def_static("from_json", [](const std::string& s) { return polynomial_from_json(nlohmann::json::parse(s)); })
        .def("__str__", [](const Polynomial& p) { return to_text(p); })
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_text(p) + "')"; })
        .def("latex", [](const Polynomial& p) { return to_latex(p); })
        .def("to_json", [](const Polynomial& p) { return to_json(p).dump(); })
        .def("degree", &Polynomial::degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("__len__", &Polynomial::size)
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, int e) { return a.pow(e); });
    py::implicitly_convertible<int, Polynomial>();

    m.def(
        "single",
        [](const std::vector<int>& w, std::optional<int> n, const std::string& method) {
            const auto p = perm(w);
            const int k = ambient(p, n);
            if (method == "elementary") return universal_single(p, k).to_polynomial();
            if (method == "cy") return universal_cy(p, k).to_polynomial();
            if (method != "inductive") throw DomainError("unknown method '" + method + "'");
            return universal_single_inductive(p, k).to_polynomial();
        },
        py::arg("w"), py::arg("n") = py::none(), py::arg("method") = "inductive",
        "S_w(c); method is 'inductive', 'elementary' or 'cy' (the c,y polynomial).");
    m.def(
        "double", [](const std::vector<int>& w, std::optional<int> n) { return universal_double(perm(w), ambient(perm(w), n)); },
        py::arg("w"), py::arg("n") = py::none());
    m.def(
        "schubert_g", [](const std::vector<int>& w, std::optional<int> n) { return schubert_g(perm(w), ambient(perm(w), n)); },
        py::arg("w"), py::arg("n") = py::none());
    m.def("classical", [](const std::vector<int>& w) { return classical_single(perm(w), perm(w).size() - 1); });
    m.def(
        "specialize",
        [](const Polynomial& p, const std::string& target) { return SpecializationMap::parse(target).apply(p); },
        py::arg("p"), py::arg("target"), "target: classical, classical-d, g-form, quantum, zero-y or flags=1,3,4");
    m.def(
        "partial_flag",
        [](const std::vector<int>& w, const std::vector<int>& flags, const std::string& route) {
            if (route != "A" && route != "B") throw DomainError("route must be A or B");
            return partial_flag_specialize(perm(w), FlagProfile(flags), route == "A" ? FlagRoute::A : FlagRoute::B);
        },
        py::arg("w"), py::arg("flags"), py::arg("route") = "A");
    m.def(
        "locus",
        [](const std::vector<int>& w, const std::vector<int>& a, const std::vector<int>& b, bool interval_mode,
           std::optional<int> n) {
            const auto f = locus_formula(perm(w), RankProfile(a, b), interval_mode, n.value_or(-1));
            return to_text(f.value, f.namer());
        },
        py::arg("w"), py::arg("ranks_e"), py::arg("ranks_f"), py::arg("interval_mode") = false, py::arg("n") = py::none());
    m.def(
        "expand", [](const Polynomial& p, int n) { return expansion_dict(schubert_expand_M(MElement::from_polynomial(p, n))); },
        py::arg("p"), py::arg("n"));
    m.def("product_rule", [](int i, int j, int k) {
        const auto r = product_rule(i, j, k);
        py::list terms;
        for (const auto& t : r.right) terms.append(py::make_tuple(t.coeff, py::tuple(py::cast(t.w.word()))));
        py::dict out;
        out["left"] = r.left;
        out["right"] = terms;
        out["equal"] = r.equal;
        out["classical_ok"] = r.classical_ok;
        return out;
    });
    m.def(
        "search_row_determinant",
        [](const std::vector<int>& w, std::optional<int> n, bool all) {
            py::list out;
            for (const auto& match : row_determinant_search(perm(w), ambient(perm(w), n), all))
                out.append(py::make_tuple(match.sigma.word(), match.spec.a, match.spec.b));
            return out;
        },
        py::arg("w"), py::arg("n") = py::none(), py::arg("all") = false);
    m.def(
        "census", [](int n, int jobs) { return to_json(row_determinant_census(n, jobs)).dump(); }, py::arg("n") = 4, py::arg("jobs") = 1,
        "Census as a JSON string.");

    py::class_<RingContext>(m, "Ring")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &RingContext::n)
        .def("normal_form", [](const RingContext& r, const Polynomial& p) { return r.normal_form(p).to_polynomial(); })
        .def("schubert", [](const RingContext& r, const std::vector<int>& w) { return r.schubert(perm(w)); })
        .def("expand", [](const RingContext& r, const Polynomial& p) { return expansion_dict(r.schubert_expand(r.normal_form(p))); })
        .def("multiply_expand",
             [](const RingContext& r, const std::vector<int>& u, const std::vector<int>& v) {
                 return expansion_dict(r.multiply_expand(perm(u), perm(v)));
             })
        .def("inner_product", &RingContext::inner_product)
        .def("inner_product_via_top_class", &RingContext::inner_product_via_top_class)
        .def("omega", [](const RingContext& r, const Polynomial& p) { return omega(p, r.n()); });

    m.def(
        "check_orthogonality", [](int n, int jobs) { return report_dict(check_orthogonality(n, jobs)); }, py::arg("n"),
        py::arg("jobs") = 1);
    m.def("check_diagonal_vanishing", [](int n) { return report_dict(check_diagonal_vanishing(n)); });
}
