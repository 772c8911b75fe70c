#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rothcoss/corpus.hpp"
#include "rothcoss/cossic.hpp"
#include "rothcoss/factorizer.hpp"
#include "rothcoss/parse_error.hpp"
#include "rothcoss/polyhedra.hpp"
#include "rothcoss/radical_expr.hpp"

namespace py = pybind11;
using namespace rothcoss;

namespace {

std::string factor(const std::string& text, unsigned scale, std::optional<std::string> bound) {
    Polynomial p = parse_polynomial(text);
    char variable = 'x';
    if (scale > 1) {
        p = scale_substitute(p, BigInt(scale));
        variable = 'z';
    }
    std::optional<BigInt> b;
    if (bound) {
        b = BigInt(*bound);
    }
    return factor_completely(p, b).to_string(variable);
}

std::string standard_form_text(const std::string& equation) {
    const StandardForm sf = standard_form(parse_equation(equation));
    return sf.degenerate ? "0" : sf.polynomial.to_string();
}

std::string evaluate(const std::string& text, unsigned digits) {
    const RadicalExpr e = RadicalExpr::parse(text);
    if (const auto q = exact_rational(e)) {
        return q->to_string();
    }
    return to_significant(e, digits);
}

std::optional<std::string> denest_text(const std::string& text) {
    const RadicalExpr e = RadicalExpr::parse(text);
    if (e.contains_cbrt()) {
        return std::nullopt;
    }
    const auto v = exact_value(e);
    if (!v || !v->value) {
        return std::nullopt;
    }
    return canonical_expr(*v).to_string();
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["id"] = r.id;
    d["equation"] = r.equation;
    d["standard_form"] = r.standard_form;
    d["factorization"] = r.factorization;
    d["true_roots"] = r.true_roots;
    d["selected"] = r.selected;
    py::list derived;
    for (const auto& v : r.derived) {
        derived.append(py::make_tuple(v.expression, v.decimal));
    }
    d["derived"] = derived;
    py::list roth;
    for (const auto& v : r.roth) {
        roth.append(py::make_tuple(v.expression, v.decimal));
    }
    d["roth"] = roth;
    d["verdict"] = r.verdict.to_string();
    d["expected_verdict"] = r.expected_verdict;
    d["matches_expected"] = r.matches_expected;
    d["notes"] = r.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_rothcoss, m) {
    m.doc() = "Exact verification of cossic equations and polyhedron measurements";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<NotFullyFactorable>(m, "NotFullyFactorable", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnknownSolid>(m, "UnknownSolid", PyExc_KeyError);
    py::register_exception<CorpusError>(m, "CorpusError", PyExc_ValueError);

    m.def("factor", &factor, py::arg("polynomial"), py::arg("scale") = 1u, py::arg("bound") = py::none(),
          "Canonical factorization of a monic integer polynomial, in z when scale > 1.");
    m.def("standard_form", &standard_form_text, py::arg("equation"),
          "Monic standard form of a cossic equation.");
    m.def(
        "canonical_equation", [](const std::string& text) { return print_equation(parse_equation(text)); },
        py::arg("equation"));
    m.def("evaluate", &evaluate, py::arg("expression"), py::arg("digits") = 30u,
          "Certified decimal with the given number of significant digits.");
    m.def("denest", &denest_text, py::arg("expression"), "Simplified form, or None.");
    m.def(
        "radical_equals",
        [](const std::string& a, const std::string& b) {
            return to_string(radical_equals(RadicalExpr::parse(a), RadicalExpr::parse(b)).outcome);
        },
        py::arg("a"), py::arg("b"));
    m.def("solid_ids", &solid_ids);
    m.def(
        "circumdiameter",
        [](const std::string& id, const std::string& edge) {
            return circumdiameter_from_edge(find_solid(id), RadicalExpr::parse(edge)).to_string();
        },
        py::arg("solid"), py::arg("edge"));
    m.def(
        "edge",
        [](const std::string& id, const std::string& diameter) {
            return edge_from_circumdiameter(find_solid(id), RadicalExpr::parse(diameter)).to_string();
        },
        py::arg("solid"), py::arg("diameter"));
    m.def(
        "verify_corpus",
        [](const std::string& path, bool apply_patches) {
            const CorpusRun run = run_corpus(std::filesystem::path(path), VerifyOptions{apply_patches});
            py::list out;
            for (const auto& r : run.reports) {
                out.append(report_dict(r));
            }
            return out;
        },
        py::arg("path"), py::arg("apply_patches") = true);
    m.def(
        "report",
        [](const std::string& path, const std::string& format) {
            const CorpusRun run = run_corpus(std::filesystem::path(path));
            if (format == "json") {
                return json_report(run);
            }
            if (format == "md") {
                return markdown_report(run);
            }
            throw py::value_error("format must be 'md' or 'json'");
        },
        py::arg("path"), py::arg("format") = "md");
}
