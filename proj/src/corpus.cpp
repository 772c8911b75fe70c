#include "rothcoss/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rothcoss/cossic.hpp"
#include "rothcoss/parse_error.hpp"
#include "rothcoss/polyhedra.hpp"

namespace rothcoss {

namespace {

using json = nlohmann::ordered_json;

constexpr unsigned kReportDigits = 30;
constexpr double kDiscrepancyTolerance = 1e-3;

const std::vector<std::pair<Selector, std::string_view>> kSelectorNames{
    {Selector::largest_true, "largest_true"},
    {Selector::smallest_true, "smallest_true"},
    {Selector::sum_two_true, "sum_two_true"},
    {Selector::difference_two_true, "difference_two_true"},
    {Selector::product_two_true, "product_two_true"},
    {Selector::single_positive, "single_positive"},
    {Selector::all_true, "all_true"},
};

const std::vector<std::pair<Target, std::string_view>> kTargetNames{
    {Target::circumdiameter, "circumdiameter"},
    {Target::edge, "edge"},
    {Target::edge_square_face, "edge_square_face"},
    {Target::pentagon_circumcircle_then_edge, "pentagon_circumcircle_then_edge"},
    {Target::roots_only, "roots_only"},
};

std::string selector_label(Selector s, const Rational& offset) {
    std::string out = to_string(s);
    if (offset.sign() > 0) {
        out += "+" + offset.to_string();
    } else if (offset.sign() < 0) {
        out += offset.to_string();
    }
    return out;
}

RadicalExpr as_expr(const QuadraticSurd& s) { return RadicalExpr::from(s.to_multisurd()); }

// Selected values (before the solid relation), or an explanation of why the
// roots do not fit the selector.
struct Selection {
    std::vector<QuadraticSurd> values;
    std::string error;
};

Selection select(const std::vector<QuadraticSurd>& roots, Selector s, const Rational& offset) {
    auto need = [&](std::size_t n, const char* what) -> std::optional<std::string> {
        if (roots.size() != n) {
            return std::string(what) + " needs exactly " + std::to_string(n) + " true root(s), found " +
                   std::to_string(roots.size());
        }
        return std::nullopt;
    };
    Selection out;
    switch (s) {
        case Selector::largest_true:
        case Selector::smallest_true:
            if (roots.empty()) {
                out.error = "no true root";
                return out;
            }
            out.values.push_back(s == Selector::largest_true ? roots.back() : roots.front());
            break;
        case Selector::sum_two_true:
        case Selector::difference_two_true:
        case Selector::product_two_true:
            if (const auto e = need(2, "selector")) {
                out.error = *e;
                return out;
            }
            if (s == Selector::sum_two_true) {
                out.values.push_back(roots[1] + roots[0]);
            } else if (s == Selector::difference_two_true) {
                out.values.push_back(roots[1] - roots[0]);
            } else {
                out.values.push_back(roots[1] * roots[0]);
            }
            break;
        case Selector::single_positive:
            if (const auto e = need(1, "selector")) {
                out.error = *e;
                return out;
            }
            out.values.push_back(roots.front());
            break;
        case Selector::all_true:
            if (roots.empty()) {
                out.error = "no true root";
                return out;
            }
            out.values = roots;
            break;
    }
    for (auto& v : out.values) {
        v = v + QuadraticSurd(offset);
    }
    return out;
}

std::vector<RadicalExpr> derive(const Problem& p, const std::vector<QuadraticSurd>& selected) {
    std::vector<RadicalExpr> out;
    if (p.target == Target::roots_only) {
        for (const auto& v : selected) {
            out.push_back(as_expr(v));
        }
        return out;
    }
    const SolidSpec& solid = find_solid(*p.solid);
    const RadicalExpr v = as_expr(selected.front());
    switch (p.target) {
        case Target::circumdiameter:
            out.push_back(circumdiameter_from_edge(solid, v));
            break;
        case Target::edge:
            out.push_back(edge_from_circumdiameter(solid, v));
            break;
        case Target::edge_square_face: {
            const RadicalExpr d1 = edge_from_circumdiameter(solid, v);
            out.push_back(d1);
            for (const auto& rel : solid.edge_relations) {
                out.push_back(simplify(d1 * rel.factor));
            }
            break;
        }
        case Target::pentagon_circumcircle_then_edge: {
            // v = 2r with r the circumradius of a pentagon of side d
            const RadicalExpr r = v / RadicalExpr(2);
            const RadicalExpr d = simplify(r * sqrt(RadicalExpr::parse("(5-sqrt(5))/2")));
            out.push_back(circumdiameter_from_edge(solid, d));
            break;
        }
        case Target::roots_only:
            break;
    }
    return out;
}

struct Match {
    bool ok = false;
    bool exact = true;
};

Match values_equal(const RadicalExpr& a, const RadicalExpr& b) {
    const Comparison c = radical_equals(a, b);
    if (c.outcome == Equality::equal) {
        return {true, c.exact};
    }
    if (c.outcome == Equality::unequal) {
        return {false, c.exact};
    }
    // Undecided: equal to the numeric threshold counts as a numeric match.
    const Interval diff = (a - b).enclose(96);
    const Rational bound(BigInt(1), BigInt("100000000000000000000"));
    const bool close = diff.lower() > -bound && diff.upper() < bound;
    return {close, false};
}

// Pairs (derived, roth) to compare; roots_only matches each Roth value with
// the derived value it equals.
std::vector<std::pair<RadicalExpr, RadicalExpr>> pairing(const Problem& p, const std::vector<RadicalExpr>& derived,
                                                         const std::vector<RadicalExpr>& roth) {
    std::vector<std::pair<RadicalExpr, RadicalExpr>> pairs;
    if (derived.empty()) {
        return pairs;
    }
    if (p.target == Target::roots_only) {
        for (const auto& r : roth) {
            const RadicalExpr* best = &derived.front();
            for (const auto& d : derived) {
                if (values_equal(d, r).ok) {
                    best = &d;
                    break;
                }
            }
            pairs.emplace_back(*best, r);
        }
        return pairs;
    }
    for (std::size_t i = 0; i < roth.size(); ++i) {
        pairs.emplace_back(derived.size() == roth.size() ? derived[i] : derived.front(), roth[i]);
    }
    return pairs;
}

Match all_equal(const std::vector<std::pair<RadicalExpr, RadicalExpr>>& pairs) {
    Match m{!pairs.empty(), true};
    for (const auto& [d, r] : pairs) {
        const Match one = values_equal(d, r);
        m.ok = m.ok && one.ok;
        m.exact = m.exact && one.exact;
        if (!m.ok) {
            break;
        }
    }
    return m;
}

std::vector<std::pair<Selector, Rational>> alternates(Selector s, const Rational& offset) {
    std::vector<std::pair<Selector, Rational>> out;
    if (s == Selector::sum_two_true) {
        out.emplace_back(Selector::difference_two_true, offset);
    } else if (s == Selector::difference_two_true) {
        out.emplace_back(Selector::sum_two_true, offset);
    }
    if (!offset.is_zero()) {
        out.emplace_back(s, -offset);
    }
    if (s == Selector::largest_true) {
        out.emplace_back(Selector::smallest_true, offset);
    } else if (s == Selector::smallest_true) {
        out.emplace_back(Selector::largest_true, offset);
    }
    return out;
}

ValueReport value_report(const RadicalExpr& e) { return {e.to_string(), to_significant(e, kReportDigits)}; }

Verdict verdict(VerdictKind k, std::string detail = {}) { return Verdict{k, std::move(detail)}; }

void finish_report(VerificationReport& r) { r.matches_expected = r.verdict.matches(r.expected_verdict); }

const json& require(const json& obj, const char* field, const std::string& id) {
    if (!obj.contains(field)) {
        throw CorpusError(id, field, "missing field");
    }
    return obj.at(field);
}

std::string require_string(const json& obj, const char* field, const std::string& id) {
    const json& v = require(obj, field, id);
    if (!v.is_string()) {
        throw CorpusError(id, field, "expected a string");
    }
    return v.get<std::string>();
}

Rational json_rational(const json& v, const std::string& id, const char* field) {
    try {
        if (v.is_number_integer()) {
            return Rational(v.get<long>());
        }
        if (v.is_string()) {
            return Rational::parse(v.get<std::string>());
        }
    } catch (const std::exception& e) {
        throw CorpusError(id, field, e.what());
    }
    throw CorpusError(id, field, "expected an integer or a rational string");
}

Problem parse_problem(const json& obj, std::size_t index) {
    if (!obj.is_object()) {
        throw CorpusError("#" + std::to_string(index), "", "problem must be an object");
    }
    Problem p;
    p.id = require_string(obj, "id", "#" + std::to_string(index));
    p.equation = require_string(obj, "equation", p.id);
    if (obj.contains("polygonal_n") && !obj.at("polygonal_n").is_null()) {
        const Rational n = json_rational(obj.at("polygonal_n"), p.id, "polygonal_n");
        if (!n.is_integer() || n < Rational(3)) {
            throw CorpusError(p.id, "polygonal_n", "must be an integer >= 3");
        }
        p.polygonal_n = n.numerator();
    }
    if (obj.contains("scale")) {
        const Rational s = json_rational(obj.at("scale"), p.id, "scale");
        if (!s.is_integer() || s < Rational(1)) {
            throw CorpusError(p.id, "scale", "must be a positive integer");
        }
        p.scale = s.numerator();
    }
    try {
        p.selector = parse_selector(require_string(obj, "selector", p.id));
    } catch (const std::invalid_argument& e) {
        throw CorpusError(p.id, "selector", e.what());
    }
    if (obj.contains("selector_offset")) {
        p.selector_offset = json_rational(obj.at("selector_offset"), p.id, "selector_offset");
    }
    if (obj.contains("solid") && !obj.at("solid").is_null()) {
        p.solid = require_string(obj, "solid", p.id);
        try {
            (void)find_solid(*p.solid);
        } catch (const UnknownSolid&) {
            throw CorpusError(p.id, "solid", "unknown solid id '" + *p.solid + "'");
        }
    }
    try {
        p.target = parse_target(require_string(obj, "target", p.id));
    } catch (const std::invalid_argument& e) {
        throw CorpusError(p.id, "target", e.what());
    }
    const json& roth = require(obj, "roth_solution", p.id);
    if (roth.is_string()) {
        p.roth_solution.push_back(roth.get<std::string>());
    } else if (roth.is_array() && !roth.empty()) {
        for (const auto& r : roth) {
            if (!r.is_string()) {
                throw CorpusError(p.id, "roth_solution", "expected strings");
            }
            p.roth_solution.push_back(r.get<std::string>());
        }
    } else {
        throw CorpusError(p.id, "roth_solution", "expected a string or a nonempty array of strings");
    }
    for (const auto& r : p.roth_solution) {
        try {
            (void)RadicalExpr::parse(r);
        } catch (const ParseError& e) {
            throw CorpusError(p.id, "roth_solution", e.what());
        }
    }
    p.expected_verdict = require_string(obj, "expected_verdict", p.id);
    if (obj.contains("patches")) {
        for (const auto& patch : obj.at("patches")) {
            Patch pt;
            pt.field = require_string(patch, "field", p.id);
            pt.original = require_string(patch, "original", p.id);
            pt.corrected = require_string(patch, "corrected", p.id);
            pt.citation = patch.value("citation", "");
            if (pt.field != "equation") {
                throw CorpusError(p.id, "patches", "only equation patches are supported, got '" + pt.field + "'");
            }
            p.patches.push_back(std::move(pt));
        }
    }
    p.notes = obj.value("notes", "");

    if ((p.target == Target::roots_only) == p.solid.has_value()) {
        throw CorpusError(p.id, "solid", p.solid ? "roots_only problems take no solid" : "target needs a solid");
    }
    if (p.solid && !find_solid(*p.solid).ratio_sq_expr) {
        throw CorpusError(p.id, "solid", "solid '" + *p.solid + "' has no ratio");
    }
    if (p.target == Target::edge_square_face && find_solid(*p.solid).edge_relations.empty()) {
        throw CorpusError(p.id, "target", "edge_square_face needs a solid with edge relations");
    }
    std::string equation;
    try {
        equation = patched_equation(p);
    } catch (const std::invalid_argument& e) {
        throw CorpusError(p.id, "patches", e.what());
    }
    try {
        const CossicEquation eq = parse_equation(equation);
        if (eq.polygonal_n != p.polygonal_n) {
            throw CorpusError(p.id, "polygonal_n", "does not match the equation's ngon wrapper");
        }
    } catch (const ParseError& e) {
        throw CorpusError(p.id, "equation", e.what());
    }
    return p;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += (i == 0 ? "" : std::string(sep)) + items[i];
    }
    return out;
}

}  // namespace

std::string to_string(Selector s) {
    for (const auto& [k, name] : kSelectorNames) {
        if (k == s) {
            return std::string(name);
        }
    }
    return "?";
}

std::string to_string(Target t) {
    for (const auto& [k, name] : kTargetNames) {
        if (k == t) {
            return std::string(name);
        }
    }
    return "?";
}

Selector parse_selector(std::string_view name) {
    for (const auto& [k, n] : kSelectorNames) {
        if (n == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown selector '" + std::string(name) + "'");
}

Target parse_target(std::string_view name) {
    for (const auto& [k, n] : kTargetNames) {
        if (n == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown target '" + std::string(name) + "'");
}

CorpusError::CorpusError(const std::string& problem_id, const std::string& field, const std::string& message)
    : std::runtime_error(problem_id + (field.empty() ? "" : "." + field) + ": " + message),
      problem_id_(problem_id),
      field_(field) {}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::confirmed:
            return "confirmed";
        case VerdictKind::equation_erroneous:
            return "equation_erroneous";
        case VerdictKind::solution_scaled:
            return "solution_scaled";
        case VerdictKind::selector_mismatch:
            return "selector_mismatch";
        case VerdictKind::solution_erroneous:
            return "solution_erroneous";
        case VerdictKind::numeric_discrepancy:
            return "numeric_discrepancy";
    }
    return "?";
}

std::string Verdict::to_string() const {
    const std::string name = rothcoss::to_string(kind);
    return detail.empty() ? name : name + "(" + detail + ")";
}

bool Verdict::matches(std::string_view expected) const {
    const auto open = expected.find('(');
    const std::string_view name = expected.substr(0, open);
    if (name != rothcoss::to_string(kind)) {
        return false;
    }
    if (open == std::string_view::npos) {
        return true;
    }
    if (expected.back() != ')') {
        return false;
    }
    return expected.substr(open + 1, expected.size() - open - 2) == detail;
}

std::string patched_equation(const Problem& p) {
    std::string text = p.equation;
    for (const auto& patch : p.patches) {
        const auto at = text.find(patch.original);
        if (at == std::string::npos || text.find(patch.original, at + 1) != std::string::npos) {
            throw std::invalid_argument("patch text '" + patch.original + "' must occur exactly once");
        }
        text.replace(at, patch.original.size(), patch.corrected);
    }
    return text;
}

VerificationReport verify(const Problem& p, const VerifyOptions& options) {
    VerificationReport r;
    r.id = p.id;
    r.expected_verdict = p.expected_verdict;
    r.selector = selector_label(p.selector, p.selector_offset);
    r.equation = options.apply_patches ? patched_equation(p) : p.equation;
    if (options.apply_patches) {
        for (const auto& patch : p.patches) {
            r.notes.push_back("patch applied: '" + patch.original + "' -> '" + patch.corrected + "' (" +
                              patch.citation + ")");
        }
    }
    for (const auto& text : p.roth_solution) {
        r.roth.push_back(value_report(RadicalExpr::parse(text)));
    }
    const char variable = p.scale > 1 ? 'z' : 'x';

    const StandardForm sf = standard_form(parse_equation(r.equation));
    if (sf.degenerate) {
        r.verdict = verdict(VerdictKind::equation_erroneous, "standard_form");
        finish_report(r);
        return r;
    }
    Polynomial poly = sf.polynomial;
    if (p.scale > 1) {
        poly = scale_substitute(poly, p.scale);
        r.notes.push_back("substitution x = z/" + p.scale.get_str());
    }
    r.standard_form = poly.to_string(variable);
    if (!poly.has_integer_coefficients()) {
        r.verdict = verdict(VerdictKind::equation_erroneous, "standard_form");
        r.notes.push_back("standard form has non-integer coefficients");
        finish_report(r);
        return r;
    }

    Factorization factorization;
    try {
        factorization = factor_completely(poly);
    } catch (const NotFullyFactorable& e) {
        r.factorization_error = e.residual().to_string(variable) + " has no integer factor of degree <= 2";
        r.notes.push_back("sign variations of the residual: " + std::to_string(e.sign_variations()));
        if (!e.partial().factors.empty()) {
            r.notes.push_back("factors found: " + e.partial().to_string(variable));
        }
        r.verdict = verdict(VerdictKind::equation_erroneous, "factorization");
        finish_report(r);
        return r;
    }
    r.factorization = factorization.to_string(variable);

    std::vector<QuadraticSurd> roots;
    for (const auto& root : true_roots(factorization)) {
        for (unsigned i = 0; i < root.multiplicity; ++i) {
            roots.push_back(root.value / QuadraticSurd(Rational(p.scale)));
        }
    }
    for (const auto& root : roots) {
        r.true_roots.push_back(root.to_string());
    }

    const std::vector<RadicalExpr> roth = [&] {
        std::vector<RadicalExpr> out;
        for (const auto& text : p.roth_solution) {
            out.push_back(RadicalExpr::parse(text));
        }
        return out;
    }();

    const Selection selection = select(roots, p.selector, p.selector_offset);
    if (!selection.error.empty()) {
        r.notes.push_back(selection.error);
        r.verdict = verdict(VerdictKind::equation_erroneous, "selection");
        finish_report(r);
        return r;
    }
    std::vector<std::string> selected;
    for (const auto& v : selection.values) {
        selected.push_back(v.to_string());
    }
    r.selected = join(selected, ", ");
    const std::vector<RadicalExpr> derived = derive(p, selection.values);
    for (const auto& d : derived) {
        r.derived.push_back(value_report(d));
    }

    const auto pairs = pairing(p, derived, roth);
    if (const Match m = all_equal(pairs); m.ok) {
        r.comparison = m.exact ? "exact" : "numeric";
        r.verdict = verdict(VerdictKind::confirmed);
        finish_report(r);
        return r;
    }

    for (const auto& [alt, offset] : alternates(p.selector, p.selector_offset)) {
        const Selection s = select(roots, alt, offset);
        if (!s.error.empty()) {
            continue;
        }
        const auto alt_derived = derive(p, s.values);
        if (const Match m = all_equal(pairing(p, alt_derived, roth)); m.ok) {
            r.comparison = m.exact ? "exact" : "numeric";
            r.notes.push_back("Roth's value follows from selector " + selector_label(alt, offset));
            r.verdict = verdict(VerdictKind::selector_mismatch, selector_label(alt, offset));
            finish_report(r);
            return r;
        }
    }

    std::optional<Rational> common_ratio;
    bool scaled = !pairs.empty();
    for (const auto& [d, rv] : pairs) {
        const auto q = exact_rational(rv / d);
        if (!q || (common_ratio && *common_ratio != *q)) {
            scaled = false;
            break;
        }
        common_ratio = q;
    }
    if (scaled && *common_ratio != Rational(1)) {
        r.comparison = "exact";
        r.notes.push_back("Roth's value is exactly " + common_ratio->to_string() + " times the derived value");
        r.verdict = verdict(VerdictKind::solution_scaled, common_ratio->to_string());
        finish_report(r);
        return r;
    }

    double worst = 0;
    std::string worst_delta = "0";
    for (const auto& [d, rv] : pairs) {
        const RadicalExpr delta = rv - d;
        const double rel = std::abs(delta.enclose(64).midpoint_double() / d.enclose(64).midpoint_double());
        if (rel >= worst) {
            worst = rel;
            worst_delta = to_significant(delta, 3);
        }
    }
    r.comparison = "numeric";
    std::ostringstream rel;
    rel.precision(3);
    rel << worst;
    r.notes.push_back("largest relative difference " + rel.str());
    r.verdict = worst <= kDiscrepancyTolerance ? verdict(VerdictKind::numeric_discrepancy, worst_delta)
                                               : verdict(VerdictKind::solution_erroneous);
    finish_report(r);
    return r;
}

std::vector<Correction> suggest_correction(const Polynomial& p, const Polynomial& required,
                                           std::optional<std::pair<unsigned, unsigned>> positions) {
    if (!required.is_monic() || required.degree() != 2u) {
        throw std::invalid_argument("required factor must be a monic quadratic");
    }
    if (p.is_zero() || *p.degree() < 2) {
        throw std::invalid_argument("polynomial must have degree >= 2");
    }
    const unsigned n = *p.degree();
    // x^k mod required = u_k x + v_k
    std::vector<std::pair<Rational, Rational>> basis;
    for (unsigned k = 0; k < n; ++k) {
        const Polynomial rem = divide(Polynomial::monomial(1, k), required).remainder;
        basis.emplace_back(rem.coefficient(1), rem.coefficient(0));
    }
    const Polynomial rem = divide(p, required).remainder;
    const Rational t1 = -rem.coefficient(1);
    const Rational t0 = -rem.coefficient(0);

    auto make = [&](std::vector<std::pair<unsigned, Rational>> adj) {
        Correction c{p, {}, Rational(0)};
        for (const auto& [k, a] : adj) {
            if (a.is_zero()) {
                continue;
            }
            c.polynomial += Polynomial::monomial(a, k);
            c.adjustments.emplace_back(k, a);
            c.total += a.abs();
        }
        return c;
    };

    std::vector<std::pair<unsigned, unsigned>> pairs;
    if (positions) {
        if (positions->first >= n || positions->second >= n || positions->first == positions->second) {
            throw std::invalid_argument("positions must be two distinct non-leading coefficient indices");
        }
        pairs.push_back(*positions);
    } else {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                pairs.emplace_back(i, j);
            }
        }
    }

    std::vector<Correction> out;
    for (const auto& [i, j] : pairs) {
        const auto& [ui, vi] = basis[i];
        const auto& [uj, vj] = basis[j];
        const Rational det = ui * vj - uj * vi;
        if (!det.is_zero()) {
            const Rational ai = (t1 * vj - uj * t0) / det;
            const Rational aj = (ui * t0 - t1 * vi) / det;
            out.push_back(make({{i, ai}, {j, aj}}));
            continue;
        }
        // Dependent columns: a single coefficient may still work.
        std::optional<Correction> best;
        for (const auto& [k, u, v] : {std::tuple{i, ui, vi}, std::tuple{j, uj, vj}}) {
            std::optional<Rational> a;
            if (!u.is_zero()) {
                a = t1 / u;
            } else if (!v.is_zero()) {
                a = t0 / v;
            } else if (t1.is_zero() && t0.is_zero()) {
                a = Rational(0);
            }
            if (a && *a * u == t1 && *a * v == t0) {
                Correction c = make({{k, *a}});
                if (!best || c.total < best->total) {
                    best = std::move(c);
                }
            }
        }
        if (best) {
            out.push_back(std::move(*best));
        }
    }
    for (const auto& c : out) {
        if (!divide(c.polynomial, required).remainder.is_zero()) {
            throw std::logic_error("correction is not divisible by the required factor");
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const Correction& a, const Correction& b) { return a.total < b.total; });
    // Several pairs can give the same polynomial (zero adjustments); keep the first.
    std::vector<Correction> unique;
    for (auto& c : out) {
        const bool seen = std::any_of(unique.begin(), unique.end(),
                                      [&](const Correction& u) { return u.polynomial == c.polynomial; });
        if (!seen) {
            unique.push_back(std::move(c));
        }
    }
    return unique;
}

bool in_correction_family(const Polynomial& p, const Polynomial& required, const std::vector<unsigned>& positions,
                          const Polynomial& candidate) {
    const unsigned n = std::max(p.is_zero() ? 0u : *p.degree(), candidate.is_zero() ? 0u : *candidate.degree());
    for (unsigned k = 0; k <= n; ++k) {
        const bool free = std::find(positions.begin(), positions.end(), k) != positions.end();
        if (!free && p.coefficient(k) != candidate.coefficient(k)) {
            return false;
        }
    }
    return divide(candidate, required).remainder.is_zero();
}

Corpus parse_corpus(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw CorpusError("", "", std::string("invalid JSON: ") + e.what());
    }
    const json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("problems")) {
            throw CorpusError("", "problems", "missing field");
        }
        list = &doc.at("problems");
    }
    if (!list->is_array()) {
        throw CorpusError("", "problems", "expected an array of problems");
    }
    Corpus corpus;
    std::map<std::string, bool> seen;
    for (std::size_t i = 0; i < list->size(); ++i) {
        Problem p = parse_problem(list->at(i), i);
        if (seen[p.id]) {
            throw CorpusError(p.id, "id", "duplicate id");
        }
        seen[p.id] = true;
        corpus.problems.push_back(std::move(p));
    }
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::filesystem::path resolved = path;
    if (!std::filesystem::exists(resolved)) {
        std::filesystem::path with_ext = path;
        with_ext += ".json";
        if (std::filesystem::exists(with_ext)) {
            resolved = with_ext;
        }
    }
    std::ifstream in(resolved);
    if (!in) {
        throw std::runtime_error("cannot read corpus file " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_corpus(text.str());
}

bool CorpusRun::all_expected() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.matches_expected; });
}

CorpusRun run_corpus(const Corpus& corpus, const VerifyOptions& options) {
    CorpusRun run;
    for (const auto& p : corpus.problems) {
        run.reports.push_back(verify(p, options));
    }
    return run;
}

CorpusRun run_corpus(const std::filesystem::path& path, const VerifyOptions& options) {
    return run_corpus(load_corpus(path), options);
}

std::string summary_table(const CorpusRun& run) {
    std::ostringstream out;
    out << "| id | verdict | expected | ok |\n|---|---|---|---|\n";
    std::map<std::string, int> counts;
    int matched = 0;
    for (const auto& r : run.reports) {
        out << "| " << r.id << " | " << r.verdict.to_string() << " | " << r.expected_verdict << " | "
            << (r.matches_expected ? "yes" : "NO") << " |\n";
        ++counts[to_string(r.verdict.kind)];
        matched += r.matches_expected ? 1 : 0;
    }
    out << "\n";
    for (const auto& [kind, n] : counts) {
        out << "- " << kind << ": " << n << "\n";
    }
    out << "\n" << matched << "/" << run.reports.size() << " verdicts as expected\n";
    return out.str();
}

std::string markdown_report(const CorpusRun& run) {
    std::ostringstream out;
    out << "# Verification report\n\n" << summary_table(run);
    for (const auto& r : run.reports) {
        out << "\n## " << r.id << "\n\n";
        out << "- equation: `" << r.equation << "`\n";
        if (!r.standard_form.empty()) {
            out << "- standard form: `" << r.standard_form << " = 0`\n";
        }
        if (r.factorization) {
            out << "- factorization: `" << *r.factorization << "`\n";
        }
        if (r.factorization_error) {
            out << "- factorization: fails, " << *r.factorization_error << "\n";
        }
        if (!r.true_roots.empty()) {
            out << "- true roots: `" << join(r.true_roots, "`, `") << "`\n";
        }
        out << "- selector: " << r.selector << "\n";
        if (r.selected) {
            out << "- selected: `" << *r.selected << "`\n";
        }
        for (const auto& d : r.derived) {
            out << "- derived: `" << d.expression << "` = " << d.decimal << "\n";
        }
        for (const auto& v : r.roth) {
            out << "- Roth: `" << v.expression << "` = " << v.decimal << "\n";
        }
        out << "- verdict: **" << r.verdict.to_string() << "**";
        if (!r.comparison.empty()) {
            out << " (" << r.comparison << ")";
        }
        out << ", expected " << r.expected_verdict << "\n";
        for (const auto& n : r.notes) {
            out << "- note: " << n << "\n";
        }
    }
    return out.str();
}

std::string json_report(const CorpusRun& run) {
    json doc;
    json reports = json::array();
    std::map<std::string, int> counts;
    for (const auto& r : run.reports) {
        json j;
        j["id"] = r.id;
        j["equation"] = r.equation;
        j["standard_form"] = r.standard_form;
        j["factorization"] = r.factorization ? json(*r.factorization) : json(nullptr);
        j["factorization_error"] = r.factorization_error ? json(*r.factorization_error) : json(nullptr);
        j["true_roots"] = r.true_roots;
        j["selector"] = r.selector;
        j["selected"] = r.selected ? json(*r.selected) : json(nullptr);
        auto values = [](const std::vector<ValueReport>& vs) {
            json a = json::array();
            for (const auto& v : vs) {
                a.push_back({{"expression", v.expression}, {"decimal", v.decimal}});
            }
            return a;
        };
        j["derived"] = values(r.derived);
        j["roth"] = values(r.roth);
        j["comparison"] = r.comparison;
        j["verdict"] = r.verdict.to_string();
        j["expected_verdict"] = r.expected_verdict;
        j["matches_expected"] = r.matches_expected;
        j["notes"] = r.notes;
        reports.push_back(std::move(j));
        ++counts[to_string(r.verdict.kind)];
    }
    doc["reports"] = std::move(reports);
    doc["summary"] = {{"total", run.reports.size()}, {"counts", counts}, {"all_expected", run.all_expected()}};
    return doc.dump(2) + "\n";
}

}  // namespace rothcoss
