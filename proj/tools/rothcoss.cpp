#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rothcoss/corpus.hpp"
#include "rothcoss/cossic.hpp"
#include "rothcoss/factorizer.hpp"
#include "rothcoss/parse_error.hpp"
#include "rothcoss/polyhedra.hpp"
#include "rothcoss/radical_expr.hpp"

namespace {

using namespace rothcoss;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kMathFailure = 2;

std::string value_string(const RadicalExpr& e, unsigned digits) {
    if (const auto q = exact_rational(e)) {
        return q->to_string();
    }
    return to_significant(e, digits);
}

int cmd_factor(const std::string& text, const std::optional<std::string>& bound, unsigned scale) {
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
    try {
        std::cout << factor_completely(p, b).to_string(variable) << "\n";
    } catch (const NotFullyFactorable& e) {
        std::cerr << "not fully factorable: " << e.residual().to_string(variable)
                  << " has no integer factor of degree <= 2 (" << e.sign_variations()
                  << " sign variation(s))\n";
        if (!e.partial().factors.empty()) {
            std::cerr << "factors found: " << e.partial().to_string(variable) << "\n";
        }
        return kMathFailure;
    }
    return kOk;
}

int cmd_parse(const std::string& text) {
    const CossicEquation eq = parse_equation(text);
    const ExpandedEquation sides = expand_to_polynomial(eq);
    std::cout << "canonical: " << print_equation(eq) << "\n";
    if (eq.polygonal_n) {
        std::cout << "polygonal: " << *eq.polygonal_n << "-gonal root of " << sides.lhs.to_string() << "\n";
    } else {
        std::cout << "expanded: " << sides.lhs.to_string() << " = " << sides.rhs.to_string() << "\n";
    }
    const StandardForm sf = standard_form(eq);
    if (sf.degenerate) {
        std::cout << "standard form: degenerate\n";
    } else {
        std::cout << "standard form: " << sf.polynomial.to_string() << " = 0\n";
    }
    return kOk;
}

int cmd_verify(const std::string& path, const std::optional<std::string>& id, bool no_patches) {
    Corpus corpus = load_corpus(path);
    if (id) {
        std::erase_if(corpus.problems, [&](const Problem& p) { return p.id != *id; });
        if (corpus.problems.empty()) {
            std::cerr << "error: no problem with id '" << *id << "'\n";
            return kError;
        }
    }
    VerifyOptions options;
    options.apply_patches = !no_patches;
    const CorpusRun run = run_corpus(corpus, options);
    if (id) {
        std::cout << markdown_report(run);
    } else {
        std::cout << summary_table(run);
    }
    return run.all_expected() ? kOk : kMathFailure;
}

int cmd_solid(const std::string& id, const std::optional<std::string>& edge,
              const std::optional<std::string>& diameter, unsigned digits) {
    const SolidSpec& s = find_solid(id);
    std::cout << "id: " << s.id << "\n";
    std::cout << "faces: " << face_vector(s) << "\n";
    if (!s.historical_name.empty()) {
        std::cout << "historical name: " << s.historical_name << "\n";
    }
    std::cout << "name: " << s.modern_name << "\n";
    std::cout << "ratio kind: " << to_string(s.kind) << "\n";
    if (s.ratio_sq_expr) {
        std::cout << "(2rho/" << s.reference_edge << ")^2 = " << s.ratio_sq_expr->to_string() << " ~ "
                  << value_string(*s.ratio_sq_expr, digits) << "\n";
    }
    for (const auto& rel : s.edge_relations) {
        std::cout << rel.edge << " = " << rel.factor.to_string() << " * " << s.reference_edge << " ("
                  << rel.description << ")\n";
    }
    if (!s.notes.empty()) {
        std::cout << "notes: " << s.notes << "\n";
    }
    if (edge) {
        const RadicalExpr d = circumdiameter_from_edge(s, RadicalExpr::parse(*edge));
        std::cout << "diameter: " << d.to_string() << " = " << value_string(d, digits) << "\n";
    }
    if (diameter) {
        const RadicalExpr d = edge_from_circumdiameter(s, RadicalExpr::parse(*diameter));
        std::cout << "edge: " << d.to_string() << " = " << value_string(d, digits) << "\n";
    }
    return kOk;
}

int cmd_eval(const std::string& text, unsigned digits) {
    std::cout << value_string(RadicalExpr::parse(text), digits) << "\n";
    return kOk;
}

int cmd_denest(const std::string& text) {
    const RadicalExpr e = RadicalExpr::parse(text);
    const auto v = e.contains_cbrt() ? std::nullopt : exact_value(e);
    if (!v || !v->value) {
        std::cout << "not denestable\n";
        return kOk;
    }
    std::cout << canonical_expr(*v).to_string() << "\n";
    return kOk;
}

int cmd_report(const std::string& path, const std::string& format, const std::optional<std::string>& output) {
    const CorpusRun run = run_corpus(load_corpus(path));
    const std::string text = format == "json" ? json_report(run) : markdown_report(run);
    if (output) {
        std::ofstream out(*output);
        if (!out) {
            std::cerr << "error: cannot write " << *output << "\n";
            return kError;
        }
        out << text;
    } else {
        std::cout << text;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of cossic equations and solid measurements"};
    app.require_subcommand(1);

    std::string text;
    std::optional<std::string> bound;
    unsigned scale = 1;
    auto* factor = app.add_subcommand("factor", "Factor a monic integer polynomial");
    factor->add_option("polynomial", text, "Polynomial in x, e.g. x^2-5x+6")->required();
    factor->add_option("--bound", bound, "Only try quadratic constants up to this absolute value");
    factor->add_option("--scale", scale, "Substitute x = z/scale first")->check(CLI::PositiveNumber);

    auto* parse = app.add_subcommand("parse", "Parse a cossic equation");
    parse->add_option("equation", text, "Equation, e.g. \"1Z = 5R - 6\"")->required();

    std::string corpus = "corpus/roth1608";
    std::optional<std::string> id;
    bool no_patches = false;
    auto* verify = app.add_subcommand("verify", "Verify corpus problems against their expected verdicts");
    verify->add_option("--corpus", corpus, "Corpus file")->capture_default_str();
    verify->add_option("--id", id, "Only this problem, with its full report");
    verify->add_flag("--no-patches", no_patches, "Ignore documented errata");

    std::string solid_id;
    std::optional<std::string> edge;
    std::optional<std::string> diameter;
    unsigned digits = 30;
    auto* solid = app.add_subcommand("solid", "Show a solid and convert between edge and circumdiameter");
    solid->add_option("id", solid_id, "Solid id")->required();
    auto* edge_opt = solid->add_option("--edge", edge, "Edge length expression");
    solid->add_option("--diameter", diameter, "Circumdiameter expression")->excludes(edge_opt);
    solid->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1u, 1000u));

    auto* eval = app.add_subcommand("eval", "Evaluate a radical expression");
    eval->add_option("expression", text, "Expression, e.g. sqrt(2)+1")->required();
    eval->add_option("--digits", digits, "Significant digits")->check(CLI::Range(1u, 1000u));

    auto* denest = app.add_subcommand("denest", "Simplify a nested square root");
    denest->add_option("expression", text, "Expression, e.g. sqrt(6+2*sqrt(5))")->required();

    std::string format = "md";
    std::optional<std::string> output;
    auto* report = app.add_subcommand("report", "Write the corpus report");
    report->add_option("--corpus", corpus, "Corpus file")->capture_default_str();
    report->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
    report->add_option("--output", output, "Output file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        if (factor->parsed()) {
            return cmd_factor(text, bound, scale);
        }
        if (parse->parsed()) {
            return cmd_parse(text);
        }
        if (verify->parsed()) {
            return cmd_verify(corpus, id, no_patches);
        }
        if (solid->parsed()) {
            return cmd_solid(solid_id, edge, diameter, digits);
        }
        if (eval->parsed()) {
            return cmd_eval(text, digits);
        }
        if (denest->parsed()) {
            return cmd_denest(text);
        }
        if (report->parsed()) {
            return cmd_report(corpus, format, output);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kError;
}
