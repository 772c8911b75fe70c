#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rothcoss/factorizer.hpp"
#include "rothcoss/radical_expr.hpp"

namespace rothcoss {

enum class Selector {
    largest_true,
    smallest_true,
    sum_two_true,
    difference_two_true,
    product_two_true,
    single_positive,
    all_true,
};

enum class Target { circumdiameter, edge, edge_square_face, pentagon_circumcircle_then_edge, roots_only };

std::string to_string(Selector s);
std::string to_string(Target t);
/// Throws std::invalid_argument for unknown names.
Selector parse_selector(std::string_view name);
Target parse_target(std::string_view name);

/// Documented erratum: replace `original` by `corrected` in `field`.
struct Patch {
    std::string field;
    std::string original;
    std::string corrected;
    std::string citation;
};

struct Problem {
    std::string id;
    std::string equation;
    std::optional<BigInt> polygonal_n;
    BigInt scale = 1;
    Selector selector = Selector::largest_true;
    Rational selector_offset;
    std::optional<std::string> solid;
    Target target = Target::roots_only;
    std::vector<std::string> roth_solution;
    std::string expected_verdict;
    std::vector<Patch> patches;
    std::string notes;
};

/// Corpus file problem, naming the problem id and field at fault.
class CorpusError : public std::runtime_error {
public:
    CorpusError(const std::string& problem_id, const std::string& field, const std::string& message);
    const std::string& problem_id() const { return problem_id_; }
    const std::string& field() const { return field_; }

private:
    std::string problem_id_;
    std::string field_;
};

enum class VerdictKind {
    confirmed,
    equation_erroneous,
    solution_scaled,
    selector_mismatch,
    solution_erroneous,
    numeric_discrepancy,
};

struct Verdict {
    VerdictKind kind = VerdictKind::confirmed;
    /// Failing stage, scale factor, matching selector or delta.
    std::string detail;

    /// `solution_scaled(1/2)`, `confirmed`.
    std::string to_string() const;
    /// True when `expected` names this verdict; an expectation without a
    /// parenthesized argument matches any detail.
    bool matches(std::string_view expected) const;
};

std::string to_string(VerdictKind k);

struct ValueReport {
    std::string expression;
    std::string decimal;
};

struct VerificationReport {
    std::string id;
    std::string equation;
    std::string standard_form;
    std::optional<std::string> factorization;
    std::optional<std::string> factorization_error;
    std::vector<std::string> true_roots;
    std::string selector;
    std::optional<std::string> selected;
    std::vector<ValueReport> derived;
    std::vector<ValueReport> roth;
    /// `exact` or `numeric` for the comparison that decided a match.
    std::string comparison;
    Verdict verdict;
    std::string expected_verdict;
    bool matches_expected = false;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    bool apply_patches = true;
};

/// Runs the whole pipeline for one problem. Deterministic.
VerificationReport verify(const Problem& p, const VerifyOptions& options = {});

/// Equation text with the problem's equation patches applied.
std::string patched_equation(const Problem& p);

struct Correction {
    Polynomial polynomial;
    /// (power, added amount) pairs.
    std::vector<std::pair<unsigned, Rational>> adjustments;
    Rational total;
};

/// Polynomials divisible by `required` obtained by changing at most two
/// non-leading coefficients of p, ranked by total absolute adjustment.
/// With `positions` only that pair is tried.
std::vector<Correction> suggest_correction(const Polynomial& p, const Polynomial& required,
                                           std::optional<std::pair<unsigned, unsigned>> positions = {});

/// True when `candidate` differs from p only at `positions` and is divisible
/// by `required`: membership in the corrections that may touch those
/// coefficients, any number of them.
bool in_correction_family(const Polynomial& p, const Polynomial& required,
                          const std::vector<unsigned>& positions, const Polynomial& candidate);

struct Corpus {
    std::vector<Problem> problems;
};

/// Reads a corpus file; `path` may omit the `.json` extension.
/// Throws CorpusError for schema violations and std::runtime_error for IO.
Corpus load_corpus(const std::filesystem::path& path);
Corpus parse_corpus(const std::string& json_text);

struct CorpusRun {
    std::vector<VerificationReport> reports;
    /// True when every verdict matches its expectation.
    bool all_expected() const;
};

CorpusRun run_corpus(const Corpus& corpus, const VerifyOptions& options = {});
CorpusRun run_corpus(const std::filesystem::path& path, const VerifyOptions& options = {});

std::string markdown_report(const CorpusRun& run);
std::string json_report(const CorpusRun& run);
/// `| id | verdict | expected | ok |` table with per-verdict counts.
std::string summary_table(const CorpusRun& run);

}  // namespace rothcoss
