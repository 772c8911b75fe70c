#include <doctest.h>

#include "rothcoss/corpus.hpp"

using namespace rothcoss;

namespace {

const Corpus& shipped() {
    static const Corpus corpus = load_corpus(ROTHCOSS_CORPUS);
    return corpus;
}

const Problem& problem(const std::string& id) {
    for (const auto& p : shipped().problems) {
        if (p.id == id) {
            return p;
        }
    }
    throw std::out_of_range(id);
}

Polynomial P(const char* text) { return parse_polynomial(text); }

std::string one_problem(const std::string& fields) {
    return R"({"problems": [{"id": "T", "equation": "1Z = 5R - 6", "selector": "largest_true",)" + fields +
           R"(, "roth_solution": "3", "expected_verdict": "confirmed"}]})";
}

}  // namespace

TEST_CASE("shipped corpus") {
    CHECK(shipped().problems.size() == 17);
    const CorpusRun run = run_corpus(shipped());
    REQUIRE(run.reports.size() == 17);
    for (const auto& r : run.reports) {
        CHECK_MESSAGE(r.matches_expected, r.id << ": " << r.verdict.to_string());
        if (r.verdict.kind == VerdictKind::confirmed) {
            CHECK_MESSAGE(r.comparison == "exact", r.id);
        }
    }
    CHECK(run.all_expected());
}

TEST_CASE("verify examples") {
    const VerificationReport xxiii = verify(problem("XXIII-f187"));
    CHECK(xxiii.verdict.to_string() == "confirmed");
    REQUIRE(xxiii.derived.size() == 1);
    CHECK(xxiii.derived[0].expression == "3-sqrt(2)/2");
    CHECK(xxiii.factorization == "(x+8)(x^2-4x+26)(x^2-12x+34)");

    CHECK(verify(problem("XXVI-f188")).verdict.to_string() == "solution_scaled(1/2)");
    CHECK(verify(problem("XXIX-f188")).verdict.to_string() == "selector_mismatch(sum_two_true)");
    const VerificationReport xxx = verify(problem("XXX-f188"));
    CHECK(xxx.verdict.kind == VerdictKind::solution_erroneous);
    CHECK(xxx.derived[0].decimal.substr(0, 5) == "46.35");
    const VerificationReport ii = verify(problem("II-f189"));
    CHECK(ii.verdict.kind == VerdictKind::numeric_discrepancy);
    CHECK(ii.derived[0].decimal.substr(0, 7) == "26.8742");
    CHECK(ii.roth[0].decimal.substr(0, 7) == "26.8728");
}

TEST_CASE("XXVII needs its patch") {
    const Problem& p = problem("XXVII-f188");
    CHECK(verify(p).verdict.kind == VerdictKind::confirmed);
    const VerificationReport raw = verify(p, VerifyOptions{false});
    CHECK(raw.verdict.to_string() == "equation_erroneous(factorization)");
    CHECK(patched_equation(p).find("1107") != std::string::npos);
}

TEST_CASE("V f.190 offsets") {
    Problem p = problem("V-f190");
    CHECK(verify(p).verdict.to_string() == "selector_mismatch(product_two_true+1)");
    p.selector_offset = 1;
    CHECK(verify(p).verdict.kind == VerdictKind::confirmed);
}

TEST_CASE("III f.189 stops at factorization") {
    const VerificationReport r = verify(problem("III-f189"));
    CHECK(r.verdict.to_string() == "equation_erroneous(factorization)");
    CHECK(r.factorization_error.has_value());
    CHECK(std::find(r.notes.begin(), r.notes.end(), "sign variations of the residual: 1") != r.notes.end());
}

TEST_CASE("Verdict::matches") {
    const Verdict v{VerdictKind::solution_scaled, "1/2"};
    CHECK(v.matches("solution_scaled(1/2)"));
    CHECK(v.matches("solution_scaled"));
    CHECK_FALSE(v.matches("solution_scaled(2)"));
    CHECK_FALSE(v.matches("confirmed"));
}

TEST_CASE("suggest_correction") {
    const Polynomial xxii = P("x^5-4x^4-84x^3+848x^2+884x+5232");
    const Polynomial q = P("x^2-12x+34");
    const auto all = suggest_correction(xxii, q);
    REQUIRE_FALSE(all.empty());
    for (const auto& c : all) {
        CHECK(divide(c.polynomial, q).remainder.is_zero());
        CHECK(c.adjustments.size() <= 2);
    }
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].total <= all[i].total);
    }
    const Polynomial proposal = P("x^5-84x^3+96x^2+884x");
    CHECK(proposal == P("x") * P("x^2+12x+26") * q);
    CHECK(in_correction_family(xxii, q, {0, 2, 4}, proposal));
    CHECK_FALSE(in_correction_family(xxii, q, {0, 2}, proposal));

    const Polynomial pi = P("x^5-12x^4+10x^3+248x^2-423x-924");
    const auto identity = suggest_correction(pi, P("x^2-12x+33"), std::pair{0u, 1u});
    REQUIRE(identity.size() == 1);
    CHECK(identity[0].polynomial == pi);
    CHECK(identity[0].total == 0);

    const auto quartic = suggest_correction(P("x^4"), P("x^2-1"), std::pair{0u, 2u});
    REQUIRE(quartic.size() == 1);
    CHECK(quartic[0].total == 1);
    CHECK(divide(quartic[0].polynomial, P("x^2-1")).remainder.is_zero());

    CHECK_THROWS(suggest_correction(xxii, P("2x^2+1")));
    CHECK_THROWS(suggest_correction(xxii, q, std::pair{5u, 1u}));
}

TEST_CASE("corpus schema errors") {
    CHECK(parse_corpus(R"({"problems": []})").problems.empty());
    CHECK(run_corpus(parse_corpus("[]")).reports.empty());
    CHECK(run_corpus(parse_corpus("[]")).all_expected());
    CHECK(parse_corpus(one_problem(R"("target": "roots_only")")).problems.size() == 1);
    try {
        parse_corpus(one_problem(R"("target": "edge", "solid": "hypercube")"));
        FAIL("expected CorpusError");
    } catch (const CorpusError& e) {
        CHECK(e.problem_id() == "T");
        CHECK(e.field() == "solid");
        CHECK(std::string(e.what()).find("hypercube") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_corpus(one_problem(R"("target": "volume")")), CorpusError);
    CHECK_THROWS_AS(parse_corpus(R"([{"id": "T"}])"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("{"), CorpusError);
    CHECK_THROWS_AS(parse_corpus(one_problem(R"("target": "roots_only", "polygonal_n": 5)")), CorpusError);
    CHECK_THROWS_AS(load_corpus("does/not/exist"), std::runtime_error);
}

TEST_CASE("reports") {
    const CorpusRun run = run_corpus(shipped());
    const std::string md = markdown_report(run);
    CHECK(md.find("## XXIII-f187") != std::string::npos);
    CHECK(md.find("17/17 verdicts as expected") != std::string::npos);
    const std::string json = json_report(run);
    CHECK(json.find("\"all_expected\": true") != std::string::npos);
    CHECK(markdown_report(run_corpus(shipped())) == md);
    CHECK(json_report(run_corpus(shipped())) == json);
}
