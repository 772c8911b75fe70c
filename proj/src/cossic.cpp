#include "rothcoss/cossic.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

#include "rothcoss/parse_error.hpp"

namespace rothcoss {

namespace {

constexpr std::array<std::string_view, 12> kSymbols{"N",  "R",   "Z",  "C",  "ZZ",  "SS",
                                                     "ZC", "BS", "ZZZ", "CC", "ZSS", "CSS"};

class CossicParser {
public:
    explicit CossicParser(std::string_view text) : text_(text) {}

    CossicEquation parse() {
        CossicEquation eq;
        skip_space();
        if (lookahead("ngon")) {
            pos_ += 4;
            expect('(');
            skip_space();
            const Rational n = integer();
            if (n < Rational(3)) {
                fail("polygonal side count must be at least 3", {});
            }
            eq.polygonal_n = n.numerator();
            expect(')');
            expect(':');
        }
        eq.lhs = side();
        skip_space();
        if (!at_end() && peek() == '=') {
            if (eq.polygonal_n) {
                fail("a polygonal statement takes a single expression", {"end of input"});
            }
            ++pos_;
            eq.rhs = side();
            skip_space();
        }
        if (!at_end()) {
            fail("unexpected character", {"'+'", "'-'", "'='", "factor", "end of input"});
        }
        return eq;
    }

private:
    CossicSum side() {
        CossicSum sum;
        skip_space();
        bool negative = false;
        if (!at_end() && (peek() == '+' || peek() == '-')) {
            negative = peek() == '-';
            ++pos_;
        }
        sum.push_back(term(negative));
        while (true) {
            skip_space();
            if (at_end() || (peek() != '+' && peek() != '-')) {
                return sum;
            }
            negative = peek() == '-';
            ++pos_;
            sum.push_back(term(negative));
        }
    }

    CossicTerm term(bool negative) {
        CossicTerm t{negative, {}};
        t.factors.push_back(factor());
        while (true) {
            skip_space();
            if (at_end()) {
                return t;
            }
            if (peek() == '*') {
                ++pos_;
                t.factors.push_back(factor());
                continue;
            }
            const char c = peek();
            if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) != 0 ||
                std::isupper(static_cast<unsigned char>(c)) != 0) {
                t.factors.push_back(factor());
                continue;
            }
            return t;
        }
    }

    CossicFactor factor() {
        skip_space();
        if (at_end()) {
            fail("unexpected end of input", {"number", "power symbol", "'('"});
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            Rational q = integer();
            skip_space();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_space();
                const Rational den = integer();
                if (den.is_zero()) {
                    fail("zero denominator", {});
                }
                q /= den;
            }
            return CossicFactor::of_number(q);
        }
        if (c == '(') {
            ++pos_;
            CossicSum inner = side();
            expect(')');
            return CossicFactor::of_group(std::move(inner));
        }
        if (std::isupper(static_cast<unsigned char>(c)) != 0) {
            for (unsigned len = 3; len >= 1; --len) {
                const std::string_view candidate = text_.substr(pos_, len);
                for (unsigned k = 0; k < kSymbols.size(); ++k) {
                    if (candidate.size() == len && candidate == kSymbols[k]) {
                        pos_ += len;
                        return CossicFactor::of_power(k);
                    }
                }
            }
            fail(std::string("unknown power symbol '") + c + "'",
                 {"N", "R", "Z", "C", "ZZ", "SS", "ZC", "BS", "ZZZ", "CC", "ZSS", "CSS"});
        }
        fail(std::string("unexpected character '") + c + "'", {"number", "power symbol", "'('"});
    }

    Rational integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer", {"integer"});
        }
        return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
    }

    bool lookahead(std::string_view word) const { return text_.substr(pos_, word.size()) == word; }

    void expect(char c) {
        skip_space();
        if (at_end() || peek() != c) {
            fail(at_end() ? "unexpected end of input" : "unexpected character",
                 {std::string("'") + c + "'"});
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column, std::move(expected));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

bool is_mixed_number(const CossicSum& s) {
    for (const auto& t : s) {
        if (t.factors.size() != 1 || t.factors.front().kind != CossicFactor::Kind::number) {
            return false;
        }
    }
    return true;
}

std::string print_factor(const CossicFactor& f) {
    switch (f.kind) {
        case CossicFactor::Kind::number:
            return f.number.to_string();
        case CossicFactor::Kind::power:
            return power_symbol(f.power);
        case CossicFactor::Kind::group: {
            std::string inner;
            if (is_mixed_number(f.group)) {
                for (std::size_t i = 0; i < f.group.size(); ++i) {
                    if (f.group[i].negative) {
                        inner += '-';
                    } else if (i > 0) {
                        inner += '+';
                    }
                    inner += print_factor(f.group[i].factors.front());
                }
            } else {
                inner = print_sum(f.group);
            }
            return "(" + inner + ")";
        }
    }
    return {};
}

std::string print_term(const CossicTerm& t) {
    std::string out;
    const CossicFactor* prev = nullptr;
    for (const auto& f : t.factors) {
        if (prev != nullptr) {
            const bool glued = prev->kind == CossicFactor::Kind::group ||
                               f.kind == CossicFactor::Kind::group ||
                               (prev->kind == CossicFactor::Kind::number && f.kind == CossicFactor::Kind::power);
            if (!glued) {
                out += '*';
            }
        }
        out += print_factor(f);
        prev = &f;
    }
    return out;
}

// Coefficient as a cossic factor: integers and proper fractions stay bare,
// larger fractions become mixed numbers `(a+b/c)`.
CossicFactor coefficient_factor(const Rational& magnitude) {
    if (magnitude.is_integer() || magnitude < Rational(1)) {
        return CossicFactor::of_number(magnitude);
    }
    const BigInt whole = magnitude.numerator() / magnitude.denominator();
    const Rational rest = magnitude - Rational(whole);
    return CossicFactor::of_group({CossicTerm{false, {CossicFactor::of_number(Rational(whole))}},
                                   CossicTerm{false, {CossicFactor::of_number(rest)}}});
}

}  // namespace

CossicFactor CossicFactor::of_number(const Rational& q) {
    CossicFactor f;
    f.kind = Kind::number;
    f.number = q;
    return f;
}

CossicFactor CossicFactor::of_power(unsigned k) {
    CossicFactor f;
    f.kind = Kind::power;
    f.power = k;
    return f;
}

CossicFactor CossicFactor::of_group(std::vector<CossicTerm> terms) {
    CossicFactor f;
    f.kind = Kind::group;
    f.group = std::move(terms);
    return f;
}

bool operator==(const CossicFactor& a, const CossicFactor& b) {
    return a.kind == b.kind && a.number == b.number && a.power == b.power && a.group == b.group;
}

bool operator==(const CossicTerm& a, const CossicTerm& b) {
    return a.negative == b.negative && a.factors == b.factors;
}

std::string power_symbol(unsigned k) {
    if (k >= kSymbols.size()) {
        throw std::out_of_range("no cossic symbol for x^" + std::to_string(k));
    }
    return std::string(kSymbols[k]);
}

CossicEquation parse_equation(std::string_view text) { return CossicParser(text).parse(); }

Polynomial expand(const CossicSum& s) {
    Polynomial sum;
    for (const auto& t : s) {
        Polynomial product = Polynomial::constant(1);
        for (const auto& f : t.factors) {
            switch (f.kind) {
                case CossicFactor::Kind::number:
                    product *= f.number;
                    break;
                case CossicFactor::Kind::power:
                    product *= Polynomial::monomial(1, f.power);
                    break;
                case CossicFactor::Kind::group:
                    product *= expand(f.group);
                    break;
            }
        }
        if (t.negative) {
            sum -= product;
        } else {
            sum += product;
        }
    }
    return sum;
}

ExpandedEquation expand_to_polynomial(const CossicEquation& e) {
    return {expand(e.lhs), e.rhs ? expand(*e.rhs) : Polynomial{}};
}

StandardForm standard_form(const CossicEquation& e) {
    const ExpandedEquation sides = expand_to_polynomial(e);
    if (e.polygonal_n) {
        return to_standard_form(PolygonalKind(*e.polygonal_n), sides.lhs);
    }
    return to_standard_form(sides.lhs - sides.rhs);
}

std::string print_sum(const CossicSum& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == 0) {
            out += s[i].negative ? "-" : "";
        } else {
            out += s[i].negative ? " - " : " + ";
        }
        out += print_term(s[i]);
    }
    return out;
}

std::string print_equation(const CossicEquation& e) {
    std::string out;
    if (e.polygonal_n) {
        out += "ngon(" + e.polygonal_n->get_str() + "): ";
    }
    out += print_sum(e.lhs);
    if (e.rhs) {
        out += " = " + print_sum(*e.rhs);
    }
    return out;
}

CossicSum from_polynomial(const Polynomial& p) {
    if (p.is_zero()) {
        return {CossicTerm{false, {CossicFactor::of_number(Rational(0))}}};
    }
    CossicSum sum;
    for (unsigned k = *p.degree() + 1; k-- > 0;) {
        const Rational c = p.coefficient(k);
        if (c.is_zero()) {
            continue;
        }
        CossicTerm t{c.sign() < 0, {coefficient_factor(c.abs())}};
        if (k > 0) {
            t.factors.push_back(CossicFactor::of_power(k));
        }
        sum.push_back(std::move(t));
    }
    return sum;
}

}  // namespace rothcoss
