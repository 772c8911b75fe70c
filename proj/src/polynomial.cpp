#include "rothcoss/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "rothcoss/parse_error.hpp"

namespace rothcoss {

Polynomial::Polynomial(std::vector<Rational> ascending) : coefficients_(std::move(ascending)) {
    trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : coefficients_(ascending) {
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned power) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_descending(std::vector<Rational> descending) {
    std::reverse(descending.begin(), descending.end());
    return Polynomial(std::move(descending));
}

void Polynomial::trim() {
    while (!coefficients_.empty() && coefficients_.back().is_zero()) {
        coefficients_.pop_back();
    }
}

std::optional<unsigned> Polynomial::degree() const {
    if (is_zero()) {
        return std::nullopt;
    }
    return static_cast<unsigned>(coefficients_.size() - 1);
}

Rational Polynomial::coefficient(unsigned power) const {
    return power < coefficients_.size() ? coefficients_[power] : Rational{};
}

Rational Polynomial::leading() const { return is_zero() ? Rational{} : coefficients_.back(); }

bool Polynomial::is_monic() const { return !is_zero() && coefficients_.back() == 1; }

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(),
                       [](const Rational& c) { return c.is_integer(); });
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coefficients_) {
        c = -c;
    }
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coefficients_.size() > coefficients_.size()) {
        coefficients_.resize(rhs.coefficients_.size());
    }
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) {
        coefficients_[i] += rhs.coefficients_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Rational> product(coefficients_.size() + rhs.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
            product[i + j] += coefficients_[i] * rhs.coefficients_[j];
        }
    }
    coefficients_ = std::move(product);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
    for (auto& c : coefficients_) {
        c *= rhs;
    }
    trim();
    return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(1);
    for (unsigned i = 0; i < exponent; ++i) {
        result *= *this;
    }
    return result;
}

std::string Polynomial::to_string(char variable) const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const Rational& c = coefficients_[k];
        if (c.is_zero()) {
            continue;
        }
        const Rational magnitude = c.abs();
        if (c.sign() < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        const bool fraction = !magnitude.is_integer();
        if (k == 0 || magnitude != 1) {
            out += fraction && k > 0 ? "(" + magnitude.to_string() + ")" : magnitude.to_string();
        }
        if (k >= 1) {
            out += variable;
        }
        if (k >= 2) {
            out += '^' + std::to_string(k);
        }
    }
    return out;
}

DivisionResult divide(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) {
        throw std::domain_error("division by the zero polynomial");
    }
    const unsigned dd = *d.degree();
    if (p.is_zero() || *p.degree() < dd) {
        return {Polynomial{}, p};
    }
    std::vector<Rational> rem = p.coefficients();
    std::vector<Rational> quot(rem.size() - dd);
    const Rational lead = d.leading();
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Rational factor = rem[k] / lead;
        quot[k - dd] = factor;
        if (factor.is_zero()) {
            continue;
        }
        for (unsigned j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= factor * d.coefficient(j);
        }
    }
    rem.resize(dd);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial scale_substitute(const Polynomial& p, const BigInt& d) {
    if (d < 1) {
        throw std::invalid_argument("scale_substitute requires d >= 1");
    }
    if (!p.is_monic()) {
        throw std::invalid_argument("scale_substitute requires a monic polynomial");
    }
    const unsigned n = *p.degree();
    std::vector<Rational> out(n + 1);
    // coefficient of z^k is a_k * d^(n-k)
    Rational power = 1;
    for (unsigned k = n + 1; k-- > 0;) {
        out[k] = p.coefficient(k) * power;
        power *= Rational(d);
    }
    return Polynomial(std::move(out));
}

unsigned sign_variations(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("sign variations of the zero polynomial");
    }
    unsigned changes = 0;
    int last = 0;
    for (const auto& c : p.coefficients()) {
        const int s = c.sign();
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) {
            fail("empty polynomial", {"term"});
        }
        Polynomial result;
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) {
                break;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("unexpected character", {"'+'", "'-'"});
            }
            result += term() * Rational(sign);
            first = false;
        }
        return result;
    }

private:
    Polynomial term() {
        Rational coefficient = 1;
        bool have_coefficient = false;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) != 0 || peek() == '(')) {
            coefficient = peek() == '(' ? group() : literal();
            have_coefficient = true;
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_space();
            }
        }
        unsigned power = 0;
        if (!at_end() && std::islower(static_cast<unsigned char>(peek())) != 0) {
            const char v = peek();
            if (variable_ != 0 && v != variable_) {
                fail(std::string("mixed variables '") + variable_ + "' and '" + v + "'", {});
            }
            variable_ = v;
            ++pos_;
            power = 1;
            skip_space();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                const Rational e = integer();
                if (!e.is_integer() || e.sign() < 0 || e > 64) {
                    fail("exponent out of range", {});
                }
                power = static_cast<unsigned>(e.numerator().get_ui());
            }
        } else if (!have_coefficient) {
            fail("expected a term", {"number", "'('", "variable"});
        }
        return Polynomial::monomial(coefficient, power);
    }

    // '(' rational ('+'|'-' rational)* ')'
    Rational group() {
        ++pos_;
        Rational sum;
        bool first = true;
        while (true) {
            skip_space();
            if (at_end()) {
                fail("unterminated group", {"')'"});
            }
            if (peek() == ')') {
                if (first) {
                    fail("empty group", {"number"});
                }
                ++pos_;
                return sum;
            }
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("unexpected character in group", {"'+'", "'-'", "')'"});
            }
            sum += literal() * Rational(sign);
            first = false;
        }
    }

    Rational literal() {
        Rational value = integer();
        skip_space();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_space();
            const Rational den = integer();
            if (den.is_zero()) {
                fail("zero denominator", {});
            }
            value /= den;
        }
        return value;
    }

    Rational integer() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an integer", {"digit"});
        }
        return Rational(BigInt(std::string(text_.substr(start, pos_ - start))));
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) {
            ++pos_;
        }
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
        throw ParseError(message, 1, pos_ + 1, std::move(expected));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char variable_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

}  // namespace rothcoss
