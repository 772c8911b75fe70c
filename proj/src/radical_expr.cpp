#include "rothcoss/radical_expr.hpp"

#include <cctype>
#include <utility>

#include "rothcoss/parse_error.hpp"

namespace rothcoss {

struct RadicalExpr::Node {
    Kind kind;
    Rational value;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const RadicalExpr::Node>;

constexpr mpfr_prec_t kStartPrecision = 64;
constexpr mpfr_prec_t kMaxPrecision = mpfr_prec_t{1} << 16;
constexpr mpfr_prec_t kMaxComparePrecision = 4096;

NodePtr make(RadicalExpr::Kind kind, NodePtr lhs, NodePtr rhs = nullptr) {
    return std::make_shared<const RadicalExpr::Node>(
        RadicalExpr::Node{kind, Rational{}, std::move(lhs), std::move(rhs)});
}

// Binding strength used by the printer: sums 1, products 2, unary minus 3, atoms 4.
int strength(const RadicalExpr::Node& n) {
    using K = RadicalExpr::Kind;
    switch (n.kind) {
        case K::add:
        case K::subtract:
            return 1;
        case K::multiply:
        case K::divide:
            return 2;
        case K::negate:
            return 3;
        case K::number:
            if (n.value.sign() < 0) {
                return 3;
            }
            return n.value.is_integer() ? 4 : 2;
        default:
            return 4;
    }
}

void print(const RadicalExpr::Node& n, std::string& out);

void print_at(const RadicalExpr::Node& n, int min_strength, std::string& out) {
    if (strength(n) < min_strength) {
        out += '(';
        print(n, out);
        out += ')';
    } else {
        print(n, out);
    }
}

void print(const RadicalExpr::Node& n, std::string& out) {
    using K = RadicalExpr::Kind;
    switch (n.kind) {
        case K::number:
            out += n.value.to_string();
            return;
        case K::add:
            print_at(*n.lhs, 1, out);
            out += '+';
            print_at(*n.rhs, 2, out);
            return;
        case K::subtract:
            print_at(*n.lhs, 1, out);
            out += '-';
            print_at(*n.rhs, 2, out);
            return;
        case K::multiply:
            print_at(*n.lhs, 2, out);
            out += '*';
            print_at(*n.rhs, 3, out);
            return;
        case K::divide:
            print_at(*n.lhs, 2, out);
            out += '/';
            print_at(*n.rhs, 3, out);
            return;
        case K::negate:
            out += '-';
            print_at(*n.lhs, 3, out);
            return;
        case K::sqrt:
        case K::cbrt:
            out += n.kind == K::sqrt ? "sqrt(" : "cbrt(";
            print(*n.lhs, out);
            out += ')';
            return;
    }
}

std::string print(const NodePtr& n) {
    std::string out;
    print(*n, out);
    return out;
}

bool same(const NodePtr& a, const NodePtr& b) {
    if (a == b) {
        return true;
    }
    if (!a || !b || a->kind != b->kind || a->value != b->value) {
        return false;
    }
    return same(a->lhs, b->lhs) && same(a->rhs, b->rhs);
}

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        skip_space();
        if (at_end()) {
            fail("empty expression", {"number", "'('", "'sqrt'", "'cbrt'", "'-'"});
        }
        NodePtr e = sum();
        skip_space();
        if (!at_end()) {
            fail("unexpected character", {"'+'", "'-'", "'*'", "'/'", "end of input"});
        }
        return e;
    }

private:
    NodePtr sum() {
        NodePtr e = product();
        while (true) {
            skip_space();
            if (at_end() || (peek() != '+' && peek() != '-')) {
                return e;
            }
            const auto kind = peek() == '+' ? RadicalExpr::Kind::add : RadicalExpr::Kind::subtract;
            ++pos_;
            e = make(kind, e, product());
        }
    }

    NodePtr product() {
        NodePtr e = unary();
        while (true) {
            skip_space();
            if (at_end() || (peek() != '*' && peek() != '/')) {
                return e;
            }
            const auto kind = peek() == '*' ? RadicalExpr::Kind::multiply : RadicalExpr::Kind::divide;
            ++pos_;
            e = make(kind, e, unary());
        }
    }

    NodePtr unary() {
        skip_space();
        if (!at_end() && peek() == '-') {
            ++pos_;
            return make(RadicalExpr::Kind::negate, unary());
        }
        if (!at_end() && peek() == '+') {
            ++pos_;
            return unary();
        }
        return atom();
    }

    NodePtr atom() {
        skip_space();
        if (at_end()) {
            fail("unexpected end of input", {"number", "'('", "'sqrt'", "'cbrt'"});
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            }
            return std::make_shared<const RadicalExpr::Node>(RadicalExpr::Node{
                RadicalExpr::Kind::number, Rational(BigInt(std::string(text_.substr(start, pos_ - start)))),
                nullptr, nullptr});
        }
        if (c == '(') {
            ++pos_;
            NodePtr e = sum();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (!at_end() && std::isalpha(static_cast<unsigned char>(peek())) != 0) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            RadicalExpr::Kind kind;
            if (name == "sqrt") {
                kind = RadicalExpr::Kind::sqrt;
            } else if (name == "cbrt") {
                kind = RadicalExpr::Kind::cbrt;
            } else {
                pos_ = start;
                fail("unknown function '" + std::string(name) + "'", {"'sqrt'", "'cbrt'"});
            }
            expect('(');
            NodePtr e = sum();
            expect(')');
            return make(kind, e);
        }
        fail(std::string("unexpected character '") + c + "'", {"number", "'('", "'sqrt'", "'cbrt'"});
    }

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

std::optional<Interval> enclose_node(const NodePtr& n, mpfr_prec_t prec) {
    using K = RadicalExpr::Kind;
    if (n->kind == K::number) {
        return Interval(n->value, prec);
    }
    auto a = enclose_node(n->lhs, prec);
    if (!a) {
        return std::nullopt;
    }
    switch (n->kind) {
        case K::negate:
            return -*a;
        case K::sqrt:
            if (a->certain_sign() < 0) {
                throw DomainError("square root of a negative number", print(n->lhs));
            }
            return a->sqrt();
        case K::cbrt:
            return a->cbrt();
        default:
            break;
    }
    auto b = enclose_node(n->rhs, prec);
    if (!b) {
        return std::nullopt;
    }
    switch (n->kind) {
        case K::add:
            return *a + *b;
        case K::subtract:
            return *a - *b;
        case K::multiply:
            return *a * *b;
        case K::divide:
            if (b->contains_zero()) {
                return std::nullopt;
            }
            return *a / *b;
        default:
            break;
    }
    throw std::logic_error("unhandled expression node");
}

// Rounded |x| * 10^places, half away from zero.
BigInt round_scaled(const Rational& x, unsigned places) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    const Rational scaled = x.abs() * Rational(scale);
    BigInt out = (2 * scaled.numerator() + scaled.denominator()) / (2 * scaled.denominator());
    return out;
}

std::string format_scaled(const BigInt& magnitude, int sign, unsigned places) {
    std::string digits = magnitude.get_str();
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    if (places > 0) {
        digits.insert(digits.size() - places, ".");
    }
    if (sign < 0 && magnitude != 0) {
        digits.insert(0, "-");
    }
    return digits;
}

// Digits before the decimal point of |x| when x rounds at `places`, i.e. the
// decimal exponent used for significant-digit output.
int decimal_exponent(const Rational& magnitude) {
    // floor(log10(magnitude)) for magnitude > 0
    int e = static_cast<int>(magnitude.numerator().get_str().size()) -
            static_cast<int>(magnitude.denominator().get_str().size());
    auto pow10 = [](int k) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
        return k < 0 ? Rational(BigInt(1), p) : Rational(p);
    };
    while (pow10(e) > magnitude) {
        --e;
    }
    while (pow10(e + 1) <= magnitude) {
        ++e;
    }
    return e;
}

std::optional<MultiSurd> field_sqrt(const MultiSurd& square) {
    if (square.sign() < 0) {
        return std::nullopt;
    }
    return square.sqrt();
}

ExactValue finish(int sign, MultiSurd square) {
    ExactValue v{sign, std::move(square), std::nullopt};
    if (sign == 0) {
        v.square = MultiSurd{};
        v.value = MultiSurd{};
    } else if (const auto root = field_sqrt(v.square)) {
        v.value = sign > 0 ? *root : -*root;
    }
    return v;
}

ExactValue negate(ExactValue v) {
    v.sign = -v.sign;
    if (v.value) {
        v.value = -*v.value;
    }
    return v;
}

std::optional<ExactValue> add(const ExactValue& a, const ExactValue& b) {
    if (a.sign == 0) {
        return b;
    }
    if (b.sign == 0) {
        return a;
    }
    if (a.value && b.value) {
        return ExactValue::of(*a.value + *b.value);
    }
    // (x + y)^2 = A + B + 2 sx sy sqrt(A B)
    const auto cross = field_sqrt(a.square * b.square);
    if (!cross) {
        return std::nullopt;
    }
    const MultiSurd two(Rational(2 * a.sign * b.sign));
    const MultiSurd square = a.square + b.square + two * *cross;
    int sign = a.sign;
    if (a.sign != b.sign) {
        const int bigger = (a.square - b.square).sign();
        sign = bigger == 0 ? 0 : (bigger > 0 ? a.sign : b.sign);
    }
    return finish(sign, square);
}

std::optional<ExactValue> normalize(const NodePtr& n) {
    using K = RadicalExpr::Kind;
    if (n->kind == K::number) {
        return ExactValue::of(MultiSurd(n->value));
    }
    const auto a = normalize(n->lhs);
    if (!a) {
        return std::nullopt;
    }
    switch (n->kind) {
        case K::negate:
            return negate(*a);
        case K::sqrt:
            if (a->sign < 0 || !a->value) {
                return std::nullopt;
            }
            return finish(a->sign, *a->value);
        case K::cbrt: {
            if (!a->value || !a->value->is_rational()) {
                return std::nullopt;
            }
            const auto root = rational_cbrt(a->value->rational_part());
            if (!root) {
                return std::nullopt;
            }
            return ExactValue::of(MultiSurd(*root));
        }
        default:
            break;
    }
    const auto b = normalize(n->rhs);
    if (!b) {
        return std::nullopt;
    }
    switch (n->kind) {
        case K::add:
            return add(*a, *b);
        case K::subtract:
            return add(*a, negate(*b));
        case K::multiply:
            if (a->value && b->value) {
                return ExactValue::of(*a->value * *b->value);
            }
            return finish(a->sign * b->sign, a->square * b->square);
        case K::divide:
            if (b->sign == 0) {
                return std::nullopt;
            }
            if (a->value && b->value) {
                return ExactValue::of(*a->value / *b->value);
            }
            return finish(a->sign * b->sign, a->square / b->square);
        default:
            break;
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace

DomainError::DomainError(const std::string& message, std::string subtree)
    : std::domain_error(message + " in " + subtree), subtree_(std::move(subtree)) {}

RadicalExpr::RadicalExpr() : RadicalExpr(Rational{}) {}

RadicalExpr::RadicalExpr(const Rational& q)
    : node_(std::make_shared<const Node>(Node{Kind::number, q, nullptr, nullptr})) {}

RadicalExpr::RadicalExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

RadicalExpr RadicalExpr::parse(std::string_view text) { return RadicalExpr(ExprParser(text).parse()); }

RadicalExpr RadicalExpr::from(const MultiSurd& v) {
    if (v.is_zero()) {
        return RadicalExpr();
    }
    std::optional<RadicalExpr> sum;
    for (const auto& [s, c] : v.terms()) {
        const Rational mag = c.abs();
        RadicalExpr term(mag.numerator());
        if (s != 1) {
            const RadicalExpr root = sqrt(RadicalExpr(s));
            term = mag.numerator() == 1 ? root : term * root;
        }
        if (mag.denominator() != 1) {
            term = term / RadicalExpr(mag.denominator());
        }
        if (!sum) {
            sum = c.sign() < 0 ? -term : term;
        } else {
            sum = c.sign() < 0 ? *sum - term : *sum + term;
        }
    }
    return *sum;
}

RadicalExpr::Kind RadicalExpr::kind() const { return node_->kind; }

const Rational& RadicalExpr::number() const {
    if (node_->kind != Kind::number) {
        throw std::logic_error("not a number leaf");
    }
    return node_->value;
}

RadicalExpr RadicalExpr::child(std::size_t i) const {
    const NodePtr& c = i == 0 ? node_->lhs : node_->rhs;
    if (!c) {
        throw std::out_of_range("expression node has no child " + std::to_string(i));
    }
    return RadicalExpr(c);
}

std::size_t RadicalExpr::arity() const {
    return node_->rhs ? 2 : (node_->lhs ? 1 : 0);
}

bool RadicalExpr::contains_cbrt() const {
    if (node_->kind == Kind::cbrt) {
        return true;
    }
    for (std::size_t i = 0; i < arity(); ++i) {
        if (child(i).contains_cbrt()) {
            return true;
        }
    }
    return false;
}

RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b) {
    return RadicalExpr(make(RadicalExpr::Kind::add, a.node_, b.node_));
}
RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b) {
    return RadicalExpr(make(RadicalExpr::Kind::subtract, a.node_, b.node_));
}
RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b) {
    return RadicalExpr(make(RadicalExpr::Kind::multiply, a.node_, b.node_));
}
RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b) {
    return RadicalExpr(make(RadicalExpr::Kind::divide, a.node_, b.node_));
}
RadicalExpr RadicalExpr::operator-() const { return RadicalExpr(make(Kind::negate, node_)); }
RadicalExpr sqrt(const RadicalExpr& a) { return RadicalExpr(make(RadicalExpr::Kind::sqrt, a.node_)); }
RadicalExpr cbrt(const RadicalExpr& a) { return RadicalExpr(make(RadicalExpr::Kind::cbrt, a.node_)); }

bool operator==(const RadicalExpr& a, const RadicalExpr& b) { return same(a.node_, b.node_); }

std::string RadicalExpr::to_string() const { return print(node_); }

std::optional<Interval> RadicalExpr::try_enclose(mpfr_prec_t precision) const {
    return enclose_node(node_, precision);
}

Interval RadicalExpr::enclose(long bits) const {
    for (mpfr_prec_t prec = std::max<mpfr_prec_t>(kStartPrecision, bits + 32); prec <= kMaxPrecision;
         prec *= 2) {
        if (auto iv = try_enclose(prec); iv && iv->narrower_than_bits(bits)) {
            return *iv;
        }
    }
    if (auto iv = try_enclose(kMaxPrecision)) {
        return *iv;
    }
    throw DomainError("division by zero", to_string());
}

std::string format_fixed(const Rational& x, unsigned places) {
    return format_scaled(round_scaled(x, places), x.sign(), places);
}

std::string to_decimal(const RadicalExpr& e, unsigned places) {
    if (const auto q = exact_rational(e)) {
        return format_fixed(*q, places);
    }
    const mpfr_prec_t start = std::max<mpfr_prec_t>(kStartPrecision, 4 * static_cast<mpfr_prec_t>(places) + 32);
    std::optional<Interval> last;
    for (mpfr_prec_t prec = start; prec <= kMaxPrecision; prec *= 2) {
        last = e.try_enclose(prec);
        if (!last) {
            continue;
        }
        const Rational lo = last->lower();
        const Rational hi = last->upper();
        const std::string a = format_fixed(lo, places);
        if (a == format_fixed(hi, places)) {
            return a;
        }
    }
    if (!last) {
        throw DomainError("division by zero", e.to_string());
    }
    return format_fixed((last->lower() + last->upper()) / Rational(2), places);
}

std::string to_significant(const RadicalExpr& e, unsigned digits) {
    if (digits == 0) {
        throw std::invalid_argument("at least one significant digit is required");
    }
    Rational magnitude;
    if (const auto q = exact_rational(e)) {
        magnitude = q->abs();
    } else {
        const Interval iv = e.enclose(64);
        if (iv.contains_zero()) {
            // Indistinguishable from zero at 2^-64; report fixed places instead.
            return to_decimal(e, digits);
        }
        magnitude = iv.certain_sign() > 0 ? iv.lower() : -iv.upper();
    }
    if (magnitude.is_zero()) {
        return "0";
    }
    int places = static_cast<int>(digits) - 1 - decimal_exponent(magnitude);
    std::string out = to_decimal(e, static_cast<unsigned>(std::max(places, 0)));
    // Rounding can carry into a new leading digit (9.9996 -> 10.000).
    std::size_t significant = 0;
    bool leading = true;
    for (const char c : out) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
            continue;
        }
        if (leading && c == '0') {
            continue;
        }
        leading = false;
        ++significant;
    }
    if (significant > digits && places > 0) {
        out = to_decimal(e, static_cast<unsigned>(places - 1));
    }
    return out;
}

ExactValue ExactValue::of(const MultiSurd& v) { return ExactValue{v.sign(), v * v, v}; }

std::optional<ExactValue> exact_value(const RadicalExpr& e) {
    // Enclosure first: it reports domain violations with the offending subtree.
    (void)e.try_enclose(kStartPrecision);
    return normalize(e.node());
}

std::optional<Rational> exact_rational(const RadicalExpr& e) {
    const auto v = normalize(e.node());
    if (!v || !v->value) {
        return std::nullopt;
    }
    return v->value->as_rational();
}

RadicalExpr canonical_expr(const ExactValue& v) {
    if (v.value) {
        return RadicalExpr::from(*v.value);
    }
    RadicalExpr root;
    const auto radicands = v.square.radicands();
    if (radicands.size() == 1) {
        // square = (p + q sqrt(m)) / den with integers p, q
        const BigInt& m = *radicands.begin();
        const Rational a = v.square.rational_part();
        const Rational b = v.square.coefficient(m);
        BigInt den;
        mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
        const BigInt p = (a * Rational(den)).numerator();
        const BigInt q = (b * Rational(den)).numerator();
        const RadicalExpr surd = sqrt(RadicalExpr(BigInt(q * q * m)));
        RadicalExpr inner = surd;
        if (p != 0) {
            inner = q > 0 ? RadicalExpr(p) + surd : RadicalExpr(p) - surd;
        } else if (q < 0) {
            inner = -surd;
        }
        if (den != 1) {
            inner = inner / RadicalExpr(den);
        }
        root = sqrt(inner);
    } else {
        root = sqrt(RadicalExpr::from(v.square));
    }
    return v.sign < 0 ? -root : root;
}

Comparison radical_equals(const RadicalExpr& a, const RadicalExpr& b) {
    if (a == b) {
        return {Equality::equal, true};
    }
    const auto x = exact_value(a);
    const auto y = exact_value(b);
    if (x && y) {
        return {*x == *y ? Equality::equal : Equality::unequal, true};
    }
    for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxComparePrecision; prec *= 2) {
        const auto ia = a.try_enclose(prec);
        const auto ib = b.try_enclose(prec);
        if (ia && ib && ia->disjoint_from(*ib)) {
            return {Equality::unequal, false};
        }
    }
    return {Equality::undecided, false};
}

std::string to_string(Equality e) {
    switch (e) {
        case Equality::equal:
            return "equal";
        case Equality::unequal:
            return "unequal";
        case Equality::undecided:
            return "undecided";
    }
    return "undecided";
}

CardanRoot cardan_real_root(const Rational& c2, const Rational& c1, const Rational& c0) {
    // z = w - c2/3 gives w^3 + P w + Q = 0
    const Rational p = c1 - c2 * c2 / Rational(3);
    const Rational q = Rational(2) * c2 * c2 * c2 / Rational(27) - c2 * c1 / Rational(3) + c0;
    const Rational delta = q * q / Rational(4) + p * p * p / Rational(27);
    if (delta.sign() < 0) {
        throw std::domain_error("cubic has three distinct real roots (casus irreducibilis)");
    }
    // 3w = cbrt(R - sqrt(D)) + cbrt(R + sqrt(D)) with R = -27Q/2, D = 729 delta
    const Rational r = Rational(-27) * q / Rational(2);
    const Rational d = Rational(729) * delta;
    CardanRoot out{c2, c1, c0, RadicalExpr()};
    if (const auto sd = rational_sqrt(d)) {
        const auto lo = rational_cbrt(r - *sd);
        const auto hi = rational_cbrt(r + *sd);
        if (lo && hi) {
            out.expression = RadicalExpr((-c2 + *lo + *hi) / Rational(3));
            return out;
        }
    }
    const RadicalExpr root_d = RadicalExpr::from(MultiSurd::sqrt_of(d));
    const RadicalExpr big_r(r);
    RadicalExpr sum = cbrt(big_r - root_d);
    if (!c2.is_zero()) {
        sum = RadicalExpr(-c2) + sum;
    }
    out.expression = (sum + cbrt(big_r + root_d)) / RadicalExpr(3);
    return out;
}

}  // namespace rothcoss
