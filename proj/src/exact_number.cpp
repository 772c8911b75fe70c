#include "rothcoss/exact_number.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace rothcoss {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [](std::string_view digits) {
        std::string s(digits);
        if (s.empty() || s == "-" || s == "+") {
            throw std::invalid_argument("malformed rational literal");
        }
        BigInt v;
        if (v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) {
            throw std::invalid_argument("malformed rational literal: " + s);
        }
        return v;
    };
    if (slash == std::string_view::npos) {
        return Rational(to_int(text));
    }
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("reciprocal of zero");
    }
    return Rational(denominator(), numerator());
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

namespace {

constexpr std::array<unsigned, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Miller-Rabin with the first 13 prime bases is exact below this bound.
const BigInt& deterministic_bound() {
    static const BigInt bound("3317044064679887385961981");
    return bound;
}

bool miller_rabin(const BigInt& n) {
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    const BigInt n_minus_one = n - 1;
    for (unsigned a : kWitnesses) {
        if (n == a) {
            return true;
        }
        BigInt x;
        const BigInt base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_one) {
            continue;
        }
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n_minus_one) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

// Brent's variant of Pollard's rho; returns a nontrivial factor of composite n.
BigInt pollard_brent(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) {
        return 2;
    }
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2;
        BigInt x;
        BigInt ys;
        BigInt q = 1;
        BigInt g = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) {
                y = step(y);
            }
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = (q * abs(BigInt(x - y))) % n;
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(BigInt(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) {
            return g;
        }
    }
}

void factor_into(const BigInt& n, std::vector<BigInt>& out) {
    if (n == 1) {
        return;
    }
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const BigInt f = pollard_brent(n);
    factor_into(f, out);
    factor_into(BigInt(n / f), out);
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) {
        return false;
    }
    for (unsigned p : kWitnesses) {
        if (n == p) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            return false;
        }
    }
    if (n < 43 * 43) {
        return true;
    }
    if (n >= deterministic_bound()) {
        throw std::domain_error("primality of " + n.get_str() + " is beyond the deterministic range");
    }
    return miller_rabin(n);
}

std::vector<PrimePower> factorize(const BigInt& n) {
    if (n < 1) {
        throw std::invalid_argument("factorize requires a positive integer, got " + n.get_str());
    }
    std::vector<BigInt> primes;
    BigInt rest = n;
    for (unsigned long p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    factor_into(rest, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<PrimePower> result;
    for (const auto& p : primes) {
        if (!result.empty() && result.back().prime == p) {
            ++result.back().exponent;
        } else {
            result.push_back({p, 1});
        }
    }
    return result;
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::vector<BigInt> result{1};
    for (const auto& [prime, exponent] : factorize(n)) {
        const std::size_t existing = result.size();
        BigInt power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < existing; ++i) {
                result.push_back(result[i] * power);
            }
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

SquareSplit split_square(const BigInt& n) {
    SquareSplit split{1, 1};
    for (const auto& [prime, exponent] : factorize(n)) {
        BigInt half;
        mpz_pow_ui(half.get_mpz_t(), prime.get_mpz_t(), exponent / 2);
        split.root *= half;
        if (exponent % 2 == 1) {
            split.squarefree *= prime;
        }
    }
    return split;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) {
        return std::nullopt;
    }
    const BigInt num = q.numerator();
    const BigInt den = q.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    return Rational(sqrt(num), sqrt(den));
}

std::optional<Rational> rational_cbrt(const Rational& q) {
    auto exact_root = [](const BigInt& v) -> std::optional<BigInt> {
        BigInt r;
        if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), 3) == 0) {
            return std::nullopt;
        }
        return r;
    };
    const auto num = exact_root(q.numerator());
    const auto den = exact_root(q.denominator());
    if (!num || !den) {
        return std::nullopt;
    }
    return Rational(*num, *den);
}

}  // namespace rothcoss
