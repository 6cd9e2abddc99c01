#include "kform/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace kform {

namespace {

std::vector<long> divisors(long n) {
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Quotient of a by monic b over Z; division is exact by construction here.
std::vector<BigInt> exact_poly_div(const std::vector<BigInt>& a,
                                   const std::vector<BigInt>& b) {
    std::vector<BigInt> rem = a;
    std::vector<BigInt> q(a.size() - b.size() + 1, BigInt(0));
    for (std::size_t shift = q.size(); shift-- > 0;) {
        BigInt c = rem[shift + b.size() - 1];
        if (c == 0) continue;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
    }
    return q;
}

std::vector<BigInt> poly_mul_z(const std::vector<BigInt>& a,
                               const std::vector<BigInt>& b) {
    std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

const std::vector<BigInt>& cyclotomic_locked(long n,
                                             std::map<long, std::vector<BigInt>>& cache) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<BigInt> result;
    if (n == 1) {
        result = {BigInt(-1), BigInt(1)};  // x - 1
    } else {
        // (x^n - 1) / prod of Phi_d over proper divisors d of n
        std::vector<BigInt> numerator(static_cast<std::size_t>(n) + 1, BigInt(0));
        numerator[0] = -1;
        numerator[static_cast<std::size_t>(n)] = 1;
        std::vector<BigInt> denom = {BigInt(1)};
        for (long d : divisors(n)) {
            if (d == n) continue;
            denom = poly_mul_z(denom, cyclotomic_locked(d, cache));
        }
        result = exact_poly_div(numerator, denom);
    }
    return cache.emplace(n, std::move(result)).first->second;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(long n) {
    if (n < 1) throw Error("cyclotomic polynomial index must be positive");
    static std::map<long, std::vector<BigInt>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    return cyclotomic_locked(n, cache);
}

Cyclotomic Cyclotomic::from_polynomial(long conductor, std::vector<Rational> poly) {
    const std::vector<BigInt>& phi = cyclotomic_polynomial(conductor);
    const std::size_t deg = phi.size() - 1;
    // remainder mod the monic Phi_N
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j < phi.size(); ++j)
            poly[shift + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
    return Cyclotomic(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::root_power(long conductor, long k, const Rational& c) {
    if (conductor < 1) throw Error("conductor must be positive");
    long r = k % conductor;
    if (r < 0) r += conductor;
    std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
    poly[static_cast<std::size_t>(r)] = c;
    return from_polynomial(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::embedded(long bigger) const {
    if (bigger == conductor_) return *this;
    if (bigger % conductor_ != 0)
        throw Error("embedding target conductor must be a multiple");
    const long stride = bigger / conductor_;
    std::vector<Rational> poly(coeffs_.size() * static_cast<std::size_t>(stride) -
                                   static_cast<std::size_t>(stride) + 1,
                               Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        poly[k * static_cast<std::size_t>(stride)] = coeffs_[k];
    return from_polynomial(bigger, std::move(poly));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long l = static_cast<long>(lcm(BigInt(conductor_), BigInt(o.conductor_)));
    Cyclotomic a = embedded(l), b = o.embedded(l);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic a = *this;
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long l = static_cast<long>(lcm(BigInt(conductor_), BigInt(o.conductor_)));
    Cyclotomic a = embedded(l), b = o.embedded(l);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return from_polynomial(l, std::move(prod));
}

Cyclotomic Cyclotomic::conjugate() const {
    // zeta -> zeta^{N-1}
    std::size_t max_deg = coeffs_.empty()
                              ? 0
                              : (coeffs_.size() - 1) * static_cast<std::size_t>(conductor_ - 1);
    std::vector<Rational> poly(max_deg + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        std::size_t e = (k * static_cast<std::size_t>(conductor_ - 1)) %
                        static_cast<std::size_t>(conductor_);
        poly[e] += coeffs_[k];
    }
    return from_polynomial(conductor_, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::as_rational() const {
    if (!is_rational()) throw NotAnInteger("value is irrational: " + to_string());
    return coeffs_[0];
}

BigInt Cyclotomic::as_integer() const {
    Rational r = as_rational();
    if (boost::multiprecision::denominator(r) != 1)
        throw NotAnInteger("value is not an integer: " + to_string());
    return boost::multiprecision::numerator(r);
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (conductor_ == o.conductor_) return coeffs_ == o.coeffs_;
    long l = static_cast<long>(lcm(BigInt(conductor_), BigInt(o.conductor_)));
    return embedded(l).coeffs_ == o.embedded(l).coeffs_;
}

namespace {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            os << rational_to_string(abs_c);
        } else {
            if (abs_c != 1) os << rational_to_string(abs_c) << '*';
            os << "z(" << conductor_ << ',' << k << ')';
        }
    }
    if (first) os << '0';
    return os.str();
}

// ---------------------------------------------------------------------------
// Literal parser: integers, rationals p/q, terms c*z(N,k), joined by +/-.

namespace {

struct LiteralParser {
    const std::string& s;
    std::size_t pos = 0;

    explicit LiteralParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw ParseError(std::string("expected '") + c + "' in cyclotomic literal", pos);
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits_start) throw ParseError("expected integer", pos);
        return BigInt(s.substr(start, pos - start));
    }

    Rational parse_rational() {
        BigInt num = parse_integer();
        if (eat('/')) {
            BigInt den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", pos);
            return Rational(num, den);
        }
        return Rational(num);
    }

    Cyclotomic parse_zeta(const Rational& coeff) {
        // at 'z'
        ++pos;
        expect('(');
        BigInt n = parse_integer();
        expect(',');
        BigInt k = parse_integer();
        expect(')');
        if (n < 1) throw ParseError("conductor must be positive", pos);
        return Cyclotomic::root_power(static_cast<long>(n), static_cast<long>(k), coeff);
    }

    Cyclotomic parse_term() {
        skip_ws();
        if (pos < s.size() && s[pos] == 'z') return parse_zeta(Rational(1));
        Rational c = parse_rational();
        skip_ws();
        if (eat('*')) {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'z')
                throw ParseError("expected z(N,k) after '*'", pos);
            return parse_zeta(c);
        }
        return Cyclotomic(c);
    }

    Cyclotomic parse() {
        skip_ws();
        Cyclotomic acc(Rational(0));
        bool negate = eat('-');
        acc = acc + (negate ? -parse_term() : parse_term());
        for (;;) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) {
                acc = acc + parse_term();
            } else if (eat('-')) {
                acc = acc - parse_term();
            } else {
                throw ParseError("unexpected character in cyclotomic literal", pos);
            }
        }
        return acc;
    }
};

}  // namespace

Cyclotomic parse_cyclotomic_literal(const std::string& text) {
    LiteralParser p(text);
    return p.parse();
}

}  // namespace kform
