#include "rado/rational.hpp"

#include <stdexcept>

namespace rado {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    canonicalize();
}

Rational::Rational(long long numerator, long long denominator)
    : num_(numerator), den_(denominator) {
    canonicalize();
}

void Rational::canonicalize() {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(text), BigInt(1));
    BigInt n = BigInt::from_string(text.substr(0, slash));
    BigInt d = BigInt::from_string(text.substr(slash + 1));
    return Rational(std::move(n), std::move(d));
}

std::string Rational::to_string() const {
    std::string out = num_.to_string();
    if (!(den_ == BigInt(1))) {
        out += '/';
        out += den_.to_string();
    }
    return out;
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
    // Denominators are positive, so cross-multiplication preserves order.
    return num_ * o.den_ <=> o.num_ * den_;
}

Rational normalize(long long numerator, long long denominator) {
    return Rational(numerator, denominator);
}

Rational dot(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("dot: vectors have different lengths");
    Rational acc;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

}  // namespace rado
