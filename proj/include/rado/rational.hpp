#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rado/bigint.hpp"

namespace rado {

/// Exact rational number, always held in canonical form: the denominator is
/// positive and shares no factor with the numerator, and zero is 0/1.
/// Canonical form is established at construction, so structural equality is
/// value equality everywhere downstream.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt numerator, BigInt denominator);      // throws on zero denominator
    Rational(long long numerator, long long denominator);

    /// Parses "n/d" or a bare integer "n". Throws std::invalid_argument on
    /// malformed input or a zero denominator.
    static Rational from_string(std::string_view text);

    /// Canonical serialization: "n/d", or just "n" when the denominator is 1.
    std::string to_string() const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    Rational reciprocal() const;  // throws on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);  // throws on zero divisor

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const = default;
    std::strong_ordering operator<=>(const Rational& o) const;

private:
    BigInt num_;
    BigInt den_;

    void canonicalize();
};

/// Canonical rational n/d. Kept as a free function to match the construction
/// entry point used by parsers and bindings.
Rational normalize(long long numerator, long long denominator);

using RationalVector = std::vector<Rational>;

/// Exact inner product. Throws std::invalid_argument on length mismatch.
Rational dot(const RationalVector& u, const RationalVector& v);

}  // namespace rado
