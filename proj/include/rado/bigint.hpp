#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rado {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation with little-endian limbs in base 10^9.
/// The zero value has an empty limb vector and sign 0; nonzero values never
/// carry a leading zero limb. Division truncates toward zero and the
/// remainder takes the sign of the dividend, matching built-in integers.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT: implicit by design, mirrors built-in ints

    /// Parses an optionally signed decimal string. Throws std::invalid_argument
    /// on anything that is not a plain base-10 integer.
    static BigInt from_string(std::string_view text);

    std::string to_string() const;

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int signum() const { return sign_; }

    /// True when the value fits in a signed 64-bit integer.
    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error if it does not fit

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

    /// Quotient truncated toward zero and remainder with the dividend's sign.
    /// Throws std::invalid_argument on division by zero.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);

    /// Greatest common divisor, always non-negative; gcd(0, 0) = 0.
    static BigInt gcd(BigInt a, BigInt b);

    bool operator==(const BigInt& o) const = default;
    std::strong_ordering operator<=>(const BigInt& o) const;

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;

    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // base 10^9, least significant first

    void trim();
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
    divmod_magnitude(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v);
};

}  // namespace rado
