#include "rado/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace rado {

namespace {
constexpr std::uint64_t kBase64 = 1'000'000'000ULL;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // Avoid UB on LLONG_MIN by negating in unsigned space.
    unsigned long long mag = value < 0
        ? ~static_cast<unsigned long long>(value) + 1ULL
        : static_cast<unsigned long long>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag % kBase64));
        mag /= kBase64;
    }
}

BigInt BigInt::from_string(std::string_view text) {
    std::string_view digits = text;
    int sign = 1;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        sign = digits.front() == '-' ? -1 : 1;
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw std::invalid_argument("BigInt: empty integer literal");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("BigInt: invalid character in integer literal");
    }
    BigInt out;
    // Consume 9 decimal digits per limb, starting from the least significant end.
    for (std::size_t end = digits.size(); end > 0;) {
        std::size_t begin = end >= 9 ? end - 9 : 0;
        std::uint32_t limb = 0;
        for (std::size_t i = begin; i < end; ++i)
            limb = limb * 10 + static_cast<std::uint32_t>(digits[i] - '0');
        out.limbs_.push_back(limb);
        end = begin;
    }
    out.sign_ = sign;
    out.trim();
    return out;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(limbs_.back());
    char buf[10];
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        out += buf;
    }
    return out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 3) return false;
    unsigned long long mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (mag > (~0ULL - limbs_[i]) / kBase64) return false;
        mag = mag * kBase64 + limbs_[i];
    }
    unsigned long long limit = sign_ < 0
        ? 1ULL << 63
        : (1ULL << 63) - 1;
    return mag <= limit;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: value does not fit in 64 bits");
    unsigned long long mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = mag * kBase64 + limbs_[i];
    if (sign_ < 0) return static_cast<long long>(~mag + 1ULL);
    return static_cast<long long>(mag);
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        std::uint64_t cur = carry;
        if (i < a.size()) cur += a[i];
        if (i < b.size()) cur += b[i];
        out.push_back(static_cast<std::uint32_t>(cur % kBase64));
        carry = static_cast<std::uint32_t>(cur / kBase64);
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow -
                           (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (cur < 0) {
            cur += static_cast<std::int64_t>(kBase64);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(cur));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] +
                                static_cast<std::uint64_t>(a[i]) * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur % kBase64);
            carry = cur / kBase64;
        }
        for (std::size_t k = i + b.size(); carry; ++k) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur % kBase64);
            carry = cur / kBase64;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Schoolbook long division (Knuth's algorithm D adapted to base 10^9).
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>
BigInt::divmod_magnitude(const std::vector<std::uint32_t>& u,
                         const std::vector<std::uint32_t>& v) {
    if (compare_magnitude(u, v) < 0) return {{}, u};

    if (v.size() == 1) {
        std::vector<std::uint32_t> q(u.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = u.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase64 + u[i];
            q[i] = static_cast<std::uint32_t>(cur / v[0]);
            rem = cur % v[0];
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        std::vector<std::uint32_t> r;
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return {q, r};
    }

    // Normalize so the top divisor limb is at least base/2; keeps the trial
    // quotient within 2 of the true digit.
    const std::uint32_t d = static_cast<std::uint32_t>(kBase64 / (v.back() + 1ULL));
    std::vector<std::uint32_t> un = mul_magnitude(u, {d});
    std::vector<std::uint32_t> vn = mul_magnitude(v, {d});
    un.resize(u.size() + 1, 0);  // always keep one extra limb on top

    const std::size_t n = vn.size();
    const std::size_t m = un.size() - n;  // quotient has at most m limbs
    std::vector<std::uint32_t> q(m, 0);

    for (std::size_t j = m; j-- > 0;) {
        std::uint64_t top = static_cast<std::uint64_t>(un[j + n]) * kBase64 + un[j + n - 1];
        std::uint64_t qhat = top / vn[n - 1];
        std::uint64_t rhat = top % vn[n - 1];
        while (qhat >= kBase64 ||
               qhat * vn[n - 2] > rhat * kBase64 + un[j + n - 2]) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= kBase64) break;
        }

        // Multiply-and-subtract qhat * vn from un[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t product = qhat * vn[i] + carry;
            carry = product / kBase64;
            std::int64_t cur = static_cast<std::int64_t>(un[i + j]) - borrow -
                               static_cast<std::int64_t>(product % kBase64);
            if (cur < 0) {
                cur += static_cast<std::int64_t>(kBase64);
                borrow = 1;
            } else {
                borrow = 0;
            }
            un[i + j] = static_cast<std::uint32_t>(cur);
        }
        std::int64_t cur = static_cast<std::int64_t>(un[j + n]) - borrow -
                           static_cast<std::int64_t>(carry);
        if (cur < 0) {
            // qhat was one too large; add the divisor back.
            cur += static_cast<std::int64_t>(kBase64);
            --qhat;
            std::uint32_t carry2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(un[i + j]) + vn[i] + carry2;
                un[i + j] = static_cast<std::uint32_t>(s % kBase64);
                carry2 = static_cast<std::uint32_t>(s / kBase64);
            }
            cur += carry2;
            cur -= static_cast<std::int64_t>(kBase64);  // the add-back overflows into un[j+n]
        }
        un[j + n] = static_cast<std::uint32_t>(cur);
        q[j] = static_cast<std::uint32_t>(qhat);
    }

    while (!q.empty() && q.back() == 0) q.pop_back();
    un.resize(n);
    // Undo the normalization on the remainder.
    auto [r, zero] = divmod_magnitude(un, {d});
    (void)zero;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return {q, r};
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
        out.sign_ = a.sign_;
    } else {
        int cmp = BigInt::compare_magnitude(a.limbs_, b.limbs_);
        if (cmp == 0) return BigInt{};
        if (cmp > 0) {
            out.limbs_ = BigInt::sub_magnitude(a.limbs_, b.limbs_);
            out.sign_ = a.sign_;
        } else {
            out.limbs_ = BigInt::sub_magnitude(b.limbs_, a.limbs_);
            out.sign_ = b.sign_;
        }
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.limbs_ = BigInt::mul_magnitude(a.limbs_, b.limbs_);
    out.sign_ = a.sign_ * b.sign_;
    out.trim();
    return out;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
    auto [qm, rm] = divmod_magnitude(a.limbs_, b.limbs_);
    BigInt q, r;
    q.limbs_ = std::move(qm);
    q.sign_ = a.sign_ * b.sign_;
    q.trim();
    r.limbs_ = std::move(rm);
    r.sign_ = a.sign_;
    r.trim();
    return {q, r};
}

BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).first; }
BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).second; }

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::strong_ordering BigInt::operator<=>(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ <=> o.sign_;
    int cmp = compare_magnitude(limbs_, o.limbs_);
    if (sign_ < 0) cmp = -cmp;
    return cmp <=> 0;
}

}  // namespace rado
