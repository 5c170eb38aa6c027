#include "rado/equation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rado {

namespace {

void validate_coeffs(std::span<const long long> coeffs) {
    if (coeffs.size() < 2)
        throw std::invalid_argument("equation: need at least two coefficients");
    if (std::all_of(coeffs.begin(), coeffs.end(), [](long long b) { return b == 0; }))
        throw std::invalid_argument("equation: all coefficients are zero");
}

}  // namespace

LinearEquation make_equation(std::vector<long long> coeffs, bool require_distinct) {
    validate_coeffs(coeffs);
    return LinearEquation{std::move(coeffs), require_distinct};
}

LinearEquation fox_equation(long long s) {
    if (s < 1) throw std::invalid_argument("fox_equation: s must be at least 1");
    std::vector<long long> coeffs;
    coeffs.reserve(static_cast<std::size_t>(s) + 3);
    coeffs.push_back(1);
    coeffs.push_back(s);
    for (long long i = 0; i < s + 1; ++i) coeffs.push_back(-1);
    return LinearEquation{std::move(coeffs), true};
}

bool is_solution(const LinearEquation& eq, std::span<const long long> values) {
    if (values.size() != eq.coeffs.size())
        throw std::invalid_argument("is_solution: value count does not match equation arity");
    for (long long v : values) {
        if (v < 1) throw std::invalid_argument("is_solution: values must be positive");
    }
    __int128 sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        sum += static_cast<__int128>(eq.coeffs[i]) * values[i];
    if (sum != 0) return false;
    if (eq.require_distinct) {
        for (std::size_t i = 0; i < values.size(); ++i)
            for (std::size_t j = i + 1; j < values.size(); ++j)
                if (values[i] == values[j]) return false;
    }
    return true;
}

bool has_zero_subset_sum(std::span<const long long> coeffs) {
    validate_coeffs(coeffs);
    const std::size_t n = coeffs.size();
    if (n > 63) throw std::invalid_argument("has_zero_subset_sum: too many coefficients");
    for (std::uint64_t mask = 1; mask < (1ULL << n); ++mask) {
        __int128 sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) sum += coeffs[i];
        if (sum == 0) return true;
    }
    return false;
}

bool is_regular(const LinearEquation& eq) {
    if (eq.require_distinct)
        throw std::invalid_argument(
            "is_regular: equation requires distinct values; use is_distinct_regular");
    return has_zero_subset_sum(eq.coeffs);
}

std::optional<RationalVector> find_distinct_kernel_vector(std::span<const long long> coeffs) {
    validate_coeffs(coeffs);
    const std::size_t n = coeffs.size();

    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < n; ++i)
        if (coeffs[i] != 0) nonzero.push_back(i);

    // The orthogonality constraint pins two coordinates to each other exactly
    // when the coefficients are c*(e_i - e_j); no distinct witness exists then.
    if (nonzero.size() == 2 && coeffs[nonzero[0]] + coeffs[nonzero[1]] == 0)
        return std::nullopt;

    const std::size_t pivot = nonzero.front();
    const Rational b_pivot(coeffs[pivot]);

    // Free coordinates take the values K, K^2, ... in position order; the
    // pivot coordinate is solved from the equation. Powers of K are distinct
    // among themselves, so only a clash with the solved coordinate can fail,
    // and each such clash is a nontrivial polynomial identity in K with at
    // most n roots. Trying successive K therefore terminates quickly.
    for (long long base = 2;; ++base) {
        RationalVector lambda(n);
        Rational partial;  // sum of b_i * lambda_i over free coordinates
        Rational power(1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == pivot) continue;
            power *= Rational(base);
            lambda[i] = power;
            partial += Rational(coeffs[i]) * power;
        }
        lambda[pivot] = -partial / b_pivot;

        bool clash = false;
        for (std::size_t i = 0; i < n && !clash; ++i)
            clash = i != pivot && lambda[i] == lambda[pivot];
        if (!clash) return lambda;

        if (base > static_cast<long long>(n * n + 2))
            throw std::logic_error("find_distinct_kernel_vector: construction did not converge");
    }
}

bool is_distinct_regular(const LinearEquation& eq) {
    return has_zero_subset_sum(eq.coeffs) && find_distinct_kernel_vector(eq.coeffs).has_value();
}

}  // namespace rado
