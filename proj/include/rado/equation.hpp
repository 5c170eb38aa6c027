#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rado/rational.hpp"

namespace rado {

/// A single linear equation b1*e1 + ... + bn*en = 0 over positive integers,
/// optionally requiring all ei pairwise distinct.
struct LinearEquation {
    std::vector<long long> coeffs;
    bool require_distinct = false;

    std::size_t arity() const { return coeffs.size(); }
};

/// A monochromatic assignment satisfying an equation.
struct Solution {
    std::vector<long long> values;
    int color = 0;

    bool operator==(const Solution&) const = default;
};

/// Validates and builds an equation. Rejects fewer than two coefficients and
/// the all-zero vector, both of which make the equation degenerate.
LinearEquation make_equation(std::vector<long long> coeffs, bool require_distinct);

/// The one-parameter family x1 + s*x2 = x3 + ... + x_{s+3}: coefficients
/// (1, s, -1, ..., -1) over s+3 variables, with distinctness required.
/// s = 0 is rejected: it collapses to x1 = x3, which has no distinct solution.
LinearEquation fox_equation(long long s);

/// True iff values satisfies the equation exactly (and is pairwise distinct
/// when the equation demands it). Values must be positive; the length must
/// match the equation's arity.
bool is_solution(const LinearEquation& eq, std::span<const long long> values);

/// True iff some nonempty subset of the coefficients sums to zero. Decided by
/// exhaustive subset enumeration; intended for the small arities equations
/// actually have.
bool has_zero_subset_sum(std::span<const long long> coeffs);

/// Rado's criterion for regularity of a single equation. Only defined for
/// equations without the distinctness requirement; use is_distinct_regular
/// for the distinct variant.
bool is_regular(const LinearEquation& eq);

/// A vector with pairwise distinct rational entries orthogonal to coeffs, or
/// nullopt when none exists. None exists exactly when the coefficient vector
/// has exactly two nonzero entries of equal magnitude and opposite sign: then
/// the orthogonality constraint forces those two coordinates equal. In every
/// other case a witness is found by a deterministic construction (see
/// implementation), so outputs are reproducible.
std::optional<RationalVector> find_distinct_kernel_vector(std::span<const long long> coeffs);

/// Rado's criterion for distinct-regularity: a zero-sum subset of the
/// coefficients exists and the kernel contains a vector with pairwise
/// distinct entries.
bool is_distinct_regular(const LinearEquation& eq);

}  // namespace rado
