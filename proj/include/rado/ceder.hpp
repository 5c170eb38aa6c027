#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "rado/rational.hpp"

namespace rado {

/// The ordered tuple of a vector's nonzero coordinates, in support order.
/// Two vectors are assigned the same color exactly when their signatures are
/// equal, so this is the color "name" before id registration.
using Signature = std::vector<Rational>;

/// Element of the rational vector space with countable basis b0, b1, b2, ...:
/// a finite set of (basis index, nonzero coordinate) pairs, kept sorted by
/// index. Zero coordinates are never stored; the empty vector is the zero
/// vector.
class SparseQVector {
public:
    SparseQVector() = default;

    /// Builds a vector from (index, value) pairs in any order. Zero values
    /// are dropped; negative or duplicate indices are rejected.
    static SparseQVector from_entries(std::vector<std::pair<int, Rational>> entries);

    /// Convenience: the basis vector scale * b_index.
    static SparseQVector basis(int index, Rational scale = Rational(1));

    const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    /// Strictly increasing indices of the nonzero coordinates.
    std::vector<int> support() const;

    /// Nonzero coordinates in support order.
    Signature signature() const;

    /// Coordinate at an index, zero when absent.
    Rational coordinate(int index) const;

    bool operator==(const SparseQVector&) const = default;
    // Ordering is lexicographic over the entry list; used for deterministic
    // containers, not for any vector-space meaning.
    bool operator<(const SparseQVector& o) const { return entries_ < o.entries_; }

private:
    std::vector<std::pair<int, Rational>> entries_;
};

std::vector<int> support(const SparseQVector& w);
Signature signature(const SparseQVector& w);

/// Coloring parameter: a rational gamma outside {0, 1}. Values 0 and 1 make
/// z - x = gamma*(y - x) degenerate (z = x or z = y) and are rejected.
struct CederParams {
    explicit CederParams(Rational g);
    Rational gamma;
};

/// Maps signatures to small integer ids in order of first appearance. Ids
/// are stable within one registry; concurrent registration is serialized, so
/// one id wins per signature.
class SignatureRegistry {
public:
    int id_of(const Signature& sig);
    std::optional<int> lookup(const Signature& sig) const;
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::map<Signature, int> ids_;
};

/// Color of w: the registry id of its signature. Injective over signatures:
/// equal ids exactly when signatures are equal.
int ceder_color_id(const SparseQVector& w, SignatureRegistry& registry);

/// The third vertex z = gamma*y + (1-gamma)*x, computed coordinatewise.
/// (x, y, z) then satisfies z - x = gamma*(y - x).
SparseQVector complete_triple(const SparseQVector& x, const SparseQVector& y,
                              const CederParams& p);

/// Reduces a three-term equation b1*e1 + b2*e2 + b3*e3 = 0 (with
/// b1 + b2 + b3 = 0) to its triangle parameter gamma = -b2/b3. All three
/// coefficients must be nonzero; that is exactly what guarantees
/// gamma is outside {0, 1}.
Rational gamma_from_triple(const Rational& b1, const Rational& b2, const Rational& b3);

/// Every vector with support inside {0..max_index}, support size at most
/// max_support, and coordinates drawn from grid (zero entries of the grid
/// are rejected). Includes the zero vector. Deterministic order.
std::vector<SparseQVector> enumerate_universe(int max_index, int max_support,
                                              const std::vector<Rational>& grid);

struct CederCounterexample {
    SparseQVector x, y, z;
};

/// Outcome of an exhaustive triple scan: every ordered triple of pairwise
/// distinct universe vectors is examined against z - x = gamma*(y - x).
struct CederReport {
    long long triples_checked = 0;
    long long equation_triples = 0;   // triples satisfying the equation
    long long mono_violations = 0;    // of those, monochromatic ones (expected 0)
    std::vector<CederCounterexample> counterexamples;  // capped sample of violations
};

/// Checks that the signature coloring admits no monochromatic distinct
/// solution of z - x = gamma*(y - x) inside the given universe. Vectors
/// share a color exactly when their signatures are equal, so the scan
/// compares signatures directly. `threads` bounds worker parallelism; the
/// report does not depend on it.
CederReport verify_ceder(const CederParams& p, const std::vector<SparseQVector>& universe,
                         int threads = 1);

}  // namespace rado
