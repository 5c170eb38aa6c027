#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "rado/coloring.hpp"
#include "rado/equation.hpp"

namespace rado {

/// A monochromatic arithmetic progression a, a+d, ..., a+(k-1)d.
struct APWitness {
    long long a = 0;
    long long d = 0;
    int k = 0;

    bool operator==(const APWitness&) const = default;
};

/// What a forcing search is trying to force in every coloring: either a
/// monochromatic solution of an equation, or a monochromatic k-AP.
struct ApTarget {
    int k = 0;

    bool operator==(const ApTarget&) const = default;
};
using ForcingProblem = std::variant<LinearEquation, ApTarget>;

enum class SearchStatus {
    found,                   // minimal forcing N established within the bound
    not_found_within_bound,  // an avoider covers the whole explored interval
    capped,                  // node budget exhausted before either outcome
};

/// Outcome of a forcing-number search together with its certificate: the
/// avoider is a coloring of [1..N-1] (or of the full explored interval when
/// nothing was forced) with no monochromatic target, checkable independently
/// of the search engine via verify_certificate.
struct ForcingResult {
    ForcingProblem problem;
    int num_colors = 1;
    SearchStatus status = SearchStatus::found;
    std::optional<int> forcing_n;  // engaged iff status == found
    int explored_bound = 0;        // minimality of forcing_n holds up to here
    Coloring avoider;
    long long nodes_explored = 0;
};

/// Thrown when a search exceeds its node budget; carries the progress made
/// so far (status == capped, avoider = deepest coloring reached).
class resource_cap_error : public std::runtime_error {
public:
    explicit resource_cap_error(ForcingResult partial)
        : std::runtime_error("search node budget exhausted"), partial_(std::move(partial)) {}

    const ForcingResult& partial() const { return partial_; }

private:
    ForcingResult partial_;
};

inline constexpr long long kDefaultNodeCap = 1'000'000'000;

/// Lexicographically smallest monochromatic tuple in [1..n]^arity satisfying
/// the equation (respecting its distinctness flag), or nullopt. Deterministic.
std::optional<Solution> find_mono_solution(const Coloring& col, const LinearEquation& eq);

/// Lexicographically smallest (a, d) whose k-AP lies inside [1..n] and is
/// monochromatic, or nullopt. Requires k >= 3.
std::optional<APWitness> find_mono_ap(const Coloring& col, int k);

/// Constructive finder for a monochromatic distinct quadruple with
/// e1 + e2 = e3 + e4, driven by arithmetic progressions: locates the first
/// monochromatic 5-AP a, a+d, ..., a+4d and returns (a, a+4d, a+d, a+3d).
/// Both pair sums equal 2a + 4d, the four terms are distinct, and all share
/// the AP's color. Returns nullopt when no monochromatic 5-AP fits in [1..n].
std::optional<Solution> four_from_vdw(const Coloring& col);

/// Constructive finder for the same quadruple shape, driven by difference
/// colorings: searches for a1 < a2 < a3 < a4 in [1..n] whose six pairwise
/// differences are pairwise distinct and all of one color, and returns
/// (a2-a1, a4-a2, a3-a1, a4-a3). The first two sum to a4 - a1, as do the last
/// two. Scans quadruples in lexicographic order; nullopt when none exists.
std::optional<Solution> four_from_ramsey(const Coloring& col);

/// Smallest N <= n_max such that every c-coloring of [1..N] contains a
/// monochromatic solution of eq, established by backtracking over canonical
/// colorings (the color classes of a coloring can be relabeled freely, so
/// only colorings whose color first-occurrences appear in increasing order
/// are explored). The result carries an avoider coloring of [1..N-1] as a
/// certificate. Throws resource_cap_error when node_cap is exceeded.
ForcingResult forcing_number(const LinearEquation& eq, int num_colors, int n_max,
                             long long node_cap = kDefaultNodeCap);

/// Same search with a monochromatic k-AP as the target.
ForcingResult vdw_forcing(int k, int num_colors, int n_max,
                          long long node_cap = kDefaultNodeCap);

/// Re-checks a certificate by exhaustive scan, sharing no code with the
/// search: true iff the avoider really contains no monochromatic target.
/// Throws std::invalid_argument on structurally malformed certificates.
bool verify_certificate(const ForcingResult& cert);

}  // namespace rado
