#pragma once

#include <set>
#include <vector>

#include "rado/rational.hpp"

namespace rado {

using RationalSet = std::set<Rational>;

/// Level-by-level closure of a finite rational set under the four field
/// operations: levels[0] is the base set and each next level is
/// closure_step of the previous. `capped` records that enumeration stopped
/// because the next level would have exceeded the size cap; the recorded
/// levels are always complete.
struct ClosureState {
    RationalSet base;
    std::vector<RationalSet> levels;
    int depth = 0;  // number of steps actually applied
    bool capped = false;
};

/// One induction step: c together with a+b, a-b, a*b over all ordered pairs
/// of c, and a/b over all ordered pairs with b nonzero.
RationalSet closure_step(const RationalSet& c);

/// Applies closure_step `depth` times, stopping early (capped = true) when
/// the next level would exceed `cap` elements.
ClosureState closure_enumerate(const RationalSet& base, int depth, std::size_t cap);

/// Outcome of a depth-bounded membership query. `found == false` only means
/// the value did not appear within the searched depth (or before the size
/// cap); it is never a proof of non-membership in the full closure.
struct MembershipResult {
    bool found = false;
    int level = -1;        // first level containing the query, when found
    int depth_searched = 0;
    bool capped = false;
};

MembershipResult in_closure(const Rational& q, const RationalSet& base, int depth,
                            std::size_t cap);

}  // namespace rado
