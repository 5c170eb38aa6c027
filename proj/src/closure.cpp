#include "rado/closure.hpp"

#include <stdexcept>

namespace rado {

RationalSet closure_step(const RationalSet& c) {
    RationalSet next = c;
    for (const Rational& a : c) {
        for (const Rational& b : c) {
            next.insert(a + b);
            next.insert(a - b);
            next.insert(a * b);
            if (!b.is_zero()) next.insert(a / b);
        }
    }
    return next;
}

ClosureState closure_enumerate(const RationalSet& base, int depth, std::size_t cap) {
    if (depth < 0) throw std::invalid_argument("closure: depth must be non-negative");
    ClosureState state;
    state.base = base;
    state.levels.push_back(base);
    for (int step = 0; step < depth; ++step) {
        RationalSet next = closure_step(state.levels.back());
        if (next.size() > cap) {
            state.capped = true;
            break;
        }
        state.levels.push_back(std::move(next));
        state.depth = step + 1;
    }
    return state;
}

MembershipResult in_closure(const Rational& q, const RationalSet& base, int depth,
                            std::size_t cap) {
    ClosureState state = closure_enumerate(base, depth, cap);
    MembershipResult result;
    result.depth_searched = state.depth;
    result.capped = state.capped;
    // Levels are nested, so the first level containing q is well defined.
    for (int level = 0; level <= state.depth; ++level) {
        if (state.levels[static_cast<std::size_t>(level)].count(q)) {
            result.found = true;
            result.level = level;
            break;
        }
    }
    return result;
}

}  // namespace rado
