#include "rado/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace rado {

namespace {

// Suffix bounds for partial-sum pruning: the minimum and maximum that
// coefficients i..end can contribute with values in [1..n].
struct SuffixBounds {
    std::vector<__int128> min_sum;
    std::vector<__int128> max_sum;

    SuffixBounds(std::span<const long long> coeffs, long long n) {
        const std::size_t m = coeffs.size();
        min_sum.assign(m + 1, 0);
        max_sum.assign(m + 1, 0);
        for (std::size_t i = m; i-- > 0;) {
            const __int128 b = coeffs[i];
            min_sum[i] = min_sum[i + 1] + (coeffs[i] >= 0 ? b : b * n);
            max_sum[i] = max_sum[i + 1] + (coeffs[i] >= 0 ? b * n : b);
        }
    }
};

bool contains(std::span<const long long> values, std::size_t count, long long v) {
    for (std::size_t i = 0; i < count; ++i)
        if (values[i] == v) return true;
    return false;
}

// Lexicographic scan for a monochromatic solution. `color` is -1 until the
// first value fixes it. The final position is solved directly from the
// equation when its coefficient is nonzero.
bool scan_solution(const Coloring& col, const LinearEquation& eq, std::size_t pos,
                   __int128 partial, int color, const SuffixBounds& bounds,
                   std::vector<long long>& values) {
    const std::size_t m = eq.coeffs.size();
    const long long n = col.n;
    if (partial + bounds.min_sum[pos] > 0 || partial + bounds.max_sum[pos] < 0) return false;

    if (pos == m - 1 && eq.coeffs[pos] != 0) {
        const __int128 b = eq.coeffs[pos];
        if (partial % b != 0) return false;
        const __int128 needed = -partial / b;
        if (needed < 1 || needed > n) return false;
        const long long v = static_cast<long long>(needed);
        if (color >= 0 && col.color_of(v) != color) return false;
        if (eq.require_distinct && contains(values, pos, v)) return false;
        values[pos] = v;
        return true;
    }

    for (long long v = 1; v <= n; ++v) {
        if (color >= 0 && col.color_of(v) != color) continue;
        if (eq.require_distinct && contains(values, pos, v)) continue;
        values[pos] = v;
        const __int128 next = partial + static_cast<__int128>(eq.coeffs[pos]) * v;
        if (pos == m - 1) {
            if (next == 0) return true;
            continue;
        }
        const int next_color = color >= 0 ? color : col.color_of(v);
        if (scan_solution(col, eq, pos + 1, next, next_color, bounds, values)) return true;
    }
    return false;
}

}  // namespace

std::optional<Solution> find_mono_solution(const Coloring& col, const LinearEquation& eq) {
    if (col.n == 0) return std::nullopt;
    SuffixBounds bounds(eq.coeffs, col.n);
    std::vector<long long> values(eq.coeffs.size(), 0);
    if (!scan_solution(col, eq, 0, 0, -1, bounds, values)) return std::nullopt;
    return Solution{values, col.color_of(values.front())};
}

std::optional<APWitness> find_mono_ap(const Coloring& col, int k) {
    if (k < 3) throw std::invalid_argument("find_mono_ap: k must be at least 3");
    const long long n = col.n;
    for (long long a = 1; a <= n; ++a) {
        const int color = col.color_of(a);
        for (long long d = 1; a + static_cast<long long>(k - 1) * d <= n; ++d) {
            bool mono = true;
            for (int i = 1; i < k && mono; ++i) mono = col.color_of(a + i * d) == color;
            if (mono) return APWitness{a, d, k};
        }
    }
    return std::nullopt;
}

std::optional<Solution> four_from_vdw(const Coloring& col) {
    if (col.n < 5) return std::nullopt;
    auto ap = find_mono_ap(col, 5);
    if (!ap) return std::nullopt;
    const long long a = ap->a, d = ap->d;
    return Solution{{a, a + 4 * d, a + d, a + 3 * d}, col.color_of(a)};
}

std::optional<Solution> four_from_ramsey(const Coloring& col) {
    const long long n = col.n;
    for (long long a1 = 1; a1 <= n - 3; ++a1) {
        for (long long a2 = a1 + 1; a2 <= n - 2; ++a2) {
            const long long d21 = a2 - a1;
            const int color = col.color_of(d21);
            for (long long a3 = a2 + 1; a3 <= n - 1; ++a3) {
                const long long d31 = a3 - a1, d32 = a3 - a2;
                if (d31 == d21 || d32 == d21 || d32 == d31) continue;
                if (col.color_of(d31) != color || col.color_of(d32) != color) continue;
                for (long long a4 = a3 + 1; a4 <= n; ++a4) {
                    const long long d41 = a4 - a1, d42 = a4 - a2, d43 = a4 - a3;
                    if (d41 == d21 || d41 == d31 || d41 == d32 ||
                        d42 == d21 || d42 == d31 || d42 == d32 ||
                        d43 == d21 || d43 == d31 || d43 == d32 ||
                        d42 == d41 || d43 == d41 || d43 == d42)
                        continue;
                    if (col.color_of(d41) != color || col.color_of(d42) != color ||
                        col.color_of(d43) != color)
                        continue;
                    return Solution{{d21, d42, d31, d43}, color};
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Incremental avoider check for equations: does coloring element `k` with
// `cand` complete a monochromatic solution inside [1..k]? Any new solution
// must contain k, so every value in it has color `cand`.
class EquationTarget {
public:
    explicit EquationTarget(const LinearEquation& eq) : eq_(eq) {}

    bool creates_mono(const std::vector<int>& prefix, long long k, int cand) const {
        SuffixBounds bounds(eq_.coeffs, k);
        std::vector<long long> values(eq_.coeffs.size(), 0);
        return search(prefix, k, cand, 0, 0, false, bounds, values);
    }

private:
    const LinearEquation& eq_;

    int color_at(const std::vector<int>& prefix, long long k, int cand, long long v) const {
        return v == k ? cand : prefix[static_cast<std::size_t>(v) - 1];
    }

    bool search(const std::vector<int>& prefix, long long k, int cand, std::size_t pos,
                __int128 partial, bool uses_k, const SuffixBounds& bounds,
                std::vector<long long>& values) const {
        const std::size_t m = eq_.coeffs.size();
        if (pos == m) return uses_k && partial == 0;
        if (partial + bounds.min_sum[pos] > 0 || partial + bounds.max_sum[pos] < 0) return false;
        for (long long v = 1; v <= k; ++v) {
            if (!uses_k && pos == m - 1 && v != k) v = k;  // last chance to include k
            if (color_at(prefix, k, cand, v) != cand) continue;
            if (eq_.require_distinct && contains(values, pos, v)) continue;
            values[pos] = v;
            const __int128 next = partial + static_cast<__int128>(eq_.coeffs[pos]) * v;
            if (search(prefix, k, cand, pos + 1, next, uses_k || v == k, bounds, values))
                return true;
        }
        return false;
    }
};

// Same for k-APs: a new monochromatic AP inside [1..k] must end at k.
class ApTargetCheck {
public:
    explicit ApTargetCheck(int k) : k_(k) {}

    bool creates_mono(const std::vector<int>& prefix, long long last, int cand) const {
        for (long long d = 1; last - static_cast<long long>(k_ - 1) * d >= 1; ++d) {
            bool mono = true;
            for (int i = 1; i < k_ && mono; ++i) {
                const long long v = last - i * d;
                mono = prefix[static_cast<std::size_t>(v) - 1] == cand;
            }
            if (mono) return true;
        }
        return false;
    }

private:
    int k_;
};

template <typename Target>
ForcingResult run_forcing(ForcingProblem problem, const Target& target, int num_colors,
                          int n_max, long long node_cap) {
    if (num_colors < 1) throw std::invalid_argument("forcing search: need at least one color");
    if (n_max < 1) throw std::invalid_argument("forcing search: n_max must be positive");

    ForcingResult result;
    result.problem = std::move(problem);
    result.num_colors = num_colors;

    // Depth-first search over canonical colorings of 1, 2, 3, ...; each node
    // of the tree is an avoider of its own prefix. Colors are tried in
    // increasing order, so the first coloring reaching a given depth is the
    // lexicographically smallest canonical avoider of that interval.
    std::vector<int> prefix;          // colors of 1..depth
    std::vector<int> next_choice(static_cast<std::size_t>(n_max) + 1, 0);
    std::vector<int> best;            // deepest avoider reached so far
    long long nodes = 0;
    bool complete_avoider = false;

    while (true) {
        const long long depth = static_cast<long long>(prefix.size());
        if (depth == n_max) {
            complete_avoider = true;
            break;
        }
        // Canonical form: a color is admissible if already used, or the one
        // new color num_used; element 1 always takes color 0.
        int used = 0;
        for (int c : prefix) used = std::max(used, c + 1);
        const int limit = std::min(num_colors - 1, used);
        int& choice = next_choice[static_cast<std::size_t>(depth)];
        bool extended = false;
        while (choice <= limit) {
            const int cand = choice++;
            if (++nodes > node_cap) {
                result.status = SearchStatus::capped;
                result.forcing_n = std::nullopt;
                result.explored_bound = static_cast<int>(best.size());
                result.avoider = Coloring{static_cast<int>(best.size()), num_colors, best};
                result.nodes_explored = nodes;
                throw resource_cap_error(std::move(result));
            }
            if (target.creates_mono(prefix, depth + 1, cand)) continue;
            prefix.push_back(cand);
            next_choice[static_cast<std::size_t>(depth + 1)] = 0;
            if (prefix.size() > best.size()) best = prefix;
            extended = true;
            break;
        }
        if (extended) continue;
        if (prefix.empty()) break;  // tree exhausted
        prefix.pop_back();
    }

    result.nodes_explored = nodes;
    if (complete_avoider) {
        result.status = SearchStatus::not_found_within_bound;
        result.forcing_n = std::nullopt;
        result.explored_bound = n_max;
        result.avoider = Coloring{n_max, num_colors, prefix};
    } else {
        result.status = SearchStatus::found;
        result.forcing_n = static_cast<int>(best.size()) + 1;
        result.explored_bound = n_max;
        result.avoider = Coloring{static_cast<int>(best.size()), num_colors, best};
    }
    return result;
}

}  // namespace

ForcingResult forcing_number(const LinearEquation& eq, int num_colors, int n_max,
                             long long node_cap) {
    EquationTarget target(eq);
    return run_forcing(eq, target, num_colors, n_max, node_cap);
}

ForcingResult vdw_forcing(int k, int num_colors, int n_max, long long node_cap) {
    if (k < 3) throw std::invalid_argument("vdw_forcing: k must be at least 3");
    ApTargetCheck target(k);
    return run_forcing(ApTarget{k}, target, num_colors, n_max, node_cap);
}

namespace {

// Brute-force enumeration of all tuples in [1..n]^arity; no pruning beyond
// the ranges themselves, so the verifier stays independent of the search.
bool avoider_has_equation_solution(const Coloring& col, const LinearEquation& eq,
                                   std::size_t pos, std::vector<long long>& values) {
    if (pos == eq.coeffs.size()) {
        __int128 sum = 0;
        for (std::size_t i = 0; i < values.size(); ++i)
            sum += static_cast<__int128>(eq.coeffs[i]) * values[i];
        if (sum != 0) return false;
        const int color = col.color_of(values.front());
        for (long long v : values)
            if (col.color_of(v) != color) return false;
        if (eq.require_distinct) {
            for (std::size_t i = 0; i < values.size(); ++i)
                for (std::size_t j = i + 1; j < values.size(); ++j)
                    if (values[i] == values[j]) return false;
        }
        return true;
    }
    for (long long v = 1; v <= col.n; ++v) {
        values[pos] = v;
        if (avoider_has_equation_solution(col, eq, pos + 1, values)) return true;
    }
    return false;
}

bool avoider_has_mono_ap(const Coloring& col, int k) {
    for (long long a = 1; a <= col.n; ++a) {
        for (long long d = 1; a + static_cast<long long>(k - 1) * d <= col.n; ++d) {
            const int color = col.color_of(a);
            bool mono = true;
            for (int i = 1; i < k && mono; ++i) mono = col.color_of(a + i * d) == color;
            if (mono) return true;
        }
    }
    return false;
}

}  // namespace

bool verify_certificate(const ForcingResult& cert) {
    if (cert.num_colors < 1)
        throw std::invalid_argument("certificate: need at least one color");
    if (cert.avoider.num_colors != cert.num_colors)
        throw std::invalid_argument("certificate: avoider color count mismatch");
    if (cert.avoider.colors.size() != static_cast<std::size_t>(cert.avoider.n))
        throw std::invalid_argument("certificate: avoider length mismatch");
    for (int c : cert.avoider.colors)
        if (c < 0 || c >= cert.num_colors)
            throw std::invalid_argument("certificate: avoider color out of range");

    if (cert.status == SearchStatus::found) {
        if (!cert.forcing_n || *cert.forcing_n < 1)
            throw std::invalid_argument("certificate: missing forcing_n");
        if (cert.avoider.n != *cert.forcing_n - 1)
            throw std::invalid_argument("certificate: avoider does not cover [1..N-1]");
    } else {
        if (cert.avoider.n != cert.explored_bound)
            throw std::invalid_argument("certificate: avoider does not cover explored bound");
    }

    if (const auto* eq = std::get_if<LinearEquation>(&cert.problem)) {
        make_equation(eq->coeffs, eq->require_distinct);  // revalidate
        if (cert.avoider.n == 0) return true;
        std::vector<long long> values(eq->coeffs.size(), 0);
        return !avoider_has_equation_solution(cert.avoider, *eq, 0, values);
    }
    const auto& ap = std::get<ApTarget>(cert.problem);
    if (ap.k < 3) throw std::invalid_argument("certificate: AP length must be at least 3");
    if (cert.avoider.n == 0) return true;
    return !avoider_has_mono_ap(cert.avoider, ap.k);
}

}  // namespace rado
