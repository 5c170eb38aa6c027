#include "rado/ceder.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace rado {

SparseQVector SparseQVector::from_entries(std::vector<std::pair<int, Rational>> entries) {
    std::erase_if(entries, [](const auto& e) { return e.second.is_zero(); });
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first < 0)
            throw std::invalid_argument("SparseQVector: negative basis index");
        if (i > 0 && entries[i].first == entries[i - 1].first)
            throw std::invalid_argument("SparseQVector: duplicate basis index");
    }
    SparseQVector out;
    out.entries_ = std::move(entries);
    return out;
}

SparseQVector SparseQVector::basis(int index, Rational scale) {
    return from_entries({{index, std::move(scale)}});
}

std::vector<int> SparseQVector::support() const {
    std::vector<int> out;
    out.reserve(entries_.size());
    for (const auto& [idx, value] : entries_) out.push_back(idx);
    return out;
}

Signature SparseQVector::signature() const {
    Signature out;
    out.reserve(entries_.size());
    for (const auto& [idx, value] : entries_) out.push_back(value);
    return out;
}

Rational SparseQVector::coordinate(int index) const {
    for (const auto& [idx, value] : entries_) {
        if (idx == index) return value;
        if (idx > index) break;
    }
    return Rational(0);
}

std::vector<int> support(const SparseQVector& w) { return w.support(); }
Signature signature(const SparseQVector& w) { return w.signature(); }

CederParams::CederParams(Rational g) : gamma(std::move(g)) {
    if (gamma == Rational(0) || gamma == Rational(1))
        throw std::invalid_argument("CederParams: gamma must lie outside {0, 1}");
}

int SignatureRegistry::id_of(const Signature& sig) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = ids_.try_emplace(sig, static_cast<int>(ids_.size()));
    return it->second;
}

std::optional<int> SignatureRegistry::lookup(const Signature& sig) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(sig);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::size_t SignatureRegistry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return ids_.size();
}

int ceder_color_id(const SparseQVector& w, SignatureRegistry& registry) {
    return registry.id_of(w.signature());
}

SparseQVector complete_triple(const SparseQVector& x, const SparseQVector& y,
                              const CederParams& p) {
    const Rational& g = p.gamma;
    const Rational one_minus_g = Rational(1) - g;
    std::vector<std::pair<int, Rational>> merged;
    merged.reserve(x.entries().size() + y.entries().size());
    auto xi = x.entries().begin(), xe = x.entries().end();
    auto yi = y.entries().begin(), ye = y.entries().end();
    while (xi != xe || yi != ye) {
        if (yi == ye || (xi != xe && xi->first < yi->first)) {
            merged.emplace_back(xi->first, one_minus_g * xi->second);
            ++xi;
        } else if (xi == xe || yi->first < xi->first) {
            merged.emplace_back(yi->first, g * yi->second);
            ++yi;
        } else {
            merged.emplace_back(xi->first, g * yi->second + one_minus_g * xi->second);
            ++xi;
            ++yi;
        }
    }
    return SparseQVector::from_entries(std::move(merged));
}

Rational gamma_from_triple(const Rational& b1, const Rational& b2, const Rational& b3) {
    if (!(b1 + b2 + b3).is_zero())
        throw std::invalid_argument("gamma_from_triple: coefficients must sum to zero");
    if (b2.is_zero() || b3.is_zero())
        throw std::invalid_argument("gamma_from_triple: b2 and b3 must be nonzero");
    if (b1.is_zero())
        throw std::invalid_argument(
            "gamma_from_triple: b1 must be nonzero (otherwise gamma would be 1)");
    return -b2 / b3;
}

std::vector<SparseQVector> enumerate_universe(int max_index, int max_support,
                                              const std::vector<Rational>& grid) {
    if (max_index < 0) throw std::invalid_argument("universe: max_index must be non-negative");
    if (max_support < 0) throw std::invalid_argument("universe: max_support must be non-negative");
    if (grid.empty()) throw std::invalid_argument("universe: empty coordinate grid");
    for (const Rational& g : grid)
        if (g.is_zero()) throw std::invalid_argument("universe: grid must not contain zero");

    const int positions = max_index + 1;
    const std::size_t choices = grid.size() + 1;  // per position: absent, or a grid value
    std::vector<SparseQVector> out;
    std::vector<std::size_t> digits(static_cast<std::size_t>(positions), 0);
    while (true) {
        int support_size = 0;
        for (std::size_t d : digits)
            if (d > 0) ++support_size;
        if (support_size <= max_support) {
            std::vector<std::pair<int, Rational>> entries;
            entries.reserve(static_cast<std::size_t>(support_size));
            for (int i = 0; i < positions; ++i)
                if (digits[static_cast<std::size_t>(i)] > 0)
                    entries.emplace_back(i, grid[digits[static_cast<std::size_t>(i)] - 1]);
            out.push_back(SparseQVector::from_entries(std::move(entries)));
        }
        // Next mixed-radix value.
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == choices) {
            digits[pos] = 0;
            ++pos;
        }
        if (pos == digits.size()) break;
    }
    return out;
}

namespace {

// Scan the full x-range [begin, end) of ordered triples. The candidate z for
// a pair (x, y) is unique, so it is computed once and the inner loop only
// compares; the triple count still covers every ordered distinct triple.
CederReport scan_range(const CederParams& p, const std::vector<SparseQVector>& universe,
                       std::size_t begin, std::size_t end, std::size_t sample_cap) {
    CederReport report;
    const std::size_t n = universe.size();
    for (std::size_t ix = begin; ix < end; ++ix) {
        const SparseQVector& x = universe[ix];
        const Signature sig_x = x.signature();
        for (std::size_t iy = 0; iy < n; ++iy) {
            if (iy == ix) continue;
            const SparseQVector& y = universe[iy];
            const SparseQVector target = complete_triple(x, y, p);
            const bool sig_xy_equal = sig_x == y.signature();
            for (std::size_t iz = 0; iz < n; ++iz) {
                if (iz == ix || iz == iy) continue;
                ++report.triples_checked;
                const SparseQVector& z = universe[iz];
                if (z != target) continue;
                ++report.equation_triples;
                if (sig_xy_equal && z.signature() == sig_x) {
                    ++report.mono_violations;
                    if (report.counterexamples.size() < sample_cap)
                        report.counterexamples.push_back({x, y, z});
                }
            }
        }
    }
    return report;
}

}  // namespace

CederReport verify_ceder(const CederParams& p, const std::vector<SparseQVector>& universe,
                         int threads) {
    constexpr std::size_t kSampleCap = 10;
    const std::size_t n = universe.size();
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(
                                     std::max(threads, 1)), n == 0 ? 1 : n));
    if (workers == 1) {
        CederReport report = scan_range(p, universe, 0, n, kSampleCap);
        return report;
    }

    std::vector<CederReport> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            parts[w] = scan_range(p, universe, begin, end, kSampleCap);
        });
    }
    for (auto& t : pool) t.join();

    // Workers own contiguous x-ranges merged in order, so the aggregate is
    // identical to a sequential scan.
    CederReport report;
    for (const CederReport& part : parts) {
        report.triples_checked += part.triples_checked;
        report.equation_triples += part.equation_triples;
        report.mono_violations += part.mono_violations;
        for (const auto& ce : part.counterexamples)
            if (report.counterexamples.size() < kSampleCap)
                report.counterexamples.push_back(ce);
    }
    return report;
}

}  // namespace rado
