// Acceptance suite: end-to-end checks of the library's headline guarantees,
// each with an explicit runtime budget. Prints one PASS/FAIL line per
// criterion and exits nonzero if any fail. Criterion 9 shells out to the CLI
// binary, whose path is passed via --cli.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rado/ceder.hpp"
#include "rado/closure.hpp"
#include "rado/json_io.hpp"
#include "rado/search.hpp"

namespace {

using rado::Coloring;
using rado::LinearEquation;
using rado::Rational;
using rado::Solution;
using rado::SparseQVector;

struct Harness {
    int failures = 0;

    void run(int number, const std::string& name, double budget_seconds,
             const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        if (elapsed.count() > budget_seconds) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time budget of ") +
                      std::to_string(budget_seconds) + "s";
        }
        std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number,
                    name.c_str(), elapsed.count(), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

bool entries_distinct(const rado::RationalVector& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (v[i] == v[j]) return false;
    return true;
}

// Independent include/exclude subset-sum oracle.
bool subset_oracle(const std::vector<long long>& coeffs, std::size_t pos, long long sum,
                   bool any) {
    if (pos == coeffs.size()) return any && sum == 0;
    return subset_oracle(coeffs, pos + 1, sum, any) ||
           subset_oracle(coeffs, pos + 1, sum + coeffs[pos], true);
}

// Criterion 1: Rado characterization against brute force, n <= 4,
// entries in [-3..3], all-zero excluded.
bool criterion_rado(std::string& detail) {
    long long vectors = 0;
    for (int n = 2; n <= 4; ++n) {
        std::vector<long long> coeffs(static_cast<std::size_t>(n), -3);
        while (true) {
            bool all_zero = true;
            for (long long b : coeffs) all_zero = all_zero && b == 0;
            if (!all_zero) {
                ++vectors;
                if (rado::has_zero_subset_sum(coeffs) != subset_oracle(coeffs, 0, 0, false)) {
                    detail = "subset-sum mismatch";
                    return false;
                }
                if (rado::is_distinct_regular(rado::make_equation(coeffs, true))) {
                    auto witness = rado::find_distinct_kernel_vector(coeffs);
                    if (!witness) {
                        detail = "distinct-regular without kernel witness";
                        return false;
                    }
                    rado::RationalVector as_rationals;
                    for (long long b : coeffs) as_rationals.emplace_back(b);
                    if (!rado::dot(as_rationals, *witness).is_zero() ||
                        !entries_distinct(*witness)) {
                        detail = "invalid kernel witness";
                        return false;
                    }
                }
            }
            // next vector in [-3..3]^n
            std::size_t pos = 0;
            while (pos < coeffs.size() && ++coeffs[pos] > 3) coeffs[pos++] = -3;
            if (pos == coeffs.size()) break;
        }
    }
    detail = std::to_string(vectors) + " vectors checked";
    return true;
}

// Criterion 2: Schur forcing numbers at two and three colors.
bool criterion_schur(std::string& detail) {
    LinearEquation schur = rado::make_equation({1, 1, -1}, false);

    // Independent oracle at two colors: enumerate every 2-coloring of [1..5]
    // and of [1..4] directly.
    auto has_mono = [](const Coloring& col) {
        for (long long x = 1; x <= col.n; ++x)
            for (long long y = x; y <= col.n; ++y) {
                const long long z = x + y;
                if (z <= col.n && col.color_of(x) == col.color_of(y) &&
                    col.color_of(y) == col.color_of(z))
                    return true;
            }
        return false;
    };
    for (unsigned bits = 0; bits < (1u << 5); ++bits) {
        std::vector<int> colors(5);
        for (int i = 0; i < 5; ++i) colors[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
        if (!has_mono(rado::make_coloring(5, 2, colors))) {
            detail = "oracle found an avoider of [1..5]";
            return false;
        }
    }
    bool avoider4 = false;
    for (unsigned bits = 0; bits < (1u << 4) && !avoider4; ++bits) {
        std::vector<int> colors(4);
        for (int i = 0; i < 4; ++i) colors[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
        avoider4 = !has_mono(rado::make_coloring(4, 2, colors));
    }
    if (!avoider4) {
        detail = "oracle found no avoider of [1..4]";
        return false;
    }

    rado::ForcingResult two = rado::forcing_number(schur, 2, 10);
    if (two.forcing_n != 5 || !rado::verify_certificate(two)) {
        detail = "two colors: expected N=5 with verified avoider";
        return false;
    }
    rado::ForcingResult three = rado::forcing_number(schur, 3, 20);
    if (three.forcing_n != 14 || !rado::verify_certificate(three)) {
        detail = "three colors: expected N=14 with verified avoider";
        return false;
    }
    detail = "N(2)=5, N(3)=14, certificates verified";
    return true;
}

// Criterion 3: van der Waerden forcing for 3-APs at two colors.
bool criterion_vdw(std::string& detail) {
    rado::ForcingResult res = rado::vdw_forcing(3, 2, 20);
    if (res.forcing_n != 9) {
        detail = "expected N=9";
        return false;
    }
    if (res.avoider.n != 8 || !rado::verify_certificate(res) ||
        rado::find_mono_ap(res.avoider, 3)) {
        detail = "avoider of [1..8] failed verification";
        return false;
    }
    detail = "N=9, avoider verified";
    return true;
}

// Criterion 4: both constructive quadruple finders on random colorings and
// the frozen witnesses on the one-color interval [1..9].
bool criterion_four(std::string& detail) {
    auto valid = [](const Coloring& col, const Solution& s) {
        if (s.values.size() != 4) return false;
        for (long long v : s.values)
            if (v < 1 || v > col.n || col.color_of(v) != s.color) return false;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (s.values[i] == s.values[j]) return false;
        return s.values[0] + s.values[1] == s.values[2] + s.values[3];
    };

    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> pick(0, 1);
    long long vdw_hits = 0, ramsey_hits = 0;
    for (int iter = 0; iter < 500; ++iter) {
        std::vector<int> colors(200);
        for (auto& c : colors) c = pick(rng);
        Coloring col = rado::make_coloring(200, 2, std::move(colors));
        if (auto q = rado::four_from_vdw(col)) {
            ++vdw_hits;
            if (!valid(col, *q)) {
                detail = "four_from_vdw produced an invalid quadruple";
                return false;
            }
        }
        if (auto q = rado::four_from_ramsey(col)) {
            ++ramsey_hits;
            if (!valid(col, *q)) {
                detail = "four_from_ramsey produced an invalid quadruple";
                return false;
            }
        }
    }

    Coloring nine = rado::uniform_coloring(9);
    auto qv = rado::four_from_vdw(nine);
    auto qr = rado::four_from_ramsey(nine);
    if (!qv || qv->values != std::vector<long long>{1, 5, 2, 4}) {
        detail = "expected (1,5,2,4) from four_from_vdw on one-color [1..9]";
        return false;
    }
    if (!qr || qr->values != std::vector<long long>{1, 6, 3, 4}) {
        detail = "expected (1,6,3,4) from four_from_ramsey on one-color [1..9]";
        return false;
    }
    detail = "vdw hits " + std::to_string(vdw_hits) + "/500, ramsey hits " +
             std::to_string(ramsey_hits) + "/500, all valid";
    return true;
}

// Criterion 5: exhaustive triple scan of the signature coloring.
bool criterion_ceder(std::string& detail) {
    const std::vector<Rational> grid = {Rational(-2), Rational(-1), Rational(1), Rational(2)};
    auto universe = rado::enumerate_universe(2, 3, grid);
    if (universe.size() != 125) {
        detail = "expected a 125-vector universe";
        return false;
    }
    std::ostringstream summary;
    for (const Rational& g : {Rational(2), Rational(-1), Rational(1, 2), Rational(3)}) {
        rado::CederReport report = rado::verify_ceder(rado::CederParams{g}, universe);
        if (report.triples_checked != 125LL * 124 * 123) {
            detail = "unexpected triple count";
            return false;
        }
        if (report.mono_violations != 0) {
            detail = "monochromatic violation at gamma=" + g.to_string();
            return false;
        }
        summary << "gamma=" << g.to_string() << ":" << report.equation_triples << " eq-triples ";
    }
    detail = summary.str() + "(1906500 ordered triples each), 0 violations";
    return true;
}

// Criterion 6: the coloring is countable-to-one, not injective.
bool criterion_nontrivial(std::string& detail) {
    rado::SignatureRegistry registry;
    const int target = rado::ceder_color_id(SparseQVector::basis(0), registry);
    std::set<SparseQVector> seen;
    for (int i = 0; i < 1000; ++i) {
        SparseQVector shifted = SparseQVector::basis(i);
        if (rado::ceder_color_id(shifted, registry) != target) {
            detail = "index shift changed the color";
            return false;
        }
        seen.insert(shifted);
    }
    if (seen.size() != 1000) {
        detail = "shifted vectors were not distinct";
        return false;
    }
    detail = "1000 distinct vectors share one color";
    return true;
}

// Criterion 7: closure induction basics and base monotonicity.
bool criterion_closure(std::string& detail) {
    rado::RationalSet two = {Rational(2)};
    if (rado::closure_step(two) !=
        rado::RationalSet{Rational(0), Rational(1), Rational(2), Rational(4)}) {
        detail = "closure_step({2}) mismatch";
        return false;
    }
    if (!rado::in_closure(Rational(3), two, 2, 1'000'000).found) {
        detail = "3 not found in the depth-2 closure of {2}";
        return false;
    }

    std::mt19937 rng(161803);
    std::uniform_int_distribution<long long> num(-4, 4), den(1, 3);
    for (int iter = 0; iter < 100; ++iter) {
        rado::RationalSet small, extra;
        while (small.size() < 3) small.insert(Rational(num(rng), den(rng)));
        while (extra.size() < 2) extra.insert(Rational(num(rng), den(rng)));
        rado::RationalSet large = small;
        large.insert(extra.begin(), extra.end());
        auto s1 = rado::closure_enumerate(small, 2, 1'000'000);
        auto s2 = rado::closure_enumerate(large, 2, 1'000'000);
        for (int level = 0; level <= 2; ++level) {
            for (const Rational& q : s1.levels[static_cast<std::size_t>(level)]) {
                if (!s2.levels[static_cast<std::size_t>(level)].count(q)) {
                    detail = "base monotonicity violated";
                    return false;
                }
            }
        }
    }
    detail = "induction step exact, membership found, monotone on 100 nested pairs";
    return true;
}

// Criterion 8: solver versus a naive triple loop on every 2-coloring of [1..8].
bool criterion_solver_oracle(std::string& detail) {
    LinearEquation schur = rado::make_equation({1, 1, -1}, false);
    for (unsigned bits = 0; bits < 256; ++bits) {
        std::vector<int> colors(8);
        for (int i = 0; i < 8; ++i) colors[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
        Coloring col = rado::make_coloring(8, 2, std::move(colors));

        std::optional<Solution> naive;
        for (long long x = 1; x <= 8 && !naive; ++x)
            for (long long y = 1; y <= 8 && !naive; ++y)
                for (long long z = 1; z <= 8 && !naive; ++z)
                    if (x + y == z && col.color_of(x) == col.color_of(y) &&
                        col.color_of(y) == col.color_of(z))
                        naive = Solution{{x, y, z}, col.color_of(x)};

        auto fast = rado::find_mono_solution(col, schur);
        if (fast.has_value() != naive.has_value() ||
            (fast && (fast->values != naive->values || fast->color != naive->color))) {
            detail = "mismatch on coloring bits " + std::to_string(bits);
            return false;
        }
    }
    detail = "verdicts and witnesses match on all 256 colorings";
    return true;
}

int run_cli(const std::string& cli, const std::string& args, std::string* output) {
    const std::string command = cli + " " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return -1;
    char buffer[4096];
    std::string captured;
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
        captured.append(buffer, got);
    const int raw = pclose(pipe);
    if (output) *output = captured;
    return WEXITSTATUS(raw);
}

// Criterion 9: CLI certificate round trip plus rejection of a tampered copy.
bool criterion_cli_roundtrip(const std::string& cli, std::string& detail) {
    const std::string cert_path = "acceptance_cert.json";
    std::string output;
    int code = run_cli(cli, "forcing --coeffs 1,1,-1 --colors 2 --nmax 10 --output " +
                                cert_path, &output);
    if (code != 0) {
        detail = "forcing run exited with " + std::to_string(code);
        return false;
    }

    code = run_cli(cli, "verify --certificate " + cert_path, &output);
    if (code != 0) {
        detail = "verify rejected a genuine certificate (exit " + std::to_string(code) + ")";
        return false;
    }

    // Flip one avoider color to create 1+3=4 inside a single class.
    std::ifstream in(cert_path);
    nlohmann::json cert = nlohmann::json::parse(in);
    in.close();
    auto& colors = cert["avoider"]["colors"];
    colors[2] = colors[0];  // 3 joins the class of 1 and 4
    const std::string mutated_path = "acceptance_cert_mutated.json";
    std::ofstream out(mutated_path);
    out << cert.dump();
    out.close();

    code = run_cli(cli, "verify --certificate " + mutated_path, &output);
    if (code != 1) {
        detail = "tampered certificate not rejected (exit " + std::to_string(code) + ")";
        return false;
    }
    std::remove(cert_path.c_str());
    std::remove(mutated_path.c_str());
    detail = "emitted certificate re-verified, tampered copy rejected";
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
    }

    Harness h;
    h.run(1, "Rado characterization vs brute force", 5.0, criterion_rado);
    h.run(2, "Schur forcing numbers with certificates", 60.0, criterion_schur);
    h.run(3, "van der Waerden forcing k=3 c=2", 10.0, criterion_vdw);
    h.run(4, "constructive quadruple finders", 10.0, criterion_four);
    h.run(5, "signature coloring exhaustive triple scan", 120.0, criterion_ceder);
    h.run(6, "signature coloring is countable-to-one", 1.0, criterion_nontrivial);
    h.run(7, "closure induction and monotonicity", 10.0, criterion_closure);
    h.run(8, "solver matches naive oracle", 1.0, criterion_solver_oracle);
    if (cli.empty()) {
        std::printf("FAIL  criterion 9: CLI certificate round trip -- no --cli path given\n");
        ++h.failures;
    } else {
        h.run(9, "CLI certificate round trip", 30.0,
              [&](std::string& detail) { return criterion_cli_roundtrip(cli, detail); });
    }

    if (h.failures) {
        std::printf("%d criterion(s) failed\n", h.failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
