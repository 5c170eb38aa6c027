// rado: exact partition-regularity toolkit.
//
// Subcommands:
//   check    - decide regularity / distinct-regularity of an equation
//   solve    - find a monochromatic solution inside an explicit coloring
//   forcing  - compute a forcing number with an avoider certificate
//   vdw      - same for monochromatic k-term arithmetic progressions
//   four     - constructive monochromatic quadruple with e1+e2=e3+e4
//   verify   - re-check an emitted certificate by exhaustive scan
//   ceder    - signature colorings: verify / color / gamma
//   closure  - levels of the field-operation closure of a rational set
//
// Machine-readable JSON goes to stdout; diagnostics go to stderr. Exit codes:
// 0 affirmative/found, 1 negative/not found, 2 usage or input error,
// 3 resource cap hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rado/ceder.hpp"
#include "rado/closure.hpp"
#include "rado/json_io.hpp"
#include "rado/search.hpp"
#include "rado/version.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& part : split_csv(text)) {
        std::size_t consumed = 0;
        long long value = 0;
        try {
            value = std::stoll(part, &consumed);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: '" + part + "'");
        }
        if (consumed != part.size())
            throw std::invalid_argument("not an integer: '" + part + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<rado::Rational> parse_rational_list(const std::string& text) {
    std::vector<rado::Rational> out;
    for (const std::string& part : split_csv(text))
        out.push_back(rado::Rational::from_string(part));
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return json::parse(in);
}

struct Output {
    bool pretty = false;

    void emit(const json& payload) const {
        std::cout << (pretty ? payload.dump(2) : payload.dump()) << "\n";
    }

    void save(const json& payload, const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot write file: " + path);
        out << (pretty ? payload.dump(2) : payload.dump()) << "\n";
    }
};

json solution_to_json(const rado::Solution& s) {
    return json{{"values", s.values}, {"color", s.color}};
}

int run_check(const Output& out, const std::string& coeffs_text, bool distinct) {
    const std::vector<long long> coeffs = parse_int_list(coeffs_text);
    const bool regular = rado::is_regular(rado::make_equation(coeffs, false));
    const bool distinct_regular = rado::is_distinct_regular(rado::make_equation(coeffs, true));
    auto witness = rado::find_distinct_kernel_vector(coeffs);

    json payload{{"coeffs", coeffs},
                 {"regular", regular},
                 {"distinct_regular", distinct_regular}};
    if (witness) {
        std::vector<std::string> lambda;
        for (const rado::Rational& r : *witness) lambda.push_back(r.to_string());
        payload["lambda"] = lambda;
    } else {
        payload["lambda"] = nullptr;
    }
    out.emit(payload);
    return (distinct ? distinct_regular : regular) ? kExitFound : kExitNotFound;
}

int run_solve(const Output& out, const std::string& coloring_path,
              const std::string& coeffs_text, bool distinct) {
    const rado::Coloring col = rado::coloring_from_json(load_json_file(coloring_path));
    const rado::LinearEquation eq = rado::make_equation(parse_int_list(coeffs_text), distinct);
    auto solution = rado::find_mono_solution(col, eq);
    json payload{{"found", solution.has_value()}};
    if (solution) payload["solution"] = solution_to_json(*solution);
    out.emit(payload);
    return solution ? kExitFound : kExitNotFound;
}

int emit_forcing(const Output& out, const rado::ForcingResult& result,
                 const std::string& output_path) {
    const json payload = rado::certificate_to_json(result);
    if (!output_path.empty()) out.save(payload, output_path);
    out.emit(payload);
    switch (result.status) {
        case rado::SearchStatus::found: return kExitFound;
        case rado::SearchStatus::not_found_within_bound: return kExitNotFound;
        case rado::SearchStatus::capped: return kExitCap;
    }
    return kExitUsage;
}

int run_forcing(const Output& out, const std::string& coeffs_text, bool distinct,
                int colors, int nmax, long long node_cap, const std::string& output_path) {
    const rado::LinearEquation eq = rado::make_equation(parse_int_list(coeffs_text), distinct);
    try {
        return emit_forcing(out, rado::forcing_number(eq, colors, nmax, node_cap), output_path);
    } catch (const rado::resource_cap_error& e) {
        std::cerr << "node budget exhausted; emitting partial progress\n";
        return emit_forcing(out, e.partial(), output_path);
    }
}

int run_vdw(const Output& out, int k, int colors, int nmax, long long node_cap,
            const std::string& output_path) {
    try {
        return emit_forcing(out, rado::vdw_forcing(k, colors, nmax, node_cap), output_path);
    } catch (const rado::resource_cap_error& e) {
        std::cerr << "node budget exhausted; emitting partial progress\n";
        return emit_forcing(out, e.partial(), output_path);
    }
}

int run_four(const Output& out, const std::string& coloring_path, const std::string& method) {
    const rado::Coloring col = rado::coloring_from_json(load_json_file(coloring_path));
    std::optional<rado::Solution> solution;
    if (method == "vdw") {
        solution = rado::four_from_vdw(col);
    } else if (method == "ramsey") {
        solution = rado::four_from_ramsey(col);
    } else {
        throw std::invalid_argument("unknown method '" + method + "' (expected vdw or ramsey)");
    }
    json payload{{"found", solution.has_value()}, {"method", method}};
    if (solution) payload["solution"] = solution_to_json(*solution);
    out.emit(payload);
    return solution ? kExitFound : kExitNotFound;
}

int run_verify(const Output& out, const std::string& cert_path) {
    const rado::ForcingResult cert = rado::certificate_from_json(load_json_file(cert_path));
    const bool valid = rado::verify_certificate(cert);
    out.emit(json{{"valid", valid}});
    return valid ? kExitFound : kExitNotFound;
}

int run_ceder_verify(const Output& out, const std::string& gamma_text, int max_index,
                     int max_support, const std::string& grid_text, int threads) {
    const rado::CederParams params{rado::Rational::from_string(gamma_text)};
    if (max_support < 0) max_support = max_index + 1;
    auto universe = rado::enumerate_universe(max_index, max_support,
                                             parse_rational_list(grid_text));
    const rado::CederReport report = rado::verify_ceder(params, universe, threads);

    json counterexamples = json::array();
    for (const auto& ce : report.counterexamples) {
        counterexamples.push_back(json{{"x", rado::sparse_vector_to_json(ce.x)},
                                       {"y", rado::sparse_vector_to_json(ce.y)},
                                       {"z", rado::sparse_vector_to_json(ce.z)}});
    }
    out.emit(json{{"gamma", params.gamma.to_string()},
                  {"universe_size", universe.size()},
                  {"triples_checked", report.triples_checked},
                  {"equation_triples", report.equation_triples},
                  {"mono_violations", report.mono_violations},
                  {"counterexamples", counterexamples}});
    return report.mono_violations == 0 ? kExitFound : kExitNotFound;
}

int run_ceder_color(const Output& out, const std::string& vector_path) {
    const rado::SparseQVector w = rado::sparse_vector_from_json(load_json_file(vector_path));
    rado::SignatureRegistry registry;
    std::vector<std::string> signature;
    for (const rado::Rational& r : w.signature()) signature.push_back(r.to_string());
    out.emit(json{{"vector", rado::sparse_vector_to_json(w)},
                  {"support", w.support()},
                  {"signature", signature},
                  {"color_id", rado::ceder_color_id(w, registry)}});
    return kExitFound;
}

int run_ceder_gamma(const Output& out, const std::string& coeffs_text) {
    const auto coeffs = parse_rational_list(coeffs_text);
    if (coeffs.size() != 3)
        throw std::invalid_argument("ceder gamma expects exactly three coefficients");
    const rado::Rational gamma = rado::gamma_from_triple(coeffs[0], coeffs[1], coeffs[2]);
    std::vector<std::string> coeff_strings;
    for (const auto& c : coeffs) coeff_strings.push_back(c.to_string());
    out.emit(json{{"coeffs", coeff_strings}, {"gamma", gamma.to_string()}});
    return kExitFound;
}

int run_closure(const Output& out, const std::string& base_text, int depth, long long cap,
                const std::string& query_text) {
    rado::RationalSet base;
    for (const rado::Rational& r : parse_rational_list(base_text)) base.insert(r);
    if (cap < 1) throw std::invalid_argument("closure cap must be positive");
    const auto capacity = static_cast<std::size_t>(cap);

    const rado::ClosureState state = rado::closure_enumerate(base, depth, capacity);
    json levels = json::array();
    for (std::size_t i = 0; i < state.levels.size(); ++i)
        levels.push_back(json{{"level", i}, {"size", state.levels[i].size()}});

    std::vector<std::string> base_strings;
    for (const rado::Rational& r : base) base_strings.push_back(r.to_string());
    json payload{{"base", base_strings}, {"depth", depth},      {"cap", cap},
                 {"levels", levels},     {"capped", state.capped}};

    if (!query_text.empty()) {
        const rado::Rational q = rado::Rational::from_string(query_text);
        const rado::MembershipResult member = rado::in_closure(q, base, depth, capacity);
        payload["query"] = json{{"value", q.to_string()},
                                {"found", member.found},
                                {"level", member.found ? json(member.level) : json(nullptr)},
                                {"depth_searched", member.depth_searched},
                                {"capped", member.capped}};
        out.emit(payload);
        if (member.found) return kExitFound;
        return member.capped ? kExitCap : kExitNotFound;
    }
    out.emit(payload);
    return state.capped ? kExitCap : kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition-regularity toolkit"};
    app.set_version_flag("--version", std::string(rado::kVersion));
    app.require_subcommand(1);

    Output out;
    int threads = 1;
    long long seed = 0;
    app.add_flag("--pretty", out.pretty, "indent JSON output");
    app.add_option("--threads", threads, "worker threads for verification scans")
        ->envname("RADO_THREADS")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed,
                   "reserved; all searches are deterministic in this version");

    std::string coeffs_text, coloring_path, method, cert_path, gamma_text, grid_text;
    std::string vector_path, base_text, query_text, output_path;
    bool distinct = false;
    int colors = 2, nmax = 100, k = 3, max_index = 2, max_support = -1, depth = 2;
    long long node_cap = rado::kDefaultNodeCap, closure_cap = 100000;

    CLI::App* check = app.add_subcommand("check", "decide (distinct-)regularity");
    check->add_option("--coeffs", coeffs_text, "comma-separated integer coefficients")
        ->required();
    check->add_flag("--distinct", distinct, "exit by the distinct-regular verdict");

    CLI::App* solve = app.add_subcommand("solve", "find a monochromatic solution");
    solve->add_option("--coloring", coloring_path, "coloring JSON file")->required();
    solve->add_option("--coeffs", coeffs_text, "comma-separated integer coefficients")
        ->required();
    solve->add_flag("--distinct", distinct, "require pairwise distinct values");

    CLI::App* forcing = app.add_subcommand("forcing", "forcing number with certificate");
    forcing->add_option("--coeffs", coeffs_text, "comma-separated integer coefficients")
        ->required();
    forcing->add_flag("--distinct", distinct, "require pairwise distinct values");
    forcing->add_option("--colors", colors, "number of colors")->required();
    forcing->add_option("--nmax", nmax, "largest interval endpoint to explore")->required();
    forcing->add_option("--node-cap", node_cap, "search node budget");
    forcing->add_option("--output", output_path, "also write the certificate to a file");

    CLI::App* vdw = app.add_subcommand("vdw", "arithmetic-progression forcing number");
    vdw->add_option("--k", k, "progression length (>= 3)")->required();
    vdw->add_option("--colors", colors, "number of colors")->required();
    vdw->add_option("--nmax", nmax, "largest interval endpoint to explore")->required();
    vdw->add_option("--node-cap", node_cap, "search node budget");
    vdw->add_option("--output", output_path, "also write the certificate to a file");

    CLI::App* four = app.add_subcommand("four", "monochromatic quadruple e1+e2=e3+e4");
    four->add_option("--coloring", coloring_path, "coloring JSON file")->required();
    four->add_option("--method", method, "vdw or ramsey")->required();

    CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
    verify->add_option("--certificate", cert_path, "certificate JSON file")->required();

    CLI::App* ceder = app.add_subcommand("ceder", "signature colorings");
    ceder->require_subcommand(1);
    CLI::App* ceder_verify =
        ceder->add_subcommand("verify", "exhaustive triple scan over a vector universe");
    ceder_verify->add_option("--gamma", gamma_text, "rational gamma outside {0,1}")->required();
    ceder_verify->add_option("--max-index", max_index, "largest basis index")->required();
    ceder_verify->add_option("--max-support", max_support,
                             "largest support size (default: unbounded)");
    ceder_verify->add_option("--coord-grid", grid_text, "comma-separated nonzero rationals")
        ->required();
    CLI::App* ceder_color = ceder->add_subcommand("color", "support, signature and color id");
    ceder_color->add_option("--vector", vector_path, "sparse vector JSON file")->required();
    CLI::App* ceder_gamma =
        ceder->add_subcommand("gamma", "triangle parameter of a three-term equation");
    ceder_gamma->add_option("--coeffs", coeffs_text, "three rationals summing to zero")
        ->required();

    CLI::App* closure = app.add_subcommand("closure", "field-operation closure levels");
    closure->add_option("--base", base_text, "comma-separated rational base set")->required();
    closure->add_option("--depth", depth, "number of induction steps");
    closure->add_option("--cap", closure_cap, "level size cap");
    closure->add_option("--query", query_text, "rational to look for in the levels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(out, coeffs_text, distinct);
        if (solve->parsed()) return run_solve(out, coloring_path, coeffs_text, distinct);
        if (forcing->parsed())
            return run_forcing(out, coeffs_text, distinct, colors, nmax, node_cap, output_path);
        if (vdw->parsed()) return run_vdw(out, k, colors, nmax, node_cap, output_path);
        if (four->parsed()) return run_four(out, coloring_path, method);
        if (verify->parsed()) return run_verify(out, cert_path);
        if (ceder->parsed()) {
            if (ceder_verify->parsed())
                return run_ceder_verify(out, gamma_text, max_index, max_support, grid_text,
                                        threads);
            if (ceder_color->parsed()) return run_ceder_color(out, vector_path);
            if (ceder_gamma->parsed()) return run_ceder_gamma(out, coeffs_text);
        }
        if (closure->parsed())
            return run_closure(out, base_text, depth, closure_cap, query_text);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitUsage;
}
