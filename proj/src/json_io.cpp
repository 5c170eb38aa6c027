#include "rado/json_io.hpp"

#include <stdexcept>
#include <string>

#include "rado/version.hpp"

namespace rado {

namespace {

using nlohmann::json;

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("json: ") + what);
}

std::string status_to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "found";
        case SearchStatus::not_found_within_bound: return "not_found_within_bound";
        case SearchStatus::capped: return "capped";
    }
    throw std::logic_error("unreachable");
}

SearchStatus status_from_string(const std::string& s) {
    if (s == "found") return SearchStatus::found;
    if (s == "not_found_within_bound") return SearchStatus::not_found_within_bound;
    if (s == "capped") return SearchStatus::capped;
    throw std::invalid_argument("json: unknown certificate status '" + s + "'");
}

}  // namespace

json equation_to_json(const LinearEquation& eq) {
    return json{{"coeffs", eq.coeffs}, {"distinct", eq.require_distinct}};
}

LinearEquation equation_from_json(const json& j) {
    require(j.is_object() && j.contains("coeffs") && j["coeffs"].is_array(),
            "equation needs a 'coeffs' array");
    std::vector<long long> coeffs;
    for (const auto& c : j["coeffs"]) {
        require(c.is_number_integer(), "equation coefficients must be integers");
        coeffs.push_back(c.get<long long>());
    }
    bool distinct = false;
    if (j.contains("distinct")) {
        require(j["distinct"].is_boolean(), "equation 'distinct' must be a boolean");
        distinct = j["distinct"].get<bool>();
    }
    return make_equation(std::move(coeffs), distinct);
}

json coloring_to_json(const Coloring& col) {
    return json{{"n", col.n}, {"num_colors", col.num_colors}, {"colors", col.colors}};
}

Coloring coloring_from_json(const json& j) {
    require(j.is_object() && j.contains("n") && j.contains("num_colors") &&
                j.contains("colors") && j["colors"].is_array(),
            "coloring needs 'n', 'num_colors' and a 'colors' array");
    require(j["n"].is_number_integer() && j["num_colors"].is_number_integer(),
            "coloring 'n' and 'num_colors' must be integers");
    std::vector<int> colors;
    for (const auto& c : j["colors"]) {
        require(c.is_number_integer(), "coloring entries must be integers");
        colors.push_back(c.get<int>());
    }
    return make_coloring(j["n"].get<int>(), j["num_colors"].get<int>(), std::move(colors));
}

json sparse_vector_to_json(const SparseQVector& w) {
    json out = json::object();
    for (const auto& [idx, value] : w.entries())
        out[std::to_string(idx)] = value.to_string();
    return out;
}

SparseQVector sparse_vector_from_json(const json& j) {
    require(j.is_object(), "sparse vector must be a JSON object");
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& [key, value] : j.items()) {
        require(value.is_string(), "sparse vector coordinates must be rational strings");
        int index = 0;
        try {
            std::size_t consumed = 0;
            index = std::stoi(key, &consumed);
            require(consumed == key.size(), "sparse vector keys must be integer indices");
        } catch (const std::exception&) {
            throw std::invalid_argument("json: sparse vector keys must be integer indices");
        }
        entries.emplace_back(index, Rational::from_string(value.get<std::string>()));
    }
    return SparseQVector::from_entries(std::move(entries));
}

json certificate_to_json(const ForcingResult& result) {
    json out;
    if (const auto* eq = std::get_if<LinearEquation>(&result.problem)) {
        out["equation"] = equation_to_json(*eq);
    } else {
        out["vdw_k"] = std::get<ApTarget>(result.problem).k;
    }
    out["num_colors"] = result.num_colors;
    out["status"] = status_to_string(result.status);
    out["forcing_n"] = result.forcing_n ? json(*result.forcing_n) : json(nullptr);
    out["explored_bound"] = result.explored_bound;
    out["avoider"] = coloring_to_json(result.avoider);
    out["nodes_explored"] = result.nodes_explored;
    out["engine_version"] = kEngineVersion;
    return out;
}

ForcingResult certificate_from_json(const json& j) {
    require(j.is_object(), "certificate must be a JSON object");
    require(j.contains("equation") != j.contains("vdw_k"),
            "certificate needs exactly one of 'equation' or 'vdw_k'");
    require(j.contains("num_colors") && j["num_colors"].is_number_integer(),
            "certificate needs an integer 'num_colors'");
    require(j.contains("status") && j["status"].is_string(),
            "certificate needs a 'status' string");
    require(j.contains("avoider"), "certificate needs an 'avoider' coloring");
    require(j.contains("explored_bound") && j["explored_bound"].is_number_integer(),
            "certificate needs an integer 'explored_bound'");

    ForcingResult result;
    if (j.contains("equation")) {
        result.problem = equation_from_json(j["equation"]);
    } else {
        require(j["vdw_k"].is_number_integer(), "certificate 'vdw_k' must be an integer");
        result.problem = ApTarget{j["vdw_k"].get<int>()};
    }
    result.num_colors = j["num_colors"].get<int>();
    result.status = status_from_string(j["status"].get<std::string>());
    if (j.contains("forcing_n") && !j["forcing_n"].is_null()) {
        require(j["forcing_n"].is_number_integer(), "certificate 'forcing_n' must be an integer");
        result.forcing_n = j["forcing_n"].get<int>();
    }
    result.explored_bound = j["explored_bound"].get<int>();
    result.avoider = coloring_from_json(j["avoider"]);
    if (j.contains("nodes_explored") && j["nodes_explored"].is_number_integer())
        result.nodes_explored = j["nodes_explored"].get<long long>();
    return result;
}

}  // namespace rado
