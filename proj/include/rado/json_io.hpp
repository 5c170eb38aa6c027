#pragma once

#include <json.hpp>

#include "rado/ceder.hpp"
#include "rado/coloring.hpp"
#include "rado/equation.hpp"
#include "rado/search.hpp"

namespace rado {

// Wire formats. Rationals travel as canonical "n/d" strings ("n" when the
// denominator is 1); equations as {"coeffs": [...], "distinct": bool};
// colorings as {"n": int, "num_colors": int, "colors": [...]}; sparse vectors
// as an object mapping index strings to rational strings; certificates as
// {"equation"|"vdw_k", "num_colors", "status", "forcing_n", "explored_bound",
//  "avoider", "nodes_explored", "engine_version"}.
// Every from_* validates and throws std::invalid_argument on bad input.

nlohmann::json equation_to_json(const LinearEquation& eq);
LinearEquation equation_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const Coloring& col);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json sparse_vector_to_json(const SparseQVector& w);
SparseQVector sparse_vector_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ForcingResult& result);
ForcingResult certificate_from_json(const nlohmann::json& j);

}  // namespace rado
