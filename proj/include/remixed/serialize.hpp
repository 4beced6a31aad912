#pragma once

#include <json.hpp>

#include "remixed/identities.hpp"
#include "remixed/process.hpp"
#include "remixed/trees.hpp"

namespace remixed {

/// {"valuation": v, "coeffs": [a_v, ..., a_D]}; integer coefficients emit as
/// JSON integers, non-integral ones as ["num", "den"] string pairs. The zero
/// polynomial has valuation 0 and an empty list.
nlohmann::json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

/// {"c", "q", "samples", "seed", "outcomes": [{"sites", "count", "freq",
/// "exact"}]}; "exact" is a rational string when an exact law is supplied,
/// null otherwise. Includes "cap_hits" when nonzero.
nlohmann::json simulation_to_json(const SimulationReport& rep,
                                  const StableDistribution* exact_law = nullptr);

/// Nested {"bs", "dec", "f", "lo", "hi", "left", "right"}; null children.
nlohmann::json postnikov_to_json(const PostnikovNode* node);
/// {"tree": ..., "weight": "rational string"}.
nlohmann::json postnikov_tree_to_json(const PostnikovTree& t);
std::string postnikov_to_dot(const PostnikovTree& t, const std::string& name = "T");

/// Internal nodes: {"dec", "lr", "left", "right"}; leaves: {"leaf": true, "lr"}.
nlohmann::json bilabeled_to_json(const BilabeledTree& t);
std::string bilabeled_to_dot(const BilabeledTree& t, const std::string& name = "T");

/// {"check": name, "r": r, "pass": bool, "witness": string or null}.
nlohmann::json check_to_json(const CheckResult& res);

}  // namespace remixed
