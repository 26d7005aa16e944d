#pragma once

#include <json.hpp>

#include "subsyz/counterexample.hpp"
#include "subsyz/liaison.hpp"
#include "subsyz/subsetsearch.hpp"

namespace subsyz {

using json = nlohmann::json;

// Point-set files: {"prime": 31991, "projective_dim": 2,
//                   "points": [[0,0,1], [0,1,0], ...]}
// Integers are reduced mod prime on load; zero or duplicate points are
// rejected.
PointSet point_set_from_json(const json& j);
PointSet load_point_set(const std::string& path);
json point_set_to_json(const PointSet& X);

json hilbert_to_json(const HilbertTable& hf);
json betti_to_json(const BettiTable& b);
BettiTable betti_from_json(const json& j);
json guess_to_json(const GuessRankTable& g);
json chain_to_json(const SubsetChain& c);
json case_to_json(const CaseLabel& c);
json degree_matrix_to_json(const DegreeMatrix& dm);
json subset_records_to_json(const std::vector<SubsetRecord>& recs);
json counterexample_to_json(const CounterexampleReport& rep);

std::string counterexample_text(const CounterexampleReport& rep);

}  // namespace subsyz
