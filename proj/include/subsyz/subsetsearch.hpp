#pragma once

#include <cstdint>
#include <optional>

#include "subsyz/predictor.hpp"

namespace subsyz {

/// Greedy subset with truncated Hilbert function at every prefix size.
/// Points of X are tried in index order; the first whose addition keeps the
/// prefix truncated is taken.  Existence at every step is guaranteed, so a
/// dead end raises (it would be a bug, not an unlucky input).
std::vector<std::size_t> greedy_truncated_subset(const PointSet& X, long e);

/// True when every prefix of `order` (indices into X) has truncated Hilbert
/// function with respect to X.
bool prefix_truncated(const PointSet& X, const std::vector<std::size_t>& order);

/// Smallest degree in which X imposes |X| independent conditions.  I(X) is
/// generated in degrees <= critical_degree + 1.
int critical_degree(const PointSet& X);

/// Number of minimal generators of I(X) in degree t:
/// dim I(X)_t - rank mu_{t-1}.
long min_gens(const PointSet& X, int t);
long min_gens(IdealCache& cache, int t);

/// P^2 point sets classified by the number of minimal generators in the
/// maximal possible degree l+1: case 1 <-> 0, case 2 <-> 1, case 3 <-> 2,
/// case 4 <-> three or more.
struct CaseLabel {
    int l = 0;
    long gens_at_lplus1 = 0;
    int case_number = 0;
};
CaseLabel classify_case(const PointSet& X);

/// One link of a removal chain: which point was removed and, per degree,
/// the predicted and recomputed multiplication ranks.
struct DegreeRank {
    int s = 0;
    long predicted = 0;
    long actual = 0;
};
struct ChainStep {
    std::size_t removed_index = 0;  // index into the original X
    std::vector<DegreeRank> ranks;
};

/// Result of the subset search: a chain of single-point removals from X
/// down to size m in which every link has truncated Hilbert function and
/// the predicted multiplication ranks relative to its predecessor, plus a
/// final verification of the ranks directly against X.  `success = false`
/// means every removal order was exhausted without finding such a chain,
/// a falsifier for the subset-resolution statement this search realizes.
struct SubsetChain {
    bool success = false;
    std::vector<ChainStep> steps;
    std::vector<std::size_t> final_indices;
    std::vector<DegreeRank> final_ranks;  // vs the original X
    long candidates_tried = 0;
};

SubsetChain find_subset(const PointSet& X, long m);

/// Exhaustive ground truth: every m-subset with its per-degree
/// multiplication ranks and truncated-Hilbert-function flag.  Refuses when
/// C(|X|, m) exceeds the budget.
struct SubsetRecord {
    std::vector<std::size_t> indices;
    std::vector<std::pair<int, long>> mu_ranks;  // (degree, rank)
    bool truncated = false;
};
std::vector<SubsetRecord> enumerate_subsets(const PointSet& X, long m,
                                            std::uint64_t budget = 1000000);

}  // namespace subsyz
