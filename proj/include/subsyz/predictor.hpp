#pragma once

#include "subsyz/koszul.hpp"

namespace subsyz {

/// Hilbert table a size-e subset with truncated Hilbert function must have:
/// h(t) = min{h_X(t), e}.
HilbertTable truncated_hf(const PointSet& X, long e);
HilbertTable truncated_hf(const HilbertTable& hx, long e);

/// Which constraint pinned a predicted rank.
enum class Binding : char {
    kSourceMinusKernel = 'a',  // source dim minus forced kernel, constraint (i')
    kPreviousKernel = 'b',     // kernel of the previous map, constraint (ii')
    kBoth = '=',
};

struct GuessEntry {
    long source_dim = 0;
    long rank = 0;
    long kernel_dim = 0;
    Binding binding = Binding::kBoth;
};

/// The most-generic-possible ranks for the wedge complex of a size-e subset
/// Y of X: along each anti-diagonal p+q, starting from the zero map at
/// i = 0, rank e_{i+1} is the smaller of
///   (a) dim Lambda^{i+1} S_1 (x) I(Y)_q minus the forced kernel
///       (the actual kernel of X's differential there), and
///   (b) the predicted kernel of the previous map.
/// derived_betti is the Betti table these ranks force.
struct GuessRankTable {
    long e = 0;
    std::map<std::pair<int, int>, GuessEntry> entries;  // (i, q)
    BettiTable derived_betti;
};

GuessRankTable guess_ranks(const PointSet& X, long e);
GuessRankTable guess_ranks(IdealCache& cache, long e);

/// Predicted rank of the multiplication map of a size-m subset of X in P^2:
/// min{dim I(Z)_{s+1}, rank mu_{s,X} + dim S_1(x)I(Z)_s - dim S_1(x)I(X)_s},
/// with I(Z) dimensions read off the truncated Hilbert function.
long predicted_mu_rank(const PointSet& X, long m, int s);
long predicted_mu_rank(IdealCache& cache, long m, int s);

/// Betti table forced on d general points in P^2 by the generic Hilbert
/// function plus maximal-rank multiplication maps.
BettiTable mrc_predicted_betti(int n, long d);

}  // namespace subsyz
