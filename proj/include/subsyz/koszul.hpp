#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subsyz/pointset.hpp"

namespace subsyz {

/// Basis of the p-th wedge power of S_1: strictly increasing index tuples
/// from {0..n}, in lexicographic order.
struct WedgeBasis {
    int n = 0;
    int p = 0;
    std::vector<std::vector<int>> tuples;

    std::size_t size() const { return tuples.size(); }
};

WedgeBasis wedge_basis(int n, int p);

/// Lazily computed ideal data for one point set: Hilbert table plus graded
/// bases of I(X)_q on demand.  Borrows the point set; it must outlive the
/// cache.
class IdealCache {
public:
    explicit IdealCache(const PointSet& X) : X_(X), hf_(hilbert(X)) {}

    const PointSet& points() const { return X_; }
    const HilbertTable& hf() const { return hf_; }
    long dim(int q) const { return ideal_dim(X_, hf_, q); }
    const GradedBasis& basis(int q);

private:
    const PointSet& X_;
    HilbertTable hf_;
    std::map<int, GradedBasis> bases_;
};

/// One differential of the wedge complex on I(X):
///   Lambda^p S_1 (x) I_q  ->  Lambda^{p-1} S_1 (x) I_{q+1}
///   e_{i_1}^...^e_{i_p} (x) f  |->  sum_k (-1)^{p-k} e_{...without i_k...} (x) x_{i_k} f
/// Columns are (tuple, basis element) pairs in lexicographic product order;
/// rows likewise on the target side.
struct KoszulSlice {
    int p = 0, q = 0;
    std::size_t source_dim = 0, target_dim = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
    Matrix matrix;  // target_dim x source_dim
};

KoszulSlice koszul_differential(IdealCache& cache, int p, int q);
KoszulSlice koszul_differential(const PointSet& X, int p, int q);

/// Rank of the multiplication map S_1 (x) I_s -> I_{s+1} (the p = 1 slice).
std::size_t mu_rank(const PointSet& X, int s);
std::size_t mu_rank(IdealCache& cache, int s);

/// Graded Betti numbers: entries (homological degree p, twist j) -> beta.
/// Zero entries are omitted.
struct BettiTable {
    int n = 0;
    long d = 0;
    std::map<std::pair<int, int>, long> entries;

    long beta(int p, int j) const {
        auto it = entries.find({p, j});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int p, int j, long beta) {
        if (beta != 0) entries[{p, j}] = beta;
    }
    int max_p() const;
    int max_twist() const;
};

/// Full Betti table of I(X), all twists up to regularity.
BettiTable graded_betti(const PointSet& X);
BettiTable graded_betti(IdealCache& cache);

/// Only the column of a single twist j: beta_{p,j} for all p.
BettiTable graded_betti_window(IdealCache& cache, int twist);

/// Rank/kernel bookkeeping for the slices used by a table computation,
/// keyed by (p, q); exposed so the predictor can reuse actual kernel sizes.
struct SliceDims {
    std::size_t source_dim = 0;
    std::size_t rank = 0;
    std::size_t kernel_dim = 0;
};
std::map<std::pair<int, int>, SliceDims> koszul_slice_dims(IdealCache& cache, int qmax);

/// Plain-text diagram, rows = twist - homological degree, cols = p.
std::string betti_diagram(const BettiTable& b);

}  // namespace subsyz
