#include "subsyz/subsetsearch.hpp"

#include <algorithm>

namespace subsyz {

namespace {

bool table_is_truncation(const HilbertTable& sub, const HilbertTable& super, long e) {
    for (int t = 0; t <= std::max(int(sub.values.size()), int(super.values.size())); ++t)
        if (sub.value_at(t) != std::min(super.value_at(t), e)) return false;
    return true;
}

int initial_degree(const PointSet& X, const HilbertTable& hf) {
    int t = 0;
    while (ideal_dim(X, hf, t) == 0) ++t;
    return t;
}

}  // namespace

bool prefix_truncated(const PointSet& X, const std::vector<std::size_t>& order) {
    HilbertTable hx = hilbert(X);
    std::vector<std::size_t> prefix;
    for (std::size_t idx : order) {
        prefix.push_back(idx);
        HilbertTable hy = hilbert(subset(X, prefix));
        if (prefix.size() == X.size()) break;
        if (!table_is_truncation(hy, hx, long(prefix.size()))) return false;
    }
    return true;
}

std::vector<std::size_t> greedy_truncated_subset(const PointSet& X, long e) {
    if (e < 1 || e >= long(X.size()))
        throw ValidationError("subset size must satisfy 1 <= e < d");
    HilbertTable hx = hilbert(X);
    std::vector<std::size_t> chosen;
    std::vector<bool> used(X.size(), false);
    while (long(chosen.size()) < e) {
        bool extended = false;
        for (std::size_t cand = 0; cand < X.size() && !extended; ++cand) {
            if (used[cand]) continue;
            chosen.push_back(cand);
            HilbertTable hy = hilbert(subset(X, chosen));
            if (table_is_truncation(hy, hx, long(chosen.size()))) {
                used[cand] = true;
                extended = true;
            } else {
                chosen.pop_back();
            }
        }
        if (!extended)
            throw std::logic_error(
                "greedy truncated-subset construction dead-ended; this cannot happen for a "
                "valid point set and indicates a bug");
    }
    return chosen;
}

int critical_degree(const PointSet& X) { return hilbert(X).stabilization; }

long min_gens(IdealCache& cache, int t) {
    if (t < 1) throw ValidationError("generator degree must be >= 1");
    return cache.dim(t) - long(mu_rank(cache, t - 1));
}

long min_gens(const PointSet& X, int t) {
    IdealCache cache(X);
    return min_gens(cache, t);
}

CaseLabel classify_case(const PointSet& X) {
    if (X.n != 2) throw ValidationError("case classification applies to P^2 only");
    IdealCache cache(X);
    CaseLabel label;
    label.l = cache.hf().stabilization;
    label.gens_at_lplus1 = min_gens(cache, label.l + 1);
    label.case_number = label.gens_at_lplus1 >= 3 ? 4 : int(label.gens_at_lplus1) + 1;
    return label;
}

namespace {

struct SearchState {
    long m = 0;
    long candidates_tried = 0;
    std::vector<ChainStep> steps;
};

// One link W -> Z = W minus a point.  Accepted when Z has truncated Hilbert
// function w.r.t. W and the recomputed multiplication ranks match the
// predicted ones in every degree from the initial degree of I(Z) through
// l_W + 1 (outside that window the equality is forced).
bool verify_link(IdealCache& wcache, const PointSet& Z,
                 std::vector<DegreeRank>& out_ranks) {
    HilbertTable hz = hilbert(Z);
    if (!table_is_truncation(hz, wcache.hf(), long(Z.size()))) return false;
    IdealCache zcache(Z);
    int lo = initial_degree(Z, hz);
    int hi = wcache.hf().stabilization + 1;
    out_ranks.clear();
    for (int s = lo; s <= hi; ++s) {
        long predicted = predicted_mu_rank(wcache, long(Z.size()), s);
        long actual = long(mu_rank(zcache, s));
        out_ranks.push_back(DegreeRank{s, predicted, actual});
        if (predicted != actual) return false;
    }
    return true;
}

bool search(SearchState& st, const PointSet& W, const std::vector<std::size_t>& global_indices) {
    if (long(W.size()) == st.m) return true;
    IdealCache wcache(W);
    for (std::size_t local = 0; local < W.size(); ++local) {
        std::vector<std::size_t> keep_local;
        std::vector<std::size_t> keep_global;
        for (std::size_t i = 0; i < W.size(); ++i)
            if (i != local) {
                keep_local.push_back(i);
                keep_global.push_back(global_indices[i]);
            }
        PointSet Z = subset(W, keep_local);
        ++st.candidates_tried;
        std::vector<DegreeRank> ranks;
        if (!verify_link(wcache, Z, ranks)) continue;
        st.steps.push_back(ChainStep{global_indices[local], std::move(ranks)});
        if (search(st, Z, keep_global)) return true;
        st.steps.pop_back();
    }
    return false;
}

}  // namespace

SubsetChain find_subset(const PointSet& X, long m) {
    if (X.n != 2) throw ValidationError("subset search applies to P^2 only");
    if (m < 1 || m >= long(X.size()))
        throw ValidationError("subset size must satisfy 1 <= m < d");

    SearchState st{m, 0, {}};
    std::vector<std::size_t> all(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) all[i] = i;

    SubsetChain chain;
    chain.success = search(st, X, all);
    chain.steps = std::move(st.steps);
    chain.candidates_tried = st.candidates_tried;
    if (!chain.success) return chain;

    std::vector<bool> removed(X.size(), false);
    for (const auto& step : chain.steps) removed[step.removed_index] = true;
    for (std::size_t i = 0; i < X.size(); ++i)
        if (!removed[i]) chain.final_indices.push_back(i);

    // Independent re-verification of the final subset directly against X.
    IdealCache xcache(X);
    PointSet Z = subset(X, chain.final_indices);
    IdealCache zcache(Z);
    HilbertTable hz = zcache.hf();
    if (!table_is_truncation(hz, xcache.hf(), m))
        throw std::logic_error("final subset of a successful chain lost the truncated "
                               "Hilbert function; chain composition is broken");
    int lo = initial_degree(Z, hz);
    int hi = xcache.hf().stabilization + 1;
    for (int s = lo; s <= hi; ++s) {
        long predicted = predicted_mu_rank(xcache, m, s);
        long actual = long(mu_rank(zcache, s));
        chain.final_ranks.push_back(DegreeRank{s, predicted, actual});
        if (predicted != actual) {
            chain.success = false;
            return chain;
        }
    }
    return chain;
}

std::vector<SubsetRecord> enumerate_subsets(const PointSet& X, long m, std::uint64_t budget) {
    const long d = long(X.size());
    if (m < 1 || m > d) throw ValidationError("subset size must satisfy 1 <= m <= d");
    std::uint64_t count = binomial(d, m);
    if (count > budget)
        throw ValidationError("enumeration of C(" + std::to_string(d) + "," + std::to_string(m) +
                              ") = " + std::to_string(count) + " subsets exceeds budget " +
                              std::to_string(budget));

    HilbertTable hx = hilbert(X);
    int hi = hx.stabilization + 1;

    std::vector<SubsetRecord> out;
    out.reserve(count);
    std::vector<std::size_t> idx(m);
    for (long i = 0; i < m; ++i) idx[i] = std::size_t(i);
    for (;;) {
        SubsetRecord rec;
        rec.indices = idx;
        PointSet Z = subset(X, idx);
        IdealCache zcache(Z);
        rec.truncated = table_is_truncation(zcache.hf(), hx, m);
        for (int s = 0; s <= hi; ++s)
            rec.mu_ranks.emplace_back(s, long(mu_rank(zcache, s)));
        out.push_back(std::move(rec));

        // next combination in lexicographic order
        long i = m - 1;
        while (i >= 0 && idx[i] == std::size_t(d - m + i)) --i;
        if (i < 0) break;
        ++idx[i];
        for (long j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

}  // namespace subsyz
