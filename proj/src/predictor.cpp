#include "subsyz/predictor.hpp"

#include <algorithm>

namespace subsyz {

HilbertTable truncated_hf(const HilbertTable& hx, long e) {
    if (e < 1 || e >= hx.degree)
        throw ValidationError("subset size must satisfy 1 <= e < d");
    HilbertTable hy;
    hy.degree = e;
    int t = 0;
    while (std::min(hx.value_at(t), e) < e) ++t;
    hy.stabilization = t;
    for (int s = 0; s <= t + 1; ++s) hy.values.push_back(std::min(hx.value_at(s), e));
    hy.deltas.resize(hy.values.size());
    for (std::size_t i = 0; i < hy.values.size(); ++i)
        hy.deltas[i] = hy.values[i] - (i ? hy.values[i - 1] : 0);
    return hy;
}

HilbertTable truncated_hf(const PointSet& X, long e) { return truncated_hf(hilbert(X), e); }

namespace {

long subset_ideal_dim(int n, const HilbertTable& hy, int q) {
    if (q < 0) return 0;
    return long(binomial(n + q, n)) - hy.value_at(q);
}

// Kernel dimension of X's differential d_{i,q}.  For q <= stab+1 this is a
// computed slice.  Beyond that the complex is exact at Lambda^i (x) I_q
// (the regularity of a points ideal is stab+1) and d_{n+1,q} is injective,
// so the kernel follows arithmetically along the anti-diagonal.
long x_kernel_dim(const IdealCache& cache, const std::map<std::pair<int, int>, SliceDims>& dims,
                  int qmax, int i, int q) {
    const int n = cache.points().n;
    if (q < 0 || i > n + 1) return 0;
    long src = long(binomial(n + 1, i)) * cache.dim(q);
    if (src == 0) return 0;
    if (i == 0) return cache.dim(q);  // zero map
    if (i == n + 1) return 0;         // injective: the ideal is torsion-free
    if (q <= qmax) return long(dims.at({i, q}).kernel_dim);
    long src_next = long(binomial(n + 1, i + 1)) * cache.dim(q - 1);
    return src_next - x_kernel_dim(cache, dims, qmax, i + 1, q - 1);
}

}  // namespace

GuessRankTable guess_ranks(IdealCache& cache, long e) {
    const PointSet& X = cache.points();
    const int n = X.n;
    const long d = long(X.size());
    if (e < 1 || e >= d) throw ValidationError("subset size must satisfy 1 <= e < d");

    const int qmax = cache.hf().stabilization + 1;
    auto dims = koszul_slice_dims(cache, qmax);
    HilbertTable hy = truncated_hf(cache.hf(), e);

    GuessRankTable g;
    g.e = e;
    const int tmax = n + hy.stabilization + 2;
    for (int t = 0; t <= tmax; ++t) {
        long src0 = subset_ideal_dim(n, hy, t);
        g.entries[{0, t}] = GuessEntry{src0, 0, src0, Binding::kBoth};
        long prev_kernel = src0;
        for (int i = 1; i <= std::min(t, n + 1); ++i) {
            int q = t - i;
            long src = long(binomial(n + 1, i)) * subset_ideal_dim(n, hy, q);
            long forced = x_kernel_dim(cache, dims, qmax, i, q);
            long cap_a = src - forced;
            long cap_b = prev_kernel;
            GuessEntry entry;
            entry.source_dim = src;
            entry.rank = std::min(cap_a, cap_b);
            entry.kernel_dim = src - entry.rank;
            entry.binding = cap_a < cap_b   ? Binding::kSourceMinusKernel
                            : cap_b < cap_a ? Binding::kPreviousKernel
                                            : Binding::kBoth;
            prev_kernel = entry.kernel_dim;
            g.entries[{i, q}] = entry;
        }
    }

    g.derived_betti.n = n;
    g.derived_betti.d = e;
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q + p <= tmax; ++q) {
            int t = p + q;
            auto here = g.entries.find({p, q});
            if (here == g.entries.end()) continue;
            long incoming = 0;
            auto up = g.entries.find({p + 1, q - 1});
            if (up != g.entries.end()) incoming = up->second.rank;
            g.derived_betti.set(p, t, here->second.kernel_dim - incoming);
        }
    }
    return g;
}

GuessRankTable guess_ranks(const PointSet& X, long e) {
    IdealCache cache(X);
    return guess_ranks(cache, e);
}

long predicted_mu_rank(IdealCache& cache, long m, int s) {
    const PointSet& X = cache.points();
    if (X.n != 2) throw ValidationError("the subset rank formula applies to P^2 only");
    if (m < 1 || m >= long(X.size()))
        throw ValidationError("subset size must satisfy 1 <= m < d");
    if (s < 0) throw ValidationError("degree must be >= 0");
    HilbertTable hz = truncated_hf(cache.hf(), m);
    long dim_z_s = subset_ideal_dim(2, hz, s);
    long dim_z_s1 = subset_ideal_dim(2, hz, s + 1);
    long dim_x_s = cache.dim(s);
    long mu_x = long(mu_rank(cache, s));
    return std::min(dim_z_s1, mu_x + 3 * (dim_z_s - dim_x_s));
}

long predicted_mu_rank(const PointSet& X, long m, int s) {
    IdealCache cache(X);
    return predicted_mu_rank(cache, m, s);
}

BettiTable mrc_predicted_betti(int n, long d) {
    if (n != 2)
        throw ValidationError("maximal-rank prediction implemented for P^2 only");
    if (d < 1) throw ValidationError("point count must be >= 1");
    auto dim_i = [&](int t) -> long {
        if (t < 0) return 0;
        long full = long(binomial(t + 2, 2));
        return full - std::min(full, d);
    };
    int l = 0;
    while (long(binomial(l + 2, 2)) < d) ++l;

    BettiTable b;
    b.n = 2;
    b.d = d;
    for (int t = 1; t <= l + 3; ++t) {
        long beta0 = std::max<long>(0, dim_i(t) - 3 * dim_i(t - 1));
        long third_diff = dim_i(t) - 3 * dim_i(t - 1) + 3 * dim_i(t - 2) - dim_i(t - 3);
        long beta1 = beta0 - third_diff;
        b.set(0, t, beta0);
        b.set(1, t, beta1);
    }
    return b;
}

}  // namespace subsyz
