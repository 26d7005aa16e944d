#pragma once

#include <functional>
#include <random>

#include "subsyz/koszul.hpp"

namespace subsyz::testutil {

inline Matrix random_matrix(const Field& F, std::size_t rows, std::size_t cols,
                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix m(rows, cols);
    for (auto& x : m.a) x = std::uint32_t(rng() % F.prime());
    return m;
}

/// Five points with points 0,1,2 on one line and 2,3,4 on another; the
/// workhorse special configuration for the subset-search tests.
inline PointSet five_point_config(const Field& F) {
    return make_point_set(2, F, {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 2, 2}});
}

/// Alternating-sum consistency between a Betti table and ideal dimensions:
/// dim I_t = sum_p (-1)^p sum_j beta_{p,j} * C(n + t - j, n) for all t.
inline bool euler_identity_holds(const BettiTable& b,
                                 const std::function<long(int)>& ideal_dim_at, int tmax) {
    for (int t = 0; t <= tmax; ++t) {
        long rhs = 0;
        for (const auto& [key, beta] : b.entries) {
            auto [p, j] = key;
            long c = long(binomial(b.n + t - j, b.n));
            rhs += (p % 2 ? -1 : 1) * beta * c;
        }
        if (rhs != ideal_dim_at(t)) return false;
    }
    return true;
}

inline bool euler_identity_holds(const PointSet& X, const BettiTable& b) {
    HilbertTable hf = hilbert(X);
    int tmax = hf.stabilization + b.n + 2;
    return euler_identity_holds(
        b, [&](int t) { return ideal_dim(X, hf, t); }, tmax);
}

/// P^2 point sets with seeded special structure: some points collinear,
/// sometimes on two lines, rest random.  Mirrors the mixtures the
/// verification sweeps call for.
inline PointSet special_config(const Field& F, long d, std::uint64_t seed) {
    // Retry with a shifted seed on the (rare) coordinate collision, so the
    // result is still a pure function of (d, seed).
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
        auto draw = [&]() { return std::int64_t(rng() % F.prime()); };
        std::vector<std::vector<std::int64_t>> pts;
        auto add_line_points = [&](long count) {
            // parametrized line t -> P0 + t*P1
            std::vector<std::int64_t> p0 = {draw(), draw(), 1};
            std::vector<std::int64_t> p1 = {draw(), draw(), draw()};
            for (long i = 0; i < count; ++i) {
                std::int64_t s = draw();
                pts.push_back({p0[0] + s * p1[0], p0[1] + s * p1[1], p0[2] + s * p1[2]});
            }
        };
        long mode = long(rng() % 3);
        long remaining = d;
        if (mode >= 1 && d >= 4) {
            long k = 3 + long(rng() % std::uint64_t(std::max<long>(1, d - 3)));
            add_line_points(k);
            remaining -= k;
        }
        if (mode == 2 && remaining >= 3) {
            long k = 3 + long(rng() % std::uint64_t(std::max<long>(1, remaining - 2)));
            add_line_points(k);
            remaining -= k;
        }
        for (long i = 0; i < remaining; ++i) pts.push_back({draw(), draw(), draw()});
        try {
            return make_point_set(2, F, pts);
        } catch (const ValidationError&) {
            continue;
        }
    }
}

}  // namespace subsyz::testutil
