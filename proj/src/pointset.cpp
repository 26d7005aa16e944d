#include "subsyz/pointset.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace subsyz {

namespace {

std::vector<std::uint32_t> normalize_point(const Field& F, std::vector<std::uint32_t> p) {
    std::size_t lead = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i]) {
            lead = i;
            break;
        }
    if (lead == p.size()) throw ValidationError("projective point must have a nonzero coordinate");
    std::uint32_t inv = F.inv(p[lead]);
    for (auto& c : p) c = F.mul(c, inv);
    return p;
}

}  // namespace

PointSet make_point_set(int n, const Field& field,
                        const std::vector<std::vector<std::int64_t>>& raw) {
    if (n < 1) throw ValidationError("projective dimension must be >= 1");
    if (raw.empty()) throw ValidationError("point set must be nonempty");
    PointSet X{n, field, {}};
    X.points.reserve(raw.size());
    std::set<std::vector<std::uint32_t>> seen;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != std::size_t(n) + 1)
            throw ValidationError("point " + std::to_string(i) + " has " +
                                  std::to_string(raw[i].size()) + " coordinates, expected " +
                                  std::to_string(n + 1));
        std::vector<std::uint32_t> p(n + 1);
        for (int c = 0; c <= n; ++c) p[c] = field.reduce(raw[i][c]);
        p = normalize_point(field, p);
        if (!seen.insert(p).second)
            throw ValidationError("duplicate point at index " + std::to_string(i));
        X.points.push_back(std::move(p));
    }
    return X;
}

PointSet subset(const PointSet& X, const std::vector<std::size_t>& indices) {
    PointSet Y{X.n, X.field, {}};
    Y.points.reserve(indices.size());
    for (std::size_t i : indices) Y.points.push_back(X.points.at(i));
    return Y;
}

Matrix evaluation_matrix(const PointSet& X, int t) {
    if (t < 0) throw ValidationError("degree must be >= 0");
    const Field& F = X.field;
    MonomialBasis basis(X.n, t);
    Matrix m(X.size(), basis.size());

    // Power tables per point: pows[v][e] = coord_v^e.
    for (std::size_t i = 0; i < X.size(); ++i) {
        std::vector<std::vector<std::uint32_t>> pows(X.n + 1, std::vector<std::uint32_t>(t + 1, 1));
        for (int v = 0; v <= X.n; ++v)
            for (int e = 1; e <= t; ++e) pows[v][e] = F.mul(pows[v][e - 1], X.points[i][v]);
        std::uint32_t* row = m.row(i);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto& exps = basis.exponents(j);
            std::uint32_t val = 1;
            for (int v = 0; v <= X.n; ++v) val = F.mul(val, pows[v][exps[v]]);
            row[j] = val;
        }
    }
    return m;
}

HilbertTable hilbert(const PointSet& X) {
    HilbertTable hf;
    hf.degree = long(X.size());
    int t = 0;
    for (;; ++t) {
        long h = long(rank(X.field, evaluation_matrix(X, t)));
        hf.values.push_back(h);
        if (h == hf.degree) break;
    }
    hf.stabilization = t;
    hf.values.push_back(long(rank(X.field, evaluation_matrix(X, t + 1))));
    hf.deltas.resize(hf.values.size());
    for (std::size_t i = 0; i < hf.values.size(); ++i)
        hf.deltas[i] = hf.values[i] - (i ? hf.values[i - 1] : 0);
    return hf;
}

long ideal_dim(const PointSet& X, const HilbertTable& hf, int t) {
    if (t < 0) return 0;
    return long(binomial(X.n + t, X.n)) - hf.value_at(t);
}

PolyVec GradedBasis::poly(const Field&, std::size_t i) const {
    PolyVec f;
    f.n = n;
    f.degree = degree;
    f.coeffs = vecs.at(i);
    return f;
}

GradedBasis ideal_basis(const PointSet& X, int t) {
    KernelBasis kb = kernel_basis(X.field, evaluation_matrix(X, t));
    GradedBasis gb;
    gb.n = X.n;
    gb.degree = t;
    gb.vecs = std::move(kb.vectors);
    gb.free_cols = std::move(kb.free_cols);
    return gb;
}

bool has_generic_hilbert_function(const PointSet& X, const HilbertTable& hf) {
    for (std::size_t t = 0; t < hf.values.size(); ++t) {
        long expected = std::min<long>(long(binomial(X.n + long(t), X.n)), long(X.size()));
        if (hf.values[t] != expected) return false;
    }
    return true;
}

RandomPointsResult random_points(int n, long d, const Field& field, std::uint64_t seed,
                                 int max_retries) {
    if (d < 1) throw ValidationError("point count must be >= 1");
    if (n < 1) throw ValidationError("projective dimension must be >= 1");
    std::mt19937_64 rng(seed);
    const std::uint64_t p = field.prime();
    // Rejection sampling keeps the draw uniform and the generator fully
    // specified (no implementation-defined distribution adapters).
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % p;
    auto draw = [&]() {
        std::uint64_t r;
        do {
            r = rng();
        } while (r >= limit);
        return std::uint32_t(r % p);
    };

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        PointSet X{n, field, {}};
        std::set<std::vector<std::uint32_t>> seen;
        bool ok = true;
        for (long i = 0; i < d && ok; ++i) {
            int point_tries = 0;
            for (;;) {
                std::vector<std::uint32_t> pt(n + 1);
                bool nonzero = false;
                for (int c = 0; c <= n; ++c) {
                    pt[c] = draw();
                    nonzero = nonzero || pt[c];
                }
                if (nonzero) {
                    pt = normalize_point(field, pt);
                    if (seen.insert(pt).second) {
                        X.points.push_back(std::move(pt));
                        break;
                    }
                }
                if (++point_tries > 1000) {
                    ok = false;  // field too small to hold d distinct points
                    break;
                }
            }
        }
        if (ok && has_generic_hilbert_function(X, hilbert(X)))
            return RandomPointsResult{std::move(X), attempt};
    }
    throw ValidationError("failed to sample " + std::to_string(d) +
                          " certified-generic points in P^" + std::to_string(n) + " mod " +
                          std::to_string(field.prime()) + " after " +
                          std::to_string(max_retries) + " retries");
}

}  // namespace subsyz
