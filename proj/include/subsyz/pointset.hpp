#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsyz/linalg.hpp"
#include "subsyz/polyspace.hpp"

namespace subsyz {

/// A finite set of distinct points in P^n over GF(p).  Coordinates are
/// normalized so the first nonzero coordinate is 1, which makes projective
/// equality plain tuple equality and file round-trips canonical.
struct PointSet {
    int n = 0;
    Field field;
    std::vector<std::vector<std::uint32_t>> points;

    std::size_t size() const { return points.size(); }
};

/// Validates, reduces mod p, normalizes, and rejects zero or duplicate
/// points.
PointSet make_point_set(int n, const Field& field,
                        const std::vector<std::vector<std::int64_t>>& raw);

PointSet subset(const PointSet& X, const std::vector<std::size_t>& indices);

/// Hilbert function of X through stabilization + 1, with first differences.
struct HilbertTable {
    std::vector<long> values;  // h(0..T)
    std::vector<long> deltas;  // h(t) - h(t-1)
    long degree = 0;           // |X|
    int stabilization = 0;     // smallest t with h(t) = |X|

    long value_at(int t) const {
        if (t < 0) return 0;
        if (std::size_t(t) < values.size()) return values[t];
        return degree;
    }
    long delta_at(int t) const {
        if (t < 0 || std::size_t(t) >= deltas.size()) return 0;
        return deltas[t];
    }
};

/// |X| x C(n+t,n) matrix; entry (i,j) = j-th monomial evaluated at P_i.
Matrix evaluation_matrix(const PointSet& X, int t);

HilbertTable hilbert(const PointSet& X);

/// dim I(X)_t = C(n+t,n) - h_X(t), without materializing a basis.
long ideal_dim(const PointSet& X, const HilbertTable& hf, int t);

/// Basis of the degree-t piece of I(X) in reduced echelon normal form.
/// The kernel-basis layout means coordinates of any element of I(X)_t in
/// this basis are its values at `free_cols`.
struct GradedBasis {
    int n = 0;
    int degree = 0;
    std::vector<std::vector<std::uint32_t>> vecs;
    std::vector<std::size_t> free_cols;

    std::size_t size() const { return vecs.size(); }
    PolyVec poly(const Field& F, std::size_t i) const;
};

GradedBasis ideal_basis(const PointSet& X, int t);

/// d certified-generic points sampled from mt19937_64(seed) with rejection
/// sampling.  Certification is exact: h(t) = min{C(n+t,n), d} for every t.
/// On failure the whole set is resampled; gives up after `max_retries`.
struct RandomPointsResult {
    PointSet points;
    int retries = 0;
};
RandomPointsResult random_points(int n, long d, const Field& field, std::uint64_t seed,
                                 int max_retries = 64);

/// True when h(t) = min{C(n+t,n), |X|} for all t (maximal Hilbert function).
bool has_generic_hilbert_function(const PointSet& X, const HilbertTable& hf);

}  // namespace subsyz
