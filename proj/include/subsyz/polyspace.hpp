#pragma once

#include <cstdint>
#include <vector>

#include "subsyz/field.hpp"

namespace subsyz {

/// C(n, k) as uint64; 0 when k < 0 or k > n.
std::uint64_t binomial(long n, long k);

/// Monomial basis of S_t, S = k[x_0..x_n], in graded-lex order with
/// x_0 > x_1 > ... > x_n.  This order is fixed globally: every matrix,
/// kernel basis and serialized artifact in the project is indexed by it.
class MonomialBasis {
public:
    MonomialBasis(int n, int t);

    int n() const { return n_; }
    int degree() const { return t_; }
    std::size_t size() const { return monos_.size(); }
    const std::vector<int>& exponents(std::size_t i) const { return monos_[i]; }

    /// Position of an exponent tuple, computed arithmetically (no search).
    std::size_t index_of(const std::vector<int>& exps) const;

private:
    int n_, t_;
    std::vector<std::vector<int>> monos_;
};

/// A homogeneous polynomial of fixed degree, stored as its coefficient
/// vector over MonomialBasis(n, degree).
struct PolyVec {
    int n = 0;
    int degree = 0;
    std::vector<std::uint32_t> coeffs;

    bool operator==(const PolyVec&) const = default;
    bool is_zero() const {
        for (auto c : coeffs)
            if (c) return false;
        return true;
    }
};

PolyVec zero_poly(int n, int t);
/// The monomial with the given exponent tuple, coefficient 1.
PolyVec monomial_poly(int n, const std::vector<int>& exps);
/// x_i as a PolyVec of degree 1.
PolyVec variable_poly(int n, int i);

PolyVec add(const Field& F, const PolyVec& f, const PolyVec& g);
PolyVec scale(const Field& F, const PolyVec& f, std::uint32_t c);

/// L*f for a linear form L; the degree-raising building block of the
/// multiplication maps.
PolyVec mult_by_linear(const Field& F, const PolyVec& f, const PolyVec& lin);

/// General homogeneous product (degrees in scope are tiny).
PolyVec multiply(const Field& F, const PolyVec& f, const PolyVec& g);

std::uint32_t evaluate(const Field& F, const PolyVec& f,
                       const std::vector<std::uint32_t>& point);

/// Human-readable rendering like "x0^2*x1 + 4*x2^3".
std::string poly_to_string(const PolyVec& f);

}  // namespace subsyz
