#pragma once

#include <optional>

#include "subsyz/koszul.hpp"

namespace subsyz {

using DeltaSeq = std::vector<long>;

/// First difference of the Hilbert function of a complete intersection of
/// type (a, b): 1, 2, ..., min, plateau, ..., 2, 1 with socle degree a+b-2.
DeltaSeq ci_delta(int a, int b);

/// First differences of the residual of X under a CI of type (a, b):
/// subtract Delta h_X from the CI sequence and read it backwards.  Raises
/// when X cannot lie on such a CI (a negative entry).
DeltaSeq link_hf(const DeltaSeq& delta_x, int a, int b);

/// GCD of two homogeneous forms in three variables (bivariate Euclid on the
/// x0 = 1 chart after splitting off the common x0 power).  Normalized so the
/// graded-lex-leading coefficient is 1.
PolyVec poly_gcd(const Field& F, const PolyVec& f, const PolyVec& g);

/// Whether the homogeneous form g divides f exactly (by linear algebra on
/// the multiplication-by-g map).
bool divides(const Field& F, const PolyVec& g, const PolyVec& f);

/// Degree-t piece of the colon ideal I(C) : I(X) where C is the complete
/// intersection of H and K.  H and K must vanish on X and form a regular
/// sequence (coprime).
GradedBasis colon_basis(const PolyVec& H, const PolyVec& K, const PointSet& X, int t);

/// Deterministic search for a regular sequence (H, K) in I(X) of degrees
/// (a, b): echelon basis elements first, then small combinations (a coprime
/// pair need not exist among echelon representatives alone).
std::optional<std::pair<PolyVec, PolyVec>> find_ci_in_ideal(IdealCache& cache, int a, int b);

/// Degree matrix of the Hilbert-Burch presentation read off a P^2 Betti
/// table: rows are syzygy twists m_1 >= ... >= m_{e+1}, columns generator
/// twists d_1 >= ... >= d_{e+2}, entries max{0, m_i - d_j}.
struct DegreeMatrix {
    std::vector<long> row_twists;
    std::vector<long> col_twists;
    std::vector<std::vector<long>> entries;
};
DegreeMatrix degree_matrix(const BettiTable& b);

/// GCD of a basis of I(X)_l: degree 0 means the base locus is finite;
/// otherwise the common factor is returned.
struct BaseLocusGcd {
    int gcd_degree = 0;
    std::optional<PolyVec> witness;
};
BaseLocusGcd base_locus_gcd(const PointSet& X, int l);

std::string degree_matrix_text(const DegreeMatrix& dm);

}  // namespace subsyz
