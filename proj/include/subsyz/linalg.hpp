#pragma once

#include <cstdint>
#include <vector>

#include "subsyz/matrix.hpp"

namespace subsyz {

/// Reduced row echelon form plus the pivot bookkeeping needed to read off
/// kernel coordinates.
struct Rref {
    Matrix m;
    std::vector<std::size_t> pivot_cols;  // ascending
    std::vector<std::size_t> free_cols;   // ascending
    std::size_t rank = 0;
};

/// Right null space in reduced echelon normal form: vector k has a 1 at
/// free_cols[k] and 0 at every other free column, so the coordinates of any
/// kernel element v in this basis are just v restricted to the free columns.
struct KernelBasis {
    std::size_t dim = 0;                              // ambient dimension (= cols of the matrix)
    std::vector<std::vector<std::uint32_t>> vectors;  // size = cols - rank
    std::vector<std::size_t> free_cols;

    std::size_t size() const { return vectors.size(); }
};

// OpenMP-parallel kernels.  Pivot selection (first row with a nonzero entry
// in the pivot column) is serial; row updates are data-parallel and exact,
// so results are identical for every thread count.
std::size_t rank(const Field& F, Matrix m);
Rref rref(const Field& F, Matrix m);
KernelBasis kernel_basis(const Field& F, const Matrix& m);

KernelBasis kernel_from_rref(const Field& F, const Rref& r);

namespace serial {
// Reference implementations: same elimination, no threading.  Kept for
// differential tests and the benchmark target.
std::size_t rank(const Field& F, Matrix m);
Rref rref(const Field& F, Matrix m);
KernelBasis kernel_basis(const Field& F, const Matrix& m);
}  // namespace serial

}  // namespace subsyz
