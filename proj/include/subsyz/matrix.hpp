#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subsyz/field.hpp"

namespace subsyz {

/// Dense row-major matrix over GF(p).  Entries are canonical residues.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;  // rows*cols entries, row-major

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    std::uint32_t* row(std::size_t r) { return a.data() + r * cols; }
    const std::uint32_t* row(std::size_t r) const { return a.data() + r * cols; }

    bool operator==(const Matrix& o) const = default;

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

Matrix transpose(const Matrix& m);

/// y = M * x over GF(p).
std::vector<std::uint32_t> mat_vec(const Field& F, const Matrix& m,
                                   const std::vector<std::uint32_t>& x);

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b);

}  // namespace subsyz
