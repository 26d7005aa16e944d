#include "subsyz/linalg.hpp"

#include <algorithm>
#include <utility>

namespace subsyz {

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

std::vector<std::uint32_t> mat_vec(const Field& F, const Matrix& m,
                                   const std::vector<std::uint32_t>& x) {
    std::vector<std::uint32_t> y(m.rows, 0);
    for (std::size_t r = 0; r < m.rows; ++r) {
        const std::uint32_t* row = m.row(r);
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < m.cols; ++c) {
            acc += F.mul(row[c], x[c]);
            if (acc >= (std::uint64_t(1) << 62)) acc %= F.prime();
        }
        y[r] = std::uint32_t(acc % F.prime());
    }
    return y;
}

Matrix mat_mul(const Field& F, const Matrix& a, const Matrix& b) {
    Matrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            std::uint32_t v = a.at(i, k);
            if (!v) continue;
            const std::uint32_t* brow = b.row(k);
            std::uint32_t* crow = c.row(i);
            for (std::size_t j = 0; j < b.cols; ++j)
                crow[j] = F.add(crow[j], F.mul(v, brow[j]));
        }
    return c;
}

namespace {

void swap_rows(Matrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(m.row(i), m.row(i) + m.cols, m.row(j));
}

// Forward elimination to row echelon form.  Pivot = first row with a
// nonzero entry in the current column; pivot rows are normalized to leading
// coefficient 1.  Row updates below the pivot run in parallel when asked:
// they touch disjoint rows with exact arithmetic, so the result does not
// depend on the thread count.
std::size_t forward_eliminate(const Field& F, Matrix& m, bool parallel,
                              std::vector<std::size_t>* pivot_cols) {
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols && pr < m.rows; ++c) {
        std::size_t piv = pr;
        while (piv < m.rows && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        swap_rows(m, pr, piv);

        std::uint32_t* prow = m.row(pr);
        std::uint32_t lead_inv = F.inv(prow[c]);
        if (lead_inv != 1)
            for (std::size_t k = c; k < m.cols; ++k) prow[k] = F.mul(prow[k], lead_inv);

        const std::size_t nrows = m.rows;
        const bool par = parallel && (nrows - pr) * (m.cols - c) > 16384;
#pragma omp parallel for schedule(static) if (par)
        for (std::size_t j = pr + 1; j < nrows; ++j) {
            std::uint32_t* drow = m.row(j);
            std::uint32_t f = drow[c];
            if (!f) continue;
            drow[c] = 0;
            for (std::size_t k = c + 1; k < m.cols; ++k)
                drow[k] = F.sub(drow[k], F.mul(f, prow[k]));
        }

        if (pivot_cols) pivot_cols->push_back(c);
        ++pr;
    }
    return pr;
}

Rref rref_impl(const Field& F, Matrix m, bool parallel) {
    Rref out;
    out.rank = forward_eliminate(F, m, parallel, &out.pivot_cols);

    // Back-substitution: clear entries above each pivot.
    for (std::size_t k = out.rank; k-- > 0;) {
        std::size_t pc = out.pivot_cols[k];
        const std::uint32_t* prow = m.row(k);
        const bool par = parallel && k * (m.cols - pc) > 16384;
#pragma omp parallel for schedule(static) if (par)
        for (std::size_t j = 0; j < k; ++j) {
            std::uint32_t* drow = m.row(j);
            std::uint32_t f = drow[pc];
            if (!f) continue;
            drow[pc] = 0;
            for (std::size_t t = pc + 1; t < m.cols; ++t)
                drow[t] = F.sub(drow[t], F.mul(f, prow[t]));
        }
    }

    out.free_cols.reserve(m.cols - out.rank);
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (next < out.pivot_cols.size() && out.pivot_cols[next] == c)
            ++next;
        else
            out.free_cols.push_back(c);
    }
    out.m = std::move(m);
    return out;
}

}  // namespace

KernelBasis kernel_from_rref(const Field& F, const Rref& r) {
    KernelBasis kb;
    kb.dim = r.m.cols;
    kb.free_cols = r.free_cols;
    kb.vectors.reserve(r.free_cols.size());
    for (std::size_t fc : r.free_cols) {
        std::vector<std::uint32_t> v(r.m.cols, 0);
        v[fc] = 1;
        for (std::size_t k = 0; k < r.rank; ++k) v[r.pivot_cols[k]] = F.neg(r.m.at(k, fc));
        kb.vectors.push_back(std::move(v));
    }
    return kb;
}

std::size_t rank(const Field& F, Matrix m) { return forward_eliminate(F, m, true, nullptr); }
Rref rref(const Field& F, Matrix m) { return rref_impl(F, std::move(m), true); }
KernelBasis kernel_basis(const Field& F, const Matrix& m) {
    return kernel_from_rref(F, rref(F, m));
}

namespace serial {
std::size_t rank(const Field& F, Matrix m) { return forward_eliminate(F, m, false, nullptr); }
Rref rref(const Field& F, Matrix m) { return rref_impl(F, std::move(m), false); }
KernelBasis kernel_basis(const Field& F, const Matrix& m) {
    return kernel_from_rref(F, serial::rref(F, m));
}
}  // namespace serial

}  // namespace subsyz
