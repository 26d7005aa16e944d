#include "subsyz/koszul.hpp"

#include <algorithm>
#include <sstream>

namespace subsyz {

WedgeBasis wedge_basis(int n, int p) {
    WedgeBasis wb;
    wb.n = n;
    wb.p = p;
    if (p < 0 || p > n + 1) return wb;  // zero space
    std::vector<int> cur;
    // lexicographic combinations of {0..n} of size p
    auto rec = [&](auto&& self, int start) -> void {
        if (int(cur.size()) == p) {
            wb.tuples.push_back(cur);
            return;
        }
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return wb;
}

const GradedBasis& IdealCache::basis(int q) {
    auto it = bases_.find(q);
    if (it == bases_.end()) it = bases_.emplace(q, ideal_basis(X_, q)).first;
    return it->second;
}

namespace {

// Coordinates of x_i * f_j in the echelon basis of I(X)_{q+1}, for every
// variable i and every basis element f_j of I(X)_q.  Because the target
// basis is in reduced echelon form, the coordinates of a vector in its span
// are its values at the free columns.
std::vector<std::vector<std::vector<std::uint32_t>>> variable_products(
    const Field& F, int n, const GradedBasis& from, const GradedBasis& to) {
    MonomialBasis src(n, from.degree);
    MonomialBasis dst(n, from.degree + 1);

    // shift[i][m] = index of x_i * (monomial m)
    std::vector<std::vector<std::size_t>> shift(n + 1, std::vector<std::size_t>(src.size()));
    for (std::size_t m = 0; m < src.size(); ++m) {
        std::vector<int> exps = src.exponents(m);
        for (int i = 0; i <= n; ++i) {
            ++exps[i];
            shift[i][m] = dst.index_of(exps);
            --exps[i];
        }
    }

    std::vector<std::vector<std::vector<std::uint32_t>>> out(
        n + 1, std::vector<std::vector<std::uint32_t>>(from.size()));
    std::vector<std::uint32_t> prod(dst.size());
    for (int i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < from.size(); ++j) {
            std::fill(prod.begin(), prod.end(), 0);
            const auto& f = from.vecs[j];
            for (std::size_t m = 0; m < src.size(); ++m)
                if (f[m]) prod[shift[i][m]] = F.add(prod[shift[i][m]], f[m]);
            std::vector<std::uint32_t> coords(to.free_cols.size());
            for (std::size_t k = 0; k < to.free_cols.size(); ++k)
                coords[k] = prod[to.free_cols[k]];
            out[i][j] = std::move(coords);
        }
    }
    return out;
}

std::size_t tuple_index(const WedgeBasis& wb, const std::vector<int>& t) {
    auto it = std::lower_bound(wb.tuples.begin(), wb.tuples.end(), t);
    return std::size_t(it - wb.tuples.begin());
}

KoszulSlice assemble_slice(IdealCache& cache, int p, int q) {
    const PointSet& X = cache.points();
    const Field& F = X.field;
    KoszulSlice s;
    s.p = p;
    s.q = q;

    WedgeBasis wsrc = wedge_basis(X.n, p);
    WedgeBasis wdst = wedge_basis(X.n, p - 1);
    long dim_q = cache.dim(q);
    long dim_q1 = cache.dim(q + 1);
    s.source_dim = wsrc.size() * std::size_t(dim_q);
    s.target_dim = wdst.size() * std::size_t(dim_q1);
    if (s.source_dim == 0 || s.target_dim == 0) {
        s.matrix = Matrix(s.target_dim, s.source_dim);
        s.rank = 0;
        s.kernel_dim = s.source_dim;
        return s;
    }

    const GradedBasis& from = cache.basis(q);
    const GradedBasis& to = cache.basis(q + 1);
    auto prods = variable_products(F, X.n, from, to);

    const std::size_t k1 = to.size();
    Matrix m(s.target_dim, s.source_dim);
    for (std::size_t ti = 0; ti < wsrc.size(); ++ti) {
        const std::vector<int>& tuple = wsrc.tuples[ti];
        for (int k = 0; k < p; ++k) {
            int var = tuple[k];
            std::vector<int> rest;
            rest.reserve(p - 1);
            for (int r = 0; r < p; ++r)
                if (r != k) rest.push_back(tuple[r]);
            std::size_t row_block = tuple_index(wdst, rest) * k1;
            bool negative = ((p - (k + 1)) % 2) != 0;  // sign (-1)^{p-k}, k 1-based
            for (std::size_t j = 0; j < from.size(); ++j) {
                std::size_t col = ti * from.size() + j;
                const auto& coords = prods[var][j];
                for (std::size_t r = 0; r < k1; ++r) {
                    if (!coords[r]) continue;
                    std::uint32_t v = negative ? F.neg(coords[r]) : coords[r];
                    m.at(row_block + r, col) = F.add(m.at(row_block + r, col), v);
                }
            }
        }
    }

    s.rank = rank(F, m);
    s.kernel_dim = s.source_dim - s.rank;
    s.matrix = std::move(m);
    return s;
}

}  // namespace

KoszulSlice koszul_differential(IdealCache& cache, int p, int q) {
    if (p < 1) throw ValidationError("koszul differential needs p >= 1");
    if (q < 0) throw ValidationError("koszul differential needs q >= 0");
    return assemble_slice(cache, p, q);
}

KoszulSlice koszul_differential(const PointSet& X, int p, int q) {
    IdealCache cache(X);
    return koszul_differential(cache, p, q);
}

std::size_t mu_rank(IdealCache& cache, int s) {
    if (s < 0) throw ValidationError("mu_rank needs degree >= 0");
    if (cache.dim(s) == 0) return 0;
    return koszul_differential(cache, 1, s).rank;
}

std::size_t mu_rank(const PointSet& X, int s) {
    IdealCache cache(X);
    return mu_rank(cache, s);
}

int BettiTable::max_p() const {
    int m = 0;
    for (const auto& [key, beta] : entries) m = std::max(m, key.first);
    return m;
}

int BettiTable::max_twist() const {
    int m = 0;
    for (const auto& [key, beta] : entries) m = std::max(m, key.second);
    return m;
}

std::map<std::pair<int, int>, SliceDims> koszul_slice_dims(IdealCache& cache, int qmax) {
    const int n = cache.points().n;
    std::map<std::pair<int, int>, SliceDims> dims;
    for (int p = 1; p <= n + 1; ++p) {
        for (int q = 0; q <= qmax; ++q) {
            if (cache.dim(q) == 0) {
                dims[{p, q}] = SliceDims{0, 0, 0};
                continue;
            }
            KoszulSlice s = assemble_slice(cache, p, q);
            dims[{p, q}] = SliceDims{s.source_dim, s.rank, s.kernel_dim};
        }
    }
    return dims;
}

namespace {

BettiTable betti_from_dims(IdealCache& cache,
                           const std::map<std::pair<int, int>, SliceDims>& dims, int qmax) {
    const int n = cache.points().n;
    BettiTable b;
    b.n = n;
    b.d = long(cache.points().size());
    for (int p = 0; p <= n; ++p) {
        for (int q = 0; q <= qmax; ++q) {
            long ker = p == 0 ? cache.dim(q) : long(dims.at({p, q}).kernel_dim);
            long incoming = q == 0 ? 0 : long(dims.at({p + 1, q - 1}).rank);
            b.set(p, p + q, ker - incoming);
        }
    }
    return b;
}

}  // namespace

BettiTable graded_betti(IdealCache& cache) {
    int qmax = cache.hf().stabilization + 1;
    auto dims = koszul_slice_dims(cache, qmax);
    return betti_from_dims(cache, dims, qmax);
}

BettiTable graded_betti(const PointSet& X) {
    IdealCache cache(X);
    return graded_betti(cache);
}

BettiTable graded_betti_window(IdealCache& cache, int twist) {
    const int n = cache.points().n;
    const int qmax = cache.hf().stabilization + 1;
    BettiTable b;
    b.n = n;
    b.d = long(cache.points().size());
    std::map<int, SliceDims> anti;  // p -> dims of d_{p, twist-p}
    for (int p = 1; p <= n + 1; ++p) {
        int q = twist - p;
        // Entries with q > qmax vanish by regularity, so their slices are
        // never needed; skipping them keeps far-out windows cheap.
        if (q < 0 || q > qmax || cache.dim(q) == 0) {
            anti[p] = SliceDims{0, 0, 0};
            continue;
        }
        KoszulSlice s = assemble_slice(cache, p, q);
        anti[p] = SliceDims{s.source_dim, s.rank, s.kernel_dim};
    }
    for (int p = 0; p <= n; ++p) {
        int q = twist - p;
        if (q < 0 || q > qmax) continue;
        long ker = p == 0 ? cache.dim(q) : long(anti.at(p).kernel_dim);
        long incoming = q == 0 ? 0 : long(anti.at(p + 1).rank);
        b.set(p, twist, ker - incoming);
    }
    return b;
}

std::string betti_diagram(const BettiTable& b) {
    int pmax = b.max_p();
    int qmin = b.entries.empty() ? 0 : b.max_twist();
    int qmax = 0;
    for (const auto& [key, beta] : b.entries) {
        qmin = std::min(qmin, key.second - key.first);
        qmax = std::max(qmax, key.second - key.first);
    }
    std::ostringstream os;
    os << "      ";
    for (int p = 0; p <= pmax; ++p) os << " " << p << "     ";
    os << "\n";
    for (int q = qmin; q <= qmax; ++q) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%4d: ", q);
        os << buf;
        for (int p = 0; p <= pmax; ++p) {
            long beta = b.beta(p, p + q);
            if (beta)
                std::snprintf(buf, sizeof buf, "%-6ld ", beta);
            else
                std::snprintf(buf, sizeof buf, ".      ");
            os << buf;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace subsyz
