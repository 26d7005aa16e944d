#include "subsyz/liaison.hpp"

#include <algorithm>
#include <sstream>

namespace subsyz {

DeltaSeq ci_delta(int a, int b) {
    if (a < 1 || b < 1) throw ValidationError("complete intersection degrees must be >= 1");
    DeltaSeq d(a + b - 1, 0);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) ++d[i + j];
    return d;
}

DeltaSeq link_hf(const DeltaSeq& delta_x, int a, int b) {
    DeltaSeq ci = ci_delta(a, b);
    int socle = a + b - 2;
    for (std::size_t t = ci.size(); t < delta_x.size(); ++t)
        if (delta_x[t] != 0)
            throw ValidationError("point set does not lie on a CI of type (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "): its h-vector extends past socle degree " +
                                  std::to_string(socle));
    DeltaSeq residual(ci.size(), 0);
    for (int t = 0; t <= socle; ++t) {
        long dx = std::size_t(socle - t) < delta_x.size() ? delta_x[socle - t] : 0;
        long val = ci[socle - t] - dx;
        if (val < 0)
            throw ValidationError("point set does not fit on a CI of type (" +
                                  std::to_string(a) + "," + std::to_string(b) +
                                  "): h-vector exceeds the CI in degree " +
                                  std::to_string(socle - t));
        residual[t] = val;
    }
    while (!residual.empty() && residual.back() == 0) residual.pop_back();
    return residual;
}

// ---------------------------------------------------------------------------
// Polynomial GCD support.  Univariate polynomials over GF(p) are dense
// little-endian coefficient vectors; bivariate ones are vectors of those,
// indexed by the degree in the second variable.

namespace {

using Uni = std::vector<std::uint32_t>;
using Bi = std::vector<Uni>;

void uni_trim(Uni& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

bool uni_zero(const Uni& f) { return f.empty(); }

Uni uni_mul(const Field& F, const Uni& f, const Uni& g) {
    if (uni_zero(f) || uni_zero(g)) return {};
    Uni h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = F.add(h[i + j], F.mul(f[i], g[j]));
    }
    return h;
}

Uni uni_scale(const Field& F, const Uni& f, std::uint32_t c) {
    Uni h = f;
    for (auto& x : h) x = F.mul(x, c);
    uni_trim(h);
    return h;
}

// f mod g and f div g, g nonzero.
std::pair<Uni, Uni> uni_divrem(const Field& F, Uni f, const Uni& g) {
    uni_trim(f);
    Uni q;
    if (f.size() >= g.size()) q.assign(f.size() - g.size() + 1, 0);
    std::uint32_t lead_inv = F.inv(g.back());
    while (f.size() >= g.size()) {
        std::uint32_t c = F.mul(f.back(), lead_inv);
        std::size_t shift = f.size() - g.size();
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = F.sub(f[shift + i], F.mul(c, g[i]));
        uni_trim(f);
        if (f.size() < g.size()) break;
    }
    uni_trim(q);
    return {q, f};
}

Uni uni_gcd(const Field& F, Uni f, Uni g) {
    uni_trim(f);
    uni_trim(g);
    while (!uni_zero(g)) {
        Uni r = uni_divrem(F, f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (!uni_zero(f)) f = uni_scale(F, f, F.inv(f.back()));  // monic
    return f;
}

Uni uni_divexact(const Field& F, const Uni& f, const Uni& g) {
    auto [q, r] = uni_divrem(F, f, g);
    if (!uni_zero(r)) throw std::logic_error("inexact univariate division in gcd routine");
    return q;
}

void bi_trim(Bi& f) {
    while (!f.empty()) {
        uni_trim(f.back());
        if (!f.back().empty()) break;
        f.pop_back();
    }
}

bool bi_zero(const Bi& f) { return f.empty(); }

Uni bi_content(const Field& F, const Bi& f) {
    Uni c;
    for (const Uni& coeff : f) c = uni_gcd(F, c, coeff);
    return c;
}

Bi bi_primitive(const Field& F, const Bi& f, const Uni& content) {
    Bi out;
    out.reserve(f.size());
    for (const Uni& coeff : f)
        out.push_back(uni_zero(coeff) ? Uni{} : uni_divexact(F, coeff, content));
    return out;
}

// Pseudo-remainder of f by g in (GF(p)[y])[z]: scale f by lc(g)^k so the
// division is fraction-free, keep only the remainder.
Bi bi_pseudo_rem(const Field& F, Bi f, const Bi& g) {
    bi_trim(f);
    const Uni& lead = g.back();
    while (!bi_zero(f) && f.size() >= g.size()) {
        std::size_t shift = f.size() - g.size();
        Uni top = f.back();
        // f <- lead * f - top * z^shift * g
        Bi scaled(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) scaled[i] = uni_mul(F, f[i], lead);
        for (std::size_t i = 0; i < g.size(); ++i) {
            Uni sub = uni_mul(F, top, g[i]);
            Uni& dst = scaled[shift + i];
            if (dst.size() < sub.size()) dst.resize(sub.size(), 0);
            for (std::size_t k = 0; k < sub.size(); ++k) dst[k] = F.sub(dst[k], sub[k]);
        }
        f = std::move(scaled);
        bi_trim(f);
    }
    return f;
}

Bi bi_gcd(const Field& F, Bi f, Bi g) {
    bi_trim(f);
    bi_trim(g);
    if (bi_zero(f)) return g;
    if (bi_zero(g)) return f;
    Uni cf = bi_content(F, f);
    Uni cg = bi_content(F, g);
    Uni c = uni_gcd(F, cf, cg);
    f = bi_primitive(F, f, cf);
    g = bi_primitive(F, g, cg);
    while (!bi_zero(g)) {
        Bi r = bi_pseudo_rem(F, f, g);
        bi_trim(r);
        if (!bi_zero(r)) r = bi_primitive(F, r, bi_content(F, r));
        f = std::move(g);
        g = std::move(r);
    }
    // restore the content gcd
    Bi out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = uni_mul(F, f[i], c);
    return out;
}

// x0-adic valuation: the smallest x0 exponent over the support.
int x0_valuation(const PolyVec& f) {
    MonomialBasis basis(f.n, f.degree);
    int val = f.degree + 1;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (f.coeffs[i]) val = std::min(val, basis.exponents(i)[0]);
    return val;
}

// Dehomogenize at x0 = 1.  Any x0 power divides out implicitly, so the
// result has true total degree f.degree minus the x0-adic valuation.
Bi dehomogenize(const PolyVec& f) {
    MonomialBasis basis(f.n, f.degree);
    Bi out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!f.coeffs[i]) continue;
        const auto& e = basis.exponents(i);
        std::size_t zdeg = std::size_t(e[2]);
        std::size_t ydeg = std::size_t(e[1]);
        if (out.size() <= zdeg) out.resize(zdeg + 1);
        if (out[zdeg].size() <= ydeg) out[zdeg].resize(ydeg + 1, 0);
        out[zdeg][ydeg] = f.coeffs[i];
    }
    bi_trim(out);
    return out;
}

int bi_total_degree(const Bi& f) {
    int deg = 0;
    for (std::size_t z = 0; z < f.size(); ++z)
        for (std::size_t y = 0; y < f[z].size(); ++y)
            if (f[z][y]) deg = std::max(deg, int(z + y));
    return deg;
}

PolyVec rehomogenize(const Field&, const Bi& f, int n, int extra_x0) {
    int k = bi_total_degree(f);
    PolyVec out = zero_poly(n, k + extra_x0);
    MonomialBasis basis(n, k + extra_x0);
    for (std::size_t z = 0; z < f.size(); ++z)
        for (std::size_t y = 0; y < f[z].size(); ++y) {
            if (!f[z][y]) continue;
            std::vector<int> exps = {k - int(y + z) + extra_x0, int(y), int(z)};
            out.coeffs[basis.index_of(exps)] = f[z][y];
        }
    return out;
}

PolyVec normalize_leading(const Field& F, PolyVec f) {
    for (std::uint32_t c : f.coeffs)
        if (c) return scale(F, f, F.inv(c));
    return f;
}

}  // namespace

PolyVec poly_gcd(const Field& F, const PolyVec& f, const PolyVec& g) {
    if (f.n != 2 || g.n != 2)
        throw ValidationError("homogeneous gcd implemented for three variables only");
    if (f.is_zero()) return normalize_leading(F, g);
    if (g.is_zero()) return normalize_leading(F, f);
    int vf = x0_valuation(f);
    int vg = x0_valuation(g);
    Bi a = dehomogenize(f);
    Bi b = dehomogenize(g);
    Bi d = bi_gcd(F, std::move(a), std::move(b));
    return normalize_leading(F, rehomogenize(F, d, 2, std::min(vf, vg)));
}

bool divides(const Field& F, const PolyVec& g, const PolyVec& f) {
    if (f.is_zero()) return true;
    if (g.is_zero()) return false;
    if (g.degree > f.degree || g.n != f.n) return false;
    // f is divisible by g iff f lies in the image of multiplication by g.
    MonomialBasis src(f.n, f.degree - g.degree);
    MonomialBasis dst(f.n, f.degree);
    Matrix m(dst.size(), src.size() + 1);
    for (std::size_t j = 0; j < src.size(); ++j) {
        PolyVec prod = multiply(F, monomial_poly(f.n, src.exponents(j)), g);
        for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, j) = prod.coeffs[r];
    }
    for (std::size_t r = 0; r < dst.size(); ++r) m.at(r, src.size()) = f.coeffs[r];
    Matrix m0(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r)
        for (std::size_t j = 0; j < src.size(); ++j) m0.at(r, j) = m.at(r, j);
    return rank(F, m0) == rank(F, m);
}

GradedBasis colon_basis(const PolyVec& H, const PolyVec& K, const PointSet& X, int t) {
    const Field& F = X.field;
    if (X.n != 2) throw ValidationError("colon ideal implemented for P^2 only");
    if (t < 0) throw ValidationError("degree must be >= 0");
    if (H.n != 2 || K.n != 2) throw ValidationError("CI forms must live in three variables");
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (evaluate(F, H, X.points[i]) != 0 || evaluate(F, K, X.points[i]) != 0)
            throw ValidationError("CI forms must vanish on every point of X (fails at index " +
                                  std::to_string(i) + ")");
    }
    if (poly_gcd(F, H, K).degree != 0)
        throw ValidationError("CI forms must be a regular sequence (their gcd is nonconstant)");

    IdealCache cache(X);
    const int smax = cache.hf().stabilization + 1;
    MonomialBasis unknowns(2, t);

    std::vector<std::vector<std::uint32_t>> constraint_rows;
    for (int s = 0; s <= smax; ++s) {
        if (cache.dim(s) == 0) continue;
        const GradedBasis& xs = cache.basis(s);
        int td = t + s;
        MonomialBasis target(2, td);

        // Subspace I(C)_{t+s} = H*S_{t+s-degH} + K*S_{t+s-degK}.
        std::vector<std::vector<std::uint32_t>> ci_gens;
        for (const PolyVec* f : {&H, &K}) {
            int rem = td - f->degree;
            if (rem < 0) continue;
            MonomialBasis mons(2, rem);
            for (std::size_t j = 0; j < mons.size(); ++j)
                ci_gens.push_back(multiply(F, monomial_poly(2, mons.exponents(j)), *f).coeffs);
        }
        Matrix ci(target.size(), ci_gens.size());
        for (std::size_t c = 0; c < ci_gens.size(); ++c)
            for (std::size_t r = 0; r < target.size(); ++r) ci.at(r, c) = ci_gens[c][r];
        // Rows annihilating I(C)_{t+s}: v lies in the subspace iff Av = 0.
        KernelBasis ann = kernel_basis(F, transpose(ci));

        for (std::size_t j = 0; j < xs.size(); ++j) {
            PolyVec fj = xs.poly(F, j);
            // columns of mult-by-fj from S_t to S_{t+s}
            Matrix mult(target.size(), unknowns.size());
            for (std::size_t c = 0; c < unknowns.size(); ++c) {
                PolyVec prod = multiply(F, monomial_poly(2, unknowns.exponents(c)), fj);
                for (std::size_t r = 0; r < target.size(); ++r) mult.at(r, c) = prod.coeffs[r];
            }
            for (const auto& functional : ann.vectors) {
                std::vector<std::uint32_t> row(unknowns.size(), 0);
                bool nonzero = false;
                for (std::size_t c = 0; c < unknowns.size(); ++c) {
                    std::uint64_t acc = 0;
                    for (std::size_t r = 0; r < target.size(); ++r)
                        acc += F.mul(functional[r], mult.at(r, c));
                    row[c] = std::uint32_t(acc % F.prime());
                    nonzero = nonzero || row[c];
                }
                if (nonzero) constraint_rows.push_back(std::move(row));
            }
        }
    }

    Matrix sys(constraint_rows.size(), unknowns.size());
    for (std::size_t r = 0; r < constraint_rows.size(); ++r)
        for (std::size_t c = 0; c < unknowns.size(); ++c) sys.at(r, c) = constraint_rows[r][c];
    KernelBasis kb = kernel_basis(F, sys);

    GradedBasis gb;
    gb.n = 2;
    gb.degree = t;
    gb.vecs = std::move(kb.vectors);
    gb.free_cols = std::move(kb.free_cols);
    return gb;
}

std::optional<std::pair<PolyVec, PolyVec>> find_ci_in_ideal(IdealCache& cache, int a, int b) {
    const Field& F = cache.points().field;
    if (cache.dim(a) == 0 || cache.dim(b) == 0) return std::nullopt;
    GradedBasis ba = cache.basis(a);
    GradedBasis bb = cache.basis(b);
    auto candidates = [&](const GradedBasis& basis) {
        std::vector<PolyVec> out;
        for (std::size_t i = 0; i < basis.size(); ++i) out.push_back(basis.poly(F, i));
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                out.push_back(add(F, basis.poly(F, i), basis.poly(F, j)));
                out.push_back(add(F, basis.poly(F, i), scale(F, basis.poly(F, j), 2)));
            }
        return out;
    };
    std::vector<PolyVec> ha = candidates(ba);
    std::vector<PolyVec> kb = candidates(bb);
    for (const PolyVec& H : ha)
        for (const PolyVec& K : kb)
            if (poly_gcd(F, H, K).degree == 0) return std::make_pair(H, K);
    return std::nullopt;
}

DegreeMatrix degree_matrix(const BettiTable& b) {
    if (b.n != 2) throw ValidationError("degree matrices are defined for P^2 tables");
    std::vector<long> gens, syz;
    for (const auto& [key, beta] : b.entries) {
        if (beta < 0) throw ValidationError("malformed Betti table: negative entry");
        auto& dst = key.first == 0 ? gens : syz;
        if (key.first > 1)
            throw ValidationError("malformed P^2 Betti table: homological degree " +
                                  std::to_string(key.first));
        for (long i = 0; i < beta; ++i) dst.push_back(key.second);
    }
    if (gens.size() != syz.size() + 1)
        throw ValidationError("malformed P^2 Betti table: " + std::to_string(gens.size()) +
                              " generators vs " + std::to_string(syz.size()) + " syzygies");
    std::sort(gens.rbegin(), gens.rend());
    std::sort(syz.rbegin(), syz.rend());
    DegreeMatrix dm;
    dm.row_twists = syz;
    dm.col_twists = gens;
    dm.entries.assign(syz.size(), std::vector<long>(gens.size(), 0));
    for (std::size_t i = 0; i < syz.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
            dm.entries[i][j] = std::max<long>(0, syz[i] - gens[j]);
    return dm;
}

BaseLocusGcd base_locus_gcd(const PointSet& X, int l) {
    if (X.n != 2) throw ValidationError("base-locus gcd implemented for P^2 only");
    GradedBasis basis = ideal_basis(X, l);
    if (basis.size() == 0)
        throw ValidationError("I(X) is zero in degree " + std::to_string(l) +
                              "; the base-locus test needs dim >= 1");
    const Field& F = X.field;
    PolyVec g = basis.poly(F, 0);
    for (std::size_t i = 1; i < basis.size() && g.degree > 0; ++i)
        g = poly_gcd(F, g, basis.poly(F, i));
    BaseLocusGcd out;
    out.gcd_degree = g.degree;
    if (g.degree > 0) out.witness = normalize_leading(F, g);
    return out;
}

std::string degree_matrix_text(const DegreeMatrix& dm) {
    std::ostringstream os;
    os << "syzygy twists:";
    for (long m : dm.row_twists) os << " " << m;
    os << "\ngenerator twists:";
    for (long d : dm.col_twists) os << " " << d;
    os << "\n";
    for (const auto& row : dm.entries) {
        for (long u : row) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "%4ld", u);
            os << buf;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace subsyz
