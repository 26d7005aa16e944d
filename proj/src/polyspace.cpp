#include "subsyz/polyspace.hpp"

#include <sstream>

namespace subsyz {

std::uint64_t binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (long i = 1; i <= k; ++i) {
        r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
    }
    return r;
}

namespace {

void gen_monomials(int nvars_left, int deg_left, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (nvars_left == 1) {
        cur.push_back(deg_left);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = deg_left; e >= 0; --e) {
        cur.push_back(e);
        gen_monomials(nvars_left - 1, deg_left - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

MonomialBasis::MonomialBasis(int n, int t) : n_(n), t_(t) {
    if (n < 1) throw ValidationError("projective dimension must be >= 1");
    if (t < 0) throw ValidationError("degree must be >= 0");
    std::vector<int> cur;
    cur.reserve(n + 1);
    gen_monomials(n + 1, t, cur, monos_);
}

std::size_t MonomialBasis::index_of(const std::vector<int>& exps) const {
    // Tuples are ordered by descending first exponent, then recursively.
    // Rank = number of tuples preceding: for each variable, the count of
    // tuples whose exponent there is larger.
    std::size_t idx = 0;
    int rem = t_;
    int vars = n_ + 1;
    for (int i = 0; i < vars - 1; ++i) {
        for (int b = rem; b > exps[i]; --b)
            idx += binomial((vars - 2 - i) + (rem - b), vars - 2 - i);
        rem -= exps[i];
    }
    return idx;
}

PolyVec zero_poly(int n, int t) {
    PolyVec f;
    f.n = n;
    f.degree = t;
    f.coeffs.assign(std::size_t(binomial(n + t, n)), 0);
    return f;
}

PolyVec monomial_poly(int n, const std::vector<int>& exps) {
    int t = 0;
    for (int e : exps) t += e;
    PolyVec f = zero_poly(n, t);
    f.coeffs[MonomialBasis(n, t).index_of(exps)] = 1;
    return f;
}

PolyVec variable_poly(int n, int i) {
    std::vector<int> exps(n + 1, 0);
    exps[i] = 1;
    return monomial_poly(n, exps);
}

PolyVec add(const Field& F, const PolyVec& f, const PolyVec& g) {
    if (f.n != g.n || f.degree != g.degree)
        throw ValidationError("polynomial addition needs matching ambient space and degree");
    PolyVec h = f;
    for (std::size_t i = 0; i < h.coeffs.size(); ++i) h.coeffs[i] = F.add(h.coeffs[i], g.coeffs[i]);
    return h;
}

PolyVec scale(const Field& F, const PolyVec& f, std::uint32_t c) {
    PolyVec h = f;
    for (auto& x : h.coeffs) x = F.mul(x, c);
    return h;
}

PolyVec mult_by_linear(const Field& F, const PolyVec& f, const PolyVec& lin) {
    if (lin.degree != 1 || f.n != lin.n)
        throw ValidationError("mult_by_linear takes a linear form over the same variables");
    MonomialBasis src(f.n, f.degree);
    MonomialBasis dst(f.n, f.degree + 1);
    PolyVec out = zero_poly(f.n, f.degree + 1);
    for (std::size_t j = 0; j < src.size(); ++j) {
        std::uint32_t c = f.coeffs[j];
        if (!c) continue;
        std::vector<int> exps = src.exponents(j);
        for (int i = 0; i <= f.n; ++i) {
            std::uint32_t li = lin.coeffs[i];
            if (!li) continue;
            ++exps[i];
            std::size_t k = dst.index_of(exps);
            out.coeffs[k] = F.add(out.coeffs[k], F.mul(c, li));
            --exps[i];
        }
    }
    return out;
}

PolyVec multiply(const Field& F, const PolyVec& f, const PolyVec& g) {
    if (f.n != g.n) throw ValidationError("polynomial product needs matching variables");
    MonomialBasis bf(f.n, f.degree), bg(g.n, g.degree);
    MonomialBasis dst(f.n, f.degree + g.degree);
    PolyVec out = zero_poly(f.n, f.degree + g.degree);
    std::vector<int> exps(f.n + 1);
    for (std::size_t i = 0; i < bf.size(); ++i) {
        std::uint32_t ci = f.coeffs[i];
        if (!ci) continue;
        for (std::size_t j = 0; j < bg.size(); ++j) {
            std::uint32_t cj = g.coeffs[j];
            if (!cj) continue;
            for (int v = 0; v <= f.n; ++v) exps[v] = bf.exponents(i)[v] + bg.exponents(j)[v];
            std::size_t k = dst.index_of(exps);
            out.coeffs[k] = F.add(out.coeffs[k], F.mul(ci, cj));
        }
    }
    return out;
}

std::uint32_t evaluate(const Field& F, const PolyVec& f,
                       const std::vector<std::uint32_t>& point) {
    MonomialBasis basis(f.n, f.degree);
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint32_t c = f.coeffs[i];
        if (!c) continue;
        std::uint32_t term = c;
        const auto& exps = basis.exponents(i);
        for (int v = 0; v <= f.n; ++v)
            if (exps[v]) term = F.mul(term, F.pow(point[v], exps[v]));
        acc = F.add(acc, term);
    }
    return acc;
}

std::string poly_to_string(const PolyVec& f) {
    MonomialBasis basis(f.n, f.degree);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint32_t c = f.coeffs[i];
        if (!c) continue;
        if (!first) os << " + ";
        first = false;
        const auto& exps = basis.exponents(i);
        bool has_var = false;
        for (int v = 0; v <= f.n; ++v) has_var = has_var || exps[v] > 0;
        if (c != 1 || !has_var) {
            os << c;
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v <= f.n; ++v) {
            if (!exps[v]) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << v;
            if (exps[v] > 1) os << "^" << exps[v];
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace subsyz
