#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subsyz {

/// Prime field GF(p), 3 <= p < 2^31.  Elements are canonical residues in
/// [0, p) stored as uint32_t.  Multiplication uses Barrett reduction with a
/// precomputed 2^64/p reciprocal, so products never touch hardware division.
///
/// Characteristic 2 is rejected: the alternating signs of the Koszul
/// differential collapse there.
class Field {
public:
    explicit Field(std::uint64_t prime);

    std::uint64_t prime() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return std::uint32_t(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : std::uint32_t(a + p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : std::uint32_t(p_ - a); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t r = std::uint64_t(a) * b;
        std::uint64_t q = std::uint64_t((static_cast<unsigned __int128>(magic_) * r) >> 64);
        std::uint64_t t = r - q * p_;
        if (t >= p_) t -= p_;
        return std::uint32_t(t);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;

    /// Canonical residue of an arbitrary signed integer (JSON inputs may be
    /// negative or exceed p).
    std::uint32_t reduce(std::int64_t v) const {
        std::int64_t r = v % std::int64_t(p_);
        if (r < 0) r += std::int64_t(p_);
        return std::uint32_t(r);
    }

    bool operator==(const Field& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
    std::uint64_t magic_;  // floor(2^64 / p)
};

bool is_prime(std::uint64_t n);

/// Raised on any violated precondition or malformed input; the CLI maps it
/// to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace subsyz
