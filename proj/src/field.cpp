#include "subsyz/field.hpp"

namespace subsyz {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field::Field(std::uint64_t prime) : p_(prime) {
    if (prime < 3)
        throw ValidationError("field modulus must be an odd prime >= 3, got " +
                              std::to_string(prime));
    if (prime >= (std::uint64_t(1) << 31))
        throw ValidationError("field modulus must fit in 31 bits, got " +
                              std::to_string(prime));
    if (!is_prime(prime))
        throw ValidationError("field modulus must be prime, got " + std::to_string(prime));
    magic_ = std::uint64_t((static_cast<unsigned __int128>(1) << 64) / p_);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    std::uint32_t b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw ValidationError("division by zero in GF(p)");
    return pow(a, p_ - 2);
}

}  // namespace subsyz
