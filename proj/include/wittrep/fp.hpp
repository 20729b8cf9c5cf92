#pragma once

#include <cstdint>
#include <stdexcept>

namespace wittrep {

// Residues are kept canonical in {0,...,p-1}. p < 2^31 so a product of two
// residues fits in uint64_t without overflow.
using FpScalar = std::uint64_t;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline void require_valid_prime(std::uint64_t p) {
    if (p >= (1ull << 31))
        throw std::invalid_argument("modulus too large (p must be < 2^31)");
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p <= 3)
        throw std::invalid_argument("p > 3 required, got " + std::to_string(p));
}

inline FpScalar fp_add(FpScalar a, FpScalar b, std::uint64_t p) { return (a + b) % p; }
inline FpScalar fp_sub(FpScalar a, FpScalar b, std::uint64_t p) { return (a + p - b) % p; }
inline FpScalar fp_mul(FpScalar a, FpScalar b, std::uint64_t p) { return (a * b) % p; }
inline FpScalar fp_neg(FpScalar a, std::uint64_t p) { return a == 0 ? 0 : p - a; }

// Canonical residue of a possibly negative integer.
inline FpScalar fp_from_int(long long v, std::uint64_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<FpScalar>(r);
}

inline FpScalar fp_pow(FpScalar base, std::uint64_t exp, std::uint64_t p) {
    FpScalar result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = fp_mul(result, base, p);
        base = fp_mul(base, base, p);
        exp >>= 1;
    }
    return result;
}

inline FpScalar fp_inv(FpScalar a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return fp_pow(a, p - 2, p);
}

} // namespace wittrep
