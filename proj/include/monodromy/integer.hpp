#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>

namespace monodromy {

// Exact arbitrary-precision integer. All arithmetic in this library is exact;
// there is no floating-point mode.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

// Canonical representative of a mod n, in [0, n).
inline Int pos_mod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;
    // Deterministic for 64-bit inputs with this many rounds; desk-scale
    // moduli never get near the probabilistic regime anyway.
    std::mt19937_64 gen(0x5eedu);
    return boost::multiprecision::miller_rabin_test(n, 25, gen);
}

// Inverse of a mod n via extended Euclid. Throws if gcd(a, n) != 1.
inline Int mod_inverse(const Int& a, const Int& n) {
    if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    Int r0 = n, r1 = pos_mod(a, n);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inverse: value is not a unit mod n");
    return pos_mod(t0, n);
}

inline bool fits_u32(const Int& n) {
    return n >= 0 && n <= Int(0xffffffffu);
}

}  // namespace monodromy
