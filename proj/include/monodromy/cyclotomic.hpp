#pragma once

#include "monodromy/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monodromy {

// Sorted set of prime powers (1 included as the empty power). Used for the
// exceptional moduli sets attached to an exponent r.
struct PrimePowerSet {
    std::vector<Int> elements;

    explicit PrimePowerSet(std::vector<Int> elems);
    bool contains(const Int& v) const;
    bool subset_of(const PrimePowerSet& other) const;
    // Elements of *this not in other, ascending.
    std::vector<Int> difference(const PrimePowerSet& other) const;
    std::string to_string() const;  // "{1, 2, 4}"
};

// The exceptional set N(r) = {ell^m : 0 <= m(ell-1) <= r}: moduli n for which
// a root of unity lambda != 1 can satisfy (lambda-1)^r in n*Zbar, defeating
// the divisibility criterion at exponent r.
PrimePowerSet n_set(int r);

// The refined set N'(r) = {ell^m : m(ell-1) < r} u {ell^m : ell in {2,3} and
// r = m(ell-1)}; the borderline r = m(ell-1) survives for ell >= 5 once the
// wedge degree sits strictly between the extremes.
PrimePowerSet n_prime_set(int r);

// The ell^s-th cyclotomic polynomial, via Phi(x) = sum_{i<ell} x^(i*ell^(s-1)).
IntPolynomial cyclotomic_prime_power(const Int& ell, int s);

// General d-th cyclotomic polynomial via the Moebius product
// Phi_d(x) = prod_{e|d} (x^(d/e) - 1)^mu(e).
IntPolynomial cyclotomic_polynomial(long d);

// Euler phi and Moebius for small conductors.
long euler_phi(long d);
int moebius(long d);

// Whether (zeta - 1)^r lies in n*Z[zeta] for zeta a primitive ell^s-th root
// of unity: reduce (x-1)^r mod Phi_{ell^s} and test coefficient divisibility.
// Z[zeta] is the maximal order, so for rational integers n this decides
// membership in n*(algebraic integers) as well.
bool root_minus_one_membership(const Int& ell, int s, const Int& r, const Int& n);

// The guaranteed exponent m*ell^(s-1)*(ell-1): membership holds at this r for
// n = ell^m. Asserts the membership oracle agrees before returning.
Int groupring_bound(const Int& ell, int s, int m);

struct ScanWitness {
    Int ell;
    int s = 0;
};

// Search prime-power orders ell^s (primes ascending, then s ascending, with
// phi(ell^s) <= degree_cap and s <= s_max) for a root of unity lambda != 1
// with (lambda-1)^r in n*Z[lambda]. Returns the first witness found.
std::optional<ScanWitness> sharpness_scan(const Int& r, const Int& n, int s_max,
                                          int degree_cap = 100);

}  // namespace monodromy
