#include "monodromy/cyclotomic.hpp"

#include <doctest.h>

using monodromy::Int;
using monodromy::IntPolynomial;
using monodromy::PrimePowerSet;

namespace {

std::vector<Int> ints(std::vector<long long> v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("prime power set container") {
    PrimePowerSet s(ints({4, 1, 2, 4}));
    CHECK(s.elements == ints({1, 2, 4}));
    CHECK(s.contains(Int(4)));
    CHECK_FALSE(s.contains(Int(3)));
    CHECK(s.to_string() == "{1, 2, 4}");
    CHECK(s.subset_of(PrimePowerSet(ints({1, 2, 3, 4}))));
    CHECK_FALSE(PrimePowerSet(ints({1, 5})).subset_of(s));
    CHECK(PrimePowerSet(ints({1, 2, 5})).difference(s) == ints({5}));
    CHECK_THROWS_AS(PrimePowerSet(ints({6})), std::invalid_argument);
    CHECK_THROWS_AS(PrimePowerSet(ints({0})), std::invalid_argument);
}

TEST_CASE("exceptional sets for small exponents") {
    CHECK(monodromy::n_set(1).elements == ints({1, 2}));
    CHECK(monodromy::n_set(2).elements == ints({1, 2, 3, 4}));
    CHECK(monodromy::n_set(3).elements == ints({1, 2, 3, 4, 8}));
    CHECK(monodromy::n_set(4).elements == ints({1, 2, 3, 4, 5, 8, 9, 16}));

    CHECK(monodromy::n_prime_set(1).elements == ints({1, 2}));
    CHECK(monodromy::n_prime_set(2).elements == ints({1, 2, 3, 4}));
    CHECK(monodromy::n_prime_set(3).elements == ints({1, 2, 3, 4, 8}));
    CHECK(monodromy::n_prime_set(4).elements == ints({1, 2, 3, 4, 8, 9, 16}));
    CHECK(monodromy::n_set(4).difference(monodromy::n_prime_set(4)) == ints({5}));

    CHECK_THROWS_AS(monodromy::n_set(0), std::invalid_argument);
    CHECK_THROWS_AS(monodromy::n_prime_set(0), std::invalid_argument);
}

TEST_CASE("refined set law across a range of exponents") {
    for (int r = 1; r <= 20; ++r) {
        const PrimePowerSet n = monodromy::n_set(r);
        const PrimePowerSet np = monodromy::n_prime_set(r);
        CHECK(np.subset_of(n));
        // Every dropped element is ell^m with ell >= 5 and r = m(ell-1).
        for (const Int& v : n.difference(np)) {
            Int ell = 2;
            while (v % ell != 0) ++ell;
            CHECK(ell >= 5);
            Int power = v;
            int mm = 0;
            while (power > 1) {
                power /= ell;
                ++mm;
            }
            CHECK(Int(mm) * (ell - 1) == r);
        }
    }
}

TEST_CASE("cyclotomic polynomials by two routes") {
    const IntPolynomial direct = monodromy::cyclotomic_prime_power(Int(5), 2);
    CHECK(direct.degree() == 20);
    CHECK(direct == monodromy::cyclotomic_polynomial(25));

    const IntPolynomial x25 = IntPolynomial::monomial(25) - IntPolynomial::one();
    const IntPolynomial x5 = IntPolynomial::monomial(5) - IntPolynomial::one();
    CHECK(IntPolynomial::divides(direct, x25));
    CHECK_FALSE(IntPolynomial::divides(direct, x5));

    CHECK(monodromy::cyclotomic_prime_power(Int(3), 1) ==
          IntPolynomial({Int(1), Int(1), Int(1)}));
    CHECK(monodromy::cyclotomic_prime_power(Int(2), 3) ==
          IntPolynomial({Int(1), Int(0), Int(0), Int(0), Int(1)}));
    for (long d : {2, 3, 4, 5, 7, 8, 9, 25, 27}) {
        Int p = 2;
        while (d % p != 0) ++p;
        int s = 0;
        long t = d;
        while (t > 1) {
            t /= p.convert_to<long>();
            ++s;
        }
        CHECK(monodromy::cyclotomic_prime_power(p, s) == monodromy::cyclotomic_polynomial(d));
    }

    CHECK(monodromy::cyclotomic_polynomial(1) == IntPolynomial({Int(-1), Int(1)}));
    CHECK(monodromy::cyclotomic_polynomial(2) == IntPolynomial({Int(1), Int(1)}));
    CHECK(monodromy::cyclotomic_polynomial(6) == IntPolynomial({Int(1), Int(-1), Int(1)}));
    CHECK(monodromy::cyclotomic_polynomial(12) ==
          IntPolynomial({Int(1), Int(0), Int(-1), Int(0), Int(1)}));
    CHECK_THROWS_AS(monodromy::cyclotomic_prime_power(Int(6), 1), std::invalid_argument);
}

TEST_CASE("euler phi and moebius") {
    CHECK(monodromy::euler_phi(1) == 1);
    CHECK(monodromy::euler_phi(12) == 4);
    CHECK(monodromy::euler_phi(49) == 42);
    CHECK(monodromy::moebius(1) == 1);
    CHECK(monodromy::moebius(2) == -1);
    CHECK(monodromy::moebius(6) == 1);
    CHECK(monodromy::moebius(12) == 0);
}

TEST_CASE("membership of (zeta-1)^r in n Z[zeta]") {
    CHECK(monodromy::root_minus_one_membership(Int(3), 1, Int(2), Int(3)));
    CHECK_FALSE(monodromy::root_minus_one_membership(Int(3), 1, Int(1), Int(3)));
    CHECK(monodromy::root_minus_one_membership(Int(5), 1, Int(4), Int(5)));
    CHECK_FALSE(monodromy::root_minus_one_membership(Int(5), 1, Int(3), Int(5)));
    CHECK(monodromy::root_minus_one_membership(Int(2), 2, Int(4), Int(4)));
    CHECK_FALSE(monodromy::root_minus_one_membership(Int(2), 2, Int(3), Int(4)));
    // Order 25 against modulus 5: the bound is ell^(s-1)(ell-1) = 20.
    CHECK_FALSE(monodromy::root_minus_one_membership(Int(5), 2, Int(4), Int(5)));
    CHECK_FALSE(monodromy::root_minus_one_membership(Int(5), 2, Int(19), Int(5)));
    CHECK(monodromy::root_minus_one_membership(Int(5), 2, Int(20), Int(5)));
    // A modulus with a second prime factor never divides a power of (zeta-1).
    CHECK_FALSE(monodromy::root_minus_one_membership(Int(3), 1, Int(10), Int(6)));
}

TEST_CASE("membership obeys the valuation law") {
    for (int m = 1; m <= 2; ++m) {
        Int n = 1;
        for (int i = 0; i < m; ++i) n *= 3;
        for (int r = 1; r <= 15; ++r) {
            const bool expect = r >= m * 3 * 2;  // m * ell^(s-1) * (ell-1), s = 2
            CHECK(monodromy::root_minus_one_membership(Int(3), 2, Int(r), n) == expect);
        }
    }
}

TEST_CASE("guaranteed exponent") {
    CHECK(monodromy::groupring_bound(Int(3), 1, 1) == 2);
    CHECK(monodromy::groupring_bound(Int(2), 1, 3) == 3);
    CHECK(monodromy::groupring_bound(Int(5), 2, 1) == 20);
    CHECK(monodromy::groupring_bound(Int(7), 1, 2) == 12);
    CHECK_THROWS_AS(monodromy::groupring_bound(Int(4), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(monodromy::groupring_bound(Int(3), 0, 1), std::invalid_argument);
}

TEST_CASE("sharpness scan finds the first witness in prime-then-power order") {
    const auto w1 = monodromy::sharpness_scan(Int(2), Int(4), 6);
    REQUIRE(w1.has_value());
    CHECK(w1->ell == 2);
    CHECK(w1->s == 1);

    const auto w2 = monodromy::sharpness_scan(Int(4), Int(5), 6);
    REQUIRE(w2.has_value());
    CHECK(w2->ell == 5);
    CHECK(w2->s == 1);

    CHECK_FALSE(monodromy::sharpness_scan(Int(2), Int(5), 6).has_value());
    CHECK_FALSE(monodromy::sharpness_scan(Int(3), Int(7), 4).has_value());

    const auto w3 = monodromy::sharpness_scan(Int(1), Int(2), 6);
    REQUIRE(w3.has_value());
    CHECK(w3->ell == 2);
    CHECK(w3->s == 1);

    CHECK_THROWS_AS(monodromy::sharpness_scan(Int(0), Int(2), 6), std::invalid_argument);
}
