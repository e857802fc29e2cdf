#include "monodromy/polynomial.hpp"

#include <doctest.h>

using monodromy::Int;
using monodromy::IntPolynomial;

TEST_CASE("integer utilities") {
    CHECK(monodromy::pos_mod(Int(-7), Int(5)) == 3);
    CHECK(monodromy::pos_mod(Int(12), Int(5)) == 2);
    CHECK(monodromy::pos_mod(Int(0), Int(5)) == 0);

    CHECK_FALSE(monodromy::is_prime(Int(0)));
    CHECK_FALSE(monodromy::is_prime(Int(1)));
    CHECK(monodromy::is_prime(Int(2)));
    CHECK(monodromy::is_prime(Int(97)));
    CHECK_FALSE(monodromy::is_prime(Int(1681)));  // 41^2, past the trial division table
    CHECK(monodromy::is_prime(Int(4294967291ll)));
    CHECK_FALSE(monodromy::is_prime(Int("4294967291") * Int("4294967291")));

    CHECK(monodromy::mod_inverse(Int(3), Int(7)) == 5);
    CHECK(monodromy::mod_inverse(Int(-1), Int(7)) == 6);
    CHECK_THROWS_AS(monodromy::mod_inverse(Int(2), Int(4)), std::invalid_argument);
}

TEST_CASE("polynomial construction trims trailing zeros") {
    const IntPolynomial p({Int(1), Int(2), Int(0), Int(0)});
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(5) == 0);
    CHECK(IntPolynomial::zero().degree() == -1);
    CHECK(IntPolynomial::zero().is_zero());
    CHECK(IntPolynomial::one().degree() == 0);
    CHECK(IntPolynomial::x().degree() == 1);
    CHECK(IntPolynomial::monomial(3, Int(-2)).coeff(3) == -2);
}

TEST_CASE("polynomial ring operations") {
    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial one = IntPolynomial::one();
    const IntPolynomial diff = (x + one) * (x - one);
    CHECK(diff == IntPolynomial({Int(-1), Int(0), Int(1)}));
    CHECK((diff - diff).is_zero());
    CHECK((diff * Int(3)).coeff(2) == 3);
    CHECK(diff.evaluate(Int(5)) == 24);
    CHECK(diff.evaluate(Int(-1)) == 0);
    CHECK(diff.leading() == 1);
    CHECK(diff.is_monic());
}

TEST_CASE("divmod against multiplication") {
    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial num = IntPolynomial({Int(-1), Int(0), Int(0), Int(1)});  // x^3 - 1
    const auto [q, rem] = IntPolynomial::divmod(num, x - IntPolynomial::one());
    CHECK(q == IntPolynomial({Int(1), Int(1), Int(1)}));
    CHECK(rem.is_zero());
    CHECK(q * (x - IntPolynomial::one()) + rem == num);

    const IntPolynomial den = IntPolynomial({Int(1), Int(1)});  // x + 1
    const auto [q2, r2] = IntPolynomial::divmod(num, den);
    CHECK(q2 * den + r2 == num);
    CHECK(r2.degree() < den.degree());

    IntPolynomial quot;
    CHECK(IntPolynomial::divides(x - IntPolynomial::one(), num, &quot));
    CHECK(quot == q);
    CHECK_FALSE(IntPolynomial::divides(den, num));

    // Divisor must have unit leading coefficient to keep the arithmetic in Z.
    CHECK_THROWS_AS(IntPolynomial::divmod(num, IntPolynomial({Int(1), Int(2)})),
                    std::invalid_argument);
    CHECK_THROWS_AS(IntPolynomial::divmod(num, IntPolynomial::zero()), std::invalid_argument);
}

TEST_CASE("pow_mod agrees with repeated multiplication") {
    const IntPolynomial x = IntPolynomial::x();
    const IntPolynomial den({Int(-1), Int(0), Int(1)});  // x^2 - 1
    CHECK(IntPolynomial::pow_mod(x, Int(5), den) == x);
    CHECK(IntPolynomial::pow_mod(x, Int(6), den) == IntPolynomial::one());

    const IntPolynomial base({Int(1), Int(1)});
    IntPolynomial slow = IntPolynomial::one();
    for (int i = 0; i < 9; ++i) slow = (slow * base).mod(den);
    CHECK(IntPolynomial::pow_mod(base, Int(9), den) == slow);
    CHECK(IntPolynomial::pow_mod(base, Int(0), den) == IntPolynomial::one());
}

TEST_CASE("coefficient reductions") {
    const IntPolynomial p({Int(-5), Int(7), Int(12)});
    CHECK(p.reduced_mod(Int(6)) == IntPolynomial({Int(1), Int(1)}));
    CHECK(p.coefficients_divisible_by(Int(1)));
    CHECK_FALSE(p.coefficients_divisible_by(Int(2)));
    CHECK(IntPolynomial({Int(4), Int(-8)}).coefficients_divisible_by(Int(4)));
    CHECK(IntPolynomial::zero().coefficients_divisible_by(Int(100)));
}

TEST_CASE("polynomial printing") {
    CHECK(IntPolynomial::zero().to_string() == "0");
    const IntPolynomial p({Int(-1), Int(0), Int(1)});
    const std::string s = p.to_string();
    CHECK(s.find("x^2") != std::string::npos);
}
