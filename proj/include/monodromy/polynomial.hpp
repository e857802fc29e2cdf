#pragma once

#include "monodromy/integer.hpp"

#include <string>
#include <utility>
#include <vector>

namespace monodromy {

// Univariate polynomial over Z. Coefficients ascending by degree, trailing
// zeros trimmed; the zero polynomial has an empty coefficient vector and
// degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return IntPolynomial({Int(1)}); }
    static IntPolynomial x() { return IntPolynomial({Int(0), Int(1)}); }
    static IntPolynomial monomial(int degree, Int coeff = Int(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of x^i; zero beyond the stored degree.
    Int coeff(int i) const;
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int leading() const;
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Int evaluate(const Int& x) const;

    IntPolynomial operator+(const IntPolynomial& rhs) const;
    IntPolynomial operator-(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial operator*(const Int& scalar) const;
    bool operator==(const IntPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const IntPolynomial& rhs) const { return !(*this == rhs); }

    // Exact division over Z; the divisor must have leading coefficient +-1.
    // Returns {quotient, remainder} with deg rem < deg divisor.
    static std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& num,
                                                          const IntPolynomial& den);
    // True if den divides num exactly; quotient written to *quot when given.
    static bool divides(const IntPolynomial& den, const IntPolynomial& num,
                        IntPolynomial* quot = nullptr);

    IntPolynomial mod(const IntPolynomial& den) const { return divmod(*this, den).second; }

    // (base^e) mod den, exponentiation by squaring. den needs unit leading
    // coefficient as in divmod.
    static IntPolynomial pow_mod(const IntPolynomial& base, const Int& e,
                                 const IntPolynomial& den);

    // Each coefficient reduced into [0, n).
    IntPolynomial reduced_mod(const Int& n) const;
    bool coefficients_divisible_by(const Int& n) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

}  // namespace monodromy
