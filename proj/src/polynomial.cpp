#include "monodromy/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace monodromy {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int degree, Int coeff) {
    if (degree < 0) throw std::invalid_argument("monomial: negative degree");
    if (coeff == 0) return zero();
    std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Int IntPolynomial::leading() const {
    if (coeffs_.empty()) return Int(0);
    return coeffs_.back();
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c *= scalar;
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& num,
                                                              const IntPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
    const Int lead = den.leading();
    if (lead != 1 && lead != -1)
        throw std::invalid_argument("divmod: divisor leading coefficient must be a unit");
    std::vector<Int> rem = num.coeffs_;
    const int dn = den.degree();
    const int qdeg = num.degree() - dn;
    if (qdeg < 0) return {zero(), num};
    std::vector<Int> quot(static_cast<std::size_t>(qdeg) + 1, Int(0));
    for (int i = qdeg; i >= 0; --i) {
        Int q = rem[static_cast<std::size_t>(i + dn)] * lead;  // lead is +-1
        if (q == 0) continue;
        quot[static_cast<std::size_t>(i)] = q;
        for (int j = 0; j <= dn; ++j) {
            rem[static_cast<std::size_t>(i + j)] -= q * den.coeffs_[static_cast<std::size_t>(j)];
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

bool IntPolynomial::divides(const IntPolynomial& den, const IntPolynomial& num,
                            IntPolynomial* quot) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) return false;
    if (quot) *quot = std::move(q);
    return true;
}

IntPolynomial IntPolynomial::pow_mod(const IntPolynomial& base, const Int& e,
                                     const IntPolynomial& den) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    IntPolynomial acc = one().mod(den);
    IntPolynomial b = base.mod(den);
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = (acc * b).mod(den);
        b = (b * b).mod(den);
        k >>= 1;
    }
    return acc;
}

IntPolynomial IntPolynomial::reduced_mod(const Int& n) const {
    std::vector<Int> out = coeffs_;
    for (auto& c : out) c = pos_mod(c, n);
    return IntPolynomial(std::move(out));
}

bool IntPolynomial::coefficients_divisible_by(const Int& n) const {
    for (const auto& c : coeffs_) {
        if (c % n != 0) return false;
    }
    return true;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}  // namespace monodromy
