#include "monodromy/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace monodromy {

namespace {

bool is_prime_power_or_one(const Int& v) {
    if (v < 1) return false;
    if (v == 1) return true;
    Int x = v;
    Int p = 0;
    for (Int c = 2; c * c <= x; ++c) {
        if (x % c == 0) { p = c; break; }
    }
    if (p == 0) return true;  // v itself prime
    while (x % p == 0) x /= p;
    return x == 1;
}

std::vector<std::pair<long, int>> factorize(long d) {
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        int e = 0;
        while (d % p == 0) { d /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (d > 1) out.emplace_back(d, 1);
    return out;
}

std::vector<long> divisors(long d) {
    std::vector<long> out{1};
    for (auto [p, e] : factorize(d)) {
        const std::size_t base = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PrimePowerSet::PrimePowerSet(std::vector<Int> elems) : elements(std::move(elems)) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (const auto& v : elements) {
        if (!is_prime_power_or_one(v))
            throw std::invalid_argument("PrimePowerSet: element is not a prime power: " + v.str());
    }
}

bool PrimePowerSet::contains(const Int& v) const {
    return std::binary_search(elements.begin(), elements.end(), v);
}

bool PrimePowerSet::subset_of(const PrimePowerSet& other) const {
    for (const auto& v : elements)
        if (!other.contains(v)) return false;
    return true;
}

std::vector<Int> PrimePowerSet::difference(const PrimePowerSet& other) const {
    std::vector<Int> out;
    for (const auto& v : elements)
        if (!other.contains(v)) out.push_back(v);
    return out;
}

std::string PrimePowerSet::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i) os << ", ";
        os << elements[i].str();
    }
    os << "}";
    return os.str();
}

PrimePowerSet n_set(int r) {
    if (r < 1) throw std::invalid_argument("n_set: r must be >= 1");
    std::vector<Int> out{Int(1)};
    for (Int ell = 2; (ell - 1) <= r; ++ell) {
        if (!is_prime(ell)) continue;
        Int power = ell;
        for (int m = 1; Int(m) * (ell - 1) <= r; ++m) {
            out.push_back(power);
            power *= ell;
        }
    }
    return PrimePowerSet(std::move(out));
}

PrimePowerSet n_prime_set(int r) {
    if (r < 1) throw std::invalid_argument("n_prime_set: r must be >= 1");
    std::vector<Int> out{Int(1)};
    for (Int ell = 2; (ell - 1) <= r; ++ell) {
        if (!is_prime(ell)) continue;
        Int power = ell;
        for (int m = 1; Int(m) * (ell - 1) <= r; ++m) {
            const Int w = Int(m) * (ell - 1);
            if (w < r || ((ell == 2 || ell == 3) && w == r)) out.push_back(power);
            power *= ell;
        }
    }
    return PrimePowerSet(std::move(out));
}

IntPolynomial cyclotomic_prime_power(const Int& ell, int s) {
    if (!is_prime(ell)) throw std::invalid_argument("cyclotomic_prime_power: ell must be prime");
    if (s < 1) throw std::invalid_argument("cyclotomic_prime_power: s must be >= 1");
    Int stride = 1;
    for (int i = 1; i < s; ++i) stride *= ell;
    const Int degree = stride * (ell - 1);
    if (degree > 1000000) throw std::invalid_argument("cyclotomic_prime_power: degree too large");
    std::vector<Int> coeffs(degree.convert_to<std::size_t>() + 1, Int(0));
    const std::size_t step = stride.convert_to<std::size_t>();
    for (std::size_t i = 0; i < coeffs.size(); i += step) coeffs[i] = 1;
    return IntPolynomial(std::move(coeffs));
}

long euler_phi(long d) {
    if (d < 1) throw std::invalid_argument("euler_phi: d must be >= 1");
    long out = 1;
    for (auto [p, e] : factorize(d)) {
        long pk = 1;
        for (int i = 1; i < e; ++i) pk *= p;
        out *= pk * (p - 1);
    }
    return out;
}

int moebius(long d) {
    if (d < 1) throw std::invalid_argument("moebius: d must be >= 1");
    int out = 1;
    for (auto [p, e] : factorize(d)) {
        (void)p;
        if (e > 1) return 0;
        out = -out;
    }
    return out;
}

IntPolynomial cyclotomic_polynomial(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be >= 1");
    IntPolynomial num = IntPolynomial::one();
    IntPolynomial den = IntPolynomial::one();
    for (long e : divisors(d)) {
        const int mu = moebius(e);
        if (mu == 0) continue;
        IntPolynomial t = IntPolynomial::monomial(static_cast<int>(d / e)) - IntPolynomial::one();
        if (mu == 1) num = num * t;
        else den = den * t;
    }
    IntPolynomial quot;
    if (!IntPolynomial::divides(den, num, &quot))
        throw std::logic_error("cyclotomic_polynomial: Moebius product not divisible");
    return quot;
}

bool root_minus_one_membership(const Int& ell, int s, const Int& r, const Int& n) {
    if (r < 1) throw std::invalid_argument("root_minus_one_membership: r must be >= 1");
    if (n < 1) throw std::invalid_argument("root_minus_one_membership: n must be >= 1");
    const IntPolynomial phi = cyclotomic_prime_power(ell, s);
    const IntPolynomial base = IntPolynomial::x() - IntPolynomial::one();
    const IntPolynomial reduced = IntPolynomial::pow_mod(base, r, phi);
    return reduced.coefficients_divisible_by(n);
}

Int groupring_bound(const Int& ell, int s, int m) {
    if (m < 1 || s < 1) throw std::invalid_argument("groupring_bound: s, m must be >= 1");
    if (!is_prime(ell)) throw std::invalid_argument("groupring_bound: ell must be prime");
    Int stride = 1;
    for (int i = 1; i < s; ++i) stride *= ell;
    const Int bound = Int(m) * stride * (ell - 1);
    Int ell_m = 1;
    for (int i = 0; i < m; ++i) ell_m *= ell;
    if (!root_minus_one_membership(ell, s, bound, ell_m))
        throw std::logic_error("groupring_bound: membership oracle rejected the guaranteed exponent");
    return bound;
}

std::optional<ScanWitness> sharpness_scan(const Int& r, const Int& n, int s_max,
                                          int degree_cap) {
    if (r < 1 || n < 1) throw std::invalid_argument("sharpness_scan: r, n must be >= 1");
    if (s_max < 1) throw std::invalid_argument("sharpness_scan: s_max must be >= 1");
    for (Int ell = 2; (ell - 1) <= degree_cap; ++ell) {
        if (!is_prime(ell)) continue;
        Int degree = ell - 1;
        for (int s = 1; s <= s_max; ++s) {
            if (degree > degree_cap) break;
            if (root_minus_one_membership(ell, s, r, n)) return ScanWitness{ell, s};
            degree *= ell;
        }
    }
    return std::nullopt;
}

}  // namespace monodromy
