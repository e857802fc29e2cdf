#include "monodromy/spectral.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace monodromy {

namespace {

// Matrix over Z/ell in machine words, valid for ell < 2^31.
struct ModMat {
    int n = 0;
    std::uint64_t ell = 0;
    std::vector<std::uint64_t> d;

    static ModMat from(const ExactMatrix& a, std::uint64_t ell) {
        ModMat m;
        m.n = a.dim();
        m.ell = ell;
        m.d.resize(static_cast<std::size_t>(m.n) * m.n);
        for (int i = 0; i < m.n; ++i)
            for (int j = 0; j < m.n; ++j) {
                Int v = pos_mod(a.at(i, j), Int(ell));
                m.d[static_cast<std::size_t>(i) * m.n + j] = v.convert_to<std::uint64_t>();
            }
        return m;
    }

    std::uint64_t at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }

    ModMat mul(const ModMat& rhs) const {
        ModMat out;
        out.n = n;
        out.ell = ell;
        out.d.assign(d.size(), 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const std::uint64_t aik = at(i, k);
                if (aik == 0) continue;
                const std::uint64_t* brow = &rhs.d[static_cast<std::size_t>(k) * n];
                std::uint64_t* orow = &out.d[static_cast<std::size_t>(i) * n];
                for (int j = 0; j < n; ++j) orow[j] = (orow[j] + aik * brow[j]) % ell;
            }
        return out;
    }

    bool is_zero() const {
        for (auto v : d)
            if (v != 0) return false;
        return true;
    }

    std::vector<std::vector<Int>> to_rows() const {
        std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            rows[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
            for (int j = 0; j < n; ++j) rows[static_cast<std::size_t>(i)].emplace_back(at(i, j));
        }
        return rows;
    }
};

bool ell_fits_word(const Int& ell) { return ell <= Int(0x7fffffff); }

}  // namespace

int JordanPartition::sum() const {
    int s = 0;
    for (int b : blocks) s += b;
    return s;
}

bool is_unipotent(const ExactMatrix& a) {
    const ExactMatrix n = a - ExactMatrix::identity(a.dim());
    return mat_pow(n, a.dim()).is_zero();
}

std::optional<int> unipotent_echelon(const ExactMatrix& a) {
    if (!is_unipotent(a)) return std::nullopt;
    const ExactMatrix n = a - ExactMatrix::identity(a.dim());
    ExactMatrix p = ExactMatrix::identity(a.dim());
    for (int e = 1; e <= a.dim(); ++e) {
        p = p * n;
        if (p.is_zero()) return e;
    }
    return std::nullopt;  // unreachable for unipotent input
}

bool is_neg_unipotent(const ExactMatrix& a) { return is_unipotent(-a); }

QuasiUnipotentReport is_quasi_unipotent(const ExactMatrix& a) {
    QuasiUnipotentReport rep;
    IntPolynomial p = charpoly(a);
    const long dim = a.dim();
    const long d_max = 2 * dim * dim;
    for (long d = 1; d <= d_max && p.degree() > 0; ++d) {
        if (euler_phi(d) > p.degree()) continue;
        const IntPolynomial phi = cyclotomic_polynomial(d);
        int mult = 0;
        IntPolynomial quot;
        while (IntPolynomial::divides(phi, p, &quot)) {
            p = quot;
            ++mult;
        }
        if (mult > 0) rep.cyclotomic_factors.push_back({d, mult});
    }
    rep.is_quasi_unipotent = (p.degree() == 0);
    if (rep.is_quasi_unipotent) {
        Int order = 1;
        for (const auto& f : rep.cyclotomic_factors) order = lcm(order, Int(f.conductor));
        rep.order = order;
    } else {
        rep.order = 0;
    }
    return rep;
}

JordanPartition jordan_partition_unipotent(const ExactMatrix& a, const Int& ell) {
    if (!is_prime(ell)) throw std::invalid_argument("jordan_partition_unipotent: ell must be prime");
    const int dim = a.dim();
    // ranks[j] = rank(N^j mod ell); ranks[0] = dim.
    std::vector<int> ranks{dim};
    if (ell_fits_word(ell)) {
        const auto w = ell.convert_to<std::uint64_t>();
        ModMat n = ModMat::from(a - ExactMatrix::identity(dim), w);
        ModMat p = n;
        while (true) {
            if (p.is_zero()) { ranks.push_back(0); break; }
            ranks.push_back(rank_mod_prime(p.to_rows(), ell));
            if (static_cast<int>(ranks.size()) > dim + 1)
                throw std::invalid_argument("jordan_partition_unipotent: input not unipotent mod ell");
            p = p.mul(n);
        }
    } else {
        const ExactMatrix n = (a - ExactMatrix::identity(dim)).reduced_mod(ell);
        ExactMatrix p = n;
        while (true) {
            if (p.is_zero()) { ranks.push_back(0); break; }
            ranks.push_back(rank_mod_prime(p, ell));
            if (static_cast<int>(ranks.size()) > dim + 1)
                throw std::invalid_argument("jordan_partition_unipotent: input not unipotent mod ell");
            p = mat_mul_mod(p, n, ell);
        }
    }
    const int index = static_cast<int>(ranks.size()) - 1;  // nilpotency index of N
    JordanPartition part;
    part.field_char = ell;
    // c[j] = #blocks of size >= j = ranks[j-1] - ranks[j].
    std::vector<int> c(static_cast<std::size_t>(index) + 2, 0);
    for (int j = 1; j <= index; ++j)
        c[static_cast<std::size_t>(j)] = ranks[static_cast<std::size_t>(j - 1)] - ranks[static_cast<std::size_t>(j)];
    for (int j = index; j >= 1; --j) {
        const int exact = c[static_cast<std::size_t>(j)] - c[static_cast<std::size_t>(j + 1)];
        for (int t = 0; t < exact; ++t) part.blocks.push_back(j);
    }
    if (part.sum() != dim)
        throw std::logic_error("jordan_partition_unipotent: partition does not sum to dim");
    return part;
}

bool level2_check(const ExactMatrix& a, int m) {
    if (m < 1) throw std::invalid_argument("level2_check: m must be >= 1");
    const ExactMatrix g = mat_pow(a, m);
    const ExactMatrix n = g - ExactMatrix::identity(a.dim());
    return (n * n).is_zero();
}

bool mat_pow_is_zero_mod(const ExactMatrix& a, const Int& e, const Int& ell) {
    if (e < 1) throw std::invalid_argument("mat_pow_is_zero_mod: e must be >= 1");
    if (ell_fits_word(ell)) {
        const auto w = ell.convert_to<std::uint64_t>();
        ModMat b = ModMat::from(a, w);
        ModMat acc;
        bool have = false;
        Int k = e;
        while (k > 0) {
            if ((k & 1) != 0) {
                acc = have ? acc.mul(b) : b;
                have = true;
            }
            k >>= 1;
            if (k > 0) b = b.mul(b);
        }
        return acc.is_zero();
    }
    return mat_pow_mod(a, e, ell).is_zero();
}

}  // namespace monodromy
