#include "monodromy/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace monodromy {

namespace {

void require_same_dim(const ExactMatrix& a, const ExactMatrix& b, const char* what) {
    if (a.dim() != b.dim()) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

}  // namespace

ExactMatrix ExactMatrix::identity(int dim) {
    ExactMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int n = static_cast<int>(rows.size());
    ExactMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("from_rows: matrix must be square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    require_same_dim(*this, rhs, "operator*");
    ExactMatrix out(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                out.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    require_same_dim(*this, rhs, "operator+");
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + rhs.data_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    require_same_dim(*this, rhs, "operator-");
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Int ExactMatrix::trace() const {
    Int t = 0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

bool ExactMatrix::is_identity() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& v : data_)
        if (v != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::reduced_mod(const Int& n) const {
    ExactMatrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = pos_mod(data_[i], n);
    return out;
}

ExactMatrix mat_pow(const ExactMatrix& a, const Int& e) {
    if (e < 0) throw std::invalid_argument("mat_pow: negative exponent");
    ExactMatrix acc = ExactMatrix::identity(a.dim());
    ExactMatrix b = a;
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

ExactMatrix mat_mul_mod(const ExactMatrix& a, const ExactMatrix& b, const Int& n) {
    require_same_dim(a, b, "mat_mul_mod");
    const int d = a.dim();
    ExactMatrix out(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < d; ++j) out.at(i, j) += aik * b.at(k, j);
        }
        for (int j = 0; j < d; ++j) out.at(i, j) = pos_mod(out.at(i, j), n);
    }
    return out;
}

ExactMatrix mat_pow_mod(const ExactMatrix& a, const Int& e, const Int& n) {
    if (e < 0) throw std::invalid_argument("mat_pow_mod: negative exponent");
    ExactMatrix acc = ExactMatrix::identity(a.dim()).reduced_mod(n);
    ExactMatrix b = a.reduced_mod(n);
    Int k = e;
    while (k > 0) {
        if ((k & 1) != 0) acc = mat_mul_mod(acc, b, n);
        b = mat_mul_mod(b, b, n);
        k >>= 1;
    }
    return acc;
}

namespace {

// Faddeev-LeVerrier. Fills coeffs c[0..n] of det(xI - a) and, when aux is
// non-null, the matrix q(a) where p(x) = x*q(x) + c0, so a*q(a) = -c0*I.
void fl_charpoly(const ExactMatrix& a, std::vector<Int>& c, ExactMatrix* aux) {
    const int n = a.dim();
    c.assign(static_cast<std::size_t>(n) + 1, Int(0));
    c[static_cast<std::size_t>(n)] = 1;
    if (n == 0) return;
    ExactMatrix m = ExactMatrix::identity(n);
    if (aux && n == 1) *aux = m;
    ExactMatrix am = a * m;
    c[static_cast<std::size_t>(n - 1)] = -am.trace();
    for (int k = 2; k <= n; ++k) {
        ExactMatrix shift = ExactMatrix::identity(n);
        const Int& ck = c[static_cast<std::size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) shift.at(i, i) = ck;
        m = am + shift;
        if (aux && k == n) *aux = m;
        am = a * m;
        Int t = am.trace();
        if (t % k != 0) throw std::logic_error("charpoly: interior division not exact");
        c[static_cast<std::size_t>(n - k)] = -t / k;
    }
}

}  // namespace

IntPolynomial charpoly(const ExactMatrix& a) {
    std::vector<Int> c;
    fl_charpoly(a, c, nullptr);
    return IntPolynomial(std::move(c));
}

Int determinant(const ExactMatrix& a) {
    const int n = a.dim();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
    }
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i) {
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { piv = i; break; }
        }
        if (piv < 0) return Int(0);
        if (piv != k) { std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(k)]); sign = -sign; }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        - w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
            }
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Int det = w[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? Int(-det) : det;
}

Int minor_det(const ExactMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor_det: index lists differ in size");
    const int k = static_cast<int>(rows.size());
    ExactMatrix sub(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = a.at(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
    return determinant(sub);
}

bool entries_divisible(const ExactMatrix& a, const Int& n) {
    if (n == 0) throw std::invalid_argument("entries_divisible: zero modulus");
    for (const auto& v : a.data())
        if (v % n != 0) return false;
    return true;
}

namespace {

std::uint64_t mod_pow_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

// Gaussian elimination over Z/ell with ell < 2^31 so products fit in 64 bits.
int rank_mod_prime_u64(const std::vector<std::vector<Int>>& rows, std::uint64_t ell) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    std::vector<std::vector<std::uint64_t>> w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(ncols));
        for (int j = 0; j < ncols; ++j) {
            Int v = pos_mod(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], Int(ell));
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.convert_to<std::uint64_t>();
        }
    }
    int r = 0;
    for (int col = 0; col < ncols && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(r)]);
        const std::uint64_t inv = mod_pow_u64(w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], ell - 2, ell);
        for (int j = col; j < ncols; ++j)
            w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv % ell;
        for (int i = r + 1; i < m; ++i) {
            const std::uint64_t f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < ncols; ++j) {
                std::uint64_t sub = f * w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] % ell;
                std::uint64_t& cell = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                cell = (cell + ell - sub) % ell;
            }
        }
        ++r;
    }
    return r;
}

int rank_mod_prime_big(const std::vector<std::vector<Int>>& rows, const Int& ell) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    std::vector<std::vector<Int>> w(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        w[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(ncols));
        for (int j = 0; j < ncols; ++j)
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pos_mod(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], ell);
    }
    int r = 0;
    for (int col = 0; col < ncols && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(r)]);
        const Int inv = mod_inverse(w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)], ell);
        for (int j = col; j < ncols; ++j)
            w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * inv % ell;
        for (int i = r + 1; i < m; ++i) {
            const Int f = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = col; j < ncols; ++j) {
                Int& cell = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                cell = pos_mod(cell - f * w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)], ell);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

int rank_mod_prime(const std::vector<std::vector<Int>>& rows, const Int& ell) {
    if (!is_prime(ell)) throw std::invalid_argument("rank_mod_prime: modulus must be prime");
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size())
            throw std::invalid_argument("rank_mod_prime: ragged row list");
    if (ell <= Int(0x7fffffff))
        return rank_mod_prime_u64(rows, ell.convert_to<std::uint64_t>());
    return rank_mod_prime_big(rows, ell);
}

int rank_mod_prime(const ExactMatrix& a, const Int& ell) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(a.dim()));
        for (int j = 0; j < a.dim(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
    }
    return rank_mod_prime(rows, ell);
}

int kernel_dim_mod_prime(const ExactMatrix& a, const Int& ell) {
    return a.dim() - rank_mod_prime(a, ell);
}

int rank_exact(const std::vector<std::vector<Int>>& rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) return 0;
    const int ncols = static_cast<int>(rows[0].size());
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].size() != rows[0].size()) throw std::invalid_argument("rank_exact: ragged row list");
    std::vector<std::vector<Int>> w = rows;
    int r = 0;
    Int prev = 1;
    for (int col = 0; col < ncols && r < m; ++col) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[static_cast<std::size_t>(piv)], w[static_cast<std::size_t>(r)]);
        for (int i = r + 1; i < m; ++i) {
            for (int j = col + 1; j < ncols; ++j) {
                Int num = w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                        - w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] * w[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
            }
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] = 0;
        }
        prev = w[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
        ++r;
    }
    return r;
}

int rank_exact(const ExactMatrix& a) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(a.dim()));
        for (int j = 0; j < a.dim(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a.at(i, j);
    }
    return rank_exact(rows);
}

ExactMatrix mat_inverse_unimodular(const ExactMatrix& a) {
    std::vector<Int> c;
    ExactMatrix q;
    fl_charpoly(a, c, &q);
    const Int c0 = c[0];
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument("mat_inverse_unimodular: determinant is not a unit");
    // a*q = -c0*I, so a^-1 = -c0^-1 * q = -c0 * q when c0 is +-1.
    ExactMatrix inv = -q;
    if (c0 == -1) inv = -inv;
    return inv;
}

ExactMatrix mat_inverse_mod(const ExactMatrix& a, const Int& n) {
    if (n < 2) throw std::invalid_argument("mat_inverse_mod: modulus must be >= 2");
    std::vector<Int> c;
    ExactMatrix q;
    fl_charpoly(a, c, &q);
    const Int c0 = pos_mod(c[0], n);
    if (gcd(c0, n) != 1)
        throw std::invalid_argument("mat_inverse_mod: determinant is not a unit mod n");
    const Int scale = pos_mod(-mod_inverse(c0, n), n);
    ExactMatrix inv(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) inv.at(i, j) = pos_mod(q.at(i, j) * scale, n);
    return inv;
}

bool is_symplectic(const ExactMatrix& a, const ExactMatrix& form) {
    if (a.dim() != form.dim()) throw std::invalid_argument("is_symplectic: dimension mismatch");
    return a.transpose() * form * a == form;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix out(a.dim() + b.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) out.at(a.dim() + i, a.dim() + j) = b.at(i, j);
    return out;
}

ExactMatrix poly_at_matrix(const IntPolynomial& p, const ExactMatrix& a) {
    const int n = a.dim();
    ExactMatrix acc(n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * a;
        const Int ci = p.coeff(i);
        if (ci != 0)
            for (int d = 0; d < n; ++d) acc.at(d, d) += ci;
    }
    return acc;
}

}  // namespace monodromy
