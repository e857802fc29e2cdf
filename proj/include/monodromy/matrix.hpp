#pragma once

#include "monodromy/integer.hpp"
#include "monodromy/polynomial.hpp"

#include <vector>

namespace monodromy {

// Dense square matrix over Z, row-major. Dimension is fixed at construction.
// Every operation is exact; overflow cannot occur.
class ExactMatrix {
public:
    ExactMatrix() = default;
    explicit ExactMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, Int(0)) {}

    static ExactMatrix identity(int dim);
    static ExactMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int dim() const { return dim_; }
    const Int& at(int i, int j) const { return data_[idx(i, j)]; }
    Int& at(int i, int j) { return data_[idx(i, j)]; }
    const std::vector<Int>& data() const { return data_; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator-() const;
    bool operator==(const ExactMatrix& rhs) const {
        return dim_ == rhs.dim_ && data_ == rhs.data_;
    }
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    ExactMatrix transpose() const;
    Int trace() const;
    bool is_identity() const;
    bool is_zero() const;

    // Every entry reduced into [0, n).
    ExactMatrix reduced_mod(const Int& n) const;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }
    int dim_ = 0;
    std::vector<Int> data_;
};

// a^e for e >= 0 by repeated squaring.
ExactMatrix mat_pow(const ExactMatrix& a, const Int& e);

// (a*b) mod n and a^e mod n; entries stay reduced throughout.
ExactMatrix mat_mul_mod(const ExactMatrix& a, const ExactMatrix& b, const Int& n);
ExactMatrix mat_pow_mod(const ExactMatrix& a, const Int& e, const Int& n);

// Characteristic polynomial det(xI - a), monic of degree dim. Division-free
// Faddeev-LeVerrier recurrence; the interior division by the step index is
// exact.
IntPolynomial charpoly(const ExactMatrix& a);

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const ExactMatrix& a);

// Determinant of the k x k submatrix picked out by `rows` and `cols`
// (ascending index lists into a).
Int minor_det(const ExactMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols);

// True iff every entry of a is divisible by n.
bool entries_divisible(const ExactMatrix& a, const Int& n);

// Rank of a over the field Z/ell (ell prime). Works for any rectangular row
// list; the ExactMatrix overload is the square case.
int rank_mod_prime(const std::vector<std::vector<Int>>& rows, const Int& ell);
int rank_mod_prime(const ExactMatrix& a, const Int& ell);
int kernel_dim_mod_prime(const ExactMatrix& a, const Int& ell);

// Rank over Q, fraction-free.
int rank_exact(const std::vector<std::vector<Int>>& rows);
int rank_exact(const ExactMatrix& a);

// Inverse of a matrix with det = +-1. The inverse is again integral; throws
// std::invalid_argument otherwise. Computed from the characteristic
// polynomial: with p(x) = x*q(x) + c0, a*q(a) = -c0*I.
ExactMatrix mat_inverse_unimodular(const ExactMatrix& a);

// Inverse of a mod n; requires gcd(det(a), n) = 1, else throws.
ExactMatrix mat_inverse_mod(const ExactMatrix& a, const Int& n);

// a^T * form * a == form.
bool is_symplectic(const ExactMatrix& a, const ExactMatrix& form);

// Block-diagonal concatenation.
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

// p evaluated at a (Horner, matrix coefficients against scalar poly).
ExactMatrix poly_at_matrix(const IntPolynomial& p, const ExactMatrix& a);

}  // namespace monodromy
