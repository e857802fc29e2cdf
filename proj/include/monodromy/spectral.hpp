#pragma once

#include "monodromy/cyclotomic.hpp"
#include "monodromy/matrix.hpp"

#include <optional>
#include <vector>

namespace monodromy {

// Jordan block sizes of a unipotent operator over F_ell, weakly decreasing.
struct JordanPartition {
    std::vector<int> blocks;
    Int field_char;

    int sum() const;
};

struct CyclotomicFactor {
    long conductor = 0;
    int multiplicity = 0;
    bool operator==(const CyclotomicFactor&) const = default;
};

struct QuasiUnipotentReport {
    bool is_quasi_unipotent = false;
    // Least m with all eigenvalues^m = 1; 0 when not quasi-unipotent.
    Int order;
    std::vector<CyclotomicFactor> cyclotomic_factors;
};

// (a - I)^dim == 0 exactly over Z.
bool is_unipotent(const ExactMatrix& a);

// Least e >= 1 with (a - I)^e = 0, or nullopt when a is not unipotent.
std::optional<int> unipotent_echelon(const ExactMatrix& a);

bool is_neg_unipotent(const ExactMatrix& a);

// Factor charpoly(a) into cyclotomic polynomials by trial division over
// conductors d with phi(d) <= remaining degree (d <= 2*dim^2 suffices since
// phi(d) >= sqrt(d/2)). Quasi-unipotent iff the factorization is complete.
QuasiUnipotentReport is_quasi_unipotent(const ExactMatrix& a);

// Jordan partition of a mod ell, for a unipotent mod ell: the number of
// blocks of size >= j is rank(N^(j-1)) - rank(N^j) with N = a - I mod ell.
// Throws if a is not unipotent mod ell.
JordanPartition jordan_partition_unipotent(const ExactMatrix& a, const Int& ell);

// (a^m - I)^2 == 0 exactly.
bool level2_check(const ExactMatrix& a, int m);

// Whether a^e == 0 over F_ell; uses machine words when ell < 2^31.
bool mat_pow_is_zero_mod(const ExactMatrix& a, const Int& e, const Int& ell);

}  // namespace monodromy
