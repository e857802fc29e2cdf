#pragma once

#include "monodromy/matrix.hpp"

#include <vector>

namespace monodromy {

// Basis bookkeeping for the k-th exterior power of a dim-dimensional space.
// Basis vectors are the size-k subsets of {0..dim-1} listed in colexicographic
// order, each subset ascending.
struct WedgeBasisIndex {
    int dim = 0;
    int k = 0;
    std::vector<std::vector<int>> subsets;

    static WedgeBasisIndex build(int dim, int k);
    int size() const { return static_cast<int>(subsets.size()); }
};

// Matrix of the induced action on the k-th exterior power: entry (S, T) is
// the k x k minor of a with rows S and columns T. Satisfies
// wedge_power(a*b, k) == wedge_power(a, k) * wedge_power(b, k).
ExactMatrix wedge_power(const ExactMatrix& a, int k);

// Induced action on the dual of the k-th exterior power, i.e. the transpose
// of the wedge power of the inverse. The matrix must be unimodular.
ExactMatrix cohomology_action(const ExactMatrix& a, int k);

// Same but with entries mod n; the matrix only needs to be invertible mod n.
ExactMatrix cohomology_action_mod(const ExactMatrix& a, int k, const Int& n);

bool wedge_functoriality_check(const ExactMatrix& a, const ExactMatrix& b, int k);

}  // namespace monodromy
