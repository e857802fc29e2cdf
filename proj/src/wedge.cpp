#include "monodromy/wedge.hpp"

#include <stdexcept>

namespace monodromy {

namespace {

void colex_subsets(int dim, int k, std::vector<int>& scratch,
                   std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.emplace_back(scratch);
        return;
    }
    if (k > dim) return;
    colex_subsets(dim - 1, k, scratch, out);
    scratch.push_back(dim - 1);
    colex_subsets(dim - 1, k - 1, scratch, out);
    scratch.pop_back();
}

}  // namespace

WedgeBasisIndex WedgeBasisIndex::build(int dim, int k) {
    if (dim < 0 || k < 0 || k > dim)
        throw std::invalid_argument("WedgeBasisIndex: need 0 <= k <= dim");
    WedgeBasisIndex b;
    b.dim = dim;
    b.k = k;
    std::vector<int> scratch;
    colex_subsets(dim, k, scratch, b.subsets);
    for (auto& s : b.subsets) std::sort(s.begin(), s.end());
    return b;
}

ExactMatrix wedge_power(const ExactMatrix& a, int k) {
    const auto basis = WedgeBasisIndex::build(a.dim(), k);
    const int m = basis.size();
    ExactMatrix out(m);
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t)
            out.at(s, t) = minor_det(a, basis.subsets[static_cast<std::size_t>(s)],
                                     basis.subsets[static_cast<std::size_t>(t)]);
    return out;
}

ExactMatrix cohomology_action(const ExactMatrix& a, int k) {
    return wedge_power(mat_inverse_unimodular(a), k).transpose();
}

ExactMatrix cohomology_action_mod(const ExactMatrix& a, int k, const Int& n) {
    return wedge_power(mat_inverse_mod(a, n), k).transpose().reduced_mod(n);
}

bool wedge_functoriality_check(const ExactMatrix& a, const ExactMatrix& b, int k) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("wedge_functoriality_check: dimension mismatch");
    return wedge_power(a * b, k) == wedge_power(a, k) * wedge_power(b, k);
}

}  // namespace monodromy
