#include "parafock/matrix_rep.hpp"

#include <algorithm>

namespace parafock::alg {

SparseComplexMatrix matrix_of(const GradedOperator& op, const rep::FockBasis& basis) {
    const int n = int(basis.size());
    SparseComplexMatrix m(n, n);
    for (int c = 0; c < n; ++c) {
        const StateVector image = op.action(StateVector{basis.label(std::size_t(c))});
        for (const auto& [target, amp] : image) {
            if (auto r = basis.index_of(target)) m.add(int(*r), c, amp);
            // else: amplitude beyond the cutoff, dropped by truncation.
        }
    }
    std::vector<int> boundary;
    for (int i = 0; i < n; ++i)
        if (basis.label(std::size_t(i)).level() == basis.cutoff()) boundary.push_back(i);
    m.set_boundary_rows(std::move(boundary));
    return m;
}

std::vector<char> interior_mask(const rep::FockBasis& basis) {
    std::vector<char> mask(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
        mask[i] = basis.label(i).level() < basis.cutoff() ? 1 : 0;
    return mask;
}

double adjointness_residual(const GradedOperator& minus_op, const GradedOperator& plus_op,
                            const rep::FockBasis& basis) {
    const SparseComplexMatrix diff =
        matrix_of(minus_op, basis) - matrix_of(plus_op, basis).adjoint();
    const std::vector<char> mask = interior_mask(basis);
    return diff.max_abs_interior(mask, mask);
}

double ladder_adjointness_residual(const GeneratorSextet& g, const rep::FockBasis& basis) {
    return std::max(adjointness_residual(g.c1m, g.c1p, basis),
                    adjointness_residual(g.c2m, g.c2p, basis));
}

double hermiticity_residual(const GradedOperator& op, const rep::FockBasis& basis) {
    const SparseComplexMatrix m = matrix_of(op, basis);
    const std::vector<char> mask = interior_mask(basis);
    return (m - m.adjoint()).max_abs_interior(mask, mask);
}

}  // namespace parafock::alg
