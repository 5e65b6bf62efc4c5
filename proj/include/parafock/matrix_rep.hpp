#pragma once

#include <vector>

#include "parafock/basis.hpp"
#include "parafock/graded.hpp"
#include "parafock/sparse_matrix.hpp"

namespace parafock::alg {

// Materializes an action over a truncated basis: column c holds the
// amplitudes of op applied to basis label c.  Amplitudes landing on labels
// beyond the cutoff are dropped; every row whose label sits exactly at the
// cutoff level is flagged as boundary-affected.
SparseComplexMatrix matrix_of(const GradedOperator& op, const rep::FockBasis& basis);

// Interior mask: 1 for indices whose label level is strictly below the
// cutoff, 0 for boundary rows.
std::vector<char> interior_mask(const rep::FockBasis& basis);

// Max-modulus difference between M(minus_op) and M(plus_op)^dagger restricted
// to the interior block (rows and columns below the cutoff level).
double adjointness_residual(const GradedOperator& minus_op, const GradedOperator& plus_op,
                            const rep::FockBasis& basis);

// Max over j in {1,2} of the c_j^- vs (c_j^+)^dagger interior residual.
double ladder_adjointness_residual(const GeneratorSextet& g, const rep::FockBasis& basis);

// Interior-block Hermiticity defect of a single operator.
double hermiticity_residual(const GradedOperator& op, const rep::FockBasis& basis);

}  // namespace parafock::alg
