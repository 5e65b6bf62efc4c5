#pragma once

#include "parafock/graded.hpp"
#include "parafock/sparse_matrix.hpp"

namespace parafock::alg {

// The 5x5 defining realization of the generators inside osp(3|2): with e_ij
// the usual matrix units (1-based),
//   c1+ = sqrt(2) (e13 - e32)      c1- = sqrt(2) (e31 - e23)
//   c2+ = sqrt(2) (e35 + e43)      c2- = sqrt(2) (e34 - e53)
//   h1  = e11 - e22                h2  = e44 - e55.
// The even part acts within the 3+2 block split, the odd part across it.
GeneratorSextet defining_realization();

// 5x5 matrix unit e_ij (1-based indices), handy for tests.
SparseComplexMatrix matrix_unit5(int i, int j);

// Max modulus of any entry violating the graded block structure: even
// operators must vanish on the off-diagonal 3x2 / 2x3 blocks, odd operators
// on the diagonal 3x3 / 2x2 blocks.
double block_structure_residual(const GeneratorSextet& g);

// Dimension of the Lie superalgebra spanned by the six generators and their
// iterated super-brackets (rank of the flattened-matrix span).  Twelve for
// osp(3|2).
int span_dimension(const GeneratorSextet& g);

// Residuals of the Cartan closures [c1-, c1+] + 2 h1 and {c2-, c2+} - 2 h2
// in the matrix realization.
double cartan_closure_residual_c1(const GeneratorSextet& g);
double cartan_closure_residual_c2(const GeneratorSextet& g);

// Super-Jacobi residual max over all ordered generator triples (a, b, c):
// [[ [[a,b]], c]] - [[a, [[b,c]] ]] + (-1)^{|a||b|} [[b, [[a,c]] ]].
double super_jacobi_residual(const GeneratorSextet& g);

}  // namespace parafock::alg
