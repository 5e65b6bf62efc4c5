#pragma once

#include <string>

#include "parafock/basis.hpp"
#include "parafock/sparse_matrix.hpp"

namespace parafock::cli {

// Self-describing sparse-matrix export:
//   { "schema": 1, "p": ..., "cutoff": ..., "basis": [[mu12,mu22,mu11], ...],
//     "entries": [[row, col, re, im], ...], "boundary_rows": [...] }
// Entries appear in row-major order with 17-significant-digit floats, so the
// output is byte-deterministic and loadable without this library.
std::string export_matrix_json(const alg::SparseComplexMatrix& m, const rep::FockBasis& basis);

}  // namespace parafock::cli
