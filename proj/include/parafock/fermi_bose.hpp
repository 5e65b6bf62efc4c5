#pragma once

#include <compare>

#include "parafock/coeffs.hpp"
#include "parafock/state.hpp"

namespace parafock::osc {

// Independent p = 1 oracle: one ordinary fermion tensored with one ordinary
// boson, with a parity twist on the boson ladder,
//   c1^+ = f^+ (x) 1,   c1^- = f^- (x) 1,
//   c2^pm = (-1)^F (x) b^pm,
// where F is the fermion number.  The twist is what makes the mixed triple
// relations close.  States are labelled by (f, nb); the oscillator level is
// nb alone (the fermion mode carries no energy), matching the two-fold
// degeneracy pattern of the p = 1 Fock space.
struct FBLabel {
    int f = 0;   // 0 or 1
    int nb = 0;  // boson occupation >= 0

    friend bool operator==(const FBLabel&, const FBLabel&) = default;
    friend auto operator<=>(const FBLabel&, const FBLabel&) = default;
};

using FBState = rep::SparseState<FBLabel>;

struct OracleReport {
    double triple_residual = 0.0;     // worst of the 64 triple-relation instances
    double defining_residual = 0.0;   // vacuum conditions at p = 1
    double unitarity_residual = 0.0;  // Gram matrix of the intertwiner columns vs identity
    double intertwine_residual = 0.0; // generator matrix elements, oracle vs Fock space
};

// Runs the full oracle comparison with probe/matching states through boson
// occupation (= level) `cutoff`.
OracleReport p1_oracle_report(int cutoff,
                              rep::CoeffVariant variant = rep::CoeffVariant::corrected);

}  // namespace parafock::osc
