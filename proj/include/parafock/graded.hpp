#pragma once

#include <functional>
#include <optional>
#include <string>

#include "parafock/fock.hpp"
#include "parafock/sparse_matrix.hpp"
#include "parafock/state.hpp"

namespace parafock::alg {

using rep::StateVector;

// A Z2-graded operator carrying one or both realizations: a lazy exact action
// on Fock-space states (no truncation anywhere in its evaluation) and/or a
// finite-dimensional matrix.  Arithmetic operates on whichever parts both
// operands share.
struct GradedOperator {
    std::string name;
    int grade = 0;  // 0 even, 1 odd
    std::function<StateVector(const StateVector&)> action;
    std::optional<SparseComplexMatrix> matrix;

    bool has_action() const { return static_cast<bool>(action); }
    bool has_matrix() const { return matrix.has_value(); }

    StateVector operator()(const StateVector& s) const { return action(s); }
};

// Lazy action realization of a Fock-space generator.
GradedOperator fock_generator(const rep::FockSpace& space, rep::Gen g);

// Matrix realization wrapper.
GradedOperator matrix_operator(std::string name, int grade, SparseComplexMatrix m);

// Operator product a*b (grade adds mod 2).
GradedOperator product(const GradedOperator& a, const GradedOperator& b);

// Super-bracket [[a,b]] = ab - (-1)^{grade a * grade b} ba: the anticommutator
// when both factors are odd, the commutator otherwise.
GradedOperator super_bracket(const GradedOperator& a, const GradedOperator& b);

// Plain commutator and anticommutator, for observable constructions whose
// defining formulas fix the bracket type irrespective of grade.
GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);
GradedOperator anticommutator(const GradedOperator& a, const GradedOperator& b);

// Linear combinations.  Addition requires matching grades.
GradedOperator scale(rep::Complex c, const GradedOperator& a);
GradedOperator sum(const GradedOperator& a, const GradedOperator& b);
GradedOperator difference(const GradedOperator& a, const GradedOperator& b);

inline GradedOperator operator*(rep::Complex c, const GradedOperator& a) { return scale(c, a); }
inline GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    return sum(a, b);
}
inline GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
    return difference(a, b);
}

// The six generators of one realization, bundled for the identity verifiers.
struct GeneratorSextet {
    GradedOperator c1p, c1m, c2p, c2m, h1, h2;

    // j in {1,2}, sign in {+1,-1}.
    const GradedOperator& ladder(int j, int sign) const;
    const GradedOperator& generator(rep::Gen g) const;
};

// All six generators as lazy exact actions on the order-p Fock space.
GeneratorSextet fock_sextet(const rep::FockSpace& space);

// Max per-amplitude residual of a(probe) - b(probe) over unit probes at each
// basis label.  Evaluation is exact (lazy actions), so probes at any level of
// the given basis are trustworthy.
double action_residual(const GradedOperator& a, const GradedOperator& b,
                       const rep::FockBasis& probes);

// Residual of a(probe) against the zero operator.
double action_residual_zero(const GradedOperator& a, const rep::FockBasis& probes);

}  // namespace parafock::alg
