#pragma once

#include <span>
#include <vector>

#include "parafock/basis.hpp"
#include "parafock/coeffs.hpp"
#include "parafock/label.hpp"
#include "parafock/state.hpp"

namespace parafock::rep {

// The six generators acting on the Fock space: the parafermion pair c1^±
// (even), the paraboson pair c2^± (odd), and the two Cartan elements.
enum class Gen { c1_plus, c1_minus, c2_plus, c2_minus, h1, h2 };

// Z2 grade of a generator: 0 (even) for c1^±, h1, h2; 1 (odd) for c2^±.
int grade_of(Gen g);
const char* name_of(Gen g);

// One summand of a ladder action: amplitude `coeff` on `target`.
struct Term {
    BasisLabel target;
    double coeff = 0.0;
};

// Exact action of the generators on the order-p Fock space.  Ladder actions
// carry at most two summands per basis vector; a summand whose target label
// is not admissible is dropped *before* its coefficient is evaluated, which
// is what keeps every radicand and denominator in range.
class FockSpace {
public:
    explicit FockSpace(int p, CoeffVariant variant = CoeffVariant::corrected);

    int order() const { return p_; }
    CoeffVariant variant() const { return variant_; }

    bool valid(const BasisLabel& m) const { return label_valid(p_, m); }

    // Cartan eigenvalues: h1 -> -p/2 + mu11, h2 -> p/2 + mu12 + mu22 - mu11.
    // Exact in doubles (integer or half-integer).
    double h_eigenvalue(int k, const BasisLabel& m) const;

    // Per-label action of a generator, as a list of (target, coefficient).
    std::vector<Term> terms(Gen g, const BasisLabel& m) const;

    StateVector apply(Gen g, const StateVector& s) const;

    // Applies a product of generators; the last element of `word` acts first
    // (operator composition order).
    StateVector apply_word(std::span<const Gen> word, const StateVector& s) const;

    StateVector vacuum() const { return StateVector{BasisLabel{0, 0, 0}}; }

private:
    int p_;
    CoeffVariant variant_;

    // The cross-term prefactor 1/x (printed) or 1/sqrt(x) (corrected).
    double cross_pref(int x) const;
};

// Lowest-weight (vacuum) conditions that define the Fock space: <0|0> = 1,
// c_j^- |0> = 0, and [[c_j^-, c_k^+]] |0> = p delta_jk |0>.  Returns the max
// per-amplitude residual over all six conditions.
double vacuum_condition_residual(const FockSpace& space);

}  // namespace parafock::rep
