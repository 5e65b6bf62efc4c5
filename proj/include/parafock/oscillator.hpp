#pragma once

#include <array>
#include <vector>

#include "parafock/basis.hpp"
#include "parafock/coeffs.hpp"
#include "parafock/fock.hpp"
#include "parafock/graded.hpp"
#include "parafock/label.hpp"

namespace parafock::osc {

using alg::GeneratorSextet;
using alg::GradedOperator;
using rep::BasisLabel;
using rep::Complex;
using rep::FockBasis;
using rep::StateVector;

struct OscillatorParams {
    double mass = 1.0;
    double omega = 1.0;
    double hbar = 1.0;

    void validate() const;  // throws std::invalid_argument unless all positive
};

// Levi-Civita symbol on {1,2,3}.
int levi_civita(int i, int j, int k);

// The three-dimensional Wigner quantum oscillator realized on the order-p
// Fock space.  The creation/annihilation triple is built from the para
// generators,
//   a_1^pm = ( 1/(2 sqrt 3)) [[c1^- - c1^+, c2^pm]],
//   a_2^pm = ( i/(2 sqrt 3)) [[c1^- + c1^+, c2^pm]],
//   a_3^pm = ( 1/sqrt 3) c2^pm,
// and the observables follow:
//   r_k = sqrt(hbar/(2 m omega)) (a_k^+ + a_k^-),
//   p_k = i sqrt(m omega hbar / 2) (a_k^+ - a_k^-),
//   H   = (omega hbar / 2) sum_k {a_k^+, a_k^-}.
//
// Angular momentum: the bilinear definition M_i = -(3/(4 hbar)) sum eps_ijk
// {r_j, p_k} closes so(3) and is the set exposed as angular_momentum().  The
// literal c1-bilinear shortcut forms (M1 = (c1^+ + c1^-)/2, M2 =
// -i(c1^+ - c1^-)/2, M3 = [[c1^-, c1^+]]/2) are materialized alongside; they
// agree for M1 and M2, but the shortcut M3 carries the opposite sign
// (-h1 instead of +h1) and does not close so(3).  See README.
class WignerOscillator {
public:
    explicit WignerOscillator(int p, OscillatorParams params = {},
                              rep::CoeffVariant variant = rep::CoeffVariant::corrected);

    int order() const { return space_.order(); }
    const OscillatorParams& params() const { return params_; }
    const rep::FockSpace& space() const { return space_; }
    const GeneratorSextet& generators() const { return gens_; }

    // k = 1..3 throughout.
    const GradedOperator& a_plus(int k) const { return pick(a_plus_, k); }
    const GradedOperator& a_minus(int k) const { return pick(a_minus_, k); }
    const GradedOperator& position(int k) const { return pick(r_, k); }
    const GradedOperator& momentum(int k) const { return pick(p_, k); }
    const GradedOperator& angular_momentum(int k) const { return pick(m_, k); }
    const GradedOperator& angular_momentum_c1form(int k) const { return pick(m_c1_, k); }
    const GradedOperator& hamiltonian() const { return h_; }
    // sum_k {a_k^+, a_k^-} = (2 / (omega hbar)) H, kept separately because the
    // compatibility conditions are stated through it.
    const GradedOperator& number_like() const { return number_like_; }

    // Closed-form energy hbar omega (n + p/2) of a basis label (n = level).
    double energy(const BasisLabel& m) const;

private:
    rep::FockSpace space_;
    OscillatorParams params_;
    GeneratorSextet gens_;
    std::array<GradedOperator, 3> a_plus_, a_minus_, r_, p_, m_, m_c1_;
    GradedOperator h_, number_like_;

    static const GradedOperator& pick(const std::array<GradedOperator, 3>& a, int k);
};

// --- identity residuals (lazy exact actions; probes = unit basis states) ---

// Compatibility conditions: sum_i [[{a_i^+, a_i^-}, a_k^pm]] = pm 2 a_k^pm
// for k = 1..3 and both signs; returns the worst per-amplitude residual.
double compatibility_residual(const WignerOscillator& osc, int k, int sign,
                              const FockBasis& probes);

// sum_k {a_k^+, a_k^-} = {c2^+, c2^-}.
double ladder_sum_identity_residual(const WignerOscillator& osc, const FockBasis& probes);

// Hamilton vs Heisenberg consistency: [[H, r_k]] = -(i hbar / m) p_k and
// [[H, p_k]] = i hbar m omega^2 r_k; max residual over k.
double hamilton_heisenberg_residual(const WignerOscillator& osc, const FockBasis& probes);

// H acts diagonally with the closed-form energies.
double hamiltonian_diagonal_residual(const WignerOscillator& osc, const FockBasis& probes);

// so(3) closure [[M_i, M_j]] = i eps_ijk M_k; max residual over i < j.
double so3_closure_residual(const WignerOscillator& osc, const FockBasis& probes);

// Vector-operator transformation [[M_j, X_k]] = i sum_l eps_jkl X_l for
// X one of the observable triples.
enum class VectorTriple { angular_momentum, position, momentum };
double vector_transform_residual(const WignerOscillator& osc, VectorTriple which,
                                 const FockBasis& probes);

// Per-component max deviation between the bilinear and c1-form angular
// momenta (components 1 and 2 agree; component 3 differs by 2 h1).
std::array<double, 3> angular_momentum_form_difference(const WignerOscillator& osc,
                                                       const FockBasis& probes);

// --- spectrum ---

struct SpectrumLevel {
    int n = 0;
    double energy = 0.0;
    int multiplicity = 0;
};

struct SpectrumResult {
    std::vector<SpectrumLevel> levels;   // interior levels n = 0 .. cutoff-1
    double dual_route_residual = 0.0;    // sorted closed-form vs diagonalized
    bool multiplicities_match = false;   // eigenvalue clusters vs label counts
};

// Closed-form spectrum cross-checked against dense diagonalization of the
// interior block of H over the level-<cutoff> part of the basis.
SpectrumResult spectrum(const WignerOscillator& osc, int cutoff);

// --- noncommutative structure ---

struct NoncommutativityReport {
    double rr_anticomm_max = 0.0;  // max over i != j of ||{r_i, r_j}||
    double pp_anticomm_max = 0.0;
    double rr_witness = 0.0;       // ||[r_1, r_2]|| (should be order 1)
    double pp_witness = 0.0;       // ||[p_1, p_2]||
    double so3_residual = 0.0;
};

NoncommutativityReport noncommutativity_report(const WignerOscillator& osc,
                                               const FockBasis& probes);

// --- M3 audit ---

struct M3AuditRow {
    BasisLabel label;
    double realized = 0.0;        // diagonal entry of the c1-form M3
    double printed_formula = 0.0; // the tabulated closed form p/2 - 2 mu12
};

struct M3Audit {
    std::vector<M3AuditRow> rows;
    double offdiag_max = 0.0;        // c1-form M3 must be diagonal
    bool eigenvalue_set_ok = false;  // realized values = {-p/2, ..., p/2}
};

M3Audit m3_audit(const WignerOscillator& osc, const FockBasis& basis);

}  // namespace parafock::osc
