#pragma once

#include <array>
#include <string>

#include "parafock/basis.hpp"
#include "parafock/graded.hpp"

namespace parafock::alg {

// One instance of the relative parafermion triple relations
//   [[ [[c_j^xi, c_k^eta]], c_l^eps ]]
//     = -2 delta_{jl} delta_{eps,-xi} eps^<l> (-1)^{<k><l>} c_k^eta
//       + 2 eps^<l> delta_{kl} delta_{eps,-eta} c_j^xi,
// where <1> = 0, <2> = 1 grade the two families and eps^<l> means 1 when
// <l> = 0 and eps otherwise.  j, k, l range over {1, 2} and the three signs
// over {+1, -1}: 64 instances in total.
struct TripleInstance {
    int j, k, l;       // 1 or 2
    int xi, eta, eps;  // +1 or -1
};

std::array<TripleInstance, 64> all_triple_instances();

// Stable identifier, e.g. "triple(1,2,1;+,-,+)".
std::string instance_id(const TripleInstance& t);

// Coefficients of the right-hand side on c_k^eta and c_j^xi respectively.
struct TripleRhs {
    double on_k_eta = 0.0;
    double on_j_xi = 0.0;
};
TripleRhs triple_rhs(const TripleInstance& t);

// Residual of one instance in a matrix realization (max entry modulus of
// LHS - RHS).
double triple_residual_matrix(const GeneratorSextet& g, const TripleInstance& t);

// Residual of one instance in an action realization: max per-amplitude
// deviation over unit probes at every basis label.  Application is lazy and
// exact, so all probe levels are trustworthy.
double triple_residual_action(const GeneratorSextet& g, const TripleInstance& t,
                              const rep::FockBasis& probes);

}  // namespace parafock::alg
