#include "parafock/triples.hpp"

#include <algorithm>

namespace parafock::alg {

namespace {

// Family grade <j>: parafermions (j = 1) even, parabosons (j = 2) odd.
int fam(int j) { return j == 1 ? 0 : 1; }

char sign_char(int s) { return s > 0 ? '+' : '-'; }

}  // namespace

std::array<TripleInstance, 64> all_triple_instances() {
    std::array<TripleInstance, 64> out{};
    std::size_t i = 0;
    for (int j : {1, 2})
        for (int k : {1, 2})
            for (int l : {1, 2})
                for (int xi : {+1, -1})
                    for (int eta : {+1, -1})
                        for (int eps : {+1, -1}) out[i++] = {j, k, l, xi, eta, eps};
    return out;
}

std::string instance_id(const TripleInstance& t) {
    std::string s = "triple(";
    s += std::to_string(t.j) + "," + std::to_string(t.k) + "," + std::to_string(t.l) + ";";
    s += sign_char(t.xi);
    s += ",";
    s += sign_char(t.eta);
    s += ",";
    s += sign_char(t.eps);
    s += ")";
    return s;
}

TripleRhs triple_rhs(const TripleInstance& t) {
    // eps^<l>: 1 when the l family is even, eps when odd.
    const double eps_pow = fam(t.l) == 0 ? 1.0 : double(t.eps);
    TripleRhs rhs;
    if (t.j == t.l && t.eps == -t.xi) {
        const double k_l_sign = (fam(t.k) * fam(t.l)) % 2 == 1 ? -1.0 : 1.0;
        rhs.on_k_eta = -2.0 * eps_pow * k_l_sign;
    }
    if (t.k == t.l && t.eps == -t.eta) rhs.on_j_xi = 2.0 * eps_pow;
    return rhs;
}

double triple_residual_matrix(const GeneratorSextet& g, const TripleInstance& t) {
    const GradedOperator& a = g.ladder(t.j, t.xi);
    const GradedOperator& b = g.ladder(t.k, t.eta);
    const GradedOperator& c = g.ladder(t.l, t.eps);
    const TripleRhs rhs = triple_rhs(t);

    SparseComplexMatrix m = *super_bracket(super_bracket(a, b), c).matrix;
    if (rhs.on_k_eta != 0.0) m -= Complex{rhs.on_k_eta} * (*b.matrix);
    if (rhs.on_j_xi != 0.0) m -= Complex{rhs.on_j_xi} * (*a.matrix);
    return m.max_abs();
}

double triple_residual_action(const GeneratorSextet& g, const TripleInstance& t,
                              const rep::FockBasis& probes) {
    const GradedOperator& a = g.ladder(t.j, t.xi);
    const GradedOperator& b = g.ladder(t.k, t.eta);
    const GradedOperator& c = g.ladder(t.l, t.eps);
    const TripleRhs rhs = triple_rhs(t);
    const GradedOperator lhs = super_bracket(super_bracket(a, b), c);

    double worst = 0.0;
    for (const auto& label : probes) {
        const StateVector probe{label};
        StateVector diff = lhs.action(probe);
        if (rhs.on_k_eta != 0.0) {
            StateVector s = b.action(probe);
            s *= Complex{rhs.on_k_eta};
            diff -= s;
        }
        if (rhs.on_j_xi != 0.0) {
            StateVector s = a.action(probe);
            s *= Complex{rhs.on_j_xi};
            diff -= s;
        }
        worst = std::max(worst, diff.max_abs());
    }
    return worst;
}

}  // namespace parafock::alg
