#include "parafock/fock.hpp"

#include <cmath>
#include <stdexcept>

namespace parafock::rep {

int grade_of(Gen g) {
    switch (g) {
        case Gen::c2_plus:
        case Gen::c2_minus:
            return 1;
        default:
            return 0;
    }
}

const char* name_of(Gen g) {
    switch (g) {
        case Gen::c1_plus: return "c1+";
        case Gen::c1_minus: return "c1-";
        case Gen::c2_plus: return "c2+";
        case Gen::c2_minus: return "c2-";
        case Gen::h1: return "h1";
        case Gen::h2: return "h2";
    }
    return "?";
}

FockSpace::FockSpace(int p, CoeffVariant variant) : p_(p), variant_(variant) {
    if (p < 1) throw std::invalid_argument("FockSpace: order p must be >= 1");
}

double FockSpace::h_eigenvalue(int k, const BasisLabel& m) const {
    if (k == 1) return 0.5 * double(-p_ + 2 * m.mu11);
    if (k == 2) return 0.5 * double(p_ + 2 * (m.mu12 + m.mu22 - m.mu11));
    throw std::invalid_argument("h_eigenvalue: k must be 1 or 2");
}

double FockSpace::cross_pref(int x) const {
    return variant_ == CoeffVariant::corrected ? 1.0 / std::sqrt(double(x)) : 1.0 / double(x);
}

std::vector<Term> FockSpace::terms(Gen g, const BasisLabel& m) const {
    std::vector<Term> out;
    const int mu12 = m.mu12, mu22 = m.mu22, mu11 = m.mu11;
    const int theta = m.mu12 - m.mu11;
    const int sgn_theta = theta == 0 ? 1 : -1;  // (-1)^theta

    auto emit = [&](const BasisLabel& target, auto&& coeff_fn) {
        // Admissibility is decided before the coefficient is touched.
        if (!valid(target)) return;
        const double c = coeff_fn();
        if (c != 0.0) out.push_back({target, c});
    };

    switch (g) {
        case Gen::c1_plus:
            emit({mu12 + 1, mu22, mu11 + 1}, [&] {
                const double pref =
                    theta == 0 ? 1.0
                               : std::sqrt(double(mu12 + mu22) / double(mu12 + mu22 + 1));
                return pref * coeff_g1(p_, mu12, mu22);
            });
            if (theta == 1)
                emit({mu12, mu22 + 1, mu11 + 1}, [&] {
                    return -cross_pref(mu12 + mu22 + 1) * coeff_g2(p_, mu12, mu22);
                });
            break;

        case Gen::c1_minus:
            emit({mu12 - 1, mu22, mu11 - 1}, [&] {
                const double pref =
                    theta == 0 ? 1.0
                               : std::sqrt(double(mu12 + mu22 - 1) / double(mu12 + mu22));
                return pref * coeff_g1(p_, mu12 - 1, mu22);
            });
            if (theta == 0)
                emit({mu12, mu22 - 1, mu11 - 1}, [&] {
                    return -cross_pref(mu12 + mu22) * coeff_g2(p_, mu12, mu22 - 1);
                });
            break;

        case Gen::c2_plus:
            if (theta == 0)
                emit({mu12 + 1, mu22, mu11}, [&] {
                    return std::sqrt(1.0 / double(mu12 + mu22 + 1)) * coeff_g1(p_, mu12, mu22);
                });
            emit({mu12, mu22 + 1, mu11}, [&] {
                return sgn_theta * std::sqrt(double(mu12 + mu22) / double(mu11 + mu22 + 1)) *
                       coeff_g2(p_, mu12, mu22);
            });
            break;

        case Gen::c2_minus:
            if (theta == 1)
                emit({mu12 - 1, mu22, mu11}, [&] {
                    return std::sqrt(1.0 / double(mu12 + mu22)) * coeff_g1(p_, mu12 - 1, mu22);
                });
            emit({mu12, mu22 - 1, mu11}, [&] {
                return sgn_theta * std::sqrt(double(mu12 + mu22 - 1) / double(mu11 + mu22)) *
                       coeff_g2(p_, mu12, mu22 - 1);
            });
            break;

        case Gen::h1:
            out.push_back({m, h_eigenvalue(1, m)});
            break;
        case Gen::h2:
            out.push_back({m, h_eigenvalue(2, m)});
            break;
    }
    return out;
}

StateVector FockSpace::apply(Gen g, const StateVector& s) const {
    StateVector out;
    for (const auto& [label, amp] : s)
        for (const auto& t : terms(g, label)) out.accumulate(t.target, amp * t.coeff);
    return out;
}

StateVector FockSpace::apply_word(std::span<const Gen> word, const StateVector& s) const {
    StateVector cur = s;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply(*it, cur);
    return cur;
}

double vacuum_condition_residual(const FockSpace& space) {
    const StateVector vac = space.vacuum();
    double worst = std::abs(inner_product(vac, vac) - 1.0);

    const Gen minus[2] = {Gen::c1_minus, Gen::c2_minus};
    const Gen plus[2] = {Gen::c1_plus, Gen::c2_plus};
    for (int j = 0; j < 2; ++j)
        worst = std::max(worst, space.apply(minus[j], vac).max_abs());

    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            // [[c_j^-, c_k^+]]: anticommutator iff both odd (j = k = paraboson).
            const double sign = (grade_of(minus[j]) == 1 && grade_of(plus[k]) == 1) ? -1.0 : 1.0;
            StateVector lhs = space.apply(minus[j], space.apply(plus[k], vac));
            StateVector rev = space.apply(plus[k], space.apply(minus[j], vac));
            rev *= Complex{sign};
            lhs -= rev;
            if (j == k) lhs.accumulate(BasisLabel{0, 0, 0}, -double(space.order()));
            worst = std::max(worst, lhs.max_abs());
        }
    return worst;
}

}  // namespace parafock::rep
