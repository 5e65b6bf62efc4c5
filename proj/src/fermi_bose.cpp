#include "parafock/fermi_bose.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "parafock/fock.hpp"
#include "parafock/triples.hpp"

namespace parafock::osc {

namespace {

using rep::Complex;
using rep::Gen;

// Action of the twisted fermion (x) boson generators on one oracle label.
void fb_emit(Gen g, const FBLabel& m, std::vector<std::pair<FBLabel, double>>& out) {
    const double twist = m.f == 0 ? 1.0 : -1.0;  // (-1)^F
    switch (g) {
        case Gen::c1_plus:
            if (m.f == 0) out.push_back({{1, m.nb}, 1.0});
            break;
        case Gen::c1_minus:
            if (m.f == 1) out.push_back({{0, m.nb}, 1.0});
            break;
        case Gen::c2_plus:
            out.push_back({{m.f, m.nb + 1}, twist * std::sqrt(double(m.nb + 1))});
            break;
        case Gen::c2_minus:
            if (m.nb > 0) out.push_back({{m.f, m.nb - 1}, twist * std::sqrt(double(m.nb))});
            break;
        case Gen::h1:
            out.push_back({m, double(m.f) - 0.5});
            break;
        case Gen::h2:
            out.push_back({m, double(m.nb) + 0.5});
            break;
    }
}

FBState fb_apply(Gen g, const FBState& s) {
    FBState out;
    std::vector<std::pair<FBLabel, double>> terms;
    for (const auto& [label, amp] : s) {
        terms.clear();
        fb_emit(g, label, terms);
        for (const auto& [target, c] : terms) out.accumulate(target, amp * c);
    }
    return out;
}

Gen ladder_gen(int j, int sign) {
    if (j == 1) return sign > 0 ? Gen::c1_plus : Gen::c1_minus;
    return sign > 0 ? Gen::c2_plus : Gen::c2_minus;
}

// [[ [[A,B]], C ]] s = ABCs - s1 BACs - s2 CABs + s1 s2 CBAs with
// s1 = (-1)^{|A||B|}, s2 = (-1)^{(|A|+|B|)|C|}.
FBState fb_double_bracket(Gen a, Gen b, Gen c, const FBState& s) {
    const double s1 = (rep::grade_of(a) * rep::grade_of(b)) % 2 == 1 ? -1.0 : 1.0;
    const double s2 =
        ((rep::grade_of(a) + rep::grade_of(b)) * rep::grade_of(c)) % 2 == 1 ? -1.0 : 1.0;
    auto word = [&s](Gen x, Gen y, Gen z) { return fb_apply(x, fb_apply(y, fb_apply(z, s))); };
    FBState out = word(a, b, c);
    FBState t = word(b, a, c);
    t *= Complex{-s1};
    out += t;
    t = word(c, a, b);
    t *= Complex{-s2};
    out += t;
    t = word(c, b, a);
    t *= Complex{s1 * s2};
    out += t;
    return out;
}

double fb_triple_residual(const alg::TripleInstance& t, int cutoff) {
    const auto rhs = alg::triple_rhs(t);
    const Gen a = ladder_gen(t.j, t.xi);
    const Gen b = ladder_gen(t.k, t.eta);
    const Gen c = ladder_gen(t.l, t.eps);
    double worst = 0.0;
    for (int f = 0; f <= 1; ++f)
        for (int nb = 0; nb <= cutoff; ++nb) {
            const FBState probe{FBLabel{f, nb}};
            FBState diff = fb_double_bracket(a, b, c, probe);
            if (rhs.on_k_eta != 0.0) {
                FBState s = fb_apply(b, probe);
                s *= Complex{-rhs.on_k_eta};
                diff += s;
            }
            if (rhs.on_j_xi != 0.0) {
                FBState s = fb_apply(a, probe);
                s *= Complex{-rhs.on_j_xi};
                diff += s;
            }
            worst = std::max(worst, diff.max_abs());
        }
    return worst;
}

double fb_defining_residual() {
    const FBState vac{FBLabel{0, 0}};
    double worst = std::abs(inner_product(vac, vac) - 1.0);
    const Gen minus[2] = {Gen::c1_minus, Gen::c2_minus};
    const Gen plus[2] = {Gen::c1_plus, Gen::c2_plus};
    for (Gen g : minus) worst = std::max(worst, fb_apply(g, vac).max_abs());
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            const double sign =
                (rep::grade_of(minus[j]) == 1 && rep::grade_of(plus[k]) == 1) ? -1.0 : 1.0;
            FBState lhs = fb_apply(minus[j], fb_apply(plus[k], vac));
            FBState rev = fb_apply(plus[k], fb_apply(minus[j], vac));
            rev *= Complex{sign};
            lhs -= rev;
            if (j == k) lhs.accumulate(FBLabel{0, 0}, -1.0);  // p = 1
            worst = std::max(worst, lhs.max_abs());
        }
    return worst;
}

}  // namespace

OracleReport p1_oracle_report(int cutoff, rep::CoeffVariant variant) {
    OracleReport report;

    for (const auto& t : alg::all_triple_instances())
        report.triple_residual = std::max(report.triple_residual, fb_triple_residual(t, cutoff));
    report.defining_residual = fb_defining_residual();

    // Level-preserving intertwiner: for each oracle label (f, nb) apply the
    // word (c1+)^f (c2+)^nb to the vacuum on both sides and normalize.  The
    // Fock image is a single basis vector, so this is the relabeling
    //   (0,0) -> (0,0;0), (1,0) -> (1,0;1),
    //   (0,nb) -> (1,nb-1;0), (1,nb) -> (1,nb;1)   for nb >= 1,
    // with matching phases.
    const rep::FockSpace space(1, variant);
    struct Column {
        FBLabel fb;
        rep::StateVector fock;
        FBState oracle;
    };
    std::vector<Column> cols;
    for (int nb = 0; nb <= cutoff + 1; ++nb)
        for (int f = 0; f <= 1; ++f) {
            std::vector<Gen> word(std::size_t(f), Gen::c1_plus);
            word.insert(word.end(), std::size_t(nb), Gen::c2_plus);

            rep::StateVector fock = space.apply_word(word, space.vacuum());
            FBState oracle{FBLabel{0, 0}};
            for (auto it = word.rbegin(); it != word.rend(); ++it) oracle = fb_apply(*it, oracle);

            const double nf = fock.norm(), no = oracle.norm();
            if (nf == 0.0 || no == 0.0) continue;
            fock *= Complex{1.0 / nf};
            oracle *= Complex{1.0 / no};
            cols.push_back({FBLabel{f, nb}, std::move(fock), std::move(oracle)});
        }

    // Unitarity: the oracle columns must reproduce the Fock Gram matrix
    // (both bases are orthonormal, so both Grams must be the identity).
    for (const auto& x : cols)
        for (const auto& y : cols) {
            const Complex gram_f = inner_product(x.fock, y.fock);
            const Complex gram_o = inner_product(x.oracle, y.oracle);
            const double expected = x.fb == y.fb ? 1.0 : 0.0;
            report.unitarity_residual = std::max(report.unitarity_residual,
                                                 std::abs(gram_o - expected));
            report.unitarity_residual = std::max(report.unitarity_residual,
                                                 std::abs(gram_f - expected));
        }

    // Matrix elements of every generator agree between the two realizations.
    const Gen gens[6] = {Gen::c1_plus, Gen::c1_minus, Gen::c2_plus,
                         Gen::c2_minus, Gen::h1, Gen::h2};
    for (Gen g : gens)
        for (const auto& x : cols) {
            if (x.fb.nb > cutoff) continue;
            const rep::StateVector gf = space.apply(g, x.fock);
            const FBState go = fb_apply(g, x.oracle);
            for (const auto& y : cols) {
                const Complex me_f = inner_product(y.fock, gf);
                const Complex me_o = inner_product(y.oracle, go);
                report.intertwine_residual =
                    std::max(report.intertwine_residual, std::abs(me_f - me_o));
            }
        }
    return report;
}

}  // namespace parafock::osc
