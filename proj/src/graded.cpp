#include "parafock/graded.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace parafock::alg {

GradedOperator fock_generator(const rep::FockSpace& space, rep::Gen g) {
    return GradedOperator{
        rep::name_of(g), rep::grade_of(g),
        [space, g](const StateVector& s) { return space.apply(g, s); },
        std::nullopt};
}

GradedOperator matrix_operator(std::string name, int grade, SparseComplexMatrix m) {
    return GradedOperator{std::move(name), grade, nullptr, std::move(m)};
}

GradedOperator product(const GradedOperator& a, const GradedOperator& b) {
    GradedOperator out;
    out.name = a.name + "*" + b.name;
    out.grade = (a.grade + b.grade) % 2;
    if (a.has_action() && b.has_action())
        out.action = [fa = a.action, fb = b.action](const StateVector& s) { return fa(fb(s)); };
    if (a.has_matrix() && b.has_matrix()) out.matrix = (*a.matrix) * (*b.matrix);
    if (!out.has_action() && !out.has_matrix())
        throw std::invalid_argument("product: operands share no realization");
    return out;
}

namespace {

GradedOperator bracket_impl(const GradedOperator& a, const GradedOperator& b, double sign,
                            const std::string& name, int grade) {
    GradedOperator out;
    out.name = name;
    out.grade = grade;
    if (a.has_action() && b.has_action())
        out.action = [fa = a.action, fb = b.action, sign](const StateVector& s) {
            StateVector lhs = fa(fb(s));
            lhs -= rep::Complex{sign} * fb(fa(s));
            return lhs;
        };
    if (a.has_matrix() && b.has_matrix())
        out.matrix = (*a.matrix) * (*b.matrix) - rep::Complex{sign} * ((*b.matrix) * (*a.matrix));
    if (!out.has_action() && !out.has_matrix())
        throw std::invalid_argument("bracket: operands share no realization");
    return out;
}

}  // namespace

GradedOperator super_bracket(const GradedOperator& a, const GradedOperator& b) {
    const bool anti = (a.grade == 1 && b.grade == 1);
    const std::string name = (anti ? "{" + a.name + "," + b.name + "}"
                                   : "[" + a.name + "," + b.name + "]");
    return bracket_impl(a, b, anti ? -1.0 : 1.0, name, (a.grade + b.grade) % 2);
}

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) {
    return bracket_impl(a, b, 1.0, "[" + a.name + "," + b.name + "]", (a.grade + b.grade) % 2);
}

GradedOperator anticommutator(const GradedOperator& a, const GradedOperator& b) {
    return bracket_impl(a, b, -1.0, "{" + a.name + "," + b.name + "}", (a.grade + b.grade) % 2);
}

GradedOperator scale(rep::Complex c, const GradedOperator& a) {
    GradedOperator out;
    out.name = "(" + a.name + ")";
    out.grade = a.grade;
    if (a.has_action())
        out.action = [c, fa = a.action](const StateVector& s) {
            StateVector r = fa(s);
            r *= c;
            return r;
        };
    if (a.has_matrix()) out.matrix = c * (*a.matrix);
    return out;
}

namespace {

GradedOperator combine(const GradedOperator& a, const GradedOperator& b, double sign,
                       const char* opname) {
    if (a.grade != b.grade)
        throw std::invalid_argument(std::string("GradedOperator ") + opname +
                                    ": grade mismatch (" + a.name + " vs " + b.name + ")");
    GradedOperator out;
    out.name = a.name + (sign > 0 ? "+" : "-") + b.name;
    out.grade = a.grade;
    if (a.has_action() && b.has_action())
        out.action = [fa = a.action, fb = b.action, sign](const StateVector& s) {
            StateVector r = fa(s);
            StateVector t = fb(s);
            t *= rep::Complex{sign};
            r += t;
            return r;
        };
    if (a.has_matrix() && b.has_matrix())
        out.matrix = sign > 0 ? (*a.matrix) + (*b.matrix) : (*a.matrix) - (*b.matrix);
    if (!out.has_action() && !out.has_matrix())
        throw std::invalid_argument("GradedOperator sum: operands share no realization");
    return out;
}

}  // namespace

GradedOperator sum(const GradedOperator& a, const GradedOperator& b) {
    return combine(a, b, 1.0, "sum");
}

GradedOperator difference(const GradedOperator& a, const GradedOperator& b) {
    return combine(a, b, -1.0, "difference");
}

const GradedOperator& GeneratorSextet::ladder(int j, int sign) const {
    if (j == 1) return sign > 0 ? c1p : c1m;
    if (j == 2) return sign > 0 ? c2p : c2m;
    throw std::invalid_argument("GeneratorSextet::ladder: j must be 1 or 2");
}

const GradedOperator& GeneratorSextet::generator(rep::Gen g) const {
    switch (g) {
        case rep::Gen::c1_plus: return c1p;
        case rep::Gen::c1_minus: return c1m;
        case rep::Gen::c2_plus: return c2p;
        case rep::Gen::c2_minus: return c2m;
        case rep::Gen::h1: return h1;
        case rep::Gen::h2: return h2;
    }
    throw std::invalid_argument("GeneratorSextet::generator: bad generator");
}

GeneratorSextet fock_sextet(const rep::FockSpace& space) {
    return GeneratorSextet{fock_generator(space, rep::Gen::c1_plus),
                           fock_generator(space, rep::Gen::c1_minus),
                           fock_generator(space, rep::Gen::c2_plus),
                           fock_generator(space, rep::Gen::c2_minus),
                           fock_generator(space, rep::Gen::h1),
                           fock_generator(space, rep::Gen::h2)};
}

double action_residual(const GradedOperator& a, const GradedOperator& b,
                       const rep::FockBasis& probes) {
    double worst = 0.0;
    for (const auto& label : probes) {
        const StateVector probe{label};
        StateVector diff = a.action(probe);
        diff -= b.action(probe);
        worst = std::max(worst, diff.max_abs());
    }
    return worst;
}

double action_residual_zero(const GradedOperator& a, const rep::FockBasis& probes) {
    double worst = 0.0;
    for (const auto& label : probes)
        worst = std::max(worst, a.action(StateVector{label}).max_abs());
    return worst;
}

}  // namespace parafock::alg
