#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>

#include "parafock/defining.hpp"
#include "parafock/fock.hpp"
#include "parafock/graded.hpp"
#include "parafock/triples.hpp"

using namespace parafock;
using alg::GeneratorSextet;
using alg::GradedOperator;

TEST_CASE("super-bracket picks the anticommutator exactly for odd pairs") {
    const GeneratorSextet g = alg::defining_realization();

    // Odd x odd: {c2-, c2+} = 2 h2.  The generic product multiplies sqrt(2)
    // entries, so the generic path is rounding-level; the exact-arithmetic
    // closure check lives in cartan_closure_residual_*.
    const GradedOperator br_odd = alg::super_bracket(g.c2m, g.c2p);
    CHECK(br_odd.grade == 0);
    CHECK((*br_odd.matrix - rep::Complex{2.0} * (*g.h2.matrix)).max_abs() <= 1e-15);

    // Even x even: [c1-, c1+] = -2 h1.
    const GradedOperator br_even = alg::super_bracket(g.c1m, g.c1p);
    CHECK(br_even.grade == 0);
    CHECK((*br_even.matrix + rep::Complex{2.0} * (*g.h1.matrix)).max_abs() <= 1e-15);

    // Even x odd keeps odd grade.
    CHECK(alg::super_bracket(g.h1, g.c2p).grade == 1);
}

TEST_CASE("defining matrices have the advertised entries") {
    const GeneratorSextet g = alg::defining_realization();
    const double s2 = std::sqrt(2.0);
    CHECK(g.c1p.matrix->at(0, 2) == rep::Complex{s2});
    CHECK(g.c1p.matrix->at(2, 1) == rep::Complex{-s2});
    CHECK(g.c2p.matrix->at(2, 4) == rep::Complex{s2});
    CHECK(g.c2p.matrix->at(3, 2) == rep::Complex{s2});
    CHECK(g.c2m.matrix->at(2, 3) == rep::Complex{s2});
    CHECK(g.c2m.matrix->at(4, 2) == rep::Complex{-s2});
    CHECK(g.h1.matrix->at(0, 0) == rep::Complex{1.0});
    CHECK(g.h1.matrix->at(1, 1) == rep::Complex{-1.0});
    CHECK(g.h2.matrix->at(3, 3) == rep::Complex{1.0});
    CHECK(g.h2.matrix->at(4, 4) == rep::Complex{-1.0});
    CHECK(g.c1p.matrix->nnz() == 2);
}

TEST_CASE("defining realization satisfies all 64 triple instances exactly") {
    const GeneratorSextet g = alg::defining_realization();
    for (const auto& t : alg::all_triple_instances())
        CHECK(alg::triple_residual_matrix(g, t) <= 1e-14);
}

TEST_CASE("defining realization closes on the Cartan elements") {
    const GeneratorSextet g = alg::defining_realization();
    CHECK(alg::cartan_closure_residual_c1(g) == 0.0);
    CHECK(alg::cartan_closure_residual_c2(g) == 0.0);
}

TEST_CASE("graded block structure holds exactly") {
    CHECK(alg::block_structure_residual(alg::defining_realization()) == 0.0);
}

TEST_CASE("generators span a 12-dimensional superalgebra") {
    CHECK(alg::span_dimension(alg::defining_realization()) == 12);
}

TEST_CASE("super-Jacobi identity on all generator triples") {
    CHECK(alg::super_jacobi_residual(alg::defining_realization()) <= 1e-13);
}

TEST_CASE("triple right-hand sides: hand-worked instances") {
    // [[ [[c1+, c1+]], c1- ]] = -2 c1+ + 2 c1+ = 0.
    const alg::TripleRhs r1 = alg::triple_rhs({1, 1, 1, +1, +1, -1});
    CHECK(r1.on_k_eta == -2.0);
    CHECK(r1.on_j_xi == 2.0);

    // [[ {c2+, c2+}, c2- ]] = -4 c2+ (the odd family picks up eps factors).
    const alg::TripleRhs r2 = alg::triple_rhs({2, 2, 2, +1, +1, -1});
    CHECK(r2.on_k_eta == -2.0);
    CHECK(r2.on_j_xi == -2.0);

    // Mixed families: [[ [[c1+, c2+]], c1- ]] = -2 c2+.
    const alg::TripleRhs r3 = alg::triple_rhs({1, 2, 1, +1, +1, -1});
    CHECK(r3.on_k_eta == -2.0);
    CHECK(r3.on_j_xi == 0.0);

    // No delta matches: zero right-hand side.
    const alg::TripleRhs r4 = alg::triple_rhs({1, 2, 1, +1, +1, +1});
    CHECK(r4.on_k_eta == 0.0);
    CHECK(r4.on_j_xi == 0.0);
}

TEST_CASE("instance ids are stable") {
    CHECK(alg::instance_id({1, 2, 1, +1, -1, +1}) == "triple(1,2,1;+,-,+)");
    CHECK(alg::all_triple_instances().size() == 64);
}

TEST_CASE("Fock realization satisfies the triple relations (corrected coefficients)") {
    for (int p : {1, 2}) {
        const rep::FockSpace space(p);
        const rep::FockBasis probes(p, 8);
        const GeneratorSextet g = alg::fock_sextet(space);
        for (const auto& t : alg::all_triple_instances())
            CHECK(alg::triple_residual_action(g, t, probes) <= 1e-10);
    }
}

TEST_CASE("as-printed coefficients break the triple relations (documented)") {
    const rep::FockSpace space(2, rep::CoeffVariant::printed);
    const rep::FockBasis probes(2, 6);
    const GeneratorSextet g = alg::fock_sextet(space);
    int failures = 0;
    double worst = 0.0;
    for (const auto& t : alg::all_triple_instances()) {
        const double r = alg::triple_residual_action(g, t, probes);
        if (r > 1e-9) ++failures;
        worst = std::max(worst, r);
    }
    // Frozen from the independent sweep: 44 of 64 instances fail at p = 2,
    // with order-one residuals.  This is the documented reason the corrected
    // variant is the default.
    CHECK(failures == 44);
    CHECK(worst > 1.0);
}

TEST_CASE("Fock Cartan brackets close onto h1 and h2") {
    const rep::FockSpace space(2);
    const rep::FockBasis probes(2, 6);
    const GeneratorSextet g = alg::fock_sextet(space);

    const GradedOperator lhs1 = alg::super_bracket(g.c1m, g.c1p);
    CHECK(alg::action_residual(lhs1, rep::Complex{-2.0} * g.h1, probes) <= 1e-12);

    const GradedOperator lhs2 = alg::super_bracket(g.c2m, g.c2p);
    CHECK(alg::action_residual(lhs2, rep::Complex{2.0} * g.h2, probes) <= 1e-12);
}

TEST_CASE("operator arithmetic guards") {
    const GeneratorSextet g = alg::defining_realization();
    CHECK_THROWS_AS(alg::sum(g.c1p, g.c2p), std::invalid_argument);  // grade mismatch

    const rep::FockSpace space(1);
    const GradedOperator action_only = alg::fock_generator(space, rep::Gen::c1_plus);
    // No shared realization between a matrix-only and an action-only operator.
    CHECK_THROWS_AS(alg::product(action_only, g.c1m), std::invalid_argument);
}

TEST_CASE("fock_sextet carries the right grades and names") {
    const rep::FockSpace space(1);
    const GeneratorSextet g = alg::fock_sextet(space);
    CHECK(g.c1p.grade == 0);
    CHECK(g.c2p.grade == 1);
    CHECK(g.c2m.grade == 1);
    CHECK(g.h1.grade == 0);
    CHECK(g.c1p.name == "c1+");
    CHECK(g.ladder(2, -1).name == "c2-");
    CHECK_THROWS_AS(g.ladder(3, 1), std::invalid_argument);
}
