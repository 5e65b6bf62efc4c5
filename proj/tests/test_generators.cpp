#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "parafock/basis.hpp"
#include "parafock/fock.hpp"
#include "parafock/state.hpp"

using namespace parafock::rep;

namespace {

StateVector unit(int mu12, int mu22, int mu11) { return StateVector{BasisLabel{mu12, mu22, mu11}}; }

}  // namespace

TEST_CASE("creation operators on the vacuum") {
    for (int p = 1; p <= 4; ++p) {
        const FockSpace space(p);
        const StateVector vac = space.vacuum();

        const StateVector up2 = space.apply(Gen::c2_plus, vac);
        REQUIRE(up2.size() == 1);
        CHECK(up2.at({1, 0, 0}).real() == doctest::Approx(std::sqrt(double(p))).epsilon(1e-14));

        const StateVector up1 = space.apply(Gen::c1_plus, vac);
        REQUIRE(up1.size() == 1);
        CHECK(up1.at({1, 0, 1}).real() == doctest::Approx(std::sqrt(double(p))).epsilon(1e-14));

        CHECK(space.apply(Gen::c1_minus, vac).empty());
        CHECK(space.apply(Gen::c2_minus, vac).empty());
    }
}

TEST_CASE("annihilation closes the vacuum ladder: c2- c2+ |0> = p |0>") {
    for (int p = 1; p <= 5; ++p) {
        const FockSpace space(p);
        const std::vector<Gen> word = {Gen::c2_minus, Gen::c2_plus};
        const StateVector s = space.apply_word(word, space.vacuum());
        REQUIRE(s.size() == 1);
        CHECK(s.at({0, 0, 0}).real() == doctest::Approx(double(p)).epsilon(1e-14));
    }
}

TEST_CASE("mixed lowering annihilates: c1- c2+ |0> = 0") {
    for (int p = 1; p <= 4; ++p) {
        const FockSpace space(p);
        const std::vector<Gen> word = {Gen::c1_minus, Gen::c2_plus};
        CHECK(space.apply_word(word, space.vacuum()).empty());
    }
}

TEST_CASE("anticommutator {c2-, c2+} acts as 2 h2") {
    const FockSpace space(1);
    const StateVector probe = unit(1, 0, 0);
    StateVector s = space.apply(Gen::c2_minus, space.apply(Gen::c2_plus, probe));
    s += space.apply(Gen::c2_plus, space.apply(Gen::c2_minus, probe));
    REQUIRE(s.size() == 1);
    // 2 h2 eigenvalue = p + 2(mu12 + mu22 - mu11) = 1 + 2 = 3.
    CHECK(s.at({1, 0, 0}).real() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("Cartan eigenvalues are exact on every label (p <= 6, n <= 12)") {
    for (int p = 1; p <= 6; ++p) {
        const FockSpace space(p);
        const FockBasis basis(p, 12);
        for (const auto& label : basis)
            for (int k : {1, 2}) {
                const Gen h = k == 1 ? Gen::h1 : Gen::h2;
                StateVector diff = space.apply(h, StateVector{label});
                diff.accumulate(label, -space.h_eigenvalue(k, label));
                // Integer/half-integer arithmetic: zero floating error allowed.
                CHECK(diff.max_abs() == 0.0);
            }
    }
}

TEST_CASE("Cartan eigenvalue fixtures") {
    const FockSpace s2(2);
    CHECK(s2.h_eigenvalue(1, {1, 0, 0}) == -1.0);
    CHECK(s2.h_eigenvalue(2, {1, 0, 0}) == 2.0);
    const FockSpace s1(1);
    CHECK(s1.h_eigenvalue(1, {0, 0, 0}) == -0.5);
    CHECK(s1.h_eigenvalue(2, {1, 0, 0}) == 1.5);
    CHECK_THROWS_AS(s1.h_eigenvalue(3, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("ladder actions stay inside the admissible label set") {
    for (int p = 1; p <= 4; ++p) {
        const FockSpace space(p);
        const FockBasis basis(p, 12);
        for (const auto& label : basis)
            for (Gen g : {Gen::c1_plus, Gen::c1_minus, Gen::c2_plus, Gen::c2_minus}) {
                // The paraboson pair moves exactly one level; the parafermion
                // pair shuffles within a level (it commutes with H).
                const int step = (g == Gen::c2_plus || g == Gen::c2_minus) ? 1 : 0;
                for (const auto& t : space.terms(g, label)) {
                    CHECK(space.valid(t.target));
                    CHECK(std::abs(t.target.level() - label.level()) == step);
                    CHECK(t.coeff != 0.0);
                }
            }
    }
}

TEST_CASE("raising amplitudes match lowering amplitudes (adjoint pairing)") {
    const FockSpace space(3);
    const FockBasis basis(3, 6);
    for (const auto& label : basis)
        for (int j : {1, 2}) {
            const Gen up = j == 1 ? Gen::c1_plus : Gen::c2_plus;
            const Gen dn = j == 1 ? Gen::c1_minus : Gen::c2_minus;
            for (const auto& t : space.terms(up, label)) {
                // <t|c+|label> must equal <label|c-|t>.
                double back = 0.0;
                for (const auto& u : space.terms(dn, t.target))
                    if (u.target == label) back = u.coeff;
                CHECK(t.coeff == doctest::Approx(back).epsilon(1e-13));
            }
        }
}

TEST_CASE("norm of c1+|0> squares to p") {
    for (int p = 1; p <= 4; ++p) {
        const FockSpace space(p);
        const StateVector s = space.apply(Gen::c1_plus, space.vacuum());
        CHECK(s.norm_sq() == doctest::Approx(double(p)).epsilon(1e-14));
    }
}

TEST_CASE("printed vs corrected variants differ only in the cross terms") {
    const FockSpace corrected(2, CoeffVariant::corrected);
    const FockSpace printed(2, CoeffVariant::printed);

    // theta = 1 source: c1+ has a cross term into (mu12, mu22+1, mu11+1).
    const BasisLabel src{1, 0, 0};
    const StateVector c = corrected.apply(Gen::c1_plus, StateVector{src});
    const StateVector q = printed.apply(Gen::c1_plus, StateVector{src});

    // Direct term agrees...
    CHECK(c.at({2, 0, 1}) == q.at({2, 0, 1}));
    CHECK(c.at({2, 0, 1}).real() == doctest::Approx(1.0).epsilon(1e-14));
    // ...the cross term carries 1/sqrt(2) vs 1/2 of G2 = sqrt(2).
    CHECK(c.at({1, 1, 1}).real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(q.at({1, 1, 1}).real() == doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-14));

    // c2 actions carry no cross prefactor and agree between variants.
    const FockBasis basis(2, 5);
    for (const auto& label : basis)
        for (Gen g : {Gen::c2_plus, Gen::c2_minus}) {
            StateVector diff = corrected.apply(g, StateVector{label});
            diff -= printed.apply(g, StateVector{label});
            CHECK(diff.max_abs() == 0.0);
        }
}

TEST_CASE("vacuum defining conditions at machine precision for p = 1..6") {
    for (int p = 1; p <= 6; ++p) CHECK(vacuum_condition_residual(FockSpace(p)) <= 1e-12);
}

TEST_CASE("word application composes right-to-left") {
    const FockSpace space(1);
    const std::vector<Gen> word = {Gen::c2_minus, Gen::c2_plus};
    // Reversed order annihilates the vacuum outright.
    const std::vector<Gen> reversed = {Gen::c2_plus, Gen::c2_minus};
    CHECK(!space.apply_word(word, space.vacuum()).empty());
    CHECK(space.apply_word(reversed, space.vacuum()).empty());
}

TEST_CASE("FockSpace rejects p < 1") {
    CHECK_THROWS_AS(FockSpace(0), std::invalid_argument);
}
