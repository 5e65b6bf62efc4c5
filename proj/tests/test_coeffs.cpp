#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "parafock/coeffs.hpp"

using namespace parafock::rep;

TEST_CASE("parity indicators") {
    CHECK(even_ind(0) == 1);
    CHECK(even_ind(1) == 0);
    CHECK(even_ind(4) == 1);
    CHECK(odd_ind(0) == 0);
    CHECK(odd_ind(3) == 1);
}

TEST_CASE("G1 reference values") {
    CHECK(coeff_g1(4, 0, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(coeff_g1(2, 1, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(coeff_g1(1, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    // Top of the mu12 range: the (p - mu12) factor closes the ladder.
    CHECK(coeff_g1(3, 3, 0) == doctest::Approx(0.0));
    CHECK(coeff_g1(2, 2, 3) == doctest::Approx(0.0));
}

TEST_CASE("G1 cancelled form agrees with the raw quotient when both exist") {
    for (int p : {2, 3, 5})
        for (int mu12 = 1; mu12 <= p; ++mu12) {
            const double raw = std::sqrt(double(mu12) * (mu12 + 1) * (p - mu12) / double(mu12));
            CHECK(coeff_g1(p, mu12, 0) == doctest::Approx(raw).epsilon(1e-14));
        }
}

TEST_CASE("G2 reference values") {
    for (int p = 1; p <= 4; ++p) CHECK(coeff_g2(p, 0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(coeff_g2(1, 1, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(coeff_g2(2, 1, 1) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("coefficients are finite and non-negative over the working range") {
    for (int p = 1; p <= 4; ++p)
        for (int mu22 = 0; mu22 <= 10; ++mu22)
            for (int mu12 = (mu22 == 0 ? 0 : 1); mu12 <= p; ++mu12) {
                const double g1 = coeff_g1(p, mu12, mu22);
                const double g2 = coeff_g2(p, mu12, mu22);
                CHECK(std::isfinite(g1));
                CHECK(std::isfinite(g2));
                CHECK(g1 >= 0.0);
                CHECK(g2 >= 0.0);
            }
}

TEST_CASE("domain violations throw") {
    CHECK_THROWS_AS(coeff_g1(1, 2, 0), std::domain_error);   // negative radicand
    CHECK_THROWS_AS(coeff_g1(2, -1, 0), std::domain_error);
    CHECK_THROWS_AS(coeff_g1(2, 0, -2), std::domain_error);
    CHECK_THROWS_AS(coeff_g2(2, -1, 1), std::domain_error);
}

TEST_CASE("variant names") {
    CHECK(std::string(to_string(CoeffVariant::printed)) == "printed");
    CHECK(std::string(to_string(CoeffVariant::corrected)) == "corrected");
}
