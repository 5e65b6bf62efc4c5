#include <doctest.h>

#include "parafock/fermi_bose.hpp"

using namespace parafock;

TEST_CASE("p=1 oracle: twisted fermion x boson satisfies the triple relations") {
    const osc::OracleReport r = osc::p1_oracle_report(6);
    CHECK(r.triple_residual <= 1e-12);
    CHECK(r.defining_residual <= 1e-14);
}

TEST_CASE("p=1 oracle: intertwiner is unitary and matches all matrix elements") {
    const osc::OracleReport r = osc::p1_oracle_report(8);
    CHECK(r.unitarity_residual <= 1e-12);
    CHECK(r.intertwine_residual <= 1e-12);  // well inside the 1e-9 gate
}

TEST_CASE("oracle labels order correctly") {
    CHECK(osc::FBLabel{0, 0} == osc::FBLabel{0, 0});
    CHECK(osc::FBLabel{0, 1} < osc::FBLabel{1, 0});
    osc::FBState s;
    s.accumulate({1, 2}, 0.5);
    s.accumulate({1, 2}, -0.5);
    CHECK(s.empty());
}
