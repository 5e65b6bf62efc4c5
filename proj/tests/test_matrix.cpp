#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <complex>

#include "parafock/export_json.hpp"
#include "parafock/fock.hpp"
#include "parafock/matrix_rep.hpp"
#include "parafock/sparse_matrix.hpp"

#include <json.hpp>

using namespace parafock;
using alg::Complex;
using alg::SparseComplexMatrix;

TEST_CASE("sparse matrix basics: set/add/prune") {
    SparseComplexMatrix m(3, 3);
    m.set(0, 1, {1.0, 2.0});
    m.add(0, 1, {-1.0, -2.0});
    CHECK(m.nnz() == 0);  // exact cancellation prunes the entry
    m.add(2, 2, 4.0);
    CHECK(m.at(2, 2) == Complex{4.0});
    CHECK(m.at(0, 0) == Complex{0.0});
    CHECK_THROWS_AS(m.set(3, 0, 1.0), std::out_of_range);
    CHECK_THROWS_AS(SparseComplexMatrix(-1, 2), std::invalid_argument);
}

TEST_CASE("sparse matrix adjoint and product") {
    SparseComplexMatrix a(2, 3);
    a.set(0, 2, {0.0, 1.0});
    a.set(1, 0, 2.0);

    const SparseComplexMatrix ad = a.adjoint();
    CHECK(ad.rows() == 3);
    CHECK(ad.cols() == 2);
    CHECK(ad.at(2, 0) == Complex{0.0, -1.0});
    CHECK(ad.at(0, 1) == Complex{2.0});

    SparseComplexMatrix b(3, 2);
    b.set(2, 1, 3.0);
    const SparseComplexMatrix prod = a * b;
    CHECK(prod.rows() == 2);
    CHECK(prod.cols() == 2);
    CHECK(prod.at(0, 1) == Complex{0.0, 3.0});
    CHECK(prod.nnz() == 1);

    SparseComplexMatrix wrong(2, 2);
    CHECK_THROWS_AS(a += wrong, std::invalid_argument);
    CHECK_THROWS_AS(a * wrong, std::invalid_argument);
}

TEST_CASE("max_abs and interior restriction") {
    SparseComplexMatrix m(3, 3);
    m.set(0, 0, 1.0);
    m.set(2, 1, {3.0, 4.0});  // modulus 5, touches boundary row 2
    CHECK(m.max_abs() == doctest::Approx(5.0));
    const std::vector<char> mask = {1, 1, 0};
    CHECK(m.max_abs_interior(mask, mask) == doctest::Approx(1.0));
}

TEST_CASE("matrix_of materializes columns and flags cutoff rows") {
    const rep::FockSpace space(1);
    const rep::FockBasis basis(1, 2);
    const alg::GeneratorSextet g = alg::fock_sextet(space);

    const SparseComplexMatrix m = alg::matrix_of(g.c2p, basis);
    CHECK(m.rows() == 6);
    // Column 0 = c2+ |vacuum> = sqrt(1) |1,0;0> (basis index 2).
    CHECK(m.at(2, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    // Boundary rows are exactly the level-2 labels: indices 4 and 5.
    CHECK(m.boundary_rows() == std::vector<int>{4, 5});

    const std::vector<char> mask = alg::interior_mask(basis);
    CHECK(mask == std::vector<char>{1, 1, 1, 1, 0, 0});
}

TEST_CASE("ladder adjointness on the interior block, both variants") {
    for (auto variant : {rep::CoeffVariant::corrected, rep::CoeffVariant::printed})
        for (int p : {1, 2, 3}) {
            const rep::FockSpace space(p, variant);
            const rep::FockBasis basis(p, 6);
            const alg::GeneratorSextet g = alg::fock_sextet(space);
            // The printed variant breaks the triple relations but not
            // adjointness: the cross prefactor appears symmetrically.
            CHECK(alg::ladder_adjointness_residual(g, basis) <= 1e-12);
        }
}

TEST_CASE("hermiticity helper flags a non-hermitian operator") {
    const rep::FockSpace space(1);
    const rep::FockBasis basis(1, 4);
    const alg::GeneratorSextet g = alg::fock_sextet(space);
    CHECK(alg::hermiticity_residual(g.h1, basis) == 0.0);
    CHECK(alg::hermiticity_residual(g.c2p, basis) > 0.5);  // a pure raiser is not hermitian
}

TEST_CASE("matrix export: golden h1 at p=2, cutoff 1") {
    const rep::FockSpace space(2);
    const rep::FockBasis basis(2, 1);
    const alg::GeneratorSextet g = alg::fock_sextet(space);
    const std::string json = cli::export_matrix_json(alg::matrix_of(g.h1, basis), basis);
    CHECK(json ==
          "{\"schema\":1,\"p\":2,\"cutoff\":1,"
          "\"basis\":[[0,0,0],[1,0,1],[2,0,2],[1,0,0],[2,0,1],[1,1,1],[2,1,2]],"
          "\"entries\":[[0,0,-1,0],[2,2,1,0],[3,3,-1,0],[6,6,1,0]],"
          "\"boundary_rows\":[3,4,5,6]}\n");
}

TEST_CASE("matrix export parses as JSON with the expected schema") {
    const rep::FockSpace space(2);
    const rep::FockBasis basis(2, 3);
    const alg::GeneratorSextet g = alg::fock_sextet(space);
    const alg::SparseComplexMatrix m = alg::matrix_of(g.c2m, basis);

    const auto doc = nlohmann::json::parse(cli::export_matrix_json(m, basis));
    CHECK(doc.at("schema") == 1);
    CHECK(doc.at("p") == 2);
    CHECK(doc.at("cutoff") == 3);
    CHECK(doc.at("basis").size() == basis.size());
    for (const auto& e : doc.at("entries")) {
        REQUIRE(e.size() == 4);
        CHECK(e[0].is_number_integer());
        CHECK(e[2].is_number());
    }
    // Boundary rows are the level-3 labels.
    for (const auto& r : doc.at("boundary_rows"))
        CHECK(basis.label(std::size_t(r.get<int>())).level() == 3);
}
