#include "parafock/defining.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <vector>

namespace parafock::alg {

SparseComplexMatrix matrix_unit5(int i, int j) {
    SparseComplexMatrix m(5, 5);
    m.set(i - 1, j - 1, 1.0);
    return m;
}

GeneratorSextet defining_realization() {
    const double s2 = std::sqrt(2.0);
    auto e = matrix_unit5;
    GeneratorSextet g;
    g.c1p = matrix_operator("c1+", 0, Complex{s2} * (e(1, 3) - e(3, 2)));
    g.c1m = matrix_operator("c1-", 0, Complex{s2} * (e(3, 1) - e(2, 3)));
    g.c2p = matrix_operator("c2+", 1, Complex{s2} * (e(3, 5) + e(4, 3)));
    g.c2m = matrix_operator("c2-", 1, Complex{s2} * (e(3, 4) - e(5, 3)));
    g.h1 = matrix_operator("h1", 0, e(1, 1) - e(2, 2));
    g.h2 = matrix_operator("h2", 0, e(4, 4) - e(5, 5));
    return g;
}

double block_structure_residual(const GeneratorSextet& g) {
    auto diagonal_block = [](int r, int c) {
        const bool r_top = r < 3, c_top = c < 3;
        return r_top == c_top;
    };
    double worst = 0.0;
    for (const GradedOperator* op : {&g.c1p, &g.c1m, &g.c2p, &g.c2m, &g.h1, &g.h2}) {
        for (const auto& [rc, v] : op->matrix->entries()) {
            const bool allowed = (op->grade == 0) == diagonal_block(rc.first, rc.second);
            if (!allowed) worst = std::max(worst, std::abs(v));
        }
    }
    return worst;
}

namespace {

Eigen::VectorXcd flatten(const SparseComplexMatrix& m) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(m.rows() * m.cols());
    for (const auto& [rc, val] : m.entries()) v(rc.first * m.cols() + rc.second) = val;
    return v;
}

}  // namespace

int span_dimension(const GeneratorSextet& g) {
    std::vector<GradedOperator> span = {g.c1p, g.c1m, g.c2p, g.c2m, g.h1, g.h2};
    // Close under super-brackets; the rank stabilizes after a couple of
    // rounds for a finite-dimensional algebra.
    auto rank_of = [](const std::vector<GradedOperator>& ops) {
        Eigen::MatrixXcd a(25, ops.size());
        for (std::size_t i = 0; i < ops.size(); ++i) a.col(Eigen::Index(i)) = flatten(*ops[i].matrix);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
        qr.setThreshold(1e-10);
        return int(qr.rank());
    };

    int rank = rank_of(span);
    for (int round = 0; round < 4; ++round) {
        const std::size_t n = span.size();
        std::vector<GradedOperator> next = span;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                GradedOperator br = super_bracket(span[i], span[j]);
                if (br.matrix->max_abs() > 1e-12) next.push_back(std::move(br));
            }
        const int next_rank = rank_of(next);
        if (next_rank == rank) break;
        rank = next_rank;
        span = std::move(next);
    }
    return rank;
}

namespace {

// The ladder matrices have entries in sqrt(2) * {0, +-1}; dividing by sqrt(2)
// is exact in IEEE arithmetic and leaves integer matrices, so the Cartan
// closures below are evaluated in exact integer arithmetic (residual 0.0, not
// merely rounding-level).
SparseComplexMatrix integer_normalized(const SparseComplexMatrix& m) {
    const double s2 = std::sqrt(2.0);
    SparseComplexMatrix out(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries()) out.set(rc.first, rc.second, v / s2);
    return out;
}

}  // namespace

double cartan_closure_residual_c1(const GeneratorSextet& g) {
    const SparseComplexMatrix a = integer_normalized(*g.c1m.matrix);
    const SparseComplexMatrix b = integer_normalized(*g.c1p.matrix);
    // [c1-, c1+] = 2 (a b - b a) must equal -2 h1.
    return (Complex{2.0} * (a * b - b * a) + Complex{2.0} * (*g.h1.matrix)).max_abs();
}

double cartan_closure_residual_c2(const GeneratorSextet& g) {
    const SparseComplexMatrix a = integer_normalized(*g.c2m.matrix);
    const SparseComplexMatrix b = integer_normalized(*g.c2p.matrix);
    // {c2-, c2+} = 2 (a b + b a) must equal +2 h2.
    return (Complex{2.0} * (a * b + b * a) - Complex{2.0} * (*g.h2.matrix)).max_abs();
}

double super_jacobi_residual(const GeneratorSextet& g) {
    const std::array<const GradedOperator*, 6> gens = {&g.c1p, &g.c1m, &g.c2p,
                                                       &g.c2m, &g.h1,  &g.h2};
    double worst = 0.0;
    for (const auto* a : gens)
        for (const auto* b : gens)
            for (const auto* c : gens) {
                const double sign = (a->grade * b->grade) % 2 == 1 ? -1.0 : 1.0;
                SparseComplexMatrix lhs = *super_bracket(super_bracket(*a, *b), *c).matrix;
                SparseComplexMatrix rhs =
                    *super_bracket(*a, super_bracket(*b, *c)).matrix -
                    Complex{sign} * (*super_bracket(*b, super_bracket(*a, *c)).matrix);
                worst = std::max(worst, (lhs - rhs).max_abs());
            }
    return worst;
}

}  // namespace parafock::alg
