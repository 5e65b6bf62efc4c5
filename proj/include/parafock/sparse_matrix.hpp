#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace parafock::alg {

using Complex = std::complex<double>;

// Sparse complex matrix with deterministic (row-major) entry order and an
// optional list of truncation-affected rows.  Rows flagged as boundary
// correspond to basis labels sitting exactly at the truncation cutoff; any
// entry touching them may be missing amplitude that leaked past the cutoff.
class SparseComplexMatrix {
public:
    using index_pair = std::pair<int, int>;
    using entry_map = std::map<index_pair, Complex>;

    SparseComplexMatrix() = default;
    SparseComplexMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }

    void set(int r, int c, Complex v);
    void add(int r, int c, Complex v);
    Complex at(int r, int c) const;

    const entry_map& entries() const { return entries_; }

    const std::vector<int>& boundary_rows() const { return boundary_rows_; }
    void set_boundary_rows(std::vector<int> rows);

    SparseComplexMatrix adjoint() const;

    SparseComplexMatrix& operator+=(const SparseComplexMatrix& o);
    SparseComplexMatrix& operator-=(const SparseComplexMatrix& o);
    SparseComplexMatrix& operator*=(Complex c);

    friend SparseComplexMatrix operator+(SparseComplexMatrix a, const SparseComplexMatrix& b) {
        return a += b;
    }
    friend SparseComplexMatrix operator-(SparseComplexMatrix a, const SparseComplexMatrix& b) {
        return a -= b;
    }
    friend SparseComplexMatrix operator*(Complex c, SparseComplexMatrix m) { return m *= c; }

    // Matrix product; boundary flags do not propagate (the caller re-derives
    // them from the basis when they matter).
    friend SparseComplexMatrix operator*(const SparseComplexMatrix& a,
                                         const SparseComplexMatrix& b);

    double max_abs() const;

    // Max modulus over entries whose row and column are both interior
    // (mask[i] != 0).  mask.size() must cover both dimensions used.
    double max_abs_interior(const std::vector<char>& row_mask,
                            const std::vector<char>& col_mask) const;

private:
    int rows_ = 0, cols_ = 0;
    entry_map entries_;
    std::vector<int> boundary_rows_;

    void check_index(int r, int c) const;
};

}  // namespace parafock::alg
