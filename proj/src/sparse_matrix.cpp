#include "parafock/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace parafock::alg {

SparseComplexMatrix::SparseComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("SparseComplexMatrix: negative dimension");
}

void SparseComplexMatrix::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseComplexMatrix: index out of range");
}

void SparseComplexMatrix::set(int r, int c, Complex v) {
    check_index(r, c);
    if (v == 0.0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseComplexMatrix::add(int r, int c, Complex v) {
    check_index(r, c);
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0.0) entries_.erase(it);
    } else if (v == 0.0) {
        entries_.erase(it);
    }
}

Complex SparseComplexMatrix::at(int r, int c) const {
    check_index(r, c);
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Complex{0.0} : it->second;
}

void SparseComplexMatrix::set_boundary_rows(std::vector<int> rows) {
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    boundary_rows_ = std::move(rows);
}

SparseComplexMatrix SparseComplexMatrix::adjoint() const {
    SparseComplexMatrix out(cols_, rows_);
    for (const auto& [rc, v] : entries_) out.set(rc.second, rc.first, std::conj(v));
    return out;
}

SparseComplexMatrix& SparseComplexMatrix::operator+=(const SparseComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("SparseComplexMatrix: shape mismatch in +=");
    for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, v);
    return *this;
}

SparseComplexMatrix& SparseComplexMatrix::operator-=(const SparseComplexMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("SparseComplexMatrix: shape mismatch in -=");
    for (const auto& [rc, v] : o.entries_) add(rc.first, rc.second, -v);
    return *this;
}

SparseComplexMatrix& SparseComplexMatrix::operator*=(Complex c) {
    if (c == 0.0) {
        entries_.clear();
        return *this;
    }
    for (auto& [rc, v] : entries_) v *= c;
    return *this;
}

SparseComplexMatrix operator*(const SparseComplexMatrix& a, const SparseComplexMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("SparseComplexMatrix: shape mismatch in *");
    // Column index of b's entries, for cache-friendly sparse products.
    std::map<int, std::vector<std::pair<int, Complex>>> b_by_row;
    for (const auto& [rc, v] : b.entries_) b_by_row[rc.first].emplace_back(rc.second, v);

    SparseComplexMatrix out(a.rows_, b.cols_);
    for (const auto& [rc, va] : a.entries_) {
        auto it = b_by_row.find(rc.second);
        if (it == b_by_row.end()) continue;
        for (const auto& [c, vb] : it->second) out.add(rc.first, c, va * vb);
    }
    return out;
}

double SparseComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& [rc, v] : entries_) m = std::max(m, std::abs(v));
    return m;
}

double SparseComplexMatrix::max_abs_interior(const std::vector<char>& row_mask,
                                             const std::vector<char>& col_mask) const {
    double m = 0.0;
    for (const auto& [rc, v] : entries_) {
        const auto [r, c] = rc;
        if (r < int(row_mask.size()) && c < int(col_mask.size()) && row_mask[r] && col_mask[c])
            m = std::max(m, std::abs(v));
    }
    return m;
}

}  // namespace parafock::alg
