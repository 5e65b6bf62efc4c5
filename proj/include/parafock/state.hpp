#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>

#include "parafock/label.hpp"

namespace parafock::rep {

using Complex = std::complex<double>;

// Sparse vector over an ordered label type.  Amplitudes that cancel exactly
// are pruned so emptiness means the zero vector.
template <class Label>
class SparseState {
public:
    using map_type = std::map<Label, Complex>;

    SparseState() = default;
    explicit SparseState(const Label& l, Complex amp = 1.0) { accumulate(l, amp); }

    void accumulate(const Label& l, Complex amp) {
        if (amp == 0.0) return;
        auto [it, inserted] = amps_.try_emplace(l, amp);
        if (!inserted) {
            it->second += amp;
            if (it->second == 0.0) amps_.erase(it);
        }
    }

    Complex at(const Label& l) const {
        auto it = amps_.find(l);
        return it == amps_.end() ? Complex{0.0} : it->second;
    }

    bool empty() const { return amps_.empty(); }
    std::size_t size() const { return amps_.size(); }

    auto begin() const { return amps_.begin(); }
    auto end() const { return amps_.end(); }

    SparseState& operator+=(const SparseState& o) {
        for (const auto& [l, a] : o.amps_) accumulate(l, a);
        return *this;
    }
    SparseState& operator-=(const SparseState& o) {
        for (const auto& [l, a] : o.amps_) accumulate(l, -a);
        return *this;
    }
    SparseState& operator*=(Complex c) {
        if (c == 0.0) {
            amps_.clear();
            return *this;
        }
        for (auto& [l, a] : amps_) a *= c;
        return *this;
    }

    friend SparseState operator+(SparseState a, const SparseState& b) { return a += b; }
    friend SparseState operator-(SparseState a, const SparseState& b) { return a -= b; }
    friend SparseState operator*(Complex c, SparseState s) { return s *= c; }

    double norm_sq() const {
        double s = 0.0;
        for (const auto& [l, a] : amps_) s += std::norm(a);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    // Largest amplitude modulus; the per-amplitude residual of an identity is
    // the max_abs of the difference state.
    double max_abs() const {
        double m = 0.0;
        for (const auto& [l, a] : amps_) m = std::max(m, std::abs(a));
        return m;
    }

private:
    map_type amps_;
};

// Hermitian inner product <a|b>, antilinear in the first slot.
template <class Label>
Complex inner_product(const SparseState<Label>& a, const SparseState<Label>& b) {
    Complex s = 0.0;
    for (const auto& [l, amp] : a) s += std::conj(amp) * b.at(l);
    return s;
}

using StateVector = SparseState<BasisLabel>;

}  // namespace parafock::rep
