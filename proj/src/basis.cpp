#include "parafock/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "parafock/label.hpp"

namespace parafock::rep {

bool label_valid(int p, const BasisLabel& m) {
    if (p < 1) return false;
    if (m.mu22 < 0 || m.mu11 < 0) return false;
    const int theta = m.mu12 - m.mu11;
    if (theta != 0 && theta != 1) return false;
    if (m.mu12 > p) return false;
    if (m.mu22 == 0) return m.mu12 >= 0;
    return m.mu12 >= 1;
}

std::string to_string(const BasisLabel& m) {
    return "(" + std::to_string(m.mu12) + "," + std::to_string(m.mu22) + ";" +
           std::to_string(m.mu11) + ")";
}

FockBasis::FockBasis(int p, int cutoff) : p_(p), cutoff_(cutoff) {
    if (p < 1) throw std::invalid_argument("FockBasis: order p must be >= 1");
    if (cutoff < 0) throw std::invalid_argument("FockBasis: cutoff must be >= 0");

    // Level 0: theta = 0, mu22 = 0, mu12 = 0..p.
    // Level n >= 1: the theta = 1 family (mu22 = n-1) and the theta = 0
    // family (mu22 = n), each with mu12 = 1..p.
    for (int n = 0; n <= cutoff; ++n) {
        std::vector<BasisLabel> level;
        if (n == 0) {
            for (int mu12 = 0; mu12 <= p; ++mu12) level.push_back({mu12, 0, mu12});
        } else {
            for (int mu12 = 1; mu12 <= p; ++mu12) level.push_back({mu12, n - 1, mu12 - 1});
            for (int mu12 = 1; mu12 <= p; ++mu12) level.push_back({mu12, n, mu12});
        }
        std::sort(level.begin(), level.end(), LabelOrder{});
        for (const auto& m : level) {
            index_.emplace(m, labels_.size());
            labels_.push_back(m);
        }
    }
}

std::optional<std::size_t> FockBasis::index_of(const BasisLabel& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace parafock::rep
