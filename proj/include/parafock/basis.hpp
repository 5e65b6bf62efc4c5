#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "parafock/label.hpp"

namespace parafock::rep {

// Ordered enumeration of all admissible labels with level <= cutoff for a
// given order p.  Size is (p+1) + 2*p*cutoff: the ground level carries p+1
// vectors, every higher level exactly 2p.
class FockBasis {
public:
    FockBasis(int p, int cutoff);

    int order() const { return p_; }
    int cutoff() const { return cutoff_; }
    std::size_t size() const { return labels_.size(); }

    const BasisLabel& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<BasisLabel>& labels() const { return labels_; }

    // Index of a label in canonical order; empty if the label is not
    // admissible or lies beyond the cutoff.
    std::optional<std::size_t> index_of(const BasisLabel& m) const;

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

private:
    int p_;
    int cutoff_;
    std::vector<BasisLabel> labels_;
    std::map<BasisLabel, std::size_t> index_;
};

}  // namespace parafock::rep
