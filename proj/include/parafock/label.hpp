#pragma once

#include <compare>
#include <string>

namespace parafock::rep {

// Basis vector label |mu12, mu22; mu11> of the order-p parastatistics Fock
// space.  mu12 is bounded by the order p, mu22 is unbounded, and mu11 tracks
// which of the two interlocking label families the vector belongs to:
// theta = mu12 - mu11 must be 0 or 1.  The excitation level (the quantum
// number appearing in the oscillator energy) is n = mu22 + theta.
struct BasisLabel {
    int mu12 = 0;
    int mu22 = 0;
    int mu11 = 0;

    int theta() const { return mu12 - mu11; }
    int level() const { return mu22 + theta(); }

    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
    friend auto operator<=>(const BasisLabel&, const BasisLabel&) = default;
};

// Admissibility of a label triple for given order p:
//   * mu22 >= 0, mu11 >= 0 and theta = mu12 - mu11 in {0, 1};
//   * mu22 == 0  ->  0 <= mu12 <= p;
//   * mu22 >= 1  ->  1 <= mu12 <= p.
// (mu12 = 0 forces theta = 0 automatically since mu11 >= 0.)
bool label_valid(int p, const BasisLabel& m);

// Human-readable form "(mu12,mu22;mu11)" used in diagnostics.
std::string to_string(const BasisLabel& m);

// Canonical enumeration order: ascending (level, mu22, mu12).  Used by the
// basis builder; exposed for tests.
struct LabelOrder {
    bool operator()(const BasisLabel& a, const BasisLabel& b) const {
        const int na = a.level(), nb = b.level();
        if (na != nb) return na < nb;
        if (a.mu22 != b.mu22) return a.mu22 < b.mu22;
        return a.mu12 < b.mu12;
    }
};

}  // namespace parafock::rep
