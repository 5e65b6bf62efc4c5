#include "parafock/export_json.hpp"

#include <sstream>

#include "parafock/report.hpp"

namespace parafock::cli {

std::string export_matrix_json(const alg::SparseComplexMatrix& m, const rep::FockBasis& basis) {
    std::ostringstream os;
    os << "{\"schema\":1,\"p\":" << basis.order() << ",\"cutoff\":" << basis.cutoff();

    os << ",\"basis\":[";
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto& l = basis.label(i);
        if (i) os << ",";
        os << "[" << l.mu12 << "," << l.mu22 << "," << l.mu11 << "]";
    }
    os << "]";

    os << ",\"entries\":[";
    bool first = true;
    for (const auto& [rc, v] : m.entries()) {
        if (!first) os << ",";
        first = false;
        os << "[" << rc.first << "," << rc.second << "," << fmt_g17(v.real()) << ","
           << fmt_g17(v.imag()) << "]";
    }
    os << "]";

    os << ",\"boundary_rows\":[";
    for (std::size_t i = 0; i < m.boundary_rows().size(); ++i) {
        if (i) os << ",";
        os << m.boundary_rows()[i];
    }
    os << "]}\n";
    return os.str();
}

}  // namespace parafock::cli
