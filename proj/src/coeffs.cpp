#include "parafock/coeffs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace parafock::rep {

const char* to_string(CoeffVariant v) {
    return v == CoeffVariant::printed ? "printed" : "corrected";
}

namespace {

[[noreturn]] void domain_fail(const char* which, int p, int mu12, int mu22, const char* why) {
    throw std::domain_error(std::string(which) + "(p=" + std::to_string(p) + ", mu12=" +
                            std::to_string(mu12) + ", mu22=" + std::to_string(mu22) + "): " + why);
}

double checked_sqrt(double radicand, const char* which, int p, int mu12, int mu22) {
    if (radicand < 0.0) domain_fail(which, p, mu12, mu22, "negative radicand");
    return std::sqrt(radicand);
}

}  // namespace

double coeff_g1(int p, int mu12, int mu22) {
    if (mu12 < 0 || mu22 < 0) domain_fail("coeff_g1", p, mu12, mu22, "negative argument");
    if (mu22 == 0) {
        // Cancelled form of the quotient below; the only form defined at mu12 = 0.
        return checked_sqrt(double(mu12 + 1) * double(p - mu12), "coeff_g1", p, mu12, mu22);
    }
    const int denom = mu12 + mu22 + 1 - odd_ind(mu22 + 1);
    if (denom == 0) domain_fail("coeff_g1", p, mu12, mu22, "zero denominator");
    const double num = double(mu12) * double(mu12 + mu22 + 1) * double(p - mu12);
    return checked_sqrt(num / double(denom), "coeff_g1", p, mu12, mu22);
}

double coeff_g2(int p, int mu12, int mu22) {
    if (mu12 < 0 || mu22 < 0) domain_fail("coeff_g2", p, mu12, mu22, "negative argument");
    const double f1 = odd_ind(mu22) * mu22 + 1;
    const double f2 = even_ind(mu22 + 1) * (p + mu22) + 1;
    const double f3 = odd_ind(mu22 + 1) * (mu12 + mu22) + 1;
    const double denom = even_ind(mu22 + 1) * (mu12 + mu22 - 1) + 1;
    if (denom == 0.0) domain_fail("coeff_g2", p, mu12, mu22, "zero denominator");
    return checked_sqrt(f1 * f2 * f3 / denom, "coeff_g2", p, mu12, mu22);
}

}  // namespace parafock::rep
