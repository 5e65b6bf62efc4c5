#pragma once

namespace parafock::rep {

// The ladder-action cross terms (the ones that move a vector between the
// theta = 0 and theta = 1 label families) carry a prefactor that is printed
// in the source tables as a plain rational, unlike every other prefactor,
// which is a square root.  Taken literally the rational prefactor breaks the
// triple relations and the Cartan bracket closure; square-rooting it (the
// minimal correction consistent with adjointness and the vacuum defining
// conditions) restores every identity.  Both variants are kept selectable;
// `corrected` is the default everywhere.
enum class CoeffVariant { printed, corrected };

const char* to_string(CoeffVariant v);

// Parity indicators: even_ind(j) = 1 iff j is even, odd_ind(j) = 1 iff odd.
inline int even_ind(int j) { return j % 2 == 0 ? 1 : 0; }
inline int odd_ind(int j) { return j % 2 == 0 ? 0 : 1; }

// Reduced matrix element G1(mu12, mu22) for order p:
//   sqrt( mu12 (mu12+mu22+1) (p-mu12) / (mu12+mu22+1 - odd_ind(mu22+1)) ),
// with the mu22 = 0 case taken in its cancelled form
//   sqrt( (mu12+1)(p-mu12) )
// (the raw quotient is 0/0 at mu12 = mu22 = 0).  Throws std::domain_error on
// a negative radicand or vanishing denominator.
double coeff_g1(int p, int mu12, int mu22);

// Reduced matrix element G2(mu12, mu22) for order p:
//   sqrt( (odd_ind(mu22) mu22 + 1)
//         (even_ind(mu22+1)(p+mu22) + 1)
//         (odd_ind(mu22+1)(mu12+mu22) + 1)
//       / (even_ind(mu22+1)(mu12+mu22-1) + 1) ).
// Throws std::domain_error on a negative radicand or vanishing denominator.
double coeff_g2(int p, int mu12, int mu22);

}  // namespace parafock::rep
