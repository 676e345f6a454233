#include "bq/ledger.hpp"

#include <stdexcept>

namespace bq {

Int euler_product(const Int& chi1, const Int& chi2) { return chi1 * chi2; }

Int c2_of_resolution(const Int& chi_x, const Int& fixed, const Int& group_order,
                     const Int& num_a1) {
  if (group_order < 1) throw std::invalid_argument("c2_of_resolution: bad group order");
  Rat free_part(chi_x - fixed, group_order);
  if (!is_integer(free_part))
    throw inconsistency("c2_of_resolution: (chi - fixed)/|G| is not an integer");
  return boost::multiprecision::numerator(free_part) + 2 * num_a1;
}

Int c1sq_via_proportionality(const Int& c2_x, const Int& group_order) {
  if (group_order < 1) throw std::invalid_argument("c1sq_via_proportionality: bad group order");
  Rat v(2 * c2_x, group_order);
  if (!is_integer(v))
    throw inconsistency("c1sq_via_proportionality: 2*c2/|G| is not an integer");
  return boost::multiprecision::numerator(v);
}

Int ke_via_relative_proportionality(const Rat& chi_orb) {
  if (chi_orb >= 0)
    throw std::invalid_argument("ke_via_relative_proportionality: chi_orb must be negative");
  Rat v = -2 * chi_orb;
  if (!is_integer(v))
    throw inconsistency("ke_via_relative_proportionality: 2|chi_orb| is not an integer");
  return boost::multiprecision::numerator(v);
}

Int selfint_by_adjunction(int genus, const Int& ke) {
  return Int(2 * genus - 2) - ke;
}

LogBmyReport log_bmy_check(const PairInvariants& pi) {
  LogBmyReport rep;
  rep.lhs = pi.base.c1sq - pi.esq;
  rep.rhs = 3 * pi.base.c2;
  rep.pass = rep.lhs == rep.rhs;
  rep.k_plus_e_dot_e = pi.ke + pi.esq;
  rep.k_plus_e_dot_f = pi.ef;
  rep.k_plus_e_sq_positive = rep.lhs > 0;
  return rep;
}

DivisibilityReport divisibility_d(const Int& c2, const Rat& chi_o) {
  if (!is_integer(chi_o))
    throw inconsistency("divisibility_d: chi_O is not an integer");
  DivisibilityReport rep;
  rep.d = 4 * c2 - 12 * boost::multiprecision::numerator(chi_o);
  rep.divisible_by_4 = rep.d % 4 == 0;
  return rep;
}

VolumeValue volume_from_chi(const Int& chi_open) {
  if (chi_open < 1)
    throw std::invalid_argument(
        "volume_from_chi: complex hyperbolic manifolds have positive chi");
  return VolumeValue{Rat(8 * chi_open, 3)};
}

PairInvariants scale_by_cover(const PairInvariants& pi, int d,
                              const QuotientResult& cover) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("scale_by_cover: degree must be odd and positive");
  if (!cover.possible || !cover.cert.surjective || cover.cert.d != d)
    throw std::invalid_argument("scale_by_cover: missing or invalid cover certificate");
  PairInvariants out = pi;
  out.base.c1sq *= d;
  out.base.c2 *= d;
  out.ke *= d;
  out.esq *= d;
  for (Int& v : out.ef) v *= d;
  // E stays a genus-one curve: the cover is etale over it
  out.genus_e = pi.genus_e;
  if (!out.adjunction_holds())
    throw inconsistency("scale_by_cover: adjunction fails after scaling");
  if (!out.base.noether_integral())
    throw inconsistency("scale_by_cover: Noether integrality fails after scaling");
  if (!log_bmy_check(out).pass)
    throw inconsistency("scale_by_cover: log-BMY fails after scaling");
  DivisibilityReport dr = divisibility_d(out.base.c2, out.base.chi_o());
  if (!dr.divisible_by_4 || dr.d != -out.esq)
    throw inconsistency("scale_by_cover: divisibility check fails after scaling");
  return out;
}

}  // namespace bq
