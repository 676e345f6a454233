#pragma once

#include <string>
#include <vector>

#include "bq/exact.hpp"
#include "bq/intlat.hpp"

namespace bq {

/// Chern numbers of a smooth projective surface. chi_O is the
/// holomorphic Euler characteristic through Noether's formula,
/// (c1^2 + c2)/12, and must be an integer for an honest surface.
struct SurfaceInvariants {
  Int c1sq;
  Int c2;
  Rat chi_o() const { return Rat(c1sq + c2, 12); }
  bool noether_integral() const { return is_integer(chi_o()); }
};

/// Surface together with the intersection data of a genus-g curve E and
/// the exceptional (-2)-curves F_j. Adjunction K.E + E^2 = 2g - 2 is an
/// invariant of every constructed or scaled instance.
struct PairInvariants {
  SurfaceInvariants base;
  Int ke;           // K . E
  Int esq;          // E^2
  std::vector<Int> ef;  // E . F_j
  int genus_e = 1;
  bool adjunction_holds() const { return ke + esq == 2 * genus_e - 2; }
};

/// Exact multiple of pi^2; never a floating point value.
struct VolumeValue {
  Rat coefficient;
  std::string str() const { return to_string(coefficient) + "·π²"; }
  bool operator==(const VolumeValue&) const = default;
};

/// chi of a product is the product of the chis.
Int euler_product(const Int& chi1, const Int& chi2);

/// Euler characteristic of the resolved quotient: free part
/// (chi - fixed)/|G| plus 2 per A1 point blown up to a sphere. The
/// division must be exact.
Int c2_of_resolution(const Int& chi_x, const Int& fixed, const Int& group_order,
                     const Int& num_a1);

/// c1^2 of the resolution via proportionality upstairs: on the product
/// surface c1^2 = 2 c2, and the quotient divides by the group order
/// (K on the resolution pulls back from the quotient, A1 points being
/// crepant). Exact division required.
Int c1sq_via_proportionality(const Int& c2_x, const Int& group_order);

/// K . E = 2 |chi_orb| of the uniformizing curve group (relative
/// proportionality). Rejects nonnegative chi_orb.
Int ke_via_relative_proportionality(const Rat& chi_orb);

/// E^2 = (2g - 2) - K.E.
Int selfint_by_adjunction(int genus, const Int& ke);

struct LogBmyReport {
  Int lhs;  // (K+E)^2 = c1^2 - E^2
  Int rhs;  // 3 c2
  bool pass = false;
  Int k_plus_e_dot_e;            // K.E + E^2
  std::vector<Int> k_plus_e_dot_f;  // E.F_j, since K.F_j = 0 on (-2)-curves
  bool k_plus_e_sq_positive = false;
};

/// The logarithmic Bogomolov-Miyaoka-Yau equality (K+E)^2 = 3 c2 with the
/// auxiliary nef/big arithmetic.
LogBmyReport log_bmy_check(const PairInvariants& pi);

struct DivisibilityReport {
  Int d;
  bool divisible_by_4 = false;
};

/// d = 4 c2 - 12 chi_O; divisible by four whenever chi_O is an integer.
DivisibilityReport divisibility_d(const Int& c2, const Rat& chi_o);

/// Volume of the cusped manifold: (8/3) pi^2 per unit of Euler
/// characteristic of the open surface. Rejects chi <= 0.
VolumeValue volume_from_chi(const Int& chi_open);

/// Multiply all characteristic numbers by the degree of an etale cover
/// certified by a cyclic-quotient certificate, then re-validate
/// adjunction, Noether integrality, log-BMY and divisibility on the
/// scaled pair. The curve upstairs is still genus one.
PairInvariants scale_by_cover(const PairInvariants& pi, int d,
                              const QuotientResult& cover);

}  // namespace bq
