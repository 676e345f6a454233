#pragma once

#include <string>
#include <vector>

#include "bq/cosets.hpp"
#include "bq/exact.hpp"
#include "bq/words.hpp"

namespace bq {

/// Fuchsian signature: genus plus the multiset of cone orders, kept
/// sorted ascending. chi_orb = 2 - 2g - sum(1 - 1/n_i), exactly.
struct Signature {
  int genus = 0;
  std::vector<int> cone_orders;

  static Signature of(int genus, std::vector<int> cone_orders);
  Rat euler_char() const;
  bool torsion_free() const { return cone_orders.empty(); }
  /// Printed in the form Δ(g; n1^a1, ...), e.g. Δ(0; 2, 3^3); cone-free
  /// signatures print as Δ(g; ∅).
  std::string str() const;
  bool operator==(const Signature&) const = default;
};

/// Signature of the presented Fuchsian group itself: cone orders are the
/// declared elliptic orders and the genus is half the rank of the
/// abelianization (validated to be even and consistent).
Signature presentation_signature(const Presentation& p);

/// Signature of the finite-index subgroup a coset table describes.
/// Each elliptic generator x of declared order n contributes one cone
/// point of order n/l for every cycle of length l < n of its coset
/// action; the genus then comes out of Riemann-Hurwitz
///   chi_orb(subgroup) = index * chi_orb(parent)
/// and must be a nonnegative integer, otherwise the elliptic data or the
/// table is inconsistent and an inconsistency error is thrown.
Signature subgroup_signature(const Presentation& parent, const CosetTable& t);

/// Cycle structure of one elliptic generator on the cosets: the fiber of
/// the covering over that cone point. A cycle of full length n is a
/// smooth preimage; length l < n leaves a cone point of order n/l.
struct FiberDecomposition {
  int cone_order = 0;            // order of the cone point downstairs
  std::vector<int> cycle_lengths;  // ascending, summing to the index
  int preimages() const { return static_cast<int>(cycle_lengths.size()); }
  int smooth_count() const;
  std::vector<int> cone_orders_upstairs() const;  // n/l for each l < n
};

FiberDecomposition fiber_decomposition(const CosetTable& t, const Word& x,
                                       int order_n);

/// Preimages in the product of the two quotients of the product cone
/// point: cycles of x on the first table times cycles on the second.
long product_fiber_count(const CosetTable& t1, const CosetTable& t2,
                         const Word& x);

/// Orbit count of the simultaneous action (x on t1, x on t2) on pairs of
/// cosets: the branches of the preimage of the diagonal curve over the
/// cone point of x.
long diagonal_branch_count(const CosetTable& t1, const CosetTable& t2,
                           const Word& x);

}  // namespace bq
