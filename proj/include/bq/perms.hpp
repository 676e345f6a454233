#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bq/words.hpp"

namespace bq {

/// Permutation of {0..n-1}, stored as the image of each point.
/// Points print 1-based in cycle notation, e.g. "(1 3)(2 4)".
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree);  // identity
  static Perm from_images(std::vector<int> images);
  static Perm parse_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  int order() const;
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 0-based
  std::vector<int> cycle_lengths() const;        // all cycles incl. fixed, ascending
  std::string cycle_string() const;              // "(1 3)(2 4)" or "Id"

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> img_;
};

/// Right-action composition: point x goes to q(p(x)), i.e. p first.
Perm compose(const Perm& p, const Perm& q);

/// Homomorphic evaluation of a word through generator images, with the
/// right-action composition order.
Perm evaluate_word(const Word& w, const std::vector<Perm>& images);

/// Block sum acting on {0..dx-1} by x and {dx..dx+dy-1} by y.
Perm direct_sum(const Perm& x, const Perm& y);

/// Finite permutation group materialized as its full element list, in
/// breadth-first order from the identity.
class FiniteGroup {
 public:
  static FiniteGroup closure(const std::vector<Perm>& gens,
                             std::size_t cap = 1000000);
  const std::vector<Perm>& elements() const { return elems_; }
  std::size_t order() const { return elems_.size(); }
  int degree() const { return degree_; }
  bool contains(const Perm& p) const;

 private:
  std::vector<Perm> elems_;
  int degree_ = 0;
};

/// Left cosets x<t> of the cyclic group generated by t, with coset 0 the
/// coset of the identity. Representatives kept in group element order.
class CosetSpace {
 public:
  CosetSpace(const FiniteGroup& g, const Perm& t);
  int size() const { return static_cast<int>(reps_.size()); }
  const Perm& representative(int i) const { return reps_[static_cast<std::size_t>(i)]; }
  int coset_of(const Perm& x) const;           // throws if x outside the group
  Perm stabilizer_generator(int i) const;      // x t x^-1 for representative x
  /// Left translation u: x<t> -> (u x)<t> as a permutation of cosets.
  Perm left_translation(const Perm& u) const;

 private:
  const FiniteGroup* group_;
  Perm t_;
  std::vector<Perm> reps_;
  std::vector<int> coset_index_;  // indexed by position in group element list
};

/// Number of left cosets x<t> with x^-1 sigma x in <t>; these are the
/// fixed points of sigma on the fiber over the cone point whose
/// stabilizer is generated by t.
int fiber_fixed_points(const FiniteGroup& g, const Perm& sigma, const Perm& t);

struct OrbitInfo {
  int orbits = 0;
  bool transitive = false;
  std::vector<int> sizes;  // ascending
};

/// Orbit census of a finite closed permutation set (a group acting on
/// {0..n-1}). Rejects a set that is not closed under composition, and
/// cross-checks the count against the Burnside average, which must be an
/// exact integer.
OrbitInfo orbit_count(const std::vector<Perm>& action);

}  // namespace bq
