#pragma once

#include <array>
#include <optional>
#include <string>

#include "bq/exact.hpp"
#include "bq/words.hpp"

namespace bq {

/// Element of the field Q(sqrt2, sqrt3), written on the basis
/// (1, sqrt2, sqrt3, sqrt6) with exact rational coefficients.
/// Closed under multiplication: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
/// sqrt3*sqrt6 = 3*sqrt2. Equality is coefficient-wise.
class QuadElt {
 public:
  QuadElt() = default;
  QuadElt(Rat a, Rat b, Rat c, Rat d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}
  static QuadElt rational(const Rat& a) { return QuadElt(a, 0, 0, 0); }
  static QuadElt sqrt2() { return QuadElt(0, 1, 0, 0); }
  static QuadElt sqrt3() { return QuadElt(0, 0, 1, 0); }
  static QuadElt sqrt6() { return QuadElt(0, 0, 0, 1); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }
  const Rat& d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0; }
  bool is_rational() const { return b_ == 0 && c_ == 0 && d_ == 0; }

  friend QuadElt operator+(const QuadElt& x, const QuadElt& y);
  friend QuadElt operator-(const QuadElt& x, const QuadElt& y);
  friend QuadElt operator-(const QuadElt& x);
  friend QuadElt operator*(const QuadElt& x, const QuadElt& y);
  bool operator==(const QuadElt&) const = default;

  /// Multiplicative inverse, found by solving the 4x4 rational linear
  /// system x*y = 1. Rejects zero.
  QuadElt inverse() const;

  /// Exact sign, computed by repeated squaring to strip the radicals.
  /// No floating point involved.
  int sign() const;

  std::string str() const;

 private:
  Rat a_, b_, c_, d_;
};

/// 3x3 matrix over Q(sqrt2, sqrt3), exact everywhere.
class Mat3 {
 public:
  Mat3();  // zero
  static Mat3 identity();
  QuadElt& at(int i, int j) { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const QuadElt& at(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  friend Mat3 operator*(const Mat3& x, const Mat3& y);
  bool operator==(const Mat3&) const = default;
  Mat3 transpose() const;
  QuadElt det() const;
  Mat3 inverse() const;  // adjugate over determinant
  Mat3 pow(int k) const;
  std::string str() const;

 private:
  std::array<std::array<QuadElt, 3>, 3> m_;
};

/// Faithful Lorentzian representation of the (2,3,12) rotation group.
/// Mirrors e1,e2,e3 meet at angles pi/2, pi/3, pi/12; each reflection is
/// x -> x - 2<x,e_i>e_i in the mirror basis, and the rotations are
/// P = R1 R2, Q = R2 R3, R = R3 R1, so P Q R collapses syntactically to
/// the identity. Construction verifies P^2 = Q^3 = R^12 = P Q R = Id,
/// that no smaller power of R is the identity, that each generator
/// preserves the Gram form, and that det(G) < 0 (signature (2,1)).
/// Faithfulness of the representation on the rotation subgroup is
/// standard theory and is recorded as an assumption in certificate
/// headers rather than re-proved here.
class ReflectionRep {
 public:
  ReflectionRep();

  const Mat3& gram() const { return gram_; }
  const Mat3& p() const { return gens_[0]; }
  const Mat3& q() const { return gens_[1]; }
  const Mat3& r() const { return gens_[2]; }

  /// Homomorphic evaluation of a word over {p,q,r} (indices 0,1,2).
  Mat3 matrix(const Word& w) const;

  /// Exact word equality in the group: entrywise matrix equality.
  bool equal(const Word& w1, const Word& w2) const;

  /// Least k <= cap with w^k the identity, or nullopt.
  std::optional<int> element_order(const Word& w, int cap) const;

  bool preserves_gram(const Mat3& m) const;

 private:
  Mat3 gram_;
  std::array<Mat3, 3> gens_;
};

}  // namespace bq
