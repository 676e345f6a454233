#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bq/exact.hpp"
#include "bq/words.hpp"

namespace bq {

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows * cols)) {}
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  bool operator==(const IntMatrix&) const = default;

  /// Exact determinant by fraction-free elimination. Square only.
  Int det() const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

/// U * A * V = S with U, V unimodular and S diagonal, each diagonal
/// entry nonnegative and dividing the next.
struct SnfResult {
  IntMatrix u, s, v;
  std::vector<Int> diagonal() const;
  std::vector<Int> nonzero_divisors() const;
};

/// Smith normal form. Pivot rule: smallest nonzero absolute value in the
/// working submatrix, ties broken in row-major order, so the transform
/// matrices are reproducible.
SnfResult smith_normal_form(const IntMatrix& a);

/// Relator exponent-sum matrix of a presentation (relators x generators).
IntMatrix exponent_matrix(const Presentation& p);

struct Abelianization {
  int rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, ascending divisibility
};

/// Cokernel of the relator exponent-sum matrix, in invariant factors.
Abelianization abelianization(const Presentation& p);

/// Rows spanning the image of the subgroup generators in the free part
/// Z^r of the ambient abelianization (coordinates adapted by the SNF of
/// the ambient relator matrix). Rejects rank-zero ambients.
IntMatrix image_lattice(const std::vector<Word>& subgens,
                        const Presentation& ambient);

/// Index of the row span as a sublattice of Z^cols: the product of the
/// elementary divisors. nullopt when the span has deficient rank
/// (infinite index). Cross-checked against |det| for square inputs.
std::optional<Int> lattice_index(const IntMatrix& rows);

/// Record of a surjection mu: Z^2 -> Z/d restricted from a full-rank
/// sublattice L. The map projects onto one SNF-adapted coordinate of L
/// whose elementary divisor is coprime to d; the certificate stores the
/// coprimality witness and the images of the lattice generators, which
/// are checked to generate Z/d by exhaustive enumeration.
struct QuotientCertificate {
  int d = 1;
  Int divisor;             // elementary divisor used
  int divisor_position = 0;
  Int bezout_u, bezout_v;  // u*divisor + v*d = 1
  std::vector<Int> generator_images;  // mu of each lattice row, in Z/d
  bool surjective = false;
};

struct QuotientResult {
  bool possible = false;
  QuotientCertificate cert;
  std::string reason;  // set when impossible
};

/// Search for a cyclic quotient Z^2 -> Z/d surjective on the given
/// full-rank lattice. d must be >= 1; when every elementary divisor of
/// the lattice shares a factor with d the construction is impossible and
/// the result says so (for the pipeline's lattice of type (2,6) this is
/// exactly the even d).
QuotientResult find_cyclic_quotient(const IntMatrix& lattice, int d);

}  // namespace bq
