#include "bq/intlat.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace bq {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("IntMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Int>> conv;
  for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
  return from_rows(conv);
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(x.rows(), y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int k = 0; k < x.cols(); ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols(); ++j) out.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return out;
}

Int IntMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det: square matrices only");
  int n = rows_;
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  IntMatrix m = *this;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (m.at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // exact by Bareiss
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << at(i, j).str();
    }
  }
  os << "]";
  return os.str();
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> out;
  for (int i = 0; i < std::min(s.rows(), s.cols()); ++i) out.push_back(s.at(i, i));
  return out;
}

std::vector<Int> SnfResult::nonzero_divisors() const {
  std::vector<Int> out;
  for (const Int& d : diagonal())
    if (d != 0) out.push_back(d);
  return out;
}

SnfResult smith_normal_form(const IntMatrix& a) {
  int m = a.rows(), n = a.cols();
  SnfResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(s.at(i, k), s.at(j, k));
    for (int k = 0; k < m; ++k) std::swap(u.at(i, k), u.at(j, k));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < m; ++k) std::swap(s.at(k, i), s.at(k, j));
    for (int k = 0; k < n; ++k) std::swap(v.at(k, i), v.at(k, j));
  };
  auto add_row = [&](int dst, int src, const Int& f) {
    for (int k = 0; k < n; ++k) s.at(dst, k) += f * s.at(src, k);
    for (int k = 0; k < m; ++k) u.at(dst, k) += f * u.at(src, k);
  };
  auto add_col = [&](int dst, int src, const Int& f) {
    for (int k = 0; k < m; ++k) s.at(k, dst) += f * s.at(k, src);
    for (int k = 0; k < n; ++k) v.at(k, dst) += f * v.at(k, src);
  };
  auto negate_row = [&](int i) {
    for (int k = 0; k < n; ++k) s.at(i, k) = -s.at(i, k);
    for (int k = 0; k < m; ++k) u.at(i, k) = -u.at(i, k);
  };

  int t = 0;
  while (t < std::min(m, n)) {
    // pivot: smallest nonzero |entry| of the trailing submatrix,
    // row-major on ties
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (s.at(i, j) == 0) continue;
        if (pi < 0 || abs(s.at(i, j)) < abs(s.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block vanished
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool dirty = false;
    for (int i = t + 1; i < m; ++i) {
      if (s.at(i, t) == 0) continue;
      Int f = -(s.at(i, t) / s.at(t, t));
      if (f != 0) add_row(i, t, f);
      if (s.at(i, t) != 0) dirty = true;
    }
    for (int j = t + 1; j < n; ++j) {
      if (s.at(t, j) == 0) continue;
      Int f = -(s.at(t, j) / s.at(t, t));
      if (f != 0) add_col(j, t, f);
      if (s.at(t, j) != 0) dirty = true;
    }
    if (dirty) continue;  // remainder survived, pick a smaller pivot
    // divisibility sweep across the rest of the matrix
    int bi = -1, bj = -1;
    for (int i = t + 1; i < m && bi < 0; ++i)
      for (int j = t + 1; j < n; ++j)
        if (s.at(i, j) % s.at(t, t) != 0) {
          bi = i;
          bj = j;
          break;
        }
    if (bi >= 0) {
      add_row(t, bi, 1);
      continue;
    }
    if (s.at(t, t) < 0) negate_row(t);
    ++t;
  }
  return res;
}

IntMatrix exponent_matrix(const Presentation& p) {
  int n = p.generator_count();
  IntMatrix m(static_cast<int>(p.relators().size()), n);
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Syllable& s : p.relators()[i].syllables())
      m.at(static_cast<int>(i), s.gen) += s.exp;
  return m;
}

Abelianization abelianization(const Presentation& p) {
  IntMatrix e = exponent_matrix(p);
  Abelianization out;
  if (e.rows() == 0) {
    out.rank = p.generator_count();
    return out;
  }
  SnfResult snf = smith_normal_form(e);
  std::vector<Int> divs = snf.nonzero_divisors();
  out.rank = p.generator_count() - static_cast<int>(divs.size());
  for (const Int& d : divs)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

IntMatrix image_lattice(const std::vector<Word>& subgens,
                        const Presentation& ambient) {
  IntMatrix e = exponent_matrix(ambient);
  int n = ambient.generator_count();
  SnfResult snf = e.rows() > 0 ? smith_normal_form(e) : SnfResult{IntMatrix::identity(0), e, IntMatrix::identity(n)};
  int nonzero = static_cast<int>(snf.nonzero_divisors().size());
  int rank = n - nonzero;
  if (rank == 0)
    throw std::invalid_argument("image_lattice: ambient abelianization has rank 0");
  // free coordinates are (row vector) * V, positions nonzero..n-1
  IntMatrix out(static_cast<int>(subgens.size()), rank);
  for (std::size_t i = 0; i < subgens.size(); ++i) {
    std::vector<Int> exps(static_cast<std::size_t>(n));
    for (const Syllable& s : subgens[i].syllables()) {
      if (s.gen >= n) throw std::invalid_argument("image_lattice: word uses undeclared generator");
      exps[static_cast<std::size_t>(s.gen)] += s.exp;
    }
    for (int j = 0; j < rank; ++j) {
      Int acc = 0;
      for (int k = 0; k < n; ++k) acc += exps[static_cast<std::size_t>(k)] * snf.v.at(k, nonzero + j);
      out.at(static_cast<int>(i), j) = acc;
    }
  }
  return out;
}

std::optional<Int> lattice_index(const IntMatrix& rows) {
  SnfResult snf = smith_normal_form(rows);
  std::vector<Int> divs = snf.nonzero_divisors();
  if (static_cast<int>(divs.size()) < rows.cols()) return std::nullopt;
  Int prod = 1;
  for (const Int& d : divs) prod *= d;
  // second route for square spanning sets: |det|
  if (rows.rows() == rows.cols()) {
    Int d = rows.det();
    if (abs(d) != prod)
      throw inconsistency("lattice_index: SNF product disagrees with |det|");
  }
  return prod;
}

QuotientResult find_cyclic_quotient(const IntMatrix& lattice, int d) {
  if (d < 1) throw std::invalid_argument("find_cyclic_quotient: d must be >= 1");
  SnfResult snf = smith_normal_form(lattice);
  std::vector<Int> divs = snf.nonzero_divisors();
  if (static_cast<int>(divs.size()) < lattice.cols())
    throw std::invalid_argument("find_cyclic_quotient: lattice is not full rank");
  QuotientResult res;
  int pos = -1;
  for (std::size_t i = 0; i < divs.size(); ++i)
    if (gcd(divs[i], Int(d)) == 1) {
      pos = static_cast<int>(i);
      break;
    }
  if (pos < 0) {
    std::ostringstream os;
    os << "no elementary divisor coprime to " << d << " (divisors:";
    for (const Int& dv : divs) os << " " << dv;
    os << ")";
    res.possible = false;
    res.reason = os.str();
    return res;
  }
  QuotientCertificate& cert = res.cert;
  cert.d = d;
  cert.divisor = divs[static_cast<std::size_t>(pos)];
  cert.divisor_position = pos;
  // extended gcd witness u*divisor + v*d = 1
  {
    Int old_r = cert.divisor, r = d;
    Int old_su = 1, su = 0, old_sv = 0, sv = 1;
    while (r != 0) {
      Int qq = old_r / r;
      Int tmp = old_r - qq * r;
      old_r = r;
      r = tmp;
      tmp = old_su - qq * su;
      old_su = su;
      su = tmp;
      tmp = old_sv - qq * sv;
      old_sv = sv;
      sv = tmp;
    }
    if (old_r != 1) throw std::logic_error("find_cyclic_quotient: gcd witness broken");
    cert.bezout_u = old_su;
    cert.bezout_v = old_sv;
  }
  // mu(x) = (x * V)_pos mod d, evaluated on every lattice generator
  for (int i = 0; i < lattice.rows(); ++i) {
    Int acc = 0;
    for (int k = 0; k < lattice.cols(); ++k) acc += lattice.at(i, k) * snf.v.at(k, cert.divisor_position);
    Int img = acc % d;
    if (img < 0) img += d;
    cert.generator_images.push_back(img);
  }
  // exhaustive subgroup enumeration inside Z/d
  std::set<Int> sub{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Int> cur(sub.begin(), sub.end());
    for (const Int& x : cur)
      for (const Int& g : cert.generator_images) {
        Int y = (x + g) % d;
        if (sub.insert(y).second) grew = true;
      }
  }
  cert.surjective = static_cast<int>(sub.size()) == d;
  res.possible = true;
  return res;
}

}  // namespace bq
