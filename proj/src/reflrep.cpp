#include "bq/reflrep.hpp"

#include <sstream>
#include <stdexcept>

namespace bq {

QuadElt operator+(const QuadElt& x, const QuadElt& y) {
  return QuadElt(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_);
}

QuadElt operator-(const QuadElt& x, const QuadElt& y) {
  return QuadElt(x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_);
}

QuadElt operator-(const QuadElt& x) { return QuadElt(-x.a_, -x.b_, -x.c_, -x.d_); }

QuadElt operator*(const QuadElt& x, const QuadElt& y) {
  return QuadElt(
      x.a_ * y.a_ + 2 * x.b_ * y.b_ + 3 * x.c_ * y.c_ + 6 * x.d_ * y.d_,
      x.a_ * y.b_ + x.b_ * y.a_ + 3 * (x.c_ * y.d_ + x.d_ * y.c_),
      x.a_ * y.c_ + x.c_ * y.a_ + 2 * (x.b_ * y.d_ + x.d_ * y.b_),
      x.a_ * y.d_ + x.d_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_);
}

QuadElt QuadElt::inverse() const {
  if (is_zero()) throw std::invalid_argument("QuadElt: inverse of zero");
  // Columns of the multiplication-by-x map on the basis (1,r2,r3,r6).
  Rat m[4][4] = {{a_, 2 * b_, 3 * c_, 6 * d_},
                 {b_, a_, 3 * d_, 3 * c_},
                 {c_, 2 * d_, a_, 2 * b_},
                 {d_, c_, b_, a_}};
  Rat rhs[4] = {1, 0, 0, 0};
  // exact Gaussian elimination
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int row = col; row < 4; ++row)
      if (m[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) throw std::logic_error("QuadElt: singular multiplication matrix");
    if (piv != col) {
      for (int k = 0; k < 4; ++k) std::swap(m[piv][k], m[col][k]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int row = 0; row < 4; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  return QuadElt(rhs[0] / m[0][0], rhs[1] / m[1][1], rhs[2] / m[2][2],
                 rhs[3] / m[3][3]);
}

namespace {

// sign of s + t*sqrt(2) for rationals s, t
int sign_rat(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

int sign_q2(const Rat& s, const Rat& t) {
  if (t == 0) return sign_rat(s);
  if (s == 0) return sign_rat(t);
  if ((s > 0) == (t > 0)) return sign_rat(s);
  // opposite signs: compare s^2 against 2 t^2; they cannot tie
  Rat diff = s * s - 2 * t * t;
  if (diff == 0) throw std::logic_error("sqrt(2) rational?");
  return diff > 0 ? sign_rat(s) : sign_rat(t);
}

}  // namespace

int QuadElt::sign() const {
  // Write x = u + sqrt3 * v with u = a + b*sqrt2, v = c + d*sqrt2.
  int su = sign_q2(a_, b_);
  int sv = sign_q2(c_, d_);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  // opposite signs: compare u^2 against 3 v^2 inside Q(sqrt2)
  Rat u2s = a_ * a_ + 2 * b_ * b_;
  Rat u2t = 2 * a_ * b_;
  Rat v2s = 3 * (c_ * c_ + 2 * d_ * d_);
  Rat v2t = 3 * (2 * c_ * d_);
  int cmp = sign_q2(u2s - v2s, u2t - v2t);
  if (cmp == 0) throw std::logic_error("sqrt(3) in Q(sqrt2)?");
  return cmp > 0 ? su : sv;
}

std::string QuadElt::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rat& coeff, const char* radical) {
    if (coeff == 0) return;
    if (!first) os << (coeff > 0 ? " + " : " - ");
    Rat mag = first ? coeff : (coeff > 0 ? coeff : Rat(-coeff));
    if (*radical == '\0') {
      os << to_string(mag);
    } else {
      if (mag != 1) os << to_string(mag) << "*";
      os << radical;
    }
    first = false;
  };
  term(a_, "");
  term(b_, "sqrt2");
  term(c_, "sqrt3");
  term(d_, "sqrt6");
  if (first) os << "0";
  return os.str();
}

Mat3::Mat3() = default;

Mat3 Mat3::identity() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.at(i, i) = QuadElt::rational(1);
  return m;
}

Mat3 operator*(const Mat3& x, const Mat3& y) {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      QuadElt acc;
      for (int k = 0; k < 3; ++k) acc = acc + x.at(i, k) * y.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

Mat3 Mat3::transpose() const {
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.at(i, j) = at(j, i);
  return out;
}

QuadElt Mat3::det() const {
  return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
         at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
         at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

Mat3 Mat3::inverse() const {
  QuadElt d = det();
  if (d.is_zero()) throw std::invalid_argument("Mat3: singular");
  QuadElt di = d.inverse();
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      // cofactor transpose baked in by swapping i and j roles
      out.at(j, i) = (at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0)) * di;
    }
  return out;
}

Mat3 Mat3::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Mat3 acc = identity();
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::string Mat3::str() const {
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << (i == 0 ? "[" : " ");
    os << "[";
    for (int j = 0; j < 3; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
    if (i < 2) os << "\n";
  }
  os << "]";
  return os.str();
}

ReflectionRep::ReflectionRep() {
  const QuadElt one = QuadElt::rational(1);
  const QuadElt half = QuadElt::rational(Rat(1, 2));
  // cos(pi/12) = (sqrt6 + sqrt2)/4
  const QuadElt cos12 = QuadElt(0, Rat(1, 4), 0, Rat(1, 4));
  gram_ = Mat3();
  for (int i = 0; i < 3; ++i) gram_.at(i, i) = one;
  gram_.at(1, 2) = -half;
  gram_.at(2, 1) = -half;
  gram_.at(0, 2) = -cos12;
  gram_.at(2, 0) = -cos12;

  auto reflection = [&](int i) {
    Mat3 r = Mat3::identity();
    for (int j = 0; j < 3; ++j)
      r.at(i, j) = r.at(i, j) - QuadElt::rational(2) * gram_.at(i, j);
    return r;
  };
  Mat3 r1 = reflection(0), r2 = reflection(1), r3 = reflection(2);
  gens_[0] = r1 * r2;
  gens_[1] = r2 * r3;
  gens_[2] = r3 * r1;

  const Mat3 id = Mat3::identity();
  if (!(gens_[0].pow(2) == id)) throw std::logic_error("rep: p^2 != 1");
  if (!(gens_[1].pow(3) == id)) throw std::logic_error("rep: q^3 != 1");
  Mat3 rpow = id;
  for (int k = 1; k <= 12; ++k) {
    rpow = rpow * gens_[2];
    if (k < 12 && rpow == id) throw std::logic_error("rep: r has order < 12");
  }
  if (!(rpow == id)) throw std::logic_error("rep: r^12 != 1");
  if (!(gens_[0] * gens_[1] * gens_[2] == id)) throw std::logic_error("rep: pqr != 1");
  for (const Mat3& m : gens_)
    if (!preserves_gram(m)) throw std::logic_error("rep: generator breaks the form");
  // Lorentzian signature: det(G) = (1 - sqrt3)/4 < 0
  QuadElt dg = gram_.det();
  if (!(dg == QuadElt(Rat(1, 4), 0, Rat(-1, 4), 0)))
    throw std::logic_error("rep: unexpected Gram determinant");
  if (dg.sign() >= 0) throw std::logic_error("rep: Gram form not Lorentzian");
}

Mat3 ReflectionRep::matrix(const Word& w) const {
  if (w.max_generator() >= 3)
    throw std::invalid_argument("reflection rep: word must be over p,q,r");
  Mat3 acc = Mat3::identity();
  for (const Syllable& s : w.syllables()) {
    const Mat3& base = gens_[static_cast<std::size_t>(s.gen)];
    acc = acc * base.pow(s.exp);
  }
  return acc;
}

bool ReflectionRep::equal(const Word& w1, const Word& w2) const {
  return matrix(w1) == matrix(w2);
}

std::optional<int> ReflectionRep::element_order(const Word& w, int cap) const {
  if (cap < 1) throw std::invalid_argument("element_order: cap must be >= 1");
  Mat3 m = matrix(w);
  Mat3 acc = m;
  const Mat3 id = Mat3::identity();
  for (int k = 1; k <= cap; ++k) {
    if (acc == id) return k;
    acc = acc * m;
  }
  return std::nullopt;
}

bool ReflectionRep::preserves_gram(const Mat3& m) const {
  return m.transpose() * gram_ * m == gram_;
}

}  // namespace bq
