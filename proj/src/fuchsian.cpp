#include "bq/fuchsian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bq/intlat.hpp"

namespace bq {

Signature Signature::of(int genus, std::vector<int> cone_orders) {
  if (genus < 0) throw std::invalid_argument("signature: negative genus");
  for (int n : cone_orders)
    if (n < 2) throw std::invalid_argument("signature: cone order must be >= 2");
  std::sort(cone_orders.begin(), cone_orders.end());
  return Signature{genus, std::move(cone_orders)};
}

Rat Signature::euler_char() const {
  Rat chi = 2 - 2 * genus;
  for (int n : cone_orders) chi -= Rat(n - 1, n);
  return chi;
}

std::string Signature::str() const {
  std::ostringstream os;
  os << "Δ(" << genus << "; ";
  if (cone_orders.empty()) {
    os << "∅";
  } else {
    bool first = true;
    std::size_t i = 0;
    while (i < cone_orders.size()) {
      std::size_t j = i;
      while (j < cone_orders.size() && cone_orders[j] == cone_orders[i]) ++j;
      if (!first) os << ", ";
      first = false;
      os << cone_orders[i];
      if (j - i > 1) os << "^" << j - i;
      i = j;
    }
  }
  os << ")";
  return os.str();
}

Signature presentation_signature(const Presentation& p) {
  Abelianization ab = abelianization(p);
  if (ab.rank % 2 != 0)
    throw inconsistency("presentation " + p.name() +
                        ": abelianization rank is odd, not a Fuchsian signature");
  std::vector<int> cones;
  for (const EllipticGenerator& e : p.elliptic()) cones.push_back(e.order);
  return Signature::of(ab.rank / 2, std::move(cones));
}

Signature subgroup_signature(const Presentation& parent, const CosetTable& t) {
  Signature parent_sig = presentation_signature(parent);
  std::vector<int> cones;
  for (const EllipticGenerator& e : parent.elliptic()) {
    for (int len : t.action(e.word).cycle_lengths()) {
      if (e.order % len != 0)
        throw inconsistency("subgroup_signature: cycle length " + std::to_string(len) +
                            " does not divide declared order " + std::to_string(e.order));
      if (len < e.order) cones.push_back(e.order / len);
    }
  }
  Rat chi_sub = t.size() * parent_sig.euler_char();
  Rat cone_defect = 0;
  for (int n : cones) cone_defect += Rat(n - 1, n);
  Rat genus_twice = 2 - cone_defect - chi_sub;
  if (!is_integer(genus_twice) || boost::multiprecision::numerator(genus_twice) % 2 != 0)
    throw inconsistency("subgroup_signature: Riemann-Hurwitz genus is not an integer");
  Int g2 = boost::multiprecision::numerator(genus_twice);
  if (g2 < 0) throw inconsistency("subgroup_signature: negative genus");
  return Signature::of(static_cast<int>(g2 / 2), std::move(cones));
}

int FiberDecomposition::smooth_count() const {
  int n = 0;
  for (int l : cycle_lengths)
    if (l == cone_order) ++n;
  return n;
}

std::vector<int> FiberDecomposition::cone_orders_upstairs() const {
  std::vector<int> out;
  for (int l : cycle_lengths)
    if (l < cone_order) out.push_back(cone_order / l);
  std::sort(out.begin(), out.end());
  return out;
}

FiberDecomposition fiber_decomposition(const CosetTable& t, const Word& x,
                                       int order_n) {
  FiberDecomposition fd;
  fd.cone_order = order_n;
  fd.cycle_lengths = t.action(x).cycle_lengths();
  int total = std::accumulate(fd.cycle_lengths.begin(), fd.cycle_lengths.end(), 0);
  if (total != t.size())
    throw inconsistency("fiber_decomposition: cycle lengths do not cover the cosets");
  for (int l : fd.cycle_lengths)
    if (order_n % l != 0)
      throw inconsistency("fiber_decomposition: cycle length does not divide the cone order");
  return fd;
}

long product_fiber_count(const CosetTable& t1, const CosetTable& t2,
                         const Word& x) {
  long c1 = static_cast<long>(t1.action(x).cycle_lengths().size());
  long c2 = static_cast<long>(t2.action(x).cycle_lengths().size());
  return c1 * c2;
}

long diagonal_branch_count(const CosetTable& t1, const CosetTable& t2,
                           const Word& x) {
  Perm a = t1.action(x);
  Perm b = t2.action(x);
  int n1 = a.degree(), n2 = b.degree();
  std::vector<int> parent(static_cast<std::size_t>(n1 * n2));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      int src = i * n2 + j;
      int dst = a.apply(i) * n2 + b.apply(j);
      int rs = find(src), rd = find(dst);
      if (rs != rd) parent[static_cast<std::size_t>(std::max(rs, rd))] = std::min(rs, rd);
    }
  std::set<int> roots;
  for (int v = 0; v < n1 * n2; ++v) roots.insert(find(v));
  return static_cast<long>(roots.size());
}

}  // namespace bq
