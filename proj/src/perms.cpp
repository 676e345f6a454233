#include "bq/perms.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bq/exact.hpp"

namespace bq {

Perm::Perm(int degree) : img_(static_cast<std::size_t>(degree)) {
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> hit(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || hit[static_cast<std::size_t>(v)])
      throw std::invalid_argument("perm: images are not a bijection");
    hit[static_cast<std::size_t>(v)] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.compare(pos, 2, "Id") == 0 || text.compare(pos, 2, "id") == 0)
    return Perm(degree);
  while (pos < text.size()) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("cycles: expected '(' in \"" + text + "\"");
    ++pos;
    std::vector<int> cyc;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw std::invalid_argument("cycles: expected point in \"" + text + "\"");
      int pt = std::stoi(text.substr(start, pos - start));
      if (pt < 1 || pt > degree) throw std::invalid_argument("cycles: point out of range");
      cyc.push_back(pt - 1);
      skip();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i)
      img[static_cast<std::size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
  }
  return from_images(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[static_cast<std::size_t>(img_[static_cast<std::size_t>(i)])] = i;
  Perm p;
  p.img_ = std::move(out);
  return p;
}

int Perm::order() const {
  Perm acc = *this;
  int k = 1;
  while (!acc.is_identity()) {
    acc = compose(acc, *this);
    ++k;
  }
  return k;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      cyc.push_back(j);
      j = img_[static_cast<std::size_t>(j)];
    }
    if (cyc.size() > 1) out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_lengths() const {
  std::vector<bool> seen(img_.size(), false);
  std::vector<int> out;
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
      j = img_[static_cast<std::size_t>(j)];
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Perm::cycle_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "Id";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << " ";
      os << c[i] + 1;
    }
    os << ")";
  }
  return os.str();
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) out[static_cast<std::size_t>(i)] = q.apply(p.apply(i));
  return Perm::from_images(std::move(out));
}

Perm evaluate_word(const Word& w, const std::vector<Perm>& images) {
  if (images.empty()) throw std::invalid_argument("evaluate_word: no images");
  int deg = images[0].degree();
  for (const Perm& p : images)
    if (p.degree() != deg) throw std::invalid_argument("evaluate_word: degree mismatch");
  return evaluate_word_generic(
      w, images, Perm(deg), [](const Perm& x, const Perm& y) { return compose(x, y); },
      [](const Perm& x) { return x.inverse(); });
}

Perm direct_sum(const Perm& x, const Perm& y) {
  std::vector<int> img;
  img.reserve(static_cast<std::size_t>(x.degree() + y.degree()));
  for (int i = 0; i < x.degree(); ++i) img.push_back(x.apply(i));
  for (int i = 0; i < y.degree(); ++i) img.push_back(x.degree() + y.apply(i));
  return Perm::from_images(std::move(img));
}

FiniteGroup FiniteGroup::closure(const std::vector<Perm>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  int deg = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != deg) throw std::invalid_argument("closure: degree mismatch");
  FiniteGroup out;
  out.degree_ = deg;
  Perm id(deg);
  std::set<Perm> seen{id};
  out.elems_.push_back(id);
  std::size_t head = 0;
  while (head < out.elems_.size()) {
    Perm cur = out.elems_[head++];
    for (const Perm& g : gens) {
      Perm nxt = compose(cur, g);
      if (seen.insert(nxt).second) {
        if (out.elems_.size() + 1 > cap)
          throw resource_exhausted("closure cap of " + std::to_string(cap) +
                                   " elements exceeded");
        out.elems_.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

bool FiniteGroup::contains(const Perm& p) const {
  return std::find(elems_.begin(), elems_.end(), p) != elems_.end();
}

CosetSpace::CosetSpace(const FiniteGroup& g, const Perm& t) : group_(&g), t_(t) {
  if (!g.contains(t)) throw std::invalid_argument("coset space: t outside group");
  coset_index_.assign(g.order(), -1);
  std::map<Perm, std::size_t> pos;
  for (std::size_t i = 0; i < g.order(); ++i) pos[g.elements()[i]] = i;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_index_[i] >= 0) continue;
    const Perm& x = g.elements()[i];
    int id = static_cast<int>(reps_.size());
    reps_.push_back(x);
    // mark x, x t, x t^2, ...
    Perm cur = x;
    do {
      coset_index_[pos.at(cur)] = id;
      cur = compose(cur, t_);
    } while (!(cur == x));
  }
}

int CosetSpace::coset_of(const Perm& x) const {
  for (std::size_t i = 0; i < group_->order(); ++i)
    if (group_->elements()[i] == x) return coset_index_[i];
  throw std::invalid_argument("coset space: element outside group");
}

Perm CosetSpace::stabilizer_generator(int i) const {
  const Perm& x = reps_[static_cast<std::size_t>(i)];
  return compose(compose(x, t_), x.inverse());
}

Perm CosetSpace::left_translation(const Perm& u) const {
  std::vector<int> img(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i)
    img[static_cast<std::size_t>(i)] = coset_of(compose(u, reps_[static_cast<std::size_t>(i)]));
  return Perm::from_images(std::move(img));
}

int fiber_fixed_points(const FiniteGroup& g, const Perm& sigma, const Perm& t) {
  if (!g.contains(sigma) || !g.contains(t))
    throw std::invalid_argument("fiber_fixed_points: element outside group");
  CosetSpace cs(g, t);
  // <t> as a set
  std::set<Perm> tpow;
  Perm cur(t.degree());
  do {
    tpow.insert(cur);
    cur = compose(cur, t);
  } while (!cur.is_identity());
  int count = 0;
  for (int i = 0; i < cs.size(); ++i) {
    const Perm& x = cs.representative(i);
    Perm conj = compose(compose(x.inverse(), sigma), x);
    if (tpow.count(conj)) ++count;
  }
  return count;
}

OrbitInfo orbit_count(const std::vector<Perm>& action) {
  if (action.empty()) throw std::invalid_argument("orbit_count: empty action");
  int n = action[0].degree();
  std::set<Perm> elems(action.begin(), action.end());
  for (const Perm& a : elems) {
    if (a.degree() != n) throw std::invalid_argument("orbit_count: degree mismatch");
    for (const Perm& b : elems)
      if (!elems.count(compose(a, b)))
        throw std::invalid_argument("orbit_count: action set is not closed");
  }
  // union-find over points
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (const Perm& a : elems)
    for (int i = 0; i < n; ++i) unite(i, a.apply(i));
  std::map<int, int> sizes;
  for (int i = 0; i < n; ++i) ++sizes[find(i)];
  OrbitInfo info;
  info.orbits = static_cast<int>(sizes.size());
  info.transitive = info.orbits == 1;
  for (auto& [root, sz] : sizes) info.sizes.push_back(sz);
  std::sort(info.sizes.begin(), info.sizes.end());
  // Burnside: |orbits| * |G| = total fixed points, exactly. The dedup
  // set is the acting group (closed finite sets of perms are groups).
  long long fixed = 0;
  for (const Perm& a : elems)
    for (int i = 0; i < n; ++i)
      if (a.apply(i) == i) ++fixed;
  long long g = static_cast<long long>(elems.size());
  if (fixed != g * info.orbits)
    throw inconsistency("orbit_count: Burnside identity violated");
  return info;
}

}  // namespace bq
