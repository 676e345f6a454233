#include "bq/cosets.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bq/exact.hpp"

namespace bq {

namespace {

// Letters encode signed generators: 2g for g, 2g+1 for g^-1.
std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  w.for_each_letter([&](int gen, int sign) {
    out.push_back(2 * gen + (sign < 0 ? 1 : 0));
  });
  return out;
}

inline int inv_letter(int l) { return l ^ 1; }

// Shared enumeration core. Cosets are numbered in definition order;
// coincidences merge the larger index into the smaller, so surviving
// numbers are reproducible for fixed input and strategy.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens,
             std::size_t max_cosets, Strategy strategy)
      : nl_(2 * p.generator_count()), max_(max_cosets) {
    for (const Word& r : p.relators()) rels_.push_back(word_letters(r));
    for (const Word& s : subgens) subs_.push_back(word_letters(s));
    new_coset();
    if (strategy == Strategy::Hlt)
      run_hlt();
    else
      run_felsch();
  }

  std::vector<std::vector<int>> compress() {
    std::vector<int> live;
    for (int i = 0; i < ncosets(); ++i)
      if (find(i) == i) live.push_back(i);
    std::vector<int> remap(table_.size(), -1);
    for (std::size_t n = 0; n < live.size(); ++n) remap[static_cast<std::size_t>(live[n])] = static_cast<int>(n);
    std::vector<std::vector<int>> rows;
    rows.reserve(live.size());
    for (int o : live) {
      std::vector<int> row(static_cast<std::size_t>(nl_), -1);
      for (int l = 0; l < nl_; ++l) {
        int t = table_[static_cast<std::size_t>(o)][static_cast<std::size_t>(l)];
        if (t >= 0) row[static_cast<std::size_t>(l)] = remap[static_cast<std::size_t>(find(t))];
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

 private:
  int ncosets() const { return static_cast<int>(table_.size()); }

  int find(int x) {
    while (rep_[static_cast<std::size_t>(x)] != x) {
      rep_[static_cast<std::size_t>(x)] = rep_[static_cast<std::size_t>(rep_[static_cast<std::size_t>(x)])];
      x = rep_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  int entry(int c, int l) const { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)]; }

  int new_coset() {
    if (ndef_ >= max_)
      throw resource_exhausted("coset enumeration exceeded max_cosets = " +
                               std::to_string(max_));
    table_.emplace_back(static_cast<std::size_t>(nl_), -1);
    rep_.push_back(ncosets() - 1);
    ++ndef_;
    return ncosets() - 1;
  }

  int define(int from, int l) {
    int c = new_coset();
    table_[static_cast<std::size_t>(from)][static_cast<std::size_t>(l)] = c;
    table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(inv_letter(l))] = from;
    return c;
  }

  void merge(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (x > y) std::swap(x, y);
    rep_[static_cast<std::size_t>(y)] = x;
    dead_.push_back(y);
  }

  // Re-home the edges of merged-away cosets, possibly discovering more
  // coincidences along the way.
  void process_coincidences() {
    while (!dead_.empty()) {
      int y = dead_.front();
      dead_.pop_front();
      std::vector<int> row = std::move(table_[static_cast<std::size_t>(y)]);
      table_[static_cast<std::size_t>(y)].assign(static_cast<std::size_t>(nl_), -1);
      for (int l = 0; l < nl_; ++l) {
        int t = row[static_cast<std::size_t>(l)];
        if (t < 0) continue;
        set_entry(find(y), l, find(t));
      }
    }
  }

  // Install coset --l--> target and its inverse edge; conflicting prior
  // entries become coincidences.
  void set_entry(int c, int l, int t) {
    c = find(c);
    t = find(t);
    int prior = entry(c, l);
    if (prior >= 0)
      merge(find(prior), t);
    else
      table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] = t;
    int back = entry(t, inv_letter(l));
    if (back >= 0)
      merge(find(back), c);
    else
      table_[static_cast<std::size_t>(t)][static_cast<std::size_t>(inv_letter(l))] = c;
  }

  // Scan `word` from `start`, filling gaps with fresh cosets (HLT).
  void scan_fill(int start, const std::vector<int>& word) {
    int anchor = find(start);
    while (true) {
      int f = anchor;
      std::size_t i = 0;
      while (i < word.size() && entry(f, word[i]) >= 0) {
        f = find(entry(f, word[i]));
        ++i;
      }
      if (i == word.size()) {
        merge(f, anchor);
        process_coincidences();
        return;
      }
      int b = anchor;
      std::size_t j = word.size();
      while (j > i && entry(b, inv_letter(word[j - 1])) >= 0) {
        b = find(entry(b, inv_letter(word[j - 1])));
        --j;
      }
      if (j == i) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i + 1) {
        set_entry(f, word[i], b);
        process_coincidences();
        return;
      }
      define(f, word[i]);
      anchor = find(anchor);
    }
  }

  // Scan without definitions: close one-letter gaps, report wider gaps.
  // Returns true when the table changed.
  bool scan_deduce(int start, const std::vector<int>& word) {
    int anchor = find(start);
    int f = anchor;
    std::size_t i = 0;
    while (i < word.size() && entry(f, word[i]) >= 0) {
      f = find(entry(f, word[i]));
      ++i;
    }
    if (i == word.size()) {
      if (f != anchor) {
        merge(f, anchor);
        process_coincidences();
        return true;
      }
      return false;
    }
    int b = anchor;
    std::size_t j = word.size();
    while (j > i && entry(b, inv_letter(word[j - 1])) >= 0) {
      b = find(entry(b, inv_letter(word[j - 1])));
      --j;
    }
    if (j == i) {
      merge(f, b);
      process_coincidences();
      return true;
    }
    if (j == i + 1) {
      set_entry(f, word[i], b);
      process_coincidences();
      return true;
    }
    return false;
  }

  void run_hlt() {
    for (const auto& s : subs_) scan_fill(0, s);
    for (int idx = 0; idx < ncosets(); ++idx) {
      if (find(idx) != idx) continue;
      for (const auto& r : rels_) {
        if (find(idx) != idx) break;
        scan_fill(idx, r);
      }
      if (find(idx) != idx) continue;
      // ensure totality even for generators no relator mentions
      for (int l = 0; l < nl_; ++l)
        if (entry(idx, l) < 0) define(idx, l);
    }
  }

  void run_felsch() {
    for (const auto& s : subs_) scan_fill(0, s);
    while (true) {
      // deduction saturation
      bool changed = true;
      while (changed) {
        changed = false;
        for (const auto& s : subs_)
          if (scan_deduce(0, s)) changed = true;
        for (int c = 0; c < ncosets(); ++c) {
          if (find(c) != c) continue;
          for (const auto& r : rels_)
            if (find(c) == c && scan_deduce(c, r)) changed = true;
        }
      }
      // first hole in coset-major, letter-major order
      int hc = -1, hl = -1;
      for (int c = 0; c < ncosets() && hc < 0; ++c) {
        if (find(c) != c) continue;
        for (int l = 0; l < nl_; ++l)
          if (entry(c, l) < 0) {
            hc = c;
            hl = l;
            break;
          }
      }
      if (hc < 0) return;
      define(hc, hl);
    }
  }

  int nl_;
  std::size_t max_;
  std::size_t ndef_ = 0;
  std::vector<std::vector<int>> rels_;
  std::vector<std::vector<int>> subs_;
  std::vector<std::vector<int>> table_;
  std::vector<int> rep_;
  std::deque<int> dead_;
};

}  // namespace

CosetTable::CosetTable(Presentation parent, std::vector<Word> subgens,
                       std::vector<std::vector<int>> rows)
    : parent_(std::move(parent)), subgens_(std::move(subgens)), rows_(std::move(rows)) {
  validate();
}

void CosetTable::validate() const {
  int n = size();
  int nl = 2 * parent_.generator_count();
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(rows_[static_cast<std::size_t>(c)].size()) != nl)
      throw std::logic_error("coset table: ragged row");
    for (int l = 0; l < nl; ++l) {
      int t = rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)];
      if (t < 0 || t >= n) throw std::logic_error("coset table: incomplete");
      if (rows_[static_cast<std::size_t>(t)][static_cast<std::size_t>(l ^ 1)] != c)
        throw std::logic_error("coset table: action by g then g^-1 is not the identity");
    }
  }
  for (const Word& r : parent_.relators())
    for (int c = 0; c < n; ++c)
      if (act_word(c, r) != c)
        throw std::logic_error("coset table: relator acts nontrivially");
  for (const Word& s : subgens_)
    if (act_word(0, s) != 0)
      throw std::logic_error("coset table: subgroup generator moves coset 0");
}

int CosetTable::act_word(int coset, const Word& w) const {
  int c = coset;
  w.for_each_letter([&](int gen, int sign) { c = act_letter(c, gen, sign); });
  return c;
}

Perm CosetTable::action(const Word& w) const {
  if (w.max_generator() >= parent_.generator_count())
    throw std::invalid_argument("coset action: word uses undeclared generator");
  std::vector<int> img(static_cast<std::size_t>(size()));
  for (int c = 0; c < size(); ++c) img[static_cast<std::size_t>(c)] = act_word(c, w);
  return Perm::from_images(std::move(img));
}

std::vector<Word> CosetTable::transversal() const {
  std::vector<Word> reps(static_cast<std::size_t>(size()));
  std::vector<bool> seen(static_cast<std::size_t>(size()), false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int gen = 0; gen < parent_.generator_count(); ++gen) {
      for (int sign : {1, -1}) {
        int t = act_letter(c, gen, sign);
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          reps[static_cast<std::size_t>(t)] =
              reps[static_cast<std::size_t>(c)] * Word::generator(gen, sign);
          queue.push_back(t);
        }
      }
    }
  }
  return reps;
}

std::string CosetTable::tsv() const {
  std::ostringstream os;
  os << "coset";
  for (const std::string& g : parent_.generator_names())
    os << "\t" << g << "\t" << g << "^-1";
  os << "\n";
  for (int c = 0; c < size(); ++c) {
    os << c + 1;
    for (int gen = 0; gen < parent_.generator_count(); ++gen)
      os << "\t" << act_letter(c, gen, 1) + 1 << "\t" << act_letter(c, gen, -1) + 1;
    os << "\n";
  }
  return os.str();
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::size_t max_cosets, Strategy strategy) {
  if (max_cosets < 1) throw std::invalid_argument("todd_coxeter: max_cosets must be >= 1");
  for (const Word& s : subgens)
    if (s.max_generator() >= p.generator_count())
      throw std::invalid_argument("todd_coxeter: subgroup word uses undeclared generator");
  Enumerator e(p, subgens, max_cosets, strategy);
  return CosetTable(p, subgens, e.compress());
}

bool is_normal(const CosetTable& t) {
  std::vector<Word> reps = t.transversal();
  for (const Word& s : t.subgroup_generators())
    for (const Word& g : reps)
      if (t.act_word(0, g * s * g.inverse()) != 0) return false;
  return true;
}

CosetTable kernel_table(const Presentation& p, const std::vector<Perm>& images,
                        std::size_t cap) {
  HomReport rep = check_hom(
      p, images, Perm(images.empty() ? 0 : images[0].degree()),
      [](const Perm& x, const Perm& y) { return compose(x, y); },
      [](const Perm& x) { return x.inverse(); },
      [](const Perm& x) { return x.is_identity(); });
  if (!rep.pass)
    throw std::invalid_argument("kernel_table: images do not define a homomorphism (" +
                                std::to_string(rep.failing_relators.size()) +
                                " relators fail)");
  FiniteGroup g = FiniteGroup::closure(images, cap);
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < g.order(); ++i) index[g.elements()[i]] = static_cast<int>(i);
  int ngens = p.generator_count();
  std::vector<std::vector<int>> rows(g.order(), std::vector<int>(static_cast<std::size_t>(2 * ngens)));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (int gen = 0; gen < ngens; ++gen) {
      rows[i][static_cast<std::size_t>(2 * gen)] =
          index.at(compose(g.elements()[i], images[static_cast<std::size_t>(gen)]));
      rows[i][static_cast<std::size_t>(2 * gen + 1)] =
          index.at(compose(g.elements()[i], images[static_cast<std::size_t>(gen)].inverse()));
    }
  }
  return CosetTable(p, {}, std::move(rows));
}

bool same_action_up_to_relabeling(const CosetTable& a, const CosetTable& b) {
  if (a.size() != b.size()) return false;
  if (a.parent().generator_count() != b.parent().generator_count()) return false;
  auto canon = [](const CosetTable& t) {
    int n = t.size();
    int ng = t.parent().generator_count();
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    pos[0] = 0;
    order.push_back(0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int c = queue.front();
      queue.pop_front();
      for (int gen = 0; gen < ng; ++gen)
        for (int sign : {1, -1}) {
          int x = t.act_letter(c, gen, sign);
          if (pos[static_cast<std::size_t>(x)] < 0) {
            pos[static_cast<std::size_t>(x)] = static_cast<int>(order.size());
            order.push_back(x);
            queue.push_back(x);
          }
        }
    }
    std::vector<std::vector<int>> rows;
    for (int o : order) {
      std::vector<int> row;
      for (int gen = 0; gen < ng; ++gen)
        for (int sign : {1, -1})
          row.push_back(pos[static_cast<std::size_t>(t.act_letter(o, gen, sign))]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return canon(a) == canon(b);
}

}  // namespace bq
