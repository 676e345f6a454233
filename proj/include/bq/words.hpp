#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace bq {

/// One run of a word: generator index raised to a nonzero power.
struct Syllable {
  int gen = 0;
  int exp = 0;
  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in abstract generators, stored as runs.
/// Adjacent syllables always have distinct generator indices and no
/// syllable has exponent zero; the empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Free reduction of an arbitrary syllable sequence.
  static Word reduce(const std::vector<Syllable>& raw);
  static Word generator(int gen, int exp = 1);

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }
  int max_generator() const;  // -1 for the identity word
  int letter_length() const;

  Word inverse() const;
  Word pow(int k) const;
  Word conjugated_by(const Word& w) const;  // w * this * w^-1

  friend Word operator*(const Word& x, const Word& y);
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

  /// Visit letters left to right as (generator, +1 or -1).
  void for_each_letter(const std::function<void(int, int)>& f) const;

 private:
  std::vector<Syllable> syl_;
};

// Commutator convention used throughout: [x,y] = x y x^-1 y^-1.
// The convention is pinned by the requirement that the identity
// [g,h] = a holds in the triangle rotation group; the exact matrix
// representation confirms this expansion and rejects x^-1 y^-1 x y.
// Certificates record the convention in their header.
Word commutator(const Word& x, const Word& y);
inline constexpr const char* kCommutatorConvention = "[x,y] = x*y*x^-1*y^-1";
inline constexpr const char* kActionConvention =
    "permutations act on the right; words act on cosets on the right";

/// Total map from the generators of a source presentation to words over
/// another generating set.
class Assignment {
 public:
  Assignment(std::vector<std::string> source_names, std::vector<Word> images);
  const Word& image(int gen) const;
  int source_size() const { return static_cast<int>(images_.size()); }
  const std::string& source_name(int gen) const { return names_[gen]; }

 private:
  std::vector<std::string> names_;
  std::vector<Word> images_;
};

/// Textual substitution followed by free reduction. Throws
/// std::invalid_argument naming the offending symbol when w uses a
/// generator outside the assignment's domain.
Word substitute(const Word& w, const Assignment& a);

struct EllipticGenerator {
  Word word;
  int order = 0;  // declared order, >= 2
};

/// Finite presentation with declared finite-order (elliptic) generators.
class Presentation {
 public:
  Presentation(std::string name, std::vector<std::string> generator_names,
               std::vector<Word> relators,
               std::vector<EllipticGenerator> elliptic);

  const std::string& name() const { return name_; }
  int generator_count() const { return static_cast<int>(gen_names_.size()); }
  const std::vector<std::string>& generator_names() const { return gen_names_; }
  int generator_index(const std::string& name) const;  // throws if unknown
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<EllipticGenerator>& elliptic() const { return elliptic_; }

 private:
  std::string name_;
  std::vector<std::string> gen_names_;
  std::vector<Word> relators_;
  std::vector<EllipticGenerator> elliptic_;
};

// Word grammar: juxtaposition with '*', powers with '^', inverses as
// '^-1', parentheses, and commutators '[x,y]'. Example:
//   (p*r)*q^2*(p*r)^-1
Word parse_word(const std::string& text, const std::vector<std::string>& gens);
std::string word_to_string(const Word& w, const std::vector<std::string>& gens);

// Presentation text format, one declaration per line:
//   group <name>
//   gens <g1> <g2> ...
//   rel <word>
//   elliptic <word> <order>
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(const std::string& text);
std::string presentation_to_string(const Presentation& p);

struct HomReport {
  bool pass = false;
  std::vector<int> failing_relators;  // indices into relators()
};

/// Evaluate a word homomorphically through per-generator images.
template <class Elt, class Mul, class Inv>
Elt evaluate_word_generic(const Word& w, const std::vector<Elt>& images,
                          const Elt& id, Mul mul, Inv inv) {
  Elt acc = id;
  w.for_each_letter([&](int gen, int sign) {
    const Elt& base = images.at(static_cast<std::size_t>(gen));
    acc = sign > 0 ? mul(acc, base) : mul(acc, inv(base));
  });
  return acc;
}

/// A homomorphism out of a presented group is well defined iff every
/// relator maps to the identity of the target. Failure is reported, not
/// thrown.
template <class Elt, class Mul, class Inv, class IsId>
HomReport check_hom(const Presentation& p, const std::vector<Elt>& images,
                    const Elt& id, Mul mul, Inv inv, IsId is_id) {
  if (static_cast<int>(images.size()) != p.generator_count())
    throw std::invalid_argument("check_hom: need one image per generator");
  HomReport rep;
  rep.pass = true;
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    Elt v = evaluate_word_generic(p.relators()[i], images, id, mul, inv);
    if (!is_id(v)) {
      rep.pass = false;
      rep.failing_relators.push_back(static_cast<int>(i));
    }
  }
  return rep;
}

}  // namespace bq
