#include "bq/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bq {

Word Word::reduce(const std::vector<Syllable>& raw) {
  Word w;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (s.gen < 0) throw std::invalid_argument("negative generator index");
    if (!w.syl_.empty() && w.syl_.back().gen == s.gen) {
      w.syl_.back().exp += s.exp;
      if (w.syl_.back().exp == 0) w.syl_.pop_back();
    } else {
      w.syl_.push_back(s);
    }
  }
  return w;
}

Word Word::generator(int gen, int exp) {
  return reduce({Syllable{gen, exp}});
}

int Word::max_generator() const {
  int m = -1;
  for (const Syllable& s : syl_) m = std::max(m, s.gen);
  return m;
}

int Word::letter_length() const {
  int n = 0;
  for (const Syllable& s : syl_) n += std::abs(s.exp);
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> out;
  out.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    out.push_back(Syllable{it->gen, -it->exp});
  Word w;
  w.syl_ = std::move(out);  // already reduced
  return w;
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Syllable> all = x.syllables();
  all.insert(all.end(), y.syllables().begin(), y.syllables().end());
  return Word::reduce(all);
}

Word Word::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Word acc;
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

Word Word::conjugated_by(const Word& w) const { return w * *this * w.inverse(); }

void Word::for_each_letter(const std::function<void(int, int)>& f) const {
  for (const Syllable& s : syl_) {
    int sign = s.exp > 0 ? 1 : -1;
    for (int i = 0; i < std::abs(s.exp); ++i) f(s.gen, sign);
  }
}

Word commutator(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

Assignment::Assignment(std::vector<std::string> source_names,
                       std::vector<Word> images)
    : names_(std::move(source_names)), images_(std::move(images)) {
  if (names_.size() != images_.size())
    throw std::invalid_argument("assignment: one image per source generator");
}

const Word& Assignment::image(int gen) const {
  if (gen < 0 || gen >= source_size())
    throw std::invalid_argument("assignment: generator index out of range");
  return images_[static_cast<std::size_t>(gen)];
}

Word substitute(const Word& w, const Assignment& a) {
  Word acc;
  for (const Syllable& s : w.syllables()) {
    if (s.gen >= a.source_size())
      throw std::invalid_argument("substitute: unknown generator index " +
                                  std::to_string(s.gen));
    acc = acc * a.image(s.gen).pow(s.exp);
  }
  return acc;
}

Presentation::Presentation(std::string name,
                           std::vector<std::string> generator_names,
                           std::vector<Word> relators,
                           std::vector<EllipticGenerator> elliptic)
    : name_(std::move(name)),
      gen_names_(std::move(generator_names)),
      relators_(std::move(relators)),
      elliptic_(std::move(elliptic)) {
  std::set<std::string> seen;
  for (const auto& g : gen_names_)
    if (!seen.insert(g).second)
      throw std::invalid_argument("presentation: duplicate generator " + g);
  int n = generator_count();
  for (const Word& r : relators_)
    if (r.max_generator() >= n)
      throw std::invalid_argument("presentation: relator uses undeclared generator");
  for (const EllipticGenerator& e : elliptic_) {
    if (e.word.max_generator() >= n)
      throw std::invalid_argument("presentation: elliptic word uses undeclared generator");
    if (e.order < 2)
      throw std::invalid_argument("presentation: elliptic order must be >= 2");
  }
}

int Presentation::generator_index(const std::string& name) const {
  for (int i = 0; i < generator_count(); ++i)
    if (gen_names_[static_cast<std::size_t>(i)] == name) return i;
  throw std::invalid_argument("presentation " + name_ + ": unknown generator '" +
                              name + "'");
}

namespace {

// Recursive descent over the word grammar.
struct WordParser {
  const std::string& text;
  const std::vector<std::string>& gens;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("word '" + text + "': " + msg + " at position " +
                                std::to_string(pos));
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stoi(text.substr(start, pos - start));
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected generator name");
    return text.substr(start, pos - start);
  }

  Word parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end");
    if (eat('(')) {
      Word w = parse_word_expr();
      if (!eat(')')) fail("expected ')'");
      return w;
    }
    if (eat('[')) {
      Word x = parse_word_expr();
      if (!eat(',')) fail("expected ',' in commutator");
      Word y = parse_word_expr();
      if (!eat(']')) fail("expected ']'");
      return commutator(x, y);
    }
    std::string id = parse_ident();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (gens[i] == id) return Word::generator(static_cast<int>(i));
    fail("unknown generator '" + id + "'");
  }

  Word parse_factor() {
    Word base = parse_atom();
    skip_ws();
    if (eat('^')) return base.pow(parse_int());
    return base;
  }

  Word parse_word_expr() {
    Word acc = parse_factor();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc * parse_factor();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& gens) {
  WordParser p{text, gens};
  Word w = p.parse_word_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return w;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& gens) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Syllable& s : w.syllables()) {
    if (!first) os << "*";
    first = false;
    os << gens.at(static_cast<std::size_t>(s.gen));
    if (s.exp != 1) os << "^" << s.exp;
  }
  return os.str();
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name = "G";
  std::vector<std::string> gens;
  std::vector<Word> relators;
  std::vector<EllipticGenerator> elliptic;
  bool saw_gens = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw[0] == '#') continue;
    auto rest_of = [&]() {
      std::string rest;
      std::getline(ls, rest);
      return rest;
    };
    if (kw == "group") {
      ls >> name;
    } else if (kw == "gens") {
      std::string g;
      while (ls >> g) gens.push_back(g);
      saw_gens = true;
    } else if (kw == "rel") {
      if (!saw_gens) throw std::invalid_argument("line " + std::to_string(lineno) + ": rel before gens");
      relators.push_back(parse_word(rest_of(), gens));
    } else if (kw == "elliptic") {
      if (!saw_gens) throw std::invalid_argument("line " + std::to_string(lineno) + ": elliptic before gens");
      // word then trailing order
      std::string rest = rest_of();
      std::size_t cut = rest.find_last_not_of(" \t");
      if (cut == std::string::npos)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": elliptic needs word and order");
      std::size_t sp = rest.find_last_of(" \t", cut);
      if (sp == std::string::npos)
        throw std::invalid_argument("line " + std::to_string(lineno) + ": elliptic needs word and order");
      int order = std::stoi(rest.substr(sp + 1, cut - sp));
      Word w = parse_word(rest.substr(0, sp), gens);
      elliptic.push_back(EllipticGenerator{w, order});
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": unknown keyword '" + kw + "'");
    }
  }
  return Presentation(name, gens, relators, elliptic);
}

std::string presentation_to_string(const Presentation& p) {
  std::ostringstream os;
  os << "group " << p.name() << "\n";
  os << "gens";
  for (const auto& g : p.generator_names()) os << " " << g;
  os << "\n";
  for (const Word& r : p.relators())
    os << "rel " << word_to_string(r, p.generator_names()) << "\n";
  for (const EllipticGenerator& e : p.elliptic())
    os << "elliptic " << word_to_string(e.word, p.generator_names()) << " "
       << e.order << "\n";
  return os.str();
}

}  // namespace bq
