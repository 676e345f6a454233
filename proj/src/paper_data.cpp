#include "bq/paper_data.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace bq {

namespace {

const std::string kGamma0Text =
    "group Gamma0\n"
    "gens p q r\n"
    "rel p^2\n"
    "rel q^3\n"
    "rel r^12\n"
    "rel p*q*r\n"
    "elliptic p 2\n"
    "elliptic q 3\n"
    "elliptic r 12\n";

const std::string kGamma1Text =
    "group Gamma1\n"
    "gens a b c d\n"
    "rel a^2\n"
    "rel b^3\n"
    "rel c^3\n"
    "rel d^3\n"
    "rel a*b*c*d\n"
    "elliptic a 2\n"
    "elliptic b 3\n"
    "elliptic c 3\n"
    "elliptic d 3\n";

const std::string kGamma2Text =
    "group Gamma2\n"
    "gens g h\n"
    "rel [g,h]^2\n"
    "elliptic [g,h] 2\n";

const std::string kGamma3Text =
    "group Gamma3\n"
    "gens t1 t2 s1 s2 s3\n"
    "rel s1^2\n"
    "rel s2^2\n"
    "rel s3^2\n"
    "rel [t1,t2]*(s1*s2*s3)^-1\n"
    "elliptic s1 2\n"
    "elliptic s2 2\n"
    "elliptic s3 2\n";

std::string gamma4_text() {
  std::ostringstream os;
  os << "group Gamma4\n";
  os << "gens u1 u2";
  for (int j = 1; j <= 12; ++j) os << " x" << j;
  os << "\n";
  for (int j = 1; j <= 12; ++j) os << "rel x" << j << "^2\n";
  os << "rel [u1,u2]*(x1";
  for (int j = 2; j <= 12; ++j) os << "*x" << j;
  os << ")^-1\n";
  for (int j = 1; j <= 12; ++j) os << "elliptic x" << j << " 2\n";
  return os.str();
}

const std::map<std::string, std::string>& builtin_texts() {
  static const std::map<std::string, std::string> texts = {
      {"Gamma0", kGamma0Text}, {"Gamma1", kGamma1Text}, {"Gamma2", kGamma2Text},
      {"Gamma3", kGamma3Text}, {"Gamma4", gamma4_text()},
  };
  return texts;
}

const std::vector<std::string> kPqr = {"p", "q", "r"};
const std::vector<std::string> kGh = {"g", "h"};
const std::vector<std::string> kAbcd = {"a", "b", "c", "d"};

}  // namespace

const std::string& builtin_presentation_text(const std::string& name) {
  auto it = builtin_texts().find(name);
  if (it == builtin_texts().end())
    throw std::invalid_argument("unknown built-in presentation '" + name + "'");
  return it->second;
}

std::vector<std::string> builtin_presentation_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : builtin_texts()) out.push_back(k);
  return out;
}

PaperData PaperData::standard() {
  PaperData pd{
      parse_presentation(builtin_presentation_text("Gamma0")),
      parse_presentation(builtin_presentation_text("Gamma1")),
      parse_presentation(builtin_presentation_text("Gamma2")),
      parse_presentation(builtin_presentation_text("Gamma3")),
      parse_presentation(builtin_presentation_text("Gamma4")),
      /*a=*/parse_word("r^6", kPqr),
      /*b=*/parse_word("q^2", kPqr),
      /*c=*/parse_word("(p*r)*q^2*(p*r)^-1", kPqr),
      /*d=*/parse_word("(p*r)^-1*q^2*(p*r)", kPqr),
      /*g=*/parse_word("(p*r*q)^-1", kPqr),
      /*h=*/parse_word("(q*p*r)^-1", kPqr),
      /*ts_gh=*/
      {parse_word("g^3", kGh), parse_word("g^-1*h", kGh), parse_word("[g,h]", kGh),
       parse_word("(h*g*h^-1)*[g,h]*(h*g*h^-1)^-1", kGh),
       parse_word("(h*g^-1*h^-1)*[g,h]*(h*g^-1*h^-1)^-1", kGh)},
      /*ts_abcd=*/
      {parse_word("b*d*c", kAbcd), parse_word("c^-1*b", kAbcd), parse_word("a", kAbcd),
       parse_word("(d^2*c*b^2)*a*(d^2*c*b^2)^-1", kAbcd),
       parse_word("d*a*d^-1", kAbcd)},
      /*rho1=*/
      {Perm::parse_cycles("(1 3)(2 4)", 4), Perm::parse_cycles("(1 3 2)", 4),
       Perm::parse_cycles("(1 2 4)", 4), Perm::parse_cycles("(1 2 4)", 4)},
      /*rho2=*/
      {Perm::parse_cycles("(1 2 3)", 4), Perm::parse_cycles("(1 4 2)", 4)},
      /*z3_gamma1=*/
      {Perm(3), Perm::parse_cycles("(1 2 3)", 3), Perm::parse_cycles("(1 2 3)", 3),
       Perm::parse_cycles("(1 2 3)", 3)},
      /*z3_gamma2=*/
      {Perm::parse_cycles("(1 2 3)", 3), Perm::parse_cycles("(1 2 3)", 3)},
  };
  return pd;
}

Assignment PaperData::abcd_to_pqr() const {
  return Assignment(kAbcd, {a, b, c, d});
}

Assignment PaperData::gh_to_pqr() const { return Assignment(kGh, {g, h}); }

std::vector<Word> PaperData::gamma1_subgens_pqr() const { return {a, b, c, d}; }

std::vector<Word> PaperData::gamma2_subgens_pqr() const { return {g, h}; }

std::vector<Word> PaperData::ts_pqr() const {
  Assignment sub = gh_to_pqr();
  std::vector<Word> out;
  for (const Word& w : ts_gh) out.push_back(substitute(w, sub));
  return out;
}

std::vector<Word> PaperData::gamma4_gens_in_gamma3() const {
  const Word t1 = Word::generator(0);
  const Word t2 = Word::generator(1);
  std::vector<Word> out = {t1.pow(2), t2.pow(2)};
  const std::vector<Word> conjugators = {Word(), t1, t2, t1 * t2};
  for (int j = 0; j < 3; ++j) {
    Word s = Word::generator(2 + j);
    for (const Word& w : conjugators) out.push_back(s.conjugated_by(w));
  }
  return out;
}

std::vector<Word> PaperData::gamma4_gens_gh() const {
  // gamma3's abstract generators map to their {g,h} expressions
  Assignment to_gh(gamma3.generator_names(),
                   {ts_gh[0], ts_gh[1], ts_gh[2], ts_gh[3], ts_gh[4]});
  std::vector<Word> out;
  for (const Word& w : gamma4_gens_in_gamma3()) out.push_back(substitute(w, to_gh));
  return out;
}

}  // namespace bq
