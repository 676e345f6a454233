#pragma once

#include <array>
#include <vector>

#include "bq/perms.hpp"
#include "bq/words.hpp"

namespace bq {

/// All input data of the construction: the five built-in presentations,
/// the distinguished elements of the triangle rotation group, their
/// expressions over each generating set, and the finite-group images.
/// The fields are plain data so a test can corrupt one item and watch
/// the pipeline catch it; everything downstream is re-derived from what
/// is here.
struct PaperData {
  Presentation gamma0;  // <p,q,r | p^2, q^3, r^12, pqr>
  Presentation gamma1;  // <a,b,c,d | a^2, b^3, c^3, d^3, abcd>
  Presentation gamma2;  // <g,h | [g,h]^2>
  Presentation gamma3;  // <t1,t2,s1,s2,s3 | s_j^2, [t1,t2] = s1 s2 s3>
  Presentation gamma4;  // <u1,u2,x1..x12 | x_j^2, [u1,u2] = x1...x12>

  // distinguished elements as words over {p,q,r}
  Word a, b, c, d, g, h;

  // t1, t2, s1, s2, s3 over {g,h} and over {a,b,c,d}
  std::array<Word, 5> ts_gh;
  std::array<Word, 5> ts_abcd;

  // images of a,b,c,d and of g,h in the alternating group on {1,2,3,4}
  std::vector<Perm> rho1;
  std::vector<Perm> rho2;

  // the two Z/3 quotients cutting out the intersection subgroup:
  // images of a,b,c,d resp. g,h in the cyclic group on 3 points
  std::vector<Perm> z3_gamma1;
  std::vector<Perm> z3_gamma2;

  static PaperData standard();

  // Derived expansions; recomputed from the fields above so a mutated
  // copy stays coherent.
  Assignment abcd_to_pqr() const;
  Assignment gh_to_pqr() const;
  std::vector<Word> gamma1_subgens_pqr() const;  // {a,b,c,d}
  std::vector<Word> gamma2_subgens_pqr() const;  // {g,h}
  std::vector<Word> ts_pqr() const;              // t,s expanded over p,q,r

  /// Generators of the diagonal-condition subgroup inside gamma3:
  /// t1^2, t2^2 and the conjugates w s_j w^-1 for w in {1, t1, t2, t1 t2}.
  std::vector<Word> gamma4_gens_in_gamma3() const;
  /// The same words pushed down to {g,h}.
  std::vector<Word> gamma4_gens_gh() const;
};

/// The shipped presentation source text for one of the built-in groups
/// ("Gamma0" .. "Gamma4"), in the line-based format parse_presentation
/// accepts. Throws on unknown names.
const std::string& builtin_presentation_text(const std::string& name);
std::vector<std::string> builtin_presentation_names();

}  // namespace bq
