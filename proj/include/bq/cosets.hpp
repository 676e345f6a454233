#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bq/perms.hpp"
#include "bq/words.hpp"

namespace bq {

enum class Strategy { Hlt, Felsch };

/// Complete right-coset table: the action of every signed generator on
/// every coset of a finitely generated subgroup. Coset 0 is the subgroup
/// itself. Tables are immutable once built and validate their own
/// invariants on construction: totality, g then g^-1 is the identity,
/// every relator acts trivially everywhere, every subgroup generator
/// fixes coset 0.
class CosetTable {
 public:
  int size() const { return static_cast<int>(rows_.size()); }
  const Presentation& parent() const { return parent_; }
  const std::vector<Word>& subgroup_generators() const { return subgens_; }

  int act_letter(int coset, int gen, int sign) const {
    return rows_[static_cast<std::size_t>(coset)]
                [static_cast<std::size_t>(2 * gen + (sign < 0 ? 1 : 0))];
  }
  int act_word(int coset, const Word& w) const;

  /// The permutation a word induces on cosets (right action).
  Perm action(const Word& w) const;

  /// One representative word per coset, read off a breadth-first
  /// spanning tree rooted at coset 0.
  std::vector<Word> transversal() const;

  /// Coset x generator grid, for debugging.
  std::string tsv() const;

  friend CosetTable todd_coxeter(const Presentation&, const std::vector<Word>&,
                                 std::size_t, Strategy);
  friend CosetTable kernel_table(const Presentation&, const std::vector<Perm>&,
                                 std::size_t);

 private:
  CosetTable(Presentation parent, std::vector<Word> subgens,
             std::vector<std::vector<int>> rows);
  void validate() const;

  Presentation parent_;
  std::vector<Word> subgens_;
  std::vector<std::vector<int>> rows_;  // size x 2*ngens
};

/// Coset enumeration. Deterministic for fixed input: cosets are numbered
/// in first-definition order. Throws resource_exhausted once more than
/// max_cosets cosets have been defined (coincidences do not give the
/// space back).
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::size_t max_cosets = 100000,
                        Strategy strategy = Strategy::Hlt);

/// True iff conjugating any subgroup generator by any transversal word
/// fixes coset 0, i.e. the subgroup is normal in the presented group.
bool is_normal(const CosetTable& t);

/// Coset table of the kernel of the homomorphism sending generator i to
/// images[i], built from the regular action of the image group on
/// itself. Rejects assignments that are not homomorphisms. The table has
/// one coset per element of the image group; its subgroup generator list
/// is empty (the subgroup is specified as a kernel, not by generators).
CosetTable kernel_table(const Presentation& p, const std::vector<Perm>& images,
                        std::size_t cap = 1000000);

/// Equality of the two coset actions up to relabeling of cosets, decided
/// by comparing breadth-first canonical forms rooted at coset 0.
bool same_action_up_to_relabeling(const CosetTable& a, const CosetTable& b);

}  // namespace bq
