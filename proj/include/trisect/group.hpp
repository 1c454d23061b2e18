#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trisect/diagram.hpp"
#include "trisect/int_matrix.hpp"

namespace trisect {

// Generator k (0-based) is the letter k+1; its inverse is -(k+1).
using Letter = int;
using Relator = std::vector<Letter>;

inline std::size_t letter_generator(Letter l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }
inline Letter generator_letter(std::size_t k, bool inverted = false) {
  const auto l = static_cast<Letter>(k + 1);
  return inverted ? -l : l;
}

Relator reduce_relator(Relator r, bool cyclic);
Relator invert_relator(const Relator& r);
// Least rotation of the cyclic reduction of r or of r^-1.
Relator canonical_relator(const Relator& r);

// A finite presentation. Generator names are display-only.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Relator> relators;

  std::size_t generator_count() const { return generators.size(); }
  // Relator in generator names; inverses upper-cased; the identity is "e".
  std::string format(const Relator& r) const;
  // "< x1, x2 | x1 x2 X1 X2 >"
  std::string to_string() const;

  // Throws ValidationError if a relator mentions a generator that does not exist.
  void check() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Presentation with generators x1..xn.
Presentation make_presentation(std::size_t generators, std::vector<Relator> relators);

// Generators a1..ag, b1..bg; relators the surface relation and every curve word.
Presentation pi1_presentation(const TrisectionDiagram& d);
// Surface relation followed by the words of the given families.
Presentation surface_quotient(int genus, const std::vector<const CutSystem*>& families);
Relator surface_relator(int genus);
Relator relator_from_word(const Word& w, int genus);

// Exponent-sum rows, one per relator.
IntMatrix relator_matrix(const Presentation& p);
QuotientInvariants abelianize_presentation(const Presentation& p);

struct TietzeOutcome {
  Presentation presentation;
  std::size_t steps = 0;
  bool fixpoint = false;
};

// Bounded Tietze simplification. Moves, in priority order: drop a generator killed by a
// length-one relator; shorten a relator using more than half of another; eliminate a generator
// occurring once in some relator. Each applied move costs one step.
TietzeOutcome tietze_run(const Presentation& p, std::size_t budget);
Presentation tietze_simplify(const Presentation& p, std::size_t budget);

// Relators cyclically reduced, replaced by the least rotation of r or r^-1, deduplicated and
// sorted; generators kept in order. Names are preserved.
Presentation normalize(const Presentation& p);
// normalize() plus generator names x1..xn, so presentations can be compared structurally.
Presentation canonical_form(const Presentation& p);

inline const Integer& default_hom_cap() {
  static const Integer cap("1000000000");
  return cap;
}

// n!^(generators occurring in some relator).
Integer count_homs_cost(const Presentation& p, int n);

// Number of homomorphisms from the group into the symmetric group S_n (1 <= n <= 5).
// Throws RefusedError when count_homs_cost exceeds `cap`. `threads` == 0 picks the hardware count.
Integer count_homs(const Presentation& p, int n, const Integer& cap = default_hom_cap(),
                   unsigned threads = 0);

}  // namespace trisect
