#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/int_matrix.hpp"
#include "trisect/word.hpp"

namespace trisect {

enum class Family { Alpha, Beta, Gamma };

inline constexpr std::array<Family, 3> kFamilies = {Family::Alpha, Family::Beta, Family::Gamma};

std::string_view family_name(Family f);
// Accepts "alpha", "beta", "gamma".
std::optional<Family> parse_family(std::string_view name);

// A curve class on the genus-g surface. The word is cyclically reduced.
struct Curve {
  Word word;
  IntVector homology;

  friend bool operator==(const Curve&, const Curve&) = default;
};

// Why a list of curves is not a cut system.
struct CutSystemFailure {
  enum class Kind { WrongCount, IndexOutOfRange, NotLagrangian, RankDeficient, Imprimitive };

  Kind kind;
  std::string message;
  // NotLagrangian: the first offending pair (0-based) and its pairing.
  std::size_t first = 0;
  std::size_t second = 0;
  Integer pairing = 0;
  // Imprimitive: Smith divisors of the homology matrix greater than one.
  std::vector<Integer> divisors;
};

class CutSystemError : public ValidationError {
 public:
  explicit CutSystemError(CutSystemFailure failure)
      : ValidationError(failure.message), failure_(std::move(failure)) {}
  const CutSystemFailure& failure() const { return failure_; }

 private:
  CutSystemFailure failure_;
};

// g curves whose homology rows span a primitive Lagrangian sublattice of H_1(surface).
class CutSystem {
 public:
  // Canonicalizes the words and checks count, indices, Lagrangian and primitivity.
  // Throws CutSystemError.
  static CutSystem validate(const std::vector<Word>& curves, int genus);
  static std::optional<CutSystemFailure> check(const std::vector<Word>& curves, int genus);

  int genus() const { return genus_; }
  const std::vector<Curve>& curves() const { return curves_; }
  std::vector<Word> words() const;
  // g x 2g matrix of homology rows.
  const IntMatrix& matrix() const { return matrix_; }

  friend bool operator==(const CutSystem&, const CutSystem&) = default;

 private:
  CutSystem(int genus, std::vector<Curve> curves, IntMatrix matrix)
      : genus_(genus), curves_(std::move(curves)), matrix_(std::move(matrix)) {}

  int genus_ = 0;
  std::vector<Curve> curves_;
  IntMatrix matrix_;
};

struct HeegaardDiagram {
  int genus = 0;
  CutSystem first;
  CutSystem second;

  HeegaardDiagram(CutSystem first, CutSystem second);
  friend bool operator==(const HeegaardDiagram&, const HeegaardDiagram&) = default;
};

class TrisectionDiagram {
 public:
  // Throws ValidationError if the systems live on different genera.
  TrisectionDiagram(CutSystem alpha, CutSystem beta, CutSystem gamma);

  int genus() const { return alpha_.genus(); }
  const CutSystem& alpha() const { return alpha_; }
  const CutSystem& beta() const { return beta_; }
  const CutSystem& gamma() const { return gamma_; }
  const CutSystem& family(Family f) const;

  friend bool operator==(const TrisectionDiagram&, const TrisectionDiagram&) = default;

 private:
  CutSystem alpha_;
  CutSystem beta_;
  CutSystem gamma_;
};

inline CutSystem validate_cut_system(const std::vector<Word>& curves, int genus) {
  return CutSystem::validate(curves, genus);
}

// Slides curve i over curve j (0-based): w_i becomes w_i * c * w_j^sign * c^-1.
CutSystem handle_slide(const CutSystem& system, std::size_t i, std::size_t j,
                       const Word& conjugator = {}, int sign = 1);
TrisectionDiagram handle_slide(const TrisectionDiagram& d, Family family, std::size_t i,
                               std::size_t j, const Word& conjugator = {}, int sign = 1);

// Adds handle g+1; `family` receives b_{g+1}, the other two receive a_{g+1}.
TrisectionDiagram stabilize(const TrisectionDiagram& d, Family family);

TrisectionDiagram connected_sum(const TrisectionDiagram& first, const TrisectionDiagram& second);

// S4, CP2, CP2BAR, S1xS3, S2xS2. Throws ValidationError for other names.
TrisectionDiagram standard_diagram(std::string_view name);
const std::vector<std::string>& standard_diagram_names();

// (alpha, beta), (beta, gamma), (gamma, alpha), always in this order.
std::array<HeegaardDiagram, 3> heegaard_pairs(const TrisectionDiagram& d);

}  // namespace trisect
