#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trisect/errors.hpp"

namespace trisect {

enum class GeneratorKind : std::uint8_t { A, B };

// One letter a_i, b_i or an inverse (spelled A_i, B_i in text).
struct GeneratorToken {
  GeneratorKind kind = GeneratorKind::A;
  int index = 1;
  bool inverted = false;

  GeneratorToken inverse() const { return {kind, index, !inverted}; }
  bool cancels(const GeneratorToken& other) const {
    return kind == other.kind && index == other.index && inverted != other.inverted;
  }
  std::string to_string() const;

  friend auto operator<=>(const GeneratorToken&, const GeneratorToken&) = default;
};

// A word in the free group on a_1..a_g, b_1..b_g. Not reduced unless produced by canonicalize().
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<GeneratorToken> tokens) : tokens_(std::move(tokens)) {}

  // Parses whitespace-separated tokens (`a1 B2`); `e` alone is the empty word.
  static Word parse(std::string_view text);

  const std::vector<GeneratorToken>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }
  // Largest generator index used, 0 for the empty word.
  int max_index() const;

  // Concatenation without reduction.
  Word operator*(const Word& other) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<GeneratorToken> tokens_;
};

// Freely reduces `w`; with `cyclic`, also cyclically reduces. Idempotent.
Word canonicalize(const Word& w, bool cyclic);

// As above, additionally rejecting tokens whose index exceeds `genus`.
Word canonicalize(const Word& w, bool cyclic, int genus);

Word invert(const Word& w);

// Exponent sums in the layout (a_1..a_g, b_1..b_g).
IntVector abelianize_word(const Word& w, int genus);

// Adds `offset` to every generator index.
Word shift_indices(const Word& w, int offset);

void check_indices(const Word& w, int genus);

}  // namespace trisect
