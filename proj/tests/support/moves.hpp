#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "trisect/diagram.hpp"

namespace testing_support {

struct MoveTrace {
  trisect::TrisectionDiagram diagram;
  std::array<std::size_t, 3> expected_k;
  int stabilizations = 0;
  int slides = 0;
};

inline trisect::Word random_word(std::mt19937& rng, int genus, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> index(1, genus);
  std::bernoulli_distribution coin(0.5);
  std::vector<trisect::GeneratorToken> tokens;
  const int n = genus == 0 ? 0 : length(rng);
  for (int i = 0; i < n; ++i) {
    tokens.push_back({coin(rng) ? trisect::GeneratorKind::A : trisect::GeneratorKind::B, index(rng), coin(rng)});
  }
  return trisect::Word(std::move(tokens));
}

// Stabilizing family f raises the k of the one pair not containing f.
inline std::size_t pair_raised_by(trisect::Family f) {
  switch (f) {
    case trisect::Family::Alpha: return 1;
    case trisect::Family::Beta: return 2;
    case trisect::Family::Gamma: return 0;
  }
  return 0;
}

// Applies up to `max_moves` random slides and stabilizations (at least one move).
inline MoveTrace random_moves(const trisect::TrisectionDiagram& start, std::array<std::size_t, 3> k,
                              std::mt19937& rng, int max_moves) {
  MoveTrace trace{start, k};
  std::uniform_int_distribution<int> count(1, max_moves);
  std::uniform_int_distribution<int> family(0, 2);
  std::bernoulli_distribution stabilize_coin(0.35);
  std::bernoulli_distribution sign_coin(0.5);
  const int moves = count(rng);
  for (int m = 0; m < moves; ++m) {
    const auto f = trisect::kFamilies[static_cast<std::size_t>(family(rng))];
    const int g = trace.diagram.genus();
    if (g < 2 || stabilize_coin(rng)) {
      trace.diagram = trisect::stabilize(trace.diagram, f);
      ++trace.expected_k[pair_raised_by(f)];
      ++trace.stabilizations;
    } else {
      std::uniform_int_distribution<std::size_t> curve(0, static_cast<std::size_t>(g) - 1);
      const std::size_t i = curve(rng);
      std::size_t j = curve(rng);
      while (j == i) j = curve(rng);
      trace.diagram = trisect::handle_slide(trace.diagram, f, i, j, random_word(rng, g, 2), sign_coin(rng) ? 1 : -1);
      ++trace.slides;
    }
  }
  return trace;
}

}  // namespace testing_support
