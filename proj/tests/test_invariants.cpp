#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "support/faddeev.hpp"
#include "support/moves.hpp"
#include "trisect/group.hpp"
#include "trisect/invariants.hpp"
#include "trisect/io.hpp"

using namespace trisect;

namespace {

const QuotientInvariants kZ{1, {}};
const QuotientInvariants kZero{};

CutSystem system(int genus, std::initializer_list<const char*> texts) {
  std::vector<Word> words;
  for (const char* t : texts) words.push_back(Word::parse(t));
  return CutSystem::validate(words, genus);
}

TrisectionDiagram fixture(const std::string& name) {
  std::ifstream in(std::string(TRISECT_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_trisection(ss.str());
}

// The standard genus-g Heegaard diagram of #k S1xS2: k parallel pairs then g-k dual pairs.
HeegaardDiagram boring(int genus, int parallel) {
  std::vector<Word> first, second;
  for (int i = 1; i <= genus; ++i) {
    first.push_back(Word::parse("a" + std::to_string(i)));
    second.push_back(Word::parse((i <= parallel ? "a" : "b") + std::to_string(i)));
  }
  return HeegaardDiagram(CutSystem::validate(first, genus), CutSystem::validate(second, genus));
}

}  // namespace

TEST_CASE("pair_k on boring diagrams counts parallel pairs") {
  for (int g = 0; g <= 4; ++g)
    for (int k = 0; k <= g; ++k) CHECK(pair_k(boring(g, k)) == static_cast<std::size_t>(k));
}

TEST_CASE("pair_k examples and failures") {
  CHECK(pair_ks(standard_diagram("CP2")) == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(pair_k(HeegaardDiagram(system(1, {"a1"}), system(1, {"a1"}))) == 1);

  // (1,0) and (1,2) span index 2: a lens space, not #k S1xS2.
  const HeegaardDiagram lens(system(1, {"a1"}), system(1, {"a1 b1 b1"}));
  try {
    pair_k(lens);
    FAIL("expected NotHomologicallyStandard");
  } catch (const NotHomologicallyStandard& e) {
    CHECK(e.divisors() == std::vector<Integer>{2});
  }
  const TrisectionDiagram bad(system(1, {"a1"}), system(1, {"a1 b1 b1"}), system(1, {"b1"}));
  CHECK_THROWS_AS(euler_characteristic(bad), NotHomologicallyStandard);
  CHECK_THROWS_AS(homology_of_x(bad), NotHomologicallyStandard);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(standard_diagram("S4")) == 2);
  CHECK(euler_characteristic(standard_diagram("CP2")) == 3);
  CHECK(euler_characteristic(standard_diagram("S1xS3")) == 0);
  CHECK(euler_characteristic(standard_diagram("S2xS2")) == 4);
}

TEST_CASE("homology of the standard manifolds") {
  using H = std::array<QuotientInvariants, 5>;
  CHECK(homology_of_x(standard_diagram("CP2")).groups == H{kZ, kZero, kZ, kZero, kZ});
  CHECK(homology_of_x(standard_diagram("S1xS3")).groups == H{kZ, kZ, kZero, kZ, kZ});
  CHECK(homology_of_x(standard_diagram("S4")).groups == H{kZ, kZero, kZero, kZero, kZ});
  CHECK(homology_of_x(standard_diagram("S2xS2")).groups == H{kZ, kZero, {2, {}}, kZero, kZ});
}

TEST_CASE("torsion in H1") {
  const TrisectionDiagram d = fixture("torsion_h1.tri");
  const Homology h = homology_of_x(d);
  CHECK(h[1] == QuotientInvariants{0, {2}});
  CHECK(h[2].torsion == std::vector<Integer>{2});
  CHECK(h[3] == kZero);
  CHECK_THROWS_AS(intersection_form(d), UnsupportedError);
}

TEST_CASE("intersection forms") {
  CHECK(intersection_form(standard_diagram("CP2")) == IntMatrix{{1}});
  CHECK(intersection_form(standard_diagram("CP2BAR")) == IntMatrix{{-1}});
  CHECK(intersection_form(standard_diagram("S4")).rows() == 0);
  CHECK(intersection_form(standard_diagram("S1xS3")).rows() == 0);
  const IntMatrix hyperbolic = intersection_form(standard_diagram("S2xS2"));
  CHECK(form_invariants(hyperbolic) == FormInvariants{2, 0, Parity::Even});
  CHECK(determinant(hyperbolic) == -1);
  const IntMatrix mixed = intersection_form(connected_sum(standard_diagram("CP2"), standard_diagram("CP2BAR")));
  CHECK(form_invariants(mixed) == FormInvariants{2, 0, Parity::Odd});
}

TEST_CASE("form invariants") {
  CHECK(form_invariants(IntMatrix{{1}}) == FormInvariants{1, 1, Parity::Odd});
  CHECK(form_invariants(IntMatrix{{1, 0}, {0, -1}}) == FormInvariants{2, 0, Parity::Odd});
  const auto signs = oracle::eigen_signs({{0, 1}, {1, 0}});
  CHECK(signs.positive == 1);
  CHECK(signs.negative == 1);
  CHECK(form_invariants(IntMatrix{{0, 1}, {1, 0}}) == FormInvariants{2, 0, Parity::Even});
  CHECK(form_invariants(IntMatrix(0, 0)) == FormInvariants{0, 0, Parity::Even});
  CHECK(form_invariants(IntMatrix{{0, 0}, {0, 0}}) == FormInvariants{0, 0, Parity::Even});
  CHECK_THROWS_AS(form_invariants(IntMatrix{{0, 1}, {0, 0}}), ValidationError);
  CHECK_THROWS_AS(form_invariants(IntMatrix{{0, 1}}), ValidationError);
}

TEST_CASE("form invariants agree with the Descartes sign-count oracle") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::bernoulli_distribution zero_diagonal(0.3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(dim(rng));
    const bool hollow = zero_diagonal(rng);
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    IntMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const long v = (i == j && hollow) ? 0 : entry(rng);
        a[i][j] = a[j][i] = v;
        q(i, j) = q(j, i) = v;
      }
    const auto signs = oracle::eigen_signs(a);
    const FormInvariants f = form_invariants(q);
    CHECK(f.signature == signs.positive - signs.negative);
    CHECK(f.rank == static_cast<std::size_t>(signs.positive + signs.negative));
  }
}

TEST_CASE("poincare candidate screening") {
  const auto s4 = poincare_candidate_check(standard_diagram("S4"));
  CHECK(s4.homology_matches_s4);
  CHECK(s4.pi1_trivialized);
  CHECK(s4.verdict == PoincareVerdict::TrivializedPi1);

  CHECK(poincare_candidate_check(standard_diagram("CP2")).verdict == PoincareVerdict::NotHomotopySphere);
  CHECK(poincare_candidate_check(standard_diagram("S1xS3")).verdict == PoincareVerdict::NotHomotopySphere);

  const TrisectionDiagram triple =
      stabilize(stabilize(stabilize(standard_diagram("S4"), Family::Alpha), Family::Beta), Family::Gamma);
  const auto t = poincare_candidate_check(triple);
  CHECK(t.homology_matches_s4);
  CHECK(t.pi1_trivialized);
  CHECK(t.verdict == PoincareVerdict::TrivializedPi1);

  // Zero budget leaves the presentation untouched, so only homology is known.
  CHECK(poincare_candidate_check(triple, 0).verdict == PoincareVerdict::HomologySphereUnresolved);
}

TEST_CASE("invariants are unchanged by random slides and stabilizations") {
  std::mt19937 rng(2718);
  for (const auto& name : standard_diagram_names()) {
    const TrisectionDiagram d = standard_diagram(name);
    const long chi = euler_characteristic(d);
    const Homology h = homology_of_x(d);
    const FormInvariants f = form_invariants(intersection_form(d));
    for (int trial = 0; trial < 100; ++trial) {
      const auto trace = testing_support::random_moves(d, pair_ks(d), rng, 10);
      CHECK(pair_ks(trace.diagram) == trace.expected_k);
      CHECK(euler_characteristic(trace.diagram) == chi);
      const Homology moved = homology_of_x(trace.diagram);
      CHECK(moved == h);
      const IntMatrix q = intersection_form(trace.diagram);
      CHECK(form_invariants(q) == f);
      CHECK(q.rows() == moved[2].free_rank);
      CHECK(abs(determinant(q)) == 1);
      CHECK(moved[1].free_rank == moved[3].free_rank);
      CHECK(moved[1].torsion == moved[2].torsion);
    }
  }
}
