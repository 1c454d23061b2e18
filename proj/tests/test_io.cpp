#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>

#include "support/moves.hpp"
#include "trisect/invariants.hpp"
#include "trisect/io.hpp"

using namespace trisect;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fixtures() { return TRISECT_FIXTURE_DIR; }

void check_parse_error(const std::string& text, std::size_t line, std::size_t column) {
  try {
    parse_diagram(text);
    FAIL("expected ParseError for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST_CASE("parse examples") {
  const TrisectionDiagram cp2 = parse_trisection("trisection\ngenus 1\nalpha a1\nbeta b1\ngamma a1 b1");
  CHECK(serialize(cp2) == serialize(standard_diagram("CP2")));
  CHECK(serialize(parse_trisection("trisection\ngenus 0\nalpha\nbeta\ngamma")) ==
        "trisection\ngenus 0\nalpha\nbeta\ngamma\n");
  CHECK(serialize(standard_diagram("CP2")) == "trisection\ngenus 1\nalpha a1\nbeta b1\ngamma a1 b1\n");
  CHECK(serialize(parse_trisection(slurp(fixtures() / "cp2_commented.tri"))) == slurp(fixtures() / "cp2.tri"));

  const AnyDiagram h = parse_diagram(slurp(fixtures() / "lens_heegaard.tri"));
  REQUIRE(std::holds_alternative<HeegaardDiagram>(h));
  CHECK(serialize(h) == "heegaard\ngenus 1\nalpha a1\nbeta a1 b1 b1 b1\n");
  CHECK_THROWS_AS(parse_trisection(slurp(fixtures() / "lens_heegaard.tri")), ParseError);
}

TEST_CASE("words are reduced on input") {
  const TrisectionDiagram d = parse_trisection("trisection\ngenus 1\nalpha a1 b1 B1\nbeta b1\ngamma a1 a1 A1 b1\n");
  CHECK(serialize(d) == "trisection\ngenus 1\nalpha a1\nbeta b1\ngamma a1 b1\n");
}

TEST_CASE("parse errors carry line and column") {
  check_parse_error("genus 1\nalpha a1\nbeta b1\ngamma a1 b1\n", 1, 1);
  check_parse_error("", 1, 1);
  check_parse_error("trisection\n", 2, 1);
  check_parse_error("trisection\ngenius 1\n", 2, 1);
  check_parse_error("trisection\ngenus -1\n", 2, 7);
  check_parse_error("trisection\ngenus 1\nalpha a1\nbeta b1\ngamma a1 x1\n", 5, 10);
  check_parse_error("trisection\ngenus 1\nalpha a1\nbeta b1\n", 5, 1);
  check_parse_error("trisection\ngenus 1\nalpha a1\nalpha a1\n", 4, 1);
  check_parse_error("trisection\ngenus 1\nalpha a1\nbeta b1\ndelta b1\n", 5, 1);
  check_parse_error("trisection\ngenus 2\nalpha a1\nbeta b1 | b2\ngamma a1 | a2\n", 3, 6);
  check_parse_error("trisection\ngenus 2\nalpha a1 |\nbeta b1 | b2\ngamma a1 | a2\n", 3, 11);
  check_parse_error("# header\n\ntrisection\ngenus 0\nalpha a1\nbeta\ngamma\n", 5, 6);
  check_parse_error("heegaard\ngenus 1\nalpha a1\nbeta b1\ngamma b1\n", 5, 1);
}

TEST_CASE("validation failures pass through with the family line") {
  try {
    parse_diagram(slurp(fixtures() / "imprimitive.tri"));
    FAIL("expected CutSystemError");
  } catch (const CutSystemError& e) {
    CHECK(e.failure().kind == CutSystemFailure::Kind::Imprimitive);
    CHECK(e.failure().divisors == std::vector<Integer>{2});
    CHECK(std::string(e.what()).starts_with("line 5: family gamma:"));
  }
  try {
    parse_diagram(slurp(fixtures() / "not_lagrangian.tri"));
    FAIL("expected CutSystemError");
  } catch (const CutSystemError& e) {
    CHECK(e.failure().kind == CutSystemFailure::Kind::NotLagrangian);
  }
  CHECK_THROWS_AS(parse_diagram("trisection\ngenus 1\nalpha a2\nbeta b1\ngamma a1 b1\n"), CutSystemError);
}

TEST_CASE("fixture corpus round-trips byte for byte") {
  std::size_t canonical = 0;
  for (const auto& entry : std::filesystem::directory_iterator(fixtures())) {
    const std::string text = slurp(entry.path());
    std::optional<AnyDiagram> d;
    try {
      d = parse_diagram(text);
    } catch (const Error&) {
      continue;
    }
    const std::string once = serialize(*d);
    CHECK(serialize(parse_diagram(once)) == once);
    if (once == text) ++canonical;
  }
  CHECK(canonical >= 8);
}

TEST_CASE("serialization is stable under random moves") {
  std::mt19937 rng(12);
  for (const auto& name : standard_diagram_names())
    for (int trial = 0; trial < 30; ++trial) {
      const auto trace = testing_support::random_moves(standard_diagram(name), pair_ks(standard_diagram(name)), rng, 8);
      const std::string text = serialize(trace.diagram);
      const TrisectionDiagram back = parse_trisection(text);
      CHECK(serialize(back) == text);
      for (Family f : kFamilies) CHECK(back.family(f).matrix() == trace.diagram.family(f).matrix());
    }
}

TEST_CASE("cube DOT output") {
  const std::string s4 = emit_cube_dot(build_cube(standard_diagram("S4")));
  CHECK(s4.starts_with("digraph group_trisection {"));
  CHECK(count_matches(s4, R"(\[label=)") == 8);
  CHECK(count_matches(s4, " -> ") == 12);

  const std::string cp2 = emit_cube_dot(build_cube(standard_diagram("CP2")));
  CHECK(cp2.find("\"surface: rank 2, torsion [], relators 1\"") != std::string::npos);
  CHECK(cp2.find("\"handlebody_alpha: rank 1, torsion [], relators 2\"") != std::string::npos);
  CHECK(cp2.find("\"total: rank 0, torsion [], relators 4\"") != std::string::npos);
  CHECK(count_matches(cp2, "rank 0, torsion \\[\\]") == 4);
}
