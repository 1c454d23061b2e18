#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "trisect/cube.hpp"
#include "trisect/diagram.hpp"

namespace trisect {

using AnyDiagram = std::variant<TrisectionDiagram, HeegaardDiagram>;

// Reads the line format:
//
//   trisection            (or: heegaard)
//   genus 2
//   alpha a1 | a2
//   beta b1 | b2
//   gamma a2 b1 | a1 b2   (trisections only)
//
// `#` starts a comment and blank lines are skipped. Syntax problems raise ParseError with a
// line and column; curve systems that fail validation raise CutSystemError.
AnyDiagram parse_diagram(std::string_view text);
// As parse_diagram, rejecting Heegaard files with ParseError.
TrisectionDiagram parse_trisection(std::string_view text);

// Canonical text: reduced words, families in the order alpha, beta, gamma, trailing newline.
std::string serialize(const TrisectionDiagram& d);
std::string serialize(const HeegaardDiagram& h);
std::string serialize(const AnyDiagram& d);

// Directed graph with one node per vertex, labelled `name: rank r, torsion [..], relators m`.
std::string emit_cube_dot(const GroupTrisectionCube& cube);

}  // namespace trisect
