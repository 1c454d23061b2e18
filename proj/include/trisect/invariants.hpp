#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "trisect/diagram.hpp"
#include "trisect/int_matrix.hpp"

namespace trisect {

// k such that H_1 of the encoded 3-manifold is Z^k. Throws NotHomologicallyStandard on torsion.
std::size_t pair_k(const HeegaardDiagram& h);
// k for (alpha, beta), (beta, gamma), (gamma, alpha).
std::array<std::size_t, 3> pair_ks(const TrisectionDiagram& d);

// 2 + g - (k_ab + k_bg + k_ga).
long euler_characteristic(const TrisectionDiagram& d);

struct Homology {
  std::array<QuotientInvariants, 5> groups;  // H_0 .. H_4

  const QuotientInvariants& operator[](std::size_t i) const { return groups[i]; }
  friend bool operator==(const Homology&, const Homology&) = default;
};

// H_1 = Z^2g / (L_alpha + L_beta + L_gamma) without the standardness precondition.
QuotientInvariants first_homology(const TrisectionDiagram& d);
Homology homology_of_x(const TrisectionDiagram& d);

// Gram matrix of the intersection form on a basis of H_2. Throws UnsupportedError when H_1 has
// torsion.
IntMatrix intersection_form(const TrisectionDiagram& d);

enum class Parity { Even, Odd };
std::string_view parity_name(Parity p);

struct FormInvariants {
  std::size_t rank = 0;
  long signature = 0;
  Parity parity = Parity::Even;

  friend bool operator==(const FormInvariants&, const FormInvariants&) = default;
};

// Rank and signature by exact rational congruence diagonalization. Throws ValidationError if
// the matrix is not symmetric.
FormInvariants form_invariants(const IntMatrix& q);

enum class PoincareVerdict { NotHomotopySphere, HomologySphereUnresolved, TrivializedPi1 };
std::string_view verdict_name(PoincareVerdict v);

struct PoincareReport {
  bool homology_matches_s4 = false;
  bool pi1_trivialized = false;
  PoincareVerdict verdict = PoincareVerdict::NotHomotopySphere;
};

PoincareReport poincare_candidate_check(const TrisectionDiagram& d, std::size_t budget = 10000);

}  // namespace trisect
