#include "trisect/invariants.hpp"

#include "trisect/group.hpp"

namespace trisect {

std::size_t pair_k(const HeegaardDiagram& h) {
  const auto g = static_cast<std::size_t>(h.genus);
  const QuotientInvariants q = quotient_invariants(2 * g, h.first.matrix().stacked(h.second.matrix()));
  if (!q.torsion.empty()) throw NotHomologicallyStandard(q.torsion);
  return q.free_rank;
}

std::array<std::size_t, 3> pair_ks(const TrisectionDiagram& d) {
  static constexpr std::array<std::string_view, 3> labels = {"pair (alpha, beta)", "pair (beta, gamma)",
                                                             "pair (gamma, alpha)"};
  const auto pairs = heegaard_pairs(d);
  std::array<std::size_t, 3> ks{};
  for (std::size_t i = 0; i < 3; ++i) {
    try {
      ks[i] = pair_k(pairs[i]);
    } catch (const NotHomologicallyStandard& e) {
      throw NotHomologicallyStandard(e.divisors(), std::string(labels[i]));
    }
  }
  return ks;
}

long euler_characteristic(const TrisectionDiagram& d) {
  const auto ks = pair_ks(d);
  return 2L + d.genus() - static_cast<long>(ks[0] + ks[1] + ks[2]);
}

QuotientInvariants first_homology(const TrisectionDiagram& d) {
  const auto g = static_cast<std::size_t>(d.genus());
  return quotient_invariants(2 * g, d.alpha().matrix().stacked(d.beta().matrix()).stacked(d.gamma().matrix()));
}

Homology homology_of_x(const TrisectionDiagram& d) {
  const long chi = euler_characteristic(d);
  const QuotientInvariants h1 = first_homology(d);
  const long b2 = chi - 2 + 2 * static_cast<long>(h1.free_rank);
  if (b2 < 0) throw ValidationError("inconsistent diagram: negative second Betti number");
  Homology h;
  h.groups[0] = {1, {}};
  h.groups[1] = h1;
  h.groups[2] = {static_cast<std::size_t>(b2), h1.torsion};
  h.groups[3] = {h1.free_rank, {}};
  h.groups[4] = {1, {}};
  return h;
}

// H_2 is modelled as (L_b & (L_a + L_g)) / ((L_b & L_a) + (L_b & L_g)). For classes x, y of the
// numerator write y = y_a + y_g with y_a in L_a, y_g in L_g; then Q(x, y) = <x, y_a>.
IntMatrix intersection_form(const TrisectionDiagram& d) {
  pair_ks(d);
  const QuotientInvariants h1 = first_homology(d);
  if (!h1.torsion.empty()) {
    throw UnsupportedError("intersection form with torsion in H_1 (" + h1.to_string() + ") is not supported");
  }
  const int g = d.genus();
  const IntMatrix& la = d.alpha().matrix();
  const IntMatrix& lb = d.beta().matrix();
  const IntMatrix& lg = d.gamma().matrix();

  const IntMatrix numerator = lattice_intersect(lb, lattice_sum(la, lg));
  const IntMatrix denominator = lattice_sum(lattice_intersect(lb, la), lattice_intersect(lb, lg));

  IntMatrix coords(0, numerator.rows());
  for (std::size_t i = 0; i < denominator.rows(); ++i) {
    auto c = solve_row(numerator, denominator.row(i));
    if (!c) throw ValidationError("internal: denominator lattice escapes the numerator");
    coords.append_row(*c);
  }
  const SmithForm f = smith_normal_form(coords);
  for (const auto& s : f.divisors())
    if (s != 1) throw UnsupportedError("torsion in H_2 quotient");

  const IntMatrix adapted = f.V_inverse * numerator;
  std::vector<IntVector> basis;
  for (std::size_t i = f.rank; i < adapted.rows(); ++i) basis.push_back(adapted.row(i));

  const IntMatrix alpha_gamma = la.stacked(lg);
  std::vector<IntVector> alpha_parts;
  for (const auto& y : basis) {
    auto c = solve_row(alpha_gamma, y);
    if (!c) throw ValidationError("internal: H_2 class not in L_alpha + L_gamma");
    IntVector ca(c->begin(), c->begin() + g);
    alpha_parts.push_back(ca * la);
  }

  IntMatrix q(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) q(i, j) = symplectic_pairing(basis[i], alpha_parts[j], g);
  if (!q.is_symmetric()) throw ValidationError("internal: intersection form is not symmetric");
  return q;
}

std::string_view parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

FormInvariants form_invariants(const IntMatrix& q) {
  if (!q.is_symmetric()) throw ValidationError("form_invariants: matrix is not symmetric");
  const std::size_t n = q.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = q(i, j);

  auto swap_index = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };

  FormInvariants out;
  long positive = 0;
  long negative = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: split off a hyperbolic pair by e_i += e_j.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a[i][j] == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
          for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
          p = i;
          found = true;
        }
      if (!found) break;
    }
    swap_index(k, p);
    const mpq_class pivot = a[k][k];
    (pivot > 0 ? positive : negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class factor = a[i][k] / pivot;
      for (std::size_t c = 0; c < n; ++c) a[i][c] -= factor * a[k][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] -= factor * a[r][k];
    }
  }
  out.rank = static_cast<std::size_t>(positive + negative);
  out.signature = positive - negative;
  out.parity = Parity::Even;
  for (std::size_t i = 0; i < n; ++i)
    if (q(i, i) % 2 != 0) out.parity = Parity::Odd;
  return out;
}

std::string_view verdict_name(PoincareVerdict v) {
  switch (v) {
    case PoincareVerdict::NotHomotopySphere: return "NotHomotopySphere";
    case PoincareVerdict::HomologySphereUnresolved: return "HomologySphereUnresolved";
    case PoincareVerdict::TrivializedPi1: return "TrivializedPi1";
  }
  return "?";
}

PoincareReport poincare_candidate_check(const TrisectionDiagram& d, std::size_t budget) {
  PoincareReport report;
  try {
    const Homology h = homology_of_x(d);
    const QuotientInvariants z{1, {}};
    const QuotientInvariants zero{};
    report.homology_matches_s4 = h.groups == std::array<QuotientInvariants, 5>{z, zero, zero, zero, z};
  } catch (const ValidationError&) {
    report.homology_matches_s4 = false;
  }
  const Presentation p = tietze_simplify(pi1_presentation(d), budget);
  report.pi1_trivialized = p.generators.empty() && p.relators.empty();

  if (!report.homology_matches_s4) {
    report.verdict = PoincareVerdict::NotHomotopySphere;
  } else if (report.pi1_trivialized) {
    report.verdict = PoincareVerdict::TrivializedPi1;
  } else {
    report.verdict = PoincareVerdict::HomologySphereUnresolved;
  }
  return report;
}

}  // namespace trisect
