#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "trisect/int_matrix.hpp"

using namespace trisect;

namespace {

IntMatrix from_grid(const oracle::Grid& g, std::size_t cols) {
  IntMatrix m(g.size(), cols);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(g[i][j]);
  return m;
}

void check_smith(const IntMatrix& m) {
  const SmithForm f = smith_normal_form(m);
  CHECK(f.U * m * f.V == f.D);
  CHECK(abs(determinant(f.U)) == 1);
  CHECK(abs(determinant(f.V)) == 1);
  CHECK(f.V * f.V_inverse == IntMatrix::identity(m.cols()));
  for (std::size_t i = 0; i < f.D.rows(); ++i)
    for (std::size_t j = 0; j < f.D.cols(); ++j)
      if (i != j) CHECK(f.D(i, j) == 0);
  const auto d = f.divisors();
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] > 0);
    if (i + 1 < d.size()) CHECK(d[i + 1] % d[i] == 0);
  }
  for (std::size_t i = f.rank; i < std::min(m.rows(), m.cols()); ++i) CHECK(f.D(i, i) == 0);
}

std::vector<long long> as_ll(const std::vector<Integer>& v) {
  std::vector<long long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  // gcd of 1x1 minors is 2, |det| = 8, so d = (2, 8/2).
  CHECK(oracle::smith_by_minors({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
  const SmithForm f = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(f.D == IntMatrix{{2, 0}, {0, 4}});
  check_smith(IntMatrix{{2, 4}, {6, 8}});

  CHECK(smith_normal_form(IntMatrix::identity(3)).D == IntMatrix::identity(3));
  const SmithForm zero = smith_normal_form(IntMatrix(2, 3));
  CHECK(zero.D.is_zero());
  CHECK(zero.rank == 0);
  check_smith(IntMatrix(0, 3));
  check_smith(IntMatrix(3, 0));
}

TEST_CASE("smith divisors agree with gcd of minors on random matrices") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dim(1, 5);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = static_cast<std::size_t>(dim(rng));
    const std::size_t c = static_cast<std::size_t>(dim(rng));
    oracle::Grid g(r, std::vector<long long>(c));
    for (auto& row : g)
      for (auto& x : row) x = entry(rng);
    const IntMatrix m = from_grid(g, c);
    check_smith(m);
    CHECK(as_ll(smith_normal_form(m).divisors()) == oracle::smith_by_minors(g));
  }
}

TEST_CASE("smith normal form survives large intermediate entries") {
  IntMatrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = static_cast<long>((i + 1) * (j + 2) * (i + j + 3)) * 1000003L + 7 * (i == j);
  check_smith(m);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == static_cast<long>(oracle::det({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}})));
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("lattice intersection examples") {
  const IntMatrix e1{{1, 0}};
  const IntMatrix e2{{0, 1}};
  CHECK(lattice_intersect(e1, e2).rows() == 0);

  const IntMatrix a{{2, 4}, {0, 3}};
  CHECK(same_lattice(lattice_intersect(a, a), a));

  // Only 0 is an integer combination of both (1,0) and (1,1) within the search box.
  const auto left = oracle::combinations({{1, 0}}, 2, 6);
  const auto right = oracle::combinations({{1, 1}}, 2, 6);
  std::vector<std::vector<long long>> common;
  std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
  CHECK(common == std::vector<std::vector<long long>>{{0, 0}});
  CHECK(lattice_intersect(IntMatrix{{1, 0}}, IntMatrix{{1, 1}}).rows() == 0);

  CHECK_THROWS_AS(lattice_intersect(IntMatrix{{1, 0}}, IntMatrix{{1, 0, 0}}), DimensionError);
}

TEST_CASE("lattice intersection is the largest common sublattice on small random instances") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> count(1, 2);
  for (int trial = 0; trial < 60; ++trial) {
    oracle::Grid ga(static_cast<std::size_t>(count(rng)), std::vector<long long>(2));
    oracle::Grid gb(static_cast<std::size_t>(count(rng)), std::vector<long long>(2));
    for (auto* g : {&ga, &gb})
      for (auto& row : *g)
        for (auto& x : row) x = entry(rng);
    const IntMatrix a = from_grid(ga, 2);
    const IntMatrix b = from_grid(gb, 2);
    const IntMatrix meet = lattice_intersect(a, b);
    for (std::size_t i = 0; i < meet.rows(); ++i) {
      CHECK(lattice_contains(a, meet.row(i)));
      CHECK(lattice_contains(b, meet.row(i)));
    }
    const auto left = oracle::combinations(ga, 2, 5);
    const auto right = oracle::combinations(gb, 2, 5);
    std::vector<std::vector<long long>> common;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(common));
    for (const auto& v : common) CHECK(lattice_contains(meet, IntVector{static_cast<long>(v[0]), static_cast<long>(v[1])}));
  }
}

TEST_CASE("sum, saturation and quotients") {
  CHECK(quotient_invariants(2, IntMatrix{{1, 0}, {0, 1}}) == QuotientInvariants{0, {}});
  CHECK(quotient_invariants(2, IntMatrix{{2, 0}}) == QuotientInvariants{1, {2}});
  CHECK(quotient_invariants(3, IntMatrix(0, 3)) == QuotientInvariants{3, {}});
  CHECK_THROWS_AS(quotient_invariants(3, IntMatrix{{1, 0}}), DimensionError);

  const IntMatrix sat = saturate(IntMatrix{{2, 4}});
  CHECK(sat.rows() == 1);
  CHECK(same_lattice(sat, IntMatrix{{1, 2}}));
  CHECK(same_lattice(saturate(IntMatrix{{2, 0}, {0, 6}, {2, 6}}), IntMatrix::identity(2)));

  CHECK(same_lattice(lattice_sum(IntMatrix{{2, 0}}, IntMatrix{{3, 0}}), IntMatrix{{1, 0}}));
  CHECK(same_lattice(lattice_sum(IntMatrix{{1, 0}}, IntMatrix{{0, 5}}), IntMatrix{{1, 0}, {0, 5}}));
  CHECK(row_basis(IntMatrix{{1, 1}, {2, 2}, {3, 3}}).rows() == 1);
  CHECK(QuotientInvariants{2, {2, 6}}.to_string() == "Z^2 + Z/2 + Z/6");
  CHECK(QuotientInvariants{}.to_string() == "0");
}

TEST_CASE("solve_row and left_kernel") {
  const IntMatrix a{{1, 2}, {3, 4}};
  auto x = solve_row(a, IntVector{5, 8});
  REQUIRE(x);
  CHECK(*x * a == IntVector{5, 8});
  CHECK_FALSE(solve_row(IntMatrix{{2, 0}}, IntVector{1, 0}));
  const IntMatrix k = left_kernel(IntMatrix{{1, 2}, {2, 4}, {0, 1}});
  CHECK(k.rows() == 1);
  CHECK((k.row(0) * IntMatrix{{1, 2}, {2, 4}, {0, 1}}) == IntVector{0, 0});
}

TEST_CASE("symplectic pairing") {
  CHECK(symplectic_pairing({1, 0}, {0, 1}, 1) == 1);
  CHECK(symplectic_pairing({0, 1}, {1, 0}, 1) == -1);
  CHECK(symplectic_pairing({3, 5}, {3, 5}, 1) == 0);
  CHECK(symplectic_pairing({0, 1}, {1, 1}, 1) == -1);
  CHECK_THROWS_AS(symplectic_pairing({1, 0}, {1, 0, 0, 0}, 1), DimensionError);

  const IntMatrix j = symplectic_form(2);
  IntMatrix negated = j;
  for (std::size_t i = 0; i < 4; ++i) negated.negate_row(i);
  CHECK(j.transpose() == negated);
  CHECK(abs(determinant(j)) == 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    IntVector u(4), v(4);
    for (auto& x : u) x = entry(rng);
    for (auto& x : v) x = entry(rng);
    CHECK(symplectic_pairing(u, v, 2) == -symplectic_pairing(v, u, 2));
    IntMatrix um(0, 4), vm(0, 4);
    um.append_row(u);
    vm.append_row(v);
    CHECK((um * j * vm.transpose())(0, 0) == symplectic_pairing(u, v, 2));
  }
}
