#include <sstream>

#include "trisect/int_matrix.hpp"

namespace trisect {

IntMatrix row_basis(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  IntMatrix basis(0, a.cols());
  for (std::size_t i = 0; i < f.rank; ++i) basis.append_row(scaled(f.V_inverse.row(i), f.D(i, i)));
  return basis;
}

IntMatrix left_kernel(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  IntMatrix kernel(0, a.rows());
  for (std::size_t i = f.rank; i < a.rows(); ++i) kernel.append_row(f.U.row(i));
  return kernel;
}

IntMatrix lattice_intersect(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("lattice_intersect: column counts differ");
  if (a.rows() == 0 || b.rows() == 0) return IntMatrix(0, a.cols());
  IntMatrix negated = b;
  for (std::size_t i = 0; i < negated.rows(); ++i) negated.negate_row(i);
  // Rows (x | y) of the kernel satisfy x*a == y*b; their images x*a generate the intersection.
  const IntMatrix kernel = left_kernel(a.stacked(negated));
  IntMatrix generators(0, a.cols());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    IntVector x(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) x[i] = kernel(r, i);
    generators.append_row(x * a);
  }
  return row_basis(generators);
}

IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("lattice_sum: column counts differ");
  return row_basis(a.stacked(b));
}

IntMatrix saturate(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  IntMatrix basis(0, a.cols());
  for (std::size_t i = 0; i < f.rank; ++i) basis.append_row(f.V_inverse.row(i));
  return basis;
}

std::optional<IntVector> solve_row(const IntMatrix& a, const IntVector& v) {
  if (v.size() != a.cols()) throw DimensionError("solve_row: vector length differs from column count");
  const SmithForm f = smith_normal_form(a);
  const IntVector w = v * f.V;
  IntVector z(a.rows(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i < f.rank) {
      if (w[i] % f.D(i, i) != 0) return std::nullopt;
      z[i] = w[i] / f.D(i, i);
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return z * f.U;
}

bool lattice_contains(const IntMatrix& a, const IntVector& v) { return solve_row(a, v).has_value(); }

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!lattice_contains(b, a.row(i))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!lattice_contains(a, b.row(i))) return false;
  return true;
}

QuotientInvariants quotient_invariants(std::size_t ambient_rank, const IntMatrix& a) {
  if (a.cols() != ambient_rank) {
    throw DimensionError("quotient_invariants: matrix has " + std::to_string(a.cols()) +
                         " columns, ambient rank is " + std::to_string(ambient_rank));
  }
  const SmithForm f = smith_normal_form(a);
  QuotientInvariants q;
  q.free_rank = ambient_rank - f.rank;
  for (const auto& d : f.divisors())
    if (d > 1) q.torsion.push_back(d);
  return q;
}

std::string QuotientInvariants::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << 'Z';
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace trisect
