#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "trisect/errors.hpp"

namespace trisect {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Every row must have `cols` entries.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  void append_row(const IntVector& row);

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t i, std::size_t j, const Integer& factor);
  void add_col_multiple(std::size_t i, std::size_t j, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  IntMatrix transpose() const;
  // Vertical concatenation; column counts must agree.
  IntMatrix stacked(const IntMatrix& below) const;
  bool is_zero() const;
  bool is_symmetric() const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntVector& row, const IntMatrix& m);
IntVector operator+(const IntVector& u, const IntVector& v);
IntVector operator-(const IntVector& v);
IntVector scaled(const IntVector& v, const Integer& factor);

// Fraction-free Gaussian elimination.
Integer determinant(const IntMatrix& m);

// U * M * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  IntMatrix V_inverse;
  std::size_t rank = 0;

  // The nonzero diagonal entries, in order.
  std::vector<Integer> divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Lattices below are row spans in Z^cols.

// A basis (linearly independent rows) of rowspan(a).
IntMatrix row_basis(const IntMatrix& a);
// A basis of {x : x * a == 0}.
IntMatrix left_kernel(const IntMatrix& a);
IntMatrix lattice_intersect(const IntMatrix& a, const IntMatrix& b);
IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b);
// Basis of (rowspan(a) tensor Q) intersected with Z^cols.
IntMatrix saturate(const IntMatrix& a);

// Some x with x * a == v, if one exists.
std::optional<IntVector> solve_row(const IntMatrix& a, const IntVector& v);
bool lattice_contains(const IntMatrix& a, const IntVector& v);
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

// Structure of a finitely generated abelian group Z^free_rank + (+) Z/torsion_i.
struct QuotientInvariants {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // "0", "Z", "Z^2 + Z/2", ...
  std::string to_string() const;

  friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

// Smith data of Z^ambient_rank / rowspan(a).
QuotientInvariants quotient_invariants(std::size_t ambient_rank, const IntMatrix& a);

// The 2g x 2g pairing matrix with J(a_i, b_i) = 1, J(b_i, a_i) = -1.
IntMatrix symplectic_form(int genus);
// u^T J v for vectors in the layout (a_1..a_g, b_1..b_g).
Integer symplectic_pairing(const IntVector& u, const IntVector& v, int genus);

}  // namespace trisect
