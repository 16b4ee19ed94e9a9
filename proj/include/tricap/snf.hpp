#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "tricap/intmath.hpp"

namespace tricap {

// Exact arbitrary-precision integers for the places where elimination can
// outgrow 64 bits (unimodular transforms, determinants).
using BigInt = boost::multiprecision::cpp_int;

// Dense arbitrary-precision integer matrix. Deliberately minimal: it exists
// for the Smith transforms, whose entries routinely exceed the input scale
// even for small dense inputs.
struct BigMatrix {
  Int rows = 0, cols = 0;
  std::vector<BigInt> data;  // row-major

  BigMatrix() = default;
  BigMatrix(Int r, Int c) : rows(r), cols(c), data(r * c) {}
  static BigMatrix identity(Int n);

  BigInt& operator()(Int i, Int j) { return data[i * cols + j]; }
  const BigInt& operator()(Int i, Int j) const { return data[i * cols + j]; }
  bool operator==(const BigMatrix&) const = default;
};

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b);
BigMatrix to_big(const IntMatrix& m);

// Smith decomposition U * M * V = D: U and V unimodular, D diagonal with
// non-negative entries d1 | d2 | ... in divisibility order. D itself stays
// in 64 bits (checked).
struct SmithNormalForm {
  BigMatrix U, V;
  BigMatrix Uinv, Vinv;
  IntMatrix D;

  Int rank() const;
  // Nonzero diagonal entries, in divisibility order.
  std::vector<Int> divisors() const;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

// Rank over the rationals.
Int matrix_rank(const IntMatrix& m);

// Size-reduced basis of the kernel lattice {x : m x = 0}, as columns. The
// basis spans a saturated sublattice of Z^cols.
IntMatrix kernel_basis(const IntMatrix& m);

// One integer solution of m x = y, if any, reduced modulo the kernel
// lattice to keep its entries small.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& y);

// Column Hermite form of the lattice generated by the columns of m: a
// canonical small basis, plus the elementary divisors of the inclusion
// into the ambient Z^rows.
struct ColumnLattice {
  IntMatrix basis;  // rows x rank
  std::vector<Int> divisors;
};
ColumnLattice column_lattice(const IntMatrix& m);

// Square with determinant +1 or -1, decided exactly (fraction-free).
bool is_unimodular(const IntMatrix& m);
bool is_unimodular(const BigMatrix& m);

// Signature of a symmetric integer matrix by exact congruence
// diagonalization; degenerate directions contribute zero.
Int symmetric_signature(const IntMatrix& q);

}  // namespace tricap
