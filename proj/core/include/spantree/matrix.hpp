#pragma once

#include <cstddef>
#include <vector>

#include "spantree/bigint.hpp"

namespace spantree {

/// Dense square matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  explicit IntegerMatrix(std::size_t order) : order_(order), entries_(order * order) {}

  std::size_t order() const { return order_; }

  BigInt& at(std::size_t row, std::size_t col) { return entries_[row * order_ + col]; }
  const BigInt& at(std::size_t row, std::size_t col) const { return entries_[row * order_ + col]; }

  static IntegerMatrix identity(std::size_t order);

  /// Copy with row `index` and column `index` removed.
  IntegerMatrix minor_without(std::size_t index) const;

  BigInt trace() const;
  void swap_rows(std::size_t a, std::size_t b);

  friend IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t order_;
  std::vector<BigInt> entries_;
};

/// Exact determinant via Bareiss fraction-free elimination.  Every interior
/// division is exact, so the result is bit-exact at any size.
BigInt determinant(IntegerMatrix m);

/// Coefficients of the monic characteristic polynomial det(xI - m);
/// coefficients[k] multiplies x^k.  Faddeev-LeVerrier over exact integers.
std::vector<BigInt> characteristic_polynomial(const IntegerMatrix& m);

/// Expands prod_i (x - roots[i]) into monic coefficient form.
std::vector<BigInt> polynomial_from_roots(const std::vector<BigInt>& roots);

}  // namespace spantree
