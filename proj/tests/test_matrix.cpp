#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "spantree/matrix.hpp"
#include "spantree/rng.hpp"
#include "support.hpp"

using namespace spantree;
namespace st = spantree::testing;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
BigInt cofactor_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  BigInt sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntegerMatrix sub(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, sc = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, sc++) = m.at(r, c);
      }
    }
    const BigInt term = m.at(0, j) * cofactor_determinant(sub);
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

IntegerMatrix random_matrix(Rng& rng, std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m.at(i, j) = static_cast<long>(rng.below(19)) - 9;
    }
  }
  return m;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
  Rng rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    const IntegerMatrix m = random_matrix(rng, n);
    CHECK(determinant(m) == cofactor_determinant(m));
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(IntegerMatrix(0)) == 1);
  CHECK(determinant(IntegerMatrix::identity(5)) == 1);
  CHECK(determinant(IntegerMatrix(3)) == 0);

  IntegerMatrix m(2);
  m.at(0, 0) = 3;
  m.at(0, 1) = 7;
  m.at(1, 0) = 2;
  m.at(1, 1) = 5;
  CHECK(determinant(m) == 1);

  // Zero pivot forces a row swap.
  IntegerMatrix swapped(2);
  swapped.at(0, 1) = 1;
  swapped.at(1, 0) = 1;
  CHECK(determinant(swapped) == -1);

  IntegerMatrix singular(3);
  for (std::size_t j = 0; j < 3; ++j) {
    singular.at(0, j) = 1;
    singular.at(1, j) = 2;
    singular.at(2, j) = static_cast<long>(j);
  }
  CHECK(determinant(singular) == 0);
}

TEST_CASE("characteristic polynomial of the complete-graph laplacian") {
  // x(x-4)^3 = x^4 - 12x^3 + 48x^2 - 64x.
  const auto coeffs = characteristic_polynomial(st::complete_graph(4).laplacian());
  CHECK(coeffs == std::vector<BigInt>{0, -64, 48, -12, 1});
}

TEST_CASE("characteristic polynomial of diagonal and zero matrices") {
  CHECK(characteristic_polynomial(IntegerMatrix(3)) == std::vector<BigInt>{0, 0, 0, 1});

  IntegerMatrix diag(3);
  diag.at(0, 0) = 2;
  diag.at(1, 1) = -1;
  diag.at(2, 2) = 5;
  CHECK(characteristic_polynomial(diag) ==
        polynomial_from_roots({BigInt(2), BigInt(-1), BigInt(5)}));
}

TEST_CASE("characteristic polynomial agrees with determinant at sample points") {
  Rng rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const IntegerMatrix m = random_matrix(rng, n);
    const auto coeffs = characteristic_polynomial(m);
    for (long x : {-3L, 0L, 1L, 4L}) {
      IntegerMatrix shifted = m;
      for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) = BigInt(x) - m.at(i, i);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) shifted.at(i, j) = -m.at(i, j);
        }
      }
      BigInt value = 0;
      BigInt power = 1;
      for (const BigInt& c : coeffs) {
        value += c * power;
        power *= x;
      }
      CHECK(value == determinant(shifted));
    }
  }
}

TEST_CASE("polynomial_from_roots expands binomials") {
  CHECK(polynomial_from_roots({}) == std::vector<BigInt>{1});
  CHECK(polynomial_from_roots({BigInt(2)}) == std::vector<BigInt>{-2, 1});
  CHECK(polynomial_from_roots({BigInt(1), BigInt(1)}) == std::vector<BigInt>{1, -2, 1});
}

TEST_CASE("minor_without removes one row and column") {
  IntegerMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = static_cast<long>(3 * i + j);
  }
  const IntegerMatrix sub = m.minor_without(1);
  CHECK(sub.order() == 2);
  CHECK(sub.at(0, 0) == 0);
  CHECK(sub.at(0, 1) == 2);
  CHECK(sub.at(1, 0) == 6);
  CHECK(sub.at(1, 1) == 8);
}
