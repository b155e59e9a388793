#include "spantree/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace spantree {

IntegerMatrix IntegerMatrix::identity(std::size_t order) {
  IntegerMatrix m(order);
  for (std::size_t i = 0; i < order; ++i) m.at(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::minor_without(std::size_t index) const {
  if (index >= order_) throw std::out_of_range("minor_without: index out of range");
  IntegerMatrix m(order_ == 0 ? 0 : order_ - 1);
  for (std::size_t i = 0, mi = 0; i < order_; ++i) {
    if (i == index) continue;
    for (std::size_t j = 0, mj = 0; j < order_; ++j) {
      if (j == index) continue;
      m.at(mi, mj) = at(i, j);
      ++mj;
    }
    ++mi;
  }
  return m;
}

BigInt IntegerMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < order_; ++i) t += at(i, i);
  return t;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < order_; ++j) std::swap(at(a, j), at(b, j));
}

IntegerMatrix operator*(const IntegerMatrix& lhs, const IntegerMatrix& rhs) {
  if (lhs.order() != rhs.order()) throw std::invalid_argument("matrix product: order mismatch");
  const std::size_t n = lhs.order();
  IntegerMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& lik = lhs.at(i, k);
      if (lik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += lik * rhs.at(k, j);
    }
  }
  return out;
}

BigInt determinant(IntegerMatrix m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss update: the division by the previous pivot is exact.
        m.at(i, j) = exact_div(m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), previous_pivot);
      }
    }
    previous_pivot = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : BigInt(-m.at(n - 1, n - 1));
}

std::vector<BigInt> characteristic_polynomial(const IntegerMatrix& m) {
  const std::size_t n = m.order();
  std::vector<BigInt> coefficients(n + 1);
  coefficients[n] = 1;
  IntegerMatrix auxiliary = IntegerMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntegerMatrix product = m * auxiliary;
    // Faddeev-LeVerrier: c_{n-k} = -trace(M A_k)/k, exact over the integers.
    const BigInt c = exact_div(-product.trace(), BigInt(static_cast<unsigned long>(k)));
    coefficients[n - k] = c;
    if (k < n) {
      auxiliary = std::move(product);
      for (std::size_t i = 0; i < n; ++i) auxiliary.at(i, i) += c;
    }
  }
  return coefficients;
}

std::vector<BigInt> polynomial_from_roots(const std::vector<BigInt>& roots) {
  std::vector<BigInt> coefficients{1};
  for (const BigInt& root : roots) {
    std::vector<BigInt> next(coefficients.size() + 1);
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      next[i + 1] += coefficients[i];
      next[i] -= root * coefficients[i];
    }
    coefficients = std::move(next);
  }
  return coefficients;
}

}  // namespace spantree
