#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rla/field.hpp"

namespace rla::testing {

inline Vector random_vector(std::mt19937_64& rng, const FiniteField& f, std::size_t n) {
  std::uniform_int_distribution<Scalar> d(0, f.order() - 1);
  Vector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// Schoolbook product of residue vectors reduced by the modulus; independent of
// the log tables inside FiniteField.
inline std::vector<std::uint32_t> naive_mul(const FiniteField& f, std::vector<std::uint32_t> a,
                                            std::vector<std::uint32_t> b) {
  const std::uint32_t p = f.characteristic();
  const std::size_t k = f.degree();
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  prod.resize(k);
  return prod;
}

}  // namespace rla::testing
