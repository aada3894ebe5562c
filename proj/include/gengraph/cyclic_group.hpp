#pragma once

/**
 * @file cyclic_group.hpp
 * @brief Generators of Z_n, Euler totient and primality.
 *
 * An element k of the additive group Z_n generates the whole group exactly
 * when gcd(k, n) = 1, so the generator set of Z_n has phi(n) elements and
 * is closed under k -> n - k.
 */

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gengraph/errors.hpp"

namespace gengraph {

/// Trial-division primality test.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// Euler's totient via trial-division factorization. totient(1) == 1.
constexpr std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
  std::uint64_t result = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

struct CyclicGroupDescriptor {
  std::uint64_t order = 0;
  std::vector<std::uint64_t> generators;  // ascending
  bool is_prime_order = false;

  std::uint64_t generator_count() const { return generators.size(); }
  std::uint64_t non_generator_count() const {
    return order - generators.size();
  }
  bool is_generator(std::uint64_t element) const {
    return element < order && std::gcd(element, order) == 1;
  }

  friend bool operator==(const CyclicGroupDescriptor&,
                         const CyclicGroupDescriptor&) = default;
};

inline CyclicGroupDescriptor describe_group(std::uint64_t n) {
  if (n <= 1) throw TrivialGroupError();
  CyclicGroupDescriptor group;
  group.order = n;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (std::gcd(k, n) == 1) group.generators.push_back(k);
  }
  group.is_prime_order = group.generators.size() == n - 1;
  return group;
}

}  // namespace gengraph
