#pragma once

#include <vector>

#include "akp/arith.hpp"

namespace akp {

// A witness n = n_1 * ... * n_k found for the query point x.
struct Factorization {
  Int value = 0;
  std::vector<Int> factors;  // ascending
  Int query = 0;
  Int offset = 0;            // value - query

  // Throws DomainError if the product, ordering or offset invariants fail.
  void validate() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization make_factorization(std::vector<Int> factors, Int query);

// n = (a - b)(a + b) with a = ceil(sqrt x), b = floor(sqrt(a^2 - x)).
// Guarantees 0 <= n - x <= 3 x^(1/4) + 3. Requires 2 <= x <= 2^100.
Factorization almost_square(Int x);

// n_3 = ceil(x^(1/3)) and (n_1, n_2) = almost_square(ceil(x / n_3)).
// Requires 8 <= x <= 2^100.
Factorization almost_cube(Int x);

}  // namespace akp
