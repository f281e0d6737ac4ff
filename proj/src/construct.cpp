#include "akp/construct.hpp"

#include <algorithm>
#include <optional>

namespace akp {

namespace {

void require_range(Int x, Int lo, const char* op) {
  if (x < lo) throw DomainError(std::string(op) + ": x must be >= " + to_string(lo) + ", got " + to_string(x));
  if (x > kMaxQuery) throw OverflowError(std::string(op) + ": x exceeds 2^100");
}

// Is f within [n^(1/k)/2, 2 n^(1/k)]? Evaluated as 2^k f^k >= n and f^k <= 2^k n.
bool balanced(Int f, Int n, unsigned k) {
  const Int scale = Int{1} << k;
  const Int fk = checked_pow(f, k);
  return checked_mul(scale, fk) >= n && fk <= checked_mul(scale, n);
}

// Degenerate inputs: the smallest n >= x with a balanced k-factor split,
// found by direct search over all factor tuples. Among the splits of that n
// the one with the largest leading factor is returned.
Factorization small_search(Int x, unsigned k) {
  for (Int n = x;; ++n) {
    std::optional<std::vector<Int>> best;
    std::vector<Int> tuple(k, 1);
    auto rec = [&](auto&& self, unsigned pos, Int rest, Int minf) -> void {
      if (pos + 1 == k) {
        if (rest < minf) return;
        tuple[pos] = rest;
        for (Int f : tuple)
          if (!balanced(f, n, k)) return;
        if (!best || tuple > *best) best = tuple;
        return;
      }
      for (Int f = minf; compare_pow(f, k - pos, rest) <= 0; ++f)
        if (rest % f == 0) {
          tuple[pos] = f;
          self(self, pos + 1, rest / f, f);
        }
    };
    rec(rec, 0, n, 1);
    if (best) return make_factorization(*best, x);
  }
}

}  // namespace

void Factorization::validate() const {
  if (factors.empty()) throw DomainError("factorization has no factors");
  Int prod = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] < 1) throw DomainError("non-positive factor " + to_string(factors[i]));
    if (i > 0 && factors[i] < factors[i - 1]) throw DomainError("factors not ascending");
    prod = checked_mul(prod, factors[i]);
  }
  if (prod != value) throw DomainError("factor product " + to_string(prod) + " != value " + to_string(value));
  if (offset != value - query) throw DomainError("offset mismatch");
  if (offset < 0) throw DomainError("value below query point");
}

Factorization make_factorization(std::vector<Int> factors, Int query) {
  std::sort(factors.begin(), factors.end());
  Int value = 1;
  for (Int f : factors) value = checked_mul(value, f);
  Factorization out{value, std::move(factors), query, value - query};
  out.validate();
  return out;
}

Factorization almost_square(Int x) {
  require_range(x, 2, "almost_square");
  if (x <= 8) return small_search(x, 2);
  Int a = isqrt(x);
  if (a * a < x) ++a;
  const Int b = isqrt(a * a - x);
  return make_factorization({a - b, a + b}, x);
}

Factorization almost_cube(Int x) {
  require_range(x, 8, "almost_cube");
  if (x <= 8) return small_search(x, 3);
  Int n3 = icbrt(x);
  if (n3 * n3 * n3 < x) ++n3;
  const Factorization pair = almost_square(ceil_div(x, n3));
  return make_factorization({pair.factors[0], pair.factors[1], n3}, x);
}

}  // namespace akp
