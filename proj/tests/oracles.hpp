#pragma once

// Test-only reference implementations. Deliberately naive and independent of
// the library's enumeration paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "akp/arith.hpp"
#include "akp/scanner.hpp"

namespace oracle {

using akp::Int;

inline bool is_prime_trial(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline Int divisor_count(Int n) {
  Int c = 0;
  for (Int d = 1; d * d <= n; ++d)
    if (n % d == 0) c += (d * d == n) ? 1 : 2;
  return c;
}

inline bool member(const akp::SequenceSpec& s, Int n) {
  using S = akp::SequenceSpec;
  if (std::holds_alternative<S::AllIntegers>(s.kind)) return n >= 1;
  if (std::holds_alternative<S::Primes>(s.kind)) return is_prime_trial(n);
  if (auto* l = std::get_if<S::ExplicitList>(&s.kind))
    return std::find(l->values->begin(), l->values->end(), n) != l->values->end();
  const auto& p = std::get<S::ProductOfTwo>(s.kind);
  for (Int d = 1; d <= n; ++d)
    if (n % d == 0 && member(*p.first, d) && member(*p.second, n / d)) return true;
  return false;
}

// c^k n <= f^k <= C^k n by cross multiplication.
inline bool relative_ok(Int f, Int n, unsigned k, const akp::Rational& c, const akp::Rational& C) {
  Int fk = 1, cn = 1, cd = 1, Cn = 1, Cd = 1;
  for (unsigned i = 0; i < k; ++i) {
    fk *= f;
    cn *= c.numerator();
    cd *= c.denominator();
    Cn *= C.numerator();
    Cd *= C.denominator();
  }
  return cn * n <= cd * fk && Cd * fk <= Cn * n;
}

// Plain k-nested loop over every factor tuple in the (envelope) ranges.
inline std::map<Int, std::vector<Int>> nested_loop(const akp::WindowQuery& q) {
  const Int w0 = q.x, w1 = q.x + q.window_length();
  std::vector<std::pair<Int, Int>> ranges(q.k);
  const auto* rel = std::get_if<akp::RelativeBounds>(&q.bounds);
  for (unsigned p = 0; p < q.k; ++p) {
    if (rel) {
      // f^k <= C^k n <= ceil(C^k) w1; filtered exactly below
      Int ck_num = 1, ck_den = 1;
      for (unsigned i = 0; i < q.k; ++i) {
        ck_num *= rel->upper.numerator();
        ck_den *= rel->upper.denominator();
      }
      const Int cap = (ck_num + ck_den - 1) / ck_den * w1;
      Int r = 0;
      while (akp::compare_pow(r + 1, q.k, cap) <= 0) ++r;
      ranges[p] = {1, r};
    } else {
      ranges[p] = q.range_at(p);
    }
  }
  std::map<Int, std::vector<Int>> best;
  std::vector<Int> t(q.k);
  auto rec = [&](auto&& self, unsigned pos, Int prod) -> void {
    if (pos == q.k) {
      if (prod < w0 || prod > w1) return;
      if (rel)
        for (Int f : t)
          if (!relative_ok(f, prod, q.k, rel->lower, rel->upper)) return;
      std::vector<Int> s = t;
      std::sort(s.begin(), s.end());
      auto it = best.find(prod);
      if (it == best.end() || s < it->second) best[prod] = s;
      return;
    }
    for (Int f = std::max<Int>(1, ranges[pos].first); f <= ranges[pos].second; ++f) {
      if (prod * f > w1) break;
      if (!member(q.spec_at(pos), f)) continue;
      t[pos] = f;
      self(self, pos + 1, prod * f);
    }
  };
  rec(rec, 0, 1);
  return best;
}

}  // namespace oracle
