#include "akp/primes.hpp"

#include <algorithm>
#include <cmath>

namespace akp {

namespace {

constexpr std::uint64_t kSegmentOdds = std::uint64_t{1} << 18;

std::uint64_t isqrt64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<char> composite(limit + 1, 0);
  for (std::uint64_t i = 2; i * i <= limit; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi, const std::function<void(std::uint64_t)>& visit) {
  if (hi < 2 || hi < lo) return;
  if (lo <= 2) {
    visit(2);
    lo = 3;
  }
  if (lo % 2 == 0) ++lo;
  if (lo > hi) return;

  const auto base = small_primes(isqrt64(hi));
  // Bit i of the current segment stands for the odd number seg_lo + 2i.
  std::vector<std::uint64_t> bits((kSegmentOdds + 63) / 64);
  for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
    const std::uint64_t odds = std::min<std::uint64_t>(kSegmentOdds, (hi - seg_lo) / 2 + 1);
    const std::uint64_t seg_hi = seg_lo + 2 * (odds - 1);
    std::fill(bits.begin(), bits.end(), ~std::uint64_t{0});
    for (std::size_t pi = 1; pi < base.size(); ++pi) {
      const std::uint64_t p = base[pi];
      if (p * p > seg_hi) break;
      std::uint64_t start = std::max(p * p, (seg_lo + p - 1) / p * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t m = start; m <= seg_hi; m += 2 * p) {
        const std::uint64_t i = (m - seg_lo) / 2;
        bits[i / 64] &= ~(std::uint64_t{1} << (i % 64));
      }
    }
    for (std::uint64_t i = 0; i < odds; ++i)
      if (bits[i / 64] >> (i % 64) & 1) {
        const std::uint64_t n = seg_lo + 2 * i;
        if (n > 1) visit(n);
      }
    if (seg_hi >= hi - 1) break;
    seg_lo = seg_hi + 2;
  }
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for_each_prime(lo, hi, [&](std::uint64_t p) { out.push_back(p); });
  return out;
}

std::uint64_t count_primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t n = 0;
  for_each_prime(lo, hi, [&](std::uint64_t) { ++n; });
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace akp
