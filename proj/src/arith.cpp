#include "akp/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <gmpxx.h>

namespace akp {

namespace {

constexpr Int kIntMax = static_cast<Int>((~static_cast<unsigned __int128>(0)) >> 1);

mpz_class to_mpz(Int v) { return mpz_class(to_string(v)); }

Int from_mpz(const mpz_class& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) throw OverflowError("value exceeds 126 bits: " + v.get_str());
  return parse_int(v.get_str());
}

// Sign of den * f^k - target, overflow-safe for non-negative operands.
int compare_scaled(Int f, unsigned k, Int den, Int target) {
  Int p = 1;
  for (unsigned i = 0; i < k; ++i)
    if (__builtin_mul_overflow(p, f, &p)) return 1;
  if (__builtin_mul_overflow(p, den, &p)) return 1;
  return (p > target) - (p < target);
}

void require_non_negative(Int n, const char* op) {
  if (n < 0) throw DomainError(std::string(op) + ": negative input " + to_string(n));
}

}  // namespace

std::string to_string(Int v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

Int parse_int(std::string_view text) {
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  // "1e9" and "10^9" are accepted as exact powers of ten.
  unsigned exp10 = 0;
  if (auto pos = s.find_first_of("eE"); pos != std::string_view::npos) {
    exp10 = static_cast<unsigned>(parse_int(s.substr(pos + 1)));
    s = s.substr(0, pos);
  } else if (s.rfind("10^", 0) == 0) {
    exp10 = static_cast<unsigned>(parse_int(s.substr(3)));
    s = "1";
  }
  if (s.empty()) throw DomainError("not an integer: '" + std::string(text) + "'");
  Int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw DomainError("not an integer: '" + std::string(text) + "'");
    if (__builtin_mul_overflow(v, Int{10}, &v) || __builtin_add_overflow(v, Int{c - '0'}, &v))
      throw OverflowError("integer out of range: " + std::string(text));
  }
  for (unsigned i = 0; i < exp10; ++i)
    if (__builtin_mul_overflow(v, Int{10}, &v)) throw OverflowError("integer out of range: " + std::string(text));
  return neg ? -v : v;
}

Rational parse_rational(std::string_view text) {
  auto as_i64 = [&](std::string_view s) {
    Int v = parse_int(s);
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("rational component out of range: " + std::string(text));
    return static_cast<std::int64_t>(v);
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto den = as_i64(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator: " + std::string(text));
    return Rational(as_i64(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string digits(text.substr(0, dot));
    std::string frac(text.substr(dot + 1));
    if (frac.size() > 17) throw DomainError("too many decimals: " + std::string(text));
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    bool neg = !digits.empty() && digits.front() == '-';
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    std::int64_t whole = as_i64(digits);
    std::int64_t part = frac.empty() ? 0 : as_i64(frac);
    std::int64_t num = (neg ? -1 : 1) * (std::abs(whole) * den + part);
    return Rational(num, den);
  }
  return Rational(as_i64(text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("product overflow: " + to_string(a) + " * " + to_string(b));
  return r;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("sum overflow: " + to_string(a) + " + " + to_string(b));
  return r;
}

Int checked_pow(Int base, unsigned exp) {
  Int r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

int compare_pow(Int base, unsigned exp, Int n) { return compare_scaled(base, exp, 1, n); }

Int isqrt(Int n) {
  require_non_negative(n, "isqrt");
  if (n < 2) return n;
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  r = (r + n / r) / 2;  // one integer Newton step from the float seed
  while (compare_pow(r, 2, n) > 0) --r;
  while (compare_pow(r + 1, 2, n) <= 0) ++r;
  return r;
}

Int icbrt(Int n) {
  require_non_negative(n, "icbrt");
  if (n < 2) return n;
  Int r = static_cast<Int>(std::cbrt(static_cast<long double>(n)));
  if (r > 0) r = (2 * r + n / (r * r)) / 3;
  while (compare_pow(r, 3, n) > 0) --r;
  while (compare_pow(r + 1, 3, n) <= 0) ++r;
  return r;
}

Int iroot(Int n, unsigned k) {
  require_non_negative(n, "iroot");
  if (k == 0) throw DomainError("iroot: zero index");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  if (k == 3) return icbrt(n);
  Int r = static_cast<Int>(std::pow(static_cast<long double>(n), 1.0L / k));
  while (compare_pow(r, k, n) > 0) --r;
  while (compare_pow(r + 1, k, n) <= 0) ++r;
  return r;
}

Int ceil_scaled_root(Int n, unsigned k, Int num, Int den) {
  require_non_negative(n, "ceil_scaled_root");
  if (num < 0 || den <= 0) throw DomainError("ceil_scaled_root: bad scale");
  const Int target = checked_mul(num, n);
  Int f = iroot(target / den, k);
  while (compare_scaled(f, k, den, target) < 0) ++f;
  while (f > 0 && compare_scaled(f - 1, k, den, target) >= 0) --f;
  return f;
}

Int floor_scaled_root(Int n, unsigned k, Int num, Int den) {
  require_non_negative(n, "floor_scaled_root");
  if (num < 0 || den <= 0) throw DomainError("floor_scaled_root: bad scale");
  const Int target = checked_mul(num, n);
  Int f = iroot(target / den, k);
  while (f > 0 && compare_scaled(f, k, den, target) > 0) --f;
  while (compare_scaled(f + 1, k, den, target) <= 0) ++f;
  return f;
}

Int ceil_pow(Int x, const Rational& theta) {
  if (x < 1) throw DomainError("ceil_pow: base must be >= 1");
  if (theta < 0) throw DomainError("ceil_pow: negative exponent");
  const auto p = static_cast<unsigned long>(theta.numerator());
  const auto q = static_cast<unsigned long>(theta.denominator());
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), to_mpz(x).get_mpz_t(), p);
  mpz_class root;
  const bool exact = mpz_root(root.get_mpz_t(), power.get_mpz_t(), q) != 0;
  if (!exact) root += 1;
  return from_mpz(root);
}

static_assert(kIntMax > kMaxQuery);

}  // namespace akp
