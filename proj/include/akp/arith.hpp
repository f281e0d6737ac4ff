#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "akp/errors.hpp"

namespace akp {

// Exact integer used throughout. Signed so that negative inputs can be
// represented and rejected; the supported magnitude is below 2^126.
using Int = __int128;
using Rational = boost::rational<std::int64_t>;

// Largest query accepted by the constructions.
inline constexpr Int kMaxQuery = Int{1} << 100;

std::string to_string(Int v);
Int parse_int(std::string_view text);

// Accepts "p/q", "p" or a plain decimal such as "0.01" (converted exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

Int checked_mul(Int a, Int b);
Int checked_add(Int a, Int b);
Int checked_pow(Int base, unsigned exp);

// Sign of base^exp - n without overflow (base, n >= 0).
int compare_pow(Int base, unsigned exp, Int n);

Int isqrt(Int n);
Int icbrt(Int n);
// floor(n^(1/k)) for k >= 1.
Int iroot(Int n, unsigned k);

// Smallest f >= 0 with den * f^k >= num * n, i.e. f = ceil((num/den)^(1/k) n^(1/k)).
Int ceil_scaled_root(Int n, unsigned k, Int num, Int den);
// Largest f >= 0 with den * f^k <= num * n.
Int floor_scaled_root(Int n, unsigned k, Int num, Int den);

// ceil(x^theta) for x >= 1 and theta = p/q >= 0, computed exactly.
Int ceil_pow(Int x, const Rational& theta);

inline Int ceil_div(Int a, Int b) { return a / b + ((a % b != 0) && ((a > 0) == (b > 0))); }
inline Int floor_div(Int a, Int b) { return a / b - ((a % b != 0) && ((a > 0) != (b > 0))); }

}  // namespace akp
