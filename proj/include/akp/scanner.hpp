#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "akp/arith.hpp"
#include "akp/budget.hpp"
#include "akp/construct.hpp"
#include "akp/sequences.hpp"

namespace akp {

// Factor ranges fixed in advance: one [lo, hi] shared by every position, or one per position.
struct AbsoluteBounds {
  std::vector<std::pair<Int, Int>> ranges;

  // [ceil(x^(1/k)/2), floor(2 x^(1/k))], evaluated exactly.
  static AbsoluteBounds balanced(Int x, unsigned k);
};

// factor_i in [c n^(1/k), C n^(1/k)] for the candidate n itself.
struct RelativeBounds {
  Rational lower{1, 2};
  Rational upper{2};
};

using Bounds = std::variant<AbsoluteBounds, RelativeBounds>;

struct WindowQuery {
  Int x = 0;
  std::variant<Rational, Int> length = Int{0};  // theta (window x + ceil(x^theta)) or H
  unsigned k = 2;
  Bounds bounds = RelativeBounds{};
  std::vector<SequenceSpec> specs{SequenceSpec::all()};  // one per position, or one shared

  Int window_length() const;
  const SequenceSpec& spec_at(unsigned pos) const;
  std::pair<Int, Int> range_at(unsigned pos) const;  // absolute mode only
  void validate() const;
};

struct ScanReport {
  WindowQuery query;
  std::vector<Factorization> hits;  // ascending by value; one witness per value
  Int witness_count = 0;            // number of distinct admissible values
  Int max_internal_gap = 0;
};

struct ScanOptions {
  Int loop_budget = 1'000'000'000;
  Int window_budget = 100'000'000;
  Deadline deadline{};
  unsigned threads = 1;
};

inline constexpr Int kFindFirstReach = 100'000'000;

// Every value in the window that factors as n_1 ... n_k under the query's
// bounds and memberships, each with its lexicographically least ascending
// factor tuple.
ScanReport enumerate_products(const WindowQuery& q, const ScanOptions& opt = {});

// Direct check of each value in the window by divisor search; used to
// confirm failures independently of the enumeration above.
std::vector<Factorization> exhaustive_hits(const WindowQuery& q, const ScanOptions& opt = {});

// Minimal admissible n >= x (windows doubled until a hit, up to x + 10^8).
Factorization find_first(Int x, unsigned k, const Bounds& bounds, const std::vector<SequenceSpec>& specs,
                         const ScanOptions& opt = {});

struct GapRecord {
  Int location = 0;  // value at the start of the gap
  Int gap = 0;
};

struct GapReport {
  Int lo = 0, hi = 0, stride = 0;
  unsigned k = 2;
  Int values = 0;                 // admissible values found in [lo, hi]
  GapRecord max;                  // largest gap overall
  std::vector<GapRecord> maxima;  // largest gap starting in each stride
  double exponent = 0.0;          // log(gap) / log(location)
};

GapReport gap_scan(Int lo, Int hi, unsigned k, const Bounds& bounds, const std::vector<SequenceSpec>& specs,
                   Int stride, const ScanOptions& opt = {});

enum class Theorem { T1, T2, T3, T4 };
const char* to_string(Theorem t);
Theorem parse_theorem(std::string_view text);

// Window exponent and factor pattern used for each theorem.
struct TheoremPattern {
  Rational base_exponent;
  unsigned k;
  std::vector<SequenceSpec> specs;  // position 0 is the free factor m
};
TheoremPattern theorem_pattern(Theorem t);

// The query that checks a single x for the given theorem and window exponent.
WindowQuery theorem_query(Int x, Theorem t, const Rational& theta);

struct VerifyResult {
  Theorem theorem = Theorem::T1;
  Int x = 0;
  Rational theta;
  Int window = 0;
  std::pair<Int, Int> factor_range;
  std::optional<Factorization> witness;
  Int hits = 0;
  bool exhaustively_confirmed = false;  // set on failure after the independent check
};

VerifyResult verify_interval_theorem(Int x, Theorem t, const Rational& slack, const ScanOptions& opt = {});

struct FractionReport {
  Int X = 0;
  Theorem theorem = Theorem::T3;
  Rational theta;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t successes = 0;
  double fraction = 0.0;
  std::vector<Int> failures;  // ascending, each confirmed exhaustively
};

Rational default_fraction_theta(Theorem t);
// Sample positions used by almost_all_fraction (uniform on [X, 2X]).
std::vector<Int> sample_points(Int X, std::size_t samples, std::uint64_t seed);

FractionReport almost_all_fraction(Int X, Theorem t, std::optional<Rational> theta, std::size_t samples,
                                   std::uint64_t seed, const ScanOptions& opt = {});

}  // namespace akp
