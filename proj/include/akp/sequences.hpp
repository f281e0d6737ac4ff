#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "akp/arith.hpp"

namespace akp {

// An "almost dense" sequence of positive integers with multiplicity weights.
struct SequenceSpec {
  struct AllIntegers {};
  struct Primes {};
  struct ExplicitList {
    std::shared_ptr<const std::vector<Int>> values;  // sorted, duplicate-free, positive
  };
  struct ProductOfTwo {
    std::shared_ptr<const SequenceSpec> first;
    std::shared_ptr<const SequenceSpec> second;
  };

  std::variant<AllIntegers, Primes, ExplicitList, ProductOfTwo> kind;
  std::string label;

  static SequenceSpec all();
  static SequenceSpec primes();
  static SequenceSpec list(std::vector<Int> values, std::string label = "list");
  static SequenceSpec product(SequenceSpec first, SequenceSpec second);

  friend bool operator==(const SequenceSpec& a, const SequenceSpec& b);
};

// "all", "primes", "prodPP" or "list:<path>" (one decimal integer per line).
SequenceSpec parse_sequence(std::string_view text);
SequenceSpec load_list(const std::string& path);

struct Member {
  Int value = 0;
  Int weight = 0;  // a_n: 1 for plain sequences, ordered representation count for products
  friend bool operator==(const Member&, const Member&) = default;
};

inline constexpr Int kMemberWindowBudget = 1'000'000'000;

// All members in [lo, hi] with weights, ascending. Requires 2 <= lo <= hi and
// hi - lo <= 10^9.
std::vector<Member> members_in(const SequenceSpec& spec, Int lo, Int hi);

// Same as members_in without the lo >= 2 restriction (lo >= 1).
std::vector<Member> collect_members(const SequenceSpec& spec, Int lo, Int hi);

// Number of distinct members in [lo, hi] (weights ignored).
Int count_members(const SequenceSpec& spec, Int lo, Int hi);

Int weight_of(const SequenceSpec& spec, Int n);
inline bool contains(const SequenceSpec& spec, Int n) { return weight_of(spec, n) > 0; }

struct DensityReport {
  Int X = 0;
  Int count = 0;
  Rational epsilon;
  double implied_constant = 0.0;  // count / X^(1 - epsilon/4)
  bool flagged = false;           // no member in [X, 2X]
};

DensityReport density_check(const SequenceSpec& spec, Int X, const Rational& epsilon);

}  // namespace akp
