#include <map>
#include <random>

#include "doctest.h"

#include "akp/construct.hpp"
#include "akp/scanner.hpp"
#include "oracles.hpp"
#include "scan_support.hpp"

using namespace akp;

namespace {

const Bounds kRel = RelativeBounds{Rational(1, 2), Rational(2)};

std::map<Int, std::vector<Int>> as_map(const ScanReport& r) {
  std::map<Int, std::vector<Int>> m;
  for (const auto& f : r.hits) m[f.value] = f.factors;
  return m;
}

void check_witness(const WindowQuery& q, const Factorization& f) { REQUIRE(support::witness_ok(q, f)); }

using support::random_query;

}  // namespace

TEST_CASE("enumerate_products examples") {
  WindowQuery q{100, Int{10}, 3, AbsoluteBounds{{{3, 7}}}, {SequenceSpec::all()}};
  auto r = enumerate_products(q);
  const std::map<Int, std::vector<Int>> expected{{100, {4, 5, 5}}, {105, {3, 5, 7}}, {108, {3, 6, 6}}};
  CHECK(as_map(r) == expected);
  CHECK(r.witness_count == 3);
  CHECK(r.max_internal_gap == 5);

  q = WindowQuery{1000, Int{0}, 3, AbsoluteBounds{{{10, 10}}}, {SequenceSpec::all()}};
  r = enumerate_products(q);
  REQUIRE(r.hits.size() == 1);
  CHECK(r.hits[0].factors == std::vector<Int>{10, 10, 10});
  CHECK(r.max_internal_gap == 0);

  q = WindowQuery{101, Int{0}, 2, AbsoluteBounds{{{2, 50}}}, {SequenceSpec::all()}};
  r = enumerate_products(q);
  CHECK(r.hits.empty());
  CHECK(r.witness_count == 0);

  // empty factor range is an empty report, not an error
  q = WindowQuery{100, Int{10}, 3, AbsoluteBounds{{{3, 7}}}, {SequenceSpec::list({40, 41})}};
  CHECK(enumerate_products(q).hits.empty());
}

TEST_CASE("enumerate_products input validation and budgets") {
  WindowQuery q{100, Int{10}, 5, AbsoluteBounds{{{3, 7}}}, {SequenceSpec::all()}};
  CHECK_THROWS_AS(enumerate_products(q), DomainError);
  q.k = 3;
  q.bounds = AbsoluteBounds{{{7, 3}}};
  CHECK_THROWS_AS(enumerate_products(q), DomainError);
  q.bounds = RelativeBounds{Rational(2), Rational(3)};
  CHECK_THROWS_AS(enumerate_products(q), DomainError);
  q.bounds = kRel;
  q.length = Rational(0);
  CHECK_THROWS_AS(enumerate_products(q), DomainError);
  q.length = Rational(1);
  CHECK_NOTHROW(enumerate_products(q));

  q = WindowQuery{1'000'000, Int{200'000'000}, 2, kRel, {SequenceSpec::all()}};
  CHECK_THROWS_AS(enumerate_products(q), BudgetError);

  ScanOptions tight;
  tight.loop_budget = 100;
  q = WindowQuery{1'000'000'000, Int{1000}, 3, AbsoluteBounds::balanced(1'000'000'000, 3), {SequenceSpec::all()}};
  CHECK_THROWS_AS(enumerate_products(q, tight), BudgetError);

  ScanOptions expired;
  expired.deadline = Deadline::after(0.0);
  q = WindowQuery{1'000'000'000'000, Int{1'000'000}, 3, AbsoluteBounds::balanced(1'000'000'000'000, 3),
                  {SequenceSpec::all()}};
  CHECK_THROWS_AS(enumerate_products(q, expired), BudgetError);
}

TEST_CASE("enumerate_products matches the naive nested loop on random windows") {
  std::mt19937_64 rng(2024);
  std::size_t total = 0, nonempty = 0;
  for (int i = 0; i < 250; ++i) {
    const WindowQuery q = random_query(rng);
    INFO("case " << i << " x=" << to_string(q.x) << " k=" << q.k);
    const auto r = enumerate_products(q);
    REQUIRE(as_map(r) == oracle::nested_loop(q));
    for (const auto& f : r.hits) check_witness(q, f);
    total += r.hits.size();
    nonempty += !r.hits.empty();
  }
  CHECK(nonempty >= 100);
  MESSAGE(total << " hits across " << nonempty << " non-empty windows");
}

TEST_CASE("find_first examples") {
  auto f = find_first(1000, 3, kRel, {SequenceSpec::all()});
  CHECK(f.value == 1000);
  CHECK(f.offset == 0);

  f = find_first(101, 2, kRel, {SequenceSpec::all()});
  CHECK(f.value == 102);
  CHECK(f.factors == std::vector<Int>{6, 17});

  f = find_first(1'000'001, 3, kRel, {SequenceSpec::all()});
  CHECK(f.value <= 1'001'819);
  CHECK(f.value == 1'000'004);
  CHECK(f.factors == std::vector<Int>{53, 106, 178});

  CHECK_THROWS_AS(find_first(100, 2, AbsoluteBounds{{{2, 3}}}, {SequenceSpec::all()}), BudgetError);
}

TEST_CASE("find_first is minimal") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const Int x = 2 + static_cast<Int>(rng() % 10'000'000);
    const unsigned k = 2 + static_cast<unsigned>(rng() % 2);
    const auto f = find_first(x, k, kRel, {SequenceSpec::all()});
    REQUIRE(f.value >= x);
    if (f.value > x) {
      WindowQuery q{x, f.value - 1 - x, k, kRel, {SequenceSpec::all()}};
      REQUIRE(enumerate_products(q).hits.empty());
    }
    check_witness(WindowQuery{x, f.value - x, k, kRel, {SequenceSpec::all()}}, f);
  }
}

TEST_CASE("exhaustive_hits agrees with enumeration") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Int x = 1000 + static_cast<Int>(rng() % 1'000'000);
    for (unsigned k : {2u, 3u}) {
      WindowQuery q{x, Int{200}, k, kRel, {SequenceSpec::all()}};
      const auto a = enumerate_products(q).hits;
      const auto b = exhaustive_hits(q);
      REQUIRE(a == b);
      q.bounds = AbsoluteBounds::balanced(x, k);
      q.specs = {SequenceSpec::all(), SequenceSpec::primes(), SequenceSpec::primes()};
      if (k == 2) q.specs.pop_back();
      REQUIRE(enumerate_products(q).hits == exhaustive_hits(q));
    }
  }
}

TEST_CASE("gap_scan") {
  const auto g = gap_scan(1'000'000, 1'010'000, 2, kRel, {SequenceSpec::all()}, 1000);
  CHECK(g.values > 0);
  CHECK(g.max.gap >= 1);
  CHECK(g.exponent <= 0.30);
  CHECK(g.maxima.size() == 11);
  // independent recount of the largest gap
  const auto r = enumerate_products(WindowQuery{1'000'000, Int{10'000}, 2, kRel, {SequenceSpec::all()}});
  CHECK(g.values == r.witness_count);
  CHECK(g.max.gap == r.max_internal_gap);

  const auto g3 = gap_scan(1'000'000, 1'010'000, 3, kRel, {SequenceSpec::all()}, 2500);
  CHECK(g3.max.gap >= 1);
  CHECK(g3.values > 0);

  // a perfect square sits in the window; the next hit is strictly later
  const auto sq = gap_scan(1'000'000 - 5, 1'000'000 + 50, 2, AbsoluteBounds{{{1000, 1000}}}, {SequenceSpec::all()}, 7);
  CHECK(sq.values == 1);

  CHECK_THROWS_AS(gap_scan(10, 5, 2, kRel, {SequenceSpec::all()}, 1), DomainError);
  CHECK_THROWS_AS(gap_scan(2, Int{2'000'000'000'000}, 2, kRel, {SequenceSpec::all()}, 10), BudgetError);
}

TEST_CASE("verify_interval_theorem examples") {
  auto v = verify_interval_theorem(1'000'000'000, Theorem::T1, Rational(1, 100));
  REQUIRE(v.witness);
  CHECK(v.window == ceil_pow(1'000'000'000, Rational(5, 9) + Rational(1, 100)));
  CHECK(v.factor_range == std::pair<Int, Int>{500, 2000});
  check_witness(theorem_query(v.x, Theorem::T1, v.theta), *v.witness);

  v = verify_interval_theorem(1'000'000'000, Theorem::T3, Rational(0));
  REQUIRE(v.witness);
  CHECK(v.witness->offset == 0);

  v = verify_interval_theorem(100'000'000, Theorem::T2, Rational(1, 100));
  REQUIRE(v.witness);
  CHECK(v.factor_range == std::pair<Int, Int>{50, 200});
  for (Int f : v.witness->factors) {
    CHECK(f >= 50);
    CHECK(f <= 200);
  }
  check_witness(theorem_query(v.x, Theorem::T2, v.theta), *v.witness);

  CHECK_THROWS_AS(verify_interval_theorem(1000, Theorem::T1, Rational(-1, 100)), DomainError);
}

TEST_CASE("verify failure records are exhaustively confirmed") {
  int failures = 0;
  for (Int x = 1'000'000'001; x < 1'000'000'041; ++x) {
    const auto v = verify_interval_theorem(x, Theorem::T3, Rational(0));
    CHECK(v.exhaustively_confirmed == !v.witness.has_value());
    if (!v.witness) {
      ++failures;
      CHECK(exhaustive_hits(theorem_query(x, Theorem::T3, v.theta)).empty());
    }
  }
  MESSAGE("T3 failures at slack 0 near 10^9: " << failures);
}

TEST_CASE("almost_all_fraction") {
  auto r = almost_all_fraction(1000, Theorem::T3, Rational(1), 50, 1);
  CHECK(r.fraction == 1.0);
  CHECK(r.failures.empty());

  CHECK_THROWS_AS(almost_all_fraction(1'000'000, Theorem::T3, std::nullopt, 0, 1), DomainError);
  CHECK_THROWS_AS(almost_all_fraction(1'000'000, Theorem::T1, std::nullopt, 10, 1), DomainError);
  CHECK_THROWS_AS(almost_all_fraction(1'000'000, Theorem::T3, std::nullopt, 100'001, 1), BudgetError);

  const auto a = almost_all_fraction(1'000'000, Theorem::T3, Rational(1, 10), 300, 42);
  const auto b = almost_all_fraction(1'000'000, Theorem::T3, Rational(1, 10), 300, 42);
  CHECK(a.fraction == b.fraction);
  CHECK(a.failures == b.failures);
  CHECK(a.successes + a.failures.size() <= a.samples);  // duplicate samples collapse in the list
  CHECK(sample_points(1'000'000, 300, 42) == sample_points(1'000'000, 300, 42));
  for (Int x : sample_points(1'000'000, 300, 42)) {
    CHECK(x >= 1'000'000);
    CHECK(x <= 2'000'000);
  }
  for (Int x : a.failures) CHECK(exhaustive_hits(theorem_query(x, Theorem::T3, Rational(1, 10))).empty());

  ScanOptions par;
  par.threads = 4;
  const auto c = almost_all_fraction(1'000'000, Theorem::T3, Rational(1, 10), 300, 42, par);
  CHECK(c.failures == a.failures);
}
