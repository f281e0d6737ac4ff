#include <cstdio>
#include <fstream>
#include <map>
#include <random>

#include "doctest.h"

#include "akp/primes.hpp"
#include "akp/sequences.hpp"
#include "oracles.hpp"

using namespace akp;

TEST_CASE("members_in examples") {
  const auto primes = members_in(SequenceSpec::primes(), 10, 20);
  CHECK(primes == std::vector<Member>{{11, 1}, {13, 1}, {17, 1}, {19, 1}});

  const auto pp = SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::primes());
  CHECK(pp.label == "prodPP");
  CHECK(members_in(pp, 15, 15) == std::vector<Member>{{15, 2}});

  const auto all = members_in(SequenceSpec::all(), 100, 105);
  REQUIRE(all.size() == 6);
  for (std::size_t i = 0; i < all.size(); ++i) CHECK(all[i] == Member{100 + static_cast<Int>(i), 1});

  CHECK_THROWS_AS(members_in(SequenceSpec::all(), 20, 10), DomainError);
  CHECK_THROWS_AS(members_in(SequenceSpec::all(), 1, 10), DomainError);
  CHECK_THROWS_AS(members_in(SequenceSpec::all(), 2, 2'000'000'003), BudgetError);
}

TEST_CASE("segmented sieve agrees with trial division") {
  std::vector<Int> sieve;
  for (auto p : primes_in(0, 100'000)) sieve.push_back(static_cast<Int>(p));
  std::vector<Int> trial;
  for (Int n = 0; n <= 100'000; ++n)
    if (oracle::is_prime_trial(n)) trial.push_back(n);
  CHECK(sieve == trial);

  // windows straddling segment boundaries, odd/even endpoints
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const std::uint64_t lo = rng() % 3'000'000;
    const std::uint64_t hi = lo + rng() % 700'000;
    std::uint64_t expected = 0;
    for (std::uint64_t n = lo; n <= hi; ++n) expected += is_prime(n);
    REQUIRE(count_primes_in(lo, hi) == expected);
  }
  CHECK(count_primes_in(1'000'000'000, 1'000'100'000) == 4832);
}

TEST_CASE("Miller-Rabin agrees with trial division") {
  for (Int n = 0; n < 200'000; ++n) REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == oracle::is_prime_trial(n));
  CHECK(is_prime(1'000'000'007));
  CHECK_FALSE(is_prime(3'215'031'751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18'446'744'073'709'551'557ULL));
}

TEST_CASE("product weights equal the brute-force ordered pair count") {
  constexpr Int kMax = 1'000'000;
  std::vector<char> prime(kMax + 1);
  for (Int n = 0; n <= kMax; ++n) prime[static_cast<std::size_t>(n)] = oracle::is_prime_trial(n);
  const std::vector<Int> small_list{2, 3, 4, 9, 25, 1000};
  auto in_list = [&](Int n) { return std::find(small_list.begin(), small_list.end(), n) != small_list.end(); };
  auto is_p = [&](Int n) { return prime[static_cast<std::size_t>(n)] != 0; };

  const auto pp = SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::primes());
  const auto mixed = SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::list(small_list));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const Int hi = 2 + static_cast<Int>(rng() % (kMax - 1));
    const Int lo = std::max<Int>(2, hi - static_cast<Int>(rng() % 3000));
    for (int which = 0; which < 2; ++which) {
      std::map<Int, Int> brute;
      for (Int a = 1; a <= hi; ++a) {
        const Int b0 = std::max<Int>(1, (lo + a - 1) / a);
        if (a * b0 > hi || !is_p(a)) continue;
        for (Int b = b0; a * b <= hi; ++b)
          if (which == 0 ? is_p(b) : in_list(b)) ++brute[a * b];
      }
      std::vector<Member> expected;
      for (auto [n, w] : brute) expected.push_back({n, w});
      REQUIRE(members_in(which == 0 ? pp : mixed, lo, hi) == expected);
    }
  }
}

TEST_CASE("product weight is bounded by the divisor count") {
  const auto pp = SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::primes());
  for (const Member& m : members_in(pp, 2, 1'000'000)) REQUIRE(m.weight <= oracle::divisor_count(m.value));
  CHECK(weight_of(pp, 15) == 2);
  CHECK(weight_of(pp, 49) == 1);
  CHECK(weight_of(pp, 30) == 0);
}

TEST_CASE("enumeration agrees with membership") {
  const auto pp = SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::primes());
  for (const auto& spec : {SequenceSpec::primes(), pp, SequenceSpec::list({3, 5, 8, 13})}) {
    const auto ms = members_in(spec, 2, 3000);
    std::size_t j = 0;
    for (Int n = 2; n <= 3000; ++n) {
      const bool listed = j < ms.size() && ms[j].value == n;
      REQUIRE(listed == contains(spec, n));
      if (listed) REQUIRE(ms[j++].weight == weight_of(spec, n));
    }
  }
}

TEST_CASE("density_check examples") {
  auto r = density_check(SequenceSpec::all(), 1000, Rational(1, 10));
  CHECK(r.count == 1001);
  CHECK_FALSE(r.flagged);
  CHECK(r.implied_constant == doctest::Approx(1001.0 / std::pow(1000.0, 0.975)).epsilon(1e-12));

  CHECK(density_check(SequenceSpec::primes(), 1000, Rational(1, 10)).count == 135);

  r = density_check(SequenceSpec::list({5}), 1000, Rational(1, 10));
  CHECK(r.count == 0);
  CHECK(r.flagged);

  for (Int X : {2, 17, 12345, 1'000'000'000}) CHECK(density_check(SequenceSpec::all(), X, Rational(1, 2)).count == X + 1);

  CHECK_THROWS_AS(density_check(SequenceSpec::all(), 1, Rational(1, 10)), DomainError);
  CHECK_THROWS_AS(density_check(SequenceSpec::all(), 10, Rational(1)), DomainError);
}

TEST_CASE("sequence kinds parse from CLI strings") {
  CHECK(parse_sequence("all") == SequenceSpec::all());
  CHECK(parse_sequence("primes") == SequenceSpec::primes());
  CHECK(parse_sequence("prodPP") == SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::primes()));
  CHECK_THROWS_AS(parse_sequence("squares"), DomainError);

  const std::string path = "akp_test_list.txt";
  {
    std::ofstream out(path);
    out << "4\n9\n25\n49\n";
  }
  const auto l = parse_sequence("list:" + path);
  CHECK(members_in(l, 5, 30) == std::vector<Member>{{9, 1}, {25, 1}});
  {
    std::ofstream out(path);
    out << "9\n4\n";
  }
  CHECK_THROWS_AS(parse_sequence("list:" + path), DomainError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_sequence("list:/nonexistent/file"), DomainError);
}
