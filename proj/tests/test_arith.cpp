#include <random>

#include "doctest.h"

#include "akp/arith.hpp"
#include "akp/construct.hpp"
#include "akp/scanner.hpp"

using namespace akp;

namespace {

// offset <= 3 x^(1/4) + 3, i.e. (offset - 3)^4 <= 81 x when offset > 3.
bool square_offset_ok(Int offset, Int x) {
  if (offset < 0) return false;
  if (offset <= 3) return true;
  return checked_pow(offset - 3, 4) <= 81 * x;
}

// offset <= 6 sqrt(x) + 64.
bool cube_offset_ok(Int offset, Int x) {
  if (offset < 0) return false;
  if (offset <= 64) return true;
  return (offset - 64) * (offset - 64) <= 36 * x;
}

}  // namespace

TEST_CASE("isqrt and icbrt examples") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(parse_int("1000000000000000000")) == 1'000'000'000);
  CHECK(icbrt(26) == 2);
  CHECK(icbrt(27) == 3);
  CHECK(icbrt(parse_int("1e18")) == 1'000'000);
  CHECK_THROWS_AS(isqrt(-1), DomainError);
  CHECK_THROWS_AS(icbrt(-5), DomainError);
}

TEST_CASE("roots bracket their input exhaustively and at random up to 2^120") {
  for (Int n = 0; n <= 1'000'000; ++n) {
    const Int r = isqrt(n), c = icbrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
    REQUIRE(c * c * c <= n);
    REQUIRE((c + 1) * (c + 1) * (c + 1) > n);
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20000; ++i) {
    const unsigned bits = 1 + rng() % 120;
    Int n = (static_cast<Int>(rng()) << 64 | static_cast<Int>(rng())) & ((Int{1} << bits) - 1);
    if (n < 0) n = -n;
    const Int r = isqrt(n), c = icbrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
    REQUIRE(c * c * c <= n);
    REQUIRE((c + 1) * (c + 1) * (c + 1) > n);
  }
  // perfect powers and their neighbours
  for (Int b : {Int{1} << 40, Int{1'000'003}, (Int{1} << 41) - 1}) {
    CHECK(icbrt(b * b * b) == b);
    CHECK(icbrt(b * b * b - 1) == b - 1);
    CHECK(isqrt(b * b) == b);
    CHECK(isqrt(b * b - 1) == b - 1);
  }
  CHECK(isqrt((Int{1} << 126) - 1) == (Int{1} << 63) - 1);
}

TEST_CASE("iroot and scaled roots") {
  CHECK(iroot(81, 4) == 3);
  CHECK(iroot(80, 4) == 2);
  // [x^(1/3)/2, 2 x^(1/3)] at x = 10^9 is [500, 2000]
  CHECK(ceil_scaled_root(1'000'000'000, 3, 1, 8) == 500);
  CHECK(floor_scaled_root(1'000'000'000, 3, 8, 1) == 2000);
  CHECK(ceil_scaled_root(1'000'000'001, 3, 1, 8) == 501);
}

TEST_CASE("ceil_pow is exact for rational exponents") {
  CHECK(ceil_pow(1000, Rational(1, 3)) == 10);
  CHECK(ceil_pow(1001, Rational(1, 3)) == 11);
  CHECK(ceil_pow(1'000'000'000, Rational(5, 9)) == 100'000);
  CHECK(ceil_pow(1'000'000'000, Rational(5, 9) + Rational(1, 100)) == 123'027);  // 10^5.09 = 123026.87...
  CHECK(ceil_pow(1'000'000'000, Rational(141, 550)) == 203);
  CHECK(ceil_pow(7, Rational(0)) == 1);
  CHECK(ceil_pow(12345, Rational(1)) == 12345);
}

TEST_CASE("decimal and rational parsing") {
  CHECK(to_string(parse_int("1267650600228229401496703205376")) == "1267650600228229401496703205376");
  CHECK(parse_int("10^12") == Int{1'000'000'000'000});
  CHECK(parse_int("-42") == -42);
  CHECK_THROWS_AS(parse_int("12a"), DomainError);
  CHECK_THROWS_AS(parse_int("999999999999999999999999999999999999999999"), OverflowError);
  CHECK(parse_rational("21/55") == Rational(21, 55));
  CHECK(parse_rational("0.01") == Rational(1, 100));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(to_string(Rational(34, 55)) == "34/55");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("almost_square examples") {
  auto f = almost_square(100);
  CHECK(f.value == 100);
  CHECK(f.factors == std::vector<Int>{10, 10});
  CHECK(f.offset == 0);

  f = almost_square(99);
  CHECK(f.value == 99);
  CHECK(f.factors == std::vector<Int>{9, 11});

  f = almost_square(1'000'003);
  CHECK(f.value == 1'000'065);
  CHECK(f.factors == std::vector<Int>{957, 1045});
  CHECK(f.offset == 62);

  CHECK_THROWS_AS(almost_square(1), DomainError);
  CHECK_THROWS_AS(almost_square(kMaxQuery + 1), OverflowError);
  CHECK_NOTHROW(almost_square(kMaxQuery));
}

TEST_CASE("almost_square degenerate inputs use direct search") {
  for (Int x = 2; x <= 8; ++x) {
    const auto f = almost_square(x);
    CHECK(f.value >= x);
    CHECK(square_offset_ok(f.offset, x));
    CHECK(f.factors[0] <= isqrt(f.value));
    CHECK(isqrt(f.value) <= f.factors[1]);
  }
  CHECK(almost_square(5).value == 6);
  CHECK(almost_square(7).value == 8);
}

TEST_CASE("almost_cube examples") {
  auto f = almost_cube(1000);
  CHECK(f.value == 1000);
  CHECK(f.factors == std::vector<Int>{10, 10, 10});

  f = almost_cube(1'000'001);
  CHECK(f.value == 1'001'819);
  CHECK(f.factors == std::vector<Int>{91, 101, 109});
  CHECK(f.offset == 1818);
  CHECK(cube_offset_ok(f.offset, 1'000'001));

  const Int t = 1'000'000'000'000;
  f = almost_cube(t);
  CHECK(f.value == t);
  CHECK(f.factors == std::vector<Int>{10'000, 10'000, 10'000});

  CHECK(almost_cube(8).factors == std::vector<Int>{2, 2, 2});
  CHECK_THROWS_AS(almost_cube(7), DomainError);
}

TEST_CASE("construction bounds hold on a sweep") {
  std::mt19937_64 rng(5);
  for (Int x = 2; x <= 200'000; ++x) {
    const auto f = almost_square(x);
    REQUIRE(square_offset_ok(f.offset, x));
    REQUIRE(f.factors[0] <= isqrt(f.value));
    REQUIRE(isqrt(f.value) <= f.factors[1]);
  }
  for (int i = 0; i < 2000; ++i) {
    const Int x = 1'000'000 + static_cast<Int>(rng() % 1'000'000'000'000ULL);
    const auto c = almost_cube(x);
    REQUIRE(cube_offset_ok(c.offset, x));
    for (Int n : c.factors) {
      REQUIRE(8 * n * n * n >= x);
      REQUIRE(n * n * n <= 8 * x);
    }
  }
  // near the top of the accepted range
  for (int i = 0; i < 200; ++i) {
    const Int x = kMaxQuery - static_cast<Int>(rng() % 1'000'000);
    const auto f = almost_square(x);
    REQUIRE(square_offset_ok(f.offset, x));
    const auto c = almost_cube(x);
    REQUIRE(c.value >= x);
  }
}

TEST_CASE("construction never beats exhaustive search") {
  const Bounds rel = RelativeBounds{Rational(1, 2), Rational(2)};
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Int x = 2 + static_cast<Int>(rng() % 10'000'000);
    const auto best = find_first(x, 2, rel, {SequenceSpec::all()});
    CHECK(almost_square(x).value >= best.value);
  }
}

TEST_CASE("factorization validation") {
  Factorization f{12, {3, 4}, 10, 2};
  CHECK_NOTHROW(f.validate());
  f.factors = {4, 3};
  CHECK_THROWS_AS(f.validate(), DomainError);
  f = {12, {3, 4}, 13, -1};
  CHECK_THROWS_AS(f.validate(), DomainError);
  f = {13, {3, 4}, 10, 3};
  CHECK_THROWS_AS(f.validate(), DomainError);
}
