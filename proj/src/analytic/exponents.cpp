#include "akp/analytic/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "akp/errors.hpp"

namespace akp {

const char* to_string(ExponentMode m) {
  switch (m) {
    case ExponentMode::T1: return "T1";
    case ExponentMode::T2: return "T2";
    case ExponentMode::T3: return "T3";
    case ExponentMode::T4_lindelof: return "T4";
  }
  return "?";
}

ExponentMode parse_exponent_mode(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "T1") return ExponentMode::T1;
  if (s == "T2") return ExponentMode::T2;
  if (s == "T3") return ExponentMode::T3;
  if (s == "T4" || s == "T4_LINDELOF" || s == "LINDELOF") return ExponentMode::T4_lindelof;
  throw DomainError("unknown exponent mode '" + std::string(text) + "' (expected T1, T2, T3 or T4)");
}

namespace {

struct BlockTerm {
  Rational beta;   // block integral grows like T^beta
  Monomial coef;   // x-dependence of that growth
};

struct Recipe {
  Monomial prefactor;
  Rational alpha;  // dyadic weight (delta/2^j)^alpha
  std::vector<BlockTerm> blocks;
  Rational target;
};

Monomial x_pow(Rational a) { return {a, 0}; }

Recipe recipe(ExponentMode mode) {
  const Rational weyl(71, 42);
  switch (mode) {
    case ExponentMode::T1:
      // Short-interval count with the fourth-moment input.
      return {{Rational(-2, 3), -3}, 2, {{1, x_pow(0)}, {Rational(1, 2), x_pow(Rational(1, 3))}}, Rational(1, 3)};
    case ExponentMode::T2:
      return {{Rational(-3, 4), -3}, weyl, {{1, x_pow(0)}, {0, x_pow(Rational(1, 2))}}, Rational(1, 4)};
    case ExponentMode::T3:
      return {{0, -2}, weyl, {{1, x_pow(0)}, {0, x_pow(Rational(2, 3))}}, 1};
    case ExponentMode::T4_lindelof:
      return {{0, -2}, 2, {{1, x_pow(0)}, {0, x_pow(Rational(2, 3))}}, 1};
  }
  throw DomainError("unknown exponent mode");
}

std::string delta_label(const Rational& inverse_power) { return "delta^(" + to_string(inverse_power) + ")"; }

}  // namespace

std::vector<ExponentTerm> derive_terms(ExponentMode mode, Rational* target) {
  const Recipe r = recipe(mode);
  if (target) *target = r.target;
  std::vector<ExponentTerm> out;
  for (const BlockTerm& b : r.blocks) {
    // sum_j (delta/2^j)^alpha (2^j/delta)^beta is dominated by j = 0 when alpha > beta.
    if (!(r.alpha > b.beta)) throw DomainError("dyadic sum diverges: weight exponent must exceed block growth");
    const Monomial m = r.prefactor * b.coef * Monomial{0, r.alpha - b.beta};
    out.push_back({m, delta_label(-m.delta_exp), std::nullopt});
  }
  return out;
}

ExponentSolution solve_exponents(ExponentMode mode, std::vector<ExponentTerm> terms, const Rational& target) {
  ExponentSolution s;
  s.mode = mode;
  s.target = target;
  Rational best(1);
  std::string binding = "cap";
  // With delta = x^{-e}, x^a delta^b = x^{a - b e}; need a - b e < target.
  for (ExponentTerm& t : terms) {
    const Rational a = t.m.x_exp, b = t.m.delta_exp;
    // Sign tests go through the numerator: rational == int recurses under C++20 rewriting.
    if (b.numerator() < 0) {
      t.limit = (target - a) / (-b);
    } else if (b.numerator() == 0) {
      if (!(a < target)) throw DomainError("term " + t.label + " is not o(x^target) for any delta");
    } else {
      t.limit = std::nullopt;  // decreasing in e, never binding
    }
    if (t.limit && *t.limit <= best) {
      best = *t.limit;
      binding = t.label;
    }
  }
  if (best.numerator() <= 0) throw DomainError("no admissible delta exponent");
  s.delta_exponent = best;
  s.theta = Rational(1) - best;
  s.binding_term = binding;
  s.terms = std::move(terms);
  s.validate();
  return s;
}

ExponentSolution exponent_optimizer(ExponentMode mode) {
  Rational target;
  auto terms = derive_terms(mode, &target);
  return solve_exponents(mode, std::move(terms), target);
}

void ExponentSolution::validate() const {
  if (delta_exponent.numerator() <= 0 || delta_exponent > Rational(1)) throw DomainError("delta exponent must lie in (0, 1]");
  if (theta != Rational(1) - delta_exponent) throw DomainError("theta must equal 1 - e");
  if (binding_term.empty()) throw DomainError("missing binding term");
}

}  // namespace akp
