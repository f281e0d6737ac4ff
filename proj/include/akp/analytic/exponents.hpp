#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "akp/arith.hpp"

namespace akp {

enum class ExponentMode { T1, T2, T3, T4_lindelof };
const char* to_string(ExponentMode m);
ExponentMode parse_exponent_mode(std::string_view text);

// x^x_exp * delta^delta_exp, exponents exact.
struct Monomial {
  Rational x_exp{0};
  Rational delta_exp{0};
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.x_exp + b.x_exp, a.delta_exp + b.delta_exp};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// One term of the final bound, required to be o(x^target) once delta = x^{-e}.
struct ExponentTerm {
  Monomial m;
  std::string label;           // "delta^(p/q)": the power of 1/delta
  std::optional<Rational> limit;  // sup of admissible e from this term alone
};

struct ExponentSolution {
  ExponentMode mode = ExponentMode::T1;
  Rational delta_exponent;  // e with delta = x^{-e}
  Rational theta;           // 1 - e
  std::string binding_term;
  Rational target;          // terms must be o(x^target)
  std::vector<ExponentTerm> terms;

  void validate() const;
};

// Bound terms of each argument, derived at epsilon = 0 from the prefactor,
// the dyadic weight exponent and the mean-value inputs of that mode.
std::vector<ExponentTerm> derive_terms(ExponentMode mode, Rational* target = nullptr);

// Largest e in (0, 1] with every term o(x^target); ties between a term and the
// cap of 1 name the term.
ExponentSolution solve_exponents(ExponentMode mode, std::vector<ExponentTerm> terms, const Rational& target);

ExponentSolution exponent_optimizer(ExponentMode mode);

}  // namespace akp
