#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "akp/arith.hpp"
#include "akp/budget.hpp"

namespace akp {

using Complex = std::complex<double>;

// sum_{n_lo <= n <= n_hi} d_n n^{-s}, stored densely over the support.
struct DirichletPolynomial {
  std::int64_t n_lo = 1;
  std::vector<Complex> coeffs;  // coeffs[i] is d_{n_lo + i}

  std::int64_t n_hi() const { return n_lo + static_cast<std::int64_t>(coeffs.size()) - 1; }
  std::size_t size() const { return coeffs.size(); }
  Complex at(std::int64_t n) const;
  double norm2() const;  // sum |d_n|^2
  void validate() const;

  static DirichletPolynomial ones(std::int64_t lo, std::int64_t hi);
};

inline constexpr std::size_t kDirichletBudget = 10'000'000;

struct AnalyticOptions {
  unsigned threads = 1;
  Deadline deadline{};
};

// Compensated evaluation of sum d_n n^{-s}.
Complex eval_dirichlet(const DirichletPolynomial& p, Complex s);

// sum d_n n^{-it} at many t; same summation as eval_dirichlet on the line Re s = 0.
Complex eval_on_imaginary_axis(const DirichletPolynomial& p, double t);

// Panel width for integrating |D(it)|^2: resolves the largest frequency log(n_hi / n_lo).
double oscillation_panel_width(const DirichletPolynomial& p);

struct MeanValueReport {
  double T = 0.0;
  std::int64_t N = 0;  // largest index in the support
  double lhs = 0.0;    // int_0^T |D(it)|^2 dt
  double diagonal = 0.0;    // T sum |d_n|^2
  double reference = 0.0;   // N sum |d_n|^2
  double implied_constant = 0.0;
  std::size_t panels = 0;
};

MeanValueReport meanvalue_check(const DirichletPolynomial& p, double T, const AnalyticOptions& opt = {});

struct MajorantReport {
  double T = 0.0;
  double lhs = 0.0;        // int_{-T}^{T} |sum d_n n^{-it}|^2
  double rhs = 0.0;        // same for the majorant D_n
  double three_rhs = 0.0;
  bool pass = false;
};

MajorantReport majorant_check(const DirichletPolynomial& p, const DirichletPolynomial& majorant, double T,
                              const AnalyticOptions& opt = {});

// Closed form of int_0^T |D(it)|^2 dt (diagonal plus exact off-diagonal
// integrals); O(N^2), used as a cross-check.
double meanvalue_closed_form(const DirichletPolynomial& p, double T);

}  // namespace akp
