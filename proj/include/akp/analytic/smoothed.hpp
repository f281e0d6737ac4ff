#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "akp/analytic/dirichlet.hpp"
#include "akp/sequences.hpp"

namespace akp {

// min(log(e^{2 delta} xi), log(1/xi)) on [e^{-2 delta}, 1], zero elsewhere.
double kernel_weight(double xi, double delta);

enum class MellinKernel { Simple, Tent };

struct MellinCheck {
  MellinKernel kernel = MellinKernel::Tent;
  double xi = 0, delta = 0, sigma = 0, T_cut = 0;
  double truncated = 0;    // (1/2 pi) int_{-T}^{T} of the kernel integrand
  double tail = 0;         // analytic estimate of the |t| > T part
  double quadrature = 0;   // truncated + tail
  double closed_form = 0;
  double error = 0;        // |quadrature - closed_form|
  std::size_t panels = 0;
};

// Numerical inverse Mellin transform of xi^s (e^{delta s} - 1)^2 / s^2 (Tent)
// or xi^s / s^2 (Simple) along Re s = sigma, against the closed forms.
MellinCheck kernel_mellin_check(double xi, double delta, double sigma, double T_cut,
                                MellinKernel kernel = MellinKernel::Tent, const AnalyticOptions& opt = {});

struct SmoothedCounterParams {
  double w = 0;
  double delta = 0;
  Int U = 0, L = 0;
  double sigma = 0;  // 1 + 1/log x
  double eta = 0.5;

  static SmoothedCounterParams make(double w, double delta, Int U, Int L, double x);
  void validate() const;
};

// Coefficients a_n of A(s) on [lo, lo + a.size() - 1].
struct AWeights {
  std::int64_t lo = 1;
  std::vector<double> a;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(a.size()) - 1; }
  double at(std::int64_t n) const;
  double A1() const;  // sum a_n / n
  DirichletPolynomial polynomial() const;
  AWeights scaled(double lambda) const;

  // Members of spec in [U - L, U + L], weighted by representation counts.
  static AWeights window(const SequenceSpec& spec, Int U, Int L);
  static AWeights empty(Int U, Int L);
  // a_n = #{(n1, n2) in [U - L, U + L]^2 : n1 n2 = n}; cached per (U, L).
  static AWeights convolution_square(Int U, Int L);
};

inline constexpr double kPhiBudget = 1e9;

// The finite double sum over n in the window and m >= 1 with b_m = 1.
double phi_direct(const SmoothedCounterParams& p, const AWeights& A);

// r_B w (e^delta - 1)^2 A(1).
double main_term(const SmoothedCounterParams& p, double A_at_1, double r_B = 1.0);

struct Prop1Report {
  double x = 0, delta = 0, epsilon = 0;
  double value = 0;
  std::vector<double> blocks;  // weighted block contributions, j = 0 .. j_max
  int j_max = 0;
  double t_cut = 0;            // 2^j_max / delta
  double panel_width = 0;
  double tail_fraction = 0;    // last block / total
};

struct Prop1Options {
  int j_max = -1;              // < 0: grow until the last block is < 1% of the sum
  double panel_width = 0.5;    // Gauss-Legendre panel width in t
  AnalyticOptions run{};
};

// x delta^2 sum_j (delta/2^j)^{2 - eps/4} int_{block j} |zeta(1/2+it) A(1/2+it)|^2 dt,
// block 0 = [0, 1/delta], block j = [2^{j-1}/delta, 2^j/delta].
Prop1Report prop1_rhs(double x, double delta, double epsilon, const AWeights& A, const Prop1Options& opt = {});

struct MomentReport {
  std::string kind;  // "I" or "J"
  double x = 0;
  double Delta = 0;  // I only
  double delta = 0;
  double epsilon = 0;
  Int U = 0, L = 0;
  double A1 = 0;
  double moment = 0;
  double moment_refined = 0;   // same integral with every panel split in two
  double grid_rel_change = 0;
  std::size_t pieces = 0;      // smooth pieces between kernel breakpoints
  std::size_t min_panels = 0;
  double bound = 0;
  double ratio = 0;            // moment / bound
  int j_max = 0;               // I only
  double t_cut = 0;            // I only
  double exceptional_measure = 0;  // measure of the w or y range where Phi vanishes
  double chebyshev_bound = 0;      // J only: J / main(x)^2

  void validate() const;
};

// I = int_{100 Delta}^{200 Delta} |Phi(x/c) - (x/c)(e^delta - 1)^2 A(1)|^2 dc, paired
// with prop1_rhs for the bound.
MomentReport second_moment_I(double x, double Delta, double delta, const AWeights& A, double epsilon = 0.1,
                             std::size_t min_panels = 64, const Prop1Options& rhs = {});

// J = int_x^{2x} |Phi(y) - y (e^delta - 1)^2 N(1)^2|^2 dy with A = N^2 on [U - L, U + L].
MomentReport second_moment_J(double x, double delta, Int U, Int L, double epsilon = 0.1,
                             std::size_t min_panels = 64);

struct Lemma1Report {
  Int U = 0, L = 0;
  double T = 0;
  double lhs = 0;    // int_1^T |zeta(1/2+it) A(1/2+it)|^2 dt
  double shape = 0;  // (TL/U) log^2(TU) + (T^{1/2} L^2/U) log(TU)
  double ratio = 0;
};

Lemma1Report lemma1_check(Int U, Int L, double T, const AnalyticOptions& opt = {});

struct LogIntegralReport {
  double u = 0, X = 0;
  double numeric = 0;
  double closed_form = 0;
  double bound = 0;  // log(1 + u) + log(1 + X)
  bool pass = false;
};

LogIntegralReport log_integral_check(double u, double X);

}  // namespace akp
