#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "akp/budget.hpp"
#include "akp/errors.hpp"

namespace akp::quad {

// Neumaier summation; the error term is carried separately and folded in on read.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    comp_ += std::abs(sum_) >= std::abs(v) ? (sum_ - t) + v : (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

class ComplexSum {
 public:
  void add(std::complex<double> v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_, im_;
};

inline constexpr unsigned kGaussPoints = 20;

// Fixed 20-point Gauss-Legendre rule on [a, b].
template <class F>
auto gauss_panel(F&& f, double a, double b) {
  using G = boost::math::quadrature::gauss<double, kGaussPoints>;
  const auto& x = G::abscissa();
  const auto& w = G::weights();
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  using R = decltype(f(mid));
  R s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
  return s * half;
}

inline double sum_ordered(const std::vector<double>& v) {
  CompensatedSum s;
  for (double x : v) s.add(x);
  return s.value();
}

inline std::complex<double> sum_ordered(const std::vector<std::complex<double>>& v) {
  ComplexSum s;
  for (auto x : v) s.add(x);
  return s.value();
}

// Composite Gauss-Legendre over `panels` equal panels. Panels may run on
// several threads; the reduction is always in panel order.
template <class F>
auto gauss_composite(F&& f, double a, double b, std::size_t panels, unsigned threads = 1,
                     const Deadline& deadline = {}) {
  using R = decltype(f(a));
  if (panels == 0) panels = 1;
  std::vector<R> part(panels);
  const double h = (b - a) / static_cast<double>(panels);
  parallel_for(panels, threads, [&](std::size_t i) {
    if ((i & 0x3FF) == 0) deadline.check("quadrature");
    const double lo = a + h * static_cast<double>(i);
    const double hi = i + 1 == panels ? b : lo + h;
    part[i] = gauss_panel(f, lo, hi);
  });
  return sum_ordered(part);
}

namespace detail {

template <class F>
double simpson_step(F& f, double a, double fa, double m, double fm, double b, double fb, double whole, double tol,
                    int depth, double& worst) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
  if (depth <= 0) {
    worst = std::max(worst, std::abs(diff) / 15.0);
    return left + right + diff / 15.0;
  }
  return simpson_step(f, a, fa, lm, flm, m, fm, left, tol / 2, depth - 1, worst) +
         simpson_step(f, m, fm, rm, frm, b, fb, right, tol / 2, depth - 1, worst);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction. Throws ConvergenceError when
// the recursion depth runs out before the tolerance is met.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double rel_tol = 1e-6, double abs_tol = 1e-14,
                        int max_depth = 48) {
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  // Coarse magnitude estimate sets the absolute target.
  const double scale = std::abs(gauss_panel(f, a, b));
  const double tol = std::max(abs_tol, rel_tol * scale);
  double worst = 0.0;
  const double v = detail::simpson_step(f, a, fa, m, fm, b, fb, whole, tol, max_depth, worst);
  if (worst > tol) throw ConvergenceError("adaptive Simpson did not converge", worst);
  return v;
}

}  // namespace akp::quad
