#include "akp/analytic/zeta.hpp"

#include <cmath>

#include "akp/analytic/quadrature.hpp"
#include "akp/errors.hpp"

namespace akp {

namespace {

// B_2, B_4, B_6, B_8 divided by (2k)!.
constexpr double kBernoulliOverFactorial[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};

}  // namespace

Complex zeta(Complex s) {
  const double t = s.imag();
  if (!(std::abs(t) <= kZetaMaxT)) throw BudgetError("zeta evaluation is limited to |t| <= 10^7");
  if (s.real() <= -1.0) throw DomainError("zeta evaluation needs Re s > -1");
  if (s == Complex{1.0, 0.0}) throw DomainError("zeta has a pole at s = 1");

  const auto N = static_cast<std::int64_t>(std::ceil(3.0 * (std::abs(t) + 10.0)));
  quad::ComplexSum sum;
  const double sigma = s.real();
  for (std::int64_t n = 1; n < N; ++n) {
    const double logn = std::log(static_cast<double>(n));
    const double mag = std::exp(-sigma * logn);
    sum.add({mag * std::cos(t * logn), -mag * std::sin(t * logn)});
  }
  const double logN = std::log(static_cast<double>(N));
  const Complex Ns = std::exp(-s * logN);  // N^{-s}
  const double Nd = static_cast<double>(N);
  sum.add(Ns * Nd / (s - 1.0));
  sum.add(0.5 * Ns);
  // s (s+1) ... (s + 2k - 2) N^{-s-2k+1}
  Complex rising = s;
  Complex power = Ns / Nd;
  for (int k = 0; k < 4; ++k) {
    sum.add(kBernoulliOverFactorial[k] * rising * power);
    rising *= (s + static_cast<double>(2 * k + 1)) * (s + static_cast<double>(2 * k + 2));
    power /= Nd * Nd;
  }
  return sum.value();
}

Complex zeta_critical(double t) { return zeta({0.5, t}); }

double bourgain_envelope(const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw DomainError("bourgain_envelope: empty input grid");
  double best = 0.0;
  for (double t : t_grid) best = std::max(best, std::abs(zeta_critical(t)) / std::pow(1.0 + std::abs(t), 13.0 / 84.0));
  return best;
}

}  // namespace akp
