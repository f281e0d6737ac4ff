#include "akp/analytic/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "akp/analytic/quadrature.hpp"
#include "akp/errors.hpp"

namespace akp {

Complex DirichletPolynomial::at(std::int64_t n) const {
  if (n < n_lo || n > n_hi()) return {};
  return coeffs[static_cast<std::size_t>(n - n_lo)];
}

double DirichletPolynomial::norm2() const {
  quad::CompensatedSum s;
  for (const Complex& d : coeffs) s.add(std::norm(d));
  return s.value();
}

void DirichletPolynomial::validate() const {
  if (n_lo < 1) throw DomainError("Dirichlet polynomial support must start at n >= 1");
  if (coeffs.size() > kDirichletBudget) throw BudgetError("Dirichlet polynomial support exceeds 10^7 terms");
  for (const Complex& d : coeffs)
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag()))
      throw DomainError("Dirichlet polynomial coefficients must be finite");
}

DirichletPolynomial DirichletPolynomial::ones(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) throw DomainError("ones() needs 1 <= lo <= hi");
  return {lo, std::vector<Complex>(static_cast<std::size_t>(hi - lo + 1), Complex{1.0, 0.0})};
}

Complex eval_dirichlet(const DirichletPolynomial& p, Complex s) {
  if (p.size() > kDirichletBudget) throw BudgetError("Dirichlet polynomial support exceeds 10^7 terms");
  quad::ComplexSum sum;
  const double sigma = s.real(), t = s.imag();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex d = p.coeffs[i];
    if (d == Complex{}) continue;
    const double logn = std::log(static_cast<double>(p.n_lo + static_cast<std::int64_t>(i)));
    const double mag = std::exp(-sigma * logn);
    sum.add(d * Complex{mag * std::cos(t * logn), -mag * std::sin(t * logn)});
  }
  return sum.value();
}

Complex eval_on_imaginary_axis(const DirichletPolynomial& p, double t) { return eval_dirichlet(p, {0.0, t}); }

double oscillation_panel_width(const DirichletPolynomial& p) {
  const double omega = std::log(static_cast<double>(p.n_hi()) / static_cast<double>(p.n_lo));
  return omega > 0 ? std::min(4.0, 10.0 / omega) : 4.0;
}

namespace {

double abs2_integral(const DirichletPolynomial& p, double a, double b, const AnalyticOptions& opt) {
  const double width = oscillation_panel_width(p);
  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / width));
  const double work = static_cast<double>(panels) * quad::kGaussPoints * static_cast<double>(p.size());
  if (work > 4e10) {
    std::ostringstream os;
    os << "mean-value quadrature needs about " << work << " term evaluations";
    throw BudgetError(os.str());
  }
  return quad::gauss_composite([&](double t) { return std::norm(eval_on_imaginary_axis(p, t)); }, a, b, panels,
                               opt.threads, opt.deadline);
}

}  // namespace

MeanValueReport meanvalue_check(const DirichletPolynomial& p, double T, const AnalyticOptions& opt) {
  p.validate();
  if (!(T > 0)) throw DomainError("meanvalue_check needs T > 0");
  if (p.size() > 10'000) throw BudgetError("meanvalue_check is limited to supports of at most 10^4 terms");
  if (T > 1e6) throw BudgetError("meanvalue_check is limited to T <= 10^6");
  MeanValueReport r;
  r.T = T;
  r.N = p.n_hi();
  const double s2 = p.norm2();
  r.lhs = abs2_integral(p, 0.0, T, opt);
  r.diagonal = T * s2;
  r.reference = static_cast<double>(r.N) * s2;
  r.implied_constant = s2 > 0 ? std::abs(r.lhs - r.diagonal) / r.reference : 0.0;
  r.panels = static_cast<std::size_t>(std::ceil(T / oscillation_panel_width(p)));
  return r;
}

MajorantReport majorant_check(const DirichletPolynomial& p, const DirichletPolynomial& majorant, double T,
                              const AnalyticOptions& opt) {
  p.validate();
  majorant.validate();
  if (!(T > 0)) throw DomainError("majorant_check needs T > 0");
  if (p.n_lo != majorant.n_lo || p.size() != majorant.size())
    throw DomainError("majorant_check needs both polynomials on the same support");
  std::vector<std::int64_t> bad;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex D = majorant.coeffs[i];
    if (D.imag() != 0.0 || D.real() < 0.0 || std::abs(p.coeffs[i]) > D.real() * (1 + 1e-12))
      bad.push_back(p.n_lo + static_cast<std::int64_t>(i));
  }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "majorant condition |d_n| <= D_n fails at n =";
    for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 20); ++i) os << ' ' << bad[i];
    if (bad.size() > 20) os << " ... (" << bad.size() << " in total)";
    throw DomainError(os.str());
  }
  MajorantReport r;
  r.T = T;
  r.lhs = abs2_integral(p, -T, T, opt);
  r.rhs = abs2_integral(majorant, -T, T, opt);
  r.three_rhs = 3.0 * r.rhs;
  r.pass = r.lhs <= r.three_rhs;
  return r;
}

double meanvalue_closed_form(const DirichletPolynomial& p, double T) {
  quad::CompensatedSum s;
  std::vector<double> logs(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) logs[i] = std::log(static_cast<double>(p.n_lo + static_cast<std::int64_t>(i)));
  for (std::size_t m = 0; m < p.size(); ++m) {
    s.add(T * std::norm(p.coeffs[m]));
    for (std::size_t n = m + 1; n < p.size(); ++n) {
      // pair (m, n) and (n, m) together: 2 Re(d_m conj(d_n) (e^{i T lam} - 1)/(i lam))
      const double lam = logs[n] - logs[m];
      const Complex k = (std::exp(Complex{0.0, T * lam}) - 1.0) / Complex{0.0, lam};
      s.add(2.0 * (p.coeffs[m] * std::conj(p.coeffs[n]) * k).real());
    }
  }
  return s.value();
}

}  // namespace akp
