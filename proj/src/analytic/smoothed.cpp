#include "akp/analytic/smoothed.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "akp/analytic/quadrature.hpp"
#include "akp/analytic/zeta.hpp"
#include "akp/errors.hpp"

namespace akp {

double kernel_weight(double xi, double delta) {
  if (!(xi > 0) || !(delta > 0)) return 0.0;
  const double lx = std::log(xi);
  if (lx > 0.0 || lx < -2.0 * delta) return 0.0;
  return std::max(0.0, std::min(lx + 2.0 * delta, -lx));
}

namespace {

constexpr double kPi = std::numbers::pi;

// int_T^inf e^{i lam t} (sigma + i t)^{-2} dt.
Complex tail_integral(double lam, double sigma, double T) {
  const Complex z0{sigma, T};
  if (lam == 0.0) return Complex{0.0, -1.0} / z0;
  // Direct quadrature on a log scale until the oscillation is fast enough for
  // the integration-by-parts series.
  const double T1 = std::max(T, 40.0 / std::abs(lam));
  Complex head{};
  if (T1 > T) {
    const double span = std::log(T1 / T);
    auto f = [&](double u) {
      const double t = T * std::exp(u);
      const Complex z{sigma, t};
      return std::exp(Complex{0.0, lam * t}) / (z * z) * t;
    };
    head = quad::gauss_composite(f, 0.0, span, 400);
  }
  // -e^{i lam T1} sum_k (k+1)! i^k (sigma + i T1)^{-2-k} / (i lam)^{k+1}
  const Complex z1{sigma, T1};
  const Complex ilam{0.0, lam};
  Complex term = 1.0 / (z1 * z1 * ilam);
  Complex series{};
  double prev = std::abs(term) * 2;
  for (int k = 0; k < 200; ++k) {
    const double mag = std::abs(term);
    if (mag > prev || mag < 1e-20 * std::abs(series)) break;
    series += term;
    prev = mag;
    term *= static_cast<double>(k + 2) * Complex{0.0, 1.0} / (z1 * ilam);
  }
  return head - std::exp(Complex{0.0, lam * T1}) * series;
}

}  // namespace

MellinCheck kernel_mellin_check(double xi, double delta, double sigma, double T_cut, MellinKernel kernel,
                                const AnalyticOptions& opt) {
  if (!(xi > 0)) throw DomainError("kernel_mellin_check needs xi > 0");
  if (!(sigma > 0)) throw DomainError("kernel_mellin_check needs sigma > 0");
  if (kernel == MellinKernel::Tent && !(delta > 0 && delta < 1))
    throw DomainError("kernel_mellin_check needs 0 < delta < 1");
  if (kernel == MellinKernel::Tent && T_cut < 10.0 / delta) throw DomainError("kernel_mellin_check needs T_cut >= 10/delta");
  if (!(T_cut > 0)) throw DomainError("kernel_mellin_check needs T_cut > 0");

  // The integrand as a sum of c_k xi_k^s / s^2.
  std::vector<std::pair<double, double>> parts;  // (coefficient, log xi_k)
  const double lx = std::log(xi);
  if (kernel == MellinKernel::Simple) {
    parts = {{1.0, lx}};
  } else {
    parts = {{1.0, lx + 2 * delta}, {-2.0, lx + delta}, {1.0, lx}};
  }
  double omega = 0.0;
  for (auto [c, l] : parts) omega = std::max(omega, std::abs(l));

  auto integrand = [&](double t) {
    const Complex s{sigma, t};
    Complex v;
    if (kernel == MellinKernel::Simple) {
      v = std::exp(s * lx) / (s * s);
    } else {
      const Complex e = std::exp(delta * s) - 1.0;
      v = std::exp(s * lx) * e * e / (s * s);
    }
    return v.real();
  };

  MellinCheck r;
  r.kernel = kernel;
  r.xi = xi;
  r.delta = delta;
  r.sigma = sigma;
  r.T_cut = T_cut;
  const double width = omega > 0 ? std::min(0.5, 4.0 / omega) : 0.5;
  r.panels = static_cast<std::size_t>(std::ceil(T_cut / width));
  // (1/2pi) int_{-T}^{T} = (1/pi) Re int_0^T by conjugate symmetry.
  const double coarse = quad::gauss_composite(integrand, 0.0, T_cut, r.panels, opt.threads, opt.deadline) / kPi;
  const double fine = quad::gauss_composite(integrand, 0.0, T_cut, 2 * r.panels, opt.threads, opt.deadline) / kPi;
  if (std::abs(fine - coarse) > 1e-9) throw ConvergenceError("kernel quadrature unstable under panel doubling", std::abs(fine - coarse));
  r.truncated = fine;
  for (auto [c, l] : parts) r.tail += c * (std::exp(sigma * l) * tail_integral(l, sigma, T_cut)).real() / kPi;
  r.quadrature = r.truncated + r.tail;
  r.closed_form = kernel == MellinKernel::Simple ? std::max(0.0, lx) : kernel_weight(xi, delta);
  r.error = std::abs(r.quadrature - r.closed_form);
  return r;
}

SmoothedCounterParams SmoothedCounterParams::make(double w, double delta, Int U, Int L, double x) {
  if (!(x > 1)) throw DomainError("sigma = 1 + 1/log x needs x > 1");
  SmoothedCounterParams p{w, delta, U, L, 1.0 + 1.0 / std::log(x), 0.5};
  p.validate();
  return p;
}

void SmoothedCounterParams::validate() const {
  if (!(w > 0) || !std::isfinite(w)) throw DomainError("w must be a positive real");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (L < 1 || 2 * L > U) throw DomainError("need 1 <= L <= U/2");
}

double AWeights::at(std::int64_t n) const {
  if (n < lo || n > hi()) return 0.0;
  return a[static_cast<std::size_t>(n - lo)];
}

double AWeights::A1() const {
  quad::CompensatedSum s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0.0) s.add(a[i] / static_cast<double>(lo + static_cast<std::int64_t>(i)));
  return s.value();
}

DirichletPolynomial AWeights::polynomial() const {
  DirichletPolynomial p;
  p.n_lo = lo;
  p.coeffs.reserve(a.size());
  for (double v : a) p.coeffs.emplace_back(v, 0.0);
  return p;
}

AWeights AWeights::scaled(double lambda) const {
  AWeights out = *this;
  for (double& v : out.a) v *= lambda;
  return out;
}

namespace {

void check_window(Int U, Int L) {
  if (L < 1 || 2 * L > U) throw DomainError("need 1 <= L <= U/2");
  if (U + L > Int{4'000'000'000'000'000}) throw OverflowError("window [U - L, U + L] too large");
}

}  // namespace

AWeights AWeights::window(const SequenceSpec& spec, Int U, Int L) {
  check_window(U, L);
  if (2 * L + 1 > Int{100'000'000}) throw BudgetError("A-window wider than 10^8");
  AWeights w = empty(U, L);
  for (const Member& m : collect_members(spec, U - L, U + L))
    w.a[static_cast<std::size_t>(m.value - (U - L))] = static_cast<double>(m.weight);
  return w;
}

AWeights AWeights::empty(Int U, Int L) {
  check_window(U, L);
  AWeights w;
  w.lo = static_cast<std::int64_t>(U - L);
  w.a.assign(static_cast<std::size_t>(2 * L + 1), 0.0);
  return w;
}

AWeights AWeights::convolution_square(Int U, Int L) {
  check_window(U, L);
  static std::mutex mu;
  static std::map<std::pair<Int, Int>, std::shared_ptr<const AWeights>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find({U, L}); it != cache.end()) return *it->second;
  }
  const Int lo = (U - L) * (U - L), hi = (U + L) * (U + L);
  if (hi - lo + 1 > Int{50'000'000}) throw BudgetError("convolution-square support exceeds 5*10^7");
  auto w = std::make_shared<AWeights>();
  w->lo = static_cast<std::int64_t>(lo);
  w->a.assign(static_cast<std::size_t>(hi - lo + 1), 0.0);
  for (Int n1 = U - L; n1 <= U + L; ++n1)
    for (Int n2 = U - L; n2 <= U + L; ++n2) w->a[static_cast<std::size_t>(n1 * n2 - lo)] += 1.0;
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::pair{U, L}, w);
  return *w;
}

double phi_direct(const SmoothedCounterParams& p, const AWeights& A) {
  p.validate();
  const double top = p.w * std::exp(2 * p.delta);
  if (top / static_cast<double>(std::max<std::int64_t>(A.lo, 1)) > kPhiBudget)
    throw BudgetError("phi_direct: m-loop exceeds 10^9 iterations");
  quad::CompensatedSum sum;
  for (std::int64_t n = A.lo; n <= A.hi(); ++n) {
    const double an = A.at(n);
    if (an == 0.0) continue;
    const double nd = static_cast<double>(n);
    const auto m_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(p.w / nd)));
    const auto m_hi = static_cast<std::int64_t>(std::ceil(top / nd));
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      const double k = kernel_weight(p.w / (static_cast<double>(m) * nd), p.delta);
      if (k > 0) sum.add(an * k);
    }
  }
  return sum.value();
}

double main_term(const SmoothedCounterParams& p, double A_at_1, double r_B) {
  const double e = std::expm1(p.delta);
  return r_B * p.w * e * e * A_at_1;
}

namespace {

struct Event {
  double pos;
  double d_alpha;
  double d_beta;
  int d_active;
};

struct SweepResult {
  double value = 0, refined = 0, zero_measure = 0;
  std::size_t pieces = 0;
};

// int_{w_lo}^{w_hi} (Phi(w) - K w)^2 rho(w) dw. Between consecutive kernel
// breakpoints Phi(w) = alpha log w + beta exactly, so each smooth piece is
// integrated by Gauss-Legendre.
SweepResult deviation_moment(const AWeights& A, double delta, double w_lo, double w_hi, double K,
                             const std::function<double(double)>& rho, std::size_t min_panels,
                             const Deadline& deadline) {
  std::vector<Event> ev;
  const double e1 = std::exp(-delta), e2 = std::exp(-2 * delta);
  double pairs = 0;
  for (std::int64_t n = A.lo; n <= A.hi(); ++n)
    if (A.at(n) != 0.0) pairs += (w_hi / e2 - w_lo) / static_cast<double>(n) + 2;
  if (pairs > 3e7) throw BudgetError("second moment sweep needs more than 3*10^7 (m, n) pairs");
  ev.reserve(static_cast<std::size_t>(3 * pairs));
  for (std::int64_t n = A.lo; n <= A.hi(); ++n) {
    const double a = A.at(n);
    if (a == 0.0) continue;
    const double nd = static_cast<double>(n);
    const auto m_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(w_lo / nd)));
    const auto m_hi = static_cast<std::int64_t>(std::ceil(w_hi / e2 / nd));
    for (std::int64_t m = m_lo; m <= m_hi; ++m) {
      const double mn = static_cast<double>(m) * nd;
      if (mn <= w_lo || mn * e2 >= w_hi) continue;
      const double L = std::log(mn);
      ev.push_back({mn * e2, a, a * (2 * delta - L), 1});
      ev.push_back({mn * e1, -2 * a, a * (2 * L - 2 * delta), 0});
      ev.push_back({mn, a, -a * L, -1});
    }
  }
  std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.pos < y.pos; });

  quad::CompensatedSum alpha, beta, total, total_fine, zero;
  long long active = 0;
  auto f = [&](double w, double al, double be) {
    const double d = al * std::log(w) + be - K * w;
    return d * d * rho(w);
  };
  const double max_len = (w_hi - w_lo) / static_cast<double>(std::max<std::size_t>(min_panels, 1));
  SweepResult r;
  auto piece = [&](double a, double b) {
    if (!(b > a)) return;
    ++r.pieces;
    const double al = alpha.value(), be = beta.value();
    auto g = [&](double w) { return f(w, al, be); };
    const auto panels = static_cast<std::size_t>(std::ceil((b - a) / max_len));
    total.add(quad::gauss_composite(g, a, b, panels));
    total_fine.add(quad::gauss_composite(g, a, b, 2 * panels));
    if (active == 0) zero.add(quad::gauss_composite(rho, a, b, panels));
  };
  std::size_t i = 0;
  for (; i < ev.size() && ev[i].pos <= w_lo; ++i) {
    alpha.add(ev[i].d_alpha);
    beta.add(ev[i].d_beta);
    active += ev[i].d_active;
  }
  double cur = w_lo;
  while (i < ev.size() && ev[i].pos < w_hi) {
    if ((r.pieces & 0xFFFF) == 0) deadline.check("second moment sweep");
    const double pos = ev[i].pos;
    piece(cur, pos);
    for (; i < ev.size() && ev[i].pos == pos; ++i) {
      alpha.add(ev[i].d_alpha);
      beta.add(ev[i].d_beta);
      active += ev[i].d_active;
    }
    cur = pos;
  }
  piece(cur, w_hi);
  r.value = total.value();
  r.refined = total_fine.value();
  r.zero_measure = zero.value();
  return r;
}

void fill_sweep(MomentReport& r, const SweepResult& s, std::size_t min_panels) {
  r.moment = s.value;
  r.moment_refined = s.refined;
  r.grid_rel_change = s.refined != 0 ? std::abs(s.refined - s.value) / std::abs(s.refined) : 0.0;
  r.pieces = s.pieces;
  r.min_panels = min_panels;
  r.exceptional_measure = s.zero_measure;
}

double block_integral(const DirichletPolynomial& P, double a, double b, const Prop1Options& opt) {
  const auto panels = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / opt.panel_width)));
  auto f = [&](double t) { return std::norm(zeta_critical(t) * eval_dirichlet(P, {0.5, t})); };
  return quad::gauss_composite(f, a, b, panels, opt.run.threads, opt.run.deadline);
}

}  // namespace

Prop1Report prop1_rhs(double x, double delta, double epsilon, const AWeights& A, const Prop1Options& opt) {
  if (!(x > 0)) throw DomainError("prop1_rhs needs x > 0");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (!(epsilon >= 0 && epsilon < 8)) throw DomainError("epsilon must lie in [0, 8)");
  if (!(opt.panel_width > 0)) throw DomainError("panel width must be positive");
  Prop1Report r;
  r.x = x;
  r.delta = delta;
  r.epsilon = epsilon;
  r.panel_width = opt.panel_width;
  const DirichletPolynomial P = A.polynomial();
  const bool zero = std::all_of(A.a.begin(), A.a.end(), [](double v) { return v == 0.0; });
  const double expo = 2.0 - epsilon / 4.0;
  quad::CompensatedSum sum;
  const int cap = opt.j_max >= 0 ? opt.j_max : 40;
  for (int j = 0; j <= cap; ++j) {
    const double a = j == 0 ? 0.0 : std::ldexp(1.0, j - 1) / delta;
    const double b = std::ldexp(1.0, j) / delta;
    if (b > kZetaMaxT) throw BudgetError("prop1_rhs: dyadic blocks pass the zeta budget |t| <= 10^7");
    const double weight = x * delta * delta * std::pow(delta / std::ldexp(1.0, j), expo);
    const double block = zero ? 0.0 : weight * block_integral(P, a, b, opt);
    r.blocks.push_back(block);
    sum.add(block);
    r.j_max = j;
    r.t_cut = b;
    if (zero) break;
    if (opt.j_max < 0 && j >= 1 && block < 0.01 * sum.value()) break;
    if (opt.j_max < 0 && j == cap) throw ConvergenceError("prop1_rhs: dyadic tail still above 1% at j = 40", block / sum.value());
  }
  r.value = sum.value();
  r.tail_fraction = r.value > 0 ? r.blocks.back() / r.value : 0.0;
  return r;
}

void MomentReport::validate() const {
  if (kind != "I" && kind != "J") throw DomainError("moment kind must be I or J");
  for (double v : {moment, moment_refined, bound})
    if (!(v >= 0) || !std::isfinite(v)) throw DomainError("moment and bound must be finite and non-negative");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
}

MomentReport second_moment_I(double x, double Delta, double delta, const AWeights& A, double epsilon,
                             std::size_t min_panels, const Prop1Options& rhs) {
  if (!(x > 0) || !(Delta > 0)) throw DomainError("second_moment_I needs x > 0 and Delta > 0");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (x > 1e8 || Delta > 1e3) throw BudgetError("second_moment_I is limited to x <= 10^8 and Delta <= 10^3");
  MomentReport r;
  r.kind = "I";
  r.x = x;
  r.Delta = Delta;
  r.delta = delta;
  r.epsilon = epsilon;
  r.A1 = A.A1();
  const double e = std::expm1(delta);
  const double K = e * e * r.A1;
  // c in [100 Delta, 200 Delta] becomes w = x/c with dc = x/w^2 dw.
  const double w_lo = x / (200 * Delta), w_hi = x / (100 * Delta);
  const SweepResult s = deviation_moment(A, delta, w_lo, w_hi, K, [x](double w) { return x / (w * w); }, min_panels,
                                         rhs.run.deadline);
  fill_sweep(r, s, min_panels);
  const Prop1Report p = prop1_rhs(x, delta, epsilon, A, rhs);
  r.bound = p.value;
  r.j_max = p.j_max;
  r.t_cut = p.t_cut;
  r.ratio = r.bound > 0 ? r.moment / r.bound : 0.0;
  return r;
}

MomentReport second_moment_J(double x, double delta, Int U, Int L, double epsilon, std::size_t min_panels) {
  if (!(x > 1)) throw DomainError("second_moment_J needs x > 1");
  if (!(delta > 0 && delta < 1)) throw DomainError("delta must lie in (0, 1)");
  if (x > 1e8) throw BudgetError("second_moment_J is limited to x <= 10^8");
  MomentReport r;
  r.kind = "J";
  r.x = x;
  r.delta = delta;
  r.epsilon = epsilon;
  r.U = U;
  r.L = L;
  const AWeights A = AWeights::convolution_square(U, L);
  r.A1 = A.A1();
  const double e = std::expm1(delta);
  const double K = e * e * r.A1;
  const SweepResult s = deviation_moment(A, delta, x, 2 * x, K, [](double) { return 1.0; }, min_panels, {});
  fill_sweep(r, s, min_panels);
  r.bound = std::pow(x, 2 + epsilon / 8) * std::pow(delta, 113.0 / 42 - epsilon / 3) +
            std::pow(x, 8.0 / 3 + epsilon / 8) * std::pow(delta, 155.0 / 42 - epsilon / 3);
  r.ratio = r.moment / r.bound;
  const double main_at_x = x * K;
  r.chebyshev_bound = main_at_x > 0 ? r.moment / (main_at_x * main_at_x) : 0.0;
  return r;
}

Lemma1Report lemma1_check(Int U, Int L, double T, const AnalyticOptions& opt) {
  if (!(L * L > U && 2 * L <= U)) throw DomainError("lemma1_check needs sqrt(U) < L <= U/2");
  if (!(T >= 1)) throw DomainError("lemma1_check needs T >= 1");
  if (T > 1e6) throw BudgetError("lemma1_check is limited to T <= 10^6");
  Lemma1Report r;
  r.U = U;
  r.L = L;
  r.T = T;
  const DirichletPolynomial P = DirichletPolynomial::ones(static_cast<std::int64_t>(U - L), static_cast<std::int64_t>(U + L));
  Prop1Options po;
  po.run = opt;
  r.lhs = block_integral(P, 1.0, T, po);
  const double u = static_cast<double>(U), l = static_cast<double>(L), lg = std::log(T * u);
  r.shape = T * l / u * lg * lg + std::sqrt(T) * l * l / u * lg;
  r.ratio = r.lhs / r.shape;
  return r;
}

LogIntegralReport log_integral_check(double u, double X) {
  if (!(u >= 0)) throw DomainError("log_integral_check needs u >= 0");
  if (!(X >= 1)) throw DomainError("log_integral_check needs X >= 1");
  LogIntegralReport r;
  r.u = u;
  r.X = X;
  auto f = [u](double v) { return 1.0 / (1.0 + std::abs(v - u)); };
  const double k = std::min(u, X);
  r.numeric = (k > 0 ? quad::adaptive_simpson(f, 0.0, k, 1e-13) : 0.0) + (X > k ? quad::adaptive_simpson(f, k, X, 1e-13) : 0.0);
  r.closed_form = u <= X ? std::log1p(u) + std::log1p(X - u) : std::log1p(u) - std::log1p(u - X);
  r.bound = std::log1p(u) + std::log1p(X);
  r.pass = r.numeric <= r.bound + 1e-9;
  return r;
}

}  // namespace akp
