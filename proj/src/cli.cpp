#include "akp/cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "akp/errors.hpp"
#include "akp/io.hpp"

namespace akp::cli {

namespace {

const Int kInputLimit = Int{1} << 100;

Int parse_input_int(const std::string& text, const char* flag) {
  const Int v = parse_int(text);
  if (v > kInputLimit || v < -kInputLimit) throw OverflowError(std::string(flag) + " exceeds 2^100");
  return v;
}

std::pair<Rational, Rational> parse_pair(std::string_view body) {
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw DomainError("bounds need two comma-separated values");
  return {parse_rational(body.substr(0, comma)), parse_rational(body.substr(comma + 1))};
}

Bounds parse_bounds(const std::vector<std::string>& texts) {
  if (texts.empty()) return RelativeBounds{};
  if (texts.size() == 1 && texts[0].rfind("rel:", 0) == 0) {
    auto [c, C] = parse_pair(std::string_view(texts[0]).substr(4));
    return RelativeBounds{c, C};
  }
  AbsoluteBounds a;
  for (const auto& t : texts) {
    if (t.rfind("abs:", 0) != 0) throw DomainError("bounds must be abs:lo,hi (repeatable) or a single rel:c,C");
    const std::string_view body = std::string_view(t).substr(4);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw DomainError("bounds need two comma-separated values");
    a.ranges.emplace_back(parse_input_int(std::string(body.substr(0, comma)), "--bounds"),
                          parse_input_int(std::string(body.substr(comma + 1)), "--bounds"));
  }
  return a;
}

std::vector<SequenceSpec> parse_specs(const std::vector<std::string>& texts) {
  std::vector<SequenceSpec> out;
  for (const auto& t : texts) out.push_back(parse_sequence(t));
  if (out.empty()) out.push_back(SequenceSpec::all());
  return out;
}

struct Emitter {
  std::ostream& out;
  std::string format;

  template <class T>
  void json(const T& report) const {
    const Json j = report;
    if (format == "human") {
      for (auto it = j.begin(); it != j.end(); ++it)
        out << it.key() << ": " << (it->is_string() ? it->template get<std::string>() : it->dump()) << '\n';
    } else {
      out << j.dump(2) << '\n';
    }
  }

  template <class T>
  void flat(const T& report) const {
    if (format == "csv")
      write_csv(out, report);
    else
      json(report);
  }
};

void require_json(const std::string& format, const char* command) {
  if (format == "csv") throw CLI::ValidationError("--format", std::string("csv is not offered for ") + command);
}

LemmaSuiteReport lemma_suite(std::uint64_t seed, std::size_t samples, Int U, Int L, double T, const AnalyticOptions& opt) {
  LemmaSuiteReport r;
  r.seed = seed;
  r.instances = samples;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  r.majorant_all_pass = true;
  r.log_integral_all_pass = true;
  r.log_integral_max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const auto N = static_cast<std::int64_t>(5 + rng() % 196);
    DirichletPolynomial d, D;
    for (std::int64_t n = 0; n < N; ++n) {
      const double mag = unit(rng);
      D.coeffs.emplace_back(mag, 0.0);
      d.coeffs.push_back(std::polar(mag, 2 * std::numbers::pi * unit(rng)));
    }
    const double Tm = static_cast<double>(N) * std::array{0.5, 1.0, 10.0}[i % 3];
    r.meanvalue_max_constant = std::max(r.meanvalue_max_constant, meanvalue_check(d, Tm, opt).implied_constant);
    const auto m = majorant_check(d, D, Tm, opt);
    r.majorant_max_ratio = std::max(r.majorant_max_ratio, m.rhs > 0 ? m.lhs / m.rhs : 0.0);
    r.majorant_all_pass = r.majorant_all_pass && m.pass;

    const double X = 1.0 + 999.0 * unit(rng), u = 1.5 * X * unit(rng);
    const auto li = log_integral_check(u, X);
    r.log_integral_max_excess = std::max(r.log_integral_max_excess, li.numeric - li.bound);
    r.log_integral_all_pass = r.log_integral_all_pass && li.pass;

    const double delta = std::array{0.05, 0.2, 0.5}[i % 3];
    const double xi = std::exp((-2.5 + 3.0 * unit(rng)) * delta);
    r.kernel_max_error = std::max(r.kernel_max_error, kernel_mellin_check(xi, delta, 1.05, 20.0 / delta, MellinKernel::Tent, opt).error);
  }
  r.majorant_all_pass = r.majorant_all_pass && r.majorant_max_ratio <= 3.0;
  r.lemma1 = lemma1_check(U, L, T, opt);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost k-th powers in short intervals: scanners and analytic checks", "akp"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  unsigned threads = 1;
  double budget_seconds = 60;
  app.add_option("--format", format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget-seconds", budget_seconds, "wall-clock budget per command")->check(CLI::PositiveNumber);

  // Shared flag storage; each subcommand registers only the flags it reads.
  std::string x_text, H_text, theta_text, slack_text = "0", theorem_text, mode_text, eps_text = "1/10", kind_text = "I";
  std::string U_text, L_text;
  std::vector<std::string> bounds_text, seq_text;
  unsigned k = 2;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::string stride_text;
  double w = 0, delta = 0.1, Delta = 100, epsilon = 0.1, T = 100, x_real = 0;
  int jmax = -1;
  std::vector<double> ts;

  auto add_x = [&](CLI::App* s, const char* help) { s->add_option("--x", x_text, help)->required(); };
  auto add_k = [&](CLI::App* s) { s->add_option("--k", k, "number of factors")->check(CLI::Range(2u, 16u)); };
  auto add_bounds = [&](CLI::App* s) {
    s->add_option("--bounds", bounds_text, "abs:lo,hi (repeatable per position) or rel:c,C");
  };
  auto add_seq = [&](CLI::App* s) {
    s->add_option("--seq", seq_text, "all | primes | prodPP | list:<path> (repeatable per position)");
  };

  auto* find = app.add_subcommand("find", "smallest admissible product n >= x");
  add_x(find, "query point");
  add_k(find);
  add_bounds(find);
  add_seq(find);

  auto* scan = app.add_subcommand("scan", "all admissible products in [x, x + H] or [x, x + ceil(x^theta)]");
  add_x(scan, "window start");
  auto* scan_len = scan->add_option_group("length");
  scan_len->add_option("--theta", theta_text, "window exponent p/q");
  scan_len->add_option("--H", H_text, "window length");
  scan_len->require_option(1);
  add_k(scan);
  add_bounds(scan);
  add_seq(scan);

  auto* gaps = app.add_subcommand("gaps", "largest gaps between admissible products in [x, x + H]");
  add_x(gaps, "range start");
  gaps->add_option("--H", H_text, "range length")->required();
  gaps->add_option("--stride", stride_text, "report the largest gap in each stride (default H/10)");
  add_k(gaps);
  add_bounds(gaps);
  add_seq(gaps);

  auto* verify = app.add_subcommand("verify", "check one x against an interval theorem");
  add_x(verify, "query point");
  verify->add_option("--theorem", theorem_text, "T1, T2, T3 or T4")->required();
  verify->add_option("--slack", slack_text, "added to the window exponent, p/q");
  verify->add_option("--seed", seed, "accepted for reproducible scripts; verify is deterministic");

  auto* fraction = app.add_subcommand("fraction", "almost-all probe on [X, 2X]");
  add_x(fraction, "X");
  fraction->add_option("--theorem", theorem_text, "T3 or T4")->default_str("T3");
  fraction->add_option("--theta", theta_text, "window exponent p/q (default per theorem)");
  fraction->add_option("--samples", samples, "number of sample points");
  fraction->add_option("--seed", seed, "sampling seed");

  auto* phi = app.add_subcommand("phi", "smoothed counter and its main term at one w");
  phi->add_option("--w", w, "evaluation point")->required();
  phi->add_option("--delta", delta, "kernel width in (0, 1)");
  phi->add_option("--U", U_text, "window centre")->required();
  phi->add_option("--L", L_text, "window half-width")->required();
  phi->add_option("--x", x_real, "scale fixing sigma = 1 + 1/log x (default w)");
  add_seq(phi);

  auto* moment = app.add_subcommand("moment", "second moment I (with its dyadic bound) or J");
  moment->add_option("--kind", kind_text, "I or J")->check(CLI::IsMember({"I", "J"}));
  add_x(moment, "x");
  moment->add_option("--Delta", Delta, "I only: c ranges over [100 Delta, 200 Delta]");
  moment->add_option("--delta", delta, "kernel width in (0, 1)");
  moment->add_option("--U", U_text, "window centre")->required();
  moment->add_option("--L", L_text, "window half-width")->required();
  moment->add_option("--epsilon", epsilon, "epsilon in the bound shapes");
  moment->add_option("--jmax", jmax, "I only: last dyadic block (default: until the tail is < 1%)");
  add_seq(moment);

  auto* exponents = app.add_subcommand("exponents", "exact exponent optimization");
  exponents->add_option("--mode", mode_text, "T1, T2, T3 or T4")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(1/2 + it) on a list of t");
  zeta_cmd->add_option("--t", ts, "ordinate (repeatable)");

  auto* density = app.add_subcommand("density", "members of a sequence in [X, 2X]");
  add_x(density, "X");
  density->add_option("--epsilon", eps_text, "density exponent p/q in (0, 1)");
  add_seq(density);

  auto* lemmas = app.add_subcommand("check-lemmas", "randomized mean-value, majorant, log-integral and kernel checks");
  lemmas->add_option("--seed", seed, "suite seed");
  lemmas->add_option("--samples", samples, "random instances per check")->default_val(20);
  lemmas->add_option("--U", U_text, "second-moment lemma window centre (default 100)");
  lemmas->add_option("--L", L_text, "second-moment lemma half-width (default 50)");
  lemmas->add_option("--T", T, "second-moment lemma height");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    const Emitter emit{out, format};
    ScanOptions sopt;
    sopt.threads = threads;
    sopt.deadline = Deadline::after(budget_seconds);
    AnalyticOptions aopt{threads, sopt.deadline};

    if (find->parsed()) {
      require_json(format, "find");
      emit.json(find_first(parse_input_int(x_text, "--x"), k, parse_bounds(bounds_text), parse_specs(seq_text), sopt));
    } else if (scan->parsed()) {
      WindowQuery q;
      q.x = parse_input_int(x_text, "--x");
      if (!theta_text.empty())
        q.length = parse_rational(theta_text);
      else
        q.length = parse_input_int(H_text, "--H");
      q.k = k;
      q.bounds = parse_bounds(bounds_text);
      q.specs = parse_specs(seq_text);
      emit.flat(enumerate_products(q, sopt));
    } else if (gaps->parsed()) {
      const Int lo = parse_input_int(x_text, "--x"), H = parse_input_int(H_text, "--H");
      const Int stride = stride_text.empty() ? std::max<Int>(1, H / 10) : parse_input_int(stride_text, "--stride");
      emit.flat(gap_scan(lo, lo + H, k, parse_bounds(bounds_text), parse_specs(seq_text), stride, sopt));
    } else if (verify->parsed()) {
      require_json(format, "verify");
      emit.json(verify_interval_theorem(parse_input_int(x_text, "--x"), parse_theorem(theorem_text),
                                        parse_rational(slack_text), sopt));
    } else if (fraction->parsed()) {
      std::optional<Rational> theta;
      if (!theta_text.empty()) theta = parse_rational(theta_text);
      emit.flat(almost_all_fraction(parse_input_int(x_text, "--x"), parse_theorem(theorem_text.empty() ? "T3" : theorem_text),
                                    theta, samples, seed, sopt));
    } else if (phi->parsed()) {
      require_json(format, "phi");
      const Int U = parse_input_int(U_text, "--U"), L = parse_input_int(L_text, "--L");
      const auto specs = parse_specs(seq_text);
      PhiReport r;
      r.sequence = specs.front().label;
      r.x = x_real > 0 ? x_real : w;
      r.params = SmoothedCounterParams::make(w, delta, U, L, r.x);
      const AWeights A = AWeights::window(specs.front(), U, L);
      r.A1 = A.A1();
      r.phi = phi_direct(r.params, A);
      r.main = main_term(r.params, r.A1);
      r.ratio = r.main > 0 ? r.phi / r.main : 0.0;
      emit.json(r);
    } else if (moment->parsed()) {
      require_json(format, "moment");
      const double x = static_cast<double>(parse_input_int(x_text, "--x"));
      const Int U = parse_input_int(U_text, "--U"), L = parse_input_int(L_text, "--L");
      if (kind_text == "J") {
        emit.json(second_moment_J(x, delta, U, L, epsilon));
      } else {
        Prop1Options po;
        po.j_max = jmax;
        po.run = aopt;
        const AWeights A = AWeights::window(parse_specs(seq_text).front(), U, L);
        MomentReport r = second_moment_I(x, Delta, delta, A, epsilon, 64, po);
        r.U = U;
        r.L = L;
        emit.json(r);
      }
    } else if (exponents->parsed()) {
      require_json(format, "exponents");
      emit.json(exponent_optimizer(parse_exponent_mode(mode_text)));
    } else if (zeta_cmd->parsed()) {
      if (ts.empty()) ts.push_back(0.0);
      ZetaReport r;
      for (double t : ts) {
        const Complex z = zeta_critical(t);
        r.points.push_back({t, z.real(), z.imag(), std::hypot(z.real(), z.imag())});
      }
      r.envelope = bourgain_envelope(ts);
      emit.flat(r);
    } else if (density->parsed()) {
      require_json(format, "density");
      emit.json(density_check(parse_specs(seq_text).front(), parse_input_int(x_text, "--x"), parse_rational(eps_text)));
    } else if (lemmas->parsed()) {
      require_json(format, "check-lemmas");
      const Int U = U_text.empty() ? 100 : parse_input_int(U_text, "--U");
      const Int L = L_text.empty() ? 50 : parse_input_int(L_text, "--L");
      emit.json(lemma_suite(seed, samples, U, L, T, aopt));
    }
    return kExitOk;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace akp::cli
