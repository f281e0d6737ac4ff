#include "akp/io.hpp"

#include <cmath>
#include <ostream>

#include "akp/errors.hpp"

namespace akp {

namespace {

double num(const Json& j, const char* key) { return j.at(key).get<double>(); }

template <class T>
T get(const Json& j, const char* key) {
  return j.at(key).get<T>();
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError("report invariant violated: " + what);
}

Json ints(const std::vector<Int>& v) {
  Json a = Json::array();
  for (Int x : v) a.push_back(int_json(x));
  return a;
}

std::vector<Int> ints_from(const Json& j) {
  std::vector<Int> v;
  for (const Json& e : j) v.push_back(int_from_json(e));
  return v;
}

}  // namespace

Json int_json(Int v) { return to_string(v); }

Int int_from_json(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return j.get<std::int64_t>();
  throw DomainError("expected an integer or decimal string");
}

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw DomainError("expected a rational string p/q");
  return parse_rational(j.get<std::string>());
}

// --- scanner -----------------------------------------------------------------

void to_json(Json& j, const Factorization& v) {
  j = Json{{"value", int_json(v.value)}, {"factors", ints(v.factors)}, {"query", int_json(v.query)},
           {"offset", int_json(v.offset)}};
}

void from_json(const Json& j, Factorization& v) {
  v.value = int_from_json(j.at("value"));
  v.factors = ints_from(j.at("factors"));
  v.query = int_from_json(j.at("query"));
  v.offset = int_from_json(j.at("offset"));
}

void to_json(Json& j, const WindowQuery& v) {
  j = Json::object();
  j["x"] = int_json(v.x);
  if (const auto* t = std::get_if<Rational>(&v.length))
    j["theta"] = rational_json(*t);
  else
    j["H"] = int_json(std::get<Int>(v.length));
  j["window"] = int_json(v.window_length());
  j["k"] = v.k;
  if (const auto* a = std::get_if<AbsoluteBounds>(&v.bounds)) {
    Json r = Json::array();
    for (auto [lo, hi] : a->ranges) r.push_back(Json::array({int_json(lo), int_json(hi)}));
    j["bounds"] = Json{{"mode", "abs"}, {"ranges", r}};
  } else {
    const auto& rel = std::get<RelativeBounds>(v.bounds);
    j["bounds"] = Json{{"mode", "rel"}, {"lower", rational_json(rel.lower)}, {"upper", rational_json(rel.upper)}};
  }
  Json s = Json::array();
  for (const auto& spec : v.specs) s.push_back(spec.label);
  j["sequences"] = s;
}

void from_json(const Json& j, WindowQuery& v) {
  v.x = int_from_json(j.at("x"));
  if (j.contains("theta"))
    v.length = rational_from_json(j.at("theta"));
  else
    v.length = int_from_json(j.at("H"));
  v.k = get<unsigned>(j, "k");
  const Json& b = j.at("bounds");
  if (b.at("mode") == "abs") {
    AbsoluteBounds a;
    for (const Json& r : b.at("ranges")) a.ranges.emplace_back(int_from_json(r.at(0)), int_from_json(r.at(1)));
    v.bounds = a;
  } else {
    v.bounds = RelativeBounds{rational_from_json(b.at("lower")), rational_from_json(b.at("upper"))};
  }
  v.specs.clear();
  for (const Json& s : j.at("sequences")) v.specs.push_back(parse_sequence(s.get<std::string>()));
  v.validate();
  if (j.contains("window")) require(int_from_json(j.at("window")) == v.window_length(), "window length");
}

void to_json(Json& j, const ScanReport& v) {
  j = Json{{"query", v.query},
           {"witness_count", int_json(v.witness_count)},
           {"max_internal_gap", int_json(v.max_internal_gap)},
           {"hits", v.hits}};
}

void from_json(const Json& j, ScanReport& v) {
  v.query = j.at("query").get<WindowQuery>();
  v.witness_count = int_from_json(j.at("witness_count"));
  v.max_internal_gap = int_from_json(j.at("max_internal_gap"));
  v.hits = j.at("hits").get<std::vector<Factorization>>();
}

void check_report(const ScanReport& r) {
  r.query.validate();
  require(r.witness_count == static_cast<Int>(r.hits.size()), "witness_count equals the number of hits");
  const Int hi = r.query.x + r.query.window_length();
  for (std::size_t i = 0; i < r.hits.size(); ++i) {
    r.hits[i].validate();
    require(r.hits[i].factors.size() == r.query.k, "k factors per hit");
    require(r.hits[i].value >= r.query.x && r.hits[i].value <= hi, "hit inside the window");
    if (i) require(r.hits[i - 1].value < r.hits[i].value, "hits strictly ascending");
  }
  require(r.max_internal_gap >= 0, "gap non-negative");
}

static Json gap_json(const GapRecord& g) { return Json{{"location", int_json(g.location)}, {"gap", int_json(g.gap)}}; }
static GapRecord gap_from(const Json& j) { return {int_from_json(j.at("location")), int_from_json(j.at("gap"))}; }

void to_json(Json& j, const GapReport& v) {
  Json m = Json::array();
  for (const auto& g : v.maxima) m.push_back(gap_json(g));
  j = Json{{"lo", int_json(v.lo)}, {"hi", int_json(v.hi)},      {"stride", int_json(v.stride)},
           {"k", v.k},             {"values", int_json(v.values)}, {"max", gap_json(v.max)},
           {"maxima", m},          {"exponent", v.exponent}};
}

void from_json(const Json& j, GapReport& v) {
  v.lo = int_from_json(j.at("lo"));
  v.hi = int_from_json(j.at("hi"));
  v.stride = int_from_json(j.at("stride"));
  v.k = get<unsigned>(j, "k");
  v.values = int_from_json(j.at("values"));
  v.max = gap_from(j.at("max"));
  v.maxima.clear();
  for (const Json& g : j.at("maxima")) v.maxima.push_back(gap_from(g));
  v.exponent = num(j, "exponent");
}

void check_report(const GapReport& r) {
  require(r.lo <= r.hi && r.stride >= 1, "lo <= hi and stride >= 1");
  require(r.values >= 0 && r.max.gap >= 0, "counts non-negative");
  for (const auto& g : r.maxima) {
    require(g.gap <= r.max.gap, "overall maximum dominates per-stride maxima");
    require(g.location >= r.lo && g.location <= r.hi, "gap location in range");
  }
}

void to_json(Json& j, const VerifyResult& v) {
  j = Json{{"theorem", to_string(v.theorem)},
           {"x", int_json(v.x)},
           {"theta", rational_json(v.theta)},
           {"window", int_json(v.window)},
           {"factor_range", Json::array({int_json(v.factor_range.first), int_json(v.factor_range.second)})},
           {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
           {"hits", int_json(v.hits)},
           {"exhaustively_confirmed", v.exhaustively_confirmed}};
}

void from_json(const Json& j, VerifyResult& v) {
  v.theorem = parse_theorem(get<std::string>(j, "theorem"));
  v.x = int_from_json(j.at("x"));
  v.theta = rational_from_json(j.at("theta"));
  v.window = int_from_json(j.at("window"));
  v.factor_range = {int_from_json(j.at("factor_range").at(0)), int_from_json(j.at("factor_range").at(1))};
  if (j.at("witness").is_null())
    v.witness.reset();
  else
    v.witness = j.at("witness").get<Factorization>();
  v.hits = int_from_json(j.at("hits"));
  v.exhaustively_confirmed = get<bool>(j, "exhaustively_confirmed");
}

void check_report(const VerifyResult& r) {
  require(r.window >= 0 && r.hits >= 0, "window and hits non-negative");
  if (r.witness) {
    r.witness->validate();
    require(r.witness->query == r.x, "witness query equals x");
    require(r.witness->offset <= r.window, "witness inside the window");
    require(r.hits >= 1, "a witness implies at least one hit");
  } else {
    require(r.hits == 0, "no witness implies no hits");
  }
}

void to_json(Json& j, const FractionReport& v) {
  j = Json{{"X", int_json(v.X)},
           {"theorem", to_string(v.theorem)},
           {"theta", rational_json(v.theta)},
           {"seed", std::to_string(v.seed)},
           {"samples", v.samples},
           {"successes", v.successes},
           {"fraction", v.fraction},
           {"failures", ints(v.failures)}};
}

void from_json(const Json& j, FractionReport& v) {
  v.X = int_from_json(j.at("X"));
  v.theorem = parse_theorem(get<std::string>(j, "theorem"));
  v.theta = rational_from_json(j.at("theta"));
  v.seed = std::stoull(get<std::string>(j, "seed"));
  v.samples = get<std::size_t>(j, "samples");
  v.successes = get<std::size_t>(j, "successes");
  v.fraction = num(j, "fraction");
  v.failures = ints_from(j.at("failures"));
}

void check_report(const FractionReport& r) {
  require(r.successes <= r.samples, "successes <= samples");
  require(r.samples == 0 || r.fraction == static_cast<double>(r.successes) / static_cast<double>(r.samples),
          "fraction = successes / samples");
  require(r.failures.size() <= r.samples - r.successes, "failure list bounded by failed samples");
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    require(r.failures[i] >= r.X && r.failures[i] <= 2 * r.X, "failures inside [X, 2X]");
    if (i) require(r.failures[i - 1] < r.failures[i], "failures ascending");
  }
}

// --- sequences ---------------------------------------------------------------

void to_json(Json& j, const DensityReport& v) {
  j = Json{{"X", int_json(v.X)},
           {"count", int_json(v.count)},
           {"epsilon", rational_json(v.epsilon)},
           {"implied_constant", v.implied_constant},
           {"flagged", v.flagged}};
}

void from_json(const Json& j, DensityReport& v) {
  v.X = int_from_json(j.at("X"));
  v.count = int_from_json(j.at("count"));
  v.epsilon = rational_from_json(j.at("epsilon"));
  v.implied_constant = num(j, "implied_constant");
  v.flagged = get<bool>(j, "flagged");
}

void check_report(const DensityReport& r) {
  require(r.count >= 0, "count >= 0");
  const double expect =
      static_cast<double>(r.count) * std::pow(static_cast<double>(r.X), -(1.0 - to_double(r.epsilon) / 4.0));
  require(std::abs(r.implied_constant - expect) <= 1e-12 * std::max(1.0, expect), "implied constant formula");
  require(r.flagged == (r.count == 0), "flag marks an empty window");
}

// --- analytic ----------------------------------------------------------------

void to_json(Json& j, const ExponentSolution& v) {
  Json terms = Json::array();
  for (const auto& t : v.terms)
    terms.push_back(Json{{"label", t.label},
                         {"x_exponent", rational_json(t.m.x_exp)},
                         {"delta_exponent", rational_json(t.m.delta_exp)},
                         {"limit", t.limit ? rational_json(*t.limit) : Json(nullptr)}});
  j = Json{{"mode", to_string(v.mode)},
           {"delta_exponent", rational_json(v.delta_exponent)},
           {"theta", rational_json(v.theta)},
           {"binding_term", v.binding_term},
           {"target", rational_json(v.target)},
           {"terms", terms}};
}

void from_json(const Json& j, ExponentSolution& v) {
  v.mode = parse_exponent_mode(get<std::string>(j, "mode"));
  v.delta_exponent = rational_from_json(j.at("delta_exponent"));
  v.theta = rational_from_json(j.at("theta"));
  v.binding_term = get<std::string>(j, "binding_term");
  v.target = rational_from_json(j.at("target"));
  v.terms.clear();
  for (const Json& t : j.at("terms")) {
    ExponentTerm e;
    e.label = get<std::string>(t, "label");
    e.m = {rational_from_json(t.at("x_exponent")), rational_from_json(t.at("delta_exponent"))};
    if (!t.at("limit").is_null()) e.limit = rational_from_json(t.at("limit"));
    v.terms.push_back(e);
  }
}

void to_json(Json& j, const MomentReport& v) {
  j = Json{{"kind", v.kind},
           {"x", v.x},
           {"Delta", v.Delta},
           {"delta", v.delta},
           {"epsilon", v.epsilon},
           {"U", int_json(v.U)},
           {"L", int_json(v.L)},
           {"A1", v.A1},
           {"moment", v.moment},
           {"moment_refined", v.moment_refined},
           {"grid_rel_change", v.grid_rel_change},
           {"pieces", v.pieces},
           {"min_panels", v.min_panels},
           {"bound", v.bound},
           {"ratio", v.ratio},
           {"j_max", v.j_max},
           {"t_cut", v.t_cut},
           {"exceptional_measure", v.exceptional_measure},
           {"chebyshev_bound", v.chebyshev_bound}};
}

void from_json(const Json& j, MomentReport& v) {
  v.kind = get<std::string>(j, "kind");
  v.x = num(j, "x");
  v.Delta = num(j, "Delta");
  v.delta = num(j, "delta");
  v.epsilon = num(j, "epsilon");
  v.U = int_from_json(j.at("U"));
  v.L = int_from_json(j.at("L"));
  v.A1 = num(j, "A1");
  v.moment = num(j, "moment");
  v.moment_refined = num(j, "moment_refined");
  v.grid_rel_change = num(j, "grid_rel_change");
  v.pieces = get<std::size_t>(j, "pieces");
  v.min_panels = get<std::size_t>(j, "min_panels");
  v.bound = num(j, "bound");
  v.ratio = num(j, "ratio");
  v.j_max = get<int>(j, "j_max");
  v.t_cut = num(j, "t_cut");
  v.exceptional_measure = num(j, "exceptional_measure");
  v.chebyshev_bound = num(j, "chebyshev_bound");
}

void to_json(Json& j, const Prop1Report& v) {
  j = Json{{"x", v.x},
           {"delta", v.delta},
           {"epsilon", v.epsilon},
           {"value", v.value},
           {"blocks", v.blocks},
           {"j_max", v.j_max},
           {"t_cut", v.t_cut},
           {"panel_width", v.panel_width},
           {"tail_fraction", v.tail_fraction}};
}

void from_json(const Json& j, Prop1Report& v) {
  v.x = num(j, "x");
  v.delta = num(j, "delta");
  v.epsilon = num(j, "epsilon");
  v.value = num(j, "value");
  v.blocks = get<std::vector<double>>(j, "blocks");
  v.j_max = get<int>(j, "j_max");
  v.t_cut = num(j, "t_cut");
  v.panel_width = num(j, "panel_width");
  v.tail_fraction = num(j, "tail_fraction");
}

void check_report(const Prop1Report& r) {
  require(r.value >= 0, "value >= 0");
  require(r.blocks.size() == static_cast<std::size_t>(r.j_max) + 1, "one block per j");
  for (double b : r.blocks) require(b >= 0, "blocks non-negative");
}

void to_json(Json& j, const MellinCheck& v) {
  j = Json{{"kernel", v.kernel == MellinKernel::Tent ? "tent" : "simple"},
           {"xi", v.xi},
           {"delta", v.delta},
           {"sigma", v.sigma},
           {"T_cut", v.T_cut},
           {"truncated", v.truncated},
           {"tail", v.tail},
           {"quadrature", v.quadrature},
           {"closed_form", v.closed_form},
           {"error", v.error},
           {"panels", v.panels}};
}

void from_json(const Json& j, MellinCheck& v) {
  v.kernel = get<std::string>(j, "kernel") == "tent" ? MellinKernel::Tent : MellinKernel::Simple;
  v.xi = num(j, "xi");
  v.delta = num(j, "delta");
  v.sigma = num(j, "sigma");
  v.T_cut = num(j, "T_cut");
  v.truncated = num(j, "truncated");
  v.tail = num(j, "tail");
  v.quadrature = num(j, "quadrature");
  v.closed_form = num(j, "closed_form");
  v.error = num(j, "error");
  v.panels = get<std::size_t>(j, "panels");
}

void check_report(const MellinCheck& r) {
  require(r.error == std::abs(r.quadrature - r.closed_form), "error = |quadrature - closed form|");
  require(r.closed_form >= 0, "closed form non-negative");
}

void to_json(Json& j, const MeanValueReport& v) {
  j = Json{{"T", v.T},
           {"N", v.N},
           {"lhs", v.lhs},
           {"diagonal", v.diagonal},
           {"reference", v.reference},
           {"implied_constant", v.implied_constant},
           {"panels", v.panels}};
}

void from_json(const Json& j, MeanValueReport& v) {
  v.T = num(j, "T");
  v.N = get<std::int64_t>(j, "N");
  v.lhs = num(j, "lhs");
  v.diagonal = num(j, "diagonal");
  v.reference = num(j, "reference");
  v.implied_constant = num(j, "implied_constant");
  v.panels = get<std::size_t>(j, "panels");
}

void check_report(const MeanValueReport& r) {
  require(r.lhs >= 0 && r.diagonal >= 0 && r.reference >= 0, "non-negative sides");
  require(r.implied_constant >= 0, "implied constant non-negative");
}

void to_json(Json& j, const Lemma1Report& v) {
  j = Json{{"U", int_json(v.U)}, {"L", int_json(v.L)}, {"T", v.T},
           {"lhs", v.lhs},       {"shape", v.shape},    {"ratio", v.ratio}};
}

void from_json(const Json& j, Lemma1Report& v) {
  v.U = int_from_json(j.at("U"));
  v.L = int_from_json(j.at("L"));
  v.T = num(j, "T");
  v.lhs = num(j, "lhs");
  v.shape = num(j, "shape");
  v.ratio = num(j, "ratio");
}

void check_report(const Lemma1Report& r) {
  require(r.L * r.L > r.U && 2 * r.L <= r.U, "sqrt(U) < L <= U/2");
  require(r.lhs >= 0 && r.shape > 0, "lhs >= 0 and shape > 0");
  require(r.ratio == r.lhs / r.shape, "ratio = lhs / shape");
}

void to_json(Json& j, const LogIntegralReport& v) {
  j = Json{{"u", v.u},         {"X", v.X},         {"numeric", v.numeric},
           {"closed_form", v.closed_form}, {"bound", v.bound}, {"pass", v.pass}};
}

void from_json(const Json& j, LogIntegralReport& v) {
  v.u = num(j, "u");
  v.X = num(j, "X");
  v.numeric = num(j, "numeric");
  v.closed_form = num(j, "closed_form");
  v.bound = num(j, "bound");
  v.pass = get<bool>(j, "pass");
}

void check_report(const LogIntegralReport& r) {
  require(r.u >= 0 && r.X >= 1, "u >= 0 and X >= 1");
  require(r.pass == (r.numeric <= r.bound + 1e-9), "pass flag consistent");
}

void to_json(Json& j, const PhiReport& v) {
  j = Json{{"sequence", v.sequence},
           {"x", v.x},
           {"w", v.params.w},
           {"delta", v.params.delta},
           {"U", int_json(v.params.U)},
           {"L", int_json(v.params.L)},
           {"sigma", v.params.sigma},
           {"eta", v.params.eta},
           {"A1", v.A1},
           {"phi", v.phi},
           {"main", v.main},
           {"ratio", v.ratio}};
}

void from_json(const Json& j, PhiReport& v) {
  v.sequence = get<std::string>(j, "sequence");
  v.x = num(j, "x");
  v.params.w = num(j, "w");
  v.params.delta = num(j, "delta");
  v.params.U = int_from_json(j.at("U"));
  v.params.L = int_from_json(j.at("L"));
  v.params.sigma = num(j, "sigma");
  v.params.eta = num(j, "eta");
  v.A1 = num(j, "A1");
  v.phi = num(j, "phi");
  v.main = num(j, "main");
  v.ratio = num(j, "ratio");
}

void check_report(const PhiReport& r) {
  r.params.validate();
  require(r.phi >= 0 && r.main >= 0 && r.A1 >= 0, "non-negative values");
  require(r.ratio == (r.main > 0 ? r.phi / r.main : 0.0), "ratio = phi / main");
}

void to_json(Json& j, const ZetaReport& v) {
  Json pts = Json::array();
  for (const auto& p : v.points) pts.push_back(Json{{"t", p.t}, {"re", p.re}, {"im", p.im}, {"abs", p.abs}});
  j = Json{{"points", pts}, {"envelope", v.envelope}};
}

void from_json(const Json& j, ZetaReport& v) {
  v.points.clear();
  for (const Json& p : j.at("points")) v.points.push_back({num(p, "t"), num(p, "re"), num(p, "im"), num(p, "abs")});
  v.envelope = num(j, "envelope");
}

void check_report(const ZetaReport& r) {
  require(!r.points.empty(), "at least one point");
  for (const auto& p : r.points) require(p.abs == std::hypot(p.re, p.im), "abs = |zeta|");
  require(r.envelope >= 0, "envelope non-negative");
}

void to_json(Json& j, const LemmaSuiteReport& v) {
  j = Json{{"seed", std::to_string(v.seed)},
           {"instances", v.instances},
           {"meanvalue_max_constant", v.meanvalue_max_constant},
           {"majorant_all_pass", v.majorant_all_pass},
           {"majorant_max_ratio", v.majorant_max_ratio},
           {"lemma1", v.lemma1},
           {"log_integral_all_pass", v.log_integral_all_pass},
           {"log_integral_max_excess", v.log_integral_max_excess},
           {"kernel_max_error", v.kernel_max_error}};
}

void from_json(const Json& j, LemmaSuiteReport& v) {
  v.seed = std::stoull(get<std::string>(j, "seed"));
  v.instances = get<std::size_t>(j, "instances");
  v.meanvalue_max_constant = num(j, "meanvalue_max_constant");
  v.majorant_all_pass = get<bool>(j, "majorant_all_pass");
  v.majorant_max_ratio = num(j, "majorant_max_ratio");
  v.lemma1 = j.at("lemma1").get<Lemma1Report>();
  v.log_integral_all_pass = get<bool>(j, "log_integral_all_pass");
  v.log_integral_max_excess = num(j, "log_integral_max_excess");
  v.kernel_max_error = num(j, "kernel_max_error");
}

void check_report(const LemmaSuiteReport& r) {
  require(r.meanvalue_max_constant >= 0 && r.kernel_max_error >= 0, "non-negative maxima");
  require(r.majorant_all_pass == (r.majorant_max_ratio <= 3.0), "majorant flag consistent");
  require(r.log_integral_all_pass == (r.log_integral_max_excess <= 1e-9), "log-integral flag consistent");
  check_report(r.lemma1);
}

// --- CSV ---------------------------------------------------------------------

void write_csv(std::ostream& out, const ScanReport& r) {
  out << "value,offset,factors\n";
  for (const auto& h : r.hits) {
    out << to_string(h.value) << ',' << to_string(h.offset) << ',';
    for (std::size_t i = 0; i < h.factors.size(); ++i) out << (i ? "*" : "") << to_string(h.factors[i]);
    out << '\n';
  }
}

void write_csv(std::ostream& out, const GapReport& r) {
  out << "location,gap\n";
  for (const auto& g : r.maxima) out << to_string(g.location) << ',' << to_string(g.gap) << '\n';
}

void write_csv(std::ostream& out, const ZetaReport& r) {
  out << "t,re,im,abs\n";
  for (const auto& p : r.points)
    out << Json(p.t).dump() << ',' << Json(p.re).dump() << ',' << Json(p.im).dump() << ',' << Json(p.abs).dump() << '\n';
}

void write_csv(std::ostream& out, const FractionReport& r) {
  out << "failure\n";
  for (Int f : r.failures) out << to_string(f) << '\n';
}

}  // namespace akp
