#include "akp/scanner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <tuple>

namespace akp {

namespace {

constexpr Int kSaturated = Int{1} << 120;

Int sat_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r) || r > kSaturated) return kSaturated;
  return r;
}

// Exact test c^k n <= f^k <= C^k n with c = lower, C = upper.
struct RelativeTest {
  unsigned k;
  Int lo_num, lo_den, hi_num, hi_den;  // c^k = lo_num / lo_den, C^k = hi_num / hi_den

  RelativeTest(const RelativeBounds& b, unsigned k_)
      : k(k_),
        lo_num(checked_pow(b.lower.numerator(), k_)),
        lo_den(checked_pow(b.lower.denominator(), k_)),
        hi_num(checked_pow(b.upper.numerator(), k_)),
        hi_den(checked_pow(b.upper.denominator(), k_)) {}

  bool admits(Int f, Int n) const {
    const Int fk = checked_pow(f, k);
    return checked_mul(lo_num, n) <= checked_mul(lo_den, fk) && checked_mul(hi_den, fk) <= checked_mul(hi_num, n);
  }
  // Smallest and largest f admitted for some n in [w0, w1].
  Int envelope_lo(Int w0) const { return std::max<Int>(1, ceil_scaled_root(w0, k, lo_num, lo_den)); }
  Int envelope_hi(Int w1) const { return floor_scaled_root(w1, k, hi_num, hi_den); }
  std::pair<Int, Int> range_for(Int n) const { return {envelope_lo(n), envelope_hi(n)}; }
};

// Members of one factor position inside its range.
struct Domain {
  Int lo = 1, hi = 0;
  bool all = false;
  std::vector<Int> values;

  Int size() const { return all ? std::max<Int>(0, hi - lo + 1) : static_cast<Int>(values.size()); }
  Int min() const { return all ? lo : values.front(); }
  Int max() const { return all ? hi : values.back(); }

  // Visits members in [a, b] ascending until visit returns false.
  template <class F>
  void visit(Int a, Int b, F&& f) const {
    a = std::max(a, lo);
    b = std::min(b, hi);
    if (a > b) return;
    if (all) {
      for (Int v = a; v <= b; ++v)
        if (!f(v)) return;
      return;
    }
    for (auto it = std::lower_bound(values.begin(), values.end(), a); it != values.end() && *it <= b; ++it)
      if (!f(*it)) return;
  }
};

Domain make_domain(const SequenceSpec& spec, Int lo, Int hi) {
  Domain d;
  d.lo = std::max<Int>(lo, 1);
  d.hi = hi;
  if (std::holds_alternative<SequenceSpec::AllIntegers>(spec.kind)) {
    d.all = true;
  } else if (d.lo <= d.hi) {
    for (const Member& m : collect_members(spec, d.lo, d.hi)) d.values.push_back(m.value);
  }
  return d;
}

using Tuple = std::array<Int, 4>;

struct RawHit {
  Int value;
  Tuple sorted;  // unused slots hold 0 at the end
};

class Enumerator {
 public:
  Enumerator(const WindowQuery& q, const ScanOptions& opt, bool first_only)
      : q_(q), opt_(opt), first_only_(first_only), k_(q.k) {
    w0_ = q.x;
    w1_ = checked_add(q.x, q.window_length());
    if (auto* rel = std::get_if<RelativeBounds>(&q.bounds)) rel_.emplace(*rel, k_);

    doms_.resize(k_);
    for (unsigned p = 0; p < k_; ++p) {
      auto [lo, hi] = rel_ ? std::pair{rel_->envelope_lo(w0_), rel_->envelope_hi(w1_)} : q.range_at(p);
      doms_[p] = make_domain(q.spec_at(p), lo, hi);
      ranges_.emplace_back(lo, hi);
    }
    arrange();
  }

  bool empty() const {
    return std::any_of(doms_.begin(), doms_.end(), [](const Domain& d) { return d.size() == 0; });
  }

  Int estimated_loops() const {
    Int est = 1;
    for (unsigned i = 0; i + 1 < k_; ++i) est = sat_mul(est, doms_[order_[i]].size());
    return est;
  }

  void run() {
    if (empty()) return;
    if (estimated_loops() > opt_.loop_budget)
      throw BudgetError("enumeration needs an estimated " + to_string(estimated_loops()) +
                        " outer iterations, above the budget of " + to_string(opt_.loop_budget));
    // Suffix products of domain maxima, for the lower cut on each level.
    suffix_max_.assign(k_ + 1, 1);
    for (unsigned i = k_; i-- > 0;) suffix_max_[i] = sat_mul(suffix_max_[i + 1], doms_[order_[i]].max());
    Tuple tuple{};
    recurse(0, 1, 0, tuple);
  }

  bool found() const { return !raw_.empty(); }

  std::vector<Factorization> hits() {
    std::sort(raw_.begin(), raw_.end(), [](const RawHit& a, const RawHit& b) {
      return a.value != b.value ? a.value < b.value : a.sorted < b.sorted;
    });
    std::vector<Factorization> out;
    for (const RawHit& h : raw_) {
      if (!out.empty() && out.back().value == h.value) continue;
      out.push_back(make_factorization(std::vector<Int>(h.sorted.begin(), h.sorted.begin() + k_), q_.x));
    }
    return out;
  }

 private:
  // Outer positions first, the largest domain last; identical positions are
  // adjacent and constrained to non-decreasing values (the sorted witness
  // tuple is invariant under permuting them).
  void arrange() {
    std::vector<unsigned> group(k_);
    for (unsigned p = 0; p < k_; ++p) {
      group[p] = p;
      for (unsigned r = 0; r < p; ++r)
        if (ranges_[r] == ranges_[p] && q_.spec_at(r) == q_.spec_at(p)) {
          group[p] = group[r];
          break;
        }
    }
    unsigned last = 0;
    for (unsigned p = 1; p < k_; ++p)
      if (doms_[p].size() >= doms_[last].size()) last = p;
    order_.resize(k_);
    for (unsigned p = 0; p < k_; ++p) order_[p] = p;
    std::stable_sort(order_.begin(), order_.end(), [&](unsigned a, unsigned b) {
      auto key = [&](unsigned p) { return std::tuple{p == last, group[p] == group[last], group[p]}; };
      return key(a) < key(b);
    });
    tied_.assign(k_, false);
    for (unsigned i = 1; i < k_; ++i) tied_[i] = group[order_[i]] == group[order_[i - 1]];
  }

  void record(Int n, const Tuple& tuple) {
    if (rel_) {
      for (unsigned p = 0; p < k_; ++p)
        if (!rel_->admits(tuple[p], n)) return;
    }
    RawHit h{n, {}};
    std::copy(tuple.begin(), tuple.begin() + k_, h.sorted.begin());
    std::sort(h.sorted.begin(), h.sorted.begin() + k_);
    raw_.push_back(h);
  }

  bool recurse(unsigned level, Int prod, Int prev, Tuple& tuple) {
    const unsigned pos = order_[level];
    const Domain& d = doms_[pos];
    const Int minf = tied_[level] ? std::max(prev, d.lo) : d.lo;

    if (level + 1 == k_) {
      const Int a = std::max(ceil_div(w0_, prod), minf);
      const Int b = w1_ / prod;
      bool keep_going = true;
      d.visit(a, b, [&](Int f) {
        tuple[pos] = f;
        record(prod * f, tuple);
        keep_going = !(first_only_ && found());
        return keep_going;
      });
      return keep_going;
    }

    Int start = minf;
    const Int reach = sat_mul(prod, suffix_max_[level + 1]);
    if (reach < kSaturated) start = std::max(start, ceil_div(w0_, reach));

    bool keep_going = true;
    d.visit(start, d.hi, [&](Int f) {
      // Smallest product still reachable with this f; non-decreasing in f.
      Int low = sat_mul(prod, f);
      bool chain = true;
      for (unsigned j = level + 1; j < k_; ++j) {
        chain = chain && tied_[j];
        const Int m = chain ? std::max(f, doms_[order_[j]].min()) : doms_[order_[j]].min();
        low = sat_mul(low, m);
      }
      if (low > w1_) return false;
      if ((++loops_ & 0xFFFF) == 0) opt_.deadline.check("enumerate_products");
      tuple[pos] = f;
      keep_going = recurse(level + 1, prod * f, f, tuple);
      return keep_going;
    });
    return keep_going;
  }

  const WindowQuery& q_;
  const ScanOptions& opt_;
  bool first_only_;
  unsigned k_;
  Int w0_ = 0, w1_ = 0;
  std::optional<RelativeTest> rel_;
  std::vector<Domain> doms_;
  std::vector<std::pair<Int, Int>> ranges_;
  std::vector<unsigned> order_;
  std::vector<bool> tied_;
  std::vector<Int> suffix_max_;
  std::vector<RawHit> raw_;
  std::uint64_t loops_ = 0;
};

Int max_gap(const std::vector<Factorization>& hits, Int window) {
  if (hits.size() < 2) return window;
  Int g = 0;
  for (std::size_t i = 1; i < hits.size(); ++i) g = std::max(g, hits[i].value - hits[i - 1].value);
  return g;
}

bool has_product(const WindowQuery& q, const ScanOptions& opt) {
  q.validate();
  Enumerator e(q, opt, true);
  e.run();
  return e.found();
}

}  // namespace

AbsoluteBounds AbsoluteBounds::balanced(Int x, unsigned k) {
  const Int scale = checked_pow(2, k);
  return {{{ceil_scaled_root(x, k, 1, scale), floor_scaled_root(x, k, scale, 1)}}};
}

Int WindowQuery::window_length() const {
  if (auto* h = std::get_if<Int>(&length)) return *h;
  return ceil_pow(x, std::get<Rational>(length));
}

const SequenceSpec& WindowQuery::spec_at(unsigned pos) const { return specs.size() == 1 ? specs[0] : specs.at(pos); }

std::pair<Int, Int> WindowQuery::range_at(unsigned pos) const {
  const auto& r = std::get<AbsoluteBounds>(bounds).ranges;
  return r.size() == 1 ? r[0] : r.at(pos);
}

void WindowQuery::validate() const {
  if (x < 2) throw DomainError("window query requires x >= 2");
  if (k < 2 || k > 4) throw DomainError("factor count k must be 2, 3 or 4");
  if (auto* theta = std::get_if<Rational>(&length)) {
    if (*theta <= 0 || *theta > 1) throw DomainError("theta must lie in (0, 1]");
  } else if (std::get<Int>(length) < 0) {
    throw DomainError("window length H must be >= 0");
  }
  if (specs.size() != 1 && specs.size() != k) throw DomainError("need one sequence or one per factor position");
  if (auto* abs = std::get_if<AbsoluteBounds>(&bounds)) {
    if (abs->ranges.size() != 1 && abs->ranges.size() != k) throw DomainError("need one range or one per factor");
    for (auto [lo, hi] : abs->ranges)
      if (lo > hi) throw DomainError("absolute bounds need lo <= hi");
  } else {
    const auto& rel = std::get<RelativeBounds>(bounds);
    if (rel.lower <= 0 || rel.lower > 1 || rel.upper < 1)
      throw DomainError("relative bounds need 0 < c <= 1 <= C");
  }
}

ScanReport enumerate_products(const WindowQuery& q, const ScanOptions& opt) {
  q.validate();
  const Int h = q.window_length();
  if (h > opt.window_budget)
    throw BudgetError("window length " + to_string(h) + " exceeds the budget of " + to_string(opt.window_budget));
  Enumerator e(q, opt, false);
  e.run();
  ScanReport r;
  r.query = q;
  r.hits = e.hits();
  r.witness_count = static_cast<Int>(r.hits.size());
  r.max_internal_gap = max_gap(r.hits, h);
  return r;
}

std::vector<Factorization> exhaustive_hits(const WindowQuery& q, const ScanOptions& opt) {
  q.validate();
  const Int w1 = checked_add(q.x, q.window_length());
  std::optional<RelativeTest> rel;
  if (auto* b = std::get_if<RelativeBounds>(&q.bounds)) rel.emplace(*b, q.k);

  std::vector<Factorization> out;
  std::vector<Int> tuple(q.k);
  for (Int n = q.x; n <= w1; ++n) {
    if (((n - q.x) & 0xFFF) == 0) opt.deadline.check("exhaustive_hits");
    std::optional<std::vector<Int>> best;
    auto range = [&](unsigned pos) { return rel ? rel->range_for(n) : q.range_at(pos); };
    auto rec = [&](auto&& self, unsigned pos, Int rest) -> void {
      auto [lo, hi] = range(pos);
      if (pos + 1 == q.k) {
        if (rest < lo || rest > hi || !contains(q.spec_at(pos), rest)) return;
        tuple[pos] = rest;
        std::vector<Int> sorted = tuple;
        std::sort(sorted.begin(), sorted.end());
        if (!best || sorted < *best) best = sorted;
        return;
      }
      for (Int f = std::max<Int>(lo, 1); f <= std::min(hi, rest); ++f) {
        if (rest % f != 0 || !contains(q.spec_at(pos), f)) continue;
        tuple[pos] = f;
        self(self, pos + 1, rest / f);
      }
    };
    rec(rec, 0, n);
    if (best) out.push_back(make_factorization(*best, q.x));
  }
  return out;
}

Factorization find_first(Int x, unsigned k, const Bounds& bounds, const std::vector<SequenceSpec>& specs,
                         const ScanOptions& opt) {
  const Int limit = checked_add(x, kFindFirstReach);
  Int start = x;
  Int len = 16;
  while (start <= limit) {
    const Int h = std::min(len, limit - start);
    WindowQuery q{start, h, k, bounds, specs};
    ScanReport r = enumerate_products(q, opt);
    if (!r.hits.empty()) return make_factorization(r.hits.front().factors, x);
    start += h + 1;
    len *= 2;
  }
  throw BudgetError("no admissible value in [x, x + 10^8] for x = " + to_string(x));
}

GapReport gap_scan(Int lo, Int hi, unsigned k, const Bounds& bounds, const std::vector<SequenceSpec>& specs,
                   Int stride, const ScanOptions& opt) {
  if (lo < 2 || hi < lo) throw DomainError("gap_scan needs 2 <= lo <= hi");
  if (hi > Int{1'000'000'000'000}) throw BudgetError("gap_scan is limited to hi <= 10^12");
  if (stride < 1) throw DomainError("gap_scan needs stride >= 1");

  GapReport g;
  g.lo = lo;
  g.hi = hi;
  g.stride = stride;
  g.k = k;
  std::optional<Int> prev;
  for (Int s = lo; s <= hi; s += stride) {
    const Int e = std::min(hi, s + stride - 1);
    WindowQuery q{s, e - s, k, bounds, specs};
    GapRecord local;
    for (const Factorization& f : enumerate_products(q, opt).hits) {
      if (prev) {
        GapRecord rec{*prev, f.value - *prev};
        if (rec.gap > local.gap) local = rec;
        if (rec.gap > g.max.gap) g.max = rec;
      }
      prev = f.value;
      ++g.values;
    }
    g.maxima.push_back(local);
  }
  if (g.values < 2) g.max = {lo, hi - lo};
  const double loc = std::log(static_cast<double>(g.max.location));
  g.exponent = g.max.gap > 0 ? std::log(static_cast<double>(g.max.gap)) / loc : 0.0;
  return g;
}

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::T4: return "T4";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  if (text == "T1") return Theorem::T1;
  if (text == "T2") return Theorem::T2;
  if (text == "T3") return Theorem::T3;
  if (text == "T4") return Theorem::T4;
  throw DomainError("unknown theorem: " + std::string(text));
}

TheoremPattern theorem_pattern(Theorem t) {
  const auto all = SequenceSpec::all();
  const auto pr = SequenceSpec::primes();
  switch (t) {
    case Theorem::T1: return {Rational(5, 9), 3, {all, pr, pr}};
    case Theorem::T2: return {Rational(34, 55), 4, {all, pr, pr, pr}};
    case Theorem::T3: return {Rational(13, 55), 3, {all}};
    case Theorem::T4: return {Rational(0), 3, {all}};
  }
  throw DomainError("unknown theorem");
}

WindowQuery theorem_query(Int x, Theorem t, const Rational& theta) {
  TheoremPattern p = theorem_pattern(t);
  return WindowQuery{x, theta, p.k, AbsoluteBounds::balanced(x, p.k), std::move(p.specs)};
}

VerifyResult verify_interval_theorem(Int x, Theorem t, const Rational& slack, const ScanOptions& opt) {
  if (slack < 0) throw DomainError("slack must be non-negative");
  VerifyResult v;
  v.theorem = t;
  v.x = x;
  v.theta = theorem_pattern(t).base_exponent + slack;
  const WindowQuery q = theorem_query(x, t, v.theta);
  v.window = q.window_length();
  v.factor_range = q.range_at(0);
  ScanReport r = enumerate_products(q, opt);
  v.hits = r.witness_count;
  if (!r.hits.empty()) {
    v.witness = r.hits.front();
  } else {
    if (!exhaustive_hits(q, opt).empty())
      throw std::logic_error("enumeration missed a value found by the exhaustive check at x = " + to_string(x));
    v.exhaustively_confirmed = true;
  }
  return v;
}

Rational default_fraction_theta(Theorem t) {
  if (t == Theorem::T3) return Rational(13, 55) + Rational(1, 50);
  if (t == Theorem::T4) return Rational(1, 10);
  throw DomainError("almost_all_fraction supports T3 and T4");
}

std::vector<Int> sample_points(Int X, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<unsigned __int128>(X) + 1;
  std::vector<Int> xs(samples);
  for (auto& x : xs) x = X + static_cast<Int>(static_cast<unsigned __int128>(rng()) % span);
  return xs;
}

FractionReport almost_all_fraction(Int X, Theorem t, std::optional<Rational> theta, std::size_t samples,
                                   std::uint64_t seed, const ScanOptions& opt) {
  if (samples == 0) throw DomainError("almost_all_fraction: empty sample, fraction undefined");
  if (samples > 100'000) throw BudgetError("almost_all_fraction: at most 10^5 samples");
  if (X < 2) throw DomainError("almost_all_fraction requires X >= 2");
  if (X > Int{1'000'000'000'000}) throw BudgetError("almost_all_fraction is limited to X <= 10^12");

  FractionReport r;
  r.X = X;
  r.theorem = t;
  r.theta = theta ? *theta : default_fraction_theta(t);
  if (t != Theorem::T3 && t != Theorem::T4) throw DomainError("almost_all_fraction supports T3 and T4");
  r.seed = seed;
  r.samples = samples;

  const std::vector<Int> xs = sample_points(X, samples, seed);
  std::vector<char> ok(samples, 0);
  parallel_for(samples, opt.threads, [&](std::size_t i) {
    const WindowQuery q = theorem_query(xs[i], Theorem::T3, r.theta);
    if (q.window_length() > opt.window_budget) throw BudgetError("sample window exceeds the window budget");
    ok[i] = has_product(q, opt);
  });
  for (std::size_t i = 0; i < samples; ++i) {
    if (ok[i]) {
      ++r.successes;
      continue;
    }
    const WindowQuery q = theorem_query(xs[i], Theorem::T3, r.theta);
    if (!exhaustive_hits(q, opt).empty())
      throw std::logic_error("enumeration missed a value found by the exhaustive check at x = " + to_string(xs[i]));
    r.failures.push_back(xs[i]);
  }
  std::sort(r.failures.begin(), r.failures.end());
  r.failures.erase(std::unique(r.failures.begin(), r.failures.end()), r.failures.end());
  r.fraction = static_cast<double>(r.successes) / static_cast<double>(samples);
  return r;
}

}  // namespace akp
