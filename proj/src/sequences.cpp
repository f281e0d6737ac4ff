#include "akp/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "akp/primes.hpp"

namespace akp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_window(Int lo, Int hi) {
  if (hi < lo) throw DomainError("empty window: hi < lo");
  if (hi - lo > kMemberWindowBudget)
    throw BudgetError("window of length " + to_string(hi - lo) + " exceeds the enumeration budget of 10^9");
}

std::vector<Member> product_members(const SequenceSpec& first, const SequenceSpec& second, Int lo, Int hi) {
  // Ordered pairs (a, b) with a * b in [lo, hi]: either a <= s or a > s and
  // then b <= hi / (s + 1), where s = floor(sqrt(hi)).
  const Int s = isqrt(hi);
  std::vector<Member> raw;
  for (const Member& a : collect_members(first, 1, s)) {
    const Int blo = std::max<Int>(1, ceil_div(lo, a.value));
    const Int bhi = hi / a.value;
    if (blo > bhi) continue;
    for (const Member& b : collect_members(second, blo, bhi)) raw.push_back({a.value * b.value, a.weight * b.weight});
  }
  const Int bmax = hi / (s + 1);
  if (bmax >= 1) {
    for (const Member& b : collect_members(second, 1, bmax)) {
      const Int alo = std::max(s + 1, ceil_div(lo, b.value));
      const Int ahi = hi / b.value;
      if (alo > ahi) continue;
      for (const Member& a : collect_members(first, alo, ahi)) raw.push_back({a.value * b.value, a.weight * b.weight});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Member& x, const Member& y) { return x.value < y.value; });
  std::vector<Member> out;
  for (const Member& m : raw) {
    if (!out.empty() && out.back().value == m.value)
      out.back().weight += m.weight;
    else
      out.push_back(m);
  }
  return out;
}

}  // namespace

SequenceSpec SequenceSpec::all() { return {AllIntegers{}, "all"}; }
SequenceSpec SequenceSpec::primes() { return {Primes{}, "primes"}; }

SequenceSpec SequenceSpec::list(std::vector<Int> values, std::string label) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw DomainError("list members must be positive");
    if (i > 0 && values[i] <= values[i - 1]) throw DomainError("list must be sorted and duplicate-free");
  }
  return {ExplicitList{std::make_shared<const std::vector<Int>>(std::move(values))}, std::move(label)};
}

SequenceSpec SequenceSpec::product(SequenceSpec first, SequenceSpec second) {
  std::string label = first.label + "*" + second.label;
  if (first.label == "primes" && second.label == "primes") label = "prodPP";
  return {ProductOfTwo{std::make_shared<const SequenceSpec>(std::move(first)),
                       std::make_shared<const SequenceSpec>(std::move(second))},
          std::move(label)};
}

bool operator==(const SequenceSpec& a, const SequenceSpec& b) {
  if (a.kind.index() != b.kind.index()) return false;
  if (auto* la = std::get_if<SequenceSpec::ExplicitList>(&a.kind)) {
    const auto& lb = std::get<SequenceSpec::ExplicitList>(b.kind);
    return la->values == lb.values || *la->values == *lb.values;
  }
  if (auto* pa = std::get_if<SequenceSpec::ProductOfTwo>(&a.kind)) {
    const auto& pb = std::get<SequenceSpec::ProductOfTwo>(b.kind);
    return *pa->first == *pb.first && *pa->second == *pb.second;
  }
  return true;
}

SequenceSpec load_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open list file: " + path);
  std::vector<Int> values;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    values.push_back(parse_int(line));
  }
  return SequenceSpec::list(std::move(values), "list:" + path);
}

SequenceSpec parse_sequence(std::string_view text) {
  if (text == "all") return SequenceSpec::all();
  if (text == "primes") return SequenceSpec::primes();
  if (text == "prodPP") return SequenceSpec::product(SequenceSpec::primes(), SequenceSpec::primes());
  if (text.rfind("list:", 0) == 0) return load_list(std::string(text.substr(5)));
  throw DomainError("unknown sequence kind: " + std::string(text));
}

std::vector<Member> collect_members(const SequenceSpec& spec, Int lo, Int hi) {
  if (lo < 1) throw DomainError("sequence members are positive; lo must be >= 1");
  check_window(lo, hi);
  return std::visit(
      overloaded{
          [&](const SequenceSpec::AllIntegers&) {
            std::vector<Member> out;
            out.reserve(static_cast<std::size_t>(hi - lo + 1));
            for (Int n = lo; n <= hi; ++n) out.push_back({n, 1});
            return out;
          },
          [&](const SequenceSpec::Primes&) {
            std::vector<Member> out;
            for_each_prime(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi),
                           [&](std::uint64_t p) { out.push_back({static_cast<Int>(p), 1}); });
            return out;
          },
          [&](const SequenceSpec::ExplicitList& l) {
            std::vector<Member> out;
            auto it = std::lower_bound(l.values->begin(), l.values->end(), lo);
            for (; it != l.values->end() && *it <= hi; ++it) out.push_back({*it, 1});
            return out;
          },
          [&](const SequenceSpec::ProductOfTwo& p) { return product_members(*p.first, *p.second, lo, hi); },
      },
      spec.kind);
}

std::vector<Member> members_in(const SequenceSpec& spec, Int lo, Int hi) {
  if (hi < lo) throw DomainError("empty window: hi < lo");
  if (lo < 2) throw DomainError("members_in requires lo >= 2");
  return collect_members(spec, lo, hi);
}

Int count_members(const SequenceSpec& spec, Int lo, Int hi) {
  if (lo < 1) lo = 1;
  if (hi < lo) return 0;
  check_window(lo, hi);
  if (std::holds_alternative<SequenceSpec::AllIntegers>(spec.kind)) return hi - lo + 1;
  if (std::holds_alternative<SequenceSpec::Primes>(spec.kind))
    return static_cast<Int>(count_primes_in(static_cast<std::uint64_t>(lo), static_cast<std::uint64_t>(hi)));
  return static_cast<Int>(collect_members(spec, lo, hi).size());
}

Int weight_of(const SequenceSpec& spec, Int n) {
  if (n < 1) return 0;
  return std::visit(overloaded{
                        [&](const SequenceSpec::AllIntegers&) -> Int { return 1; },
                        [&](const SequenceSpec::Primes&) -> Int { return is_prime(static_cast<std::uint64_t>(n)); },
                        [&](const SequenceSpec::ExplicitList& l) -> Int {
                          return std::binary_search(l.values->begin(), l.values->end(), n);
                        },
                        [&](const SequenceSpec::ProductOfTwo& p) -> Int {
                          Int w = 0;
                          for (Int d = 1; d * d <= n; ++d) {
                            if (n % d) continue;
                            const Int e = n / d;
                            w += weight_of(*p.first, d) * weight_of(*p.second, e);
                            if (d != e) w += weight_of(*p.first, e) * weight_of(*p.second, d);
                          }
                          return w;
                        },
                    },
                    spec.kind);
}

DensityReport density_check(const SequenceSpec& spec, Int X, const Rational& epsilon) {
  if (X < 2) throw DomainError("density_check requires X >= 2");
  if (epsilon <= 0 || epsilon >= 1) throw DomainError("density_check requires 0 < epsilon < 1");
  DensityReport r;
  r.X = X;
  r.epsilon = epsilon;
  r.count = count_members(spec, X, checked_mul(2, X));
  const double exponent = 1.0 - to_double(epsilon) / 4.0;
  r.implied_constant = static_cast<double>(r.count) * std::exp(-exponent * std::log(static_cast<double>(X)));
  r.flagged = r.count == 0;
  return r;
}

}  // namespace akp
