#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "akp/analytic/exponents.hpp"
#include "akp/analytic/smoothed.hpp"
#include "akp/analytic/zeta.hpp"
#include "akp/construct.hpp"
#include "akp/scanner.hpp"
#include "akp/sequences.hpp"

namespace akp {

using Json = nlohmann::ordered_json;

// Exact integers always travel as decimal strings, rationals as "p/q".
Json int_json(Int v);
Int int_from_json(const Json& j);
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

struct PhiReport {
  std::string sequence;
  double x = 0;  // sets sigma
  SmoothedCounterParams params;
  double A1 = 0, phi = 0, main = 0, ratio = 0;  // ratio = phi / main, 0 when main = 0
};

struct ZetaPoint {
  double t = 0, re = 0, im = 0, abs = 0;
};

struct ZetaReport {
  std::vector<ZetaPoint> points;
  double envelope = 0;  // bourgain_envelope over the same t
};

struct LemmaSuiteReport {
  std::uint64_t seed = 0;
  std::size_t instances = 0;
  double meanvalue_max_constant = 0;
  bool majorant_all_pass = false;
  double majorant_max_ratio = 0;  // lhs / rhs
  Lemma1Report lemma1;
  bool log_integral_all_pass = false;
  double log_integral_max_excess = 0;  // max numeric - bound, negative when strict
  double kernel_max_error = 0;
};

void to_json(Json& j, const Factorization& v);
void from_json(const Json& j, Factorization& v);
void to_json(Json& j, const WindowQuery& v);
void from_json(const Json& j, WindowQuery& v);
void to_json(Json& j, const ScanReport& v);
void from_json(const Json& j, ScanReport& v);
void to_json(Json& j, const GapReport& v);
void from_json(const Json& j, GapReport& v);
void to_json(Json& j, const VerifyResult& v);
void from_json(const Json& j, VerifyResult& v);
void to_json(Json& j, const FractionReport& v);
void from_json(const Json& j, FractionReport& v);
void to_json(Json& j, const DensityReport& v);
void from_json(const Json& j, DensityReport& v);
void to_json(Json& j, const ExponentSolution& v);
void from_json(const Json& j, ExponentSolution& v);
void to_json(Json& j, const MomentReport& v);
void from_json(const Json& j, MomentReport& v);
void to_json(Json& j, const Prop1Report& v);
void from_json(const Json& j, Prop1Report& v);
void to_json(Json& j, const MellinCheck& v);
void from_json(const Json& j, MellinCheck& v);
void to_json(Json& j, const MeanValueReport& v);
void from_json(const Json& j, MeanValueReport& v);
void to_json(Json& j, const Lemma1Report& v);
void from_json(const Json& j, Lemma1Report& v);
void to_json(Json& j, const LogIntegralReport& v);
void from_json(const Json& j, LogIntegralReport& v);
void to_json(Json& j, const PhiReport& v);
void from_json(const Json& j, PhiReport& v);
void to_json(Json& j, const ZetaReport& v);
void from_json(const Json& j, ZetaReport& v);
void to_json(Json& j, const LemmaSuiteReport& v);
void from_json(const Json& j, LemmaSuiteReport& v);

// Invariant checks for reports without their own validate(); throw DomainError.
void check_report(const ScanReport& r);
void check_report(const GapReport& r);
void check_report(const VerifyResult& r);
void check_report(const FractionReport& r);
void check_report(const DensityReport& r);
void check_report(const Prop1Report& r);
void check_report(const MellinCheck& r);
void check_report(const MeanValueReport& r);
void check_report(const Lemma1Report& r);
void check_report(const LogIntegralReport& r);
void check_report(const PhiReport& r);
void check_report(const ZetaReport& r);
void check_report(const LemmaSuiteReport& r);
inline void check_report(const Factorization& r) { r.validate(); }
inline void check_report(const ExponentSolution& r) { r.validate(); }
inline void check_report(const MomentReport& r) { r.validate(); }

// Flat CSV views with a header row.
void write_csv(std::ostream& out, const ScanReport& r);
void write_csv(std::ostream& out, const GapReport& r);
void write_csv(std::ostream& out, const ZetaReport& r);
void write_csv(std::ostream& out, const FractionReport& r);

}  // namespace akp
