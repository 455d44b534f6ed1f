#pragma once

// JSON and CSV renderings of reports. Rationals are emitted as exact "n/d"
// strings next to a decimal approximation.

#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "besico/constructions.hpp"
#include "besico/identities.hpp"
#include "besico/probability.hpp"
#include "besico/real_bridge.hpp"
#include "besico/sampling.hpp"

namespace besico {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json rational_json(const Rational& r) {
  return {{"exact", to_string(r)}, {"decimal", to_double(r)}};
}

inline json to_json(const Spectrum& s) { return json(std::vector<std::int64_t>(s.counts().begin(), s.counts().end())); }

inline json to_json(const Check& c) {
  return {{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs},
          {"relation", to_string(c.relation)}, {"pass", c.pass()}, {"sharp", c.sharp()}};
}

inline json to_json(const NormalizedTriple& t) {
  return {rational_json(t.x0), rational_json(t.x1), rational_json(t.x2)};
}

inline json to_json(const IdentityReport& r) {
  json bounds = {{"x0", to_json(r.bounds.x0)}, {"x1", to_json(r.bounds.x1)},
                 {"xm", json::array()}, {"x0_exact_max", r.bounds.x0_exact_max},
                 {"x0_attains_max", r.bounds.x0_attains_max}};
  for (const Check& c : r.bounds.xm) bounds["xm"].push_back(to_json(c));
  return {{"q", r.q},
          {"moments", {to_json(r.moments.count), to_json(r.moments.first), to_json(r.moments.second)}},
          {"incidence_formula", to_json(r.incidence_formula)},
          {"derived_x1", to_json(r.derived_x1)},
          {"derived_x2", to_json(r.derived_x2)},
          {"bounds", bounds},
          {"inequalities", {to_json(r.inequalities.total), to_json(r.inequalities.lower), to_json(r.inequalities.upper)}},
          {"third_moment", r.third_moment},
          {"normalized_triple", to_json(r.triple)},
          {"equalities_pass", r.equalities_pass()},
          {"all_pass", r.all_pass()}};
}

/// CSV header for identity rows of a given q.
inline std::string identity_csv_header(std::uint32_t q) {
  std::string h = "q";
  for (std::uint32_t m = 0; m <= q + 1; ++m) h += ",x_" + std::to_string(m);
  h += ",sum_x,sum_mx,sum_m2x,third_moment,count_ok,first_moment_ok,second_moment_ok,incidence_ok,derived_x1_ok,derived_x2_ok,bounds_ok,inequalities_ok";
  return h;
}

inline std::string identity_csv_row(const Spectrum& s, const IdentityReport& r) {
  std::ostringstream o;
  o << s.q();
  for (std::int64_t v : s.counts()) o << ',' << v;
  o << ',' << r.moments.count.lhs << ',' << r.moments.first.lhs << ',' << r.moments.second.lhs << ','
    << r.third_moment << ',' << r.moments.count.pass() << ',' << r.moments.first.pass() << ','
    << r.moments.second.pass() << ',' << r.incidence_formula.pass() << ',' << r.derived_x1.pass()
    << ',' << r.derived_x2.pass() << ',' << r.bounds.all_pass() << ',' << r.inequalities.all_pass();
  return o.str();
}

inline json to_json(const SampleStats& st) {
  json per_m = json::array();
  for (const MomentStats& ms : st.per_m)
    per_m.push_back({{"m", ms.m},
                     {"mean", rational_json(ms.mean)},
                     {"variance", rational_json(ms.variance)},
                     {"expected", rational_json(ms.expected)},
                     {"asymptotic", ms.asymptotic},
                     {"relative_error", ms.relative_error()},
                     {"concentration_hits", ms.concentration_hits},
                     {"concentration", ms.concentration}});
  return {{"schema_version", kSchemaVersion},
          {"q", st.q},
          {"samples", st.samples},
          {"seed", st.seed},
          {"m_max", st.m_max},
          {"enumerated", st.enumerated},
          {"per_m", per_m},
          {"identity_failures", st.identity_failures},
          {"inequality_failures", st.inequality_failures}};
}

inline std::string stats_csv(const SampleStats& st) {
  std::ostringstream o;
  o << "q,samples,seed,m,mean,mean_decimal,variance,expected,expected_decimal,asymptotic,concentration\n";
  for (const MomentStats& ms : st.per_m)
    o << st.q << ',' << st.samples << ',' << st.seed << ',' << ms.m << ',' << to_string(ms.mean) << ','
      << to_double(ms.mean) << ',' << to_string(ms.variance) << ',' << to_string(ms.expected) << ','
      << to_double(ms.expected) << ',' << ms.asymptotic << ',' << ms.concentration << '\n';
  return o.str();
}

inline json to_json(const FVector& f) {
  return {{"f0", f.f0}, {"f1", f.f1}, {"f2", f.f2}, {"f1b", f.f1b}, {"f2b", f.f2b}};
}

inline json to_json(const FieldPrediction& p) {
  return {{"f1b", p.f1b}, {"f2b", p.f2b}, {"f1", p.f1}, {"f2", p.f2},
          {"ft0", p.ft0}, {"ft1", p.ft1}, {"ft2", p.ft2}, {"euler", p.euler}};
}

inline json to_json(const IncidenceQuantities& iq) {
  return {{"p1", iq.p1}, {"p0", iq.p0}, {"p01", iq.p01}, {"x", iq.x}};
}

inline json to_json(const CrossValidation& cv) {
  return {{"predicted", to_json(cv.predicted)},
          {"quantities", to_json(cv.quantities)},
          {"real", to_json(cv.real)},
          {"f1_direct", cv.f1_direct},
          {"matches", {{"f0", cv.f0_match()}, {"f1", cv.f1_match()}, {"f2", cv.f2_match()},
                       {"f1b", cv.f1b_match()}, {"f2b", cv.f2b_match()},
                       {"f1_direct", cv.f1_direct_match()}, {"euler_real", cv.euler_real()}}},
          {"passed", cv.passed()}};
}

inline json to_json(const std::vector<LawRow>& rows, std::uint32_t q) {
  json out = json::array();
  for (const LawRow& r : rows)
    out.push_back({{"q", q}, {"m", r.m}, {"probability", rational_json(r.probability.value())},
                   {"expected", rational_json(r.expected)}, {"asymptotic", r.asymptotic}});
  return out;
}

}  // namespace besico
