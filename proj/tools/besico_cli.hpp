#pragma once

// Command-line front end. Exit codes: 0 success, 1 a check failed,
// 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "besico/besico.hpp"
#include "besico/serialize.hpp"

namespace besico::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string command;
  std::uint64_t q = 0;
  std::string intercepts;
  std::optional<std::uint64_t> seed;
  std::uint64_t samples = 2000;
  std::uint32_t m_max = 6;
  unsigned workers = 0;
  bool enumerate = false;
  std::optional<std::uint64_t> guard_override;
  std::string format;
  std::string output;
  std::string report = "summary";
  std::string kind = "concurrent";
  std::string real_path;
  std::string dump_triples;
};

inline std::vector<std::uint32_t> parse_intercepts(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty intercept in '" + text + "'");
    tok = tok.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("intercept '" + tok + "' is not a nonnegative integer");
    }
    if (used != tok.size() || tok[0] == '-')
      throw ParseError("intercept '" + tok + "' is not a nonnegative integer");
    if (v > 0xffffffffull) throw OutOfRange("intercept '" + tok + "' too large");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw ParseError("no intercepts given");
  return out;
}

/// Guard from --guard-override, then BESICO_GUARD, then the default.
inline std::uint64_t effective_guard(const RunConfig& cfg) {
  if (cfg.guard_override) return *cfg.guard_override;
  if (const char* env = std::getenv("BESICO_GUARD")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("BESICO_GUARD='") + env + "' is not an integer");
    }
  }
  return kDefaultGuard;
}

inline std::string sig6(double v) {
  std::ostringstream o;
  o << std::setprecision(6) << v;
  return o.str();
}

inline std::string join(std::span<const std::int64_t> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline json envelope(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

inline void print_check(std::ostream& out, const Check& c) {
  out << "  " << (c.pass() ? "ok  " : "FAIL") << "  " << c.name << ": " << c.lhs << ' '
      << to_string(c.relation) << ' ' << c.rhs << (c.sharp() && c.relation != Relation::Equal ? " (sharp)" : "")
      << '\n';
}

inline void print_report_table(std::ostream& out, const Spectrum& s, const IdentityReport& r) {
  out << "q = " << s.q() << "\nspectrum x_0..x_" << s.q() + 1 << ": " << join(s.counts()) << '\n';
  out << "identities:\n";
  print_check(out, r.moments.count);
  print_check(out, r.moments.first);
  print_check(out, r.moments.second);
  print_check(out, r.incidence_formula);
  print_check(out, r.derived_x1);
  print_check(out, r.derived_x2);
  out << "bounds:\n";
  print_check(out, r.bounds.x0);
  print_check(out, r.bounds.x1);
  for (const Check& c : r.bounds.xm) print_check(out, c);
  out << "  exact max x_0 for this q: " << r.bounds.x0_exact_max
      << (r.bounds.x0_attains_max ? " (attained)" : "") << '\n';
  out << "inequalities:\n";
  print_check(out, r.inequalities.total);
  print_check(out, r.inequalities.lower);
  print_check(out, r.inequalities.upper);
  out << "third moment: " << r.third_moment << '\n';
  out << "normalized (x_0, x_1, x_2)/q^2: (" << sig6(to_double(r.triple.x0)) << ", "
      << sig6(to_double(r.triple.x1)) << ", " << sig6(to_double(r.triple.x2)) << ")\n";
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const Field field(cfg.q);
  const auto bs = parse_intercepts(cfg.intercepts);
  const MinimalArrangement arr = MinimalArrangement::from_indices(field, bs);
  const Spectrum s = spectrum(arr);
  const IdentityReport rep = verify(s);
  if (cfg.format == "json") {
    json j = envelope("spectrum");
    j["q"] = cfg.q;
    j["intercepts"] = bs;
    j["spectrum"] = to_json(s);
    j["besicovitch_set_size"] = static_cast<std::int64_t>(s.q()) * s.q() - s[0];
    j["report"] = to_json(rep);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << identity_csv_header(s.q()) << '\n' << identity_csv_row(s, rep) << '\n';
  } else {
    print_report_table(out, s, rep);
  }
  return rep.all_pass() ? kOk : kCheckFailed;
}

struct EnumerationSummary {
  std::uint64_t count = 0;
  std::uint64_t identity_failures = 0;
  std::uint64_t inequality_failures = 0;
  std::uint64_t euler_failures = 0;
  std::int64_t max_x0 = 0;
  std::int64_t max_x1 = 0;
  std::set<std::int64_t> third_moments;
  std::uint64_t sharp_total = 0, sharp_lower = 0, sharp_upper = 0;
};

inline EnumerationSummary summarize_enumeration(const Field& field, std::uint64_t guard) {
  EnumerationSummary sum;
  for (const MinimalArrangement& arr : enumerate(field, guard)) {
    const Spectrum s = spectrum(arr);
    const IdentityReport r = verify(s);
    ++sum.count;
    if (!r.equalities_pass()) ++sum.identity_failures;
    if (!r.bounds.all_pass() || !r.inequalities.all_pass()) ++sum.inequality_failures;
    if (predict_from_field(s).euler != 2) ++sum.euler_failures;
    sum.max_x0 = std::max(sum.max_x0, s[0]);
    sum.max_x1 = std::max(sum.max_x1, s[1]);
    sum.third_moments.insert(r.third_moment);
    sum.sharp_total += r.inequalities.total.sharp();
    sum.sharp_lower += r.inequalities.lower.sharp();
    sum.sharp_upper += r.inequalities.upper.sharp();
  }
  return sum;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Field field(cfg.q);
  const EnumerationSummary sum = summarize_enumeration(field, effective_guard(cfg));
  const std::uint32_t q = field.size();
  const bool ok = sum.identity_failures == 0 && sum.inequality_failures == 0 && sum.euler_failures == 0;
  json j = envelope("enumerate");
  j["q"] = q;
  j["arrangements"] = sum.count;
  j["identity_failures"] = sum.identity_failures;
  j["inequality_failures"] = sum.inequality_failures;
  j["euler_failures"] = sum.euler_failures;
  j["max_x0"] = sum.max_x0;
  j["max_x0_expected"] = parity_max_x0(q);
  j["max_x1"] = sum.max_x1;
  j["third_moments"] = std::vector<std::int64_t>(sum.third_moments.begin(), sum.third_moments.end());
  j["inequality_sharp_counts"] = {sum.sharp_total, sum.sharp_lower, sum.sharp_upper};

  if (cfg.format == "json") {
    if (cfg.report == "summary") {
      out << j.dump(2) << '\n';
    } else {
      json sub = envelope("enumerate");
      sub["q"] = q;
      if (cfg.report == "max-x0") sub["max_x0"] = j["max_x0"];
      else if (cfg.report == "max-x1") sub["max_x1"] = j["max_x1"];
      else if (cfg.report == "third-moments") sub["third_moments"] = j["third_moments"];
      else sub["identity_failures"] = j["identity_failures"];
      out << sub.dump(2) << '\n';
    }
  } else if (cfg.format == "csv") {
    out << "q,arrangements,identity_failures,inequality_failures,euler_failures,max_x0,max_x0_expected,max_x1,distinct_third_moments\n"
        << q << ',' << sum.count << ',' << sum.identity_failures << ',' << sum.inequality_failures << ','
        << sum.euler_failures << ',' << sum.max_x0 << ',' << parity_max_x0(q) << ',' << sum.max_x1 << ','
        << sum.third_moments.size() << '\n';
  } else if (cfg.report == "max-x0") {
    out << sum.max_x0 << '\n';
  } else if (cfg.report == "max-x1") {
    out << sum.max_x1 << '\n';
  } else if (cfg.report == "third-moments") {
    for (std::int64_t v : sum.third_moments) out << v << '\n';
  } else if (cfg.report == "identities") {
    out << sum.identity_failures << '\n';
  } else {
    out << "q = " << q << ": " << sum.count << " arrangements\n"
        << "identity failures: " << sum.identity_failures << "\n"
        << "inequality failures: " << sum.inequality_failures << "\n"
        << "euler failures: " << sum.euler_failures << "\n"
        << "max x_0: " << sum.max_x0 << " (closed form " << parity_max_x0(q) << ")\n"
        << "max x_1: " << sum.max_x1 << " (q^2-1 = " << static_cast<std::int64_t>(q) * q - 1 << ")\n"
        << "distinct third moments: " << sum.third_moments.size() << "\n"
        << "inequalities attained with equality (arrangements): " << sum.sharp_total << ' ' << sum.sharp_lower
        << ' ' << sum.sharp_upper << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

inline std::uint64_t seed_or_fresh(const RunConfig& cfg, std::ostream& err) {
  if (cfg.seed) return *cfg.seed;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
  err << "seed: " << seed << '\n';
  return seed;
}

inline void write_triples(const std::string& path, const SampleStats& st) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "' for writing");
  const double q2 = static_cast<double>(st.q) * st.q;
  f << "x0,x1,x2\n" << std::setprecision(17);
  for (const auto& h : st.heads) f << h[0] / q2 << ',' << h[1] / q2 << ',' << h[2] / q2 << '\n';
}

inline int cmd_sample(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field field(cfg.q);
  SampleStats st;
  const bool dump = !cfg.dump_triples.empty();
  if (cfg.enumerate) {
    st = enumerate_stats(field, cfg.m_max, effective_guard(cfg), dump);
  } else {
    MonteCarloOptions opt;
    opt.samples = cfg.samples;
    opt.seed = seed_or_fresh(cfg, err);
    opt.m_max = cfg.m_max;
    opt.workers = cfg.workers;
    opt.keep_heads = dump;
    st = monte_carlo(field, opt);
  }
  if (dump) write_triples(cfg.dump_triples, st);
  if (cfg.format == "csv") {
    out << stats_csv(st);
  } else if (cfg.format == "table") {
    out << "q = " << st.q << ", N = " << st.samples << (st.enumerated ? " (enumerated)" : "")
        << ", seed = " << st.seed << "\n"
        << "m  mean        E(X_m)      q^2/(m!e)   rel.err     c_m\n";
    for (const MomentStats& ms : st.per_m)
      out << std::left << std::setw(3) << ms.m << std::setw(12) << sig6(to_double(ms.mean)) << std::setw(12)
          << sig6(to_double(ms.expected)) << std::setw(12) << sig6(ms.asymptotic) << std::setw(12)
          << sig6(ms.relative_error()) << sig6(ms.concentration) << '\n';
    out << "identity failures: " << st.identity_failures << ", inequality failures: " << st.inequality_failures
        << '\n';
  } else {
    json j = to_json(st);
    j["command"] = "sample";
    out << j.dump(2) << '\n';
  }
  return st.identity_failures == 0 && st.inequality_failures == 0 ? kOk : kCheckFailed;
}

inline int cmd_expect(const RunConfig& cfg, std::ostream& out) {
  const Field field(cfg.q);
  const auto rows = law_table(field.size());
  if (cfg.format == "json") {
    json j = envelope("expect");
    j["q"] = field.size();
    j["rows"] = to_json(rows, field.size());
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "q,m,probability,expected,expected_decimal,asymptotic\n";
    for (const LawRow& r : rows)
      out << field.size() << ',' << r.m << ',' << r.probability.str() << ',' << to_string(r.expected) << ','
          << to_double(r.expected) << ',' << r.asymptotic << '\n';
  } else {
    out << "m  P{M_P=m}          E(X_m)            decimal     q^2/(m!e)\n";
    for (const LawRow& r : rows)
      out << std::left << std::setw(3) << r.m << std::setw(18) << r.probability.str() << std::setw(18)
          << to_string(r.expected) << std::setw(12) << sig6(to_double(r.expected)) << sig6(r.asymptotic) << '\n';
  }
  return kOk;
}

inline int cmd_example(const RunConfig& cfg, std::ostream& out) {
  const Field field(cfg.q);
  ConstructionKind kind;
  if (cfg.kind == "concurrent") kind = ConstructionKind::Concurrent;
  else if (cfg.kind == "parabola") kind = ConstructionKind::Parabola;
  else throw ParseError("unknown kind '" + cfg.kind + "'");
  const NamedConstruction c = construct(kind, field);
  const Spectrum s = spectrum(c.arrangement);
  const IdentityReport rep = verify(s);
  const bool match = s == c.predicted;
  const auto bs = c.arrangement.intercept_indices();
  if (cfg.format == "json") {
    json j = envelope("example");
    j["kind"] = to_string(kind);
    j["q"] = field.size();
    j["intercepts"] = std::vector<std::uint32_t>(bs.begin(), bs.end());
    j["spectrum"] = to_json(s);
    j["predicted"] = to_json(c.predicted);
    j["matches_prediction"] = match;
    j["report"] = to_json(rep);
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << identity_csv_header(s.q()) << '\n' << identity_csv_row(s, rep) << '\n';
  } else {
    out << to_string(kind) << " arrangement, intercepts:";
    for (std::uint32_t b : bs) out << ' ' << b;
    out << "\npredicted x_0..x_" << s.q() + 1 << ": " << join(c.predicted.counts()) << '\n'
        << (match ? "computed spectrum matches prediction\n" : "computed spectrum DIFFERS from prediction\n");
    print_report_table(out, s, rep);
  }
  return match && rep.all_pass() ? kOk : kCheckFailed;
}

inline int cmd_bridge(const RunConfig& cfg, std::ostream& out) {
  const auto bs = parse_intercepts(cfg.intercepts);
  const std::uint64_t q = cfg.q != 0 ? cfg.q : bs.size() - 1;
  const Field field(q);
  const MinimalArrangement arr = MinimalArrangement::from_indices(field, bs);
  std::ifstream in(cfg.real_path);
  if (!in) throw ParseError("cannot open '" + cfg.real_path + "'");
  const RealArrangement real = parse_real_arrangement(in);
  const Spectrum s = spectrum(arr);
  json j = envelope("bridge");
  j["q"] = q;
  j["field_spectrum"] = to_json(s);
  j["incidence_class"] = incidence_class(s);
  const bool phi = phi_check(s, real);
  j["phi_check"] = phi;
  int code = kCheckFailed;
  if (phi) {
    const CrossValidation cv = cross_validate(s, real);
    j["cross_validation"] = to_json(cv);
    code = cv.passed() ? kOk : kCheckFailed;
  } else {
    j["real_quantities"] = to_json(real_quantities(real));
    j["error"] = "PhiMismatch: real arrangement is not in the incidence class of the field arrangement";
  }
  if (cfg.format == "table") {
    out << "q = " << q << ", phi check: " << (phi ? "ok" : "FAIL") << '\n';
    if (phi) {
      const auto& cv = j["cross_validation"];
      out << "predicted: " << cv["predicted"].dump() << "\nreal:      " << cv["real"].dump()
          << "\nf1 direct: " << cv["f1_direct"] << "\npassed: " << cv["passed"] << '\n';
    }
  } else {
    out << j.dump(2) << '\n';
  }
  return code;
}

inline json triple_json(const Spectrum& s) {
  const NormalizedTriple t = normalized_triple(s);
  return {{"exact", {to_string(t.x0), to_string(t.x1), to_string(t.x2)}},
          {"decimal", {to_double(t.x0), to_double(t.x1), to_double(t.x2)}},
          {"satisfies_inequalities", check_ze(s).all_pass()}};
}

inline int cmd_region(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field field(cfg.q);
  const std::uint32_t q = field.size();
  MonteCarloOptions opt;
  opt.samples = cfg.samples;
  opt.seed = seed_or_fresh(cfg, err);
  opt.m_max = 2;
  opt.workers = cfg.workers;
  opt.keep_heads = true;
  const SampleStats st = monte_carlo(field, opt);
  const std::int64_t qq = q;
  const double e = std::numbers::e;

  json j = envelope("region");
  j["q"] = q;
  j["seed"] = opt.seed;
  j["samples"] = json::array();
  bool ok = true;
  for (const auto& h : st.heads) {
    std::vector<std::int64_t> counts(q + 2, 0);
    counts[0] = h[0];
    counts[1] = h[1];
    counts[2] = h[2];
    // Only x_0..x_2 enter the normalized triple and the inequalities.
    const Spectrum head(q, counts);
    json t = triple_json(head);
    ok = ok && t["satisfies_inequalities"].get<bool>();
    j["samples"].push_back(std::move(t));
  }
  j["constructions"] = {{"concurrent", triple_json(spectrum(concurrent(field).arrangement))},
                        {"parabola", triple_json(spectrum(parabola(field).arrangement))}};
  j["planes_limit"] = json::array({
      {{"normal", {1, 1, 1}}, {"relation", "<="}, {"offset", 1}},
      {{"normal", {3, 0, -1}}, {"relation", "<="}, {"offset", 1}},
      {{"normal", {3, 2, 1}}, {"relation", ">="}, {"offset", 2}},
  });
  const double q2 = static_cast<double>(qq * qq);
  j["planes_exact"] = json::array({
      {{"normal", {1, 1, 1}}, {"relation", "<="}, {"offset", 1.0}},
      {{"normal", {3, 0, -1}}, {"relation", "<="}, {"offset", static_cast<double>(qq * qq - 2 * qq) / q2}},
      {{"normal", {3, 2, 1}}, {"relation", ">="}, {"offset", static_cast<double>(2 * qq * qq - qq) / q2}},
  });
  j["reference_points"] = {{"typical", {1 / e, 1 / e, 1 / (2 * e)}},
                           {"parabola_limit", {0.5, 0.0, 0.5}},
                           {"concurrent_limit", {0.0, 1.0, 0.0}}};
  if (cfg.format == "csv") {
    out << "kind,x0,x1,x2\n" << std::setprecision(17);
    for (const auto& s : j["samples"])
      out << "sample," << s["decimal"][0].get<double>() << ',' << s["decimal"][1].get<double>() << ','
          << s["decimal"][2].get<double>() << '\n';
    for (const char* k : {"concurrent", "parabola"}) {
      const auto& d = j["constructions"][k]["decimal"];
      out << k << ',' << d[0].get<double>() << ',' << d[1].get<double>() << ',' << d[2].get<double>() << '\n';
    }
    out << "typical," << 1 / e << ',' << 1 / e << ',' << 1 / (2 * e) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return ok ? kOk : kCheckFailed;
}

/// Parses argv and dispatches. Never calls exit().
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal Besicovitch arrangements over F_q: spectra, identities, laws and sampling"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string format;
  app.add_option("--format", format, "Output format: json, csv or table (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--output,-o", cfg.output, "Write output to this file instead of stdout");

  const std::string intercept_help =
      "Comma-separated canonical intercept indices: q finite slopes in canonical order, then the vertical slope";

  auto* sp = app.add_subcommand("spectrum", "Spectrum and identity report of one arrangement");
  sp->add_option("--q", cfg.q, "Field order (prime power)")->required();
  sp->add_option("--intercepts", cfg.intercepts, intercept_help)->required();

  auto* en = app.add_subcommand("enumerate", "Check every arrangement of a small field");
  en->add_option("--q", cfg.q, "Field order (prime power)")->required();
  en->add_option("--report", cfg.report, "summary, max-x0, max-x1, third-moments or identities")
      ->check(CLI::IsMember({"summary", "max-x0", "max-x1", "third-moments", "identities"}));
  en->add_option("--guard-override", cfg.guard_override, "Largest allowed number of arrangements");

  auto* sa = app.add_subcommand("sample", "Monte Carlo statistics of X_m");
  sa->add_option("--q", cfg.q, "Field order (prime power)")->default_str("101");
  sa->add_option("--samples", cfg.samples, "Number of samples")->default_str("2000");
  sa->add_option("--seed", cfg.seed, "Seed (a fresh one is printed to stderr if omitted)");
  sa->add_option("--mmax", cfg.m_max, "Largest multiplicity reported")->default_str("6");
  sa->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->default_str("0");
  sa->add_flag("--enumerate", cfg.enumerate, "Use every arrangement instead of samples");
  sa->add_option("--guard-override", cfg.guard_override, "Largest allowed number of arrangements");
  sa->add_option("--dump-triples", cfg.dump_triples, "Write per-sample (x_0, x_1, x_2)/q^2 as CSV");

  auto* ex = app.add_subcommand("expect", "Exact law of M_P and E(X_m)");
  ex->add_option("--q", cfg.q, "Field order (prime power)")->required();

  auto* ey = app.add_subcommand("example", "Named constructions and their closed-form spectra");
  ey->add_option("--kind", cfg.kind, "concurrent or parabola")->check(CLI::IsMember({"concurrent", "parabola"}));
  ey->add_option("--q", cfg.q, "Field order (prime power)")->required();

  auto* br = app.add_subcommand("bridge", "Cross-validate cell counts of a real arrangement");
  br->add_option("--field-arrangement", cfg.intercepts, intercept_help)->required();
  br->add_option("--real", cfg.real_path, "Real arrangement file, one 'a b c' (a x + b y = c) per line")
      ->required();
  br->add_option("--q", cfg.q, "Field order (default: number of intercepts - 1)");

  auto* rg = app.add_subcommand("region", "Normalized (x_0, x_1, x_2) points and the bounding planes");
  rg->add_option("--q", cfg.q, "Field order (prime power)")->required();
  rg->add_option("--samples", cfg.samples, "Number of samples")->default_str("200");
  rg->add_option("--seed", cfg.seed, "Seed (a fresh one is printed to stderr if omitted)");
  rg->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")->default_str("0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << e.what() << '\n';
    return kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  // Options share one config, so per-command defaults are applied here.
  if (cfg.command == "sample" && sa->count("--q") == 0) cfg.q = 101;
  if (cfg.command == "region" && rg->count("--samples") == 0) cfg.samples = 200;
  const bool json_default = cfg.command == "sample" || cfg.command == "bridge" || cfg.command == "region";
  cfg.format = format.empty() ? (json_default ? "json" : "table") : format;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) {
      err << "cannot open '" << cfg.output << "' for writing\n";
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (cfg.command != "bridge" && !is_prime_power(cfg.q)) make_field(cfg.q);
    if (cfg.command == "spectrum") return cmd_spectrum(cfg, *sink);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, *sink);
    if (cfg.command == "sample") return cmd_sample(cfg, *sink, err);
    if (cfg.command == "expect") return cmd_expect(cfg, *sink);
    if (cfg.command == "example") return cmd_example(cfg, *sink);
    if (cfg.command == "bridge") return cmd_bridge(cfg, *sink);
    if (cfg.command == "region") return cmd_region(cfg, *sink, err);
  } catch (const PhiMismatch& e) {
    err << e.what() << '\n';
    return kCheckFailed;
  } catch (const IdentityViolation& e) {
    err << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace besico::cli
