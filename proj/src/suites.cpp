#include "laumon/suites.hpp"

#include <cstdlib>
#include <functional>
#include <map>

#include "laumon/errors.hpp"
#include "laumon/qtoda.hpp"
#include "laumon/whittaker.hpp"

namespace laumon {

using sym::RatFunc;

Json SuiteConfig::to_json() const {
  Json j;
  j["n"] = n;
  j["box"] = box;
  j["seed"] = seed;
  j["trials"] = trials;
  j["convention"] = orientation_name(orientation);
  if (i) j["i"] = *i;
  return j;
}

Budget::Budget(double seconds) {
  auto span = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(seconds));
  deadline_ = std::chrono::steady_clock::now() + span;
}

Budget Budget::from_env() {
  const char* s = std::getenv("LAUMON_TIME_BUDGET");
  if (s == nullptr || *s == '\0') return Budget();
  char* end = nullptr;
  double secs = std::strtod(s, &end);
  if (end == s || *end != '\0' || secs < 0) throw UsageError("LAUMON_TIME_BUDGET must be a number of seconds");
  return Budget(secs);
}

bool Budget::exhausted() const {
  return deadline_ && std::chrono::steady_clock::now() >= *deadline_;
}

Tally SuiteReport::tally() const {
  Tally t;
  t.add(records);
  return t;
}

namespace {

struct Context {
  const SuiteConfig& cfg;
  const Budget& budget;
  VermaModule& m;
  SuiteReport& out;

  // false once the budget is gone; later steps are not run
  bool step() {
    if (out.out_of_budget || budget.exhausted()) {
      out.out_of_budget = true;
      return false;
    }
    return true;
  }
  void add(std::vector<CheckRecord> rs) {
    for (auto& r : rs) out.records.push_back(std::move(r));
  }
  void add(CheckRecord r) { out.records.push_back(std::move(r)); }
  Truncation trunc() const { return {cfg.n, cfg.box}; }
};

CheckRecord bool_record(std::string name, bool ok, Json detail) {
  CheckRecord r;
  r.name = std::move(name);
  r.detail = std::move(detail);
  r.status = ok ? Status::Pass : Status::Fail;
  return r;
}

void suite_fixedpoints(Context& c) {
  for (const Degree& d : box_degrees(c.cfg.n, c.cfg.box)) {
    if (!c.step()) return;
    auto points = enumerate(c.cfg.n, d).size();
    auto partitions = kostant_count(c.cfg.n, d);
    Json det{{"n", c.cfg.n}, {"degree", d}, {"points", points}, {"partitions", partitions}};
    c.add(bool_record("kostant_count", points == partitions, det));
  }
}

void suite_characters(Context& c) {
  const VermaRing& ring = c.m.ring();
  for (const Degree& d : box_degrees(c.cfg.n, c.cfg.box)) {
    if (!c.step()) return;
    for (const FixedPoint& p : c.m.points(d)) {
      Character ch = tangent_char(ring, p);
      bool ok = ch == flag_tangent_oracle(ring, flag_of(p)) &&
                ch.sum_of_coeffs() == 2 * degree_total(d) && ch.coeff(ring.one()) == 0;
      Json det{{"n", c.cfg.n}, {"point", to_json(p)}, {"dimension", ch.sum_of_coeffs().get_si()}};
      c.add(bool_record("tangent_oracle", ok, det));
      for (int i = 1; i < c.cfg.n; ++i) {
        for (const auto& up : raise(p, i)) {
          Character cc = corr_tangent_char(ring, p, up.point);
          bool cok = cc == flag_tangent_oracle(ring, correspondence_flag(p, up.point)) &&
                     cc.sum_of_coeffs() == 2 * degree_total(d) + 1 && cc.coeff(ring.one()) == 0;
          bool cocycle =
              det_rgamma_weight(ring, p) - det_rgamma_weight(ring, up.point) ==
              corr_line_weight(ring, p, up.point);
          Json cdet{{"n", c.cfg.n},
                    {"i", i},
                    {"j", up.column},
                    {"point", to_json(p)},
                    {"dimension", cc.sum_of_coeffs().get_si()}};
          c.add(bool_record("correspondence_oracle", cok, cdet));
          c.add(bool_record("det_cocycle", cocycle,
                            Json{{"n", c.cfg.n}, {"i", i}, {"j", up.column}, {"point", to_json(p)}}));
        }
      }
    }
  }
}

void suite_two_path(Context& c) {
  for (const Degree& d : box_degrees(c.cfg.n, c.cfg.box)) {
    if (!c.step()) return;
    c.add(two_path_check(c.m, {d}));
  }
}

void suite_relations(Context& c) {
  for (const Relation& rel : quantum_group_relations(c.m)) {
    if (!c.step()) return;
    c.add(verify_relation(c.m, rel, c.trunc()));
  }
}

void suite_diagonality(Context& c) {
  for (int i = 1; i < c.cfg.n; ++i) {
    if (!c.step()) return;
    c.add(diagonality_check(c.m, i, c.trunc()));
  }
}

void suite_mrak(Context& c) {
  const int n = c.cfg.n;
  if (c.cfg.i && (*c.cfg.i < 1 || *c.cfg.i > n - 1)) throw UsageError("--i out of range");
  const int max_entry = std::max(c.cfg.box, 1);
  for (int i = 1; i < n; ++i) {
    if (c.cfg.i && *c.cfg.i != i) continue;
    if (!c.step()) return;
    // original variables: exact, on `trials` random admissible rows
    for (int t = 0; t < c.cfg.trials; ++t) {
      std::uint64_t seed = c.cfg.seed + static_cast<std::uint64_t>(t);
      MrakRows rows = random_mrak_rows(n, i, max_entry, seed);
      auto [lhs, rhs] = mrak_sides(c.m.ring(), i, rows);
      Json det{{"n", n}, {"i", i}, {"seed", seed}, {"above", rows.above},
               {"row", rows.row}, {"below", rows.below}, {"method", "exact"}};
      c.add(bool_record("mrak_identity", sym::eq_exact(lhs, rhs), det));
    }
    if (!c.step()) return;
    Json det{{"i", i}};
    if (i <= 2) {
      auto [lhs, rhs] = mrak_substituted_sides(i);
      det["method"] = "exact";
      c.add(bool_record("mrak_substituted", sym::eq_exact(lhs, rhs), det));
    } else {
      MrakTerms terms = mrak_substituted_terms(i);
      sym::RandomIdentityOptions o;
      o.trials = c.cfg.trials;
      o.seed = c.cfg.seed;
      det["method"] = "random";
      det["trials"] = c.cfg.trials;
      det["seed"] = c.cfg.seed;
      c.add(bool_record("mrak_substituted",
                        sym::eq_random(terms.lhs, terms.rhs, mrak_substituted_space(i), o), det));
    }
  }
}

void suite_shapovalov(Context& c) {
  if (!c.step()) return;
  c.add(shapovalov_checks(c.m, c.trunc()));
}

void suite_whittaker(Context& c) {
  if (!c.step()) return;
  c.add(whittaker_checks(c.m, c.trunc()));
  for (int i = 1; i <= 4; ++i) {
    if (!c.step()) return;
    c.add(bool_record("partial_fractions", partial_fraction_identity(i), Json{{"i", i}}));
  }
}

void suite_pairing(Context& c) {
  for (const Degree& d : box_degrees(c.cfg.n, c.cfg.box)) {
    if (!c.step()) return;
    c.add(kw_checks(c.m, {d}));
  }
}

void suite_toda(Context& c) {
  if (!c.step()) return;
  TodaCalibration cal = calibrate_toda(c.m, c.cfg.box);
  Json j{{"calibration", cal.to_json()}};
  j["calibration"]["n"] = c.cfg.n;
  j["calibration"]["box"] = c.cfg.box;
  c.out.data.push_back(j);
  const VermaRing& ring = c.m.ring();
  if (!c.step()) return;
  c.add(check_eigen(ring, build_I(c.m, c.cfg.box), TodaOperator::S, cal.sigma, cal.eigen_sign));
  if (!c.step()) return;
  c.add(check_eigen(ring, build_J(c.m, c.cfg.box), TodaOperator::G, cal.sigma, cal.eigen_sign));
}

using SuiteFn = std::function<void(Context&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"fixedpoints", suite_fixedpoints}, {"characters", suite_characters},
      {"two_path", suite_two_path},       {"relations", suite_relations},
      {"diagonality", suite_diagonality}, {"mrak", suite_mrak},
      {"shapovalov", suite_shapovalov},   {"whittaker", suite_whittaker},
      {"pairing", suite_pairing},         {"toda", suite_toda},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"full"};
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg, const Budget& budget) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.box < 0) throw UsageError("--box must be nonnegative");
  if (cfg.trials < 1) throw UsageError("--trials must be positive");
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == name;
  if (!known) throw UsageError("unknown suite: " + name);

  VermaModule m(cfg.n, cfg.orientation);
  SuiteReport out;
  Context c{cfg, budget, m, out};
  for (const auto& [sname, fn] : registry()) {
    if (name != "full" && name != sname) continue;
    fn(c);
    if (out.out_of_budget) break;
  }
  return out;
}

}  // namespace laumon
