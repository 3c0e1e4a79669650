// Command-line front end: every record is one JSON line, followed by a
// summary object. Exit codes: 0 pass, 1 fail, 2 usage, 3 time budget.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "laumon/errors.hpp"
#include "laumon/qtoda.hpp"
#include "laumon/suites.hpp"
#include "laumon/whittaker.hpp"

using namespace laumon;
using sym::RatFunc;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

Degree parse_degree(const std::string& s, int n) {
  Degree d;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int x = std::stoi(item, &used);
      if (used != item.size()) throw UsageError("bad degree entry: " + item);
      d.push_back(x);
    } catch (const std::logic_error&) {
      throw UsageError("bad degree entry: '" + item + "'");
    }
  }
  if (n < 2) throw UsageError("--n must be at least 2");
  check_degree(n, d);
  return d;
}

struct Output {
  std::vector<Json> lines;
  Tally tally;
  bool out_of_budget = false;

  void record(const CheckRecord& r) {
    lines.push_back(to_json(r));
    tally.add(r);
  }
  void records(const std::vector<CheckRecord>& rs) {
    for (const auto& r : rs) record(r);
  }
  int finish(const std::string& command, Json config, const std::string& path) {
    const char* status = out_of_budget ? "budget-exceeded" : tally.ok() ? "pass" : "fail";
    Json s;
    s["tool"] = "laumon";
    s["version"] = kVersion;
    s["command"] = command;
    s["config"] = std::move(config);
    s["pass"] = tally.pass;
    s["fail"] = tally.fail;
    s["skipped"] = tally.skipped;
    s["status"] = status;
    lines.push_back(Json{{"summary", s}});
    std::ofstream file;
    if (!path.empty()) {
      file.open(path);
      if (!file) throw UsageError("cannot open --out file: " + path);
    }
    std::ostream& os = path.empty() ? std::cout : file;
    for (const auto& j : lines) os << dump_line(j) << '\n';
    if (out_of_budget) return kBudget;
    return tally.ok() ? kPass : kFail;
  }
};

CheckRecord bool_record(std::string name, bool ok, Json detail, Json witness = nullptr) {
  CheckRecord r;
  r.name = std::move(name);
  r.status = ok ? Status::Pass : Status::Fail;
  r.detail = std::move(detail);
  if (!ok) r.witness = std::move(witness);
  return r;
}

struct Args {
  int n = 2;
  std::string degree;
  int box = 2;
  std::uint64_t seed = 1;
  int trials = 5;
  std::string convention = "A";
  std::string suite = "full";
  std::string out;
  int i = 0;
  std::string series = "I";
  std::string op = "S";
};

Json base_config(const Args& a) {
  return Json{{"n", a.n}, {"convention", a.convention}};
}

int cmd_enumerate(const Args& a) {
  Degree d = parse_degree(a.degree, a.n);
  Output out;
  auto pts = enumerate(a.n, d);
  for (const auto& p : pts) out.lines.push_back(Json{{"fixed_point", to_json(p)}});
  auto partitions = kostant_count(a.n, d);
  out.record(bool_record("kostant_count", pts.size() == partitions,
                         Json{{"n", a.n}, {"degree", d}, {"points", pts.size()}, {"partitions", partitions}}));
  Json cfg{{"n", a.n}, {"degree", d}};
  return out.finish("enumerate", cfg, a.out);
}

int cmd_characters(const Args& a) {
  Degree d = parse_degree(a.degree, a.n);
  Orientation o = parse_orientation(a.convention);
  VermaModule m(a.n, o);
  const VermaRing& ring = m.ring();
  Output out;
  for (const auto& p : m.points(d)) {
    Character c = tangent_char(ring, p);
    Character oracle = flag_tangent_oracle(ring, flag_of(p));
    long dim = c.sum_of_coeffs().get_si();
    out.record(bool_record("tangent_oracle", c == oracle && dim == 2 * degree_total(d),
                           Json{{"n", a.n}, {"point", to_json(p)}, {"dimension", dim},
                                {"character", to_json(c, ring.space())},
                                {"sym_chi", to_json(m.sym_chi(p), ring.space())}},
                           Json{{"oracle", to_json(oracle, ring.space())}}));
    for (int i = 1; i < a.n; ++i) {
      for (const auto& up : raise(p, i)) {
        Character cc = corr_tangent_char(ring, p, up.point);
        Character co = flag_tangent_oracle(ring, correspondence_flag(p, up.point));
        long cdim = cc.sum_of_coeffs().get_si();
        Json lw = to_json(ring.poly(corr_line_weight(ring, p, up.point)), ring.space());
        out.record(bool_record("correspondence_oracle", cc == co && cdim == 2 * degree_total(d) + 1,
                               Json{{"n", a.n}, {"i", i}, {"j", up.column}, {"point", to_json(p)},
                                    {"raised", to_json(up.point)}, {"dimension", cdim},
                                    {"character", to_json(cc, ring.space())}, {"line_weight", lw}},
                               Json{{"oracle", to_json(co, ring.space())}}));
      }
    }
  }
  Json cfg = base_config(a);
  cfg["degree"] = d;
  return out.finish("characters", cfg, a.out);
}

int cmd_verify(const Args& a) {
  SuiteConfig cfg;
  cfg.n = a.n;
  cfg.box = a.box;
  cfg.seed = a.seed;
  cfg.trials = a.trials;
  cfg.orientation = parse_orientation(a.convention);
  if (a.i != 0) cfg.i = a.i;
  SuiteReport rep = run_suite(a.suite, cfg, Budget::from_env());
  Output out;
  for (const auto& j : rep.data) out.lines.push_back(j);
  out.records(rep.records);
  out.out_of_budget = rep.out_of_budget;
  Json c = cfg.to_json();
  c["suite"] = a.suite;
  return out.finish("verify", c, a.out);
}

int cmd_whittaker(const Args& a) {
  Degree d = parse_degree(a.degree, a.n);
  VermaModule m(a.n, parse_orientation(a.convention));
  const VermaRing& ring = m.ring();
  const auto& vs = ring.space();
  Output out;
  ModuleVector k = whittaker_k(m, d);
  ModuleVector w = whittaker_w(m, d);
  auto [pairing, via_rgamma] = pair_kw(m, d);
  RatFunc rg = rgamma_char(m, structure_sheaf_vector(m, d));
  out.lines.push_back(Json{{"k", to_json(k, vs)},
                           {"w", to_json(w, vs)},
                           {"pairing", to_json(pairing, vs)},
                           {"rgamma", to_json(rg, vs)}});
  out.record(bool_record("whittaker_pairing", sym::eq_exact(pairing, via_rgamma),
                         Json{{"n", a.n}, {"degree", d}},
                         Json{{"difference", to_json(pairing - via_rgamma, vs)}}));
  Truncation tr{a.n, *std::max_element(d.begin(), d.end())};
  const RatFunc eigen = RatFunc::one_minus_inverse(ring.v(2));
  for (int i = 1; i < a.n; ++i) {
    Degree lower = degree_shift(d, i, -1);
    if (degree_at(lower, i) < 0) continue;
    Json det{{"n", a.n}, {"i", i}, {"degree", d}};
    ModuleVector fk = apply(m.op_f(i), k, tr);
    out.record(bool_record("whittaker_k_eigen", vectors_equal(fk, whittaker_k(m, lower).scaled(eigen)), det));
    ModuleVector ew = apply(op_e_star(m, i), w, tr);
    out.record(bool_record("whittaker_w_eigen", vectors_equal(ew, whittaker_w(m, lower).scaled(eigen)), det));
  }
  Json cfg = base_config(a);
  cfg["degree"] = d;
  return out.finish("whittaker", cfg, a.out);
}

int cmd_toda(const Args& a) {
  if (a.n < 2) throw UsageError("--n must be at least 2");
  if (a.box < 0) throw UsageError("--box must be nonnegative");
  if (a.series != "I" && a.series != "J") throw UsageError("--series must be I or J");
  if (a.op != "S" && a.op != "G") throw UsageError("--operator must be S or G");
  VermaModule m(a.n, parse_orientation(a.convention));
  const VermaRing& ring = m.ring();
  Budget budget = Budget::from_env();
  Output out;
  Json cfg = base_config(a);
  cfg["box"] = a.box;
  cfg["series"] = a.series;
  cfg["operator"] = a.op;
  TodaCalibration cal = calibrate_toda(m, a.box);
  out.lines.push_back(Json{{"calibration", cal.to_json()}});
  if (budget.exhausted()) {
    out.out_of_budget = true;
    return out.finish("toda", cfg, a.out);
  }
  TruncatedSeries s = a.series == "I" ? build_I(m, a.box) : build_J(m, a.box);
  Json table = Json::array();
  for (const auto& [d, c] : s.coeffs) table.push_back(Json{{"degree", d}, {"value", to_json(c, ring.space())}});
  out.lines.push_back(Json{{"coefficients", table}});
  TodaOperator op = a.op == "S" ? TodaOperator::S : TodaOperator::G;
  out.records(check_eigen(ring, s, op, cal.sigma, cal.eigen_sign));
  return out.finish("toda", cfg, a.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laumon spaces: fixed points, U_v(sl_n) action, Whittaker vectors, q-Toda checks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Args a;
  std::string suites;
  for (const auto& s : suite_names()) suites += (suites.empty() ? "" : "|") + s;

  auto common = [&](CLI::App* c) {
    c->add_option("--n", a.n, "rank n of sl_n (n >= 2)")->required();
    c->add_option("--convention", a.convention, "localization orientation")
        ->check(CLI::IsMember({"A", "B"}));
    c->add_option("--out", a.out, "write the report here instead of stdout");
  };
  auto* en = app.add_subcommand("enumerate", "list fixed points of one degree");
  common(en);
  en->add_option("--degree", a.degree, "comma separated d_1,...,d_{n-1}")->required();
  auto* ch = app.add_subcommand("characters", "tangent characters against the Hom oracle");
  common(ch);
  ch->add_option("--degree", a.degree, "comma separated d_1,...,d_{n-1}")->required();
  auto* ve = app.add_subcommand("verify", "run a verification suite on a degree box");
  common(ve);
  ve->add_option("--suite", a.suite, suites)->check(CLI::IsMember(suite_names()));
  ve->add_option("--box", a.box, "componentwise degree cap");
  ve->add_option("--seed", a.seed, "seed for randomized identity tests");
  ve->add_option("--trials", a.trials, "random trials per randomized check");
  ve->add_option("--i", a.i, "restrict index-dependent suites to one root");
  auto* wh = app.add_subcommand("whittaker", "Whittaker components and their pairing at one degree");
  common(wh);
  wh->add_option("--degree", a.degree, "comma separated d_1,...,d_{n-1}")->required();
  auto* to = app.add_subcommand("toda", "q-Toda eigen-equations on a degree box");
  common(to);
  to->add_option("--box", a.box, "componentwise degree cap");
  to->add_option("--series", a.series, "I (Whittaker pairing) or J (R Gamma)")
      ->check(CLI::IsMember({"I", "J"}));
  to->add_option("--operator", a.op, "S or G")->check(CLI::IsMember({"S", "G"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }
  try {
    if (en->parsed()) return cmd_enumerate(a);
    if (ch->parsed()) return cmd_characters(a);
    if (ve->parsed()) return cmd_verify(a);
    if (wh->parsed()) return cmd_whittaker(a);
    return cmd_toda(a);
  } catch (const UsageError& e) {
    std::cerr << "laumon: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "laumon: " << e.what() << '\n';
    return kFail;
  }
}
