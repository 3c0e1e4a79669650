#include "laumon/qtoda.hpp"

#include "laumon/errors.hpp"
#include "laumon/whittaker.hpp"

namespace laumon {

using sym::Exponents;
using sym::RatFunc;

RatFunc TruncatedSeries::at(const Degree& d, int nvars) const {
  for (int x : d) {
    if (x < 0) return RatFunc(nvars);
  }
  auto it = coeffs.find(d);
  if (it == coeffs.end()) throw UsageError("degree outside the series box");
  return it->second;
}

Exponents shift_action(const VermaRing& ring, int j, const Degree& d, int sigma) {
  if (j < 1 || j > ring.n()) throw UsageError("shift index out of range");
  if (sigma != 1 && sigma != -1) throw UsageError("sigma must be +1 or -1");
  return ring.v(degree_at(d, j) - degree_at(d, j - 1)) + ring.t(j, sigma);
}

namespace {

// A reference below degree 0 is a genuine zero; above the box it is unknown.
bool reference_ok(const TruncatedSeries& s, const Degree& d) {
  for (int x : d) {
    if (x > s.box) return false;
  }
  return true;
}

TruncatedSeries empty_like(const TruncatedSeries& s) {
  TruncatedSeries r;
  r.n = s.n;
  r.box = s.box;
  return r;
}

RatFunc mono(const Exponents& e) { return RatFunc::monomial(e); }

}  // namespace

TruncatedSeries apply_G(const VermaRing& ring, const TruncatedSeries& s, int sigma) {
  const int nv = ring.nvars();
  TruncatedSeries r = empty_like(s);
  for (const auto& [d, c] : s.coeffs) {
    RatFunc diag(nv);
    for (int j = 1; j <= s.n; ++j) diag += mono(shift_action(ring, j, d, sigma).scaled(2));
    RatFunc out = diag * c;
    bool ok = s.valid.count(d) ? s.valid.at(d) : true;
    for (int j = 2; j <= s.n; ++j) {
      const Degree src = degree_shift(d, j - 1, -1);
      ok = ok && reference_ok(s, src);
      out -= mono(shift_action(ring, j, d, sigma).scaled(2)) * s.at(src, nv);
    }
    r.coeffs.emplace(d, out);
    r.valid.emplace(d, ok);
  }
  return r;
}

TruncatedSeries apply_S(const VermaRing& ring, const TruncatedSeries& s, int sigma) {
  const int nv = ring.nvars();
  TruncatedSeries r = empty_like(s);
  for (const auto& [d, c] : s.coeffs) {
    RatFunc diag(nv);
    for (int j = 1; j <= s.n; ++j) diag += mono(shift_action(ring, j, d, sigma).scaled(2));
    RatFunc out = diag * c;
    bool ok = s.valid.count(d) ? s.valid.at(d) : true;
    for (int i = 1; i <= s.n - 1; ++i) {
      // Q_i T_i T_{i+1}: the shifts act on the source degree d - e_i.
      const Degree src = degree_shift(d, i, -1);
      ok = ok && reference_ok(s, src);
      Exponents e = ring.v(-2) + shift_action(ring, i, src, sigma) + shift_action(ring, i + 1, src, sigma);
      out += mono(e) * s.at(src, nv);
    }
    r.coeffs.emplace(d, out);
    r.valid.emplace(d, ok);
  }
  return r;
}

TruncatedSeries build_I(const VermaModule& m, int box) {
  TruncatedSeries s;
  s.n = m.n();
  s.box = box;
  for (const Degree& d : box_degrees(m.n(), box)) {
    s.coeffs.emplace(d, pair_kw(m, d).first);
    s.valid.emplace(d, true);
  }
  return s;
}

TruncatedSeries build_J(const VermaModule& m, int box) {
  TruncatedSeries s;
  s.n = m.n();
  s.box = box;
  for (const Degree& d : box_degrees(m.n(), box)) {
    s.coeffs.emplace(d, rgamma_char(m, structure_sheaf_vector(m, d)));
    s.valid.emplace(d, true);
  }
  return s;
}

RatFunc toda_eigenvalue(const VermaRing& ring, int sign) {
  RatFunc r(ring.nvars());
  for (int i = 1; i <= ring.n(); ++i) r += mono(ring.t(i, 2 * sign));
  return r;
}

std::vector<CheckRecord> check_eigen(const VermaRing& ring, const TruncatedSeries& s,
                                     TodaOperator op, int sigma, int eigen_sign) {
  TruncatedSeries image = op == TodaOperator::S ? apply_S(ring, s, sigma) : apply_G(ring, s, sigma);
  const RatFunc eigen = toda_eigenvalue(ring, eigen_sign);
  std::vector<CheckRecord> out;
  for (const auto& [d, c] : image.coeffs) {
    CheckRecord rec;
    rec.name = op == TodaOperator::S ? "toda_S_eigen" : "toda_G_eigen";
    rec.detail["n"] = s.n;
    rec.detail["degree"] = d;
    rec.detail["sigma"] = sigma;
    rec.detail["eigenvalue_t_power"] = 2 * eigen_sign;
    if (!image.valid.at(d)) {
      rec.status = Status::Skipped;
      out.push_back(std::move(rec));
      continue;
    }
    RatFunc diff = c - eigen * s.coeffs.at(d);
    std::string ring_name = "free";
    if (!diff.is_zero()) {
      if (ring.impose_relation(diff).reduced().is_zero()) {
        ring_name = "t1...tn=1";
      } else {
        rec.status = Status::Fail;
        rec.witness = to_json(diff, ring.space());
      }
    }
    rec.detail["ring"] = ring_name;
    out.push_back(std::move(rec));
  }
  return out;
}

Json TodaCalibration::to_json() const {
  Json j;
  j["sigma"] = sigma;
  j["eigenvalue_t_power"] = 2 * eigen_sign;
  j["literal_passes"] = literal_passes;
  j["passes"] = passes;
  return j;
}

namespace {

bool all_free_pass(const std::vector<CheckRecord>& recs) {
  for (const auto& r : recs) {
    if (r.status == Status::Fail) return false;
    if (r.status == Status::Pass && r.detail.at("ring") != "free") return false;
  }
  return true;
}

// The sigma for which sum_j T_j^2 at degree 0 equals the eigenvalue.
int degree_zero_sigma(const VermaRing& ring, int eigen_sign) {
  int found = 0;
  for (int sigma : {1, -1}) {
    RatFunc lhs(ring.nvars());
    Degree zero(static_cast<std::size_t>(ring.n() - 1), 0);
    for (int j = 1; j <= ring.n(); ++j) lhs += mono(shift_action(ring, j, zero, sigma).scaled(2));
    if (sym::eq_exact(lhs, toda_eigenvalue(ring, eigen_sign))) {
      if (found != 0) throw DegeneracyError("degree 0 does not pin the sign");
      found = sigma;
    }
  }
  if (found == 0) throw DegeneracyError("no sign matches the eigenvalue at degree 0");
  return found;
}

}  // namespace

TodaCalibration calibrate_toda(const VermaModule& m, int box) {
  const VermaRing& ring = m.ring();
  const TruncatedSeries I = build_I(m, box);
  const TruncatedSeries J = build_J(m, box);
  TodaCalibration cal;
  for (int eigen_sign : {1, -1}) {
    const int sigma = degree_zero_sigma(ring, eigen_sign);
    bool ok = all_free_pass(check_eigen(ring, I, TodaOperator::S, sigma, eigen_sign)) &&
              all_free_pass(check_eigen(ring, J, TodaOperator::G, sigma, eigen_sign));
    if (eigen_sign == 1) cal.literal_passes = ok;
    if (ok) {
      cal.eigen_sign = eigen_sign;
      cal.sigma = sigma;
      cal.passes = true;
      return cal;
    }
  }
  cal.eigen_sign = 1;
  cal.sigma = degree_zero_sigma(ring, 1);
  return cal;
}

}  // namespace laumon
