#include "laumon/whittaker.hpp"

#include "laumon/errors.hpp"

namespace laumon {

using sym::Exponents;
using sym::LaurentPoly;
using sym::RatFunc;

namespace {

int sum_sq(const Degree& d) {
  int s = 0;
  for (int x : d) s += x * x;
  return s;
}

Json point_witness(const VermaRing& ring, const FixedPoint& p, const RatFunc& value) {
  Json w;
  w["point"] = to_json(p);
  w["value"] = to_json(value, ring.space());
  return w;
}

// First coefficient where a and b differ, or nullopt.
std::optional<std::pair<FixedPoint, RatFunc>> first_difference(const ModuleVector& a,
                                                               const ModuleVector& b,
                                                               int nvars) {
  ModuleVector diff(a.empty() ? b.degree() : a.degree(), nvars);
  if (!a.empty()) diff.add(a, RatFunc::constant(nvars, 1));
  if (!b.empty()) diff.add(b, RatFunc::constant(nvars, -1));
  diff.prune();
  if (diff.empty()) return std::nullopt;
  return *diff.coeffs().begin();
}

CheckRecord record(const std::string& name, const VermaModule& m, const Degree& d) {
  CheckRecord rec;
  rec.name = name;
  rec.detail["n"] = m.n();
  rec.detail["degree"] = d;
  return rec;
}

// det R Gamma weight relative to the lowest point, whose fiber is
// normalized to the trivial character.
Exponents relative_det(const VermaRing& ring, const FixedPoint& p) {
  return det_rgamma_weight(ring, p) - det_rgamma_weight(ring, FixedPoint::zero(ring.n()));
}

}  // namespace

RatFunc shapovalov_prefactor(const VermaRing& ring, const Degree& d) {
  const int n = ring.n();
  int ve = 0;
  for (int i = 1; i <= n - 1; ++i) ve += 2 * i * degree_at(d, i) * degree_at(d, i);
  for (int i = 2; i <= n - 1; ++i) ve -= (2 * i - 1) * degree_at(d, i) * degree_at(d, i - 1);
  Exponents e = ring.v(ve);
  for (int i = 1; i <= n; ++i) e += ring.t(i, (2 * i - 1) * (degree_at(d, i - 1) - degree_at(d, i)));
  return RatFunc::monomial(e, degree_total(d) % 2 == 0 ? 1 : -1);
}

RatFunc shapovalov_diagonal(const VermaModule& m, const FixedPoint& p) {
  const VermaRing& ring = m.ring();
  return shapovalov_prefactor(ring, p.degree()) * RatFunc::monomial(relative_det(ring, p)) /
         m.sym_chi(p);
}

RatFunc shapovalov_pair(const VermaModule& m, const ModuleVector& x, const ModuleVector& y) {
  RatFunc r(m.ring().nvars());
  if (x.degree() != y.degree()) return r;
  for (const auto& [p, c] : x.coeffs()) {
    auto it = y.coeffs().find(p);
    if (it == y.coeffs().end()) continue;
    r += c * it->second * shapovalov_diagonal(m, p);
  }
  return r;
}

ModuleVector structure_sheaf_vector(const VermaModule& m, const Degree& d) {
  ModuleVector x(d, m.ring().nvars());
  for (const FixedPoint& p : m.points(d)) x.add(p, m.sym_chi(p));
  return x;
}

RatFunc rgamma_char(const VermaModule& m, const ModuleVector& x) {
  RatFunc r(m.ring().nvars());
  for (const auto& [p, c] : x.coeffs()) r += c;
  return r;
}

ModuleVector whittaker_k(const VermaModule& m, const Degree& d) {
  return structure_sheaf_vector(m, d);
}

RatFunc whittaker_w_prefactor(const VermaRing& ring, const Degree& d) {
  const int n = ring.n();
  int ve = -degree_total(d);
  for (int i = 1; i <= n - 1; ++i) ve += (1 - 2 * i) * degree_at(d, i) * degree_at(d, i);
  for (int i = 2; i <= n - 1; ++i) ve -= (2 - 2 * i) * degree_at(d, i) * degree_at(d, i - 1);
  Exponents e = ring.v(ve);
  for (int i = 1; i <= n; ++i) e += ring.t(i, (2 - 2 * i) * (degree_at(d, i - 1) - degree_at(d, i)));
  return RatFunc::monomial(e);
}

ModuleVector whittaker_w(const VermaModule& m, const Degree& d) {
  const VermaRing& ring = m.ring();
  RatFunc pre = whittaker_w_prefactor(ring, d);
  ModuleVector x(d, ring.nvars());
  for (const FixedPoint& p : m.points(d)) {
    x.add(p, pre * m.sym_chi(p) * RatFunc::monomial(-relative_det(ring, p)));
  }
  return x;
}

RatFunc kw_prefactor(const VermaRing& ring, const Degree& d) {
  const int n = ring.n();
  int ve = sum_sq(d) - degree_total(d);
  for (int i = 2; i <= n - 1; ++i) ve -= degree_at(d, i) * degree_at(d, i - 1);
  Exponents e = ring.v(ve);
  for (int i = 1; i <= n; ++i) e += ring.t(i, degree_at(d, i - 1) - degree_at(d, i));
  return RatFunc::monomial(e, degree_total(d) % 2 == 0 ? 1 : -1);
}

std::pair<RatFunc, RatFunc> pair_kw(const VermaModule& m, const Degree& d) {
  RatFunc lhs = shapovalov_pair(m, whittaker_k(m, d), whittaker_w(m, d));
  RatFunc rhs = kw_prefactor(m.ring(), d) * rgamma_char(m, structure_sheaf_vector(m, d));
  return {lhs, rhs};
}

GradedOperator op_e_adjoint(const VermaModule& m, int i) {
  GradedOperator e = m.op_e(i);
  GradedOperator op;
  op.label = "e" + std::to_string(i) + "*";
  op.nvars = m.ring().nvars();
  op.shift = degree_shift(Degree(static_cast<std::size_t>(m.n() - 1), 0), i, -1);
  op.column = [&m, i, e](const FixedPoint& y) {
    GradedOperator::Column col;
    for (const auto& a : lower(y, i)) {
      RatFunc c = e.entry(y, a.point) * shapovalov_diagonal(m, y) / shapovalov_diagonal(m, a.point);
      col.emplace_back(a.point, c);
    }
    return col;
  };
  return op;
}

GradedOperator op_e_star(const VermaModule& m, int i) {
  GradedOperator f = m.op_f(i);
  GradedOperator op;
  op.label = "K" + std::to_string(i) + "^" + std::to_string(2 * i) + "f" + std::to_string(i);
  op.nvars = m.ring().nvars();
  op.shift = f.shift;
  op.column = [&m, i, f](const FixedPoint& y) {
    RatFunc k = RatFunc::monomial(m.k_scalar(i, degree_shift(y.degree(), i, -1)).scaled(2 * i));
    GradedOperator::Column col = f.column(y);
    for (auto& [q, c] : col) c *= k;
    return col;
  };
  return op;
}

ModuleVector pushforward_line(const VermaModule& m, int i, const Degree& d) {
  const VermaRing& ring = m.ring();
  ModuleVector x(d, ring.nvars());
  for (const FixedPoint& p : m.points(d)) {
    for (const auto& a : raise(p, i)) {
      x.add(p, RatFunc::monomial(corr_line_weight(ring, p, a.point)) * m.sym_chi_corr(p, a.point));
    }
  }
  return x;
}

bool partial_fraction_identity(int i) {
  if (i < 1) throw UsageError("identity needs i >= 1");
  const int nv = 2 * i - 1;
  auto var = [nv](int slot) { return LaurentPoly::monomial(Exponents::unit(nv, slot)); };
  auto s = [&](int j) { return var(j - 1); };
  auto p = [&](int k) { return var(i + k - 1); };
  RatFunc total(nv);
  for (int j = 1; j <= i; ++j) {
    RatFunc term = RatFunc::constant(nv, 1);
    for (int k = 1; k < i; ++k) term *= RatFunc(p(k) - s(j));
    for (int k = 1; k <= i; ++k) {
      if (k != j) term /= RatFunc(s(k) - s(j));
    }
    total += term;
  }
  return sym::eq_exact(total, RatFunc::constant(nv, 1));
}

std::vector<CheckRecord> shapovalov_checks(const VermaModule& m, const Truncation& tr) {
  const VermaRing& ring = m.ring();
  const int nv = ring.nvars();
  std::vector<CheckRecord> out;
  {
    Degree zero(static_cast<std::size_t>(m.n() - 1), 0);
    CheckRecord rec = record("shapovalov_normalization", m, zero);
    ModuleVector x = ModuleVector::basis(FixedPoint::zero(m.n()), nv);
    RatFunc val = shapovalov_pair(m, x, x);
    if (!sym::eq_exact(val, ring.constant(1))) {
      rec.status = Status::Fail;
      rec.witness = to_json(val, ring.space());
    }
    out.push_back(std::move(rec));
  }
  for (int i = 1; i <= m.n() - 1; ++i) {
    GradedOperator e = m.op_E(i);
    GradedOperator f = m.op_F(i);
    for (const Degree& d : box_degrees(m.n(), tr.box)) {
      CheckRecord rec = record("shapovalov_adjoint", m, d);
      rec.detail["i"] = i;
      const Degree up = degree_shift(d, i, 1);
      if (!tr.contains(up)) {
        rec.status = Status::Skipped;
        out.push_back(std::move(rec));
        continue;
      }
      int pairs = 0;
      for (const FixedPoint& px : m.points(d)) {
        ModuleVector x = ModuleVector::basis(px, nv);
        ModuleVector ex = apply(e, x, tr);
        for (const FixedPoint& py : m.points(up)) {
          ++pairs;
          ModuleVector y = ModuleVector::basis(py, nv);
          RatFunc lhs = shapovalov_pair(m, ex, y);
          RatFunc rhs = shapovalov_pair(m, x, apply(f, y, tr));
          if (!sym::eq_exact(lhs, rhs)) {
            rec.status = Status::Fail;
            rec.witness = point_witness(ring, px, lhs - rhs);
            rec.witness["partner"] = to_json(py);
            break;
          }
        }
        if (rec.status == Status::Fail) break;
      }
      rec.detail["pairs"] = pairs;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<CheckRecord> whittaker_checks(const VermaModule& m, const Truncation& tr) {
  const VermaRing& ring = m.ring();
  const int nv = ring.nvars();
  const RatFunc eigen = RatFunc::one_minus_inverse(ring.v(2));
  std::vector<CheckRecord> out;
  auto compare = [&](CheckRecord& rec, const ModuleVector& a, const ModuleVector& b) {
    if (auto diff = first_difference(a, b, nv)) {
      rec.status = Status::Fail;
      rec.witness = point_witness(ring, diff->first, diff->second);
    }
  };
  {
    Degree zero(static_cast<std::size_t>(m.n() - 1), 0);
    CheckRecord rec = record("whittaker_lowest", m, zero);
    ModuleVector base = ModuleVector::basis(FixedPoint::zero(m.n()), nv);
    compare(rec, whittaker_k(m, zero), base);
    if (rec.status == Status::Pass) compare(rec, whittaker_w(m, zero), base);
    out.push_back(std::move(rec));
  }
  for (int i = 1; i <= m.n() - 1; ++i) {
    GradedOperator f = m.op_f(i);
    GradedOperator e_star = op_e_star(m, i);
    GradedOperator e_adj = op_e_adjoint(m, i);
    for (const Degree& d : box_degrees(m.n(), tr.box)) {
      const Degree up = degree_shift(d, i, 1);
      const bool inside = tr.contains(up);
      CheckRecord fk = record("whittaker_k_eigen", m, d);
      fk.detail["i"] = i;
      CheckRecord ew = record("whittaker_w_eigen", m, d);
      ew.detail["i"] = i;
      CheckRecord adj = record("e_star_adjoint", m, d);
      adj.detail["i"] = i;
      if (inside) {
        compare(fk, apply(f, whittaker_k(m, up), tr), whittaker_k(m, d).scaled(eigen));
        compare(ew, apply(e_star, whittaker_w(m, up), tr), whittaker_w(m, d).scaled(eigen));
        for (const FixedPoint& p : m.points(up)) {
          ModuleVector y = ModuleVector::basis(p, nv);
          compare(adj, apply(e_adj, y, tr), apply(e_star, y, tr));
          if (adj.status == Status::Fail) break;
        }
      } else {
        fk.status = ew.status = adj.status = Status::Skipped;
      }
      out.push_back(std::move(fk));
      out.push_back(std::move(ew));
      out.push_back(std::move(adj));

      // p_*[L_i] = t_i^2 v^{2 d_{i-1} - 2 d_i} (1 - v^2)^{-1} [O_d]
      CheckRecord zh = record("pushforward_line", m, d);
      zh.detail["i"] = i;
      RatFunc scale = RatFunc::monomial(ring.t(i, 2) +
                                        ring.v(2 * degree_at(d, i - 1) - 2 * degree_at(d, i))) *
                      eigen;
      compare(zh, pushforward_line(m, i, d), structure_sheaf_vector(m, d).scaled(scale));
      out.push_back(std::move(zh));
    }
  }
  return out;
}

std::vector<CheckRecord> kw_checks(const VermaModule& m, const std::vector<Degree>& degrees) {
  std::vector<CheckRecord> out;
  for (const Degree& d : degrees) {
    CheckRecord rec = record("whittaker_pairing", m, d);
    auto [lhs, rhs] = pair_kw(m, d);
    if (!sym::eq_exact(lhs, rhs)) {
      rec.status = Status::Fail;
      rec.witness = to_json(lhs - rhs, m.ring().space());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace laumon
