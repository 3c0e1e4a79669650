#include "laumon/umodule.hpp"

#include "laumon/errors.hpp"

namespace laumon {

using sym::Exponents;
using sym::LaurentPoly;
using sym::RatFunc;

bool Truncation::contains(const Degree& d) const {
  for (int x : d) {
    if (x > box) return false;
  }
  return true;
}

ModuleVector ModuleVector::basis(const FixedPoint& p, int nvars) {
  ModuleVector x(p.degree(), nvars);
  x.add(p, RatFunc::constant(nvars, 1));
  return x;
}

RatFunc ModuleVector::at(const FixedPoint& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? RatFunc(nvars_) : it->second;
}

void ModuleVector::add(const FixedPoint& p, const RatFunc& c) {
  if (p.degree() != degree_) throw UsageError("basis vector of the wrong degree");
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs_.emplace(p, c);
  if (!fresh) it->second += c;
}

void ModuleVector::add(const ModuleVector& o, const RatFunc& scale) {
  if (o.degree_ != degree_) throw UsageError("adding vectors of different degrees");
  for (const auto& [p, c] : o.coeffs_) add(p, c * scale);
}

ModuleVector ModuleVector::scaled(const RatFunc& c) const {
  ModuleVector r(degree_, nvars_);
  r.add(*this, c);
  return r;
}

void ModuleVector::prune() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
}

Json to_json(const ModuleVector& x, const sym::VarSpace& vs) {
  Json j;
  j["degree"] = to_json(x.degree());
  j["coeffs"] = Json::array();
  for (const auto& [p, c] : x.coeffs()) {
    j["coeffs"].push_back(Json{{"point", to_json(p)}, {"value", to_json(c, vs)}});
  }
  return j;
}

bool vectors_equal(const ModuleVector& a, const ModuleVector& b) {
  if (a.empty() && b.empty()) return true;
  if (a.degree() != b.degree()) return false;
  ModuleVector diff = a;
  diff.add(b, RatFunc::constant(a.nvars() ? a.nvars() : b.nvars(), -1));
  diff.prune();
  return diff.empty();
}

RatFunc GradedOperator::entry(const FixedPoint& target, const FixedPoint& source) const {
  for (const auto& [q, c] : column(source)) {
    if (q == target) return c;
  }
  return RatFunc(nvars);
}

ModuleVector apply(const GradedOperator& op, const ModuleVector& x, const Truncation& tr) {
  Degree target = x.degree();
  for (std::size_t k = 0; k < target.size(); ++k) target[k] += op.shift[k];
  ModuleVector out(target, x.nvars());
  if (!tr.contains(target)) return out;
  for (const auto& [p, c] : x.coeffs()) {
    for (const auto& [q, e] : op.column(p)) out.add(q, e * c);
  }
  out.prune();
  return out;
}

int sevostyanov_c(int n, int i, int j) {
  auto nmat = [n](int a, int b) {
    if (a < 1 || b < 1 || a > n - 1 || b > n - 1) return 0;
    if (a == b) return -2 * a;
    if (b == a + 1 || b == a - 1) return a;
    return 0;
  };
  return nmat(i, j) - nmat(j, i);
}

namespace {

// 1 - m as a tracked factor, or zero when m is trivial.
RatFunc binom(const Exponents& m) {
  if (m.is_zero()) return RatFunc(m.size());
  return RatFunc::one_minus(m);
}

}  // namespace

VermaModule::VermaModule(int n, Orientation o) : ring_(n), orientation_(o) {
  if (n < 2) throw UsageError("rank must be at least 2");
}

void VermaModule::check_index(int i, int lo, int hi) const {
  if (i < lo || i > hi) throw UsageError("operator index out of range");
}

const std::vector<FixedPoint>& VermaModule::points(const Degree& d) const {
  auto it = points_.find(d);
  if (it != points_.end()) return it->second;
  std::vector<FixedPoint> pts;
  bool negative = false;
  for (int x : d) negative = negative || x < 0;
  if (!negative) pts = enumerate(n(), d);
  return points_.emplace(d, std::move(pts)).first->second;
}

const RatFunc& VermaModule::sym_chi(const FixedPoint& p) const {
  auto it = sym_chi_.find(p);
  if (it != sym_chi_.end()) return it->second;
  return sym_chi_.emplace(p, sym_inverse(tangent_char(ring_, p), orientation_)).first->second;
}

RatFunc VermaModule::sym_chi_corr(const FixedPoint& p_small, const FixedPoint& p_big) const {
  return sym_inverse(corr_tangent_char(ring_, p_small, p_big), orientation_);
}

Exponents VermaModule::k_scalar(int i, const Degree& d) const {
  check_index(i, 1, n() - 1);
  return ring_.t(i + 1) + ring_.t(i, -1) +
         ring_.v(2 * degree_at(d, i) - degree_at(d, i - 1) - degree_at(d, i + 1) + 1);
}

Exponents VermaModule::l_scalar(int i, const Degree& d) const {
  check_index(i, 0, n());
  Exponents e = ring_.v_half(2 * degree_at(d, i) + i * (n() - i));
  for (int k = 1; k <= i; ++k) e += ring_.t(k, -1);
  return e;
}

namespace {

Exponents e_prefactor(const VermaRing& ring, int i, const Degree& d) {
  return ring.t(i + 1, -i - 1) + ring.t(i, i - 1) +
         ring.v((i - 1) * degree_at(d, i - 1) + (i + 1) * degree_at(d, i + 1) -
                2 * i * degree_at(d, i) - i);
}

Exponents f_prefactor(const VermaRing& ring, int i, const Degree& d) {
  return ring.t(i + 1, i) + ring.t(i, -i) +
         ring.v(2 * i * degree_at(d, i) - i * degree_at(d, i - 1) - i * degree_at(d, i + 1) - i);
}

int column_of(int i, const FixedPoint& p_small, const FixedPoint& p_big) {
  auto [ii, j] = adjacency_of(p_small, p_big);
  if (ii != i) throw UsageError("fixed points are adjacent along a different root");
  return j;
}

}  // namespace

RatFunc VermaModule::e_entry_closed(int i, const FixedPoint& p, const FixedPoint& p_big) const {
  const int j = column_of(i, p, p_big);
  const int dij = p.at(i, j);
  RatFunc r = RatFunc::monomial(e_prefactor(ring_, i, p.degree()) + ring_.t(j, 2) + ring_.v(-2 * dij),
                                -1);
  r *= RatFunc::one_minus_inverse(ring_.v(2));
  for (int k = 1; k <= i; ++k) {
    if (k != j) r *= RatFunc::one_minus_inverse(ring_.weight(j, k, 2 * p.at(i, k) - 2 * dij));
  }
  for (int k = 1; k < i; ++k) r *= binom(ring_.weight(j, k, 2 * p.at(i - 1, k) - 2 * dij));
  return r;
}

RatFunc VermaModule::f_entry_closed(int i, const FixedPoint& x, const FixedPoint& p_small) const {
  const int j = column_of(i, p_small, x);
  const int xij = x.at(i, j);
  RatFunc r = RatFunc::monomial(f_prefactor(ring_, i, x.degree()));
  r *= RatFunc::one_minus_inverse(ring_.v(2));
  for (int k = 1; k <= i; ++k) {
    if (k != j) r *= RatFunc::one_minus_inverse(ring_.weight(k, j, 2 * xij - 2 * x.at(i, k)));
  }
  for (int k = 1; k <= i + 1; ++k) r *= binom(ring_.weight(k, j, 2 * xij - 2 * x.at(i + 1, k)));
  return r;
}

RatFunc VermaModule::e_entry_localized(int i, const FixedPoint& p, const FixedPoint& p_big) const {
  column_of(i, p, p_big);
  RatFunc r = RatFunc::monomial(e_prefactor(ring_, i, p.degree()) + corr_line_weight(ring_, p, p_big),
                                -1);
  return r * sym_chi_corr(p, p_big) / sym_chi(p);
}

RatFunc VermaModule::f_entry_localized(int i, const FixedPoint& x, const FixedPoint& p_small) const {
  column_of(i, p_small, x);
  RatFunc r = RatFunc::monomial(f_prefactor(ring_, i, x.degree()));
  return r * sym_chi_corr(p_small, x) / sym_chi(x);
}

GradedOperator VermaModule::cached(std::string label, Degree shift,
                                   std::function<GradedOperator::Column(const FixedPoint&)> col) const {
  auto cache = std::make_shared<std::map<FixedPoint, GradedOperator::Column>>();
  GradedOperator op;
  op.label = std::move(label);
  op.nvars = ring_.nvars();
  op.shift = std::move(shift);
  op.column = [cache, col = std::move(col)](const FixedPoint& p) -> GradedOperator::Column {
    auto it = cache->find(p);
    if (it != cache->end()) return it->second;
    return cache->emplace(p, col(p)).first->second;
  };
  return op;
}

namespace {

Degree unit_shift(int n, int i, int delta) {
  Degree d(static_cast<std::size_t>(n - 1), 0);
  if (i >= 1 && i <= n - 1) d[static_cast<std::size_t>(i - 1)] = delta;
  return d;
}

}  // namespace

GradedOperator VermaModule::op_identity() const {
  GradedOperator op;
  op.label = "1";
  op.nvars = ring_.nvars();
  op.shift = unit_shift(n(), 0, 0);
  const int nv = ring_.nvars();
  op.column = [nv](const FixedPoint& p) {
    return GradedOperator::Column{{p, RatFunc::constant(nv, 1)}};
  };
  return op;
}

GradedOperator VermaModule::op_K(int i, int power) const {
  check_index(i, 1, n() - 1);
  GradedOperator op;
  op.nvars = ring_.nvars();
  op.label = "K" + std::to_string(i) + "^" + std::to_string(power);
  op.shift = unit_shift(n(), 0, 0);
  op.column = [this, i, power](const FixedPoint& p) {
    return GradedOperator::Column{{p, RatFunc::monomial(k_scalar(i, p.degree()).scaled(power))}};
  };
  return op;
}

GradedOperator VermaModule::op_L(int i, int power) const {
  check_index(i, 0, n());
  GradedOperator op;
  op.nvars = ring_.nvars();
  op.label = "L" + std::to_string(i) + "^" + std::to_string(power);
  op.shift = unit_shift(n(), 0, 0);
  op.column = [this, i, power](const FixedPoint& p) {
    return GradedOperator::Column{{p, RatFunc::monomial(l_scalar(i, p.degree()).scaled(power))}};
  };
  return op;
}

GradedOperator VermaModule::op_E(int i) const {
  check_index(i, 1, n() - 1);
  return cached("E" + std::to_string(i), unit_shift(n(), i, 1), [this, i](const FixedPoint& p) {
    GradedOperator::Column col;
    for (const auto& a : raise(p, i)) col.emplace_back(a.point, e_entry_closed(i, p, a.point));
    return col;
  });
}

GradedOperator VermaModule::op_F(int i) const {
  check_index(i, 1, n() - 1);
  return cached("F" + std::to_string(i), unit_shift(n(), i, -1), [this, i](const FixedPoint& p) {
    GradedOperator::Column col;
    for (const auto& a : lower(p, i)) col.emplace_back(a.point, f_entry_closed(i, p, a.point));
    return col;
  });
}

GradedOperator VermaModule::op_E_localized(int i) const {
  check_index(i, 1, n() - 1);
  return cached("E" + std::to_string(i) + "/loc", unit_shift(n(), i, 1),
                [this, i](const FixedPoint& p) {
                  GradedOperator::Column col;
                  for (const auto& a : raise(p, i)) {
                    col.emplace_back(a.point, e_entry_localized(i, p, a.point));
                  }
                  return col;
                });
}

GradedOperator VermaModule::op_F_localized(int i) const {
  check_index(i, 1, n() - 1);
  return cached("F" + std::to_string(i) + "/loc", unit_shift(n(), i, -1),
                [this, i](const FixedPoint& p) {
                  GradedOperator::Column col;
                  for (const auto& a : lower(p, i)) {
                    col.emplace_back(a.point, f_entry_localized(i, p, a.point));
                  }
                  return col;
                });
}

GradedOperator VermaModule::op_e(int i) const {
  GradedOperator big_e = op_E(i);
  return cached("e" + std::to_string(i), big_e.shift, [this, i, big_e](const FixedPoint& p) {
    RatFunc k = RatFunc::monomial(k_scalar(i, p.degree()).scaled(i));
    GradedOperator::Column col = big_e.column(p);
    for (auto& [q, c] : col) c *= k;
    return col;
  });
}

GradedOperator VermaModule::op_f(int i) const {
  GradedOperator big_f = op_F(i);
  return cached("f" + std::to_string(i), big_f.shift, [this, i, big_f](const FixedPoint& p) {
    // K_i^{-i} acts after F_i, on the target degree.
    RatFunc k = RatFunc::monomial(k_scalar(i, degree_shift(p.degree(), i, -1)).scaled(-i));
    GradedOperator::Column col = big_f.column(p);
    for (auto& [q, c] : col) c *= k;
    return col;
  });
}

GradedOperator VermaModule::op_e_direct(int i) const {
  check_index(i, 1, n() - 1);
  return cached("e" + std::to_string(i) + "/geo", unit_shift(n(), i, 1),
                [this, i](const FixedPoint& p) {
                  const Degree d = p.degree();
                  Exponents pre = ring_.t(i + 1, -1) + ring_.t(i, -1) +
                                  ring_.v(degree_at(d, i + 1) - degree_at(d, i - 1));
                  GradedOperator::Column col;
                  for (const auto& a : raise(p, i)) {
                    RatFunc c = RatFunc::monomial(pre + corr_line_weight(ring_, p, a.point), -1);
                    col.emplace_back(a.point, c * sym_chi_corr(p, a.point) / sym_chi(p));
                  }
                  return col;
                });
}

GradedOperator VermaModule::op_f_direct(int i) const {
  check_index(i, 1, n() - 1);
  return cached("f" + std::to_string(i) + "/geo", unit_shift(n(), i, -1),
                [this, i](const FixedPoint& p) {
                  GradedOperator::Column col;
                  for (const auto& a : lower(p, i)) {
                    col.emplace_back(a.point, sym_chi_corr(a.point, p) / sym_chi(p));
                  }
                  return col;
                });
}

}  // namespace laumon
