#include <random>

#include "laumon/errors.hpp"
#include "laumon/umodule.hpp"

namespace laumon {

using sym::Exponents;
using sym::LaurentPoly;
using sym::RatFunc;

namespace {

RatFunc mono(const Exponents& e, long c = 1) {
  return RatFunc::monomial(e, mpz_class(c));
}

// v^{power} (v + v^{-1}).
RatFunc v_plus_inverse(const VermaRing& ring, int power) {
  return RatFunc(ring.poly(ring.v(power + 1)) + ring.poly(ring.v(power - 1)));
}

// 1 / (v - v^{-1}).
RatFunc inv_v_minus_inverse(const VermaRing& ring) {
  return RatFunc::quotient(ring.poly(ring.one()), ring.poly(ring.v(1)) - ring.poly(ring.v(-1)));
}

Json ij(int i, int j) {
  Json p;
  p["i"] = i;
  p["j"] = j;
  return p;
}

void add_generator_relations(const VermaModule& m, std::vector<Relation>& out, bool primed) {
  const VermaRing& ring = m.ring();
  const int n = m.n();
  const std::string tick = primed ? "'" : "";
  auto up = [&](int i) { return primed ? m.op_e(i) : m.op_E(i); };
  auto down = [&](int i) { return primed ? m.op_f(i) : m.op_F(i); };
  auto c = [&](int i, int j) { return primed ? sevostyanov_c(n, i, j) : 0; };
  const RatFunc one = ring.constant(1);
  const RatFunc minus_one = ring.constant(-1);

  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      const int delta = i == j ? 1 : 0;
      Relation r{"weight_up" + tick, ij(i, j), {}};
      r.words.push_back({one, {m.op_L(i, -1), up(j), m.op_L(i)}});
      r.words.push_back({mono(ring.v(delta), -1), {up(j)}});
      out.push_back(std::move(r));
      Relation s{"weight_down" + tick, ij(i, j), {}};
      s.words.push_back({one, {m.op_L(i, -1), down(j), m.op_L(i)}});
      s.words.push_back({mono(ring.v(-delta), -1), {down(j)}});
      out.push_back(std::move(s));
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = 1; j <= n - 1; ++j) {
      Relation r{"commutator" + tick, ij(i, j), {}};
      // e_i f_j - v^{c_ij} f_j e_i
      r.words.push_back({one, {down(j), up(i)}});
      r.words.push_back({mono(ring.v(c(i, j)), -1), {up(i), down(j)}});
      if (i == j) {
        RatFunc k = inv_v_minus_inverse(ring);
        r.words.push_back({-k, {m.op_K(i)}});
        r.words.push_back({k, {m.op_K(i, -1)}});
      }
      out.push_back(std::move(r));
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      Relation r{"serre_far_up" + tick, ij(i, j), {}};
      r.words.push_back({one, {up(j), up(i)}});
      r.words.push_back({minus_one, {up(i), up(j)}});
      out.push_back(std::move(r));
      Relation s{"serre_far_down" + tick, ij(i, j), {}};
      s.words.push_back({one, {down(j), down(i)}});
      s.words.push_back({minus_one, {down(i), down(j)}});
      out.push_back(std::move(s));
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j > n - 1) continue;
      // Moving the K_i^i factors of e_i through gives the exponent c_{ji};
      // with c_{ij} itself the relation fails on the module.
      const int cij = c(j, i);
      for (bool raising : {true, false}) {
        auto g = [&](int k) { return raising ? up(k) : down(k); };
        Relation r{std::string(raising ? "serre_near_up" : "serre_near_down") + tick, ij(i, j), {}};
        // x_i^2 x_j - v^c (v + v^{-1}) x_i x_j x_i + v^{2c} x_j x_i^2, c = c_{ji}
        r.words.push_back({one, {g(j), g(i), g(i)}});
        r.words.push_back({-v_plus_inverse(ring, cij), {g(i), g(j), g(i)}});
        r.words.push_back({mono(ring.v(2 * cij)), {g(i), g(i), g(j)}});
        out.push_back(std::move(r));
      }
    }
  }
}

}  // namespace

std::vector<Relation> quantum_group_relations(const VermaModule& m) {
  const VermaRing& ring = m.ring();
  const int n = m.n();
  const RatFunc one = ring.constant(1);
  const RatFunc minus_one = ring.constant(-1);
  std::vector<Relation> out;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      Relation r{"cartan_commute", ij(i, j), {}};
      r.words.push_back({one, {m.op_L(j), m.op_L(i)}});
      r.words.push_back({minus_one, {m.op_L(i), m.op_L(j)}});
      out.push_back(std::move(r));
    }
  }
  for (int i = 1; i <= n - 1; ++i) {
    // K_i = L_{i-1}^{-1} L_i^2 L_{i+1}^{-1}, the outer factors absent at the ends.
    Relation r{"cartan_k", Json{{"i", i}}, {}};
    r.words.push_back({one, {m.op_K(i)}});
    std::vector<GradedOperator> ls{m.op_L(i, 2)};
    if (i > 1) ls.push_back(m.op_L(i - 1, -1));
    if (i < n - 1) ls.push_back(m.op_L(i + 1, -1));
    r.words.push_back({minus_one, ls});
    out.push_back(std::move(r));
  }
  add_generator_relations(m, out, false);
  add_generator_relations(m, out, true);
  return out;
}

namespace {

// Degrees visited by a word started at d; false when one leaves the box.
bool word_in_box(const Word& w, Degree d, const Truncation& tr) {
  for (const auto& op : w.ops) {
    for (std::size_t k = 0; k < d.size(); ++k) d[k] += op.shift[k];
    if (!tr.contains(d)) return false;
  }
  return true;
}

ModuleVector apply_word(const Word& w, const ModuleVector& x, const Truncation& tr) {
  ModuleVector y = x;
  for (const auto& op : w.ops) y = apply(op, y, tr);
  return y.scaled(w.coeff);
}

Json point_witness(const VermaRing& ring, const FixedPoint& source, const FixedPoint& target,
                   const RatFunc& value) {
  Json w;
  w["source"] = to_json(source);
  w["target"] = to_json(target);
  w["value"] = to_json(value, ring.space());
  return w;
}

}  // namespace

std::vector<CheckRecord> verify_relation(const VermaModule& m, const Relation& rel,
                                         const Truncation& tr) {
  const VermaRing& ring = m.ring();
  std::vector<CheckRecord> out;
  for (const Degree& d : box_degrees(m.n(), tr.box)) {
    CheckRecord rec;
    rec.name = rel.name;
    for (const auto& [k, v] : rel.params.items()) rec.detail[k] = v;
    rec.detail["n"] = m.n();
    rec.detail["degree"] = d;
    bool inside = true;
    for (const auto& w : rel.words) inside = inside && word_in_box(w, d, tr);
    if (!inside) {
      rec.status = Status::Skipped;
      out.push_back(std::move(rec));
      continue;
    }
    bool modulo = false;
    for (const FixedPoint& p : m.points(d)) {
      ModuleVector x = ModuleVector::basis(p, ring.nvars());
      std::map<Degree, ModuleVector> sums;
      for (const auto& w : rel.words) {
        ModuleVector y = apply_word(w, x, tr);
        auto [it, fresh] = sums.emplace(y.degree(), y);
        if (!fresh) it->second.add(y, ring.constant(1));
      }
      for (auto& [deg, vec] : sums) {
        vec.prune();
        for (const auto& [q, c] : vec.coeffs()) {
          // Nonzero in the free ring; retry with t_n = (t_1 ... t_{n-1})^{-1}.
          if (ring.impose_relation(c).reduced().is_zero()) {
            modulo = true;
            continue;
          }
          rec.status = Status::Fail;
          rec.witness = point_witness(ring, p, q, c);
          break;
        }
        if (rec.status == Status::Fail) break;
      }
      if (rec.status == Status::Fail) break;
    }
    rec.detail["ring"] = modulo ? "t1...tn=1" : "free";
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CheckRecord> verify_relations(const VermaModule& m, const Truncation& tr) {
  std::vector<CheckRecord> out;
  for (const Relation& rel : quantum_group_relations(m)) {
    auto recs = verify_relation(m, rel, tr);
    out.insert(out.end(), recs.begin(), recs.end());
  }
  return out;
}

std::vector<CheckRecord> diagonality_check(const VermaModule& m, int i, const Truncation& tr) {
  const VermaRing& ring = m.ring();
  GradedOperator e = m.op_E(i);
  GradedOperator f = m.op_F(i);
  std::vector<CheckRecord> out;
  for (const Degree& d : box_degrees(m.n(), tr.box)) {
    CheckRecord rec;
    rec.name = "commutator_diagonal";
    rec.detail["i"] = i;
    rec.detail["n"] = m.n();
    rec.detail["degree"] = d;
    if (!tr.contains(degree_shift(d, i, 1))) {
      rec.status = Status::Skipped;
      out.push_back(std::move(rec));
      continue;
    }
    int checked = 0;
    for (const FixedPoint& p : m.points(d)) {
      ModuleVector x = ModuleVector::basis(p, ring.nvars());
      ModuleVector y = apply(e, apply(f, x, tr), tr);
      ModuleVector z = apply(f, apply(e, x, tr), tr);
      ModuleVector c(d, ring.nvars());
      if (!y.empty()) c.add(y, ring.constant(1));
      if (!z.empty()) c.add(z, ring.constant(-1));
      for (const auto& [q, val] : c.coeffs()) {
        if (q == p) continue;
        ++checked;
        if (!val.is_zero()) {
          rec.status = Status::Fail;
          rec.witness = point_witness(ring, p, q, val);
          break;
        }
      }
      if (rec.status == Status::Fail) break;
    }
    rec.detail["off_diagonal_entries"] = checked;
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<CheckRecord> two_path_check(const VermaModule& m, const std::vector<Degree>& degrees) {
  const VermaRing& ring = m.ring();
  std::vector<CheckRecord> out;
  for (int i = 1; i <= m.n() - 1; ++i) {
    GradedOperator e_seva = m.op_e(i);
    GradedOperator e_geo = m.op_e_direct(i);
    GradedOperator f_seva = m.op_f(i);
    GradedOperator f_geo = m.op_f_direct(i);
    for (const Degree& d : degrees) {
      CheckRecord rec;
      rec.name = "coefficients_two_path";
      rec.detail["i"] = i;
      rec.detail["n"] = m.n();
      rec.detail["degree"] = d;
      int pairs = 0;
      auto fail = [&](const char* which, const FixedPoint& a, const FixedPoint& b, const RatFunc& x,
                      const RatFunc& y) {
        rec.status = Status::Fail;
        rec.witness = point_witness(ring, a, b, x - y);
        rec.witness["operator"] = which;
      };
      for (const FixedPoint& p : m.points(d)) {
        for (const auto& a : raise(p, i)) {
          ++pairs;
          RatFunc ec = m.e_entry_closed(i, p, a.point);
          RatFunc el = m.e_entry_localized(i, p, a.point);
          if (!sym::eq_exact(ec, el)) fail("E", p, a.point, ec, el);
          RatFunc fc = m.f_entry_closed(i, a.point, p);
          RatFunc fl = m.f_entry_localized(i, a.point, p);
          if (!sym::eq_exact(fc, fl)) fail("F", a.point, p, fc, fl);
          RatFunc es = e_seva.entry(a.point, p);
          RatFunc eg = e_geo.entry(a.point, p);
          if (!sym::eq_exact(es, eg)) fail("e", p, a.point, es, eg);
          RatFunc fs = f_seva.entry(p, a.point);
          RatFunc fg = f_geo.entry(p, a.point);
          if (!sym::eq_exact(fs, fg)) fail("f", a.point, p, fs, fg);
          if (rec.status == Status::Fail) break;
        }
        if (rec.status == Status::Fail) break;
      }
      rec.detail["pairs"] = pairs;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

void validate_mrak_rows(int n, int i, const MrakRows& rows) {
  if (n < 2 || i < 1 || i > n - 1) throw UsageError("index out of range for the identity");
  if (static_cast<int>(rows.above.size()) != i - 1 || static_cast<int>(rows.row.size()) != i ||
      static_cast<int>(rows.below.size()) != i + 1) {
    throw UsageError("rows must have lengths i-1, i, i+1");
  }
  for (const auto* r : {&rows.above, &rows.row, &rows.below}) {
    for (int x : *r) {
      if (x < 0) throw UsageError("row entries must be nonnegative");
    }
  }
  for (int k = 0; k < i - 1; ++k) {
    if (rows.row[static_cast<std::size_t>(k)] > rows.above[static_cast<std::size_t>(k)]) {
      throw UsageError("rows violate column monotonicity");
    }
  }
  for (int k = 0; k < i; ++k) {
    if (rows.below[static_cast<std::size_t>(k)] > rows.row[static_cast<std::size_t>(k)]) {
      throw UsageError("rows violate column monotonicity");
    }
  }
  if (i == n - 1) {
    for (int x : rows.below) {
      if (x != 0) throw UsageError("row n must vanish");
    }
  }
}

std::pair<RatFunc, RatFunc> mrak_sides(const VermaRing& ring, int i, const MrakRows& rows) {
  validate_mrak_rows(ring.n(), i, rows);
  auto a = [&](int k) { return rows.above[static_cast<std::size_t>(k - 1)]; };
  auto d = [&](int k) { return rows.row[static_cast<std::size_t>(k - 1)]; };
  auto b = [&](int k) { return rows.below[static_cast<std::size_t>(k - 1)]; };
  auto sum = [](const std::vector<int>& r) {
    int s = 0;
    for (int x : r) s += x;
    return s;
  };
  const int da = sum(rows.above);
  const int di = sum(rows.row);
  const int db = sum(rows.below);
  auto w = [&](int k, int j, int vp) { return ring.weight(k, j, vp); };
  auto factor = [&](const Exponents& m) {
    return m.is_zero() ? RatFunc(ring.nvars()) : RatFunc::one_minus(m);
  };

  const int ex = da - 2 * di + db - 1;
  LaurentPoly top = ring.poly(ring.t(i) + ring.t(i + 1, -1) + ring.v(ex)) -
                    ring.poly(ring.t(i, -1) + ring.t(i + 1) + ring.v(-ex));
  RatFunc lhs = RatFunc::quotient(top, ring.poly(ring.v(1)) - ring.poly(ring.v(-1)));
  lhs *= RatFunc::one_minus(ring.v(2)).pow(2);
  lhs *= RatFunc::monomial(ring.v(da - db) + ring.t(i) + ring.t(i + 1));

  RatFunc rhs(ring.nvars());
  // The two sums differ by where the shift by v^2 sits: `s` on the
  // prefactor and the (j,k) factors, `o` on the (k,j) factors.
  for (int part = 0; part < 2; ++part) {
    const int s = part == 0 ? 2 : 0;
    const int o = 2 - s;
    for (int j = 1; j <= i; ++j) {
      RatFunc term = RatFunc::monomial(ring.t(j, 2) + ring.v(-2 * d(j) + s));
      term *= factor(w(i, j, 2 * d(j) - 2 * b(i) + o));
      term *= factor(w(i + 1, j, 2 * d(j) - 2 * b(i + 1) + o));
      for (int k = 1; k <= i; ++k) {
        if (k == j) continue;
        term /= RatFunc::one_minus(w(k, j, 2 * d(j) - 2 * d(k) + o));
        term /= RatFunc::one_minus(w(j, k, 2 * d(k) - 2 * d(j) + s));
      }
      for (int k = 1; k < i; ++k) {
        term *= factor(w(k, j, 2 * d(j) - 2 * b(k) + o));
        term *= factor(w(j, k, 2 * a(k) - 2 * d(j) + s));
      }
      if (part == 0) {
        rhs += term;
      } else {
        rhs -= term;
      }
    }
  }
  return {lhs, rhs};
}

sym::VarSpace mrak_substituted_space(int i) {
  sym::VarSpace vs;
  for (int j = 1; j <= i; ++j) vs.names.push_back("s" + std::to_string(j));
  for (int k = 1; k <= i + 1; ++k) vs.names.push_back("r" + std::to_string(k));
  for (int k = 1; k <= i - 1; ++k) vs.names.push_back("p" + std::to_string(k));
  vs.names.emplace_back("q");
  return vs;
}

MrakTerms mrak_substituted_terms(int i) {
  if (i < 1) throw UsageError("index out of range for the identity");
  const int nv = 3 * i + 1;
  if (nv > Exponents::kMaxVars) throw UsageError("too many variables");
  auto var = [nv](int slot) { return LaurentPoly::monomial(Exponents::unit(nv, slot)); };
  auto s = [&](int j) { return var(j - 1); };
  auto r = [&](int k) { return var(i + k - 1); };
  auto p = [&](int k) { return var(2 * i + 1 + k - 1); };
  const LaurentPoly q = var(3 * i);
  const LaurentPoly one = LaurentPoly::constant(nv, 1);
  auto s_inv2 = [&](int j) { return LaurentPoly::monomial(Exponents::unit(nv, j - 1, -2)); };

  LaurentPoly prod = q;
  for (int j = 1; j <= i; ++j) prod *= s_inv2(j);
  for (int k = 1; k < i; ++k) prod *= p(k);
  for (int k = 1; k <= i + 1; ++k) prod *= r(k);
  MrakTerms out;
  out.lhs.emplace_back((one - q) * (prod - one));

  for (int j = 1; j <= i; ++j) {
    RatFunc a(q * s_inv2(j));
    RatFunc b(s_inv2(j));
    for (int k = 1; k <= i + 1; ++k) {
      a *= RatFunc(s(j) - r(k));
      b *= RatFunc(s(j) - q * r(k));
    }
    for (int k = 1; k < i; ++k) {
      a *= RatFunc(p(k) - q * s(j));
      b *= RatFunc(p(k) - s(j));
    }
    for (int k = 1; k <= i; ++k) {
      if (k == j) continue;
      a /= RatFunc((s(j) - s(k)) * (s(k) - q * s(j)));
      b /= RatFunc((s(j) - q * s(k)) * (s(k) - s(j)));
    }
    out.rhs.push_back(std::move(a));
    out.rhs.push_back(-b);
  }
  return out;
}

std::pair<RatFunc, RatFunc> mrak_substituted_sides(int i) {
  MrakTerms t = mrak_substituted_terms(i);
  const int nv = 3 * i + 1;
  RatFunc lhs(nv), rhs(nv);
  for (const auto& x : t.lhs) lhs += x;
  for (const auto& x : t.rhs) rhs += x;
  return {lhs, rhs};
}

MrakRows random_mrak_rows(int n, int i, int max_entry, std::uint64_t seed) {
  if (n < 2 || i < 1 || i > n - 1) throw UsageError("index out of range for the identity");
  std::mt19937_64 gen(seed);
  auto upto = [&gen](int hi) { return static_cast<int>(gen() % static_cast<std::uint64_t>(hi + 1)); };
  MrakRows rows;
  for (int k = 1; k < i; ++k) rows.above.push_back(upto(max_entry));
  for (int k = 1; k <= i; ++k) {
    rows.row.push_back(k < i ? upto(rows.above[static_cast<std::size_t>(k - 1)]) : upto(max_entry));
  }
  for (int k = 1; k <= i + 1; ++k) {
    if (i == n - 1) {
      rows.below.push_back(0);
    } else {
      rows.below.push_back(k <= i ? upto(rows.row[static_cast<std::size_t>(k - 1)]) : upto(max_entry));
    }
  }
  return rows;
}

}  // namespace laumon
