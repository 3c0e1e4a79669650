#include "laumon/characters.hpp"

#include "laumon/errors.hpp"

namespace laumon {

using sym::Exponents;
using sym::LaurentPoly;
using sym::RatFunc;

Orientation parse_orientation(const std::string& s) {
  if (s == "A") return Orientation::A;
  if (s == "B") return Orientation::B;
  throw UsageError("convention must be A or B");
}

const char* orientation_name(Orientation o) { return o == Orientation::A ? "A" : "B"; }

namespace {

// t_k^2 t_j^{-2} (v^{2 lo} + ... + v^{2 hi}); the section z^{-l} carries v^{2l}.
void add_block(LaurentPoly& acc, const VermaRing& ring, int k, int j, int lo, int hi,
               int sign = 1) {
  if (lo > hi) return;
  LaurentPoly b = sym::geometric_block(lo, hi, ring.weight(k, j, 0), ring.space());
  if (sign > 0) {
    acc += b;
  } else {
    acc -= b;
  }
}

}  // namespace

Character hom_char(const VermaRing& ring, int a, int j, int b, int k) {
  LaurentPoly r(ring.nvars());
  add_block(r, ring, k, j, 0, a - b);
  return r;
}

void validate_flag(const FlagData& f) {
  if (f.n < 2) throw UsageError("flag needs rank at least 2");
  std::vector<int> prev(static_cast<std::size_t>(f.n + 1), -1);
  for (const auto& row : f.rows) {
    std::vector<int> cur(static_cast<std::size_t>(f.n + 1), -1);
    for (const auto& s : row) {
      if (s.column < 1 || s.column > f.n) throw UsageError("flag column out of range");
      if (s.twist < 0) throw UsageError("flag twist must be nonnegative");
      auto c = static_cast<std::size_t>(s.column);
      if (cur[c] >= 0) throw UsageError("repeated column in a flag row");
      cur[c] = s.twist;
    }
    for (std::size_t c = 1; c < prev.size(); ++c) {
      if (prev[c] < 0) continue;
      if (cur[c] < 0 || cur[c] > prev[c]) throw UsageError("flag rows are not nested");
    }
    prev = std::move(cur);
  }
}

FlagData flag_of(const FixedPoint& p) {
  FlagData f;
  f.n = p.n();
  for (int i = 1; i <= p.n() - 1; ++i) {
    std::vector<FlagSummand> row;
    for (int j = 1; j <= i; ++j) row.push_back({j, p.at(i, j)});
    f.rows.push_back(std::move(row));
  }
  return f;
}

FlagData correspondence_flag(const FixedPoint& p_small, const FixedPoint& p_big) {
  auto [i, j] = adjacency_of(p_small, p_big);
  (void)j;
  FlagData f = flag_of(p_small);
  std::vector<FlagSummand> inserted;
  for (int k = 1; k <= i; ++k) inserted.push_back({k, p_big.at(i, k)});
  f.rows.insert(f.rows.begin() + (i - 1), std::move(inserted));
  return f;
}

Character flag_tangent_oracle(const VermaRing& ring, const FlagData& f) {
  validate_flag(f);
  if (f.n != ring.n()) throw UsageError("flag rank does not match the ring");
  LaurentPoly c(ring.nvars());
  const int r = static_cast<int>(f.rows.size());
  // Based Hom(W_l, W / W_target): sections that vanish at infinity when the
  // target summand is all of O w_k, torsion sections otherwise.
  auto hom_quotient = [&](int l, int target, int sign) {
    std::vector<int> tw(static_cast<std::size_t>(f.n + 1), -1);
    for (const auto& s : f.rows[static_cast<std::size_t>(target - 1)]) {
      tw[static_cast<std::size_t>(s.column)] = s.twist;
    }
    for (const auto& s : f.rows[static_cast<std::size_t>(l - 1)]) {
      for (int k = 1; k <= f.n; ++k) {
        int b = tw[static_cast<std::size_t>(k)];
        if (b >= 0) {
          add_block(c, ring, k, s.column, s.twist - b + 1, s.twist, sign);
        } else {
          add_block(c, ring, k, s.column, 1, s.twist, sign);
        }
      }
    }
  };
  for (int l = 1; l <= r; ++l) hom_quotient(l, l, +1);
  for (int l = 1; l < r; ++l) hom_quotient(l, l + 1, -1);
  return c;
}

Character tangent_char(const VermaRing& ring, const FixedPoint& p) {
  const int n = p.n();
  if (n != ring.n()) throw UsageError("fixed point rank does not match the ring");
  LaurentPoly c(ring.nvars());
  for (int k = 1; k <= n; ++k) {
    for (int j = 1; j <= n - 1; ++j) {
      if (j < k) {
        int above = p.at(k - 1, j);
        add_block(c, ring, k, j, 0, above);
        add_block(c, ring, k, j, above - p.at(k, k) + 1, above, -1);
      }
      for (int i = std::max(k, j); i <= n - 1; ++i) {
        add_block(c, ring, k, j, p.at(i, j) - p.at(i, k) + 1, p.at(i, j) - p.at(i + 1, k));
      }
    }
  }
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) c -= ring.poly(ring.weight(k, j, 0));
  }
  return c;
}

std::pair<int, int> adjacency_of(const FixedPoint& p_small, const FixedPoint& p_big) {
  if (p_small.n() != p_big.n()) throw UsageError("fixed points of different rank");
  int found_i = 0;
  int found_j = 0;
  for (int i = 1; i <= p_small.n() - 1; ++i) {
    for (int j = 1; j <= i; ++j) {
      int diff = p_big.at(i, j) - p_small.at(i, j);
      if (diff == 0) continue;
      if (diff != 1 || found_i != 0) throw UsageError("fixed points are not adjacent");
      found_i = i;
      found_j = j;
    }
  }
  if (found_i == 0) throw UsageError("fixed points are not adjacent");
  return {found_i, found_j};
}

Character corr_tangent_char(const VermaRing& ring, const FixedPoint& p_small,
                            const FixedPoint& p_big) {
  auto [i, j] = adjacency_of(p_small, p_big);
  LaurentPoly c = tangent_char(ring, p_small);
  const int dij = p_small.at(i, j);
  for (int k = 1; k <= i; ++k) c += ring.poly(ring.weight(j, k, 2 * p_big.at(i, k) - 2 * dij));
  for (int k = 1; k < i; ++k) c -= ring.poly(ring.weight(j, k, 2 * p_small.at(i - 1, k) - 2 * dij));
  return c;
}

Exponents corr_line_weight(const VermaRing& ring, const FixedPoint& p_small,
                           const FixedPoint& p_big) {
  auto [i, j] = adjacency_of(p_small, p_big);
  return ring.t(j, 2) + ring.v(-2 * p_small.at(i, j));
}

RatFunc sym_inverse(const Character& c, Orientation o) {
  RatFunc r = RatFunc::constant(c.nvars(), 1);
  for (const auto& term : c.terms()) {
    if (term.coeff < 0) throw UsageError("symmetric algebra of a virtual character");
    if (term.exps.is_zero()) throw DegeneracyError("trivial weight in a tangent character");
    Exponents w = (o == Orientation::A) ? term.exps : -term.exps;
    r *= RatFunc::one_minus_inverse(w).pow(static_cast<int>(term.coeff.get_si()));
  }
  return r;
}

Exponents det_rgamma_weight(const VermaRing& ring, const FixedPoint& p) {
  // det R Gamma(O(-a.0) w_j) = t_j^2 divided by the skyscraper weights
  // t_j^2 v^{-2l}, l = 0..a-1.
  Exponents e = ring.one();
  for (int i = 1; i <= p.n() - 1; ++i) {
    for (int j = 1; j <= i; ++j) {
      const int a = p.at(i, j);
      e += ring.t(j, 2 - 2 * a) + ring.v(a * (a - 1));
    }
  }
  return e;
}

}  // namespace laumon
