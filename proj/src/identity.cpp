#include <random>

#include "laumon/errors.hpp"
#include "laumon/symbolic.hpp"

namespace laumon::sym {

VarSpace VarSpace::generic(int nvars) {
  VarSpace vs;
  for (int k = 1; k <= nvars; ++k) vs.names.push_back("x" + std::to_string(k));
  return vs;
}

VarSpace VarSpace::verma(int n) {
  VarSpace vs;
  for (int k = 1; k <= n; ++k) vs.names.push_back("t" + std::to_string(k));
  vs.names.emplace_back("v");
  vs.half_index = n;
  return vs;
}

namespace {

mpq_class rational_pow(const mpq_class& base, long e) {
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw EvaluationError("zero raised to a negative power");
    return 0;
  }
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  mpq_class r = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
  r.canonicalize();
  return r;
}

// Square root of a nonnegative rational, when it is rational.
mpq_class exact_sqrt(const mpq_class& x) {
  if (x < 0) throw EvaluationError("half-integer power of a negative value");
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), x.get_den_mpz_t());
  if (rn * rn != x.get_num() || rd * rd != x.get_den()) {
    throw EvaluationError("half-integer power of a non-square value");
  }
  return mpq_class(rn, rd);
}

struct PointCache {
  const EvalPoint& pt;
  std::vector<mpq_class> half_root;
  std::vector<bool> have_root;

  explicit PointCache(const EvalPoint& p)
      : pt(p), half_root(p.values.size()), have_root(p.values.size(), false) {}

  mpq_class monomial(const Exponents& e) {
    if (static_cast<std::size_t>(e.size()) != pt.values.size()) {
      throw UsageError("evaluation point has the wrong number of variables");
    }
    mpq_class r = 1;
    for (int k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      auto idx = static_cast<std::size_t>(k);
      if (k == pt.half_index) {
        if (e[k] % 2 == 0) {
          r *= rational_pow(pt.values[idx], e[k] / 2);
        } else {
          if (!have_root[idx]) {
            half_root[idx] = exact_sqrt(pt.values[idx]);
            have_root[idx] = true;
          }
          r *= rational_pow(half_root[idx], e[k]);
        }
      } else {
        r *= rational_pow(pt.values[idx], e[k]);
      }
    }
    return r;
  }

  mpq_class poly(const LaurentPoly& p) {
    mpq_class s = 0;
    for (const auto& t : p.terms()) s += monomial(t.exps) * mpq_class(t.coeff);
    return s;
  }
};

}  // namespace

mpq_class eval(const LaurentPoly& p, const EvalPoint& pt) {
  PointCache cache(pt);
  return cache.poly(p);
}

mpq_class eval(const RatFunc& r, const EvalPoint& pt) {
  PointCache cache(pt);
  mpq_class den = mpq_class(r.denominator_scale());
  for (const auto& [f, m] : r.denominator_factors()) {
    mpq_class fv = cache.poly(f);
    if (fv == 0) throw EvaluationError("denominator vanishes at the evaluation point");
    for (int i = 0; i < m; ++i) den *= fv;
  }
  mpq_class num = cache.poly(r.expanded_part());
  for (const auto& [f, m] : r.numerator_factors()) {
    mpq_class fv = cache.poly(f);
    for (int i = 0; i < m; ++i) num *= fv;
  }
  return num / den;
}

bool eq_exact(const RatFunc& a, const RatFunc& b) { return (a - b).is_zero(); }

std::vector<EvalPoint> random_points(const VarSpace& vs, int count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(2, 1L << 20);
  std::vector<EvalPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    EvalPoint pt;
    pt.half_index = vs.half_index;
    for (int k = 0; k < vs.nvars(); ++k) {
      mpq_class x(dist(gen));
      // Draw the square root for half-exponent variables so every power is rational.
      if (k == vs.half_index) x *= x;
      pt.values.push_back(x);
    }
    out.push_back(std::move(pt));
  }
  return out;
}

namespace {

mpq_class eval_sum(const std::vector<RatFunc>& terms, const EvalPoint& pt) {
  mpq_class total = 0;
  for (const auto& t : terms) total += eval(t, pt);
  return total;
}

}  // namespace

bool eq_random(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, const VarSpace& vs,
               const RandomIdentityOptions& opts) {
  if (opts.trials < 1) throw UsageError("eq_random needs at least one trial");
  for (const auto* side : {&a, &b}) {
    for (const auto& t : *side) {
      if (t.nvars() != vs.nvars()) throw UsageError("mismatched parameter spaces");
    }
  }
  // One stream of candidate points; retries consume further points.
  const int budget = opts.trials + opts.retry_budget;
  std::vector<EvalPoint> candidates = random_points(vs, budget, opts.seed);
  int done = 0;
  int retries = 0;
  for (const auto& pt : candidates) {
    mpq_class va;
    mpq_class vb;
    try {
      va = eval_sum(a, pt);
      vb = eval_sum(b, pt);
    } catch (const EvaluationError&) {
      if (++retries > opts.retry_budget) break;
      continue;
    }
    if (va != vb) return false;
    if (++done == opts.trials) return true;
  }
  throw EvaluationError("no denominator-safe evaluation point within the retry budget");
}

bool eq_random(const RatFunc& a, const RatFunc& b, const VarSpace& vs,
               const RandomIdentityOptions& opts) {
  if (a.nvars() != b.nvars()) throw UsageError("mismatched parameter spaces");
  return eq_random(std::vector<RatFunc>{a}, std::vector<RatFunc>{b}, vs, opts);
}

}  // namespace laumon::sym
