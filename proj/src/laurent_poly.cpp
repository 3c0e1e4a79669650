#include <algorithm>
#include <unordered_map>

#include "laumon/errors.hpp"
#include "laumon/symbolic.hpp"

namespace laumon::sym {

namespace {

constexpr int kExponentLimit = 32000;

std::int16_t narrow_exponent(int value) {
  if (value > kExponentLimit || value < -kExponentLimit) {
    throw ArithmeticError("exponent overflow");
  }
  return static_cast<std::int16_t>(value);
}

}  // namespace

Exponents::Exponents(int nvars) {
  if (nvars < 0 || nvars > kMaxVars) {
    throw UsageError("unsupported number of variables: " + std::to_string(nvars));
  }
  n_ = static_cast<std::int8_t>(nvars);
}

Exponents::Exponents(std::initializer_list<int> exps) : Exponents(static_cast<int>(exps.size())) {
  int k = 0;
  for (int e : exps) set(k++, e);
}

Exponents Exponents::unit(int nvars, int var, int power) {
  Exponents e(nvars);
  e.set(var, power);
  return e;
}

void Exponents::set(int k, int value) {
  if (k < 0 || k >= n_) throw UsageError("exponent index out of range");
  auto& slot = e_[static_cast<std::size_t>(k)];
  total_ += value - slot;
  slot = narrow_exponent(value);
}

bool Exponents::is_zero() const {
  for (int k = 0; k < n_; ++k) {
    if (e_[static_cast<std::size_t>(k)] != 0) return false;
  }
  return true;
}

Exponents& Exponents::operator+=(const Exponents& o) {
  if (o.n_ != n_) throw UsageError("mismatched parameter spaces");
  for (int k = 0; k < n_; ++k) {
    auto i = static_cast<std::size_t>(k);
    e_[i] = narrow_exponent(e_[i] + o.e_[i]);
  }
  total_ += o.total_;
  return *this;
}

Exponents& Exponents::operator-=(const Exponents& o) {
  if (o.n_ != n_) throw UsageError("mismatched parameter spaces");
  for (int k = 0; k < n_; ++k) {
    auto i = static_cast<std::size_t>(k);
    e_[i] = narrow_exponent(e_[i] - o.e_[i]);
  }
  total_ -= o.total_;
  return *this;
}

Exponents Exponents::operator-() const {
  Exponents r(n_);
  return r -= *this;
}

Exponents Exponents::scaled(int factor) const {
  Exponents r(n_);
  for (int k = 0; k < n_; ++k) r.set(k, (*this)[k] * factor);
  return r;
}

std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  if (a.total_ != b.total_) return a.total_ <=> b.total_;
  for (int k = 0; k < a.n_; ++k) {
    auto i = static_cast<std::size_t>(k);
    if (a.e_[i] != b.e_[i]) return a.e_[i] <=> b.e_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Exponents::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (int k = 0; k < n_; ++k) {
    h ^= static_cast<std::uint16_t>(e_[static_cast<std::size_t>(k)]);
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::constant(int nvars, const mpz_class& c) {
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({Exponents(nvars), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& exps, const mpz_class& c) {
  LaurentPoly p(exps.size());
  if (c != 0) p.terms_.push_back({exps, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
  LaurentPoly p(nvars);
  for (const auto& t : terms) {
    if (t.exps.size() != nvars) throw UsageError("mismatched parameter spaces");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exps < b.exps; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

void LaurentPoly::check_same_space(const LaurentPoly& o) const {
  if (o.n_ != n_) throw UsageError("mismatched parameter spaces");
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].exps.is_zero();
}

mpz_class LaurentPoly::coeff(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& x) { return t.exps < x; });
  if (it != terms_.end() && it->exps == e) return it->coeff;
  return 0;
}

mpz_class LaurentPoly::sum_of_coeffs() const {
  mpz_class s = 0;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <typename Combine>
std::vector<LaurentPoly::Term> merge_terms(const std::vector<LaurentPoly::Term>& a,
                                           const std::vector<LaurentPoly::Term>& b,
                                           Combine sign_of_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps < a[i].exps) {
      out.push_back({b[j].exps, sign_of_b(b[j].coeff)});
      ++j;
    } else {
      mpz_class c = a[i].coeff + sign_of_b(b[j].coeff);
      if (c != 0) out.push_back({a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_space(o);
  terms_ = merge_terms(terms_, o.terms_, [](const mpz_class& c) { return mpz_class(c); });
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_space(o);
  terms_ = merge_terms(terms_, o.terms_, [](const mpz_class& c) { return mpz_class(-c); });
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same_space(b);
  LaurentPoly r(a.n_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_monomial()) return b.shifted(a.terms_[0].exps).scaled(a.terms_[0].coeff);
  if (b.is_monomial()) return a.shifted(b.terms_[0].exps).scaled(b.terms_[0].coeff);
  std::unordered_map<Exponents, mpz_class, ExponentsHash> acc;
  acc.reserve(a.size() * b.size());
  mpz_class prod;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      mpz_mul(prod.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      acc[x.exps + y.exps] += prod;
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, std::move(c)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) { return x.exps < y.exps; });
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpz_class& c) const {
  if (c == 0) return LaurentPoly(n_);
  LaurentPoly r = *this;
  if (c == 1) return r;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponents& m) const {
  if (m.size() != n_) throw UsageError("mismatched parameter spaces");
  LaurentPoly r = *this;
  // Translation preserves the graded-lex order.
  for (auto& t : r.terms_) t.exps += m;
  return r;
}

LaurentPoly LaurentPoly::divided_by_scalar(const mpz_class& c) const {
  if (c == 0) throw ArithmeticError("division by zero");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(n_, 1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::substitute(int var, const Exponents& image) const {
  if (image.size() != n_) throw UsageError("mismatched parameter spaces");
  if (image[var] != 0) throw UsageError("substitution image involves the substituted variable");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = t.exps;
    int k = e[var];
    e.set(var, 0);
    e += image.scaled(k);
    out.push_back({e, t.coeff});
  }
  return from_terms(n_, std::move(out));
}

LaurentPoly LaurentPoly::dual() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({-t.exps, t.coeff});
  return from_terms(n_, std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
  check_same_space(divisor);
  if (divisor.is_zero()) throw ArithmeticError("division by zero polynomial");
  if (is_zero()) return LaurentPoly(n_);
  if (divisor.is_monomial()) {
    const auto& d = divisor.terms_[0];
    LaurentPoly r = shifted(-d.exps);
    for (auto& t : r.terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), d.coeff.get_mpz_t())) return std::nullopt;
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), d.coeff.get_mpz_t());
    }
    return r;
  }
  // Long division on lowest terms; the graded-lex order is translation
  // invariant, so lowest(rem) = lowest(quot) * lowest(divisor) at each step.
  const Term& lead = divisor.terms_.front();
  // If P = Q * D then, per variable, the exponent range of Q is the range of
  // P shrunk by the range of D. This box bounds the loop.
  Exponents lo_box(n_);
  Exponents hi_box(n_);
  for (int k = 0; k < n_; ++k) {
    auto range = [k](const LaurentPoly& p) {
      int lo = p.terms_.front().exps[k];
      int hi = lo;
      for (const auto& t : p.terms_) {
        lo = std::min(lo, t.exps[k]);
        hi = std::max(hi, t.exps[k]);
      }
      return std::pair{lo, hi};
    };
    auto [plo, phi] = range(*this);
    auto [dlo, dhi] = range(divisor);
    if (phi - dhi < plo - dlo) return std::nullopt;
    lo_box.set(k, plo - dlo);
    hi_box.set(k, phi - dhi);
  }
  std::map<Exponents, mpz_class> rem;
  for (const auto& t : terms_) rem.emplace(t.exps, t.coeff);
  std::vector<Term> quot;
  mpz_class q;
  mpz_class prod;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponents qe = it->first - lead.exps;
    for (int k = 0; k < n_; ++k) {
      if (qe[k] < lo_box[k] || qe[k] > hi_box[k]) return std::nullopt;
    }
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), it->second.get_mpz_t(), lead.coeff.get_mpz_t());
    for (const auto& dt : divisor.terms_) {
      Exponents e = qe + dt.exps;
      mpz_mul(prod.get_mpz_t(), q.get_mpz_t(), dt.coeff.get_mpz_t());
      auto [pos, inserted] = rem.try_emplace(e, 0);
      pos->second -= prod;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back({qe, q});
  }
  LaurentPoly r(n_);
  r.terms_ = std::move(quot);  // produced in increasing order
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.exps != y.exps) return x.exps < y.exps;
    if (x.coeff != y.coeff) return x.coeff < y.coeff;
  }
  return false;
}

CanonicalSplit canonical_split(const LaurentPoly& p) {
  if (p.is_zero()) throw ArithmeticError("zero polynomial has no canonical split");
  CanonicalSplit s;
  s.scalar = p.content();
  if (p.lowest().coeff < 0) s.scalar = -s.scalar;
  s.shift = p.lowest().exps;
  s.factor = p.shifted(-s.shift).divided_by_scalar(s.scalar);
  return s;
}

LaurentPoly geometric_block(int lo, int hi, const Exponents& m, const VarSpace& vs) {
  LaurentPoly r(m.size());
  if (lo > hi) return r;
  if (vs.nvars() != m.size()) throw UsageError("mismatched parameter spaces");
  const int v = vs.nvars() - 1;
  const int unit = (vs.half_index == v) ? 2 : 1;
  std::vector<LaurentPoly::Term> terms;
  for (int l = lo; l <= hi; ++l) {
    Exponents e = m;
    e.add(v, 2 * l * unit);
    terms.push_back({e, 1});
  }
  return LaurentPoly::from_terms(m.size(), std::move(terms));
}

}  // namespace laumon::sym
