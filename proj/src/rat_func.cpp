#include <utility>

#include "laumon/errors.hpp"
#include "laumon/symbolic.hpp"

namespace laumon::sym {

namespace {

LaurentPoly expand(const FactorBag& bag, int nvars) {
  LaurentPoly r = LaurentPoly::constant(nvars, 1);
  for (const auto& [f, mult] : bag) r *= f.pow(static_cast<unsigned>(mult));
  return r;
}

void add_to(FactorBag& bag, const LaurentPoly& f, int mult) {
  if (mult == 0) return;
  auto& m = bag[f];
  m += mult;
  if (m == 0) bag.erase(f);
}

// Bag of max multiplicities; `extra_a`/`extra_b` receive lcm / bag.
FactorBag bag_lcm(const FactorBag& a, const FactorBag& b, FactorBag& extra_a, FactorBag& extra_b) {
  FactorBag out;
  auto ia = a.begin();
  auto ib = b.begin();
  PolyLess less;
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && less(ia->first, ib->first))) {
      out.emplace(ia->first, ia->second);
      extra_b.emplace(ia->first, ia->second);
      ++ia;
    } else if (ia == a.end() || less(ib->first, ia->first)) {
      out.emplace(ib->first, ib->second);
      extra_a.emplace(ib->first, ib->second);
      ++ib;
    } else {
      int m = std::max(ia->second, ib->second);
      out.emplace(ia->first, m);
      if (m > ia->second) extra_a.emplace(ia->first, m - ia->second);
      if (m > ib->second) extra_b.emplace(ib->first, m - ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

// Bag of min multiplicities; `rest_a`/`rest_b` receive bag / gcd.
FactorBag bag_gcd(const FactorBag& a, const FactorBag& b, FactorBag& rest_a, FactorBag& rest_b) {
  FactorBag out;
  auto ia = a.begin();
  auto ib = b.begin();
  PolyLess less;
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && less(ia->first, ib->first))) {
      rest_a.emplace(ia->first, ia->second);
      ++ia;
    } else if (ia == a.end() || less(ib->first, ia->first)) {
      rest_b.emplace(ib->first, ib->second);
      ++ib;
    } else {
      int m = std::min(ia->second, ib->second);
      out.emplace(ia->first, m);
      if (ia->second > m) rest_a.emplace(ia->first, ia->second - m);
      if (ib->second > m) rest_b.emplace(ib->first, ib->second - m);
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

RatFunc::RatFunc(int nvars) : n_(nvars), num_(nvars) {}

RatFunc::RatFunc(LaurentPoly num) : n_(num.nvars()), num_(std::move(num)) {}

RatFunc RatFunc::constant(int nvars, const mpz_class& c) {
  return RatFunc(LaurentPoly::constant(nvars, c));
}

RatFunc RatFunc::monomial(const Exponents& m, const mpz_class& c) {
  return RatFunc(LaurentPoly::monomial(m, c));
}

RatFunc RatFunc::quotient(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nvars() != den.nvars()) throw UsageError("mismatched parameter spaces");
  if (den.is_zero()) throw ArithmeticError("division by zero");
  RatFunc r(num.nvars());
  if (num.is_zero()) return r;
  CanonicalSplit s = canonical_split(den);
  r.num_ = num.shifted(-s.shift);
  if (s.scalar < 0) r.num_ = -r.num_;
  r.den_scale_ = abs(s.scalar);
  if (!s.factor.is_one()) r.den_factors_.emplace(std::move(s.factor), 1);
  r.absorb_integer_content();
  return r;
}

RatFunc RatFunc::one_minus(const Exponents& m) {
  if (m.is_zero()) throw DegeneracyError("factor 1 - 1 vanishes identically");
  const int n = m.size();
  LaurentPoly p = LaurentPoly::constant(n, 1) - LaurentPoly::monomial(m);
  CanonicalSplit s = canonical_split(p);
  RatFunc r(LaurentPoly::monomial(s.shift, s.scalar));
  r.num_factors_.emplace(std::move(s.factor), 1);
  return r;
}

RatFunc RatFunc::one_minus_inverse(const Exponents& m) { return one_minus(m).inverse(); }

LaurentPoly RatFunc::numerator() const { return num_ * expand(num_factors_, n_); }

LaurentPoly RatFunc::denominator() const {
  return expand(den_factors_, n_).scaled(den_scale_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

void RatFunc::make_canonical_zero() {
  num_ = LaurentPoly(n_);
  den_scale_ = 1;
  num_factors_.clear();
  den_factors_.clear();
}

void RatFunc::cancel_tracked() {
  if (num_.is_zero()) {
    make_canonical_zero();
    return;
  }
  for (auto it = num_factors_.begin(); it != num_factors_.end();) {
    auto jt = den_factors_.find(it->first);
    if (jt == den_factors_.end()) {
      ++it;
      continue;
    }
    int m = std::min(it->second, jt->second);
    it->second -= m;
    jt->second -= m;
    if (jt->second == 0) den_factors_.erase(jt);
    if (it->second == 0) {
      it = num_factors_.erase(it);
    } else {
      ++it;
    }
  }
}

void RatFunc::absorb_integer_content() {
  if (num_.is_zero()) {
    make_canonical_zero();
    return;
  }
  if (den_scale_ == 1) return;
  mpz_class g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_scale_.get_mpz_t());
  if (g != 1) {
    num_ = num_.divided_by_scalar(g);
    mpz_divexact(den_scale_.get_mpz_t(), den_scale_.get_mpz_t(), g.get_mpz_t());
  }
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.n_ != b.n_) throw UsageError("mismatched parameter spaces");
  RatFunc r(a.n_);
  if (a.is_zero() || b.is_zero()) return r;
  r.num_ = a.num_ * b.num_;
  r.den_scale_ = a.den_scale_ * b.den_scale_;
  r.num_factors_ = a.num_factors_;
  r.den_factors_ = a.den_factors_;
  for (const auto& [f, m] : b.num_factors_) add_to(r.num_factors_, f, m);
  for (const auto& [f, m] : b.den_factors_) add_to(r.den_factors_, f, m);
  r.cancel_tracked();
  r.absorb_integer_content();
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  RatFunc r(n_);
  CanonicalSplit s = canonical_split(num_);
  r.num_ = LaurentPoly::monomial(-s.shift, s.scalar < 0 ? -den_scale_ : den_scale_);
  r.den_scale_ = abs(s.scalar);
  r.num_factors_ = den_factors_;
  r.den_factors_ = num_factors_;
  if (!s.factor.is_one()) add_to(r.den_factors_, s.factor, 1);
  r.cancel_tracked();
  r.absorb_integer_content();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.n_ != b.n_) throw UsageError("mismatched parameter spaces");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FactorBag extra_a;
  FactorBag extra_b;
  FactorBag den = bag_lcm(a.den_factors_, b.den_factors_, extra_a, extra_b);
  FactorBag rest_a;
  FactorBag rest_b;
  FactorBag common = bag_gcd(a.num_factors_, b.num_factors_, rest_a, rest_b);
  mpz_class scale;
  mpz_lcm(scale.get_mpz_t(), a.den_scale_.get_mpz_t(), b.den_scale_.get_mpz_t());
  for (const auto& [f, m] : rest_a) add_to(extra_a, f, m);
  for (const auto& [f, m] : rest_b) add_to(extra_b, f, m);
  LaurentPoly na = a.num_ * expand(extra_a, a.n_);
  LaurentPoly nb = b.num_ * expand(extra_b, a.n_);
  na = na.scaled(mpz_class(scale / a.den_scale_));
  nb = nb.scaled(mpz_class(scale / b.den_scale_));
  RatFunc r(a.n_);
  r.num_ = na + nb;
  if (r.num_.is_zero()) return r;
  r.den_scale_ = scale;
  r.num_factors_ = std::move(common);
  r.den_factors_ = std::move(den);
  r.cancel_tracked();
  r.absorb_integer_content();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc result = constant(n_, 1);
  RatFunc base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::shifted(const Exponents& m) const {
  RatFunc r = *this;
  r.num_ = r.num_.shifted(m);
  return r;
}

RatFunc RatFunc::normalized() const {
  RatFunc r = *this;
  // Monomial and sign content of the expanded part is already canonical;
  // a tracked numerator factor equal to the expanded part is folded in too.
  r.cancel_tracked();
  r.absorb_integer_content();
  return r;
}

RatFunc RatFunc::reduced() const {
  RatFunc r = normalized();
  if (r.is_zero()) return r;
  for (auto it = r.den_factors_.begin(); it != r.den_factors_.end();) {
    bool erased = false;
    while (it->second > 0) {
      auto q = r.num_.divide_exact(it->first);
      if (!q) break;
      r.num_ = std::move(*q);
      if (--it->second == 0) {
        it = r.den_factors_.erase(it);
        erased = true;
        break;
      }
    }
    if (!erased) ++it;
  }
  r.absorb_integer_content();
  return r;
}

RatFunc RatFunc::substitute(int var, const Exponents& image) const {
  RatFunc num(num_.substitute(var, image));
  for (const auto& [f, m] : num_factors_) {
    num *= RatFunc(f.substitute(var, image)).pow(m);
  }
  RatFunc den = RatFunc::constant(n_, den_scale_);
  for (const auto& [f, m] : den_factors_) {
    den *= RatFunc::quotient(f.substitute(var, image), LaurentPoly::constant(n_, 1)).pow(m);
  }
  return num / den;
}

bool RatFunc::same_representation(const RatFunc& o) const {
  return n_ == o.n_ && num_ == o.num_ && den_scale_ == o.den_scale_ &&
         num_factors_ == o.num_factors_ && den_factors_ == o.den_factors_;
}

}  // namespace laumon::sym
