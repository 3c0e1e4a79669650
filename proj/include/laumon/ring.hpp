#pragma once

// The coefficient ring Z[t_1^{±1}, ..., t_n^{±1}, v^{±1/2}] of the torus
// T x C*. Raw slot n holds the v exponent in half units; every constructor
// below takes true exponents.

#include <vector>

#include "laumon/symbolic.hpp"

namespace laumon {

class VermaRing {
 public:
  explicit VermaRing(int n);

  int n() const { return n_; }
  int nvars() const { return n_ + 1; }
  const sym::VarSpace& space() const { return space_; }

  sym::Exponents one() const { return sym::Exponents(nvars()); }
  /// t_k^power, 1 <= k <= n.
  sym::Exponents t(int k, int power = 1) const;
  sym::Exponents v(int power) const { return v_half(2 * power); }
  sym::Exponents v_half(int half_units) const;
  /// t_k^2 t_j^{-2} v^{v_power}: the weight of Hom(w_j, w_k) twisted by v.
  sym::Exponents weight(int k, int j, int v_power) const;

  /// Twice the true v exponent of a monomial.
  int v_twice(const sym::Exponents& m) const { return m[n_]; }

  sym::LaurentPoly poly(const sym::Exponents& m, const mpz_class& c = 1) const {
    return sym::LaurentPoly::monomial(m, c);
  }
  sym::RatFunc rat(const sym::Exponents& m, const mpz_class& c = 1) const {
    return sym::RatFunc::monomial(m, c);
  }
  sym::RatFunc constant(const mpz_class& c) const { return sym::RatFunc::constant(nvars(), c); }

  /// Point with the given true values of t_1..t_n and v.
  sym::EvalPoint point(const std::vector<mpq_class>& t, const mpq_class& v) const;

  /// Image of t_n under t_1 ... t_n = 1, as a monomial in t_1..t_{n-1}.
  sym::Exponents tn_relation_image() const;
  /// Imposes t_n := (t_1 ... t_{n-1})^{-1}.
  sym::RatFunc impose_relation(const sym::RatFunc& r) const;

 private:
  int n_;
  sym::VarSpace space_;
};

}  // namespace laumon
