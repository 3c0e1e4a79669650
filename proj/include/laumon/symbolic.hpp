#pragma once

// Exact arithmetic in Z[x_1^{±1}, ..., x_m^{±1}] and its fraction field.
//
// A LaurentPoly is a sparse list of terms kept in graded-lexicographic order.
// A RatFunc keeps its numerator partly expanded and partly as a bag of
// tracked factors, and its denominator entirely as tracked factors. Every
// tracked factor is a canonical polynomial: primitive, divided by a monomial
// so that its lowest term is the constant 1. The localization formulas only
// ever divide by products of binomials 1 - m, so denominators stay factored
// and sums use the least common multiple of the factor bags.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace laumon::sym {

/// Exponent vector of a Laurent monomial. Doubles as the monomial itself.
class Exponents {
 public:
  static constexpr int kMaxVars = 16;

  Exponents() = default;
  explicit Exponents(int nvars);
  Exponents(std::initializer_list<int> exps);

  static Exponents unit(int nvars, int var, int power = 1);

  int size() const { return n_; }
  int operator[](int k) const { return e_[static_cast<std::size_t>(k)]; }
  void set(int k, int value);
  void add(int k, int delta) { set(k, (*this)[k] + delta); }

  int total_degree() const { return total_; }
  bool is_zero() const;

  Exponents& operator+=(const Exponents& o);
  Exponents& operator-=(const Exponents& o);
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }
  friend Exponents operator-(Exponents a, const Exponents& b) { return a -= b; }
  Exponents operator-() const;
  Exponents scaled(int factor) const;

  friend bool operator==(const Exponents& a, const Exponents& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }
  /// Graded lexicographic: total degree first, then x_1, x_2, ...
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b);

  std::size_t hash() const;

 private:
  std::array<std::int16_t, kMaxVars> e_{};
  std::int32_t total_ = 0;
  std::int8_t n_ = 0;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const { return e.hash(); }
};

class LaurentPoly {
 public:
  struct Term {
    Exponents exps;
    mpz_class coeff;
  };

  explicit LaurentPoly(int nvars = 0) : n_(nvars) {}

  static LaurentPoly constant(int nvars, const mpz_class& c);
  static LaurentPoly monomial(const Exponents& exps, const mpz_class& c = 1);
  /// Merges duplicate exponents and drops zeros.
  static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }

  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  /// Coefficient of the given monomial (zero when absent).
  mpz_class coeff(const Exponents& e) const;
  /// Sum of coefficients, i.e. evaluation at all variables = 1.
  mpz_class sum_of_coeffs() const;
  /// gcd of all coefficients (0 for the zero polynomial).
  mpz_class content() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(const mpz_class& c) const;
  /// Multiplication by a monomial.
  LaurentPoly shifted(const Exponents& m) const;
  /// Exact division of every coefficient by c (c must divide the content).
  LaurentPoly divided_by_scalar(const mpz_class& c) const;
  LaurentPoly pow(unsigned k) const;

  /// Replaces x_var by the monomial `image` (which must not involve x_var).
  LaurentPoly substitute(int var, const Exponents& image) const;
  /// Applies x -> x^{-1} to every variable (the dual character).
  LaurentPoly dual() const;

  /// Exact quotient by `divisor`, or nullopt when it does not divide.
  std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  /// Total order used to key factor bags: size, then terms.
  friend bool poly_less(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void check_same_space(const LaurentPoly& o) const;

  int n_ = 0;
  std::vector<Term> terms_;  // strictly increasing exponents, nonzero coeffs
};

struct PolyLess {
  bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return poly_less(a, b); }
};

/// Splitting p = c * x^m * f with f canonical (primitive, lowest term 1).
struct CanonicalSplit {
  mpz_class scalar;
  Exponents shift;
  LaurentPoly factor;
};
CanonicalSplit canonical_split(const LaurentPoly& p);

/// Multiset of canonical factors.
using FactorBag = std::map<LaurentPoly, int, PolyLess>;

class RatFunc {
 public:
  explicit RatFunc(int nvars = 0);
  explicit RatFunc(LaurentPoly num);

  static RatFunc constant(int nvars, const mpz_class& c);
  static RatFunc monomial(const Exponents& m, const mpz_class& c = 1);
  /// num / den; den must be nonzero. Only monomial content is pulled out.
  static RatFunc quotient(const LaurentPoly& num, const LaurentPoly& den);
  /// The tracked factor (1 - m); m must not be the trivial monomial.
  static RatFunc one_minus(const Exponents& m);
  /// (1 - m)^{-1}.
  static RatFunc one_minus_inverse(const Exponents& m);

  int nvars() const { return n_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Fully expanded numerator and denominator (num/den equals *this).
  LaurentPoly numerator() const;
  LaurentPoly denominator() const;

  const LaurentPoly& expanded_part() const { return num_; }
  const FactorBag& numerator_factors() const { return num_factors_; }
  const FactorBag& denominator_factors() const { return den_factors_; }
  const mpz_class& denominator_scale() const { return den_scale_; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc inverse() const;
  RatFunc pow(int k) const;
  RatFunc shifted(const Exponents& m) const;

  /// Cancels tracked factors shared by numerator and denominator and the
  /// common integer content. Never attempts a polynomial gcd.
  RatFunc normalized() const;
  /// Additionally divides the expanded numerator by denominator factors
  /// wherever the division is exact.
  RatFunc reduced() const;

  RatFunc substitute(int var, const Exponents& image) const;

  /// Structural equality of the stored representation (not field equality).
  bool same_representation(const RatFunc& o) const;

 private:
  void cancel_tracked();
  void absorb_integer_content();
  void make_canonical_zero();

  int n_ = 0;
  LaurentPoly num_;
  mpz_class den_scale_ = 1;
  FactorBag num_factors_;
  FactorBag den_factors_;
};

/// Describes how raw exponent slots map to named variables. `half_index`
/// marks a variable whose raw exponent stores twice the true exponent.
struct VarSpace {
  std::vector<std::string> names;
  int half_index = -1;

  int nvars() const { return static_cast<int>(names.size()); }
  /// x_1, ..., x_m with integral exponents.
  static VarSpace generic(int nvars);
  /// t_1, ..., t_n, v with v exponents stored in half units.
  static VarSpace verma(int n);
};

/// Exact rational values for the named variables (true values, not raw).
struct EvalPoint {
  std::vector<mpq_class> values;
  int half_index = -1;
};

mpq_class eval(const LaurentPoly& p, const EvalPoint& pt);
/// Throws EvaluationError when the denominator vanishes at pt.
mpq_class eval(const RatFunc& r, const EvalPoint& pt);

/// True iff a and b are equal in the fraction field.
bool eq_exact(const RatFunc& a, const RatFunc& b);

struct RandomIdentityOptions {
  int trials = 3;
  std::uint64_t seed = 1;
  int retry_budget = 64;
};
/// Schwartz-Zippel test: false on the first point where a and b differ.
/// Points are drawn from [2, 2^20] per variable with a seeded generator.
bool eq_random(const RatFunc& a, const RatFunc& b, const VarSpace& vs,
               const RandomIdentityOptions& opts);
/// Same test for sum(a) = sum(b), evaluating summands separately so the
/// sums are never put over a common denominator.
bool eq_random(const std::vector<RatFunc>& a, const std::vector<RatFunc>& b, const VarSpace& vs,
               const RandomIdentityOptions& opts);
/// The sequence of points eq_random would try (for determinism checks).
std::vector<EvalPoint> random_points(const VarSpace& vs, int count, std::uint64_t seed);

/// sum_{l=lo}^{hi} v^{2l} * m, zero when lo > hi. v is the last variable.
LaurentPoly geometric_block(int lo, int hi, const Exponents& m, const VarSpace& vs);

}  // namespace laumon::sym
