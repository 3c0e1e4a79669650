#pragma once

// The universal Verma module M = sum_d K(fQ_d) localized, in the basis of
// fixed-point classes, with the operators E_i, F_i, K_i, L_i, e_i, f_i.

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "laumon/characters.hpp"
#include "laumon/fixedpoints.hpp"
#include "laumon/report.hpp"

namespace laumon {

/// Degrees kept by operators: every entry at most `box`. Degrees with a
/// negative entry are the zero space, not a truncation.
struct Truncation {
  int n = 2;
  int box = 0;
  bool contains(const Degree& d) const;
};

class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(Degree degree, int nvars) : degree_(std::move(degree)), nvars_(nvars) {}
  static ModuleVector basis(const FixedPoint& p, int nvars);

  const Degree& degree() const { return degree_; }
  int nvars() const { return nvars_; }
  const std::map<FixedPoint, sym::RatFunc>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  /// Coefficient of [p] (zero when absent).
  sym::RatFunc at(const FixedPoint& p) const;

  /// Adds c to the coefficient of [p]; p must have this vector's degree.
  void add(const FixedPoint& p, const sym::RatFunc& c);
  void add(const ModuleVector& o, const sym::RatFunc& scale);
  ModuleVector scaled(const sym::RatFunc& c) const;
  /// Drops coefficients that vanish exactly.
  void prune();

 private:
  Degree degree_;
  int nvars_ = 0;
  std::map<FixedPoint, sym::RatFunc> coeffs_;
};

/// {"degree": [...], "coeffs": [{"point": ..., "value": RatFunc}, ...]}.
Json to_json(const ModuleVector& x, const sym::VarSpace& vs);

/// True iff every coefficient of a - b vanishes exactly.
bool vectors_equal(const ModuleVector& a, const ModuleVector& b);

struct GradedOperator {
  using Column = std::vector<std::pair<FixedPoint, sym::RatFunc>>;
  std::string label;
  int nvars = 0;
  Degree shift;
  /// Nonzero entries (target, value) in the column of a source point.
  std::function<Column(const FixedPoint&)> column;

  sym::RatFunc entry(const FixedPoint& target, const FixedPoint& source) const;
};

/// Sparse product; empty when the target degree leaves the truncation.
ModuleVector apply(const GradedOperator& op, const ModuleVector& x, const Truncation& tr);

/// Sevostyanov's matrix c_{ij} = n_{ij} - n_{ji} for rank n (1-based).
int sevostyanov_c(int n, int i, int j);

class VermaModule {
 public:
  explicit VermaModule(int n, Orientation o = Orientation::A);

  int n() const { return ring_.n(); }
  const VermaRing& ring() const { return ring_; }
  Orientation orientation() const { return orientation_; }

  /// Fixed points of degree d; empty when d has a negative entry.
  const std::vector<FixedPoint>& points(const Degree& d) const;
  /// S chi of the tangent space at p.
  const sym::RatFunc& sym_chi(const FixedPoint& p) const;
  /// S chi of the correspondence tangent space at (p_small, p_big).
  sym::RatFunc sym_chi_corr(const FixedPoint& p_small, const FixedPoint& p_big) const;

  /// Scalars of K_i and L_i on M_d; L_0 and L_n use the same formula.
  sym::Exponents k_scalar(int i, const Degree& d) const;
  sym::Exponents l_scalar(int i, const Degree& d) const;

  /// E_i from p_small to p_small + e_{ij}, from the product formula.
  sym::RatFunc e_entry_closed(int i, const FixedPoint& p_small, const FixedPoint& p_big) const;
  /// F_i from p_big to p_big - e_{ij}, from the product formula.
  sym::RatFunc f_entry_closed(int i, const FixedPoint& p_big, const FixedPoint& p_small) const;
  /// The same entries as scaled ratios of S chi (localization).
  sym::RatFunc e_entry_localized(int i, const FixedPoint& p_small, const FixedPoint& p_big) const;
  sym::RatFunc f_entry_localized(int i, const FixedPoint& p_big, const FixedPoint& p_small) const;

  GradedOperator op_K(int i, int power = 1) const;
  GradedOperator op_L(int i, int power = 1) const;
  GradedOperator op_E(int i) const;
  GradedOperator op_F(int i) const;
  GradedOperator op_E_localized(int i) const;
  GradedOperator op_F_localized(int i) const;
  /// e_i = E_i K_i^i and f_i = K_i^{-i} F_i.
  GradedOperator op_e(int i) const;
  GradedOperator op_f(int i) const;
  /// e_i and f_i from their own geometric prefactors.
  GradedOperator op_e_direct(int i) const;
  GradedOperator op_f_direct(int i) const;

  /// Identity on M (for writing relations).
  GradedOperator op_identity() const;

 private:
  void check_index(int i, int lo, int hi) const;
  GradedOperator cached(std::string label, Degree shift,
                        std::function<GradedOperator::Column(const FixedPoint&)> col) const;

  VermaRing ring_;
  Orientation orientation_;
  mutable std::map<Degree, std::vector<FixedPoint>> points_;
  mutable std::map<FixedPoint, sym::RatFunc> sym_chi_;
};

/// One term c * (op_k ... op_1) of a relation; ops[0] acts first.
struct Word {
  sym::RatFunc coeff;
  std::vector<GradedOperator> ops;
};

struct Relation {
  std::string name;
  Json params = Json::object();
  /// The relation states sum of words = 0.
  std::vector<Word> words;
};

/// The unprimed and primed relation suites of U_v(sl_n) on M.
std::vector<Relation> quantum_group_relations(const VermaModule& m);

/// Checks a relation on every basis vector whose orbit stays in the box:
/// one record per (relation, degree). Identities failing in the free ring
/// are rechecked modulo t_1 ... t_n = 1 and marked as such.
std::vector<CheckRecord> verify_relation(const VermaModule& m, const Relation& rel,
                                         const Truncation& tr);
std::vector<CheckRecord> verify_relations(const VermaModule& m, const Truncation& tr);

/// Off-diagonal entries of E_i F_i - F_i E_i vanish; one record per degree.
std::vector<CheckRecord> diagonality_check(const VermaModule& m, int i, const Truncation& tr);

/// Product formula vs localization for E_i, F_i (and both constructions of
/// e_i, f_i) on every adjacent pair whose lower end has one of the degrees.
std::vector<CheckRecord> two_path_check(const VermaModule& m, const std::vector<Degree>& degrees);

/// Row data d_{i-1,.}, d_{i,.}, d_{i+1,.} (lengths i-1, i, i+1; the last is
/// all zero when i = n-1).
struct MrakRows {
  std::vector<int> above;
  std::vector<int> row;
  std::vector<int> below;
};
void validate_mrak_rows(int n, int i, const MrakRows& rows);
/// Both sides of the diagonal-entry identity in the t, v variables.
std::pair<sym::RatFunc, sym::RatFunc> mrak_sides(const VermaRing& ring, int i,
                                                 const MrakRows& rows);
/// Both sides in the independent variables s_1..s_i, r_1..r_{i+1},
/// p_1..p_{i-1}, q (in that order).
std::pair<sym::RatFunc, sym::RatFunc> mrak_substituted_sides(int i);
/// The same sides as lists of summands (cheap to build for larger i).
struct MrakTerms {
  std::vector<sym::RatFunc> lhs;
  std::vector<sym::RatFunc> rhs;
};
MrakTerms mrak_substituted_terms(int i);
sym::VarSpace mrak_substituted_space(int i);

/// Random admissible rows with entries up to `max_entry`.
MrakRows random_mrak_rows(int n, int i, int max_entry, std::uint64_t seed);

}  // namespace laumon
