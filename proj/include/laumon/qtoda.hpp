#pragma once

// q-difference Toda operators acting on generating series truncated to a
// degree box. The twist prod Q_i^{gamma_i} is never evaluated; it only
// enters through the monomial by which each shift T_j acts.

#include <map>

#include "laumon/umodule.hpp"

namespace laumon {

struct TruncatedSeries {
  int n = 2;
  int box = 0;
  std::map<Degree, sym::RatFunc> coeffs;
  /// False where a coefficient would need a degree outside the box.
  std::map<Degree, bool> valid;

  /// Coefficient at d; zero below degree 0.
  sym::RatFunc at(const Degree& d, int nvars) const;
};

/// Monomial by which T_j scales the twisted monomial Q^{d + gamma}:
/// v^{d_j - d_{j-1}} t_j^{sigma}.
sym::Exponents shift_action(const VermaRing& ring, int j, const Degree& d, int sigma);

/// G = T_1^2 + sum_{j>=2} T_j^2 (1 - Q_{j-1}).
TruncatedSeries apply_G(const VermaRing& ring, const TruncatedSeries& s, int sigma);
/// S = sum_j T_j^2 + v^{-2} sum_i Q_i T_i T_{i+1}.
TruncatedSeries apply_S(const VermaRing& ring, const TruncatedSeries& s, int sigma);

/// Coefficients (k_d, w_d).
TruncatedSeries build_I(const VermaModule& m, int box);
/// Coefficients [R Gamma(fQ_d, O_d)].
TruncatedSeries build_J(const VermaModule& m, int box);

enum class TodaOperator { S, G };

/// sum_i t_i^{2 sign}.
sym::RatFunc toda_eigenvalue(const VermaRing& ring, int sign);

/// Per-degree comparison (op s)_d = eigenvalue * s_d; failures in the free
/// ring are rechecked modulo t_1 ... t_n = 1 and reported as such.
std::vector<CheckRecord> check_eigen(const VermaRing& ring, const TruncatedSeries& s,
                                     TodaOperator op, int sigma, int eigen_sign);

struct TodaCalibration {
  /// Sign of t in the eigenvalue sum t_i^{2 eigen_sign}; +1 is the literal form.
  int eigen_sign = 1;
  /// Sign forced by the degree-0 equation.
  int sigma = 1;
  bool literal_passes = false;
  bool passes = false;
  Json to_json() const;
};

/// Pins sigma at degree 0 for the literal eigenvalue, checks every degree,
/// and falls back to t -> t^{-1} in the eigenvalue when that fails.
TodaCalibration calibrate_toda(const VermaModule& m, int box);

}  // namespace laumon
