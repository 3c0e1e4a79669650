#pragma once

// Torus characters at fixed points. Characters are Laurent polynomials in
// t_1..t_n, v whose monomials are weights with multiplicities.

#include <vector>

#include "laumon/fixedpoints.hpp"
#include "laumon/ring.hpp"

namespace laumon {

using Character = sym::LaurentPoly;

/// Which way tangent weights enter the localization denominators:
/// A uses prod (1 - w)^{-1} over tangent weights w, B uses the dual weights.
enum class Orientation { A, B };

Orientation parse_orientation(const std::string& s);
const char* orientation_name(Orientation o);

/// Char of Hom(O(-a.0) w_j, O(-b.0) w_k): t_k^2 t_j^{-2} times the
/// sections of O((a-b).0), zero when a < b.
Character hom_char(const VermaRing& ring, int a, int j, int b, int k);

struct FlagSummand {
  int column;
  int twist;
};
/// W_1 c W_2 c ... c W_r c W = O w_1 + ... + O w_n, W_l given as summands
/// O(-twist.0) w_column.
struct FlagData {
  int n = 0;
  std::vector<std::vector<FlagSummand>> rows;
};

/// Throws UsageError unless the rows describe a flag of subsheaves.
void validate_flag(const FlagData& f);
FlagData flag_of(const FixedPoint& p);
/// Flag of the correspondence point: W'_i (from p_big) inserted below W_i.
FlagData correspondence_flag(const FixedPoint& p_small, const FixedPoint& p_big);

/// Tangent character computed from Hom spaces of the flag.
Character flag_tangent_oracle(const VermaRing& ring, const FlagData& f);

/// Closed-form tangent character of the based space at p.
Character tangent_char(const VermaRing& ring, const FixedPoint& p);

/// The (i, j) with p_big = p_small + e_{ij}; throws UsageError otherwise.
std::pair<int, int> adjacency_of(const FixedPoint& p_small, const FixedPoint& p_big);

/// Closed-form tangent character of the correspondence at (p_small, p_big).
Character corr_tangent_char(const VermaRing& ring, const FixedPoint& p_small,
                            const FixedPoint& p_big);

/// Weight t_j^2 v^{-2 d_{ij}} of the line bundle on the correspondence.
sym::Exponents corr_line_weight(const VermaRing& ring, const FixedPoint& p_small,
                                const FixedPoint& p_big);

/// prod over weights w of (1 - w)^{-1}; w is replaced by w^{-1} under B.
sym::RatFunc sym_inverse(const Character& c, Orientation o = Orientation::A);

/// Weight of det R Gamma(C, W_1) x ... x det R Gamma(C, W_{n-1}) at p.
sym::Exponents det_rgamma_weight(const VermaRing& ring, const FixedPoint& p);

}  // namespace laumon
