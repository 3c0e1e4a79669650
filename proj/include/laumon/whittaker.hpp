#pragma once

// Shapovalov form, Whittaker vectors k and w, and characters of derived
// global sections, all in the fixed-point basis.

#include "laumon/umodule.hpp"

namespace laumon {

/// (-1)^{sum d} v^{...} prod t_i^{(2i-1)(d_{i-1}-d_i)}, the scalar in front of
/// R Gamma(G_1 x G_2 x D) in the Shapovalov form.
sym::RatFunc shapovalov_prefactor(const VermaRing& ring, const Degree& d);
/// Self-pairing of the basis vector [p].
sym::RatFunc shapovalov_diagonal(const VermaModule& m, const FixedPoint& p);
/// Symmetric bilinear form; vectors of different degrees pair to zero.
sym::RatFunc shapovalov_pair(const VermaModule& m, const ModuleVector& x, const ModuleVector& y);

/// Class of the structure sheaf of fQ_d in the fixed-point basis.
ModuleVector structure_sheaf_vector(const VermaModule& m, const Degree& d);
/// Character of R Gamma of the class x.
sym::RatFunc rgamma_char(const VermaModule& m, const ModuleVector& x);

ModuleVector whittaker_k(const VermaModule& m, const Degree& d);
sym::RatFunc whittaker_w_prefactor(const VermaRing& ring, const Degree& d);
ModuleVector whittaker_w(const VermaModule& m, const Degree& d);
/// Monomial relating (k_d, w_d) to [R Gamma(fQ_d, O_d)].
sym::RatFunc kw_prefactor(const VermaRing& ring, const Degree& d);
/// (k_d, w_d) through the pairing, and the prefactor times R Gamma.
std::pair<sym::RatFunc, sym::RatFunc> pair_kw(const VermaModule& m, const Degree& d);

/// e_i^* through the Shapovalov form: (e_i x, y) = (x, e_i^* y).
GradedOperator op_e_adjoint(const VermaModule& m, int i);
/// e_i^* as K_i^{2i} f_i.
GradedOperator op_e_star(const VermaModule& m, int i);

/// p_*[L_i] on fQ_d, by localization over the correspondence.
ModuleVector pushforward_line(const VermaModule& m, int i, const Degree& d);

/// sum_{j<=i} prod_{k<i}(p_k - s_j) prod_{k!=j}(s_k - s_j)^{-1} = 1 in
/// independent variables s_1..s_i, p_1..p_{i-1}.
bool partial_fraction_identity(int i);

std::vector<CheckRecord> shapovalov_checks(const VermaModule& m, const Truncation& tr);
std::vector<CheckRecord> whittaker_checks(const VermaModule& m, const Truncation& tr);
/// Pairing identity for every degree in the list.
std::vector<CheckRecord> kw_checks(const VermaModule& m, const std::vector<Degree>& degrees);

}  // namespace laumon
