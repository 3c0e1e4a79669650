#include "laumon/ring.hpp"

#include "laumon/errors.hpp"

namespace laumon {

VermaRing::VermaRing(int n) : n_(n), space_(sym::VarSpace::verma(n)) {
  if (n < 1 || n + 1 > sym::Exponents::kMaxVars) throw UsageError("unsupported rank");
}

sym::Exponents VermaRing::t(int k, int power) const {
  if (k < 1 || k > n_) throw UsageError("t index out of range");
  return sym::Exponents::unit(nvars(), k - 1, power);
}

sym::Exponents VermaRing::v_half(int half_units) const {
  return sym::Exponents::unit(nvars(), n_, half_units);
}

sym::Exponents VermaRing::weight(int k, int j, int v_power) const {
  sym::Exponents e = v(v_power);
  e.add(k - 1, 2);
  e.add(j - 1, -2);
  return e;
}

sym::EvalPoint VermaRing::point(const std::vector<mpq_class>& t, const mpq_class& v) const {
  if (static_cast<int>(t.size()) != n_) throw UsageError("need one value per t_k");
  sym::EvalPoint pt;
  pt.values = t;
  pt.values.push_back(v);
  pt.half_index = n_;
  for (const auto& x : pt.values) {
    if (x == 0) throw UsageError("evaluation values must be nonzero");
  }
  return pt;
}

sym::Exponents VermaRing::tn_relation_image() const {
  sym::Exponents e(nvars());
  for (int k = 0; k + 1 < n_; ++k) e.set(k, -1);
  return e;
}

sym::RatFunc VermaRing::impose_relation(const sym::RatFunc& r) const {
  return r.substitute(n_ - 1, tn_relation_image());
}

}  // namespace laumon
