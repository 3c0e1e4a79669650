#include "laumon/json_io.hpp"

#include <cmath>

#include "laumon/errors.hpp"

namespace laumon {

Json to_json(const sym::LaurentPoly& p, const sym::VarSpace& vs) {
  if (p.nvars() != vs.nvars()) throw UsageError("mismatched parameter spaces");
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (int k = 0; k < p.nvars(); ++k) {
      int e = t.exps[k];
      if (k == vs.half_index && e % 2 != 0) {
        exps.push_back(e / 2.0);
      } else {
        exps.push_back(k == vs.half_index ? e / 2 : e);
      }
    }
    out.push_back(Json::array({exps, t.coeff.get_str()}));
  }
  return out;
}

Json to_json(const sym::RatFunc& r, const sym::VarSpace& vs) {
  Json out = Json::object();
  out["num"] = to_json(r.numerator(), vs);
  out["den"] = to_json(r.denominator(), vs);
  return out;
}

sym::LaurentPoly poly_from_json(const Json& j, const sym::VarSpace& vs) {
  if (!j.is_array()) throw UsageError("LaurentPoly JSON must be an array");
  std::vector<sym::LaurentPoly::Term> terms;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_array() || !item[1].is_string()) {
      throw UsageError("LaurentPoly term must be [exponents, \"coefficient\"]");
    }
    const auto& ej = item[0];
    if (static_cast<int>(ej.size()) != vs.nvars()) throw UsageError("exponent vector has wrong length");
    sym::Exponents e(vs.nvars());
    for (int k = 0; k < vs.nvars(); ++k) {
      const auto& x = ej[static_cast<std::size_t>(k)];
      if (k == vs.half_index) {
        double twice = x.get<double>() * 2.0;
        if (twice != std::floor(twice)) throw UsageError("v exponent must be a multiple of 1/2");
        e.set(k, static_cast<int>(twice));
      } else {
        if (!x.is_number_integer()) throw UsageError("exponent must be an integer");
        e.set(k, x.get<int>());
      }
    }
    mpz_class c;
    if (c.set_str(item[1].get<std::string>(), 10) != 0) throw UsageError("bad coefficient string");
    terms.push_back({e, c});
  }
  return sym::LaurentPoly::from_terms(vs.nvars(), std::move(terms));
}

sym::RatFunc ratfunc_from_json(const Json& j, const sym::VarSpace& vs) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw UsageError("RatFunc JSON must be {\"num\": ..., \"den\": ...}");
  }
  return sym::RatFunc::quotient(poly_from_json(j["num"], vs), poly_from_json(j["den"], vs));
}

std::string dump_line(const Json& j) { return j.dump(); }

}  // namespace laumon
