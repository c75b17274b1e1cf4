#pragma once

// JSON forms of multisegments and polynomials.

#include <string>

#include "json.hpp"
#include "zelchar/charring.hpp"
#include "zelchar/multiseg.hpp"

namespace zelchar {

using Json = nlohmann::json;

/// {"segments":[{"a":..,"b":..,"mult":..},...]} sorted by (b,a).
inline Json to_json(const Multisegment& m) {
  Json segs = Json::array();
  for (const auto& [s, k] : m.terms()) segs.push_back({{"a", s.a}, {"b", s.b}, {"mult", k}});
  return {{"segments", segs}};
}

inline Multisegment multisegment_from_json(const Json& j) {
  try {
    Multisegment out;
    for (const auto& item : j.at("segments")) {
      const int a = item.at("a").get<int>();
      const int b = item.at("b").get<int>();
      const Count k = item.value("mult", Count{1});
      if (a > b || k < 1) throw Error(ErrorKind::ParseError, "invalid segment entry " + item.dump());
      out.add(Segment(a, b), k);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

namespace detail {

inline Json var_json(const Segment& s) { return {{"a", s.a}, {"b", s.b}}; }
inline Json var_json(const DrinfeldVar& y) { return {{"level", y.level}, {"power", y.power}}; }
inline void var_from_json(const Json& j, Segment& out) { out = Segment(j.at("a").get<int>(), j.at("b").get<int>()); }
inline void var_from_json(const Json& j, DrinfeldVar& out) {
  out = DrinfeldVar{j.at("level").get<int>(), j.at("power").get<int>()};
}

inline Json coeff_json(Count c) { return c; }
inline Json coeff_json(const BigInt& c) { return c.str(); }
template <class C>
C coeff_from_json(const Json& j) {
  if (j.is_string()) return coeff::parse<C>(j.get<std::string>());
  return C(j.get<Count>());
}

}  // namespace detail

/// {"terms":[{"coeff":c,"factors":[{...var...,"exp":e},...]},...]} in term
/// order. BigInt coefficients are written as decimal strings.
template <class Var, class C, class Less>
Json to_json(const LaurentPoly<Var, C, Less>& f) {
  Json terms = Json::array();
  for (const auto& [m, c] : f.terms()) {
    Json factors = Json::array();
    for (const auto& [v, e] : m.factors()) {
      Json item = detail::var_json(v);
      item["exp"] = e;
      factors.push_back(item);
    }
    terms.push_back({{"coeff", detail::coeff_json(c)}, {"factors", factors}});
  }
  return {{"terms", terms}};
}

template <class Poly>
Poly poly_from_json(const Json& j) {
  using Mono = typename Poly::Mono;
  using Var = std::remove_cvref_t<decltype(std::declval<typename Mono::Factor>().first)>;
  using C = std::remove_cvref_t<decltype(std::declval<Poly>().coefficient(Mono()))>;
  try {
    Poly out;
    for (const auto& term : j.at("terms")) {
      std::vector<typename Mono::Factor> fs;
      for (const auto& factor : term.at("factors")) {
        Var v;
        detail::var_from_json(factor, v);
        fs.emplace_back(v, factor.at("exp").get<Count>());
      }
      out.add_term(Mono::from_factors(std::move(fs)), detail::coeff_from_json<C>(term.at("coeff")));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace zelchar
