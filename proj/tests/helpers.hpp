#pragma once

#include <string_view>

#include "zelchar/charring.hpp"
#include "zelchar/multiseg.hpp"

namespace test {

inline zelchar::Multisegment ms(std::string_view text) { return zelchar::parse_multisegment(text); }

inline zelchar::SupportVector sv(std::initializer_list<std::pair<int, zelchar::Count>> entries) {
  zelchar::SupportVector out;
  for (const auto& [i, c] : entries) out.add(i, c);
  return out;
}

inline zelchar::DrinfeldPoly<zelchar::Count> ypoly(std::string_view text) {
  return zelchar::parse_poly<zelchar::DrinfeldPoly<zelchar::Count>>(text);
}

inline zelchar::SegLaurentPoly segpoly(std::string_view text) {
  return zelchar::parse_poly<zelchar::SegLaurentPoly>(text);
}

}  // namespace test
