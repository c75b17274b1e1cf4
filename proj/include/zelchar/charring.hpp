#pragma once

// Sparse exact Laurent polynomials over segment variables and over Drinfeld
// variables Y(l, v^p), with the truncation maps between them.

#include <algorithm>
#include <charconv>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zelchar/checked.hpp"
#include "zelchar/multiseg.hpp"

namespace zelchar {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient arithmetic: checked for Count, plain for BigInt.
namespace coeff {

template <class C>
C add(const C& x, const C& y) { return x + y; }
template <class C>
C mul(const C& x, const C& y) { return x * y; }
template <class C>
C neg(const C& x) { return -x; }
template <class C>
std::string str(const C& x) { return x.str(); }
template <class C>
C parse(std::string_view text) {
  try {
    return C(std::string(text));
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "bad coefficient \"" + std::string(text) + "\"");
  }
}

template <>
inline Count add<Count>(const Count& x, const Count& y) { return checked_add(x, y); }
template <>
inline Count mul<Count>(const Count& x, const Count& y) { return checked_mul(x, y); }
template <>
inline Count neg<Count>(const Count& x) { return checked_sub(0, x); }
template <>
inline std::string str<Count>(const Count& x) { return std::to_string(x); }
template <>
inline Count parse<Count>(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  Count value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec == std::errc::result_out_of_range) throw Error(ErrorKind::Overflow, "coefficient " + std::string(text));
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError, "bad coefficient \"" + std::string(text) + "\"");
  }
  return value;
}

}  // namespace coeff

/// Variable order for segment variables: (length, b, a).
struct SegmentKeyLess {
  bool operator()(const Segment& x, const Segment& y) const {
    return std::tuple(x.length(), x.b, x.a) < std::tuple(y.length(), y.b, y.a);
  }
};

/// Y(level, v^power).
struct DrinfeldVar {
  int level = 1;
  int power = 0;
  friend bool operator==(const DrinfeldVar&, const DrinfeldVar&) = default;
};

/// Level ascending, then power descending.
struct DrinfeldLess {
  bool operator()(const DrinfeldVar& x, const DrinfeldVar& y) const {
    if (x.level != y.level) return x.level < y.level;
    return x.power > y.power;
  }
};

template <class Var, class Less = std::less<Var>>
class Monomial {
 public:
  using Factor = std::pair<Var, Count>;

  Monomial() = default;
  explicit Monomial(const Var& v, Count exp = 1) {
    if (exp != 0) factors_.emplace_back(v, exp);
  }

  static Monomial from_factors(std::vector<Factor> fs) {
    std::stable_sort(fs.begin(), fs.end(),
                     [](const Factor& x, const Factor& y) { return Less{}(x.first, y.first); });
    Monomial out;
    for (auto& f : fs) {
      if (!out.factors_.empty() && !Less{}(out.factors_.back().first, f.first)) {
        out.factors_.back().second = checked_add(out.factors_.back().second, f.second);
        if (out.factors_.back().second == 0) out.factors_.pop_back();
      } else if (f.second != 0) {
        out.factors_.push_back(std::move(f));
      }
    }
    return out;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_dominant() const {
    return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second > 0; });
  }

  Count exponent(const Var& v) const {
    for (const auto& [w, e] : factors_) {
      if (!Less{}(v, w) && !Less{}(w, v)) return e;
    }
    return 0;
  }

  Monomial inverse() const {
    Monomial out = *this;
    for (auto& f : out.factors_) f.second = checked_sub(0, f.second);
    return out;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    auto i = x.factors_.begin();
    auto j = y.factors_.begin();
    while (i != x.factors_.end() || j != y.factors_.end()) {
      if (j == y.factors_.end() || (i != x.factors_.end() && Less{}(i->first, j->first))) {
        out.factors_.push_back(*i++);
      } else if (i == x.factors_.end() || Less{}(j->first, i->first)) {
        out.factors_.push_back(*j++);
      } else {
        Count e = checked_add(i->second, j->second);
        if (e != 0) out.factors_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    return out;
  }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.factors_ == y.factors_; }

 private:
  std::vector<Factor> factors_;
};

/// Term order: lexicographic on factor lists, larger exponents first, and a
/// list sorts before any of its proper prefixes so the constant comes last.
template <class Var, class Less>
struct MonomialOrder {
  bool operator()(const Monomial<Var, Less>& x, const Monomial<Var, Less>& y) const {
    const auto& fx = x.factors();
    const auto& fy = y.factors();
    for (std::size_t i = 0;; ++i) {
      if (i == fx.size()) return false;
      if (i == fy.size()) return true;
      if (Less{}(fx[i].first, fy[i].first)) return true;
      if (Less{}(fy[i].first, fx[i].first)) return false;
      if (fx[i].second != fy[i].second) return fx[i].second > fy[i].second;
    }
  }
};

template <class Var, class C = Count, class Less = std::less<Var>>
class LaurentPoly {
 public:
  using Mono = Monomial<Var, Less>;
  using Terms = std::map<Mono, C, MonomialOrder<Var, Less>>;

  LaurentPoly() = default;

  static LaurentPoly constant(const C& c) { return monomial(Mono(), c); }
  static LaurentPoly monomial(const Mono& m, const C& c = C(1)) {
    LaurentPoly out;
    out.add_term(m, c);
    return out;
  }

  void add_term(const Mono& m, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = coeff::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Terms whose monomial has no negative exponent.
  LaurentPoly dominant_part() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) {
      if (m.is_dominant()) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
  }

  /// Applies a monomial map; std::nullopt sends the term to zero.
  template <class OutPoly, class F>
  OutPoly transform(F&& f) const {
    OutPoly out;
    for (const auto& [m, c] : terms_) {
      if (auto image = f(m)) out.add_term(*image, c);
    }
    return out;
  }

  LaurentPoly& operator+=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, coeff::neg(c));
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }

  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    for (const auto& [mx, cx] : x.terms_) {
      for (const auto& [my, cy] : y.terms_) out.add_term(mx * my, coeff::mul(cx, cy));
    }
    return out;
  }
  LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

using SegMonomial = Monomial<Segment, SegmentKeyLess>;
template <class C = Count>
using SegPoly = LaurentPoly<Segment, C, SegmentKeyLess>;
using SegLaurentPoly = SegPoly<Count>;

using DrinfeldMonomial = Monomial<DrinfeldVar, DrinfeldLess>;
template <class C = Count>
using DrinfeldPoly = LaurentPoly<DrinfeldVar, C, DrinfeldLess>;

/// exp(m): the monomial with exponent mult(Delta) at each segment.
inline SegMonomial exp_of(const Multisegment& m) {
  std::vector<SegMonomial::Factor> fs;
  for (const auto& [s, k] : m.terms()) fs.emplace_back(s, k);
  return SegMonomial::from_factors(std::move(fs));
}

/// Inverse of exp_of on dominant monomials.
inline Multisegment multisegment_of(const SegMonomial& mono) {
  Multisegment out;
  for (const auto& [s, e] : mono.factors()) {
    if (e < 0) throw Error(ErrorKind::InvalidSegment, "monomial has a negative exponent");
    out.add(s, e);
  }
  return out;
}

/// The monomial part of p_N: nullopt when a variable is longer than N+1,
/// variables of length N+1 dropped.
inline std::optional<SegMonomial> project_monomial(const SegMonomial& mono, int rank) {
  std::vector<SegMonomial::Factor> kept;
  for (const auto& f : mono.factors()) {
    if (f.first.length() > rank + 1) return std::nullopt;
    if (f.first.length() <= rank) kept.push_back(f);
  }
  return SegMonomial::from_factors(std::move(kept));
}

template <class C>
SegPoly<C> project_pN(const SegPoly<C>& f, int rank) {
  return f.template transform<SegPoly<C>>([rank](const SegMonomial& m) { return project_monomial(m, rank); });
}

/// [x,y] -> Y(y-x+1, v^(x+y)).
inline DrinfeldVar to_drinfeld(const Segment& s) { return {s.length(), s.a + s.b}; }

/// Y(l, v^p) -> [(p-l+1)/2, (p+l-1)/2]; requires p + l odd.
inline Segment from_drinfeld(const DrinfeldVar& y) {
  if (y.level < 1) throw Error(ErrorKind::InvalidSegment, "level must be positive");
  if ((y.power + y.level) % 2 == 0) {
    throw Error(ErrorKind::InvalidSegment, "Y(" + std::to_string(y.level) + "," + std::to_string(y.power) +
                                               ") is off the integral lattice");
  }
  return Segment((y.power - y.level + 1) / 2, (y.power + y.level - 1) / 2);
}

template <class C>
DrinfeldPoly<C> to_drinfeld(const SegPoly<C>& f, int rank) {
  return f.template transform<DrinfeldPoly<C>>([rank](const SegMonomial& m) {
    std::vector<DrinfeldMonomial::Factor> fs;
    for (const auto& [s, e] : m.factors()) {
      if (s.length() > rank) {
        throw Error(ErrorKind::RankExceeded, to_string(s) + " has length above " + std::to_string(rank));
      }
      fs.emplace_back(to_drinfeld(s), e);
    }
    return std::optional(DrinfeldMonomial::from_factors(std::move(fs)));
  });
}

template <class C>
SegPoly<C> from_drinfeld(const DrinfeldPoly<C>& f) {
  return f.template transform<SegPoly<C>>([](const DrinfeldMonomial& m) {
    std::vector<SegMonomial::Factor> fs;
    for (const auto& [y, e] : m.factors()) fs.emplace_back(from_drinfeld(y), e);
    return std::optional(SegMonomial::from_factors(std::move(fs)));
  });
}

// ---------------------------------------------------------------------------
// Text rendering: terms "coeff * v1^e1*v2" joined by "  +  ", constant as a
// bare coefficient, zero as "0". Segment variables print as e[a,b] and
// Drinfeld variables as Y(l,p).

inline std::string render_var(const Segment& s) { return "e" + to_string(s); }
inline std::string render_var(const DrinfeldVar& y) {
  return "Y(" + std::to_string(y.level) + "," + std::to_string(y.power) + ")";
}

template <class Var, class Less>
std::string to_string(const Monomial<Var, Less>& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += render_var(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

template <class Var, class C, class Less>
std::string to_string(const LaurentPoly<Var, C, Less>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += "  +  ";
    out += coeff::str(c);
    if (!m.is_one()) out += " * " + to_string(m);
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

inline int parse_int(std::string_view s) {
  s = trim(s);
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorKind::ParseError, "bad integer \"" + std::string(s) + "\"");
  }
  return v;
}

inline std::pair<int, int> parse_pair(std::string_view body, char open, char close) {
  body = trim(body);
  if (body.size() < 2 || body.front() != open || body.back() != close) {
    throw Error(ErrorKind::ParseError, "bad variable \"" + std::string(body) + "\"");
  }
  auto parts = split(body.substr(1, body.size() - 2), ',');
  if (parts.size() != 2) throw Error(ErrorKind::ParseError, "bad variable \"" + std::string(body) + "\"");
  return {parse_int(parts[0]), parse_int(parts[1])};
}

inline void parse_var(std::string_view s, Segment& out) {
  s = trim(s);
  if (s.empty() || s.front() != 'e') throw Error(ErrorKind::ParseError, "expected e[a,b]");
  auto [a, b] = parse_pair(s.substr(1), '[', ']');
  if (a > b) throw Error(ErrorKind::ParseError, "segment with begin > end");
  out = Segment(a, b);
}

inline void parse_var(std::string_view s, DrinfeldVar& out) {
  s = trim(s);
  if (s.empty() || s.front() != 'Y') throw Error(ErrorKind::ParseError, "expected Y(l,p)");
  auto [l, p] = parse_pair(s.substr(1), '(', ')');
  out = DrinfeldVar{l, p};
}

}  // namespace detail

/// Inverse of to_string for polynomials; a bare factor 1 is accepted.
template <class Poly>
Poly parse_poly(std::string_view text) {
  using Mono = typename Poly::Mono;
  using Var = std::remove_cvref_t<decltype(std::declval<typename Mono::Factor>().first)>;
  using C = std::remove_cvref_t<decltype(std::declval<Poly>().coefficient(Mono()))>;
  text = detail::trim(text);
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  Poly out;
  if (text == "0") return out;
  for (std::string_view term : detail::split(text, '+')) {
    auto star = term.find('*');
    C c = coeff::parse<C>(detail::trim(term.substr(0, star)));
    std::vector<typename Mono::Factor> fs;
    if (star != std::string_view::npos) {
      for (std::string_view factor : detail::split(term.substr(star + 1), '*')) {
        if (factor == "1") continue;
        auto caret = factor.find('^');
        Count e = 1;
        if (caret != std::string_view::npos) e = coeff::parse<Count>(detail::trim(factor.substr(caret + 1)));
        Var v;
        detail::parse_var(factor.substr(0, caret), v);
        fs.emplace_back(v, e);
      }
    }
    out.add_term(Mono::from_factors(std::move(fs)), c);
  }
  return out;
}

}  // namespace zelchar
