#pragma once

// q-characters of standard modules of quantum affine sl(N+1): the fundamental
// formula, the product over segments, and the bitableau expansion.

#include <algorithm>
#include <vector>

#include "zelchar/charring.hpp"
#include "zelchar/multiseg.hpp"

namespace zelchar {

/// Fundamental module Y(level, v^power) for rank N; level + power is odd.
class FundamentalSpec {
 public:
  /// Throws RankExceeded when level > rank and InvalidSegment on a bad level
  /// or an off-lattice power.
  FundamentalSpec(int level, int power, int rank);

  static FundamentalSpec from_segment(const Segment& seg, int rank);

  int level() const { return level_; }
  int power() const { return power_; }
  int rank() const { return rank_; }
  Segment segment() const { return from_drinfeld(DrinfeldVar{level_, power_}); }

 private:
  int level_;
  int power_;
  int rank_;
};

/// Sum over c_1 < ... < c_l in [1, N+1] of
/// prod_m Y(c_m, v^(p+l+c_m-2m)) Y(c_m - 1, v^(p+l+c_m-2m+1))^-1,
/// with Y(0, .) = Y(N+1, .) = 1, in segment variables.
template <class C = Count>
SegPoly<C> fundamental_qchar(const FundamentalSpec& spec) {
  const int l = spec.level();
  const int rank = spec.rank();
  const int top = rank + 1;
  SegPoly<C> out;
  std::vector<int> chain;
  auto emit = [&] {
    std::vector<SegMonomial::Factor> fs;
    for (int m = 1; m <= l; ++m) {
      const int c = chain[static_cast<std::size_t>(m - 1)];
      const int q = spec.power() + l + c - 2 * m;
      if (c <= rank) fs.emplace_back(from_drinfeld(DrinfeldVar{c, q}), 1);
      if (c - 1 >= 1) fs.emplace_back(from_drinfeld(DrinfeldVar{c - 1, q + 1}), -1);
    }
    out.add_term(SegMonomial::from_factors(std::move(fs)), C(1));
  };
  auto step = [&](auto&& self, int from) -> void {
    if (static_cast<int>(chain.size()) == l) {
      emit();
      return;
    }
    for (int c = from; c <= top; ++c) {
      chain.push_back(c);
      self(self, c + 1);
      chain.pop_back();
    }
  };
  step(step, 1);
  return out;
}

/// Product over segments: fundamental character for length <= N, 1 for
/// length N+1, and 0 for anything longer.
template <class C = Count>
SegPoly<C> standard_qchar(const Multisegment& m, int rank) {
  SegPoly<C> out = SegPoly<C>::constant(C(1));
  for (const auto& [seg, k] : m.terms()) {
    if (seg.length() > rank + 1) return SegPoly<C>();
    if (seg.length() == rank + 1) continue;
    const SegPoly<C> factor = fundamental_qchar<C>(FundamentalSpec::from_segment(seg, rank));
    for (Count i = 0; i < k; ++i) out *= factor;
  }
  return out;
}

/// Words of S(x,y) that survive truncation at degree N+1 (b_k - a_k <= N),
/// summed as exp(theta(w)) before the length-(N+1) collapse.
template <class C = Count>
SegPoly<C> truncated_row_character(const Segment& seg, int rank) {
  SegPoly<C> out;
  const int x = seg.a;
  const int y = seg.b;
  if (y - x > rank) return out;
  // Descending pool for a_1 > ... > a_{k-1} and ascending pool for b_2 < ... < b_k.
  std::vector<int> a_pool;
  for (int a = y + 1; a > x; --a) a_pool.push_back(a);
  std::vector<int> b_pool;
  for (int b = y + 1; b <= x + rank; ++b) b_pool.push_back(b);

  auto subsets = [](const std::vector<int>& pool, std::size_t k, auto&& visit) {
    std::vector<int> chosen;
    auto step = [&](auto&& self, std::size_t from) -> void {
      if (chosen.size() == k) {
        visit(chosen);
        return;
      }
      for (std::size_t i = from; i + (k - chosen.size()) <= pool.size(); ++i) {
        chosen.push_back(pool[i]);
        self(self, i + 1);
        chosen.pop_back();
      }
    };
    step(step, 0);
  };

  const std::size_t longest = std::min(a_pool.size(), b_pool.size()) + 1;
  for (std::size_t k = 1; k <= longest; ++k) {
    subsets(a_pool, k - 1, [&](const std::vector<int>& upper) {
      std::vector<int> a(upper);
      a.push_back(x);
      subsets(b_pool, k - 1, [&](const std::vector<int>& tail) {
        std::vector<int> b{y};
        b.insert(b.end(), tail.begin(), tail.end());
        std::vector<SegMonomial::Factor> fs;
        if (a.front() <= y) fs.emplace_back(Segment(a.front(), y), 1);
        for (std::size_t j = 1; j < k; ++j) {
          fs.emplace_back(Segment(a[j], b[j]), 1);
          fs.emplace_back(Segment(a[j - 1], b[j]), -1);
        }
        out.add_term(SegMonomial::from_factors(std::move(fs)), C(1));
      });
    });
  }
  return out;
}

/// Sum over bitableaux of exp(theta) truncated at degree N+1, before p_N.
template <class C = Count>
SegPoly<C> truncated_limit_character(const Multisegment& m, int rank) {
  SegPoly<C> out = SegPoly<C>::constant(C(1));
  for (const auto& seg : admissible_ordering(m).segs) {
    out *= truncated_row_character<C>(seg, rank);
    if (out.is_zero()) return out;
  }
  return out;
}

template <class C = Count>
SegPoly<C> chi_N_via_tableaux(const Multisegment& m, int rank) {
  return project_pN(truncated_limit_character<C>(m, rank), rank);
}

template <class C = Count>
SegPoly<C> dominant_qchar(const Multisegment& m, int rank) {
  return standard_qchar<C>(m, rank).dominant_part();
}

}  // namespace zelchar
