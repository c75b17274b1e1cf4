#pragma once

// Segments, multisegments and the support statistics shared by every other
// module. Only the integral block is modelled: a segment is an integer pair.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zelchar/checked.hpp"

namespace zelchar {

/// Integer interval [a,b] with a <= b.
///
/// The default ordering is the canonical one used everywhere for storage and
/// output: by end point, then by begin point.
struct Segment {
  int a = 0;
  int b = 0;

  Segment() = default;
  Segment(int begin, int end);

  int length() const { return b - a + 1; }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend std::strong_ordering operator<=>(const Segment& x, const Segment& y) {
    if (auto c = x.b <=> y.b; c != 0) return c;
    return x.a <=> y.a;
  }
};

/// [a,b] precedes [c,d] when a < c <= b+1 < d+1.
bool precedes(const Segment& x, const Segment& y);

/// Sparse integer vector indexed by simple roots alpha_i.
class SupportVector {
 public:
  SupportVector() = default;

  Count operator[](int i) const;
  void add(int i, Count c);

  const std::map<int, Count>& terms() const { return coeff_; }
  bool empty() const { return coeff_.empty(); }
  Count height() const;
  bool is_nonnegative() const;
  std::optional<int> min_index() const;
  std::optional<int> max_index() const;

  SupportVector& operator+=(const SupportVector& other);
  SupportVector& operator-=(const SupportVector& other);
  friend SupportVector operator+(SupportVector x, const SupportVector& y) { return x += y; }
  friend SupportVector operator-(SupportVector x, const SupportVector& y) { return x -= y; }
  friend bool operator==(const SupportVector&, const SupportVector&) = default;

 private:
  std::map<int, Count> coeff_;
};

/// Finite multiset of segments, stored sparse (no zero multiplicities).
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<std::pair<Segment, Count>> terms);
  explicit Multisegment(const std::vector<Segment>& segs);

  void add(const Segment& seg, Count k = 1);
  Count multiplicity(const Segment& seg) const;

  const std::map<Segment, Count>& terms() const { return mult_; }
  bool empty() const { return mult_.empty(); }
  /// Number of segments counted with multiplicity.
  Count count() const;
  /// |supp(m)|, the sum of multiplicity times length.
  Count height() const;

  /// E(m), ascending.
  std::vector<int> ends() const;
  /// D(m), ascending.
  std::vector<int> begins() const;
  /// m[d]: the segments ending at d.
  Multisegment at_end(int d) const;
  /// Segments in canonical order, repeated by multiplicity.
  std::vector<Segment> expanded() const;

  Multisegment& operator+=(const Multisegment& other);
  friend Multisegment operator+(Multisegment x, const Multisegment& y) { return x += y; }
  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend std::strong_ordering operator<=>(const Multisegment& x, const Multisegment& y);

 private:
  std::map<Segment, Count> mult_;
};

/// A sequence of segments. `admissible` is set only by constructors that
/// verified the sequence is grouped by end point with ends ascending.
struct OrderedMultisegment {
  std::vector<Segment> segs;
  bool admissible = false;

  Multisegment multiset() const { return Multisegment(segs); }
  static bool is_admissible(const std::vector<Segment>& segs);
};

/// A word in the letters alpha_i, letter i stored as i.
using Word = std::vector<int>;

SupportVector support(const Multisegment& m);

/// (delta(m), epsilon(m)): begin-point and end-point counts.
std::pair<SupportVector, SupportVector> delta_eps(const Multisegment& m);

/// epsilon'_b(m) = sum over i != b of epsilon(m)(i) alpha_{i+1}.
SupportVector shifted_epsilon(const Multisegment& m, int b);

bool is_spherical(const Multisegment& m);

/// The unique spherical multisegment with the same support.
Multisegment spherical_closure(const Multisegment& m);
Multisegment spherical_from_support(const SupportVector& beta);

struct RightAligned {
  int end = 0;
  Multisegment aligned;
};

/// Succeeds exactly when the spherical closure of m has a single end point.
/// Throws ZeroMultisegment on the empty multisegment.
std::optional<RightAligned> right_aligned_test(const Multisegment& m);

/// The unique descending word with the given content.
Word descending_word(const SupportVector& beta);

struct IndicatorWord {
  Word word;
  Count r = 1;
  /// Per end point d in E(m), the support of m[d].
  std::vector<std::pair<int, SupportVector>> blocks;
};

IndicatorWord indicator_word(const Multisegment& m);

/// Inverse of the block decomposition: each block is right-aligned at its
/// end point, so its support determines it.
Multisegment multisegment_from_blocks(const std::vector<std::pair<int, SupportVector>>& blocks);

/// Canonical admissible ordering: sorted by (end, begin).
OrderedMultisegment admissible_ordering(const Multisegment& m);

/// Every distinct ordering of m (multiset permutations). Test and sweep use.
std::vector<OrderedMultisegment> all_orderings(const Multisegment& m);

/// All multisegments with segments inside [lo, hi] and 1 <= height <= max_height,
/// ordered by height, then lexicographically in canonical segment order.
std::vector<Multisegment> enumerate_multisegments(int max_height, int lo, int hi);

/// All multisegments whose support equals beta, in ascending order.
std::vector<Multisegment> multisegments_with_support(const SupportVector& beta);

// Text grammar: term ("+" term)*, term := [k "*"] "[" a "," b "]".
// The empty multisegment is written "0".
Multisegment parse_multisegment(std::string_view text);
std::string to_string(const Multisegment& m);
std::string to_string(const Segment& s);
std::string to_string(const SupportVector& v);
std::string to_string(const Word& w);

}  // namespace zelchar
