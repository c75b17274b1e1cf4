#pragma once

// Independent oracles and the exhaustive sweep driver comparing every route
// to reciprocal multiplicities and dominant q-characters.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zelchar/charring.hpp"
#include "zelchar/mackey.hpp"
#include "zelchar/multiseg.hpp"

namespace zelchar {

inline constexpr int kDefaultShuffleCap = 8;

using WordCharacter = std::map<Word, Count>;

/// Shuffle product of the descending words alpha_b ... alpha_a of the
/// segments, with multiplicity. Throws CapExceeded above `cap` letters.
WordCharacter shuffle_character(const Multisegment& m, int cap = kDefaultShuffleCap);

/// Coefficient of w(n) in the character divided exactly by r(n).
/// Throws NonDivisible when the division is not exact.
Count a_via_shuffle(const WordCharacter& character, const Multisegment& n);
Count a_via_shuffle(const Multisegment& m, const Multisegment& n, int cap = kDefaultShuffleCap);

/// n -> A(m, n) over every n with the support of m, zero entries dropped.
MultisegmentCounts a_row_via_shuffle(const Multisegment& m, int cap = kDefaultShuffleCap);

struct Discrepancy {
  Multisegment m;
  std::optional<int> rank;
  std::string route_a;
  std::string route_b;
  std::string detail;
};

/// p_N(sum_n A(m,n) exp(n)) as a segment polynomial.
SegLaurentPoly projected_reciprocal(const Multisegment& m, int rank);

/// Compares the projected reciprocal character with the dominant part of
/// the product of fundamental characters.
std::optional<Discrepancy> check_theorem_A(const Multisegment& m, int rank);

/// Equal cardinalities of dominant J-tableaux and connected Mackey tableaux,
/// transfer injective into the connected ones, theta preserved pointwise,
/// the inverse transfer recovering each tableau, and both theta
/// computations on the Mackey side agreeing.
std::optional<Discrepancy> check_bijection(const Multisegment& m);

enum class Route { ATableau, Mackey, JDominant, Product, Shuffle };

std::string to_string(Route r);
/// Accepts the names printed by to_string; throws ParseError otherwise.
Route parse_route(std::string_view name);

struct SweepConfig {
  int max_height = 3;
  int lo = 0;
  int hi = 1;
  std::vector<int> ranks{1};
  std::set<Route> routes{Route::ATableau, Route::Mackey, Route::JDominant, Route::Product, Route::Shuffle};
  std::size_t start_index = 0;
  unsigned threads = 0;
  int shuffle_cap = kDefaultShuffleCap;
};

/// One comparison of the A-tableau reference against another route.
struct SweepRecord {
  std::size_t index = 0;
  Multisegment m;
  std::optional<int> rank;
  std::string route_a;
  std::string route_b;
  bool ok = true;
  std::string detail;
};

struct SweepReport {
  std::size_t multisegments = 0;
  std::size_t comparisons = 0;
  std::vector<SweepRecord> records;
  std::vector<Discrepancy> discrepancies;
  double seconds = 0.0;
};

/// Exhaustive over enumerate_multisegments(max_height, lo, hi) from
/// start_index on, in parallel; records come back in enumeration order.
SweepReport sweep(const SweepConfig& config);

}  // namespace zelchar
