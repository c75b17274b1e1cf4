#pragma once

// Dominant bi-tableaux: the A-flavor counting of reciprocal multiplicities,
// the J-flavor tableaux of the limit q-character, and the transfer between
// J-flavor and Mackey tableaux.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zelchar/mackey.hpp"
#include "zelchar/multiseg.hpp"

namespace zelchar {

enum class Flavor { A, J };

/// Entries (a_j, b_j) of one row, for the segment `source`.
struct DomRow {
  Segment source;
  std::vector<std::pair<int, int>> entries;

  friend bool operator==(const DomRow&, const DomRow&) = default;
  friend auto operator<=>(const DomRow&, const DomRow&) = default;
};

struct DomTableau {
  std::vector<DomRow> rows;
  Flavor flavor = Flavor::A;

  friend bool operator==(const DomTableau&, const DomTableau&) = default;
  friend auto operator<=>(const DomTableau&, const DomTableau&) = default;
};

struct AMatrixRow {
  Multisegment source;
  MultisegmentCounts entries;
};

/// Rows x = a_k < ... < a_1 <= y <= b_1 < ... < b_k with a-values in
/// `begins` and b-values in `ends`.
std::vector<DomRow> enumerate_A_rows(const Segment& seg, const std::vector<int>& begins,
                                     const std::vector<int>& ends);

/// Every A-flavor tableau of m over the canonical ordering.
std::vector<DomTableau> enumerate_A(const Multisegment& m);

struct Statistics {
  Count t = 0;
  Count tl = 0;
  friend bool operator==(const Statistics&, const Statistics&) = default;
};

Statistics statistics(const DomTableau& q, const Segment& delta);

/// t - tl over every segment where either count is nonzero.
std::map<Segment, Count> surplus(const DomTableau& q);

/// The multisegment sum (t - tl) Delta when the tableau is dominant.
std::optional<Multisegment> dominant_target(const DomTableau& q);

AMatrixRow a_matrix_row(const Multisegment& m);

/// Rows of S(x,y) with a-values in `begins`, the leading a_1 allowed to be
/// y+1 when y+1 is in `begins`, and b-values in `ends`.
std::vector<DomRow> enumerate_J00_rows(const Segment& seg, const std::vector<int>& begins,
                                       const std::vector<int>& ends);

/// theta as a signed segment vector; the pair (y+1, y) stands for zero.
std::map<Segment, Count> theta_of_J(const DomTableau& p);

/// Dominant connection test by bucket counting on segment values.
bool dominant_connection_exists(const DomTableau& p);

struct JDominant {
  DomTableau tableau;
  Multisegment theta;
};

std::vector<JDominant> enumerate_J_dominant(const OrderedMultisegment& m_ord);

MultisegmentCounts a_row_via_J(const OrderedMultisegment& m_ord);

/// phi: b -> e(b) and the leading (y+1, y) entry dropped.
/// Throws NotInJ0 when some b lies outside E(m).
MackeyTableau transfer(const Multisegment& m, const DomTableau& p);

/// psi: e -> d_e, with (y+1, y) reinserted when y < d_{e_1}.
DomTableau transfer_inverse(const Multisegment& m, const MackeyTableau& q);

std::string to_string(const DomRow& row);
std::string to_string(const DomTableau& q);

}  // namespace zelchar
