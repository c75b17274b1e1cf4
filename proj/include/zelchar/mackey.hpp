#pragma once

// Mackey bi-tableaux: restriction of standard modules at Grothendieck level,
// Mackey connections, and the map to multisegments they induce.

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "zelchar/multiseg.hpp"

namespace zelchar {

/// Reciprocal multiplicities n -> A(m, n) for a fixed m.
using MultisegmentCounts = std::map<Multisegment, Count>;

/// One row (a_1,e_1)...(a_k,e_k) with x = a_k < ... < a_1 <= y and
/// 1 <= e_1 < ... < e_k <= s.
struct MackeyRow {
  Segment source;
  std::vector<std::pair<int, int>> entries;

  friend bool operator==(const MackeyRow&, const MackeyRow&) = default;
  friend auto operator<=>(const MackeyRow&, const MackeyRow&) = default;
};

struct MackeyTableau {
  std::vector<MackeyRow> rows;
  int s = 1;

  friend bool operator==(const MackeyTableau&, const MackeyTableau&) = default;
  friend auto operator<=>(const MackeyTableau&, const MackeyTableau&) = default;
};

/// Factor e (1-based) of a restriction term is parts[e-1]; empty parts stay.
struct RestrictionTerm {
  std::vector<Multisegment> parts;

  friend bool operator==(const RestrictionTerm&, const RestrictionTerm&) = default;
  friend auto operator<=>(const RestrictionTerm&, const RestrictionTerm&) = default;
};

/// All rows for [x,y] and s factors, ordered by (k, a-chain, e-chain).
/// Throws InvalidSegment when x > y.
std::vector<MackeyRow> enumerate_rows(int x, int y, int s);

/// Number of rows, sum over k of C(y-x, k-1) C(s, k).
Count count_rows(int x, int y, int s);

/// Visits every tableau over the ordering, rows varying fastest at the end.
void for_each_mackey_tableau(const OrderedMultisegment& m_ord, int s,
                             const std::function<void(const MackeyTableau&)>& visit);

std::vector<MackeyTableau> enumerate_mackey_tableaux(const OrderedMultisegment& m_ord, int s);

RestrictionTerm restriction_term(const MackeyTableau& q);

/// One term per tableau, in enumeration order.
std::vector<RestrictionTerm> mackey_restriction(const OrderedMultisegment& m_ord, int s);

/// y_i <= d_{e_1} on every row.
bool passes_end_gate(const MackeyTableau& q, const std::vector<int>& ends);

bool mackey_connection_exists(const MackeyTableau& q, const std::vector<int>& ends);

/// Surplus counting: every bucket (a, e) contributes (supply - demand) [a, d_e].
/// Throws NoConnection when some bucket is in deficit or the gate fails.
Multisegment theta_of_mackey(const MackeyTableau& q, const std::vector<int>& ends);

/// Same value through an explicit connection: each demand is matched to a
/// concrete unused entry, and the unmatched entries are summed.
Multisegment theta_of_mackey_matched(const MackeyTableau& q, const std::vector<int>& ends);

/// n -> #{Q connected : theta(Q) = n} with s = |E(m)|.
MultisegmentCounts a_row_via_mackey(const OrderedMultisegment& m_ord);

std::string to_string(const MackeyRow& row);
std::string to_string(const MackeyTableau& q);
std::string to_string(const RestrictionTerm& t);

}  // namespace zelchar
