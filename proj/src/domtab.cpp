#include "zelchar/domtab.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <tuple>

namespace zelchar {

namespace {

// Strictly increasing k-chains drawn from an ascending pool.
void for_each_chain(const std::vector<int>& pool, std::size_t k,
                    const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<void(std::size_t)> step = [&](std::size_t from) {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i + (k - chosen.size()) <= pool.size(); ++i) {
      chosen.push_back(pool[i]);
      step(i + 1);
      chosen.pop_back();
    }
  };
  step(0);
}

std::vector<int> filtered(const std::vector<int>& values, int lo, int hi) {
  std::vector<int> out;
  for (int v : values) {
    if (v >= lo && v <= hi) out.push_back(v);
  }
  return out;
}

// Rows with a_k = x, a_{k-1..1} drawn ascending from `a_pool` and b-chain
// b_1..b_k drawn from `b_pool`, with b_1 forced to `first_b` when set.
std::vector<DomRow> build_rows(const Segment& seg, const std::vector<int>& a_pool, const std::vector<int>& b_pool,
                               std::optional<int> first_b) {
  using Key = std::tuple<std::size_t, std::vector<int>, std::vector<int>>;
  std::vector<std::pair<Key, DomRow>> keyed;
  for (std::size_t k = 1; k <= a_pool.size() + 1; ++k) {
    std::vector<int> b_rest = b_pool;
    std::size_t b_needed = k;
    if (first_b) {
      b_rest = filtered(b_pool, *first_b + 1, std::numeric_limits<int>::max());
      b_needed = k - 1;
    }
    if (b_needed > b_rest.size()) break;
    for_each_chain(a_pool, k - 1, [&](const std::vector<int>& upper_asc) {
      std::vector<int> a_chain(upper_asc.rbegin(), upper_asc.rend());
      a_chain.push_back(seg.a);
      for_each_chain(b_rest, b_needed, [&](const std::vector<int>& tail) {
        std::vector<int> b_chain;
        if (first_b) b_chain.push_back(*first_b);
        b_chain.insert(b_chain.end(), tail.begin(), tail.end());
        DomRow row{seg, {}};
        for (std::size_t j = 0; j < k; ++j) row.entries.emplace_back(a_chain[j], b_chain[j]);
        keyed.emplace_back(Key{k, a_chain, b_chain}, std::move(row));
      });
    });
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<DomRow> out;
  for (auto& [key, row] : keyed) out.push_back(std::move(row));
  return out;
}

void for_each_product(const std::vector<std::vector<DomRow>>& choices, Flavor flavor,
                      const std::function<void(const DomTableau&)>& visit) {
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  DomTableau q;
  q.flavor = flavor;
  for (const auto& c : choices) q.rows.push_back(c.front());
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    visit(q);
    std::size_t i = choices.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++index[i] < choices[i].size()) {
        q.rows[i] = choices[i][index[i]];
        advanced = true;
        break;
      }
      index[i] = 0;
      q.rows[i] = choices[i].front();
    }
    if (!advanced) return;
  }
}

void bump(std::map<Segment, Count>& counts, const Segment& s, Count by) {
  Count& slot = counts[s];
  slot = checked_add(slot, by);
  if (slot == 0) counts.erase(s);
}

}  // namespace

std::vector<DomRow> enumerate_A_rows(const Segment& seg, const std::vector<int>& begins,
                                     const std::vector<int>& ends) {
  return build_rows(seg, filtered(begins, seg.a + 1, seg.b),
                    filtered(ends, seg.b, std::numeric_limits<int>::max()), std::nullopt);
}

std::vector<DomTableau> enumerate_A(const Multisegment& m) {
  const auto begins = m.begins();
  const auto ends = m.ends();
  std::vector<std::vector<DomRow>> choices;
  for (const auto& seg : admissible_ordering(m).segs) choices.push_back(enumerate_A_rows(seg, begins, ends));
  std::vector<DomTableau> out;
  for_each_product(choices, Flavor::A, [&](const DomTableau& q) { out.push_back(q); });
  return out;
}

Statistics statistics(const DomTableau& q, const Segment& delta) {
  Statistics out;
  for (const auto& row : q.rows) {
    int previous_a = row.source.b + 1;
    for (const auto& [a, b] : row.entries) {
      if (a == delta.a && b == delta.b) ++out.t;
      if (row.source.b < delta.b && previous_a == delta.a && b == delta.b) ++out.tl;
      previous_a = a;
    }
  }
  return out;
}

std::map<Segment, Count> surplus(const DomTableau& q) {
  std::map<Segment, Count> out;
  for (const auto& row : q.rows) {
    int previous_a = row.source.b + 1;
    for (const auto& [a, b] : row.entries) {
      bump(out, Segment(a, b), 1);
      if (row.source.b < b) bump(out, Segment(previous_a, b), -1);
      previous_a = a;
    }
  }
  return out;
}

std::optional<Multisegment> dominant_target(const DomTableau& q) {
  Multisegment out;
  for (const auto& [s, c] : surplus(q)) {
    if (c < 0) return std::nullopt;
    out.add(s, c);
  }
  return out;
}

AMatrixRow a_matrix_row(const Multisegment& m) {
  AMatrixRow out{m, {}};
  const auto begins = m.begins();
  const auto ends = m.ends();
  std::vector<std::vector<DomRow>> choices;
  for (const auto& seg : admissible_ordering(m).segs) choices.push_back(enumerate_A_rows(seg, begins, ends));
  for_each_product(choices, Flavor::A, [&](const DomTableau& q) {
    if (auto n = dominant_target(q)) {
      Count& slot = out.entries[*n];
      slot = checked_add(slot, 1);
    }
  });
  return out;
}

std::vector<DomRow> enumerate_J00_rows(const Segment& seg, const std::vector<int>& begins,
                                       const std::vector<int>& ends) {
  return build_rows(seg, filtered(begins, seg.a + 1, seg.b + 1),
                    filtered(ends, seg.b, std::numeric_limits<int>::max()), seg.b);
}

std::map<Segment, Count> theta_of_J(const DomTableau& p) {
  std::map<Segment, Count> out;
  for (const auto& row : p.rows) {
    const auto& e = row.entries;
    if (e.front().first <= row.source.b) bump(out, Segment(e.front().first, row.source.b), 1);
    for (std::size_t j = 1; j < e.size(); ++j) {
      bump(out, Segment(e[j].first, e[j].second), 1);
      bump(out, Segment(e[j - 1].first, e[j].second), -1);
    }
  }
  return out;
}

bool dominant_connection_exists(const DomTableau& p) {
  std::map<Segment, Count> supply;
  std::map<Segment, Count> demand;
  for (const auto& row : p.rows) {
    const auto& e = row.entries;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j].first <= e[j].second) ++supply[Segment(e[j].first, e[j].second)];
      if (j > 0) ++demand[Segment(e[j - 1].first, e[j].second)];
    }
  }
  for (const auto& [s, need] : demand) {
    auto it = supply.find(s);
    if (it == supply.end() || it->second < need) return false;
  }
  return true;
}

std::vector<JDominant> enumerate_J_dominant(const OrderedMultisegment& m_ord) {
  const Multisegment m = m_ord.multiset();
  const auto begins = m.begins();
  const auto ends = m.ends();
  std::vector<std::vector<DomRow>> choices;
  for (const auto& seg : m_ord.segs) choices.push_back(enumerate_J00_rows(seg, begins, ends));
  std::vector<JDominant> out;
  for_each_product(choices, Flavor::J, [&](const DomTableau& p) {
    if (!dominant_connection_exists(p)) return;
    Multisegment theta;
    for (const auto& [s, c] : theta_of_J(p)) theta.add(s, c);
    out.push_back({p, std::move(theta)});
  });
  return out;
}

MultisegmentCounts a_row_via_J(const OrderedMultisegment& m_ord) {
  MultisegmentCounts out;
  for (const auto& jd : enumerate_J_dominant(m_ord)) {
    Count& slot = out[jd.theta];
    slot = checked_add(slot, 1);
  }
  return out;
}

MackeyTableau transfer(const Multisegment& m, const DomTableau& p) {
  const auto ends = m.ends();
  MackeyTableau q;
  q.s = static_cast<int>(ends.size());
  for (const auto& row : p.rows) {
    MackeyRow out_row{row.source, {}};
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
      const auto [a, b] = row.entries[j];
      auto it = std::lower_bound(ends.begin(), ends.end(), b);
      if (it == ends.end() || *it != b) {
        throw Error(ErrorKind::NotInJ0, "b-entry " + std::to_string(b) + " is not an end point");
      }
      if (j == 0 && a == row.source.b + 1) continue;
      out_row.entries.emplace_back(a, static_cast<int>(it - ends.begin()) + 1);
    }
    q.rows.push_back(std::move(out_row));
  }
  return q;
}

DomTableau transfer_inverse(const Multisegment& m, const MackeyTableau& q) {
  const auto ends = m.ends();
  if (!passes_end_gate(q, ends)) throw Error(ErrorKind::NoConnection, "tableau fails the end gate");
  DomTableau p;
  p.flavor = Flavor::J;
  for (const auto& row : q.rows) {
    DomRow out_row{row.source, {}};
    const int y = row.source.b;
    if (y < ends[static_cast<std::size_t>(row.entries.front().second - 1)]) out_row.entries.emplace_back(y + 1, y);
    for (const auto& [a, e] : row.entries) out_row.entries.emplace_back(a, ends[static_cast<std::size_t>(e - 1)]);
    p.rows.push_back(std::move(out_row));
  }
  return p;
}

std::string to_string(const DomRow& row) {
  std::string out;
  for (const auto& [a, b] : row.entries) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return out;
}

std::string to_string(const DomTableau& q) {
  std::string out;
  for (const auto& row : q.rows) {
    if (!out.empty()) out += " ";
    out += to_string(row);
  }
  return out;
}

}  // namespace zelchar
