#include "zelchar/mackey.hpp"

#include <algorithm>
#include <tuple>

namespace zelchar {

namespace {

// Calls visit with every k-subset of pool, in pool order.
void for_each_subset(const std::vector<int>& pool, std::size_t k,
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

using Bucket = std::pair<int, int>;

struct BucketCounts {
  std::map<Bucket, Count> supply;
  std::map<Bucket, Count> demand;
};

BucketCounts bucket_counts(const MackeyTableau& q, const std::vector<int>& ends) {
  BucketCounts out;
  for (const auto& row : q.rows) {
    const int y = row.source.b;
    const int first_end = ends.at(static_cast<std::size_t>(row.entries.front().second - 1));
    if (y != first_end) ++out.demand[{y + 1, row.entries.front().second}];
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
      ++out.supply[row.entries[j]];
      if (j > 0) ++out.demand[{row.entries[j - 1].first, row.entries[j].second}];
    }
  }
  return out;
}

}  // namespace

std::vector<MackeyRow> enumerate_rows(int x, int y, int s) {
  if (x > y) {
    throw Error(ErrorKind::InvalidSegment, "[" + std::to_string(x) + "," + std::to_string(y) + "] has begin > end");
  }
  std::vector<int> a_pool;
  for (int a = y; a > x; --a) a_pool.push_back(a);
  std::vector<int> e_pool;
  for (int e = 1; e <= s; ++e) e_pool.push_back(e);

  using Key = std::tuple<std::size_t, std::vector<int>, std::vector<int>>;
  std::vector<std::pair<Key, MackeyRow>> keyed;
  for (std::size_t k = 1; k <= static_cast<std::size_t>(s) && k <= a_pool.size() + 1; ++k) {
    for_each_subset(a_pool, k - 1, [&](const std::vector<int>& upper) {
      std::vector<int> a_chain = upper;
      a_chain.push_back(x);
      for_each_subset(e_pool, k, [&](const std::vector<int>& e_chain) {
        MackeyRow row{Segment(x, y), {}};
        for (std::size_t j = 0; j < k; ++j) row.entries.emplace_back(a_chain[j], e_chain[j]);
        keyed.emplace_back(Key{k, a_chain, e_chain}, std::move(row));
      });
    });
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<MackeyRow> out;
  out.reserve(keyed.size());
  for (auto& [key, row] : keyed) out.push_back(std::move(row));
  return out;
}

Count count_rows(int x, int y, int s) {
  if (x > y) {
    throw Error(ErrorKind::InvalidSegment, "[" + std::to_string(x) + "," + std::to_string(y) + "] has begin > end");
  }
  Count total = 0;
  for (Count k = 1; k <= s; ++k) {
    total = checked_add(total, checked_mul(checked_binomial(y - x, k - 1), checked_binomial(s, k)));
  }
  return total;
}

void for_each_mackey_tableau(const OrderedMultisegment& m_ord, int s,
                             const std::function<void(const MackeyTableau&)>& visit) {
  std::vector<std::vector<MackeyRow>> choices;
  for (const auto& seg : m_ord.segs) {
    choices.push_back(enumerate_rows(seg.a, seg.b, s));
    if (choices.back().empty()) return;
  }
  MackeyTableau q;
  q.s = s;
  for (const auto& c : choices) q.rows.push_back(c.front());
  std::vector<std::size_t> index(choices.size(), 0);
  while (true) {
    visit(q);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++index[i] < choices[i].size()) {
        q.rows[i] = choices[i][index[i]];
        break;
      }
      index[i] = 0;
      q.rows[i] = choices[i].front();
      if (i == 0) return;
    }
    if (choices.empty()) return;
  }
}

std::vector<MackeyTableau> enumerate_mackey_tableaux(const OrderedMultisegment& m_ord, int s) {
  std::vector<MackeyTableau> out;
  for_each_mackey_tableau(m_ord, s, [&](const MackeyTableau& q) { out.push_back(q); });
  return out;
}

RestrictionTerm restriction_term(const MackeyTableau& q) {
  RestrictionTerm out;
  out.parts.resize(static_cast<std::size_t>(q.s));
  for (const auto& row : q.rows) {
    int upper = row.source.b + 1;
    for (const auto& [a, e] : row.entries) {
      out.parts.at(static_cast<std::size_t>(e - 1)).add(Segment(a, upper - 1));
      upper = a;
    }
  }
  return out;
}

std::vector<RestrictionTerm> mackey_restriction(const OrderedMultisegment& m_ord, int s) {
  std::vector<RestrictionTerm> out;
  for_each_mackey_tableau(m_ord, s, [&](const MackeyTableau& q) { out.push_back(restriction_term(q)); });
  return out;
}

bool passes_end_gate(const MackeyTableau& q, const std::vector<int>& ends) {
  for (const auto& row : q.rows) {
    const auto e = static_cast<std::size_t>(row.entries.front().second);
    if (e < 1 || e > ends.size() || row.source.b > ends[e - 1]) return false;
  }
  return true;
}

bool mackey_connection_exists(const MackeyTableau& q, const std::vector<int>& ends) {
  if (!passes_end_gate(q, ends)) return false;
  const BucketCounts counts = bucket_counts(q, ends);
  for (const auto& [bucket, need] : counts.demand) {
    auto it = counts.supply.find(bucket);
    if (it == counts.supply.end() || it->second < need) return false;
  }
  return true;
}

Multisegment theta_of_mackey(const MackeyTableau& q, const std::vector<int>& ends) {
  if (!passes_end_gate(q, ends)) throw Error(ErrorKind::NoConnection, "tableau fails the end gate");
  const BucketCounts counts = bucket_counts(q, ends);
  Multisegment out;
  for (const auto& [bucket, have] : counts.supply) {
    auto it = counts.demand.find(bucket);
    const Count surplus = have - (it == counts.demand.end() ? 0 : it->second);
    if (surplus < 0) throw Error(ErrorKind::NoConnection, "bucket in deficit");
    out.add(Segment(bucket.first, ends[static_cast<std::size_t>(bucket.second - 1)]), surplus);
  }
  for (const auto& [bucket, need] : counts.demand) {
    if (!counts.supply.contains(bucket)) throw Error(ErrorKind::NoConnection, "unmet demand");
  }
  return out;
}

Multisegment theta_of_mackey_matched(const MackeyTableau& q, const std::vector<int>& ends) {
  if (!passes_end_gate(q, ends)) throw Error(ErrorKind::NoConnection, "tableau fails the end gate");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::vector<Bucket> demands;
  for (std::size_t i = 0; i < q.rows.size(); ++i) {
    const auto& row = q.rows[i];
    const int first_end = ends[static_cast<std::size_t>(row.entries.front().second - 1)];
    if (row.source.b != first_end) demands.emplace_back(row.source.b + 1, row.entries.front().second);
    for (std::size_t j = 0; j < row.entries.size(); ++j) {
      cells.emplace_back(i, j);
      if (j > 0) demands.emplace_back(row.entries[j - 1].first, row.entries[j].second);
    }
  }
  std::vector<bool> used(cells.size(), false);
  for (const auto& want : demands) {
    bool matched = false;
    for (std::size_t c = 0; c < cells.size() && !matched; ++c) {
      if (used[c]) continue;
      if (q.rows[cells[c].first].entries[cells[c].second] == want) {
        used[c] = true;
        matched = true;
      }
    }
    if (!matched) throw Error(ErrorKind::NoConnection, "no entry left for a demand");
  }
  Multisegment out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (used[c]) continue;
    const auto& [a, e] = q.rows[cells[c].first].entries[cells[c].second];
    out.add(Segment(a, ends[static_cast<std::size_t>(e - 1)]));
  }
  return out;
}

MultisegmentCounts a_row_via_mackey(const OrderedMultisegment& m_ord) {
  const std::vector<int> ends = m_ord.multiset().ends();
  MultisegmentCounts out;
  for_each_mackey_tableau(m_ord, static_cast<int>(ends.size()), [&](const MackeyTableau& q) {
    if (!mackey_connection_exists(q, ends)) return;
    Count& slot = out[theta_of_mackey(q, ends)];
    slot = checked_add(slot, 1);
  });
  return out;
}

std::string to_string(const MackeyRow& row) {
  std::string out;
  for (const auto& [a, e] : row.entries) out += "(" + std::to_string(a) + "," + std::to_string(e) + ")";
  return out;
}

std::string to_string(const MackeyTableau& q) {
  std::string out;
  for (const auto& row : q.rows) {
    if (!out.empty()) out += " ";
    out += to_string(row);
  }
  return out;
}

std::string to_string(const RestrictionTerm& t) {
  std::string out;
  for (const auto& part : t.parts) {
    if (!out.empty()) out += " | ";
    out += to_string(part);
  }
  return out;
}

}  // namespace zelchar
