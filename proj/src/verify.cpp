#include "zelchar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "zelchar/domtab.hpp"
#include "zelchar/qchar.hpp"

namespace zelchar {

namespace {

void interleave(const Word& u, const Word& v, std::size_t i, std::size_t j, Word& current, Count c,
                WordCharacter& out) {
  if (i == u.size() && j == v.size()) {
    Count& slot = out[current];
    slot = checked_add(slot, c);
    return;
  }
  if (i < u.size()) {
    current.push_back(u[i]);
    interleave(u, v, i + 1, j, current, c, out);
    current.pop_back();
  }
  if (j < v.size()) {
    current.push_back(v[j]);
    interleave(u, v, i, j + 1, current, c, out);
    current.pop_back();
  }
}

std::string render_counts(const MultisegmentCounts& counts) {
  if (counts.empty()) return "{}";
  std::string out = "{";
  for (const auto& [n, c] : counts) {
    if (out.size() > 1) out += ", ";
    out += to_string(n) + ": " + std::to_string(c);
  }
  return out + "}";
}

std::string describe_difference(const MultisegmentCounts& x, const MultisegmentCounts& y) {
  return render_counts(x) + " vs " + render_counts(y);
}

}  // namespace

WordCharacter shuffle_character(const Multisegment& m, int cap) {
  if (m.height() > cap) {
    throw Error(ErrorKind::CapExceeded,
                "height " + std::to_string(m.height()) + " exceeds shuffle cap " + std::to_string(cap));
  }
  WordCharacter current{{Word{}, 1}};
  for (const Segment& seg : m.expanded()) {
    Word v;
    for (int i = seg.b; i >= seg.a; --i) v.push_back(i);
    WordCharacter next;
    Word scratch;
    for (const auto& [u, c] : current) interleave(u, v, 0, 0, scratch, c, next);
    current = std::move(next);
  }
  return current;
}

Count a_via_shuffle(const WordCharacter& character, const Multisegment& n) {
  const IndicatorWord w = indicator_word(n);
  auto it = character.find(w.word);
  if (it == character.end()) return 0;
  if (it->second % w.r != 0) {
    throw Error(ErrorKind::NonDivisible, "coefficient " + std::to_string(it->second) + " of " + to_string(w.word) +
                                             " is not divisible by " + std::to_string(w.r));
  }
  return it->second / w.r;
}

Count a_via_shuffle(const Multisegment& m, const Multisegment& n, int cap) {
  if (support(m) != support(n)) return 0;
  return a_via_shuffle(shuffle_character(m, cap), n);
}

MultisegmentCounts a_row_via_shuffle(const Multisegment& m, int cap) {
  const WordCharacter character = shuffle_character(m, cap);
  MultisegmentCounts out;
  for (const auto& n : multisegments_with_support(support(m))) {
    if (Count a = a_via_shuffle(character, n); a != 0) out[n] = a;
  }
  return out;
}

SegLaurentPoly projected_reciprocal(const Multisegment& m, int rank) {
  SegLaurentPoly sum;
  for (const auto& [n, a] : a_matrix_row(m).entries) sum.add_term(exp_of(n), a);
  return project_pN(sum, rank);
}

std::optional<Discrepancy> check_theorem_A(const Multisegment& m, int rank) {
  const SegLaurentPoly lhs = projected_reciprocal(m, rank);
  const SegLaurentPoly rhs = dominant_qchar<Count>(m, rank);
  if (lhs == rhs) return std::nullopt;
  return Discrepancy{m, rank, "a-tableau", "product", to_string(lhs) + " vs " + to_string(rhs)};
}

std::optional<Discrepancy> check_bijection(const Multisegment& m) {
  const OrderedMultisegment m_ord = admissible_ordering(m);
  const std::vector<int> ends = m.ends();
  auto fail = [&](const std::string& why) {
    return std::optional(Discrepancy{m, std::nullopt, "j-dominant", "mackey", why});
  };

  std::set<MackeyTableau> connected;
  std::string mackey_problem;
  for_each_mackey_tableau(m_ord, static_cast<int>(ends.size()), [&](const MackeyTableau& q) {
    if (!mackey_connection_exists(q, ends)) return;
    connected.insert(q);
    if (mackey_problem.empty() && theta_of_mackey(q, ends) != theta_of_mackey_matched(q, ends)) {
      mackey_problem = "theta computations disagree on " + to_string(q);
    }
  });
  if (!mackey_problem.empty()) return fail(mackey_problem);

  const std::vector<JDominant> dominant = enumerate_J_dominant(m_ord);
  if (dominant.size() != connected.size()) {
    return fail("cardinalities " + std::to_string(dominant.size()) + " vs " + std::to_string(connected.size()));
  }
  std::set<MackeyTableau> images;
  for (const auto& [p, theta] : dominant) {
    const MackeyTableau q = transfer(m, p);
    if (!connected.contains(q)) return fail("transfer of " + to_string(p) + " is not connected");
    if (!images.insert(q).second) return fail("transfer is not injective at " + to_string(p));
    const Multisegment mackey_theta = theta_of_mackey(q, ends);
    if (mackey_theta != theta) {
      return fail("theta " + to_string(theta) + " vs " + to_string(mackey_theta) + " at " + to_string(p));
    }
    if (transfer_inverse(m, q) != p) return fail("inverse transfer does not recover " + to_string(p));
  }
  return std::nullopt;
}

std::string to_string(Route r) {
  switch (r) {
    case Route::ATableau: return "a-tableau";
    case Route::Mackey: return "mackey";
    case Route::JDominant: return "j-dominant";
    case Route::Product: return "product";
    case Route::Shuffle: return "shuffle";
  }
  return "unknown";
}

Route parse_route(std::string_view name) {
  for (Route r : {Route::ATableau, Route::Mackey, Route::JDominant, Route::Product, Route::Shuffle}) {
    if (to_string(r) == name) return r;
  }
  throw Error(ErrorKind::ParseError, "unknown route \"" + std::string(name) + "\"");
}

namespace {

std::vector<SweepRecord> sweep_one(const SweepConfig& config, std::size_t index, const Multisegment& m) {
  std::vector<SweepRecord> out;
  const MultisegmentCounts reference = a_matrix_row(m).entries;
  auto compare = [&](Route other, const MultisegmentCounts& counts) {
    SweepRecord rec{index, m, std::nullopt, "a-tableau", to_string(other), counts == reference, ""};
    if (!rec.ok) rec.detail = describe_difference(reference, counts);
    out.push_back(std::move(rec));
  };
  const OrderedMultisegment m_ord = admissible_ordering(m);
  if (config.routes.contains(Route::Mackey)) compare(Route::Mackey, a_row_via_mackey(m_ord));
  if (config.routes.contains(Route::JDominant)) compare(Route::JDominant, a_row_via_J(m_ord));
  if (config.routes.contains(Route::Shuffle)) compare(Route::Shuffle, a_row_via_shuffle(m, config.shuffle_cap));
  if (config.routes.contains(Route::Product)) {
    for (int rank : config.ranks) {
      SweepRecord rec{index, m, rank, "a-tableau", "product", true, ""};
      if (auto d = check_theorem_A(m, rank)) {
        rec.ok = false;
        rec.detail = d->detail;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace

SweepReport sweep(const SweepConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  SweepReport report;
  if (config.lo > config.hi || config.max_height < 1) return report;
  for (int rank : config.ranks) {
    if (rank < 1) throw Error(ErrorKind::RankExceeded, "rank must be at least 1");
  }
  const std::vector<Multisegment> family = enumerate_multisegments(config.max_height, config.lo, config.hi);
  const std::size_t first = std::min(config.start_index, family.size());
  const std::size_t count = family.size() - first;
  std::vector<std::vector<SweepRecord>> results(count);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = sweep_one(config, first + i, family[first + i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  report.multisegments = count;
  for (auto& batch : results) {
    for (auto& rec : batch) {
      ++report.comparisons;
      if (!rec.ok) report.discrepancies.push_back({rec.m, rec.rank, rec.route_a, rec.route_b, rec.detail});
      report.records.push_back(std::move(rec));
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace zelchar
