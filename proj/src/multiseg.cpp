#include "zelchar/multiseg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace zelchar {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidSegment: return "InvalidSegment";
    case ErrorKind::ZeroMultisegment: return "ZeroMultisegment";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NoConnection: return "NoConnection";
    case ErrorKind::NotInJ0: return "NotInJ0";
    case ErrorKind::RankExceeded: return "RankExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Segment::Segment(int begin, int end) : a(begin), b(end) {
  if (begin > end) {
    throw Error(ErrorKind::InvalidSegment,
                "[" + std::to_string(begin) + "," + std::to_string(end) + "] has begin > end");
  }
}

bool precedes(const Segment& x, const Segment& y) {
  return x.a < y.a && y.a <= x.b + 1 && x.b + 1 < y.b + 1;
}

// ---------------------------------------------------------------------------
// SupportVector

Count SupportVector::operator[](int i) const {
  auto it = coeff_.find(i);
  return it == coeff_.end() ? 0 : it->second;
}

void SupportVector::add(int i, Count c) {
  if (c == 0) return;
  Count& slot = coeff_[i];
  slot = checked_add(slot, c);
  if (slot == 0) coeff_.erase(i);
}

Count SupportVector::height() const {
  Count h = 0;
  for (const auto& [i, c] : coeff_) h = checked_add(h, c);
  return h;
}

bool SupportVector::is_nonnegative() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](const auto& kv) { return kv.second >= 0; });
}

std::optional<int> SupportVector::min_index() const {
  if (coeff_.empty()) return std::nullopt;
  return coeff_.begin()->first;
}

std::optional<int> SupportVector::max_index() const {
  if (coeff_.empty()) return std::nullopt;
  return coeff_.rbegin()->first;
}

SupportVector& SupportVector::operator+=(const SupportVector& other) {
  for (const auto& [i, c] : other.coeff_) add(i, c);
  return *this;
}

SupportVector& SupportVector::operator-=(const SupportVector& other) {
  for (const auto& [i, c] : other.coeff_) add(i, checked_sub(0, c));
  return *this;
}

// ---------------------------------------------------------------------------
// Multisegment

Multisegment::Multisegment(std::initializer_list<std::pair<Segment, Count>> terms) {
  for (const auto& [s, k] : terms) add(s, k);
}

Multisegment::Multisegment(const std::vector<Segment>& segs) {
  for (const auto& s : segs) add(s, 1);
}

void Multisegment::add(const Segment& seg, Count k) {
  if (k == 0) return;
  Count& slot = mult_[seg];
  slot = checked_add(slot, k);
  if (slot < 0) throw Error(ErrorKind::Overflow, "negative multiplicity for " + to_string(seg));
  if (slot == 0) mult_.erase(seg);
}

Count Multisegment::multiplicity(const Segment& seg) const {
  auto it = mult_.find(seg);
  return it == mult_.end() ? 0 : it->second;
}

Count Multisegment::count() const {
  Count n = 0;
  for (const auto& [s, k] : mult_) n = checked_add(n, k);
  return n;
}

Count Multisegment::height() const {
  Count n = 0;
  for (const auto& [s, k] : mult_) n = checked_add(n, checked_mul(k, s.length()));
  return n;
}

std::vector<int> Multisegment::ends() const {
  std::vector<int> out;
  for (const auto& [s, k] : mult_) {
    if (out.empty() || out.back() != s.b) out.push_back(s.b);
  }
  return out;
}

std::vector<int> Multisegment::begins() const {
  std::vector<int> out;
  for (const auto& [s, k] : mult_) out.push_back(s.a);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Multisegment Multisegment::at_end(int d) const {
  Multisegment out;
  for (const auto& [s, k] : mult_) {
    if (s.b == d) out.add(s, k);
  }
  return out;
}

std::vector<Segment> Multisegment::expanded() const {
  std::vector<Segment> out;
  for (const auto& [s, k] : mult_) out.insert(out.end(), static_cast<std::size_t>(k), s);
  return out;
}

Multisegment& Multisegment::operator+=(const Multisegment& other) {
  for (const auto& [s, k] : other.mult_) add(s, k);
  return *this;
}

std::strong_ordering operator<=>(const Multisegment& x, const Multisegment& y) {
  auto xs = x.expanded();
  auto ys = y.expanded();
  return std::lexicographical_compare_three_way(xs.begin(), xs.end(), ys.begin(), ys.end());
}

bool OrderedMultisegment::is_admissible(const std::vector<Segment>& segs) {
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (segs[i].b < segs[i - 1].b) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Support statistics

SupportVector support(const Multisegment& m) {
  SupportVector out;
  for (const auto& [s, k] : m.terms()) {
    for (int i = s.a; i <= s.b; ++i) out.add(i, k);
  }
  return out;
}

std::pair<SupportVector, SupportVector> delta_eps(const Multisegment& m) {
  SupportVector delta, eps;
  for (const auto& [s, k] : m.terms()) {
    delta.add(s.a, k);
    eps.add(s.b, k);
  }
  return {delta, eps};
}

SupportVector shifted_epsilon(const Multisegment& m, int b) {
  SupportVector out;
  const SupportVector eps = delta_eps(m).second;
  for (const auto& [i, c] : eps.terms()) {
    if (i != b) out.add(i + 1, c);
  }
  return out;
}

bool is_spherical(const Multisegment& m) {
  for (const auto& [x, kx] : m.terms()) {
    for (const auto& [y, ky] : m.terms()) {
      if (precedes(x, y)) return false;
    }
  }
  return true;
}

Multisegment spherical_from_support(const SupportVector& beta) {
  if (!beta.is_nonnegative()) {
    throw Error(ErrorKind::InvalidSegment, "support vector has a negative entry");
  }
  SupportVector rest = beta;
  Multisegment out;
  // Peel the longest segment ending at the current top of the support.
  while (auto top = rest.max_index()) {
    int begin = *top;
    while (rest[begin - 1] > 0) --begin;
    Segment seg(begin, *top);
    out.add(seg);
    for (int i = seg.a; i <= seg.b; ++i) rest.add(i, -1);
  }
  return out;
}

Multisegment spherical_closure(const Multisegment& m) { return spherical_from_support(support(m)); }

std::optional<RightAligned> right_aligned_test(const Multisegment& m) {
  if (m.empty()) throw Error(ErrorKind::ZeroMultisegment, "right-alignment of the empty multisegment");
  // Only b = max E(m) can make delta - eps'_b non-negative.
  const int b = m.ends().back();
  SupportVector diff = delta_eps(m).first - shifted_epsilon(m, b);
  if (!diff.is_nonnegative()) return std::nullopt;
  RightAligned out{b, {}};
  for (const auto& [a, c] : diff.terms()) out.aligned.add(Segment(a, b), c);
  return out;
}

Word descending_word(const SupportVector& beta) {
  Word w;
  const auto& terms = beta.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (it->second < 0) throw Error(ErrorKind::InvalidSegment, "negative content in descending word");
    w.insert(w.end(), static_cast<std::size_t>(it->second), it->first);
  }
  return w;
}

IndicatorWord indicator_word(const Multisegment& m) {
  IndicatorWord out;
  for (int d : m.ends()) {
    SupportVector beta = support(m.at_end(d));
    Word block = descending_word(beta);
    out.word.insert(out.word.end(), block.begin(), block.end());
    out.blocks.emplace_back(d, std::move(beta));
  }
  std::size_t i = 0;
  while (i < out.word.size()) {
    std::size_t j = i;
    while (j < out.word.size() && out.word[j] == out.word[i]) ++j;
    out.r = checked_mul(out.r, checked_factorial(static_cast<Count>(j - i)));
    i = j;
  }
  return out;
}

Multisegment multisegment_from_blocks(const std::vector<std::pair<int, SupportVector>>& blocks) {
  Multisegment out;
  for (const auto& [d, beta] : blocks) {
    // A right-aligned block sum_a c_a [a,d] has support(i) = sum_{a<=i} c_a.
    for (const auto& [i, c] : beta.terms()) {
      Count begins_here = checked_sub(c, beta[i - 1]);
      if (begins_here < 0 || i > d) {
        throw Error(ErrorKind::InvalidSegment, "block at " + std::to_string(d) + " is not right-aligned");
      }
      out.add(Segment(i, d), begins_here);
    }
  }
  return out;
}

OrderedMultisegment admissible_ordering(const Multisegment& m) {
  return {m.expanded(), true};
}

std::vector<OrderedMultisegment> all_orderings(const Multisegment& m) {
  std::vector<Segment> segs = m.expanded();
  std::vector<OrderedMultisegment> out;
  do {
    out.push_back({segs, OrderedMultisegment::is_admissible(segs)});
  } while (std::next_permutation(segs.begin(), segs.end()));
  return out;
}

namespace {

void extend_multisegments(const std::vector<Segment>& pool, std::size_t from, int budget,
                          std::vector<Segment>& current, std::vector<Multisegment>& out) {
  if (!current.empty()) out.emplace_back(current);
  for (std::size_t i = from; i < pool.size(); ++i) {
    if (pool[i].length() > budget) continue;
    current.push_back(pool[i]);
    extend_multisegments(pool, i, budget - pool[i].length(), current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Multisegment> enumerate_multisegments(int max_height, int lo, int hi) {
  std::vector<Segment> pool;
  for (int b = lo; b <= hi; ++b) {
    for (int a = lo; a <= b; ++a) pool.emplace_back(a, b);
  }
  std::vector<Multisegment> out;
  std::vector<Segment> current;
  if (max_height >= 1 && lo <= hi) extend_multisegments(pool, 0, max_height, current, out);
  std::vector<std::pair<Count, Multisegment>> keyed;
  keyed.reserve(out.size());
  for (auto& m : out) keyed.emplace_back(m.height(), std::move(m));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [h, m] : keyed) out.push_back(std::move(m));
  return out;
}

namespace {

void extend_with_support(SupportVector& rest, const Segment& floor, Multisegment& current,
                         std::vector<Multisegment>& out) {
  auto low = rest.min_index();
  if (!low) {
    out.push_back(current);
    return;
  }
  // The lowest remaining index must be the begin point of the next segment;
  // segments are produced in (a, b) lexicographic order to avoid repeats.
  const int a = *low;
  for (int b = a; rest[b] > 0; ++b) {
    if (a == floor.a && b < floor.b) continue;
    Segment seg(a, b);
    for (int i = a; i <= b; ++i) rest.add(i, -1);
    current.add(seg);
    extend_with_support(rest, seg, current, out);
    current.add(seg, -1);
    for (int i = a; i <= b; ++i) rest.add(i, 1);
  }
}

}  // namespace

std::vector<Multisegment> multisegments_with_support(const SupportVector& beta) {
  if (!beta.is_nonnegative()) return {};
  SupportVector rest = beta;
  Multisegment current;
  std::vector<Multisegment> out;
  const int start = beta.min_index().value_or(0);
  extend_with_support(rest, Segment(start, start), current, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Text grammar

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    long long value = 0;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int narrow(Cursor& cur, long long v) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    cur.fail("endpoint out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

Multisegment parse_multisegment(std::string_view text) {
  Cursor cur(text);
  Multisegment out;
  if (cur.at_end()) return out;
  if (cur.peek('0')) {
    cur.integer();
    if (!cur.at_end()) cur.fail("trailing input after 0");
    return out;
  }
  do {
    Count k = 1;
    if (!cur.peek('[')) {
      k = cur.integer();
      if (k < 1) cur.fail("multiplicity must be at least 1");
      cur.expect('*');
    }
    cur.expect('[');
    int a = narrow(cur, cur.integer());
    cur.expect(',');
    int b = narrow(cur, cur.integer());
    cur.expect(']');
    if (a > b) cur.fail("segment [" + std::to_string(a) + "," + std::to_string(b) + "] has begin > end");
    out.add(Segment(a, b), k);
  } while (cur.accept('+'));
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return out;
}

std::string to_string(const Segment& s) {
  return "[" + std::to_string(s.a) + "," + std::to_string(s.b) + "]";
}

std::string to_string(const Multisegment& m) {
  if (m.empty()) return "0";
  std::string out;
  for (const auto& [s, k] : m.terms()) {
    if (!out.empty()) out += "+";
    if (k > 1) out += std::to_string(k) + "*";
    out += to_string(s);
  }
  return out;
}

std::string to_string(const SupportVector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v.terms()) {
    if (!first) os << (c < 0 ? "" : "+");
    first = false;
    if (c != 1) os << c << "*";
    os << "a" << i;
  }
  return os.str();
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (int i : w) {
    if (!out.empty()) out += ".";
    out += "a" + std::to_string(i);
  }
  return out;
}

}  // namespace zelchar
