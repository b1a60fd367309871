#include "sav132/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sav132 {

namespace {

void require_bijection(const std::vector<int>& v) {
  if (v.empty())
    throw std::invalid_argument("permutation must have size >= 1");
  const int n = static_cast<int>(v.size());
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || x > n)
      throw std::invalid_argument("permutation value " + std::to_string(x) + " outside [1, " +
                                  std::to_string(n) + "]");
    if (seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permutation value " + std::to_string(x) + " repeated");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  require_bijection(image_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity size must be >= 1");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(trusted_tag{}, std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i)
      throw std::invalid_argument("cannot parse permutation from \"" + std::string(text) + "\"");
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return Permutation(std::move(values));
}

int Permutation::at(int i) const {
  if (i < 1 || i > size())
    throw std::out_of_range("index " + std::to_string(i) + " outside [1, " + std::to_string(size()) + "]");
  return (*this)(i);
}

int Permutation::position_of(int v) const {
  auto it = std::find(image_.begin(), image_.end(), v);
  if (it == image_.end())
    throw std::out_of_range("value " + std::to_string(v) + " not in permutation");
  return static_cast<int>(it - image_.begin()) + 1;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)((*this)(i)) != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(image_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("compose: size mismatch (" + std::to_string(p.size()) + " vs " +
                                std::to_string(q.size()) + ")");
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(Permutation::trusted_tag{}, std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) out[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation(Permutation::trusted_tag{}, std::move(out));
}

std::string CycleDecomposition::to_string() const {
  std::ostringstream os;
  for (const auto& cycle : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) os << ',';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation CycleDecomposition::to_permutation() const {
  std::size_t n = 0;
  for (const auto& cycle : cycles) n += cycle.size();
  std::vector<int> image(n, 0);
  for (const auto& cycle : cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      if (from < 1 || static_cast<std::size_t>(from) > n)
        throw std::invalid_argument("cycle value out of range");
      image[static_cast<std::size_t>(from - 1)] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(image));
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  CycleDecomposition out;
  std::vector<bool> visited(static_cast<std::size_t>(p.size()) + 1, false);
  // Scanning starts in increasing order, so every cycle starts at its minimum
  // and cycles come out sorted by first element.
  for (int start = 1; start <= p.size(); ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    for (int v = start; !visited[static_cast<std::size_t>(v)]; v = p(v)) {
      visited[static_cast<std::size_t>(v)] = true;
      cycle.push_back(v);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

int cycle_length_of(const Permutation& p, int v) {
  if (v < 1 || v > p.size())
    throw std::invalid_argument("cycle_length_of: value " + std::to_string(v) + " outside [1, " +
                                std::to_string(p.size()) + "]");
  int len = 1;
  for (int w = p(v); w != v; w = p(w)) ++len;
  return len;
}

std::vector<int> cycle_type(const Permutation& p) {
  std::vector<int> lengths;
  for (const auto& c : cycle_decomposition(p).cycles) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Pattern::Pattern(Permutation p) : perm_(std::move(p)) {
  if (perm_.size() > 4)
    throw std::invalid_argument("patterns longer than 4 are not supported");
}

Pattern Pattern::of(std::string_view digits) {
  std::vector<int> v;
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("pattern digits must be 1-9");
    v.push_back(c - '0');
  }
  return Pattern(Permutation(std::move(v)));
}

namespace {

// Length-3 scan. The value 2 sits in one slot, so at least one end slot of
// the pattern holds an extreme value (1 or 3). That end slot is left free; the
// other two indices are enumerated as a pair u < v and the free slot is
// satisfied by a prefix (or suffix) minimum/maximum.
bool contains_length3(std::span<const int> a, const Permutation& t) {
  const std::size_t n = a.size();
  if (n < 3) return false;

  const bool free_first = t(1) != 2;
  const int free_value = free_first ? t(1) : t(3);
  const bool free_is_min = free_value == 1;
  const bool pair_ascending = free_first ? t(2) < t(3) : t(1) < t(2);

  constexpr int kInf = std::numeric_limits<int>::max();
  constexpr int kNegInf = std::numeric_limits<int>::min();
  // Extreme over a[0..i-1] (free slot first) or a[i+1..n-1] (free slot last).
  std::vector<int> extreme(n + 1, free_is_min ? kInf : kNegInf);
  auto pick = [free_is_min](int x, int y) { return free_is_min ? std::min(x, y) : std::max(x, y); };
  if (free_first) {
    for (std::size_t i = 0; i < n; ++i) extreme[i + 1] = pick(extreme[i], a[i]);
  } else {
    for (std::size_t i = n; i-- > 0;) extreme[i] = pick(extreme[i + 1], a[i]);
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const int x = a[u], y = a[v];
      if ((x < y) != pair_ascending) continue;
      const int bound = free_first ? extreme[u] : extreme[v + 1];
      if (free_is_min ? bound < std::min(x, y) : bound > std::max(x, y)) return true;
    }
  }
  return false;
}

bool order_isomorphic(std::span<const int> values, const Permutation& t) {
  for (int i = 0; i < t.size(); ++i)
    for (int j = i + 1; j < t.size(); ++j)
      if ((values[static_cast<std::size_t>(i)] < values[static_cast<std::size_t>(j)]) != (t(i + 1) < t(j + 1)))
        return false;
  return true;
}

bool search_subsequence(std::span<const int> a, const Permutation& t, std::vector<int>& chosen, int from) {
  if (static_cast<int>(chosen.size()) == t.size()) return order_isomorphic(chosen, t);
  const int need = t.size() - static_cast<int>(chosen.size());
  for (int i = from; i + need <= static_cast<int>(a.size()); ++i) {
    chosen.push_back(a[static_cast<std::size_t>(i)]);
    if (search_subsequence(a, t, chosen, i + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(std::span<const int> one_line, const Pattern& t) {
  if (t.size() > static_cast<int>(one_line.size())) return false;
  if (t.size() == 3) return contains_length3(one_line, t.permutation());
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(t.size()));
  return search_subsequence(one_line, t.permutation(), chosen, 0);
}

bool contains_132(std::span<const int> a) {
  // Right-to-left: `two` is the largest value seen so far that has a larger
  // value to its left; any later (leftward) value below it completes a 132.
  int two = std::numeric_limits<int>::min();
  int stack[64];
  std::vector<int> heap_stack;
  int* st = stack;
  if (a.size() > 64) {
    heap_stack.resize(a.size());
    st = heap_stack.data();
  }
  int top = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const int x = *it;
    if (x < two) return true;
    while (top > 0 && st[top - 1] < x) two = std::max(two, st[--top]);
    st[top++] = x;
  }
  return false;
}

void square_into(std::span<const int> one_line, std::span<int> out) {
  for (std::size_t i = 0; i < one_line.size(); ++i)
    out[i] = one_line[static_cast<std::size_t>(one_line[i] - 1)];
}

bool strongly_avoids(const Permutation& p, const Pattern& t) {
  return !contains_pattern(p, t) && !contains_pattern(square(p), t);
}

bool strongly_avoids_132(const Permutation& p) { return strongly_avoids_132(p.one_line()); }

bool strongly_avoids_132(std::span<const int> one_line) {
  if (contains_132(one_line)) return false;
  int buf[64];
  std::vector<int> heap;
  std::span<int> sq;
  if (one_line.size() <= 64) {
    sq = std::span<int>(buf, one_line.size());
  } else {
    heap.resize(one_line.size());
    sq = heap;
  }
  square_into(one_line, sq);
  return !contains_132(sq);
}

}  // namespace sav132

std::size_t std::hash<sav132::Permutation>::operator()(const sav132::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.one_line()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}
