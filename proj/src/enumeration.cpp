#include "sav132/enumeration.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace sav132 {

namespace {

void check_guard(const char* what, int n, int limit, bool unsafe) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be non-negative");
  if (n > kGeneratorHardLimit)
    throw GuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the generator limit " +
                     std::to_string(kGeneratorHardLimit));
  if (n > limit && !unsafe)
    throw GuardError(std::string(what) + ": n = " + std::to_string(n) + " exceeds the guard " +
                     std::to_string(limit) + "; pass --unsafe-n to run anyway");
}

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Left-to-right construction of 132 avoiders of [1, m] (written shifted by
// `offset` into out[0..m-1]). With `run_min` the smallest value placed so
// far, the next value is either below run_min or the smallest unused value
// above it; anything else strands an unused value between run_min and the new
// entry. Candidates are tried in increasing order, giving lexicographic output.
template <class Leaf>
void avoider_dfs(int m, int offset, std::uint64_t remaining, int run_min, int depth, int* out, Leaf& leaf) {
  if (depth == m) {
    leaf();
    return;
  }
  for (int v = 1; v < run_min; ++v) {
    if (!(remaining & bit(v))) continue;
    out[depth] = v + offset;
    avoider_dfs(m, offset, remaining & ~bit(v), v, depth + 1, out, leaf);
  }
  const std::uint64_t above = remaining & ~(bit(run_min + 1) - 1);
  if (above) {
    const int v = std::countr_zero(above);
    out[depth] = v + offset;
    avoider_dfs(m, offset, remaining & ~bit(v), run_min, depth + 1, out, leaf);
  }
}

template <class Leaf>
void run_avoider_dfs(int m, int offset, int* out, Leaf& leaf) {
  const std::uint64_t all = (bit(m + 1) - 1) & ~std::uint64_t{1};
  avoider_dfs(m, offset, all, m + 1, 0, out, leaf);
}

template <class Visit>
void avoiders_with_max_at(int n, int b, std::vector<int>& buf, Visit& visit) {
  const int before = b - 1;
  const int after = n - b;
  buf[static_cast<std::size_t>(b - 1)] = n;
  auto emit = [&] { visit(std::span<const int>(buf)); };
  auto suffix = [&] { run_avoider_dfs(after, 0, buf.data() + b, emit); };
  run_avoider_dfs(before, after, buf.data(), suffix);
}

template <class Visit>
void avoiders_all(int n, std::vector<int>& buf, Visit& visit) {
  auto emit = [&] { visit(std::span<const int>(buf)); };
  run_avoider_dfs(n, 0, buf.data(), emit);
}

bool only_3cycles(std::span<const int> p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int a = p[i];
    const int b = p[static_cast<std::size_t>(a - 1)];
    const int c = p[static_cast<std::size_t>(b - 1)];
    if (a == static_cast<int>(i) + 1 || c != static_cast<int>(i) + 1) return false;
  }
  return true;
}

bool is_involution(std::span<const int> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[static_cast<std::size_t>(p[i] - 1)] != static_cast<int>(i) + 1) return false;
  return true;
}

int cycle_length_of_max(std::span<const int> p) {
  const int n = static_cast<int>(p.size());
  int len = 1;
  for (int w = p[static_cast<std::size_t>(n - 1)]; w != n; w = p[static_cast<std::size_t>(w - 1)]) ++len;
  return len;
}

struct RowTask {
  std::vector<std::uint64_t> counts;
  std::exception_ptr error;
};

void classify_position(int n, int b, RowTask& task) {
  task.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> buf(static_cast<std::size_t>(n));
  std::vector<int> sq(static_cast<std::size_t>(n));
  auto visit = [&](std::span<const int> p) {
    square_into(p, sq);
    if (contains_132(sq)) return;
    const int k = cycle_length_of_max(p);
    if (k >= 4 && n % k != 0)
      throw std::logic_error("strong avoider " + Permutation(std::vector<int>(p.begin(), p.end())).to_string() +
                             " has n in a " + std::to_string(k) + "-cycle with k not dividing n");
    if (k == 2 && !is_involution(p))
      throw std::logic_error("strong avoider " + Permutation(std::vector<int>(p.begin(), p.end())).to_string() +
                             " has n in a 2-cycle but is not an involution");
    ++task.counts[static_cast<std::size_t>(k)];
  };
  avoiders_with_max_at(n, b, buf, visit);
}

}  // namespace

void for_each_permutation(int n, const PermutationVisitor& visit, bool unsafe) {
  check_guard("gen_all", n, kMaxAllPermutationsN, unsafe);
  if (n == 0) return;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do {
    visit(std::span<const int>(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

void for_each_avoider_132(int n, const PermutationVisitor& visit, bool unsafe) {
  check_guard("gen_avoiders_132", n, kMaxAvoidersN, unsafe);
  if (n == 0) return;
  std::vector<int> buf(static_cast<std::size_t>(n));
  avoiders_all(n, buf, visit);
}

void for_each_avoider_132_with_max_at(int n, int b, const PermutationVisitor& visit, bool unsafe) {
  check_guard("gen_avoiders_132", n, kMaxAvoidersN, unsafe);
  if (b < 1 || b > n) throw std::invalid_argument("position of n must lie in [1, n]");
  std::vector<int> buf(static_cast<std::size_t>(n));
  avoiders_with_max_at(n, b, buf, visit);
}

std::vector<Permutation> avoiders_132(int n, bool unsafe) {
  std::vector<Permutation> out;
  for_each_avoider_132(n, [&](std::span<const int> p) { out.emplace_back(std::vector<int>(p.begin(), p.end())); },
                       unsafe);
  return out;
}

ClassTable::ClassTable(int n_max) : n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("table needs n_max >= 1");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, 0);
}

std::uint64_t ClassTable::count(int n, int k) const {
  if (n < 1 || n > n_max_ || k < 1 || k > n) return 0;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t ClassTable::total(int n) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("table has no row " + std::to_string(n));
  const auto& r = rows_[static_cast<std::size_t>(n)];
  return std::accumulate(r.begin(), r.end(), std::uint64_t{0});
}

void ClassTable::set_row(int n, std::vector<std::uint64_t> by_k) {
  if (n < 1 || n > n_max_) throw std::out_of_range("table has no row " + std::to_string(n));
  if (by_k.size() != static_cast<std::size_t>(n) + 1)
    throw std::invalid_argument("row " + std::to_string(n) + " needs " + std::to_string(n + 1) + " entries");
  by_k[0] = 0;
  rows_[static_cast<std::size_t>(n)] = std::move(by_k);
}

const std::vector<std::uint64_t>& ClassTable::row(int n) const {
  if (n < 1 || n > n_max_) throw std::out_of_range("table has no row " + std::to_string(n));
  return rows_[static_cast<std::size_t>(n)];
}

void ClassTable::validate() const {
  for (int n = 1; n <= n_max_; ++n) {
    for (int k = 4; k <= n; ++k)
      if (n % k != 0 && count(n, k) != 0)
        throw std::logic_error("a(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                               std::to_string(count(n, k)) + " but k does not divide n");
    if (n < n_max_ && count(n + 1, 1) != total(n))
      throw std::logic_error("a(" + std::to_string(n + 1) + ",1) = " + std::to_string(count(n + 1, 1)) +
                             " differs from a(" + std::to_string(n) + ") = " + std::to_string(total(n)));
  }
}

std::string ClassTable::to_tsv() const {
  std::ostringstream os;
  os << "k\\n";
  for (int n = 1; n <= n_max_; ++n) os << '\t' << n;
  os << '\n';
  for (int k = 1; k <= n_max_; ++k) {
    os << k;
    for (int n = 1; n <= n_max_; ++n) {
      os << '\t';
      if (k > n) continue;
      if (k >= 4 && n % k != 0)
        os << '-';
      else
        os << count(n, k);
    }
    os << '\n';
  }
  os << "Total";
  for (int n = 1; n <= n_max_; ++n) os << '\t' << total(n);
  os << '\n';
  return os.str();
}

std::string ClassTable::to_json() const {
  auto records = nlohmann::ordered_json::array();
  for (int n = 1; n <= n_max_; ++n)
    for (int k = 1; k <= n; ++k) records.push_back({{"n", n}, {"k", k}, {"count", count(n, k)}});
  return records.dump();
}

std::string ClassTable::to_bfile() const {
  std::ostringstream os;
  for (int n = 1; n <= n_max_; ++n) os << n << ' ' << total(n) << '\n';
  return os.str();
}

std::vector<std::uint64_t> classify_row(int n, const EnumerationOptions& options) {
  check_guard("brute_table", n, kMaxTableN, options.unsafe);
  if (n < 1) throw std::invalid_argument("brute_table: n must be >= 1");

  std::vector<RowTask> tasks(static_cast<std::size_t>(n));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      auto& task = tasks[static_cast<std::size_t>(i)];
      try {
        classify_position(n, i + 1, task);
      } catch (...) {
        task.error = std::current_exception();
      }
    }
  };
  const int jobs = std::clamp(options.jobs, 1, n);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<std::uint64_t> row(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& task : tasks) {
    if (task.error) std::rethrow_exception(task.error);
    for (std::size_t k = 0; k < row.size(); ++k) row[k] += task.counts[k];
  }
  return row;
}

ClassTable brute_table(int n_max, const EnumerationOptions& options) {
  check_guard("brute_table", n_max, kMaxTableN, options.unsafe);
  ClassTable table(n_max);
  for (int n = 1; n <= n_max; ++n) table.set_row(n, classify_row(n, options));
  return table;
}

std::vector<Permutation> strong_avoiders_132(int n, bool unsafe) {
  std::vector<Permutation> out;
  std::vector<int> sq(static_cast<std::size_t>(n));
  for_each_avoider_132(
      n,
      [&](std::span<const int> p) {
        square_into(p, sq);
        if (!contains_132(sq)) out.emplace_back(std::vector<int>(p.begin(), p.end()));
      },
      unsafe);
  return out;
}

std::uint64_t count_only_3cycle_avoiders(int n, bool unsafe) {
  check_guard("count_only_3cycle_avoiders", n, kMaxTableN, unsafe);
  if (n % 3 != 0) return 0;
  std::uint64_t count = 0;
  for_each_avoider_132(n, [&](std::span<const int> p) { count += only_3cycles(p); }, true);
  return count;
}

std::uint64_t count_involutions_132(int n, bool unsafe) {
  check_guard("count_involutions_132", n, kMaxTableN, unsafe);
  std::uint64_t count = 0;
  for_each_avoider_132(n, [&](std::span<const int> p) { count += is_involution(p); }, true);
  return count;
}

std::uint64_t count_strong_avoiders(const Pattern& t, int n, bool unsafe) {
  std::uint64_t count = 0;
  std::vector<int> sq(static_cast<std::size_t>(n));
  for_each_permutation(
      n,
      [&](std::span<const int> p) {
        if (contains_pattern(p, t)) return;
        square_into(p, sq);
        count += !contains_pattern(sq, t);
      },
      unsafe);
  return count;
}

std::uint64_t count_strong_312_avoiders(int n, bool unsafe) {
  const Pattern p312 = Pattern::of("312");
  std::uint64_t count = 0;
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::vector<int> sq(static_cast<std::size_t>(n));
  for_each_avoider_132(
      n,
      [&](std::span<const int> p) {
        for (std::size_t i = 0; i < p.size(); ++i) comp[i] = n + 1 - p[i];
        square_into(comp, sq);
        count += !contains_pattern(sq, p312);
      },
      unsafe);
  return count;
}

}  // namespace sav132
