#pragma once

#include "sav132/permutation.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sav132 {

/// Raised when a request exceeds a size guard and the caller did not opt in
/// with `unsafe`.
class GuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxAllPermutationsN = 11;
inline constexpr int kMaxAvoidersN = 16;
inline constexpr int kMaxTableN = 15;
/// Hard limit of the bitmask generators, not overridable.
inline constexpr int kGeneratorHardLimit = 60;

/// Receives one permutation in one-line form. The span is only valid during the call.
using PermutationVisitor = std::function<void(std::span<const int>)>;

/// Every element of S_n once, in lexicographic order. Guard: n <= 11.
void for_each_permutation(int n, const PermutationVisitor& visit, bool unsafe = false);

/// The 132-avoiding permutations of size n in lexicographic order. Guard: n <= 16.
void for_each_avoider_132(int n, const PermutationVisitor& visit, bool unsafe = false);

/// The 132-avoiding permutations of size n with π_b = n: a 132-avoiding
/// arrangement of [n-b+1, n-1] before n and one of [1, n-b] after it.
/// Taking b = 1..n partitions the output of for_each_avoider_132.
void for_each_avoider_132_with_max_at(int n, int b, const PermutationVisitor& visit, bool unsafe = false);

std::vector<Permutation> avoiders_132(int n, bool unsafe = false);

/// a_{n,k}: strong 132 avoiders of size n with n in a cycle of length k.
class ClassTable {
public:
  explicit ClassTable(int n_max);

  int n_max() const { return n_max_; }
  std::uint64_t count(int n, int k) const;
  std::uint64_t total(int n) const;

  /// Installs the row for size n; `by_k[k]` is a_{n,k} for 1 <= k <= n (index 0 ignored).
  void set_row(int n, std::vector<std::uint64_t> by_k);
  const std::vector<std::uint64_t>& row(int n) const;

  /// Throws std::logic_error naming the first violated structural property
  /// (row sums, divisibility of big cycles, a_{n+1,1} = a_n).
  void validate() const;

  /// Rows k, columns n, "-" for structural zeros (k >= 4 not dividing n), then Total.
  std::string to_tsv() const;
  /// [{"n":..,"k":..,"count":..}, ...] over 1 <= k <= n <= n_max.
  std::string to_json() const;
  /// Total row as "n a(n)" lines starting at n = 1.
  std::string to_bfile() const;

  friend bool operator==(const ClassTable&, const ClassTable&) = default;

private:
  int n_max_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct EnumerationOptions {
  int jobs = 1;
  bool unsafe = false;
};

/// Classifies every strong 132 avoider of size n by the cycle length of n.
/// Work is split by the position of n; partial counts are summed in a fixed
/// order, so the result does not depend on `jobs`. Guard: n <= 15.
/// Throws std::logic_error if a strong avoider has n in a k-cycle with
/// k >= 4 and k not dividing n, or n in a 2-cycle without being an involution.
std::vector<std::uint64_t> classify_row(int n, const EnumerationOptions& options = {});

ClassTable brute_table(int n_max, const EnumerationOptions& options = {});

/// All strong 132 avoiders of size n, lexicographic.
std::vector<Permutation> strong_avoiders_132(int n, bool unsafe = false);

/// 132 avoiders whose cycle type is all 3-cycles.
std::uint64_t count_only_3cycle_avoiders(int n, bool unsafe = false);

/// 132-avoiding involutions.
std::uint64_t count_involutions_132(int n, bool unsafe = false);

/// Strong avoiders of `t` by filtering all of S_n. Guard: n <= 11.
std::uint64_t count_strong_avoiders(const Pattern& t, int n, bool unsafe = false);

/// Strong 312 avoiders, iterating only the 312 avoiders (complements of
/// 132 avoiders). Guard: n <= 16.
std::uint64_t count_strong_312_avoiders(int n, bool unsafe = false);

}  // namespace sav132
