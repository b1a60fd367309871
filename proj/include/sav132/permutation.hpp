#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sav132 {

/// A permutation of [n] in one-line notation.
///
/// Values and positions are 1-based at the interface: `p(i)` is the image of
/// `i`, for 1 <= i <= size(). Instances are immutable once constructed and
/// the constructor rejects anything that is not a bijection on [n].
class Permutation {
public:
  /// Throws std::invalid_argument unless `one_line` is a bijection on [1..n], n >= 1.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  /// Parses comma- and/or whitespace-separated values, e.g. "6 7 8 1,2,3".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(image_.size()); }

  /// Image of `i` (1-based). Unchecked.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }

  /// Bounds-checked image; throws std::out_of_range.
  int at(int i) const;

  /// One-line values, π(1) first.
  std::span<const int> one_line() const { return image_; }

  /// Position of value `v`, i.e. π⁻¹(v).
  int position_of(int v) const;

  bool is_identity() const;
  bool is_involution() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  struct trusted_tag {};
  Permutation(trusted_tag, std::vector<int> one_line) : image_(std::move(one_line)) {}

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<int> image_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Functional composition: result(i) = p(q(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation square(const Permutation& p) { return compose(p, p); }

Permutation inverse(const Permutation& p);

/// Canonical disjoint-cycle form: each cycle starts at its smallest value and
/// cycles are ordered by that value. Fixed points are kept as 1-cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;

  /// "(1,6,11)(2,7,12)"
  std::string to_string() const;

  /// Rebuilds the permutation the cycles describe.
  Permutation to_permutation() const;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decomposition(const Permutation& p);

/// Length of the cycle containing `v`. Throws std::invalid_argument if v is out of range.
int cycle_length_of(const Permutation& p, int v);

/// Sorted multiset of cycle lengths.
std::vector<int> cycle_type(const Permutation& p);

/// A small permutation used as a pattern; size is limited to 4.
class Pattern {
public:
  explicit Pattern(Permutation p);

  /// From digits, e.g. Pattern::of("132").
  static Pattern of(std::string_view digits);

  int size() const { return perm_.size(); }
  const Permutation& permutation() const { return perm_; }

private:
  Permutation perm_;
};

/// True iff some subsequence of `one_line` is order-isomorphic to `t`.
/// Length-3 patterns use an O(n^2) scan; other sizes use a subsequence search.
bool contains_pattern(std::span<const int> one_line, const Pattern& t);

inline bool contains_pattern(const Permutation& p, const Pattern& t) {
  return contains_pattern(p.one_line(), t);
}

/// O(n) test for 132, used on the hot enumeration paths.
bool contains_132(std::span<const int> one_line);

/// Writes the one-line form of p∘p into `out` (same length as `one_line`).
void square_into(std::span<const int> one_line, std::span<int> out);

/// π and π² both avoid `t`.
bool strongly_avoids(const Permutation& p, const Pattern& t);

/// π and π² both avoid 132.
bool strongly_avoids_132(const Permutation& p);
bool strongly_avoids_132(std::span<const int> one_line);

}  // namespace sav132

template <>
struct std::hash<sav132::Permutation> {
  std::size_t operator()(const sav132::Permutation& p) const noexcept;
};
