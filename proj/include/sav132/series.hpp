#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sav132 {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultOrder = 64;

/// Formal power series truncated at x^order (inclusive), exact integer coefficients.
///
/// Binary operations work at the smaller of the two operand orders; nothing is
/// ever extended past what both inputs determine.
class PowerSeries {
public:
  /// Zero series of the given order.
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<BigInt> coeffs);
  /// Coefficients listed from x^0; missing high terms are zero.
  PowerSeries(int order, std::initializer_list<long long> coeffs);

  static PowerSeries constant(int order, const BigInt& c);
  /// The series x (zero when order is 0).
  static PowerSeries x(int order);
  static PowerSeries monomial(int order, int exponent, const BigInt& c = 1);

  int order() const { return order_; }
  const BigInt& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Copy truncated to a lower order. Throws if new_order > order().
  PowerSeries truncate(int new_order) const;

  bool is_zero() const;

  PowerSeries& operator+=(const PowerSeries& g);
  PowerSeries& operator-=(const PowerSeries& g);
  PowerSeries operator-() const;

  friend PowerSeries operator+(PowerSeries f, const PowerSeries& g) { return f += g; }
  friend PowerSeries operator-(PowerSeries f, const PowerSeries& g) { return f -= g; }
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g);
  friend PowerSeries operator*(const BigInt& c, const PowerSeries& f);
  /// Exact division; the divisor's constant term must be +1 or -1.
  friend PowerSeries operator/(const PowerSeries& f, const PowerSeries& g);

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
  int order_;
  std::vector<BigInt> coeffs_;
};

/// f(x^k), same order as f.
PowerSeries substitute_power(const PowerSeries& f, int k);

/// f(g(x)) by Horner's rule; g must have zero constant term.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);

/// Catalan generating function from c_{m+1} = sum c_i c_{m-i}.
PowerSeries catalan(int order);

/// Number of permutations strongly avoiding 132, from the closed-form quotient.
PowerSeries sav132(int order);

/// (1 - x - x^2 + x^3) / (1 - 2x - x^2 + 2x^3 - x^4)
PowerSeries sav312(int order);

enum class Component { A1, A2, A3, B, AGe4, D };

/// Parses "a1", "a2", "a3", "b", "a_ge4", "d".
Component parse_component(std::string_view name);
std::string_view component_name(Component which);

/// Generating function of one refinement of the strong-132 count:
///   A1   n is a fixed point,
///   A2   n is in a 2-cycle,
///   A3   n is in a 3-cycle,
///   B    132 avoiders made only of 3-cycles,
///   AGe4 n is in a cycle of length >= 4,
///   D    132-avoiding involutions (central binomials).
PowerSeries component_series(Component which, int order);

/// c(x^3 c(x^3)), shared by the 3-cycle series.
PowerSeries nested_catalan(int order);

/// 1 + x a + a_2 + (2 - 2/c(x^3 c(x^3))) a + a_{>=4} - a, which is zero
/// exactly when the decomposition by cycle length of n is consistent.
PowerSeries master_identity_residual(int order);

/// b/(1+b) - (2 - 2/c(x^3 c(x^3))).
PowerSeries three_cycle_identity_residual(int order);

/// a_2 - (d - x d - 1).
PowerSeries involution_identity_residual(int order);

/// "n a(n)" per line for n = first..order.
std::string to_bfile(const PowerSeries& f, int first = 0);

/// "n<TAB>a(n)" per line for n = first..order.
std::string to_tsv(const PowerSeries& f, int first = 0);

/// {"name": ..., "order": N, "coeffs": [...]}; coefficients are JSON numbers
/// when they fit in 64 bits and decimal strings otherwise.
std::string to_json(const PowerSeries& f, std::string_view name);

}  // namespace sav132
