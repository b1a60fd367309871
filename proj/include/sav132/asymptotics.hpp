#pragma once

#include "sav132/series.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sav132 {

/// Windows used by the asymptotic checks. These are this library's choices,
/// not derived bounds.
struct AsymptoticWindows {
  int ratio_from = 12;
  int ratio_to = 64;
  double ratio_relative_tolerance = 0.10;
  int growth_from = 20;
  int growth_to = 63;
  double growth_lower = 1.9;
  double growth_upper = 2.0;
  double singular_tolerance = 0.01;
};

struct AsymptoticReport {
  int n_max = 0;
  double K_closed_form = 0.0;
  /// (n, a_n sqrt(n) / 2^n) for 1 <= n <= n_max.
  std::vector<std::pair<int, double>> ratios;
  /// (n, a_{n+1} / a_n) for 1 <= n < n_max.
  std::vector<std::pair<int, double>> growth;
  /// Every n in [1, n_max] with a_n >= 2^n (exact comparison).
  std::vector<int> at_least_power_of_two;
};

/// (1 - sqrt(1 - 4x)) / (2x), with c(0) = 1.
double catalan_closed_form(double x);

/// K = c(c(1/8)/8) / (2 - 1.5 c(c(1/8)/8)) / sqrt(2 pi), the constant in a_n ~ K 2^n / sqrt(n).
double constant_K();

/// Same constant through a differently associated evaluation (nested point
/// (2 - sqrt 2)/4 written in closed form, factors grouped differently).
double constant_K_reassociated();

/// Builds the report from exact coefficients; pre: n_max <= a.order().
AsymptoticReport asymptotic_report(const PowerSeries& a, int n_max);

/// Uses sav132 truncated at `order`.
AsymptoticReport asymptotic_report(int n_max, int order);

/// f(x) = (1 - x) / (1 - x - x^2 c(x^2)), the term carrying the singularity at 1/2.
double singular_term(double x);

/// f(1/2 - eps) * sqrt(2 (1 - 2x)) at x = 1/2 - eps; tends to 1 as eps -> 0.
double singular_term_normalized(double eps);

/// a_n / 2^n for 0 <= n <= order in double precision, from the same quotient
/// evaluated at x/2. Exact coefficients overflow nothing here, so this reaches
/// orders (thousands) where the exact series gets slow. Diagnostic only.
std::vector<double> sav132_scaled(int order);

std::string to_text(const AsymptoticReport& report);
std::string to_json(const AsymptoticReport& report);

}  // namespace sav132
