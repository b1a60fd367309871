#include "sav132/asymptotics.hpp"

#include "json.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sav132 {

double catalan_closed_form(double x) {
  if (x == 0.0) return 1.0;
  if (x > 0.25) throw std::domain_error("c(x) closed form needs x <= 1/4");
  return (1.0 - std::sqrt(1.0 - 4.0 * x)) / (2.0 * x);
}

double constant_K() {
  const double inner = catalan_closed_form(1.0 / 8.0) / 8.0;
  const double nested = catalan_closed_form(inner);
  return 1.0 / std::sqrt(2.0 * std::numbers::pi) * nested / (2.0 - 1.5 * nested);
}

double constant_K_reassociated() {
  // c(1/8) = 4 - 2 sqrt 2, so the inner point is (2 - sqrt 2) / 4; then
  // c(y) = 2 / (1 + sqrt(1 - 4y)) avoids the cancellation in 1 - sqrt(.).
  const double y = (2.0 - std::numbers::sqrt2) / 4.0;
  const double nested = 2.0 / (1.0 + std::sqrt(1.0 - 4.0 * y));
  return nested / ((2.0 - nested * 1.5) * std::sqrt(2.0) * std::sqrt(std::numbers::pi));
}

AsymptoticReport asymptotic_report(const PowerSeries& a, int n_max) {
  if (n_max > a.order())
    throw std::invalid_argument("asymptotic report: n_max " + std::to_string(n_max) + " exceeds series order " +
                                std::to_string(a.order()));
  AsymptoticReport report;
  report.n_max = n_max;
  report.K_closed_form = constant_K();
  for (int n = 1; n <= n_max; ++n) {
    const double an = static_cast<double>(a[n]);
    report.ratios.emplace_back(n, std::ldexp(an * std::sqrt(static_cast<double>(n)), -n));
    if (n < n_max) report.growth.emplace_back(n, static_cast<double>(a[n + 1]) / an);
    if (a[n] >= (BigInt(1) << n)) report.at_least_power_of_two.push_back(n);
  }
  return report;
}

AsymptoticReport asymptotic_report(int n_max, int order) { return asymptotic_report(sav132(order), n_max); }

double singular_term(double x) {
  const double x2 = x * x;
  return (1.0 - x) / (1.0 - x - x2 * catalan_closed_form(x2));
}

double singular_term_normalized(double eps) {
  const double x = 0.5 - eps;
  return singular_term(x) * std::sqrt(2.0 * (1.0 - 2.0 * x));
}

namespace {

using Dense = std::vector<double>;

Dense mul(const Dense& f, const Dense& g) {
  const std::size_t n = f.size();
  Dense h(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    if (f[i] != 0.0)
      for (std::size_t j = 0; i + j < n; ++j) h[i + j] += f[i] * g[j];
  return h;
}

Dense div(const Dense& f, const Dense& g) {
  const std::size_t n = f.size();
  Dense q(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double s = f[k];
    for (std::size_t i = 0; i < k; ++i) s -= q[i] * g[k - i];
    q[k] = s / g[0];
  }
  return q;
}

Dense add(Dense f, const Dense& g, double scale = 1.0) {
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += scale * g[i];
  return f;
}

// c(x^step) at x/2: coefficient step*m is c_m / 2^(step*m).
Dense scaled_catalan(int step, std::size_t n) {
  Dense out(n, 0.0);
  double c = 1.0;  // c_m / 4^m, which stays below 1
  for (std::size_t m = 0; static_cast<std::size_t>(step) * m < n; ++m) {
    out[static_cast<std::size_t>(step) * m] = c * std::pow(2.0, (2.0 - step) * static_cast<double>(m));
    c *= 2.0 * (2.0 * static_cast<double>(m) + 1.0) / (4.0 * (static_cast<double>(m) + 2.0));
  }
  return out;
}

}  // namespace

std::vector<double> sav132_scaled(int order) {
  if (order < 0) throw std::invalid_argument("sav132_scaled: negative order");
  const std::size_t n = static_cast<std::size_t>(order) + 1;
  Dense one(n, 0.0), x(n, 0.0);
  one[0] = 1.0;
  if (n > 1) x[1] = 0.5;
  const Dense x2 = mul(x, x);
  const Dense c2 = scaled_catalan(2, n), c3 = scaled_catalan(3, n);

  // C = c(u) with u = x^3 c(x^3), solved from C = 1 + u C^2 term by term.
  const Dense u = mul(mul(x2, x), c3);
  Dense big_c(n, 0.0), big_c2(n, 0.0);
  big_c[0] = big_c2[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 1; j <= k; ++j) big_c[k] += u[j] * big_c2[k - j];
    for (std::size_t i = 0; i <= k; ++i) big_c2[k] += big_c[i] * big_c[k - i];
  }

  const Dense prefactor = div(big_c, add(add(one, one), mul(add(one, x), big_c), -1.0));
  const Dense involution_part = div(add(one, x, -1.0), add(add(one, x, -1.0), mul(x2, c2), -1.0));
  const Dense big_cycle_part = div(mul(mul(x, add(one, x, 2.0)), add(c3, one, -1.0)), add(one, x2, -1.0));
  return mul(prefactor, add(involution_part, big_cycle_part, 2.0));
}

std::string to_text(const AsymptoticReport& report) {
  std::ostringstream os;
  os << std::setprecision(10);
  os << "K = " << report.K_closed_form << '\n';
  os << "n\ta_n*sqrt(n)/2^n\ta_(n+1)/a_n\n";
  for (std::size_t i = 0; i < report.ratios.size(); ++i) {
    os << report.ratios[i].first << '\t' << report.ratios[i].second << '\t';
    if (i < report.growth.size()) os << report.growth[i].second;
    os << '\n';
  }
  if (report.at_least_power_of_two.empty()) {
    os << "a_n < 2^n for all 1 <= n <= " << report.n_max << '\n';
  } else {
    os << "a_n >= 2^n at n =";
    for (int n : report.at_least_power_of_two) os << ' ' << n;
    os << '\n';
  }
  return os.str();
}

std::string to_json(const AsymptoticReport& report) {
  nlohmann::ordered_json j;
  j["n_max"] = report.n_max;
  j["K"] = report.K_closed_form;
  auto ratios = nlohmann::ordered_json::array();
  for (const auto& [n, r] : report.ratios) ratios.push_back({{"n", n}, {"ratio", r}});
  j["ratios"] = std::move(ratios);
  auto growth = nlohmann::ordered_json::array();
  for (const auto& [n, g] : report.growth) growth.push_back({{"n", n}, {"growth", g}});
  j["growth"] = std::move(growth);
  j["at_least_power_of_two"] = report.at_least_power_of_two;
  return j.dump();
}

}  // namespace sav132
