#include "sav132/series.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sav132 {

PowerSeries::PowerSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, BigInt(0));
}

PowerSeries::PowerSeries(int order, std::vector<BigInt> coeffs) : PowerSeries(order) {
  if (coeffs.size() > coeffs_.size()) coeffs.resize(coeffs_.size());
  std::move(coeffs.begin(), coeffs.end(), coeffs_.begin());
}

PowerSeries::PowerSeries(int order, std::initializer_list<long long> coeffs) : PowerSeries(order) {
  std::size_t k = 0;
  for (long long c : coeffs) {
    if (k >= coeffs_.size()) break;
    coeffs_[k++] = c;
  }
}

PowerSeries PowerSeries::constant(int order, const BigInt& c) {
  PowerSeries f(order);
  f.coeffs_[0] = c;
  return f;
}

PowerSeries PowerSeries::x(int order) { return monomial(order, 1); }

PowerSeries PowerSeries::monomial(int order, int exponent, const BigInt& c) {
  PowerSeries f(order);
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent <= order) f.coeffs_[static_cast<std::size_t>(exponent)] = c;
  return f;
}

PowerSeries PowerSeries::truncate(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(new_order, std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& g) {
  if (g.order_ < order_) *this = truncate(g.order_);
  for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += g[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& g) {
  if (g.order_ < order_) *this = truncate(g.order_);
  for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] -= g[k];
  return *this;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
  const int order = std::min(f.order_, g.order_);
  PowerSeries out(order);
  for (int i = 0; i <= order; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += f[i] * g[j];
  }
  return out;
}

PowerSeries operator*(const BigInt& c, const PowerSeries& f) {
  PowerSeries out(f);
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

PowerSeries operator/(const PowerSeries& f, const PowerSeries& g) {
  const BigInt& lead = g[0];
  if (lead != 1 && lead != -1)
    throw std::invalid_argument("series division needs a divisor with constant term +1 or -1");
  const int order = std::min(f.order_, g.order_);
  PowerSeries q(order);
  for (int k = 0; k <= order; ++k) {
    BigInt acc = f[k];
    for (int j = 1; j <= k; ++j) acc -= g[j] * q[k - j];
    q.coeffs_[static_cast<std::size_t>(k)] = lead == 1 ? acc : BigInt(-acc);
  }
  return q;
}

PowerSeries substitute_power(const PowerSeries& f, int k) {
  if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(f.order()) + 1, BigInt(0));
  for (int i = 0; static_cast<long long>(i) * k <= f.order(); ++i) c[static_cast<std::size_t>(i * k)] = f[i];
  return PowerSeries(f.order(), std::move(c));
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (g[0] != 0) throw std::invalid_argument("compose: inner series must have zero constant term");
  const int order = std::min(f.order(), g.order());
  const PowerSeries inner = g.truncate(order);
  // Horner: f0 + g(f1 + g(f2 + ...)).
  PowerSeries acc = PowerSeries::constant(order, f[order]);
  for (int k = order - 1; k >= 0; --k) acc = PowerSeries::constant(order, f[k]) + inner * acc;
  return acc;
}

PowerSeries catalan(int order) {
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
  c[0] = 1;
  for (std::size_t m = 0; m + 1 < c.size(); ++m) {
    BigInt s = 0;
    for (std::size_t i = 0; i <= m; ++i) s += c[i] * c[m - i];
    c[m + 1] = s;
  }
  return PowerSeries(order, std::move(c));
}

PowerSeries nested_catalan(int order) {
  const PowerSeries c = catalan(order);
  const PowerSeries c3 = substitute_power(c, 3);
  return compose(c, PowerSeries::monomial(order, 3) * c3);
}

namespace {

PowerSeries one(int order) { return PowerSeries::constant(order, 1); }

// d(x) = 1/(1 - x - x^2 c(x^2))
PowerSeries involution_series(int order) {
  const PowerSeries c2 = substitute_power(catalan(order), 2);
  return one(order) / (one(order) - PowerSeries::x(order) - PowerSeries::monomial(order, 2) * c2);
}

PowerSeries a2_series(int order) {
  const PowerSeries x2c2 = PowerSeries::monomial(order, 2) * substitute_power(catalan(order), 2);
  return x2c2 / (one(order) - PowerSeries::x(order) - x2c2);
}

// 2 - 2/c(x^3 c(x^3))
PowerSeries three_cycle_factor(int order) {
  return PowerSeries::constant(order, 2) - BigInt(2) * (one(order) / nested_catalan(order));
}

PowerSeries b_series(int order) {
  const PowerSeries nc = nested_catalan(order);
  return (BigInt(2) * nc - PowerSeries::constant(order, 2)) / (PowerSeries::constant(order, 2) - nc);
}

// 2 (c(x^3) - 1) [x/(1-x) + x^2/(1-x^2)]
PowerSeries a_ge4_series(int order) {
  const PowerSeries c3 = substitute_power(catalan(order), 3);
  const PowerSeries x = PowerSeries::x(order);
  const PowerSeries x2 = PowerSeries::monomial(order, 2);
  const PowerSeries bracket = x / (one(order) - x) + x2 / (one(order) - x2);
  return BigInt(2) * ((c3 - one(order)) * bracket);
}

}  // namespace

PowerSeries sav132(int order) {
  const PowerSeries x = PowerSeries::x(order);
  const PowerSeries nc = nested_catalan(order);
  const PowerSeries c = catalan(order);
  const PowerSeries c2 = substitute_power(c, 2);
  const PowerSeries c3 = substitute_power(c, 3);

  const PowerSeries prefactor = nc / (PowerSeries::constant(order, 2) - (one(order) + x) * nc);
  const PowerSeries involution_part =
      (one(order) - x) / (one(order) - x - PowerSeries::monomial(order, 2) * c2);
  const PowerSeries big_cycle_part =
      (BigInt(2) * x * (one(order) + BigInt(2) * x) * (c3 - one(order))) /
      (one(order) - PowerSeries::monomial(order, 2));
  return prefactor * (involution_part + big_cycle_part);
}

PowerSeries sav312(int order) {
  const PowerSeries num(order, {1, -1, -1, 1});
  const PowerSeries den(order, {1, -2, -1, 2, -1});
  return num / den;
}

Component parse_component(std::string_view name) {
  if (name == "a1") return Component::A1;
  if (name == "a2") return Component::A2;
  if (name == "a3") return Component::A3;
  if (name == "b") return Component::B;
  if (name == "a_ge4") return Component::AGe4;
  if (name == "d") return Component::D;
  throw std::invalid_argument("unknown series selector \"" + std::string(name) + "\"");
}

std::string_view component_name(Component which) {
  switch (which) {
    case Component::A1: return "a1";
    case Component::A2: return "a2";
    case Component::A3: return "a3";
    case Component::B: return "b";
    case Component::AGe4: return "a_ge4";
    case Component::D: return "d";
  }
  throw std::invalid_argument("unknown series selector");
}

PowerSeries component_series(Component which, int order) {
  switch (which) {
    case Component::A1: return PowerSeries::x(order) * sav132(order);
    case Component::A2: return a2_series(order);
    case Component::A3: return three_cycle_factor(order) * sav132(order);
    case Component::B: return b_series(order);
    case Component::AGe4: return a_ge4_series(order);
    case Component::D: return involution_series(order);
  }
  throw std::invalid_argument("unknown series selector");
}

PowerSeries master_identity_residual(int order) {
  const PowerSeries a = sav132(order);
  const PowerSeries rhs = one(order) + PowerSeries::x(order) * a + a2_series(order) +
                          three_cycle_factor(order) * a + a_ge4_series(order);
  return rhs - a;
}

PowerSeries three_cycle_identity_residual(int order) {
  const PowerSeries b = b_series(order);
  return b / (one(order) + b) - three_cycle_factor(order);
}

PowerSeries involution_identity_residual(int order) {
  const PowerSeries d = involution_series(order);
  return a2_series(order) - (d - PowerSeries::x(order) * d - one(order));
}

std::string to_bfile(const PowerSeries& f, int first) {
  std::ostringstream os;
  for (int k = std::max(first, 0); k <= f.order(); ++k) os << k << ' ' << f[k] << '\n';
  return os.str();
}

std::string to_tsv(const PowerSeries& f, int first) {
  std::ostringstream os;
  for (int k = std::max(first, 0); k <= f.order(); ++k) os << k << '\t' << f[k] << '\n';
  return os.str();
}

std::string to_json(const PowerSeries& f, std::string_view name) {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["order"] = f.order();
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : f.coeffs()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      coeffs.push_back(static_cast<std::int64_t>(c));
    else
      coeffs.push_back(c.str());
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump();
}

}  // namespace sav132
