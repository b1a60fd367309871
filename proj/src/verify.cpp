#include "sav132/verify.hpp"

#include "sav132/asymptotics.hpp"
#include "sav132/constructors.hpp"
#include "sav132/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace sav132 {

namespace {

std::string str(const BigInt& a) { return a.str(); }

// Records the first mismatch only.
class Check {
public:
  Check(std::string name, std::string detail) { result_.name = std::move(name), result_.detail = std::move(detail); }

  template <class E, class G>
  void expect_eq(int n, std::optional<int> k, const E& expected, const G& got) {
    if (result_.failure || BigInt(expected) == BigInt(got)) return;
    result_.failure = Mismatch{n, k, str(BigInt(expected)), str(BigInt(got))};
  }

  void expect(bool ok, int n, std::optional<int> k, std::string expected, std::string got) {
    if (result_.failure || ok) return;
    result_.failure = Mismatch{n, k, std::move(expected), std::move(got)};
  }

  CheckResult take() { return std::move(result_); }

private:
  CheckResult result_;
};

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string upto(int n) { return "n <= " + std::to_string(n); }

void compare_sets(Check& check, int n, const std::set<Permutation>& expected, const std::set<Permutation>& got) {
  for (const auto& p : expected)
    if (!got.contains(p)) return check.expect(false, n, std::nullopt, p.to_string(), "missing");
  for (const auto& p : got)
    if (!expected.contains(p)) return check.expect(false, n, std::nullopt, "absent", p.to_string());
}

}  // namespace

std::string Mismatch::to_string() const {
  std::ostringstream os;
  os << "n=" << n;
  if (k) os << " k=" << *k;
  os << " expected=" << expected << " got=" << got;
  return os.str();
}

std::vector<CheckResult> verify_all(const ClassTable& table, const VerifyOptions& options) {
  const int n_max = options.n_max;
  const int order = std::max(options.order, n_max);
  if (table.n_max() < n_max) throw std::invalid_argument("verify: table does not cover n_max");
  std::vector<CheckResult> results;

  const PowerSeries a = sav132(order);
  const PowerSeries a1 = component_series(Component::A1, order);
  const PowerSeries a2 = component_series(Component::A2, order);
  const PowerSeries a3 = component_series(Component::A3, order);
  const PowerSeries b = component_series(Component::B, order);
  const PowerSeries age4 = component_series(Component::AGe4, order);
  const PowerSeries d = component_series(Component::D, order);

  auto big_cycle_sum = [&](int n) {
    std::uint64_t s = 0;
    for (int k = 4; k <= n; ++k) s += table.count(n, k);
    return s;
  };

  {
    Check c("table structure", upto(n_max));
    try {
      table.validate();
    } catch (const std::logic_error& e) {
      c.expect(false, n_max, std::nullopt, "consistent table", e.what());
    }
    results.push_back(c.take());
  }
  {
    Check c("sav132 coefficients = brute totals", upto(n_max));
    for (int n = 1; n <= n_max; ++n) c.expect_eq(n, std::nullopt, a[n], table.total(n));
    results.push_back(c.take());
  }
  {
    Check c("a1 series = brute k=1 row", upto(n_max));
    for (int n = 1; n <= n_max; ++n) c.expect_eq(n, 1, a1[n], table.count(n, 1));
    results.push_back(c.take());
  }
  {
    Check c("a2 series = brute k=2 row", upto(n_max));
    for (int n = 1; n <= n_max; ++n) c.expect_eq(n, 2, a2[n], table.count(n, 2));
    results.push_back(c.take());
  }
  {
    Check c("a(n,2) = C(n-1, floor((n-2)/2))", "2 <= n <= " + std::to_string(n_max));
    for (int n = 2; n <= n_max; ++n) c.expect_eq(n, 2, binomial(n - 1, (n - 2) / 2), table.count(n, 2));
    results.push_back(c.take());
  }
  {
    Check c("a3 series = brute k=3 row", upto(n_max));
    for (int n = 1; n <= n_max; ++n) c.expect_eq(n, 3, a3[n], table.count(n, 3));
    results.push_back(c.take());
  }
  {
    Check c("a_ge4 series = brute k>=4 rows", upto(n_max));
    for (int n = 1; n <= n_max; ++n) c.expect_eq(n, 4, age4[n], big_cycle_sum(n));
    results.push_back(c.take());
  }
  {
    Check c("closed-form count k>=4 = brute", "4 <= n <= " + std::to_string(n_max));
    for (int n = 4; n <= n_max; ++n) c.expect_eq(n, 4, count_k_ge_4(n), big_cycle_sum(n));
    results.push_back(c.take());
  }
  {
    Check c("closed-form a(n,n) = brute", "3 <= n <= " + std::to_string(n_max));
    for (int n = 3; n <= n_max; ++n) c.expect_eq(n, n, count_full_cycle(n), table.count(n, n));
    results.push_back(c.take());
  }
  {
    Check c("132-avoiding involutions = C(n, floor(n/2)) = [x^n] d", upto(n_max));
    for (int n = 1; n <= n_max; ++n) {
      const std::uint64_t brute = count_involutions_132(n, options.enumeration.unsafe);
      c.expect_eq(n, std::nullopt, binomial(n, n / 2), brute);
      c.expect_eq(n, std::nullopt, d[n], brute);
    }
    results.push_back(c.take());
  }
  {
    Check c("3-cycle-only avoiders = [x^n] b", upto(n_max));
    for (int n = 1; n <= n_max; ++n)
      c.expect_eq(n, 3, b[n], count_only_3cycle_avoiders(n, options.enumeration.unsafe));
    results.push_back(c.take());
  }

  // Structural checks that need the actual sets.
  Check big_sets("big-cycle constructions = brute set (k >= 4)", "4 <= n <= " + std::to_string(n_max));
  Check big_law("big-cycle length of n = n/gcd(n,b)", "4 <= n <= " + std::to_string(n_max));
  Check layered("3-cycle layering = brute set (k = 3)", "3 <= n <= " + std::to_string(n_max));
  Check involution("n in a 2-cycle implies involution", upto(n_max));
  Check inverse_closed("strong avoidance closed under inverse", upto(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const auto brute = strong_avoiders_132(n, options.enumeration.unsafe);
    const std::set<Permutation> all(brute.begin(), brute.end());
    std::set<Permutation> big, three;
    for (const auto& p : brute) {
      const int k = cycle_length_of(p, n);
      if (k >= 4) big.insert(p);
      if (k == 3) three.insert(p);
      if (k == 2) involution.expect(p.is_involution(), n, 2, "involution", p.to_string());
      inverse_closed.expect(all.contains(inverse(p)), n, std::nullopt, "inverse of " + p.to_string(), "missing");
    }
    if (n >= 4) {
      std::set<Permutation> built;
      for (const auto& m : enumerate_big_cycle(n)) {
        built.insert(m.permutation);
        big_law.expect_eq(n, m.params.b, n / std::gcd(n, m.params.b), cycle_length_of(m.permutation, n));
      }
      compare_sets(big_sets, n, big, built);
    }
    if (n >= 3) {
      std::set<Permutation> wrapped;
      for_each_3cycle_layered(n, [&](const Permutation& p) { wrapped.insert(p); });
      compare_sets(layered, n, three, wrapped);
    }
  }
  results.push_back(big_sets.take());
  results.push_back(big_law.take());
  results.push_back(layered.take());
  results.push_back(involution.take());
  results.push_back(inverse_closed.take());

  {
    Check c("master identity residual = 0", "order " + std::to_string(order));
    const PowerSeries r = master_identity_residual(order);
    for (int n = 0; n <= order; ++n) c.expect_eq(n, std::nullopt, 0, r[n]);
    results.push_back(c.take());
  }
  {
    Check c("b/(1+b) = 2 - 2/c(x^3 c(x^3))", "order " + std::to_string(order));
    const PowerSeries r = three_cycle_identity_residual(order);
    for (int n = 0; n <= order; ++n) c.expect_eq(n, std::nullopt, 0, r[n]);
    results.push_back(c.take());
  }
  {
    Check c("a2 = d - x d - 1", "order " + std::to_string(order));
    const PowerSeries r = involution_identity_residual(order);
    for (int n = 0; n <= order; ++n) c.expect_eq(n, std::nullopt, 0, r[n]);
    results.push_back(c.take());
  }
  {
    Check c("0 < a_n < 2^n", "1 <= n <= " + std::to_string(order));
    for (int n = 1; n <= order; ++n)
      c.expect(a[n] > 0 && a[n] < (BigInt(1) << n), n, std::nullopt, "0 < a_n < 2^" + std::to_string(n),
               a[n].str());
    results.push_back(c.take());
  }
  {
    Check c("sav312 coefficients = brute strong 312 avoiders", upto(n_max));
    const PowerSeries s = sav312(order);
    for (int n = 1; n <= n_max; ++n) c.expect_eq(n, std::nullopt, s[n], count_strong_312_avoiders(n));
    results.push_back(c.take());
  }
  {
    Check c("sav312 order-4 recurrence", "5 <= n <= " + std::to_string(order));
    const PowerSeries s = sav312(order);
    for (int n = 5; n <= order; ++n)
      c.expect_eq(n, std::nullopt, 2 * s[n - 1] + s[n - 2] - 2 * s[n - 3] + s[n - 4], s[n]);
    results.push_back(c.take());
  }
  {
    Check c("constant K = 2.77826 +- 5e-6", "closed form");
    const double k = constant_K();
    c.expect(std::abs(k - 2.77826) <= 5e-6, 0, std::nullopt, "2.77826", std::to_string(k));
    results.push_back(c.take());
  }
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    os << (r.passed() ? "ok   " : "FAIL ") << r.name << " [" << r.detail << "]";
    if (r.failure) {
      os << ": " << r.failure->to_string();
      ++failed;
    }
    os << '\n';
  }
  if (failed == 0)
    os << "all " << results.size() << " checks passed\n";
  else
    os << failed << " of " << results.size() << " checks failed\n";
  return os.str();
}

}  // namespace sav132
