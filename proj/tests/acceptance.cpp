// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include "sav132/asymptotics.hpp"
#include "sav132/cli.hpp"
#include "sav132/constructors.hpp"
#include "sav132/enumeration.hpp"
#include "sav132/series.hpp"

#include "reference_counts.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

using namespace sav132;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  std::string id;
  bool ok = true;
  std::string failure;
  std::ostringstream note;

  explicit Criterion(std::string name) : id(std::move(name)) {}

  // Records the first failure; later ones only flip the flag.
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) failure = what;
    ok = false;
  }
};

int failures = 0;

void report(Criterion& c) {
  std::cout << (c.ok ? "PASS " : "FAIL ") << c.id << ": " << c.note.str();
  if (!c.ok) std::cout << "; first failure: " << c.failure;
  std::cout << std::endl;
  if (!c.ok) ++failures;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

bool is_involution(std::span<const int> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[static_cast<std::size_t>(p[i] - 1)] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string str(const auto& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

int main() {
  std::cout << std::boolalpha;

  // AC1
  ClassTable table14(14);
  {
    Criterion c("AC1 published table for n <= 14 (and n = 15)");
    auto start = Clock::now();
    table14 = brute_table(14, {1, false});
    const double t1 = seconds_since(start);
    start = Clock::now();
    const auto table14_par = brute_table(14, {8, false});
    const double t8 = seconds_since(start);
    c.require(table14 == table14_par, "8-worker table differs from single-threaded");
    for (int n = 1; n <= 14; ++n)
      for (int k = 1; k <= n; ++k)
        c.require(table14.count(n, k) == reference::count(n, k),
                  "a(" + str(n) + "," + str(k) + ") = " + str(table14.count(n, k)) + ", expected " +
                      str(reference::count(n, k)));
    c.require(table14.count(7, 3) == 28 && table14.count(12, 4) == 10 && table14.count(14, 7) == 36 &&
                  table14.total(14) == 12306,
              "spot values");
    c.require(t1 < 60.0, "single-threaded time " + str(t1) + " s");
    c.require(t8 < 15.0, "8-worker time " + str(t8) + " s");

    start = Clock::now();
    const auto row15 = classify_row(15, {1, false});
    const double t15 = seconds_since(start);
    std::uint64_t total15 = 0;
    for (int k = 1; k <= 15; ++k) {
      total15 += row15[static_cast<std::size_t>(k)];
      c.require(row15[static_cast<std::size_t>(k)] == reference::count(15, k),
                "a(15," + str(k) + ") = " + str(row15[static_cast<std::size_t>(k)]));
    }
    c.require(total15 == 24223 && row15[5] == 20 && row15[15] == 36 && row15[2] == 3003, "n = 15 spot values");
    c.require(t15 < 300.0, "n = 15 time " + str(t15) + " s");
    c.note << "n<=14 in " << t1 << " s (1 worker), " << t8 << " s (8 workers); n=15 total " << total15 << " in "
           << t15 << " s";
    report(c);
  }

  // AC2
  {
    Criterion c("AC2 generating function");
    const auto a = sav132::sav132(64);
    for (int n = 1; n <= 14; ++n)
      c.require(a[n] == table14.total(n), "coefficient " + str(n) + " = " + a[n].str());
    c.require(master_identity_residual(64).is_zero(), "master identity residual nonzero");
    for (int n = 1; n <= 64; ++n) c.require(a[n] < (BigInt(1) << n), "a_" + str(n) + " >= 2^" + str(n));
    c.note << "totals n<=14 exact, residual zero and a_n < 2^n through order 64";
    report(c);
  }

  // AC3
  {
    Criterion c("AC3 closed-form counts");
    for (int n = 4; n <= 14; ++n) {
      std::uint64_t big = 0;
      for (int k = 4; k <= n; ++k) big += table14.count(n, k);
      c.require(count_k_ge_4(n) == big, "count_k_ge_4(" + str(n) + ")");
      c.require(count_full_cycle(n) == table14.count(n, n), "count_full_cycle(" + str(n) + ")");
    }
    for (int n = 2; n <= 14; ++n)
      c.require(binomial(n - 1, (n - 2) / 2) == table14.count(n, 2), "a(" + str(n) + ",2)");
    c.note << "k>=4 and full-cycle sums for 4<=n<=14, a(n,2) for 2<=n<=14";
    report(c);
  }

  // AC4
  {
    Criterion c("AC4 big-cycle constructions");
    const auto start = Clock::now();
    std::size_t compared = 0;
    for (int n = 4; n <= 14; ++n) {
      std::set<Permutation> brute;
      for_each_avoider_132(n, [&](std::span<const int> p) {
        if (!strongly_avoids_132(p)) return;
        Permutation perm({p.begin(), p.end()});
        if (cycle_length_of(perm, n) >= 4) brute.insert(std::move(perm));
      });
      std::set<Permutation> built;
      for (const auto& m : enumerate_big_cycle(n)) {
        c.require(built.insert(m.permutation).second, "duplicate at n = " + str(n));
        c.require(cycle_length_of(m.permutation, n) == n / std::gcd(n, m.params.b),
                  "cycle law at n = " + str(n) + ", b = " + str(m.params.b));
      }
      c.require(built == brute, "set mismatch at n = " + str(n));
      compared += built.size();
    }
    std::size_t sound = 0;
    for (int n = 4; n <= 18; ++n)
      for (int b = n / 2 + 1; b < n; ++b) {
        const Variant v = variant_for(n, b);
        const int size = v == Variant::Form1 ? n - b : 2 * b - n;
        for_each_avoider_132(size, [&](std::span<const int> alpha) {
          for (bool inv : {false, true}) {
            const auto p = build({n, b, v, Permutation({alpha.begin(), alpha.end()}), inv});
            c.require(strongly_avoids_132(p), "unsound " + p.to_string());
            c.require(cycle_length_of(p, n) == n / std::gcd(n, b), "cycle law " + p.to_string());
            ++sound;
          }
        });
      }
    c.note << compared << " permutations matched as sets for n<=14; " << sound
           << " constructions sound for n<=18 (" << seconds_since(start) << " s)";
    report(c);
  }

  // AC5
  {
    Criterion c("AC5 involution structure");
    for (int n = 1; n <= 12; ++n) {
      std::uint64_t involutions = 0;
      for_each_avoider_132(n, [&](std::span<const int> p) {
        const bool inv = is_involution(p);
        involutions += inv;
        if (strongly_avoids_132(p) && p[static_cast<std::size_t>(p[static_cast<std::size_t>(n - 1)] - 1)] == n &&
            p[static_cast<std::size_t>(n - 1)] != n)
          c.require(inv, "n in a 2-cycle but not an involution at n = " + str(n));
      });
      c.require(involutions == binomial(n, n / 2), "involution count at n = " + str(n));
    }
    c.note << "n<=12";
    report(c);
  }

  // AC6
  {
    Criterion c("AC6 asymptotics");
    const AsymptoticWindows w;
    const double k = constant_K();
    c.require(std::abs(k - 2.77826) <= 5e-6, "K = " + str(k));
    const auto r = asymptotic_report(64, 64);
    auto dev = [&](int n) { return r.ratios[static_cast<std::size_t>(n - 1)].second / k - 1.0; };
    double worst = 0.0;
    int worst_n = 0;
    for (int n = w.ratio_from; n <= w.ratio_to; ++n) {
      c.require(std::abs(dev(n)) < w.ratio_relative_tolerance,
                "ratio at n = " + str(n) + " is " + str(r.ratios[static_cast<std::size_t>(n - 1)].second) +
                    " (" + str(100 * dev(n)) + "% from K)");
      if (std::abs(dev(n)) > worst) worst = std::abs(dev(n)), worst_n = n;
    }
    c.require(std::abs(dev(64)) < std::abs(dev(16)),
              "trend: |dev(64)| = " + str(std::abs(dev(64))) + " not below |dev(16)| = " + str(std::abs(dev(16))));
    for (int n = w.growth_from; n <= w.growth_to; ++n) {
      const double g = r.growth[static_cast<std::size_t>(n - 1)].second;
      c.require(g > w.growth_lower && g < w.growth_upper, "growth at n = " + str(n) + " is " + str(g));
    }
    const auto scaled = sav132_scaled(2000);
    auto far = [&](int n) { return scaled[static_cast<std::size_t>(n)] * std::sqrt(n) / k - 1.0; };
    c.note << "K = " << k << "; worst ratio deviation " << 100 * worst << "% at n = " << worst_n
           << "; deviation " << 100 * far(100) << "% at n = 100, " << 100 * far(2000) << "% at n = 2000";
    report(c);
  }

  // AC7
  {
    Criterion c("AC7 strong 312 avoiders");
    const auto s = sav312(64);
    const auto start = Clock::now();
    for (int n = 1; n <= 11; ++n) {
      const auto brute = count_strong_avoiders(Pattern::of("312"), n);
      c.require(s[n] == brute, "n = " + str(n) + ": series " + s[n].str() + ", brute " + str(brute));
    }
    for (int n = 5; n <= 64; ++n)
      c.require(s[n] == 2 * s[n - 1] + s[n - 2] - 2 * s[n - 3] + s[n - 4], "recurrence at n = " + str(n));
    c.note << "brute n<=11 over all of S_n (" << seconds_since(start) << " s), recurrence 5<=n<=64";
    report(c);
  }

  // AC8
  {
    Criterion c("AC8 deterministic verify output");
    auto run = [](std::vector<std::string> args) {
      std::ostringstream out, err;
      const int status = cli::run(args, out, err);
      return std::to_string(status) + "\n" + out.str();
    };
    const auto first = run({"verify", "--n-max", "12"});
    c.require(first.rfind("0\n", 0) == 0, "verify exit status " + first.substr(0, first.find('\n')));
    c.require(run({"verify", "--n-max", "12"}) == first, "second run differs");
    c.require(run({"verify", "--n-max", "12", "--jobs", "4"}) == first, "4 workers differ");
    c.require(run({"verify", "--n-max", "12", "--jobs", "8"}) == first, "8 workers differ");
    std::size_t compared = 3;
    if (const char* exe = std::getenv("SAV132_CLI")) {
      auto capture = [&](const std::string& args) {
        std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen((std::string(exe) + " " + args).c_str(), "r"), ::pclose);
        std::string text;
        char buf[512];
        while (pipe && std::fgets(buf, sizeof buf, pipe.get())) text += buf;
        return "0\n" + text;
      };
      c.require(capture("verify --n-max 12") == first, "binary output differs from in-process output");
      c.require(capture("verify --n-max 12 --jobs 4") == first, "binary output with 4 workers differs");
      compared += 2;
    }
    c.note << compared << " repeated runs byte-identical";
    report(c);
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
