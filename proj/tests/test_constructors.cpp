#include "sav132/constructors.hpp"
#include "sav132/enumeration.hpp"

#include "doctest.h"
#include "oracles.hpp"
#include "reference_counts.hpp"

#include <numeric>
#include <set>

using namespace sav132;

namespace {

Permutation make(int n, int b, std::vector<int> alpha, bool inverse = false) {
  return build(ConstructionParams{n, b, variant_for(n, b), Permutation(std::move(alpha)), inverse});
}

std::set<Permutation> naive_strong_with_cycle(int n, auto keep) {
  std::set<Permutation> out;
  oracle::for_each_perm(n, [&](const oracle::Perm& p) {
    if (oracle::strongly_avoids(p, {1, 3, 2}) && keep(oracle::cycle_length(p, n))) out.insert(Permutation(p));
  });
  return out;
}

}  // namespace

TEST_CASE("variant selection") {
  CHECK(variant_for(12, 8) == Variant::Form1);
  CHECK(variant_for(12, 7) == Variant::Form2);
  CHECK(variant_for(15, 9) == Variant::Form2);
  CHECK(variant_for(15, 10) == Variant::Form1);
  CHECK_THROWS_AS(variant_for(12, 6), std::invalid_argument);
  CHECK_THROWS_AS(variant_for(12, 12), std::invalid_argument);
  CHECK(parse_variant(variant_name(Variant::Form2)) == Variant::Form2);
  CHECK_THROWS_AS(parse_variant("form3"), std::invalid_argument);
}

TEST_CASE("worked examples at n = 12") {
  auto p = make(12, 11, {1});
  CHECK(p == Permutation({2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 1}));
  CHECK(cycle_decomposition(p).to_string() == "(1,2,3,4,5,6,7,8,9,10,11,12)");

  p = make(12, 9, {1, 2, 3});
  CHECK(p == Permutation({4, 5, 6, 7, 8, 9, 10, 11, 12, 1, 2, 3}));
  CHECK(cycle_decomposition(p).to_string() == "(1,4,7,10)(2,5,8,11)(3,6,9,12)");

  p = make(12, 10, {2, 1});
  CHECK(p == Permutation({4, 3, 5, 6, 7, 8, 9, 10, 11, 12, 2, 1}));
  CHECK(cycle_decomposition(p).to_string() == "(1,4,6,8,10,12)(2,3,5,7,9,11)");

  p = make(12, 7, {1, 2});
  CHECK(p == Permutation({6, 7, 8, 9, 10, 11, 12, 1, 2, 3, 4, 5}));
  CHECK(cycle_length_of(p, 12) == 12);

  p = make(12, 7, {2, 1});
  CHECK(p == Permutation({7, 6, 8, 9, 10, 11, 12, 2, 1, 3, 4, 5}));
  CHECK(cycle_length_of(p, 12) == 12);
}

TEST_CASE("n = 15, b = 9 gives five permutations with 15 in a 5-cycle") {
  int count = 0;
  for_each_avoider_132(3, [&](std::span<const int> a) {
    const auto p = make(15, 9, {a.begin(), a.end()});
    CHECK(strongly_avoids_132(p));
    CHECK(cycle_length_of(p, 15) == 5);
    ++count;
  });
  CHECK(count == 5);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(make(12, 9, {1, 2}), std::invalid_argument);     // wrong size
  CHECK_THROWS_AS(make(12, 9, {1, 3, 2}), std::invalid_argument);  // contains 132
  CHECK_THROWS_AS(build(ConstructionParams{12, 7, Variant::Form1, Permutation({1, 2, 3, 4, 5}), false}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build(ConstructionParams{12, 9, Variant::Form2, Permutation({1, 2, 3, 4, 5, 6}), false}),
                  std::invalid_argument);
}

TEST_CASE("soundness, cycle law and square structure for n <= 16") {
  for (int n = 4; n <= 16; ++n)
    for (int b = n / 2 + 1; b < n; ++b) {
      const Variant v = variant_for(n, b);
      const int size = v == Variant::Form1 ? n - b : 2 * b - n;
      for_each_avoider_132(size, [&](std::span<const int> a) {
        for (bool inv : {false, true}) {
          const ConstructionParams params{n, b, v, Permutation({a.begin(), a.end()}), inv};
          const auto p = build(params);
          CHECK(strongly_avoids_132(p));
          CHECK(cycle_length_of(p, n) == n / std::gcd(n, b));
          CHECK(predicted_square(params) == square(p));
          CHECK((inv ? p(n) : p.position_of(n)) == b);
        }
      });
    }
}

TEST_CASE("big-cycle family equals naive filtering") {
  for (int n = 4; n <= 9; ++n) {
    std::set<Permutation> built;
    for (const auto& m : enumerate_big_cycle(n)) CHECK(built.insert(m.permutation).second);
    CHECK(built == naive_strong_with_cycle(n, [](int k) { return k >= 4; }));
  }
}

TEST_CASE("big-cycle family sizes") {
  auto by_length = [](int n) {
    std::map<int, int> out;
    for (const auto& m : enumerate_big_cycle(n)) ++out[cycle_length_of(m.permutation, n)];
    return out;
  };
  CHECK(by_length(12) == std::map<int, int>{{4, 10}, {6, 4}, {12, 6}});
  CHECK(by_length(14) == std::map<int, int>{{7, 36}, {14, 40}});
  CHECK(by_length(5) == std::map<int, int>{{5, 4}});
  for (int n = 4; n <= 18; ++n) CHECK_NOTHROW(enumerate_big_cycle(n));
}

TEST_CASE("closed-form counts") {
  for (int n = 4; n <= reference::kMaxN; ++n) {
    std::uint64_t big = 0;
    for (int k = 4; k <= n; ++k) big += reference::count(n, k);
    CHECK(count_k_ge_4(n) == big);
    CHECK(count_full_cycle(n) == reference::count(n, n));
  }
  CHECK(count_k_ge_4(12) == 20);
  CHECK(count_k_ge_4(15) == 56);
  CHECK(count_k_ge_4(4) == 2);
  CHECK(count_full_cycle(12) == 6);
  CHECK(count_full_cycle(11) == 28);
  CHECK(count_full_cycle(13) == 56);
  CHECK(count_full_cycle(3) == 2);
}

TEST_CASE("3-cycle layering") {
  const auto single = layer_3cycles(Permutation({2, 3, 1}), std::nullopt);
  CHECK(single == Permutation({2, 3, 1}));
  CHECK(cycle_length_of(single, 3) == 3);

  const auto wrapped = layer_3cycles(Permutation({3, 1, 2}), Permutation({1}));
  CHECK(wrapped == Permutation({4, 2, 1, 3}));
  CHECK(strongly_avoids_132(wrapped));
  CHECK(cycle_length_of(wrapped, 4) == 3);

  CHECK_THROWS_AS(layer_3cycles(Permutation({2, 1, 3}), std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(layer_3cycles(Permutation({2, 3, 1}), Permutation({2, 3, 1})), std::invalid_argument);
  CHECK_THROWS_AS(layer_3cycles(Permutation({2, 3, 1}), Permutation({1, 3, 2})), std::invalid_argument);

  int four = 0, six = 0;
  for_each_3cycle_layered(4, [&](const Permutation&) { ++four; });
  for_each_3cycle_layered(6, [&](const Permutation&) { ++six; });
  CHECK(four == 2);
  CHECK(six == 14);

  for (int n = 3; n <= 9; ++n) {
    std::set<Permutation> built;
    for_each_3cycle_layered(n, [&](const Permutation& p) { CHECK(built.insert(p).second); });
    CHECK(built == naive_strong_with_cycle(n, [](int k) { return k == 3; }));
  }
}

TEST_CASE("pure 3-cycle avoiders") {
  CHECK(pure_3cycle_avoiders(3) == std::vector<Permutation>{Permutation({2, 3, 1}), Permutation({3, 1, 2})});
  CHECK(pure_3cycle_avoiders(6).size() == 8);
  CHECK(pure_3cycle_avoiders(4).empty());
}

TEST_CASE("132-avoiding involutions") {
  for (int n = 1; n <= 12; ++n) {
    const auto inv = involutions_132(n);
    CHECK(inv.size() == oracle::binomial(n, n / 2));
    std::uint64_t moved = 0;
    for (const auto& p : inv) {
      CHECK(p.is_involution());
      CHECK(strongly_avoids_132(p));
      moved += p(n) != n;
    }
    if (n >= 2) CHECK(moved == oracle::binomial(n - 1, (n - 2) / 2));
  }
  std::uint64_t moved5 = 0;
  for (const auto& p : involutions_132(5)) moved5 += p(5) != 5;
  CHECK(moved5 == 4);
  CHECK(involutions_132(10).size() == 252);
}
