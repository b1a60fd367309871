#include "sav132/constructors.hpp"

#include "sav132/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace sav132 {

namespace {

const Pattern& p132() {
  static const Pattern p = Pattern::of("132");
  return p;
}

std::string describe(const ConstructionParams& p) {
  return "n=" + std::to_string(p.n) + " b=" + std::to_string(p.b) + " " + std::string(variant_name(p.variant));
}

Permutation finish(std::vector<int> image, bool take_inverse) {
  Permutation p(std::move(image));
  return take_inverse ? inverse(p) : p;
}

}  // namespace

Variant parse_variant(std::string_view name) {
  if (name == "form1") return Variant::Form1;
  if (name == "form2") return Variant::Form2;
  throw std::invalid_argument("unknown variant \"" + std::string(name) + "\" (expected form1 or form2)");
}

std::string_view variant_name(Variant v) { return v == Variant::Form1 ? "form1" : "form2"; }

Variant variant_for(int n, int b) {
  if (2 * b <= n || b >= n)
    throw std::invalid_argument("position of n must satisfy n/2 < b < n");
  return 3 * b >= 2 * n ? Variant::Form1 : Variant::Form2;
}

void validate(const ConstructionParams& p) {
  if (p.n < 2 || p.b < 1 || p.b >= p.n)
    throw std::invalid_argument("construction needs 1 <= b <= n-1: " + describe(p));
  int alpha_size = 0;
  if (p.variant == Variant::Form1) {
    if (3 * p.b < 2 * p.n) throw std::invalid_argument("form1 needs b >= 2n/3: " + describe(p));
    alpha_size = p.n - p.b;
  } else {
    if (!(2 * p.b > p.n && 3 * p.b < 2 * p.n))
      throw std::invalid_argument("form2 needs n/2 < b < 2n/3: " + describe(p));
    alpha_size = 2 * p.b - p.n;
  }
  if (p.alpha.size() != alpha_size)
    throw std::invalid_argument("alpha must have size " + std::to_string(alpha_size) + ": " + describe(p));
  if (contains_pattern(p.alpha, p132()))
    throw std::invalid_argument("alpha must avoid 132: " + describe(p));
}

Permutation build_form1(const ConstructionParams& p) {
  if (p.variant != Variant::Form1) throw std::invalid_argument("build_form1 called with form2 parameters");
  validate(p);
  const int n = p.n, b = p.b, shift = n - b;
  const Permutation alpha_inv = inverse(p.alpha);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int v;
    if (k <= shift)
      v = alpha_inv(k) + shift;
    else if (k <= b)
      v = k + shift;
    else
      v = p.alpha(k - b);
    image[static_cast<std::size_t>(k - 1)] = v;
  }
  return finish(std::move(image), p.take_inverse);
}

Permutation build_form2(const ConstructionParams& p) {
  if (p.variant != Variant::Form2) throw std::invalid_argument("build_form2 called with form1 parameters");
  validate(p);
  const int n = p.n, b = p.b, shift = n - b, head = 2 * b - n;
  const Permutation alpha_inv = inverse(p.alpha);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int v;
    if (k <= head)
      v = alpha_inv(k) + shift;
    else if (k <= b)
      v = k + shift;
    else if (k <= 3 * b - n)
      v = p.alpha(k - b);
    else
      v = k - b;
    image[static_cast<std::size_t>(k - 1)] = v;
  }
  return finish(std::move(image), p.take_inverse);
}

Permutation build(const ConstructionParams& params) {
  return params.variant == Variant::Form1 ? build_form1(params) : build_form2(params);
}

Permutation predicted_square(const ConstructionParams& p) {
  validate(p);
  const int n = p.n, b = p.b;
  const Permutation alpha_inv = inverse(p.alpha);
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    int v;
    if (p.variant == Variant::Form1) {
      if (k <= n - b)
        v = alpha_inv(k) + 2 * n - 2 * b;
      else if (k <= 2 * b - n)
        v = k + 2 * n - 2 * b;
      else if (k <= b)
        v = p.alpha(k + n - 2 * b);
      else
        v = k + n - 2 * b;
    } else {
      if (k <= 2 * b - n)
        v = alpha_inv(k) + 2 * n - 2 * b;
      else if (k <= 4 * b - 2 * n)
        v = p.alpha(k + n - 2 * b);
      else
        v = k + n - 2 * b;
    }
    image[static_cast<std::size_t>(k - 1)] = v;
  }
  return finish(std::move(image), p.take_inverse);
}

std::vector<BigCycleMember> enumerate_big_cycle(int n) {
  std::vector<BigCycleMember> out;
  if (n < 4) return out;
  std::unordered_set<Permutation> forward, inverted;
  for (int b = n / 2 + 1; b <= n - 1; ++b) {
    if (n / std::gcd(n, b) <= 3) continue;
    const Variant variant = variant_for(n, b);
    const int alpha_size = variant == Variant::Form1 ? n - b : 2 * b - n;
    for (const auto& alpha : avoiders_132(alpha_size)) {
      for (bool inv : {false, true}) {
        ConstructionParams params{n, b, variant, alpha, inv};
        Permutation perm = build(params);
        auto& mine = inv ? inverted : forward;
        const auto& other = inv ? forward : inverted;
        if (other.contains(perm))
          throw std::logic_error("forward and inverse constructions collide at " + perm.to_string());
        if (!mine.insert(perm).second)
          throw std::logic_error("construction repeated " + perm.to_string());
        out.push_back({std::move(params), std::move(perm)});
      }
    }
  }
  return out;
}

BigInt count_k_ge_4(int n) {
  if (n < 4) return 0;
  const PowerSeries c = catalan(n);
  BigInt sum = 0;
  for (int i = 1; i <= (n - 1) / 3; ++i) sum += c[i];
  for (int i = (n + 1 + 2) / 3; i <= (n - 1) / 2; ++i) sum += c[n - 2 * i];
  return 2 * sum;
}

BigInt count_full_cycle(int n) {
  if (n < 3) return 0;
  const PowerSeries c = catalan(n);
  BigInt sum = 0;
  for (int r = 1; 2 * r < n; ++r)
    if (std::gcd(r, n) == 1) sum += 2 * c[std::min(r, n - 2 * r)];
  return sum;
}

Permutation layer_3cycles(const Permutation& alpha, const std::optional<Permutation>& beta) {
  const int size3k = alpha.size();
  if (size3k % 3 != 0) throw std::invalid_argument("layer_3cycles: alpha size must be a multiple of 3");
  for (int len : cycle_type(alpha))
    if (len != 3) throw std::invalid_argument("layer_3cycles: alpha must consist of 3-cycles only");
  if (contains_pattern(alpha, p132())) throw std::invalid_argument("layer_3cycles: alpha must avoid 132");
  const int m = beta ? beta->size() : 0;
  if (beta) {
    if (!strongly_avoids_132(*beta)) throw std::invalid_argument("layer_3cycles: beta must strongly avoid 132");
    if (cycle_length_of(*beta, m) == 3)
      throw std::invalid_argument("layer_3cycles: the largest element of beta must not be in a 3-cycle");
  }

  const int k = size3k / 3;
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(size3k + m));
  // beta takes the middle block of positions and values; alpha keeps its
  // values up to k and moves the rest above beta.
  auto lift = [&](int v) { return v <= k ? v : v + m; };
  for (int i = 1; i <= k; ++i) image.push_back(lift(alpha(i)));
  for (int i = 1; i <= m; ++i) image.push_back((*beta)(i) + k);
  for (int i = k + 1; i <= 3 * k; ++i) image.push_back(lift(alpha(i)));
  return Permutation(std::move(image));
}

std::vector<Permutation> pure_3cycle_avoiders(int size) {
  std::vector<Permutation> out;
  if (size < 3 || size % 3 != 0) return out;
  for_each_avoider_132(size, [&](std::span<const int> p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      const int j = p[i];
      if (j == static_cast<int>(i) + 1 || p[static_cast<std::size_t>(p[static_cast<std::size_t>(j - 1)] - 1)] != static_cast<int>(i) + 1)
        return;
    }
    out.emplace_back(std::vector<int>(p.begin(), p.end()));
  });
  return out;
}

void for_each_3cycle_layered(int n, const std::function<void(const Permutation&)>& visit) {
  for (int size3k = 3; size3k <= n; size3k += 3) {
    const int m = n - size3k;
    std::vector<std::optional<Permutation>> cores;
    if (m == 0) {
      cores.emplace_back(std::nullopt);
    } else {
      for (auto& beta : strong_avoiders_132(m))
        if (cycle_length_of(beta, m) != 3) cores.emplace_back(std::move(beta));
    }
    for (const auto& alpha : pure_3cycle_avoiders(size3k))
      for (const auto& beta : cores) visit(layer_3cycles(alpha, beta));
  }
}

std::vector<Permutation> involutions_132(int n, bool unsafe) {
  std::vector<Permutation> out;
  for_each_avoider_132(
      n,
      [&](std::span<const int> p) {
        for (std::size_t i = 0; i < p.size(); ++i)
          if (p[static_cast<std::size_t>(p[i] - 1)] != static_cast<int>(i) + 1) return;
        out.emplace_back(std::vector<int>(p.begin(), p.end()));
      },
      unsafe);
  return out;
}

}  // namespace sav132
