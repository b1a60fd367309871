#pragma once

#include "sav132/permutation.hpp"
#include "sav132/series.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace sav132 {

/// Which one-line template builds a strong avoider with π_b = n, b > n/2.
///   Form1 (3b >= 2n):     shifted α⁻¹, then 2n-2b+1 .. n, then α          (α of size n-b)
///   Form2 (n/2 < b < 2n/3): shifted α⁻¹, then b+1 .. n, then α, then 2b-n+1 .. n-b  (α of size 2b-n)
/// The shift applied to α⁻¹ is n-b in both cases.
enum class Variant { Form1, Form2 };

Variant parse_variant(std::string_view name);
std::string_view variant_name(Variant v);

/// Form for a given (n, b) with n/2 < b < n.
Variant variant_for(int n, int b);

struct ConstructionParams {
  int n = 0;
  int b = 0;
  Variant variant = Variant::Form1;
  Permutation alpha = Permutation::identity(1);
  bool take_inverse = false;
};

/// Throws std::invalid_argument unless the size window for the variant holds,
/// α has the matching size, and α avoids 132.
void validate(const ConstructionParams& params);

Permutation build_form1(const ConstructionParams& params);
Permutation build_form2(const ConstructionParams& params);

/// Dispatches on params.variant.
Permutation build(const ConstructionParams& params);

/// The square of build(params), written down directly from the piecewise
/// description (no composition). Used to cross-check the constructions.
Permutation predicted_square(const ConstructionParams& params);

struct BigCycleMember {
  ConstructionParams params;
  Permutation permutation;
};

/// Every strong 132 avoider of size n whose n lies in a cycle of length >= 4:
/// for each b in (n/2, n) with n/gcd(n, b) >= 4, each 132-avoiding α in
/// lexicographic order, the construction followed by its inverse.
/// Throws std::logic_error if a forward construction coincides with an inverse one.
std::vector<BigCycleMember> enumerate_big_cycle(int n);

/// 2 [ sum_{i=1}^{floor((n-1)/3)} c_i + sum_{i=ceil((n+1)/3)}^{floor((n-1)/2)} c_{n-2i} ]
BigInt count_k_ge_4(int n);

/// sum over 1 <= r < n/2 with gcd(r, n) = 1 of 2 c_{min(r, n-2r)}
BigInt count_full_cycle(int n);

/// Wraps β in a layer of 3-cycles taken from α (size 3k, only 3-cycles).
/// β fills positions and values k+1..k+m (shifted by k). α's first k entries
/// go before it and the other 2k after, with α's values above k raised by m.
/// β may be absent (m = 0); otherwise its largest element must not be in a
/// 3-cycle. Throws std::invalid_argument on bad inputs.
Permutation layer_3cycles(const Permutation& alpha, const std::optional<Permutation>& beta);

/// 132 avoiders of the given size made only of 3-cycles.
std::vector<Permutation> pure_3cycle_avoiders(int size);

/// Builds the strong avoiders of size n with n in a 3-cycle by layering every
/// admissible (α, β) pair with |α| + |β| = n.
void for_each_3cycle_layered(int n, const std::function<void(const Permutation&)>& visit);

/// 132-avoiding involutions of size n, lexicographic.
std::vector<Permutation> involutions_132(int n, bool unsafe = false);

}  // namespace sav132
