#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "braidfloor/braid_word.hpp"
#include "braidfloor/dehornoy_floor.hpp"
#include "braidfloor/dehornoy_order.hpp"
#include "support/burau.hpp"
#include "support/generators.hpp"
#include "support/relators.hpp"

using namespace braidfloor;
using namespace braidfloor::testing;

namespace {

BraidWord W(int n, std::vector<Letter> letters) { return BraidWord(n, std::move(letters)); }

// No sigma_i^e v sigma_i^{-e} with v free of indices <= i.
bool handle_free(const BraidWord& w) {
  const auto L = w.letters();
  for (std::size_t j = 0; j < L.size(); ++j) {
    const int i = std::abs(L[j]);
    for (std::size_t p = j; p-- > 0;) {
      if (std::abs(L[p]) > i) continue;
      if (L[p] == -L[j]) return false;
      break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("handle_reduce examples") {
  // one rewrite: s1 s2 s1^-1 -> s2^-1 s1 s2
  CHECK(handle_reduce(W(3, {1, 2, -1})) == W(3, {-2, 1, 2}));
  CHECK(handle_reduce(W(3, {1, -1})).empty());
  CHECK(handle_reduce(compose(delta(3), invert(delta(3)))).empty());
  CHECK(handle_reduce(W(3, {1, 2, 1, -1, -2, -1})).empty());
  CHECK(handle_reduce(BraidWord(5)).empty());
}

TEST_CASE("sign_class examples") {
  CHECK(sign_class(W(3, {-2, 1})) == SignClass::positive(1));
  CHECK(sign_class(BraidWord(3)) == SignClass::trivial());
  CHECK(sign_class(W(3, {-1, 2})) == SignClass::negative(1));
  CHECK(sign_class(W(4, {3, -2, 3})) == SignClass::negative(2));
  CHECK(sign_class(W(4, {3})) == SignClass::positive(3));
}

TEST_CASE("compare examples") {
  CHECK(compare(BraidWord(3), W(3, {1})) == OrderVerdict::Less);
  const BraidWord d2 = power(delta(3), 2);
  CHECK(compare(compose(d2, W(3, {2, -1})), d2) == OrderVerdict::Less);
}

TEST_CASE("compare rejects mismatched strand counts") {
  CHECK_THROWS_AS(compare(W(3, {1}), W(4, {1})), std::invalid_argument);
}

TEST_CASE("is_trivial examples") {
  CHECK(is_trivial(W(3, {1, 2, 1, -2, -1, -2})));
  CHECK(is_trivial(W(4, {1, 3, -1, -3})));
  CHECK_FALSE(is_trivial(W(3, {1, 2})));
}

TEST_CASE("reduction cap raises ResourceLimitExceeded") {
  const BraidWord w = compose(power(delta(4), 3), invert(power(delta(4), 3)));
  const BraidWord hard = compose3(W(4, {1, 2, 3}), power(delta(4), 4), W(4, {-1, -2}));
  CHECK_THROWS_AS(handle_reduce(compose(hard, invert(power(delta(4), 4))), ReductionLimits{1}),
                  ResourceLimitExceeded);
  CHECK(handle_reduce(w, ReductionLimits{0}).empty());  // already freely trivial after compose
}

TEST_CASE("handle_reduce output is handle-free with a single-signed main generator") {
  WordGen gen(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = gen.strands(2, 5);
    const BraidWord a = gen.word(n, 60);
    const BraidWord r = handle_reduce(a);
    CAPTURE(format_word(a));
    CHECK(handle_free(r));
    if (!r.empty()) {
      int lowest = n;
      for (Letter x : r.letters()) lowest = std::min(lowest, std::abs(x));
      bool pos = false, neg = false;
      for (Letter x : r.letters()) {
        if (x == lowest) pos = true;
        if (x == -lowest) neg = true;
      }
      CHECK(pos != neg);
    }
  }
}

TEST_CASE("handle_reduce preserves the braid element") {
  WordGen gen(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = gen.strands(2, 5);
    const BraidWord a = gen.word(n, 60);
    const BraidWord r = handle_reduce(a);
    CAPTURE(format_word(a));
    CHECK(permutation_of(r) == permutation_of(a));
    CHECK(exponent_sum(r) == exponent_sum(a));
    CHECK(is_trivial(compose(a, invert(r))));
    // independent necessary condition: equal Burau images at a generic t
    const BurauModP burau(n, 0x9E3779B97F4A7C15ULL);
    CHECK(burau.of_word(r) == burau.of_word(a));
  }
}

TEST_CASE("Burau oracles respect the braid relations") {
  using R = ReducedBurau3;
  const auto m = [](std::vector<Letter> w) { return R::of_word(BraidWord(3, std::move(w))); };
  CHECK(m({1, 2, 1}) == m({2, 1, 2}));
  CHECK(m({1, -1}) == R::identity());
  CHECK(m({-2, 2}) == R::identity());
  CHECK_FALSE(m({1, 2}) == m({2, 1}));

  const BurauModP b4(4, 12345);
  CHECK(b4.of_word(W(4, {1, 2, 1})) == b4.of_word(W(4, {2, 1, 2})));
  CHECK(b4.of_word(W(4, {1, 3})) == b4.of_word(W(4, {3, 1})));
  CHECK(b4.of_word(W(4, {3, -3, 2, -2})) == b4.identity());
}

TEST_CASE("is_trivial agrees with the reduced Burau representation of B_3") {
  WordGen gen(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const BraidWord w = trial % 2 == 0 ? random_trivial_word(gen, 3, 80) : gen.word(3, 80);
    CAPTURE(format_word(w));
    CHECK(is_trivial(w) == ReducedBurau3::is_identity(w));
  }
}

TEST_CASE("order properties") {
  WordGen gen(24);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = gen.strands(2, 5);
    const BraidWord a = gen.word(n, 40);
    const BraidWord b = gen.word(n, 40);
    const BraidWord g = gen.word(n, 20);
    CAPTURE(format_word(a));
    CAPTURE(format_word(b));
    const OrderVerdict ab = compare(a, b);
    const OrderVerdict ba = compare(b, a);
    // antisymmetry
    CHECK((ab == OrderVerdict::Less) == (ba == OrderVerdict::Greater));
    CHECK((ab == OrderVerdict::Equal) == (ba == OrderVerdict::Equal));
    CHECK(compare(a, a) == OrderVerdict::Equal);
    // left invariance
    CHECK(compare(compose(g, a), compose(g, b)) == ab);
    // subword property
    const int i = gen.uniform(1, n - 1);
    CHECK(compare(compose(a, b), compose3(a, generator(n, i), b)) == OrderVerdict::Less);
    CHECK(compare(compose3(a, generator(n, -i), b), compose(a, b)) == OrderVerdict::Less);
  }
}

TEST_CASE("compare against large Delta powers settles at the occurrence bound") {
  WordGen gen(25);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.strands(2, 4);
    const BraidWord a = gen.word(n, 20);
    const long long k = occurrence_bound(a).bound + 1;
    CAPTURE(format_word(a));
    CHECK(compare(delta_power(n, -2 * k), a) == OrderVerdict::Less);
    CHECK(compare(a, delta_power(n, 2 * k)) == OrderVerdict::Less);
  }
}
