#include <doctest.h>

#include <vector>

#include "braidfloor/braid_word.hpp"
#include "braidfloor/dehornoy_floor.hpp"
#include "braidfloor/nielsen_thurston.hpp"
#include "support/generators.hpp"

using namespace braidfloor;
using namespace braidfloor::testing;

namespace {

BraidWord W(int n, std::vector<Letter> letters) { return BraidWord(n, std::move(letters)); }

void check_witness(const BraidWord& a, const PeriodicityResult& r) {
  REQUIRE(r.periodic());
  const int n = a.strands();
  const PeriodicWitness& w = *r.witness;
  CHECK((w.power == n || w.power == n - 1));
  CHECK(is_trivial(compose(power(a, w.power), delta_power(n, -2 * w.twist))));
  CHECK(w.twist * n * (n - 1) == w.power * exponent_sum(a));
}

}  // namespace

TEST_CASE("is_periodic examples") {
  // delta^3 = Delta^2 in B_3, so (s1 s2)^12 = Delta^8
  const PeriodicityResult r = is_periodic(power(W(3, {1, 2}), 4));
  REQUIRE(r.periodic());
  CHECK(*r.witness == PeriodicWitness{3, 4});

  // exponent sum 0 forces twist 0, and the square and cube are nontrivial
  CHECK_FALSE(is_periodic(W(3, {1, -2})).periodic());

  for (int n = 2; n <= 5; ++n) {
    const BraidWord d2 = power(delta(n), 2);
    check_witness(d2, is_periodic(d2));
  }
  CHECK(is_periodic(BraidWord(4)).periodic());
}

TEST_CASE("every braid of B_2 is periodic") {
  for (int k = -5; k <= 5; ++k) check_witness(power(W(2, {1}), k), is_periodic(power(W(2, {1}), k)));
}

TEST_CASE("rotation powers and their conjugates are periodic") {
  WordGen gen(41);
  for (int n = 2; n <= 5; ++n) {
    for (int s = -8; s <= 8; ++s) {
      for (const BraidWord& base : {power(rotation_braid(n), s), power(rotation_braid_fixing_one(n), s)}) {
        CAPTURE(n);
        CAPTURE(s);
        check_witness(base, is_periodic(base));
        const BraidWord conj = conjugate(gen.word(n, 10), base);
        check_witness(conj, is_periodic(conj));
      }
    }
  }
}

TEST_CASE("periodicity is invariant under conjugation and central shifts") {
  WordGen gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.strands(2, 5);
    // mix generic words with periodic ones so both outcomes are exercised
    const BraidWord a = trial % 3 == 0 ? conjugate(gen.word(n, 6), power(rotation_braid(n), gen.uniform(-4, 4)))
                                       : gen.word(n, 20);
    const bool p = is_periodic(a).periodic();
    CAPTURE(format_word(a));
    CHECK(is_periodic(conjugate(gen.word(n, 10), a)).periodic() == p);
    for (int k = -2; k <= 2; ++k) {
      CHECK(is_periodic(compose(delta_power(n, 2 * k), a)).periodic() == p);
    }
  }
}

TEST_CASE("central shifts of s1 s2^-1 are aperiodic") {
  for (int k = -6; k <= 6; ++k) {
    CHECK_FALSE(is_periodic(compose(delta_power(3, 2 * k), W(3, {1, -2}))).periodic());
  }
}

TEST_CASE("classify_closure examples") {
  const GeometryVerdict hyp = classify_closure(compose(delta_power(3, 6), W(3, {1, -2})));
  CHECK(hyp.kind == GeometryKind::HyperbolicKnot);
  CHECK(hyp.floor_used == 3);

  CHECK(classify_closure(power(W(3, {1, 2}), 13)).kind == GeometryKind::TorusKnot);

  const GeometryVerdict low = classify_closure(W(3, {1, -2}));
  CHECK(low.kind == GeometryKind::Indeterminate);
  CHECK(low.floor_used == 0);
  CHECK(low.reason == "floor below 3");

  const GeometryVerdict link = classify_closure(W(3, {1, 2, 1}));
  CHECK(link.kind == GeometryKind::NotAKnot);
  CHECK(link.components == 2);
}

TEST_CASE("composite strand count with floor >= 3 stays indeterminate") {
  // s1 s2^-1 s3 has a 4-cycle permutation and exponent sum 1, which no
  // Delta^2-power divides at p = 3 or 4.
  const GeometryVerdict v = classify_closure(compose(delta_power(4, 6), W(4, {1, -2, 3})));
  CHECK(v.kind == GeometryKind::Indeterminate);
  CHECK(v.floor_used == 3);
  CHECK(v.reason == "requires reducibility test");
}

TEST_CASE("verdict invariants") {
  WordGen gen(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.strands(2, 5);
    const BraidWord a = compose(delta_power(n, 2 * gen.uniform(0, 4)), gen.word(n, 16));
    const GeometryVerdict v = classify_closure(a);
    CAPTURE(format_word(a));
    if (v.kind == GeometryKind::TorusKnot) {
      CHECK(is_periodic(a).periodic());
      CHECK(closure_component_count(a) == 1);
    }
    if (v.kind == GeometryKind::HyperbolicKnot) {
      CHECK(v.floor_used >= 3);
      CHECK(is_prime(n));
      CHECK(closure_component_count(a) == 1);
      CHECK_FALSE(is_periodic(a).periodic());
    }
  }
}

TEST_CASE("torus and hyperbolic verdicts never meet on conjugates") {
  WordGen gen(44);
  const std::vector<BraidWord> seeds = {
      compose(delta_power(3, 8), W(3, {1, -2})),
      compose(delta_power(3, 10), W(3, {2, -1, 2, -1})),
      power(W(3, {1, 2}), 13),
      power(W(5, {1, 2, 3, 4}), 17),
      compose(delta_power(5, 8), W(5, {1, -2, 3, -4})),
  };
  for (const BraidWord& seed : seeds) {
    const int n = seed.strands();
    bool torus = false;
    bool hyperbolic = false;
    for (int trial = 0; trial < 20; ++trial) {
      const GeometryKind k = classify_closure(conjugate(gen.word(n, 4), seed)).kind;
      torus = torus || k == GeometryKind::TorusKnot;
      hyperbolic = hyperbolic || k == GeometryKind::HyperbolicKnot;
    }
    CAPTURE(format_word(seed));
    CHECK_FALSE((torus && hyperbolic));
  }
}

TEST_CASE("verdict tags round-trip") {
  for (auto k : {GeometryKind::TorusKnot, GeometryKind::HyperbolicKnot, GeometryKind::NotAKnot,
                 GeometryKind::Indeterminate}) {
    CHECK(geometry_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(geometry_kind_from_string("Satellite"), std::invalid_argument);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}
