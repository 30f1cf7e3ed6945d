#pragma once

#include <optional>
#include <string>

#include "braidfloor/braid_word.hpp"
#include "braidfloor/dehornoy_order.hpp"

namespace braidfloor {

// beta^power == Delta^{2 * twist}.
struct PeriodicWitness {
  int power = 0;
  long long twist = 0;

  friend bool operator==(const PeriodicWitness&, const PeriodicWitness&) = default;
};

struct PeriodicityResult {
  std::optional<PeriodicWitness> witness;
  bool periodic() const { return witness.has_value(); }
};

// A braid is periodic iff it is conjugate to a power of s1...s_{n-1} or of
// s1...s_{n-1}s1, i.e. iff beta^{n-1} or beta^n is a power of Delta^2. The
// twist is forced by exponent sums and only then checked by handle reduction.
PeriodicityResult is_periodic(const BraidWord& a, const ReductionLimits& limits = {});

enum class GeometryKind { TorusKnot, HyperbolicKnot, NotAKnot, Indeterminate };

std::string to_string(GeometryKind k);
// Inverse of to_string; throws std::invalid_argument on an unknown tag.
GeometryKind geometry_kind_from_string(const std::string& tag);

struct GeometryVerdict {
  GeometryKind kind = GeometryKind::Indeterminate;
  int floor_used = 0;
  int components = 1;   // meaningful for NotAKnot
  std::string reason;   // meaningful for Indeterminate
};

bool is_prime(long long n);

// The decision table of classify_closure applied to precomputed invariants.
// periodic is ignored when components != 1.
GeometryVerdict verdict_from_invariants(int n, int floor, int components, bool periodic);

// Closure geometry, decided in this order:
//   not a knot                          -> NotAKnot
//   periodic                            -> TorusKnot (at any floor)
//   floor < 3                           -> Indeterminate
//   floor >= 3, prime strand count      -> HyperbolicKnot
//   floor >= 3, composite strand count  -> Indeterminate (reducibility untested)
GeometryVerdict classify_closure(const BraidWord& a, const ReductionLimits& limits = {});

}  // namespace braidfloor
