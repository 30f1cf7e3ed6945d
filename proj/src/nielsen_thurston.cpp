#include "braidfloor/nielsen_thurston.hpp"

#include <stdexcept>

#include "braidfloor/dehornoy_floor.hpp"

namespace braidfloor {

PeriodicityResult is_periodic(const BraidWord& a, const ReductionLimits& limits) {
  const int n = a.strands();
  const long long central_exponent = static_cast<long long>(n) * (n - 1);  // e(Delta^2)
  const long long e = exponent_sum(a);
  for (const int p : {n - 1, n}) {
    if ((p * e) % central_exponent != 0) continue;
    const long long twist = p * e / central_exponent;
    if (is_trivial(compose(power(a, p), delta_power(n, -2 * twist)), limits)) {
      return {PeriodicWitness{p, twist}};
    }
  }
  return {};
}

std::string to_string(GeometryKind k) {
  switch (k) {
    case GeometryKind::TorusKnot: return "TorusKnot";
    case GeometryKind::HyperbolicKnot: return "HyperbolicKnot";
    case GeometryKind::NotAKnot: return "NotAKnot";
    case GeometryKind::Indeterminate: return "Indeterminate";
  }
  return "?";
}

GeometryKind geometry_kind_from_string(const std::string& tag) {
  for (auto k : {GeometryKind::TorusKnot, GeometryKind::HyperbolicKnot, GeometryKind::NotAKnot,
                 GeometryKind::Indeterminate}) {
    if (to_string(k) == tag) return k;
  }
  throw std::invalid_argument("unknown verdict tag '" + tag + "'");
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

GeometryVerdict verdict_from_invariants(int n, int floor, int components, bool periodic) {
  GeometryVerdict v;
  v.floor_used = floor;
  v.components = components;
  if (components != 1) {
    v.kind = GeometryKind::NotAKnot;
  } else if (periodic) {
    v.kind = GeometryKind::TorusKnot;
  } else if (floor < 3) {
    v.kind = GeometryKind::Indeterminate;
    v.reason = "floor below 3";
  } else if (!is_prime(n)) {
    v.kind = GeometryKind::Indeterminate;
    v.reason = "requires reducibility test";
  } else {
    v.kind = GeometryKind::HyperbolicKnot;
  }
  return v;
}

GeometryVerdict classify_closure(const BraidWord& a, const ReductionLimits& limits) {
  const int floor = dehornoy_floor(a, limits).value;
  const int components = closure_component_count(a);
  const bool periodic = components == 1 && is_periodic(a, limits).periodic();
  return verdict_from_invariants(a.strands(), floor, components, periodic);
}

}  // namespace braidfloor
