#pragma once

#include <optional>

#include "braidfloor/braid_word.hpp"
#include "braidfloor/dehornoy_order.hpp"

namespace braidfloor {

// Counts of sigma_1 and sigma_1^{-1} in a literal word. When bound > 0 the
// floor of the word (and of every conjugate of it) is strictly below bound;
// when bound == 0 the floor is 0.
struct OccurrenceBound {
  long long positive = 0;  // s
  long long negative = 0;  // k
  long long bound = 0;     // max(s, k)

  friend bool operator==(const OccurrenceBound&, const OccurrenceBound&) = default;
};

// Which strict inequality of the bracket fails one step below the floor.
enum class BracketFailure { Lower, Upper, Both };

std::string to_string(BracketFailure f);

// Floor m with Delta^{-2m-2} < a < Delta^{2m+2}, and m minimal.
struct FloorResult {
  int value = 0;
  OrderVerdict lower_witness = OrderVerdict::Less;  // Delta^{-2m-2} vs a
  OrderVerdict upper_witness = OrderVerdict::Less;  // a vs Delta^{2m+2}
  std::optional<BracketFailure> minimality_witness;  // empty when value == 0
};

OccurrenceBound occurrence_bound(const BraidWord& a);

// Delta^k in B_n, served from a process-wide cache.
BraidWord delta_power(int n, long long k);

FloorResult dehornoy_floor(const BraidWord& a, const ReductionLimits& limits = {});

}  // namespace braidfloor
