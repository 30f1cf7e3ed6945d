#include "braidfloor/dehornoy_floor.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace braidfloor {

namespace {

class DeltaPowerCache {
 public:
  BraidWord get(int n, long long k) {
    const std::pair<int, long long> key{n, k};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BraidWord value = power(delta(n), k);
    std::unique_lock lock(mutex_);
    // A racing writer may have inserted the same value already; either copy
    // is identical.
    return table_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, long long>, BraidWord> table_;
};

DeltaPowerCache& cache() {
  static DeltaPowerCache instance;
  return instance;
}

}  // namespace

std::string to_string(BracketFailure f) {
  switch (f) {
    case BracketFailure::Lower: return "lower";
    case BracketFailure::Upper: return "upper";
    case BracketFailure::Both: return "both";
  }
  return "?";
}

OccurrenceBound occurrence_bound(const BraidWord& a) {
  OccurrenceBound b;
  for (Letter x : a.letters()) {
    if (x == 1) ++b.positive;
    if (x == -1) ++b.negative;
  }
  b.bound = std::max(b.positive, b.negative);
  return b;
}

BraidWord delta_power(int n, long long k) { return cache().get(n, k); }

FloorResult dehornoy_floor(const BraidWord& a, const ReductionLimits& limits) {
  const int n = a.strands();
  const OccurrenceBound occ = occurrence_bound(a);
  FloorResult result;
  if (occ.bound == 0) return result;

  // Both conditions are monotone in m, so each is tested only until it first
  // holds.
  std::optional<long long> lower_from;  // first m with Delta^{-2m-2} < a
  std::optional<long long> upper_from;  // first m with a < Delta^{2m+2}
  const BraidWord a_inv = invert(a);
  for (long long m = 0; m <= occ.bound; ++m) {
    const BraidWord top = delta_power(n, 2 * m + 2);
    if (!lower_from && sign_class(compose(top, a), limits).sign == Sign::Positive) lower_from = m;
    if (!upper_from && sign_class(compose(a_inv, top), limits).sign == Sign::Positive) upper_from = m;
    if (lower_from && upper_from) {
      result.value = static_cast<int>(m);
      if (m > 0) {
        const bool lower_fails = *lower_from == m;
        const bool upper_fails = *upper_from == m;
        result.minimality_witness = lower_fails && upper_fails ? BracketFailure::Both
                                    : lower_fails              ? BracketFailure::Lower
                                                               : BracketFailure::Upper;
      }
      return result;
    }
  }
  throw std::logic_error("floor search passed the sigma_1 occurrence bound for " + format_word(a));
}

}  // namespace braidfloor
