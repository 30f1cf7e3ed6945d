#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "braidfloor/braid_word.hpp"

namespace braidfloor {

// Raised when handle reduction exceeds its rewrite-step budget.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReductionLimits {
  std::uint64_t max_steps = 10'000'000;
};

enum class Sign { Negative, Trivial, Positive };

// sigma-positive / sigma-negative / trivial, with the main generator index
// (0 for Trivial).
struct SignClass {
  Sign sign = Sign::Trivial;
  int main_index = 0;

  static SignClass trivial() { return {}; }
  static SignClass positive(int i) { return {Sign::Positive, i}; }
  static SignClass negative(int i) { return {Sign::Negative, i}; }

  friend bool operator==(const SignClass&, const SignClass&) = default;
};

enum class OrderVerdict { Less, Equal, Greater };

std::string to_string(OrderVerdict v);  // "LT", "EQ", "GT"
std::string to_string(const SignClass& s);

// Handle reduction, always reducing the handle whose closing letter comes
// first. A sigma_i-handle is s_i^e v s_i^{-e} with v free of indices <= i;
// it is rewritten by dropping its ends and replacing each s_{i+1}^d in v by
// s_{i+1}^{-e} s_i^d s_{i+1}^e. Free cancellations are handles with empty v.
//
// The result equals the input in B_n and is handle-free: it is empty iff the
// input is trivial, and otherwise its lowest-index letters share one sign.
BraidWord handle_reduce(const BraidWord& a, const ReductionLimits& limits = {});

SignClass sign_class(const BraidWord& a, const ReductionLimits& limits = {});

// Dehornoy order: a < b iff a^{-1} b is sigma-positive.
OrderVerdict compare(const BraidWord& a, const BraidWord& b, const ReductionLimits& limits = {});

bool is_trivial(const BraidWord& a, const ReductionLimits& limits = {});

}  // namespace braidfloor
