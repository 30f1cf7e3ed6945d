#include "braidfloor/dehornoy_order.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace braidfloor {

namespace {

constexpr std::ptrdiff_t kNone = -1;

int index_of(Letter x) { return std::abs(x); }
int sign_of(Letter x) { return x > 0 ? 1 : -1; }

// last[i] = position of the latest letter before `start` whose index is <= i.
void rebuild_last(const std::vector<Letter>& w, std::size_t start, std::vector<std::ptrdiff_t>& last) {
  std::fill(last.begin(), last.end(), kNone);
  for (std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(start) - 1; pos >= 0; --pos) {
    const int k = index_of(w[static_cast<std::size_t>(pos)]);
    for (std::size_t i = static_cast<std::size_t>(k); i < last.size() && last[i] == kNone; ++i) {
      last[i] = pos;
    }
    if (last[1] != kNone) break;
  }
}

}  // namespace

std::string to_string(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::Less: return "LT";
    case OrderVerdict::Equal: return "EQ";
    case OrderVerdict::Greater: return "GT";
  }
  return "?";
}

std::string to_string(const SignClass& s) {
  switch (s.sign) {
    case Sign::Positive: return "SigmaPositive(" + std::to_string(s.main_index) + ")";
    case Sign::Negative: return "SigmaNegative(" + std::to_string(s.main_index) + ")";
    case Sign::Trivial: return "Trivial";
  }
  return "?";
}

BraidWord handle_reduce(const BraidWord& a, const ReductionLimits& limits) {
  const int n = a.strands();
  std::vector<Letter> w(a.letters().begin(), a.letters().end());
  std::vector<std::ptrdiff_t> last(static_cast<std::size_t>(n), kNone);
  std::vector<Letter> replacement;
  std::uint64_t steps = 0;
  std::size_t start = 0;

  for (;;) {
    rebuild_last(w, start, last);
    std::ptrdiff_t open = kNone;
    std::size_t close = start;
    for (; close < w.size(); ++close) {
      const int k = index_of(w[close]);
      const std::ptrdiff_t p = last[static_cast<std::size_t>(k)];
      if (p != kNone && w[static_cast<std::size_t>(p)] == -w[close]) {
        open = p;
        break;
      }
      for (std::size_t i = static_cast<std::size_t>(k); i < last.size(); ++i) {
        last[i] = static_cast<std::ptrdiff_t>(close);
      }
    }
    if (open == kNone) break;

    if (++steps > limits.max_steps) {
      throw ResourceLimitExceeded("handle reduction exceeded " + std::to_string(limits.max_steps) +
                                  " rewrite steps");
    }

    const auto lo = static_cast<std::size_t>(open);
    const int i = index_of(w[lo]);
    const int e = sign_of(w[lo]);
    replacement.clear();
    const auto emit = [&replacement](Letter x) {
      if (!replacement.empty() && replacement.back() == -x) {
        replacement.pop_back();
      } else {
        replacement.push_back(x);
      }
    };
    for (std::size_t t = lo + 1; t < close; ++t) {
      const Letter x = w[t];
      if (index_of(x) == i + 1) {
        emit(-e * (i + 1));
        emit(sign_of(x) * i);
        emit(e * (i + 1));
      } else {
        emit(x);
      }
    }
    // Nothing closes before `open` in the rewritten word, since the prefix
    // is unchanged and had no handle ending inside it.
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(close) + 1);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(lo), replacement.begin(), replacement.end());
    start = lo;
  }
  return BraidWord(n, std::move(w));
}

SignClass sign_class(const BraidWord& a, const ReductionLimits& limits) {
  const BraidWord reduced = handle_reduce(a, limits);
  if (reduced.empty()) return SignClass::trivial();
  int lowest = a.strands();
  Letter witness = 0;
  for (Letter x : reduced.letters()) {
    if (index_of(x) < lowest) {
      lowest = index_of(x);
      witness = x;
    }
  }
  return witness > 0 ? SignClass::positive(lowest) : SignClass::negative(lowest);
}

OrderVerdict compare(const BraidWord& a, const BraidWord& b, const ReductionLimits& limits) {
  const SignClass s = sign_class(compose(invert(a), b), limits);
  switch (s.sign) {
    case Sign::Positive: return OrderVerdict::Less;
    case Sign::Trivial: return OrderVerdict::Equal;
    case Sign::Negative: return OrderVerdict::Greater;
  }
  return OrderVerdict::Equal;
}

bool is_trivial(const BraidWord& a, const ReductionLimits& limits) {
  return handle_reduce(a, limits).empty();
}

}  // namespace braidfloor
