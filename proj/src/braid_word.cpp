#include "braidfloor/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace braidfloor {

namespace {

void check_strands(int n) {
  if (n < 2) {
    throw std::invalid_argument("strand count must be at least 2, got " + std::to_string(n));
  }
}

void check_letter(Letter x, int n) {
  if (x == 0 || std::abs(x) > n - 1) {
    throw std::invalid_argument("generator index " + std::to_string(x) +
                                " out of range for B_" + std::to_string(n));
  }
}

void check_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw std::invalid_argument("strand-count mismatch: B_" + std::to_string(a.strands()) +
                                " vs B_" + std::to_string(b.strands()));
  }
}

// Appends x to a freely reduced sequence, keeping it freely reduced.
void push_reduced(std::vector<Letter>& out, Letter x) {
  if (!out.empty() && out.back() == -x) {
    out.pop_back();
  } else {
    out.push_back(x);
  }
}

}  // namespace

BraidWord::BraidWord(int n) : n_(n) { check_strands(n); }

BraidWord::BraidWord(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  check_strands(n);
  for (Letter x : letters_) check_letter(x, n);
}

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  for (int i = 0; i < n; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation Permutation::from_images(std::span<const int> one_based) {
  const int n = static_cast<int>(one_based.size());
  Permutation p(n);
  std::vector<bool> seen(one_based.size(), false);
  for (int i = 0; i < n; ++i) {
    const int img = one_based[static_cast<std::size_t>(i)];
    if (img < 1 || img > n || seen[static_cast<std::size_t>(img - 1)]) {
      throw std::invalid_argument("permutation images are not a bijection of {1..n}");
    }
    seen[static_cast<std::size_t>(img - 1)] = true;
    p.images_[static_cast<std::size_t>(i)] = img - 1;
  }
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r(size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[i] = other.images_[static_cast<std::size_t>(images_[i])];
  }
  return r;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(images_.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) seen[j] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

BraidWord parse_word(std::string_view text, int n) {
  check_strands(n);
  std::vector<Letter> letters;
  std::size_t pos = 0;
  const auto is_sep = [](char c) { return c == ' ' || c == ','; };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    // from_chars rejects a leading '+', which the word syntax does not allow
    // either.
    Letter value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed generator token '" + std::string(token) + "'");
    }
    check_letter(value, n);
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(n, std::move(letters));
}

std::string format_word(const BraidWord& w) {
  std::string out;
  for (Letter x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w.letters()) push_reduced(out, x);
  return BraidWord(w.strands(), std::move(out));
}

BraidWord compose(const BraidWord& a, const BraidWord& b) {
  check_same_strands(a, b);
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  for (Letter x : a.letters()) push_reduced(out, x);
  for (Letter x : b.letters()) push_reduced(out, x);
  return BraidWord(a.strands(), std::move(out));
}

BraidWord invert(const BraidWord& a) {
  std::vector<Letter> out(a.letters().rbegin(), a.letters().rend());
  for (Letter& x : out) x = -x;
  return BraidWord(a.strands(), std::move(out));
}

BraidWord power(const BraidWord& a, long long k) {
  const BraidWord base = k < 0 ? invert(a) : a;
  const long long reps = k < 0 ? -k : k;
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (long long r = 0; r < reps; ++r) {
    for (Letter x : base.letters()) push_reduced(out, x);
  }
  return BraidWord(a.strands(), std::move(out));
}

BraidWord delta(int n) {
  check_strands(n);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) out.push_back(i);
  }
  return BraidWord(n, std::move(out));
}

BraidWord rotation_braid(int n) {
  check_strands(n);
  std::vector<Letter> out;
  for (int i = 1; i <= n - 1; ++i) out.push_back(i);
  return BraidWord(n, std::move(out));
}

BraidWord rotation_braid_fixing_one(int n) {
  const BraidWord base = rotation_braid(n);
  std::vector<Letter> out(base.letters().begin(), base.letters().end());
  out.push_back(1);
  return BraidWord(n, std::move(out));
}

Permutation permutation_of(const BraidWord& a) {
  const int n = a.strands();
  // at[pos] is the starting position of the strand currently at pos.
  std::vector<int> at(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) at[static_cast<std::size_t>(i)] = i;
  for (Letter x : a.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(x) - 1);
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> where(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    where[static_cast<std::size_t>(at[static_cast<std::size_t>(pos)])] = pos + 1;
  }
  return Permutation::from_images(where);
}

long long exponent_sum(const BraidWord& a) {
  long long e = 0;
  for (Letter x : a.letters()) e += x > 0 ? 1 : -1;
  return e;
}

int closure_component_count(const BraidWord& a) { return permutation_of(a).cycle_count(); }

}  // namespace braidfloor
