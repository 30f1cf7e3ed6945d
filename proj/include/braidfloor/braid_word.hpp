#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidfloor {

// A letter +i is sigma_i, -i is sigma_i^{-1}.
using Letter = int;

// A word over the Artin generators of B_n. Only free reduction is ever
// applied to it; equality in the braid group is decided by dehornoy_order.
class BraidWord {
 public:
  // Identity word in B_n. Throws std::invalid_argument if n < 2.
  explicit BraidWord(int n);
  // Throws std::invalid_argument on n < 2 or a letter outside [1, n-1] in
  // absolute value.
  BraidWord(int n, std::vector<Letter> letters);

  int strands() const { return n_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Literal equality of the letter sequences, not braid equality.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int n_;
  std::vector<Letter> letters_;
};

// Image of a braid in Sym(n). images[j] is the (0-based) position strand j
// ends at, stored 0-based internally.
class Permutation {
 public:
  // Identity permutation on n points.
  explicit Permutation(int n);
  // images are 1-based. Throws std::invalid_argument unless a bijection.
  static Permutation from_images(std::span<const int> one_based);

  int size() const { return static_cast<int>(images_.size()); }
  // 1-based image of the 1-based point i.
  int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)) + 1; }
  // Apply this, then other.
  Permutation then(const Permutation& other) const;
  int cycle_count() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// Signed decimal integers separated by spaces and/or commas. The empty
// string (or only separators) is the identity.
BraidWord parse_word(std::string_view text, int n);
// Space-separated letters; parse_word(format_word(w), w.strands()) == w.
std::string format_word(const BraidWord& w);

// Cancels adjacent sigma_i^e sigma_i^{-e} exhaustively.
BraidWord free_reduce(const BraidWord& w);

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
BraidWord power(const BraidWord& a, long long k);

// Garside's half twist (s1...s_{n-1})(s1...s_{n-2})...(s1).
BraidWord delta(int n);

// sigma_1 sigma_2 ... sigma_{n-1}, whose n-th power is delta^2.
BraidWord rotation_braid(int n);
// sigma_1 ... sigma_{n-1} sigma_1, whose (n-1)-th power is delta^2.
BraidWord rotation_braid_fixing_one(int n);

Permutation permutation_of(const BraidWord& a);
long long exponent_sum(const BraidWord& a);
int closure_component_count(const BraidWord& a);

}  // namespace braidfloor
