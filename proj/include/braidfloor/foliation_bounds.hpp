#pragma once

#include <map>
#include <string>
#include <string_view>

namespace braidfloor {

// Vertex counts by valence for a cellular decomposition of a closed surface
// of the given genus.
class ValenceProfile {
 public:
  // Throws std::invalid_argument on genus < 0, valence < 1 or count < 0.
  ValenceProfile(int genus, std::map<int, long long> counts);

  int genus() const { return genus_; }
  const std::map<int, long long>& counts() const { return counts_; }
  long long count(int valence) const;
  long long total_vertices() const;

 private:
  int genus_;
  std::map<int, long long> counts_;
};

// "v:count,v:count,..." (whitespace ignored). Empty text is the empty profile.
ValenceProfile parse_valences(std::string_view text, int genus);

// sum_{v<=3} (4-v)V(v) + 8g - 8 == sum_{v>=4} (v-4)V(v)
// Holds for tilings of a genus-g surface by four-sided tiles, and for the
// tile decomposition of a normal mixed foliation.
bool euler_identity_holds(const ValenceProfile& p);

// Largest floor compatible with a vertex of valence v: the greatest integer
// strictly below v/2 + 1. Throws std::invalid_argument for v < 1.
int floor_bound_from_valence(int valence);

enum class FoliationType { Tiled, Mixed, Circular };

std::string to_string(FoliationType t);

struct FoliationKind {
  static FoliationKind tiled() { return {false, 0}; }
  static FoliationKind mixed(int surgeries) { return {true, surgeries}; }

  bool is_mixed = false;
  int surgeries = 0;
};

// Upper bound on the minimal vertex valence: 2g+2 for tiled surfaces,
// 4g-3k+1 for mixed ones after k preimage surgeries (0 <= k <= g).
// Throws std::invalid_argument for g < 1 or k out of range.
int min_valence_bound(int genus, FoliationKind kind);

class FoliationSet {
 public:
  bool contains(FoliationType t) const { return (bits_ & bit(t)) != 0; }
  void insert(FoliationType t) { bits_ |= bit(t); }
  bool only_circular() const { return bits_ == bit(FoliationType::Circular); }
  // True when every member of this set is in other.
  bool subset_of(const FoliationSet& other) const { return (bits_ & ~other.bits_) == 0; }

  friend bool operator==(const FoliationSet&, const FoliationSet&) = default;

 private:
  static unsigned bit(FoliationType t) { return 1u << static_cast<unsigned>(t); }
  unsigned bits_ = 0;
};

// "{Tiled, Mixed, Circular}" style listing in Tiled/Mixed/Circular order.
std::string to_string(const FoliationSet& s);

// Foliation types an essential genus-g surface may carry in the complement of
// a closed braid with the given floor: tiled needs floor < g+2, mixed needs
// floor < 2g+1, circular is never excluded. Throws for g < 1 or floor < 0.
FoliationSet admissible_foliations(int floor, int genus);

}  // namespace braidfloor
