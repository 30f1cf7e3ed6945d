#include "braidfloor/foliation_bounds.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace braidfloor {

namespace {

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ValenceProfile::ValenceProfile(int genus, std::map<int, long long> counts)
    : genus_(genus), counts_(std::move(counts)) {
  if (genus_ < 0) throw std::invalid_argument("genus must be non-negative");
  for (const auto& [valence, count] : counts_) {
    if (valence < 1) throw std::invalid_argument("valence must be at least 1");
    if (count < 0) throw std::invalid_argument("vertex count must be non-negative");
  }
}

long long ValenceProfile::count(int valence) const {
  const auto it = counts_.find(valence);
  return it == counts_.end() ? 0 : it->second;
}

long long ValenceProfile::total_vertices() const {
  long long total = 0;
  for (const auto& [valence, count] : counts_) total += count;
  return total;
}

ValenceProfile parse_valences(std::string_view text, int genus) {
  std::map<int, long long> counts;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected 'valence:count', got '" + std::string(item) + "'");
    }
    const int valence = parse_number<int>(trim(item.substr(0, colon)), "valence");
    const long long count = parse_number<long long>(trim(item.substr(colon + 1)), "count");
    counts[valence] += count;
  }
  return ValenceProfile(genus, std::move(counts));
}

bool euler_identity_holds(const ValenceProfile& p) {
  long long lhs = 8LL * p.genus() - 8;
  long long rhs = 0;
  for (const auto& [v, count] : p.counts()) {
    if (v <= 3) {
      lhs += (4LL - v) * count;
    } else {
      rhs += (static_cast<long long>(v) - 4) * count;
    }
  }
  return lhs == rhs;
}

int floor_bound_from_valence(int valence) {
  if (valence < 1) throw std::invalid_argument("valence must be at least 1");
  // greatest integer < v/2 + 1 is ceil(v/2)
  return (valence + 1) / 2;
}

std::string to_string(FoliationType t) {
  switch (t) {
    case FoliationType::Tiled: return "Tiled";
    case FoliationType::Mixed: return "Mixed";
    case FoliationType::Circular: return "Circular";
  }
  return "?";
}

int min_valence_bound(int genus, FoliationKind kind) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  if (!kind.is_mixed) return 2 * genus + 2;
  if (kind.surgeries < 0 || kind.surgeries > genus) {
    throw std::invalid_argument("surgery count must lie in [0, genus]");
  }
  return 4 * genus - 3 * kind.surgeries + 1;
}

std::string to_string(const FoliationSet& s) {
  std::string out = "{";
  for (auto t : {FoliationType::Tiled, FoliationType::Mixed, FoliationType::Circular}) {
    if (!s.contains(t)) continue;
    if (out.size() > 1) out += ", ";
    out += to_string(t);
  }
  return out + "}";
}

FoliationSet admissible_foliations(int floor, int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be at least 1");
  if (floor < 0) throw std::invalid_argument("floor must be non-negative");
  FoliationSet s;
  if (floor < genus + 2) s.insert(FoliationType::Tiled);
  if (floor < 2 * genus + 1) s.insert(FoliationType::Mixed);
  s.insert(FoliationType::Circular);
  return s;
}

}  // namespace braidfloor
