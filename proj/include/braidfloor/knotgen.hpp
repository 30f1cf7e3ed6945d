#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidfloor/braid_word.hpp"
#include "braidfloor/dehornoy_order.hpp"
#include "braidfloor/nielsen_thurston.hpp"

namespace braidfloor {

enum class GenerationMode { Family, Random };

// One generated braid together with everything needed to re-check it.
// Family records carry k and seed_word; random records carry rng_seed.
struct KnotCertificate {
  int n = 3;
  std::string word;
  int floor = 0;
  bool periodic = false;
  GeometryKind verdict = GeometryKind::Indeterminate;
  long long exponent_sum = 0;
  int cycle_count = 1;
  GenerationMode mode = GenerationMode::Family;
  long long k = 0;
  std::string seed_word;
  std::uint64_t rng_seed = 0;

  friend bool operator==(const KnotCertificate&, const KnotCertificate&) = default;
};

// Thrown by read_certificates and validate_certificate. line is 1-based and
// 0 when not tied to a stream position.
class CertificateError : public std::runtime_error {
 public:
  CertificateError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Builds a certificate by computing floor, periodicity and verdict for w.
KnotCertificate certify(const BraidWord& w, const ReductionLimits& limits = {});

// Checks the record-level invariants (no recomputation).
void validate_certificate(const KnotCertificate& c);
// Recomputes floor, periodicity, verdict, exponent sum and cycle count from
// the word; throws CertificateError on any mismatch.
void verify_certificate(const KnotCertificate& c, const ReductionLimits& limits = {});

struct SkippedCandidate {
  long long k = 0;
  std::string reason;
};

struct FamilyResult {
  std::vector<KnotCertificate> certificates;
  std::vector<SkippedCandidate> skipped;
};

// Sweeps the central fibre {Delta^{2k} alpha : k_min <= k <= k_max} and keeps
// the knots with floor >= 3 that classify as hyperbolic. Everything else,
// resource failures included, is reported in `skipped`.
FamilyResult generate_family(const BraidWord& alpha, long long k_min, long long k_max,
                             const ReductionLimits& limits = {});

struct RandomOptions {
  int n = 3;
  int length = 12;
  int count = 0;
  std::uint64_t rng_seed = 0;
  int min_floor = 3;
  // Candidates drawn before giving up on reaching `count`.
  std::uint64_t max_candidates = 1'000'000;
};

struct RandomResult {
  std::vector<KnotCertificate> certificates;
  std::uint64_t candidates_drawn = 0;
  std::uint64_t resource_failures = 0;
};

// Samples words letter by letter, uniformly over the 2(n-1) signed generators,
// with candidate i drawn from a stream seeded by (rng_seed, i). Keeps knot
// closures with floor >= min_floor, skipping repeats of a freely reduced word.
// Output depends only on the options. Throws std::invalid_argument unless n is
// prime, length >= 1 and count >= 0.
RandomResult generate_random(const RandomOptions& options, const ReductionLimits& limits = {});

// One tab-separated key=value line per certificate. Returns the number of
// records written; throws std::runtime_error naming the failed record index.
std::size_t write_certificates(const std::vector<KnotCertificate>& certs, std::ostream& out);
std::string format_certificate(const KnotCertificate& c);

// Parses and validates every line (blank lines are skipped). With verify set,
// each record is also recomputed from its word.
std::vector<KnotCertificate> read_certificates(std::istream& in, bool verify = false,
                                               const ReductionLimits& limits = {});

}  // namespace braidfloor
