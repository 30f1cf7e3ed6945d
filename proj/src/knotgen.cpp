#include "braidfloor/knotgen.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string_view>
#include <thread>
#include <utility>

#include "braidfloor/dehornoy_floor.hpp"

namespace braidfloor {

namespace {

constexpr std::string_view kModeFamily = "family";
constexpr std::string_view kModeRandom = "random";

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// Deterministic draw in [0, bound); std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t bound) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % bound;
  for (;;) {
    const std::uint64_t x = gen();
    if (x < limit) return x % bound;
  }
}

BraidWord sample_word(int n, int length, std::uint64_t rng_seed, std::uint64_t candidate) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed), static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(candidate), static_cast<std::uint32_t>(candidate >> 32)};
  std::mt19937_64 gen(seq);
  const auto alphabet = static_cast<std::uint64_t>(2 * (n - 1));
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const auto idx = static_cast<int>(draw_below(gen, alphabet));
    letters.push_back((idx % 2 == 0 ? 1 : -1) * (idx / 2 + 1));
  }
  return BraidWord(n, std::move(letters));
}

enum class CandidateStatus { Accepted, Rejected, ResourceFailure };

struct CandidateOutcome {
  CandidateStatus status = CandidateStatus::Rejected;
  KnotCertificate certificate;
  std::string reduced_key;
};

CandidateOutcome evaluate_candidate(const RandomOptions& opt, std::uint64_t index,
                                    const ReductionLimits& limits) {
  CandidateOutcome out;
  const BraidWord w = sample_word(opt.n, opt.length, opt.rng_seed, index);
  if (closure_component_count(w) != 1) return out;
  try {
    if (dehornoy_floor(w, limits).value < opt.min_floor) return out;
    out.certificate = certify(w, limits);
  } catch (const ResourceLimitExceeded&) {
    out.status = CandidateStatus::ResourceFailure;
    return out;
  }
  out.certificate.mode = GenerationMode::Random;
  out.certificate.rng_seed = opt.rng_seed;
  out.reduced_key = format_word(free_reduce(w));
  out.status = CandidateStatus::Accepted;
  return out;
}

bool parse_bool(std::string_view v) {
  if (v == "true") return true;
  if (v == "false") return false;
  throw std::invalid_argument("expected true or false, got '" + std::string(v) + "'");
}

template <typename T>
T parse_integer(std::string_view v) {
  T value{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(v) + "'");
  }
  return value;
}

KnotCertificate parse_line(std::string_view line) {
  std::vector<std::pair<std::string_view, std::string_view>> fields;
  while (true) {
    const std::size_t tab = line.find('\t');
    const std::string_view field = line.substr(0, tab);
    const std::size_t eq = field.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("field without '=': '" + std::string(field) + "'");
    }
    fields.emplace_back(field.substr(0, eq), field.substr(eq + 1));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }

  std::size_t next = 0;
  const auto take = [&](std::string_view key) -> std::string_view {
    if (next >= fields.size() || fields[next].first != key) {
      throw std::invalid_argument("expected key '" + std::string(key) + "' at field " +
                                  std::to_string(next + 1));
    }
    return fields[next++].second;
  };

  KnotCertificate c;
  c.n = parse_integer<int>(take("n"));
  c.word = std::string(take("word"));
  c.floor = parse_integer<int>(take("floor"));
  c.periodic = parse_bool(take("periodic"));
  c.verdict = geometry_kind_from_string(std::string(take("verdict")));
  c.exponent_sum = parse_integer<long long>(take("exponent_sum"));
  c.cycle_count = parse_integer<int>(take("cycle_count"));
  const std::string_view mode = take("mode");
  if (mode == kModeFamily) {
    c.mode = GenerationMode::Family;
    c.k = parse_integer<long long>(take("k"));
    c.seed_word = std::string(take("seed_word"));
  } else if (mode == kModeRandom) {
    c.mode = GenerationMode::Random;
    c.rng_seed = parse_integer<std::uint64_t>(take("rng_seed"));
  } else {
    throw std::invalid_argument("unknown mode '" + std::string(mode) + "'");
  }
  if (next != fields.size()) {
    throw std::invalid_argument("unexpected trailing field '" + std::string(fields[next].first) + "'");
  }
  return c;
}

}  // namespace

CertificateError::CertificateError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

KnotCertificate certify(const BraidWord& w, const ReductionLimits& limits) {
  KnotCertificate c;
  c.n = w.strands();
  c.word = format_word(w);
  c.floor = dehornoy_floor(w, limits).value;
  c.periodic = is_periodic(w, limits).periodic();
  c.exponent_sum = exponent_sum(w);
  c.cycle_count = closure_component_count(w);
  c.verdict = verdict_from_invariants(c.n, c.floor, c.cycle_count, c.periodic).kind;
  return c;
}

void validate_certificate(const KnotCertificate& c) {
  const auto fail = [](const std::string& what) { throw CertificateError(0, what); };
  if (c.n < 2) fail("strand count below 2");
  if (c.floor < 0) fail("negative floor");
  BraidWord w(c.n);
  try {
    w = parse_word(c.word, c.n);
    if (c.mode == GenerationMode::Family) (void)parse_word(c.seed_word, c.n);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  if (c.verdict == GeometryKind::HyperbolicKnot &&
      (c.floor < 3 || c.cycle_count != 1 || c.periodic || !is_prime(c.n))) {
    fail("HyperbolicKnot requires floor >= 3, a knot closure, a non-periodic braid and prime n");
  }
  if (c.verdict == GeometryKind::TorusKnot && (!c.periodic || c.cycle_count != 1)) {
    fail("TorusKnot requires a periodic braid with a knot closure");
  }
  if (c.exponent_sum != exponent_sum(w)) fail("exponent_sum does not match word");
  if (c.cycle_count != closure_component_count(w)) fail("cycle_count does not match word");
  if (c.verdict != verdict_from_invariants(c.n, c.floor, c.cycle_count, c.periodic).kind) {
    fail("verdict inconsistent with floor, cycle_count and periodic");
  }
}

void verify_certificate(const KnotCertificate& c, const ReductionLimits& limits) {
  validate_certificate(c);
  const KnotCertificate fresh = certify(parse_word(c.word, c.n), limits);
  if (fresh.floor != c.floor) {
    throw CertificateError(0, "recomputed floor " + std::to_string(fresh.floor) + " != recorded " +
                                  std::to_string(c.floor));
  }
  if (fresh.periodic != c.periodic) throw CertificateError(0, "recomputed periodicity differs");
  if (fresh.verdict != c.verdict) {
    throw CertificateError(0, "recomputed verdict " + to_string(fresh.verdict) + " != recorded " +
                                  to_string(c.verdict));
  }
}

FamilyResult generate_family(const BraidWord& alpha, long long k_min, long long k_max,
                             const ReductionLimits& limits) {
  if (k_min > k_max) throw std::invalid_argument("k_min must not exceed k_max");
  const int n = alpha.strands();
  const std::string seed_text = format_word(alpha);
  FamilyResult result;
  for (long long k = k_min; k <= k_max; ++k) {
    const BraidWord beta = compose(delta_power(n, 2 * k), alpha);
    KnotCertificate c;
    try {
      c = certify(beta, limits);
    } catch (const ResourceLimitExceeded& e) {
      result.skipped.push_back({k, std::string("resource limit: ") + e.what()});
      continue;
    }
    c.mode = GenerationMode::Family;
    c.k = k;
    c.seed_word = seed_text;
    if (c.verdict == GeometryKind::HyperbolicKnot) {
      result.certificates.push_back(std::move(c));
      continue;
    }
    std::vector<std::string> reasons;
    if (c.cycle_count != 1) reasons.push_back("closure has " + std::to_string(c.cycle_count) + " components");
    if (c.periodic) reasons.push_back("periodic");
    if (c.floor < 3) reasons.push_back("floor " + std::to_string(c.floor) + " below 3");
    if (reasons.empty()) reasons.push_back("verdict " + to_string(c.verdict) + ": requires reducibility test");
    result.skipped.push_back({k, join(reasons, "; ")});
  }
  return result;
}

RandomResult generate_random(const RandomOptions& opt, const ReductionLimits& limits) {
  if (!is_prime(opt.n)) throw std::invalid_argument("strand count must be prime");
  if (opt.length < 1) throw std::invalid_argument("length must be at least 1");
  if (opt.count < 0) throw std::invalid_argument("count must be non-negative");

  RandomResult result;
  if (opt.count == 0) return result;

  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t batch = 32ULL * workers;
  std::set<std::string> seen;
  std::vector<CandidateOutcome> outcomes;

  std::uint64_t base = 0;
  while (base < opt.max_candidates &&
         result.certificates.size() < static_cast<std::size_t>(opt.count)) {
    const std::uint64_t size = std::min(batch, opt.max_candidates - base);
    outcomes.assign(static_cast<std::size_t>(size), CandidateOutcome{});
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
          for (std::uint64_t i = t; i < size; i += workers) {
            outcomes[static_cast<std::size_t>(i)] = evaluate_candidate(opt, base + i, limits);
          }
        });
      }
    }
    // Consume in candidate order so the result does not depend on scheduling.
    for (std::uint64_t i = 0; i < size; ++i) {
      ++result.candidates_drawn;
      auto& o = outcomes[static_cast<std::size_t>(i)];
      if (o.status == CandidateStatus::ResourceFailure) ++result.resource_failures;
      if (o.status != CandidateStatus::Accepted) continue;
      if (!seen.insert(o.reduced_key).second) continue;
      result.certificates.push_back(std::move(o.certificate));
      if (result.certificates.size() == static_cast<std::size_t>(opt.count)) break;
    }
    base += size;
  }
  return result;
}

std::string format_certificate(const KnotCertificate& c) {
  std::ostringstream s;
  s << "n=" << c.n << "\tword=" << c.word << "\tfloor=" << c.floor
    << "\tperiodic=" << (c.periodic ? "true" : "false") << "\tverdict=" << to_string(c.verdict)
    << "\texponent_sum=" << c.exponent_sum << "\tcycle_count=" << c.cycle_count;
  if (c.mode == GenerationMode::Family) {
    s << "\tmode=" << kModeFamily << "\tk=" << c.k << "\tseed_word=" << c.seed_word;
  } else {
    s << "\tmode=" << kModeRandom << "\trng_seed=" << c.rng_seed;
  }
  return s.str();
}

std::size_t write_certificates(const std::vector<KnotCertificate>& certs, std::ostream& out) {
  for (std::size_t i = 0; i < certs.size(); ++i) {
    out << format_certificate(certs[i]) << '\n';
    if (!out) throw std::runtime_error("failed to write certificate record " + std::to_string(i));
  }
  return certs.size();
}

std::vector<KnotCertificate> read_certificates(std::istream& in, bool verify,
                                               const ReductionLimits& limits) {
  std::vector<KnotCertificate> certs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    KnotCertificate c;
    try {
      c = parse_line(line);
      if (verify) {
        verify_certificate(c, limits);
      } else {
        validate_certificate(c);
      }
    } catch (const CertificateError& e) {
      throw CertificateError(line_no, e.what());
    } catch (const std::invalid_argument& e) {
      throw CertificateError(line_no, std::string("malformed record: ") + e.what());
    }
    certs.push_back(std::move(c));
  }
  return certs;
}

}  // namespace braidfloor
