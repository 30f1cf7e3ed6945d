// braidtool: command-line front end for the braidfloor library.
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidfloor/braid_word.hpp"
#include "braidfloor/dehornoy_floor.hpp"
#include "braidfloor/dehornoy_order.hpp"
#include "braidfloor/foliation_bounds.hpp"
#include "braidfloor/knotgen.hpp"
#include "braidfloor/nielsen_thurston.hpp"

namespace bf = braidfloor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

// Output goes to --out when given, stdout otherwise.
class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw std::invalid_argument("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_verify(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  std::string line;
  std::size_t line_no = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool resource_hit = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream one(line);
    try {
      passed += bf::read_certificates(one, /*verify=*/true).size();
    } catch (const bf::CertificateError& e) {
      ++failed;
      std::cerr << "FAIL line " << line_no << ": " << e.what() << '\n';
    } catch (const bf::ResourceLimitExceeded& e) {
      resource_hit = true;
      std::cerr << "RESOURCE line " << line_no << ": " << e.what() << '\n';
    }
  }
  std::cout << "verified " << passed << " certificates, " << failed << " failed\n";
  if (failed > 0) return kExitVerification;
  return resource_hit ? kExitResource : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dehornoy ordering, floors, periodicity and hyperbolic knot certificates for braids"};
  app.require_subcommand(1);

  int strands = 0;
  std::string word_a;
  std::string word_b;

  auto* compare = app.add_subcommand("compare", "compare two words in the Dehornoy order: prints LT, EQ or GT");
  compare->add_option("word-a", word_a, "first braid word")->required();
  compare->add_option("word-b", word_b, "second braid word")->required();
  compare->add_option("--strands", strands, "strand count")->required();

  auto* reduce = app.add_subcommand("reduce", "print the handle-free form of a word");
  reduce->add_option("word", word_a, "braid word")->required();
  reduce->add_option("--strands", strands, "strand count")->required();

  bool witness = false;
  auto* floor_cmd = app.add_subcommand("floor", "print the Dehornoy floor");
  floor_cmd->add_option("word", word_a, "braid word")->required();
  floor_cmd->add_option("--strands", strands, "strand count")->required();
  floor_cmd->add_flag("--witness", witness, "also print the bracketing verdicts");

  auto* periodic = app.add_subcommand("periodic", "decide periodicity");
  periodic->add_option("word", word_a, "braid word")->required();
  periodic->add_option("--strands", strands, "strand count")->required();

  auto* classify = app.add_subcommand("classify", "classify the closure geometry");
  classify->add_option("word", word_a, "braid word")->required();
  classify->add_option("--strands", strands, "strand count")->required();

  int floor_value = 0;
  int genus = 0;
  auto* fol = app.add_subcommand("foliation-bound", "admissible foliation types of an essential surface");
  fol->add_option("--floor", floor_value, "Dehornoy floor")->required();
  fol->add_option("--genus", genus, "surface genus (>= 1)")->required();

  std::string valences;
  auto* euler = app.add_subcommand("euler-check", "check the tiling Euler identity for a valence profile");
  euler->add_option("--genus", genus, "surface genus")->required();
  euler->add_option("--valences", valences, "\"v:count,...\"")->required();

  auto* generate = app.add_subcommand("generate", "generate knot certificates");
  generate->require_subcommand(1);
  std::string out_path;
  std::string seed_word;
  long long k_min = 0;
  long long k_max = 0;
  auto* family = generate->add_subcommand("family", "sweep Delta^{2k} * seed over a k window");
  family->add_option("--strands", strands, "strand count")->required();
  family->add_option("--seed-word", seed_word, "seed braid word")->required();
  family->add_option("--k-min", k_min, "first central power")->required();
  family->add_option("--k-max", k_max, "last central power")->required();
  family->add_option("--out", out_path, "output file (default stdout)");

  bf::RandomOptions random_opts;
  auto* random = generate->add_subcommand("random", "sample random words at prime strand count");
  random->add_option("--strands", random_opts.n, "prime strand count")->required();
  random->add_option("--length", random_opts.length, "word length")->required();
  random->add_option("--count", random_opts.count, "certificates to emit")->required();
  random->add_option("--rng-seed", random_opts.rng_seed, "random seed")->required();
  random->add_option("--min-floor", random_opts.min_floor, "minimal floor")->capture_default_str();
  random->add_option("--out", out_path, "output file (default stdout)");

  std::string in_path;
  auto* verify = app.add_subcommand("verify", "re-check every certificate in a file");
  verify->add_option("--in", in_path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compare) {
      const auto a = bf::parse_word(word_a, strands);
      const auto b = bf::parse_word(word_b, strands);
      std::cout << bf::to_string(bf::compare(a, b)) << '\n';
    } else if (*reduce) {
      std::cout << bf::format_word(bf::handle_reduce(bf::parse_word(word_a, strands))) << '\n';
    } else if (*floor_cmd) {
      const auto r = bf::dehornoy_floor(bf::parse_word(word_a, strands));
      std::cout << r.value << '\n';
      if (witness) {
        const int top = 2 * r.value + 2;
        std::cout << "lower: Delta^" << -top << " vs word " << bf::to_string(r.lower_witness) << '\n';
        std::cout << "upper: word vs Delta^" << top << ' ' << bf::to_string(r.upper_witness) << '\n';
        if (r.minimality_witness) {
          std::cout << "minimality: " << bf::to_string(*r.minimality_witness) << " fails at m="
                    << r.value - 1 << '\n';
        }
      }
    } else if (*periodic) {
      const auto r = bf::is_periodic(bf::parse_word(word_a, strands));
      if (r.periodic()) {
        std::cout << "periodic p=" << r.witness->power << " s=" << r.witness->twist << '\n';
      } else {
        std::cout << "aperiodic\n";
      }
    } else if (*classify) {
      const auto v = bf::classify_closure(bf::parse_word(word_a, strands));
      std::cout << bf::to_string(v.kind) << " floor=" << v.floor_used;
      if (v.kind == bf::GeometryKind::NotAKnot) std::cout << " components=" << v.components;
      if (v.kind == bf::GeometryKind::Indeterminate) std::cout << " reason=\"" << v.reason << '"';
      std::cout << '\n';
    } else if (*fol) {
      std::cout << bf::to_string(bf::admissible_foliations(floor_value, genus)) << '\n';
    } else if (*euler) {
      std::cout << (bf::euler_identity_holds(bf::parse_valences(valences, genus)) ? "holds" : "fails")
                << '\n';
    } else if (*family) {
      const auto alpha = bf::parse_word(seed_word, strands);
      const auto result = bf::generate_family(alpha, k_min, k_max);
      for (const auto& s : result.skipped) std::cerr << "skipped k=" << s.k << ": " << s.reason << '\n';
      OutputSink sink(out_path);
      bf::write_certificates(result.certificates, sink.stream());
    } else if (*random) {
      const auto result = bf::generate_random(random_opts);
      std::cerr << "drew " << result.candidates_drawn << " candidates, kept "
                << result.certificates.size() << ", resource failures " << result.resource_failures
                << '\n';
      OutputSink sink(out_path);
      bf::write_certificates(result.certificates, sink.stream());
    } else if (*verify) {
      return run_verify(in_path);
    }
  } catch (const bf::ResourceLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
