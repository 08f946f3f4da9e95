#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace hyalba::cli {

enum ExitCode : int { Ok = 0, Error = 1, AlbaFailure = 2, NotSkeletal = 3 };

struct Options {
  std::optional<std::string> eps;
  bool trace = false;
  bool simplify = false;
  bool json = false;
  bool require_skeletal = false;
  std::size_t max_worlds = 3;
  std::uint64_t seed = 1;
  // Random models for the sampled Tr check in `verify`; 0 disables it.
  std::size_t samples = 1000;
};

struct Outcome {
  int exit_code = Ok;
  std::string out;
  std::string err;
};

Outcome cmd_classify(const std::string& formula, const Options& opts);
Outcome cmd_correspond(const std::string& formula, const Options& opts);
// Accepts a quasi-inequality `a ; b => c` or a single inequality `a <= b`.
Outcome cmd_translate(const std::string& text, const Options& opts);
Outcome cmd_verify(const std::string& formula, const Options& opts);
Outcome cmd_axioms_check(const Options& opts);

// `corpus` is the corpus.json file; goldens live in goldens/ beside it.
Outcome cmd_corpus_run(const std::filesystem::path& corpus, const Options& opts);
Outcome cmd_corpus_bless(const std::filesystem::path& corpus, const Options& opts);

}  // namespace hyalba::cli
