#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace repairkit::testing {

struct GenOptions {
  int min_statements = 2;
  int max_statements = 6;
  int max_depth = 2;       // nesting of if/while blocks
  bool allow_control = true;
  bool guarantee_flow = true;  // first statement reads a parameter
};

// Deterministic generator of small C-like functions for property tests.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(uint64_t seed) : rng_(seed) {}

  std::string function(const GenOptions& opt = {});

  // Two similar functions: the second has one statement regenerated.
  std::pair<std::string, std::string> similar_pair(const GenOptions& opt = {});

  // Tiny statement-sequence programs (no function wrapper), capped at
  // max_tokens tokens.
  std::string snippet(int max_tokens);

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;

  int pick(int lo, int hi);  // inclusive
  std::string expr(const std::vector<std::string>& vars, int depth);
  std::string statement(std::vector<std::string>& vars, int depth,
                        const GenOptions& opt, int& local_counter);
  std::vector<std::string> body(const GenOptions& opt);
  std::string render(const std::vector<std::string>& statements,
                     const std::vector<std::string>& params,
                     const std::string& name) const;
};

// Consistent injective rename of every identifier token; whitespace is
// normalized to single spaces in the result.
std::string rename_identifiers(const std::string& text);

}  // namespace repairkit::testing
