#include <doctest.h>

#include "repairkit/config.hpp"
#include "repairkit/error.hpp"

using namespace repairkit;

TEST_CASE("defaults") {
  ToolConfig c;
  c.validate();
  CHECK(c.metric.max_ngram == 4);
  CHECK(c.metric.keyword_weight == 1.0);
  CHECK(c.metric.other_weight == 0.2);
  CHECK(c.metric.min_subtree_height == 1);
  CHECK(c.epsilon == 1e-4);
  CHECK(c.clip_eps == 0.2);
  CHECK(c.beta == 1e-3);
  CHECK(c.threshold == 0.5);
  CHECK(c.ratios == std::array<double, 3>{0.8, 0.1, 0.1});
}

TEST_CASE("key=value parsing") {
  ToolConfig c = parse_config(
      "# comment line\n"
      "max_ngram = 2\n"
      "threshold=0.6\n"
      "\n"
      "codebleu_weights = 0.4, 0.3, 0.2, 0.1\n"
      "ratios=0.6,0.2,0.2\n"
      "seed = 42\n");
  CHECK(c.metric.max_ngram == 2);
  CHECK(c.threshold == 0.6);
  CHECK(c.metric.codebleu_weights == std::array<double, 4>{0.4, 0.3, 0.2, 0.1});
  CHECK(c.ratios == std::array<double, 3>{0.6, 0.2, 0.2});
  CHECK(c.seed == 42);
}

TEST_CASE("JSON parsing") {
  ToolConfig c = parse_config(R"({
    "max_ngram": 3,
    "smoothing_epsilon": 1e-8,
    "codebleu_weights": [0.25, 0.25, 0.25, 0.25],
    "ratios": [0.7, 0.2, 0.1],
    "beta": 0.01
  })");
  CHECK(c.metric.max_ngram == 3);
  CHECK(c.metric.smoothing_epsilon == 1e-8);
  CHECK(c.ratios[0] == 0.7);
  CHECK(c.beta == 0.01);
}

TEST_CASE("unknown keys and malformed input are rejected") {
  CHECK_THROWS_AS(parse_config("no_such_key=1\n"), Error);
  CHECK_THROWS_AS(parse_config("max_ngram\n"), Error);
  CHECK_THROWS_AS(parse_config("{ not json"), Error);
  CHECK_THROWS_AS(parse_config("max_ngram=abc\n"), Error);
  CHECK_THROWS_AS(parse_config("codebleu_weights=1,0,0\n"), Error);
}

TEST_CASE("validation catches bad combinations") {
  CHECK_THROWS_AS(parse_config("threshold=1.5\n"), Error);
  CHECK_THROWS_AS(parse_config("ratios=0.5,0.5,0.5\n"), Error);
  CHECK_THROWS_AS(parse_config("clip_eps=0\n"), Error);
  CHECK_THROWS_AS(parse_config("epsilon=-1\n"), Error);
}

TEST_CASE("entries apply on top of existing values") {
  ToolConfig c;
  apply_config_entry(c, "threshold", "0.7");
  apply_config_entry(c, " max_ngram ", " 6 ");
  CHECK(c.threshold == 0.7);
  CHECK(c.metric.max_ngram == 6);
}
