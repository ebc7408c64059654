#pragma once

#include <map>
#include <string>
#include <vector>

#include "repairkit/dataset.hpp"
#include "repairkit/metrics.hpp"

namespace repairkit {

struct Prediction {
  std::string id;
  std::string candidate;
};

struct SampleResult {
  std::string id;
  ScoreReport report;
  bool exact_match = false;  // token-sequence equality with the oracle
};

struct StratumStats {
  long count = 0;
  double mean_codebleu = 0.0;
  double mean_reward = 0.0;
  double exact_match_rate = 0.0;
};

struct EvalReport {
  std::vector<SampleResult> per_sample;
  StratumStats overall;
  // hunk strata reported both ways: coarse buckets and curriculum buckets
  std::map<std::string, StratumStats> by_hunk_bucket;        // "1", "2-10", ">10"
  std::map<std::string, StratumStats> by_curriculum_bucket;  // easy/medium/hard
  std::map<std::string, StratumStats> by_cwe;
};

/// Joins predictions to oracle samples by id and scores each pair.
/// Prediction ids missing from the dataset raise Error(referential).
EvalReport evaluate(const std::vector<RepairSample>& dataset,
                    const std::vector<Prediction>& predictions,
                    const MetricConfig& cfg);

/// Coarse hunk stratum label: "1", "2-10", ">10" (and "0" when present).
std::string hunk_bucket_label(int hunks);

}  // namespace repairkit
