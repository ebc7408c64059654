#include "repairkit/evaluation.hpp"

#include <unordered_map>

#include "repairkit/curriculum.hpp"
#include "repairkit/error.hpp"

namespace repairkit {

namespace {

struct Accumulator {
  long count = 0;
  double codebleu_sum = 0.0;
  double reward_sum = 0.0;
  long exact_matches = 0;

  void add(const SampleResult& r) {
    ++count;
    codebleu_sum += r.report.codebleu;
    reward_sum += r.report.reward;
    exact_matches += r.exact_match ? 1 : 0;
  }

  StratumStats stats() const {
    StratumStats s;
    s.count = count;
    if (count > 0) {
      s.mean_codebleu = codebleu_sum / static_cast<double>(count);
      s.mean_reward = reward_sum / static_cast<double>(count);
      s.exact_match_rate =
          static_cast<double>(exact_matches) / static_cast<double>(count);
    }
    return s;
  }
};

std::string curriculum_label(int hunks) {
  if (hunks <= 0) return "none";
  return bucket_name(assign_bucket(hunks));
}

}  // namespace

std::string hunk_bucket_label(int hunks) {
  if (hunks <= 0) return "0";
  if (hunks == 1) return "1";
  if (hunks <= 10) return "2-10";
  return ">10";
}

EvalReport evaluate(const std::vector<RepairSample>& dataset,
                    const std::vector<Prediction>& predictions,
                    const MetricConfig& cfg) {
  std::unordered_map<std::string, const RepairSample*> by_id;
  for (const auto& sample : dataset) by_id.emplace(sample.id, &sample);

  std::vector<std::string> unknown;
  for (const auto& pred : predictions)
    if (!by_id.count(pred.id)) unknown.push_back(pred.id);
  if (!unknown.empty()) {
    std::string msg = "evaluate: prediction ids missing from dataset:";
    for (const auto& id : unknown) msg += " " + id;
    throw Error(ErrorCode::referential, msg);
  }

  EvalReport report;
  Accumulator overall;
  std::map<std::string, Accumulator> by_hunk;
  std::map<std::string, Accumulator> by_curriculum;
  std::map<std::string, Accumulator> by_cwe;

  for (const auto& pred : predictions) {
    const RepairSample& sample = *by_id.at(pred.id);

    SampleResult result;
    result.id = pred.id;
    result.report = score_pair(pred.candidate, sample.fixed_fn, cfg);
    result.exact_match =
        tokenize(pred.candidate) == tokenize(sample.fixed_fn);

    overall.add(result);
    by_hunk[hunk_bucket_label(sample.hunks)].add(result);
    by_curriculum[curriculum_label(sample.hunks)].add(result);
    by_cwe[sample.cwe.value_or("(none)")].add(result);

    report.per_sample.push_back(std::move(result));
  }

  report.overall = overall.stats();
  for (const auto& [label, acc] : by_hunk)
    report.by_hunk_bucket[label] = acc.stats();
  for (const auto& [label, acc] : by_curriculum)
    report.by_curriculum_bucket[label] = acc.stats();
  for (const auto& [label, acc] : by_cwe) report.by_cwe[label] = acc.stats();
  return report;
}

}  // namespace repairkit
