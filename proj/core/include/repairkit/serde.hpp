#pragma once

#include <istream>
#include <string>
#include <vector>

#include "repairkit/ast.hpp"
#include "repairkit/curriculum.hpp"
#include "repairkit/dataset.hpp"
#include "repairkit/dfg.hpp"
#include "repairkit/evaluation.hpp"
#include "repairkit/grpo.hpp"
#include "repairkit/metrics.hpp"
#include "repairkit/response_filter.hpp"

namespace repairkit {

// JSON (de)serialization for the documented file and wire formats. All
// output is UTF-8 with deterministic key order; JSONL writers emit one
// object per line.

std::string score_report_json(const ScoreReport& report);
std::string split_manifest_json(const SplitManifest& manifest);
std::string schedule_json(const CurriculumSchedule& schedule);
std::string eval_report_json(const EvalReport& report);
std::string reward_group_json(const RewardGroup& group);
std::string kept_item_json(const KeptItem& item);
std::string rejected_item_json(const RejectedItem& item);
std::string sample_json(const RepairSample& sample);

/// Indented debugging dump of a parse outcome and its data-flow graph.
std::string parse_dump_json(const ParseOutcome& outcome);

struct RewardGroupInput {
  std::string prompt_id;
  std::vector<double> rewards;
};

/// JSONL readers; line numbers are reported in errors.
/// Each throws Error(invalid_input) on malformed records.
std::vector<RepairSample> read_samples_jsonl(std::istream& in,
                                             bool require_marked);
std::vector<Prediction> read_predictions_jsonl(std::istream& in);
std::vector<BatchItem> read_batch_jsonl(std::istream& in);
std::vector<RewardGroupInput> read_reward_groups_jsonl(std::istream& in);

}  // namespace repairkit
