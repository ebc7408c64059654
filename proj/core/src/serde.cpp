#include "repairkit/serde.hpp"

#include <json.hpp>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_to_json(const ScoreReport& report) {
  ordered_json j;
  j["bleu"] = report.bleu;
  j["weighted_bleu"] = report.weighted_bleu;
  j["sim_ast"] = report.sim_ast;
  j["sim_dfg"] = report.sim_dfg;
  j["reward"] = report.reward;
  j["codebleu"] = report.codebleu;
  ordered_json flags = ordered_json::array();
  for (Degraded flag : report.degraded) flags.push_back(degraded_name(flag));
  j["degraded"] = std::move(flags);
  return j;
}

ordered_json stats_to_json(const StratumStats& stats) {
  ordered_json j;
  j["count"] = stats.count;
  j["mean_codebleu"] = stats.mean_codebleu;
  j["mean_reward"] = stats.mean_reward;
  j["exact_match_rate"] = stats.exact_match_rate;
  return j;
}

ordered_json node_to_json(const SyntaxNode& node) {
  ordered_json j;
  j["kind"] = node.kind;
  j["span"] = {node.span_begin, node.span_end};
  if (node.is_leaf()) {
    j["lexeme"] = node.leaf_lexeme;
  } else {
    ordered_json children = ordered_json::array();
    for (const auto& child : node.children) children.push_back(node_to_json(child));
    j["children"] = std::move(children);
  }
  return j;
}

ordered_json parse_line(const std::string& line, size_t line_no) {
  ordered_json j = ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorCode::invalid_input,
                "line " + std::to_string(line_no) + ": not a JSON object");
  return j;
}

std::string require_string(const ordered_json& j, const char* field,
                           size_t line_no) {
  if (!j.contains(field) || !j[field].is_string())
    throw Error(ErrorCode::invalid_input,
                "line " + std::to_string(line_no) + ": missing string field '" +
                    field + "'");
  return j[field].get<std::string>();
}

// Applies fn to every non-blank line.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    bool blank = line.find_first_not_of(" \t") == std::string::npos;
    if (blank) continue;
    fn(line, line_no);
  }
}

}  // namespace

std::string score_report_json(const ScoreReport& report) {
  return report_to_json(report).dump();
}

std::string split_manifest_json(const SplitManifest& manifest) {
  ordered_json j;
  j["train"] = manifest.train;
  j["val"] = manifest.val;
  j["test"] = manifest.test;
  j["repo_assignment"] = manifest.repo_assignment;
  j["achieved_ratios"] = manifest.achieved_ratios;
  return j.dump(2);
}

std::string schedule_json(const CurriculumSchedule& schedule) {
  ordered_json stages = ordered_json::array();
  for (const auto& stage : schedule.stages) {
    ordered_json s;
    s["name"] = stage.name;
    s["ids"] = stage.ids;
    stages.push_back(std::move(s));
  }
  ordered_json j;
  j["stages"] = std::move(stages);
  return j.dump(2);
}

std::string eval_report_json(const EvalReport& report) {
  ordered_json per_sample = ordered_json::array();
  for (const auto& row : report.per_sample) {
    ordered_json r;
    r["id"] = row.id;
    r["exact_match"] = row.exact_match;
    r["report"] = report_to_json(row.report);
    per_sample.push_back(std::move(r));
  }

  auto strata = [](const std::map<std::string, StratumStats>& m) {
    ordered_json j = ordered_json::object();
    for (const auto& [label, stats] : m) j[label] = stats_to_json(stats);
    return j;
  };

  ordered_json aggregates;
  aggregates["overall"] = stats_to_json(report.overall);
  aggregates["by_hunk_bucket"] = strata(report.by_hunk_bucket);
  aggregates["by_curriculum_bucket"] = strata(report.by_curriculum_bucket);
  aggregates["by_cwe"] = strata(report.by_cwe);

  ordered_json j;
  j["per_sample"] = std::move(per_sample);
  j["aggregates"] = std::move(aggregates);
  return j.dump(2);
}

std::string reward_group_json(const RewardGroup& group) {
  ordered_json j;
  j["prompt_id"] = group.prompt_id;
  j["mu"] = group.mu;
  j["sigma"] = group.sigma;
  j["advantages"] = group.advantages;
  return j.dump();
}

std::string kept_item_json(const KeptItem& item) {
  ordered_json j;
  j["id"] = item.id;
  j["reason"] = item.response.reason;
  j["patch"] = item.response.patch;
  j["score"] = item.score;
  return j.dump();
}

std::string rejected_item_json(const RejectedItem& item) {
  ordered_json j;
  j["id"] = item.id;
  if (item.schema_error) {
    j["kind"] = schema_error_name(item.schema_error->kind);
    j["detail"] = item.schema_error->detail;
  } else {
    j["score"] = item.score.value_or(0.0);
  }
  return j.dump();
}

std::string sample_json(const RepairSample& sample) {
  ordered_json j;
  j["id"] = sample.id;
  j["repo"] = sample.repo;
  if (sample.cwe)
    j["cwe"] = *sample.cwe;
  else
    j["cwe"] = nullptr;
  j["vulnerable_fn"] = sample.vulnerable_fn;
  j["fixed_fn"] = sample.fixed_fn;
  j["marked_fn"] = sample.marked_fn;
  j["hunks"] = sample.hunks;
  return j.dump();
}

std::string parse_dump_json(const ParseOutcome& outcome) {
  ordered_json j;
  j["failed"] = outcome.failed;
  ordered_json diags = ordered_json::array();
  for (const auto& d : outcome.diagnostics) {
    ordered_json e;
    e["line"] = d.line;
    e["column"] = d.column;
    e["message"] = d.message;
    diags.push_back(std::move(e));
  }
  j["diagnostics"] = std::move(diags);
  if (outcome.tree) {
    j["coverage"] = outcome.tree->coverage;
    j["ast"] = node_to_json(outcome.tree->root);
    DataFlowGraph dfg = extract_dfg(*outcome.tree);
    ordered_json edges = ordered_json::array();
    for (const auto& [src, dst] : dfg.edges) edges.push_back({src, dst});
    j["dfg"] = {{"slot_count", dfg.slot_count}, {"edges", std::move(edges)}};
  }
  return j.dump(2);
}

std::vector<RepairSample> read_samples_jsonl(std::istream& in,
                                             bool require_marked) {
  std::vector<RepairSample> samples;
  for_each_line(in, [&](const std::string& line, size_t line_no) {
    ordered_json j = parse_line(line, line_no);
    RepairSample s;
    s.id = require_string(j, "id", line_no);
    s.repo = require_string(j, "repo", line_no);
    if (j.contains("cwe") && j["cwe"].is_string())
      s.cwe = j["cwe"].get<std::string>();
    s.vulnerable_fn = require_string(j, "vulnerable_fn", line_no);
    s.fixed_fn = require_string(j, "fixed_fn", line_no);
    if (j.contains("marked_fn") && j["marked_fn"].is_string())
      s.marked_fn = j["marked_fn"].get<std::string>();
    else if (require_marked)
      throw Error(ErrorCode::invalid_input,
                  "line " + std::to_string(line_no) + ": missing 'marked_fn'");
    if (j.contains("hunks") && j["hunks"].is_number_integer())
      s.hunks = j["hunks"].get<int>();
    else if (require_marked)
      throw Error(ErrorCode::invalid_input,
                  "line " + std::to_string(line_no) + ": missing 'hunks'");
    if (!s.marked_fn.empty() && count_hunks(s.marked_fn) != s.hunks)
      throw Error(ErrorCode::invalid_input,
                  "line " + std::to_string(line_no) +
                      ": 'hunks' disagrees with markers in 'marked_fn'");
    samples.push_back(std::move(s));
  });
  return samples;
}

std::vector<Prediction> read_predictions_jsonl(std::istream& in) {
  std::vector<Prediction> predictions;
  for_each_line(in, [&](const std::string& line, size_t line_no) {
    ordered_json j = parse_line(line, line_no);
    Prediction p;
    p.id = require_string(j, "id", line_no);
    p.candidate = require_string(j, "candidate", line_no);
    predictions.push_back(std::move(p));
  });
  return predictions;
}

std::vector<BatchItem> read_batch_jsonl(std::istream& in) {
  std::vector<BatchItem> items;
  for_each_line(in, [&](const std::string& line, size_t line_no) {
    ordered_json j = parse_line(line, line_no);
    BatchItem item;
    item.id = require_string(j, "id", line_no);
    item.response = require_string(j, "response", line_no);
    item.oracle = require_string(j, "oracle", line_no);
    items.push_back(std::move(item));
  });
  return items;
}

std::vector<RewardGroupInput> read_reward_groups_jsonl(std::istream& in) {
  std::vector<RewardGroupInput> groups;
  for_each_line(in, [&](const std::string& line, size_t line_no) {
    ordered_json j = parse_line(line, line_no);
    RewardGroupInput g;
    g.prompt_id = require_string(j, "prompt_id", line_no);
    if (!j.contains("rewards") || !j["rewards"].is_array())
      throw Error(ErrorCode::invalid_input,
                  "line " + std::to_string(line_no) + ": missing 'rewards'");
    for (const auto& r : j["rewards"]) {
      if (!r.is_number())
        throw Error(ErrorCode::invalid_input,
                    "line " + std::to_string(line_no) +
                        ": rewards must be numbers");
      g.rewards.push_back(r.get<double>());
    }
    groups.push_back(std::move(g));
  });
  return groups;
}

}  // namespace repairkit
