#include "repairkit_cli/cli.hpp"

#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "repairkit/config.hpp"
#include "repairkit/curriculum.hpp"
#include "repairkit/dataset.hpp"
#include "repairkit/error.hpp"
#include "repairkit/evaluation.hpp"
#include "repairkit/grpo.hpp"
#include "repairkit/response_filter.hpp"
#include "repairkit/serde.hpp"
#include "repairkit/service.hpp"

namespace repairkit::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open file: " + path);
  return in;
}

// Writes to the given path, or to fallback when path is empty or "-".
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorCode::io, "cannot write file: " + path);
    stream_ = file_.get();
  }

  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;  // key=value
};

// flags > config file > defaults
ToolConfig resolve_config(const CommonOptions& common) {
  ToolConfig config;
  if (!common.config_path.empty()) config = load_config_file(common.config_path);
  for (const std::string& entry : common.overrides) {
    size_t eq = entry.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::invalid_input,
                  "--set expects key=value, got '" + entry + "'");
    apply_config_entry(config, entry.substr(0, eq), entry.substr(eq + 1));
  }
  config.validate();
  return config;
}

std::array<double, 3> parse_ratios(const std::string& text) {
  std::array<double, 3> out{};
  std::istringstream ss(text);
  std::string piece;
  size_t i = 0;
  while (std::getline(ss, piece, ',')) {
    if (i >= 3)
      throw Error(ErrorCode::invalid_input, "--ratios expects three values");
    out[i++] = std::stod(piece);
  }
  if (i != 3)
    throw Error(ErrorCode::invalid_input, "--ratios expects three values");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"patch scoring, filtering, and RL data tooling for automated "
               "vulnerability repair"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--config", common.config_path,
                 "config file (key=value lines or a JSON object)");
  app.add_option("--set", common.overrides,
                 "override one config key (key=value, repeatable)");

  // score <candidate> <oracle>
  std::string score_candidate, score_oracle;
  auto* score_cmd =
      app.add_subcommand("score", "score one candidate file against an oracle");
  score_cmd->add_option("candidate", score_candidate)->required();
  score_cmd->add_option("oracle", score_oracle)->required();

  // eval <dataset> <predictions> [-o]
  std::string eval_dataset, eval_predictions, eval_out;
  auto* eval_cmd = app.add_subcommand(
      "eval", "batch evaluation with stratified aggregates");
  eval_cmd->add_option("dataset", eval_dataset)->required();
  eval_cmd->add_option("predictions", eval_predictions)->required();
  eval_cmd->add_option("-o,--output", eval_out);

  // serve
  auto* serve_cmd = app.add_subcommand(
      "serve", "reward service: JSONL requests on stdin, responses on stdout");

  // split <dataset> [-o] [--ratios] [--seed]
  std::string split_dataset, split_out, split_ratios;
  bool split_seed_set = false;
  uint64_t split_seed = 0;
  auto* split_cmd =
      app.add_subcommand("split", "repository-level train/val/test split");
  split_cmd->add_option("dataset", split_dataset)->required();
  split_cmd->add_option("-o,--output", split_out);
  split_cmd->add_option("--ratios", split_ratios, "three fractions, e.g. 0.8,0.1,0.1");
  split_cmd->add_option("--seed", split_seed)
      ->each([&](const std::string&) { split_seed_set = true; });

  // filter <batch> [--kept] [--rejected] [--threshold]
  std::string filter_batch_path, filter_kept, filter_rejected;
  double filter_threshold = -1.0;
  auto* filter_cmd = app.add_subcommand(
      "filter", "schema + similarity filter for reason/patch responses");
  filter_cmd->add_option("batch", filter_batch_path)->required();
  filter_cmd->add_option("--kept", filter_kept, "kept JSONL (default stdout)");
  filter_cmd->add_option("--rejected", filter_rejected, "rejections JSONL");
  filter_cmd->add_option("--threshold", filter_threshold);

  // curriculum plan <dataset> [-o]
  auto* curriculum_cmd = app.add_subcommand("curriculum", "curriculum tools");
  curriculum_cmd->require_subcommand(1);
  std::string plan_dataset, plan_out;
  auto* plan_cmd =
      curriculum_cmd->add_subcommand("plan", "cumulative stage schedule");
  plan_cmd->add_option("dataset", plan_dataset)->required();
  plan_cmd->add_option("-o,--output", plan_out);

  // grpo advantages <groups> [-o] [--epsilon]
  auto* grpo_cmd = app.add_subcommand("grpo", "group-relative policy math");
  grpo_cmd->require_subcommand(1);
  std::string adv_groups, adv_out;
  double adv_epsilon = -1.0;
  auto* adv_cmd = grpo_cmd->add_subcommand(
      "advantages", "normalized advantages per reward group");
  adv_cmd->add_option("groups", adv_groups)->required();
  adv_cmd->add_option("-o,--output", adv_out);
  adv_cmd->add_option("--epsilon", adv_epsilon);

  // parse <file> [-o]
  std::string parse_file, parse_out;
  auto* parse_cmd =
      app.add_subcommand("parse", "dump the syntax tree and data-flow graph");
  parse_cmd->add_option("file", parse_file)->required();
  parse_cmd->add_option("-o,--output", parse_out);

  // build <pairs> [-o]
  std::string build_pairs, build_out;
  auto* build_cmd = app.add_subcommand(
      "build", "construct a dataset from vulnerable/fixed pairs: diff, mark, dedup");
  build_cmd->add_option("pairs", build_pairs)->required();
  build_cmd->add_option("-o,--output", build_out);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::invalid_input);
  }

  try {
    ToolConfig config = resolve_config(common);

    if (*score_cmd) {
      std::string candidate = read_file(score_candidate);
      std::string oracle = read_file(score_oracle);
      ScoreReport report = score_pair(candidate, oracle, config.metric);
      out << score_report_json(report) << "\n";
      return 0;
    }

    if (*eval_cmd) {
      auto dataset_in = open_input(eval_dataset);
      auto samples = read_samples_jsonl(dataset_in, /*require_marked=*/true);
      auto predictions_in = open_input(eval_predictions);
      auto predictions = read_predictions_jsonl(predictions_in);
      EvalReport report = evaluate(samples, predictions, config.metric);
      OutputTarget target(eval_out, out);
      target.stream() << eval_report_json(report) << "\n";
      return 0;
    }

    if (*serve_cmd) {
      run_reward_service(in, out, config.metric);
      return 0;
    }

    if (*split_cmd) {
      auto dataset_in = open_input(split_dataset);
      auto samples = read_samples_jsonl(dataset_in, /*require_marked=*/false);
      std::array<double, 3> ratios =
          split_ratios.empty() ? config.ratios : parse_ratios(split_ratios);
      uint64_t seed = split_seed_set ? split_seed : config.seed;
      SplitManifest manifest = repo_split(samples, ratios, seed);
      OutputTarget target(split_out, out);
      target.stream() << split_manifest_json(manifest) << "\n";
      return 0;
    }

    if (*filter_cmd) {
      auto batch_in = open_input(filter_batch_path);
      auto items = read_batch_jsonl(batch_in);
      double threshold =
          filter_threshold >= 0.0 ? filter_threshold : config.threshold;
      FilterReport report = filter_batch(items, threshold, config.metric);
      OutputTarget kept(filter_kept, out);
      for (const auto& item : report.kept)
        kept.stream() << kept_item_json(item) << "\n";
      if (!filter_rejected.empty()) {
        OutputTarget rejected(filter_rejected, out);
        for (const auto& item : report.rejected)
          rejected.stream() << rejected_item_json(item) << "\n";
      }
      err << "kept " << report.kept.size() << " of "
          << (report.kept.size() + report.rejected.size()) << "\n";
      return 0;
    }

    if (*plan_cmd) {
      auto dataset_in = open_input(plan_dataset);
      auto samples = read_samples_jsonl(dataset_in, /*require_marked=*/true);
      CurriculumSchedule schedule = build_schedule(samples);
      OutputTarget target(plan_out, out);
      target.stream() << schedule_json(schedule) << "\n";
      return 0;
    }

    if (*adv_cmd) {
      auto groups_in = open_input(adv_groups);
      auto groups = read_reward_groups_jsonl(groups_in);
      double epsilon = adv_epsilon > 0.0 ? adv_epsilon : config.epsilon;
      OutputTarget target(adv_out, out);
      for (const auto& g : groups) {
        RewardGroup result = normalize_advantages(g.rewards, epsilon);
        result.prompt_id = g.prompt_id;
        target.stream() << reward_group_json(result) << "\n";
      }
      return 0;
    }

    if (*parse_cmd) {
      std::string text = read_file(parse_file);
      ParseOutcome outcome = parse_text(text);
      OutputTarget target(parse_out, out);
      target.stream() << parse_dump_json(outcome) << "\n";
      return 0;
    }

    if (*build_cmd) {
      auto pairs_in = open_input(build_pairs);
      auto pairs = read_samples_jsonl(pairs_in, /*require_marked=*/false);
      auto unique = dedup(pairs);
      OutputTarget target(build_out, out);
      for (const auto& pair : unique) {
        RepairSample sample = make_sample(pair.id, pair.repo, pair.cwe,
                                          pair.vulnerable_fn, pair.fixed_fn);
        target.stream() << sample_json(sample) << "\n";
      }
      return 0;
    }

    err << "error: no subcommand selected\n";
    return static_cast<int>(ErrorCode::invalid_input);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ErrorCode::internal);
  }
}

}  // namespace repairkit::cli
