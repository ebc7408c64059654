#include "repairkit/curriculum.hpp"

#include <algorithm>

#include "repairkit/error.hpp"

namespace repairkit {

const char* bucket_name(DifficultyBucket bucket) {
  switch (bucket) {
    case DifficultyBucket::easy: return "easy";
    case DifficultyBucket::medium: return "medium";
    case DifficultyBucket::hard: return "hard";
  }
  return "unknown";
}

int count_hunks(std::string_view marked_text) {
  int count = 0;
  bool open = false;
  size_t pos = 0;
  while (pos < marked_text.size()) {
    size_t next_start = marked_text.find(kVulStartMarker, pos);
    size_t next_end = marked_text.find(kVulEndMarker, pos);
    if (next_start == std::string_view::npos &&
        next_end == std::string_view::npos)
      break;
    if (next_start < next_end) {
      if (open)
        throw Error(ErrorCode::invalid_input,
                    "count_hunks: nested <vul_start> marker");
      open = true;
      pos = next_start + kVulStartMarker.size();
    } else {
      if (!open)
        throw Error(ErrorCode::invalid_input,
                    "count_hunks: <vul_end> without matching <vul_start>");
      open = false;
      ++count;
      pos = next_end + kVulEndMarker.size();
    }
  }
  if (open)
    throw Error(ErrorCode::invalid_input,
                "count_hunks: unterminated <vul_start> marker");
  return count;
}

DifficultyBucket assign_bucket(int hunks) {
  if (hunks <= 0)
    throw Error(ErrorCode::invalid_input,
                "assign_bucket: a sample must contain at least one hunk");
  if (hunks <= 2) return DifficultyBucket::easy;
  if (hunks <= 5) return DifficultyBucket::medium;
  return DifficultyBucket::hard;
}

CurriculumSchedule build_schedule(const std::vector<RepairSample>& samples) {
  std::vector<std::string> easy, medium, hard;
  for (const auto& sample : samples) {
    switch (assign_bucket(sample.hunks)) {
      case DifficultyBucket::easy: easy.push_back(sample.id); break;
      case DifficultyBucket::medium: medium.push_back(sample.id); break;
      case DifficultyBucket::hard: hard.push_back(sample.id); break;
    }
  }

  CurriculumSchedule schedule;
  std::vector<std::string> acc;

  auto add_stage = [&](const char* name, const std::vector<std::string>& ids) {
    acc.insert(acc.end(), ids.begin(), ids.end());
    CurriculumStage stage;
    stage.name = name;
    stage.ids = acc;
    std::stable_sort(stage.ids.begin(), stage.ids.end());
    schedule.stages.push_back(std::move(stage));
  };

  add_stage("easy", easy);
  add_stage("medium", medium);
  add_stage("hard", hard);
  return schedule;
}

}  // namespace repairkit
