#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "repairkit/dataset.hpp"

namespace repairkit {

enum class DifficultyBucket { easy, medium, hard };

const char* bucket_name(DifficultyBucket bucket);

struct CurriculumStage {
  std::string name;
  std::vector<std::string> ids;  // sorted by sample id
};

/// Cumulative stage schedule: stage 1 ⊆ stage 2 ⊆ stage 3 = full set.
struct CurriculumSchedule {
  std::vector<CurriculumStage> stages;
  bool cumulative = true;
};

/// Number of well-formed <vul_start>...<vul_end> pairs. Throws
/// Error(invalid_input) on unmatched or nested markers.
int count_hunks(std::string_view marked_text);

/// easy: 1-2 hunks, medium: 3-5, hard: >5. Throws on hunks <= 0.
DifficultyBucket assign_bucket(int hunks);

/// Stage 1 holds the easy samples, stage 2 adds medium, stage 3 everything.
CurriculumSchedule build_schedule(const std::vector<RepairSample>& samples);

}  // namespace repairkit
