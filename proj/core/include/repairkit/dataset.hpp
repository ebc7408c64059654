#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace repairkit {

inline constexpr std::string_view kVulStartMarker = "<vul_start>";
inline constexpr std::string_view kVulEndMarker = "<vul_end>";

/// One vulnerable/fixed function pair.
struct RepairSample {
  std::string id;
  std::string repo;
  std::optional<std::string> cwe;  // e.g. "CWE-787"
  std::string vulnerable_fn;
  std::string fixed_fn;   // the oracle patch
  std::string marked_fn;  // vulnerable_fn with hunk markers
  int hunks = 0;
};

/// 1-based inclusive line range in the vulnerable function.
struct LineRange {
  int first = 0;
  int last = 0;

  bool operator==(const LineRange&) const = default;
};

struct SplitManifest {
  std::vector<std::string> train;
  std::vector<std::string> val;
  std::vector<std::string> test;
  std::map<std::string, std::string> repo_assignment;  // repo -> split name
  std::map<std::string, double> achieved_ratios;       // split -> fraction
};

/// Line-based LCS diff. Each maximal run of changed/deleted lines in the
/// vulnerable function is one hunk; a pure insertion in the fixed function
/// anchors to the preceding vulnerable line. Throws on empty input.
std::vector<LineRange> diff_hunks(std::string_view vulnerable_fn,
                                  std::string_view fixed_fn);

/// Wraps each hunk in marker lines. Ranges must be sorted, disjoint, and
/// within the line count. strip_markers round-trips to the original.
std::string insert_markers(std::string_view vulnerable_fn,
                           const std::vector<LineRange>& hunks);

/// Removes marker lines inserted by insert_markers.
std::string strip_markers(std::string_view marked_fn);

/// Whitespace runs collapsed to single spaces, edges trimmed; the dedup key.
std::string normalize_whitespace(std::string_view text);

/// Drops samples whose (normalized vulnerable_fn, normalized fixed_fn) pair
/// repeats an earlier one. Stable; first occurrence wins.
std::vector<RepairSample> dedup(const std::vector<RepairSample>& samples);

/// Repository-level split. Repositories are sorted by descending sample
/// count (ties by repo id) and each goes to the split with the largest
/// remaining deficit against its target ratio. The seed is recorded for
/// interface stability but the assignment itself is fully deterministic.
/// Requires >= 3 distinct repositories and positive ratios summing to 1.
SplitManifest repo_split(const std::vector<RepairSample>& samples,
                         const std::array<double, 3>& ratios, uint64_t seed);

/// Builds a full sample from a raw pair: diffs the two functions, marks the
/// hunks, and fills the hunk count.
RepairSample make_sample(std::string id, std::string repo,
                         std::optional<std::string> cwe,
                         std::string vulnerable_fn, std::string fixed_fn);

}  // namespace repairkit
