#include "repairkit/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

struct LineSplit {
  std::vector<std::string_view> lines;
  bool trailing_newline = false;
};

LineSplit split_lines(std::string_view text) {
  LineSplit out;
  if (text.empty()) return out;
  out.trailing_newline = text.back() == '\n';
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) out.lines.push_back(text.substr(start));
      break;
    }
    out.lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

std::string join_lines(const std::vector<std::string_view>& lines,
                       bool trailing_newline) {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  if (trailing_newline && !lines.empty()) out += '\n';
  return out;
}

// LCS alignment between the trimmed middles. Returns deleted line indices
// of `a` and insertion points (index of the next `a` line).
void lcs_alignment(const std::vector<std::string_view>& a,
                   const std::vector<std::string_view>& b,
                   std::set<size_t>& deleted, std::set<size_t>& insertions) {
  size_t lo = 0;
  while (lo < a.size() && lo < b.size() && a[lo] == b[lo]) ++lo;
  size_t a_hi = a.size(), b_hi = b.size();
  while (a_hi > lo && b_hi > lo && a[a_hi - 1] == b[b_hi - 1]) {
    --a_hi;
    --b_hi;
  }

  const size_t m = a_hi - lo;
  const size_t n = b_hi - lo;
  if (m == 0 && n == 0) return;
  if (m == 0) {
    insertions.insert(lo);
    return;
  }
  if (n == 0) {
    for (size_t i = 0; i < m; ++i) deleted.insert(lo + i);
    return;
  }

  // Quadratic table over the changed middle; patch pairs keep it small.
  // Oversized inputs fall back to one replaced block.
  if (m * n > size_t{25'000'000}) {
    for (size_t i = 0; i < m; ++i) deleted.insert(lo + i);
    insertions.insert(lo);
    return;
  }

  std::vector<std::vector<uint32_t>> lcs(m + 1,
                                         std::vector<uint32_t>(n + 1, 0));
  for (size_t i = m; i-- > 0;) {
    for (size_t j = n; j-- > 0;) {
      if (a[lo + i] == b[lo + j])
        lcs[i][j] = lcs[i + 1][j + 1] + 1;
      else
        lcs[i][j] = std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }

  size_t i = 0, j = 0;
  while (i < m || j < n) {
    if (i < m && j < n && a[lo + i] == b[lo + j] &&
        lcs[i][j] == lcs[i + 1][j + 1] + 1) {
      ++i;
      ++j;
    } else if (i < m && (j >= n || lcs[i + 1][j] >= lcs[i][j + 1])) {
      deleted.insert(lo + i);
      ++i;
    } else {
      insertions.insert(lo + i);
      ++j;
    }
  }
}

}  // namespace

std::vector<LineRange> diff_hunks(std::string_view vulnerable_fn,
                                  std::string_view fixed_fn) {
  if (vulnerable_fn.empty() || fixed_fn.empty())
    throw Error(ErrorCode::invalid_input, "diff_hunks: empty input");

  LineSplit va = split_lines(vulnerable_fn);
  LineSplit fb = split_lines(fixed_fn);

  std::set<size_t> deleted;
  std::set<size_t> insertions;
  lcs_alignment(va.lines, fb.lines, deleted, insertions);

  std::set<size_t> marked = deleted;
  for (size_t p : insertions) {
    bool touches_change = (p > 0 && deleted.count(p - 1)) ||
                          (p < va.lines.size() && deleted.count(p));
    if (touches_change) continue;  // already inside a changed run
    marked.insert(p > 0 ? p - 1 : 0);
  }

  std::vector<LineRange> hunks;
  for (size_t idx : marked) {
    int line = static_cast<int>(idx) + 1;
    if (!hunks.empty() && hunks.back().last + 1 == line) {
      hunks.back().last = line;
    } else {
      hunks.push_back({line, line});
    }
  }
  return hunks;
}

std::string insert_markers(std::string_view vulnerable_fn,
                           const std::vector<LineRange>& hunks) {
  if (hunks.empty()) return std::string(vulnerable_fn);

  LineSplit split = split_lines(vulnerable_fn);
  const int line_count = static_cast<int>(split.lines.size());

  int prev_last = 0;
  for (const LineRange& h : hunks) {
    if (h.first < 1 || h.last > line_count || h.first > h.last)
      throw Error(ErrorCode::invalid_input,
                  "insert_markers: hunk out of range");
    if (h.first <= prev_last)
      throw Error(ErrorCode::invalid_input,
                  "insert_markers: hunks overlap or are unsorted");
    prev_last = h.last;
  }

  std::vector<std::string_view> out;
  out.reserve(split.lines.size() + 2 * hunks.size());
  size_t next_hunk = 0;
  for (int line = 1; line <= line_count; ++line) {
    if (next_hunk < hunks.size() && hunks[next_hunk].first == line)
      out.push_back(kVulStartMarker);
    out.push_back(split.lines[line - 1]);
    if (next_hunk < hunks.size() && hunks[next_hunk].last == line) {
      out.push_back(kVulEndMarker);
      ++next_hunk;
    }
  }
  return join_lines(out, split.trailing_newline);
}

std::string strip_markers(std::string_view marked_fn) {
  LineSplit split = split_lines(marked_fn);
  std::vector<std::string_view> out;
  out.reserve(split.lines.size());
  for (std::string_view line : split.lines) {
    if (line == kVulStartMarker || line == kVulEndMarker) continue;
    out.push_back(line);
  }
  return join_lines(out, split.trailing_newline);
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += c;
  }
  return out;
}

std::vector<RepairSample> dedup(const std::vector<RepairSample>& samples) {
  std::vector<RepairSample> kept;
  std::unordered_set<std::string> seen;
  for (const auto& sample : samples) {
    std::string key = normalize_whitespace(sample.vulnerable_fn);
    key += '\x1f';
    key += normalize_whitespace(sample.fixed_fn);
    if (seen.insert(std::move(key)).second) kept.push_back(sample);
  }
  return kept;
}

SplitManifest repo_split(const std::vector<RepairSample>& samples,
                         const std::array<double, 3>& ratios, uint64_t seed) {
  (void)seed;  // assignment is fully deterministic; see header
  double ratio_sum = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0))
      throw Error(ErrorCode::invalid_input,
                  "repo_split: ratios must be positive");
    ratio_sum += r;
  }
  if (std::abs(ratio_sum - 1.0) > 1e-9)
    throw Error(ErrorCode::invalid_input, "repo_split: ratios must sum to 1");

  std::unordered_map<std::string, std::vector<const RepairSample*>> by_repo;
  for (const auto& sample : samples) by_repo[sample.repo].push_back(&sample);
  if (by_repo.size() < 3)
    throw Error(ErrorCode::invalid_input,
                "repo_split: need at least 3 distinct repositories");

  std::vector<std::pair<std::string, size_t>> repos;
  repos.reserve(by_repo.size());
  for (const auto& [repo, members] : by_repo)
    repos.emplace_back(repo, members.size());
  std::sort(repos.begin(), repos.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  static constexpr const char* kSplitNames[3] = {"train", "val", "test"};
  const double total = static_cast<double>(samples.size());
  std::array<double, 3> assigned = {0.0, 0.0, 0.0};

  SplitManifest manifest;
  std::array<std::vector<std::string>*, 3> buckets = {
      &manifest.train, &manifest.val, &manifest.test};

  for (const auto& [repo, count] : repos) {
    size_t best = 0;
    double best_deficit = -1.0;
    for (size_t s = 0; s < 3; ++s) {
      double deficit = ratios[s] - assigned[s] / total;
      if (deficit > best_deficit) {
        best_deficit = deficit;
        best = s;
      }
    }
    assigned[best] += static_cast<double>(count);
    manifest.repo_assignment[repo] = kSplitNames[best];
    for (const RepairSample* sample : by_repo[repo])
      buckets[best]->push_back(sample->id);
  }

  for (size_t s = 0; s < 3; ++s) {
    std::sort(buckets[s]->begin(), buckets[s]->end());
    manifest.achieved_ratios[kSplitNames[s]] = assigned[s] / total;
  }
  return manifest;
}

RepairSample make_sample(std::string id, std::string repo,
                         std::optional<std::string> cwe,
                         std::string vulnerable_fn, std::string fixed_fn) {
  RepairSample sample;
  sample.id = std::move(id);
  sample.repo = std::move(repo);
  sample.cwe = std::move(cwe);
  sample.vulnerable_fn = std::move(vulnerable_fn);
  sample.fixed_fn = std::move(fixed_fn);
  std::vector<LineRange> hunks =
      diff_hunks(sample.vulnerable_fn, sample.fixed_fn);
  sample.marked_fn = insert_markers(sample.vulnerable_fn, hunks);
  sample.hunks = static_cast<int>(hunks.size());
  return sample;
}

}  // namespace repairkit
