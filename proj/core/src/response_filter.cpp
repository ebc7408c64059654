#include "repairkit/response_filter.hpp"

#include <algorithm>
#include <cctype>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

constexpr std::string_view kReasonOpen = "<reason>";
constexpr std::string_view kReasonClose = "</reason>";
constexpr std::string_view kPatchOpen = "<patch>";
constexpr std::string_view kPatchClose = "</patch>";

std::vector<size_t> find_all(std::string_view text, std::string_view needle) {
  std::vector<size_t> positions;
  size_t pos = text.find(needle);
  while (pos != std::string_view::npos) {
    positions.push_back(pos);
    pos = text.find(needle, pos + 1);
  }
  return positions;
}

bool whitespace_only(std::string_view text) {
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isspace(c) != 0;
  });
}

std::string_view trim(std::string_view text) {
  size_t begin = 0;
  while (begin < text.size() &&
         std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  return text.substr(begin, end - begin);
}

SchemaError error(SchemaErrorKind kind, std::string detail) {
  return SchemaError{kind, std::move(detail)};
}

}  // namespace

const char* schema_error_name(SchemaErrorKind kind) {
  switch (kind) {
    case SchemaErrorKind::missing_reason: return "MissingReason";
    case SchemaErrorKind::missing_patch: return "MissingPatch";
    case SchemaErrorKind::misordered: return "Misordered";
    case SchemaErrorKind::malformed: return "Malformed";
    case SchemaErrorKind::duplicate_tag: return "DuplicateTag";
    case SchemaErrorKind::empty_section: return "EmptySection";
  }
  return "Unknown";
}

ResponseParse parse_response(std::string_view text) {
  auto r_open = find_all(text, kReasonOpen);
  auto r_close = find_all(text, kReasonClose);
  auto p_open = find_all(text, kPatchOpen);
  auto p_close = find_all(text, kPatchClose);

  // opening tags never match inside closing ones (the "</" differs)

  if (r_open.size() > 1 || r_close.size() > 1 || p_open.size() > 1 ||
      p_close.size() > 1)
    return error(SchemaErrorKind::duplicate_tag, "a tag appears more than once");

  if (r_open.empty() && r_close.empty())
    return error(SchemaErrorKind::missing_reason, "no <reason> section");
  if (p_open.empty() && p_close.empty())
    return error(SchemaErrorKind::missing_patch, "no <patch> section");
  if (r_open.empty() || r_close.empty())
    return error(SchemaErrorKind::malformed, "unpaired <reason> tag");
  if (p_open.empty() || p_close.empty())
    return error(SchemaErrorKind::malformed, "unpaired <patch> tag");

  size_t ro = r_open[0], rc = r_close[0], po = p_open[0], pc = p_close[0];

  // whole patch block before the reason block: the sections are swapped
  if (po < ro && pc < ro && po < pc && ro < rc)
    return error(SchemaErrorKind::misordered, "<patch> before <reason>");

  if (!(ro < rc && rc < po && po < pc))
    return error(SchemaErrorKind::malformed, "tags interleave");

  std::string_view after = text.substr(pc + kPatchClose.size());
  if (!whitespace_only(after))
    return error(SchemaErrorKind::malformed, "content after </patch>");

  std::string_view reason =
      text.substr(ro + kReasonOpen.size(), rc - ro - kReasonOpen.size());
  std::string_view patch =
      text.substr(po + kPatchOpen.size(), pc - po - kPatchOpen.size());

  std::string_view between = text.substr(rc + kReasonClose.size(),
                                         po - rc - kReasonClose.size());
  if (!whitespace_only(between))
    return error(SchemaErrorKind::malformed,
                 "content between </reason> and <patch>");

  if (trim(reason).empty())
    return error(SchemaErrorKind::empty_section, "empty <reason> section");
  if (trim(patch).empty())
    return error(SchemaErrorKind::empty_section, "empty <patch> section");

  return ParsedResponse{std::string(reason), std::string(patch)};
}

std::string serialize_response(const ParsedResponse& response) {
  std::string out;
  out += kReasonOpen;
  out += response.reason;
  out += kReasonClose;
  out += kPatchOpen;
  out += response.patch;
  out += kPatchClose;
  return out;
}

bool keep_decision(double score, double threshold) {
  return score > threshold;
}

FilterDecision semantic_filter(std::string_view patch, std::string_view oracle,
                               double threshold, const MetricConfig& cfg) {
  if (oracle.empty())
    throw Error(ErrorCode::invalid_input, "semantic_filter: empty oracle");
  FilterDecision decision;
  decision.score = codebleu(patch, oracle, cfg);
  decision.keep = keep_decision(decision.score, threshold);
  return decision;
}

FilterReport filter_batch(const std::vector<BatchItem>& items,
                          double threshold, const MetricConfig& cfg) {
  FilterReport report;
  for (const auto& item : items) {
    ResponseParse parsed = parse_response(item.response);
    if (const auto* schema_error = std::get_if<SchemaError>(&parsed)) {
      report.counts_by_error[schema_error_name(schema_error->kind)] += 1;
      report.rejected.push_back({item.id, *schema_error, std::nullopt});
      continue;
    }
    const auto& response = std::get<ParsedResponse>(parsed);
    if (item.oracle.empty() || tokenize(item.oracle).empty()) {
      ++report.semantic_drops;
      report.rejected.push_back({item.id, std::nullopt, 0.0});
      continue;
    }
    FilterDecision decision =
        semantic_filter(response.patch, item.oracle, threshold, cfg);
    if (decision.keep) {
      report.kept.push_back({item.id, response, decision.score});
    } else {
      ++report.semantic_drops;
      report.rejected.push_back({item.id, std::nullopt, decision.score});
    }
  }
  return report;
}

}  // namespace repairkit
