#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "repairkit/metrics.hpp"

namespace repairkit {

/// A reason-then-edit response split into its two sections.
struct ParsedResponse {
  std::string reason;
  std::string patch;

  bool operator==(const ParsedResponse&) const = default;
};

enum class SchemaErrorKind {
  missing_reason,
  missing_patch,
  misordered,
  malformed,
  duplicate_tag,
  empty_section,
};

const char* schema_error_name(SchemaErrorKind kind);

struct SchemaError {
  SchemaErrorKind kind;
  std::string detail;
};

using ResponseParse = std::variant<ParsedResponse, SchemaError>;

/// Accepts exactly one <reason>...</reason> followed by one
/// <patch>...</patch>, optional text before <reason>, and nothing but
/// whitespace after </patch>. Violations come back as the most specific
/// SchemaError value, never as an exception.
ResponseParse parse_response(std::string_view text);

/// Inverse of parse_response on well-formed values.
std::string serialize_response(const ParsedResponse& response);

/// keep iff score > threshold, strictly.
bool keep_decision(double score, double threshold);

struct FilterDecision {
  bool keep = false;
  double score = 0.0;
};

/// CodeBLEU gate against the oracle patch. Throws on an empty oracle.
FilterDecision semantic_filter(std::string_view patch,
                               std::string_view oracle, double threshold,
                               const MetricConfig& cfg = {});

struct BatchItem {
  std::string id;
  std::string response;
  std::string oracle;
};

struct KeptItem {
  std::string id;
  ParsedResponse response;
  double score = 0.0;
};

struct RejectedItem {
  std::string id;
  std::optional<SchemaError> schema_error;  // absent for semantic drops
  std::optional<double> score;              // absent for schema drops
};

struct FilterReport {
  std::vector<KeptItem> kept;
  std::vector<RejectedItem> rejected;
  std::map<std::string, long> counts_by_error;  // schema error name -> count
  long semantic_drops = 0;
};

/// Two-step filter: schema check, then the semantic gate. Order-preserving
/// and total; items with an empty oracle are dropped with score 0.
FilterReport filter_batch(const std::vector<BatchItem>& items,
                          double threshold, const MetricConfig& cfg = {});

}  // namespace repairkit
