#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "repairkit/token.hpp"

namespace repairkit {

// Construct labels used by the parser. Kept as plain strings so the canonical
// subtree serialization reads naturally.
namespace node_kind {
inline constexpr const char* translation_unit = "translation-unit";
inline constexpr const char* function_def = "function-def";
inline constexpr const char* function_decl = "function-decl";
inline constexpr const char* param_list = "param-list";
inline constexpr const char* param = "param";
inline constexpr const char* declaration = "declaration";
inline constexpr const char* init_declarator = "init-declarator";
inline constexpr const char* array_suffix = "array-suffix";
inline constexpr const char* initializer = "initializer";
inline constexpr const char* init_list = "init-list";
inline constexpr const char* compound = "compound";
inline constexpr const char* if_stmt = "if-stmt";
inline constexpr const char* while_stmt = "while-stmt";
inline constexpr const char* for_stmt = "for-stmt";
inline constexpr const char* for_init = "for-init";
inline constexpr const char* for_cond = "for-cond";
inline constexpr const char* for_step = "for-step";
inline constexpr const char* return_stmt = "return-stmt";
inline constexpr const char* break_stmt = "break-stmt";
inline constexpr const char* continue_stmt = "continue-stmt";
inline constexpr const char* expr_stmt = "expr-stmt";
inline constexpr const char* empty_stmt = "empty-stmt";
inline constexpr const char* assign_expr = "assign-expr";
inline constexpr const char* add_assign_expr = "add-assign-expr";
inline constexpr const char* sub_assign_expr = "sub-assign-expr";
inline constexpr const char* mul_assign_expr = "mul-assign-expr";
inline constexpr const char* div_assign_expr = "div-assign-expr";
inline constexpr const char* ternary_expr = "ternary-expr";
inline constexpr const char* binary_expr = "binary-expr";
inline constexpr const char* unary_expr = "unary-expr";
inline constexpr const char* postfix_expr = "postfix-expr";
inline constexpr const char* call_expr = "call-expr";
inline constexpr const char* index_expr = "index-expr";
inline constexpr const char* member_expr = "member-expr";
inline constexpr const char* cast_expr = "cast-expr";
inline constexpr const char* paren_expr = "paren-expr";
inline constexpr const char* identifier = "identifier";
inline constexpr const char* literal = "literal";
inline constexpr const char* keyword = "keyword";
inline constexpr const char* op = "operator";
}  // namespace node_kind

struct SyntaxNode {
  std::string kind;
  std::vector<SyntaxNode> children;
  std::string leaf_lexeme;  // present iff children is empty
  uint32_t span_begin = 0;  // token index range, half-open [begin, end)
  uint32_t span_end = 0;

  bool is_leaf() const { return children.empty(); }
};

struct SyntaxTree {
  SyntaxNode root;
  double coverage = 0.0;  // fraction of tokens consumed by parsed constructs
};

struct Diagnostic {
  uint32_t line;
  uint32_t column;
  std::string message;
};

struct ParseOutcome {
  std::optional<SyntaxTree> tree;  // absent iff failed
  std::vector<Diagnostic> diagnostics;
  bool failed = false;  // true only when zero top-level constructs parsed
};

/// Recursive-descent parse of the C-like subset. A syntax error inside a
/// statement skips to the next ';' or '}' at the same brace depth, records a
/// diagnostic, and continues; coverage reflects the skipped tokens.
ParseOutcome parse(const std::vector<Token>& tokens);

/// Convenience: tokenize + parse.
ParseOutcome parse_text(std::string_view text);

/// Node count of the whole tree (root included).
size_t node_count(const SyntaxNode& node);

}  // namespace repairkit
