#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace repairkit {

enum class TokenKind {
  keyword,
  identifier,
  number_literal,
  string_literal,
  char_literal,
  op,
  punctuation,
};

struct Token {
  TokenKind kind;
  std::string lexeme;
  uint32_t line;    // 1-based
  uint32_t column;  // 1-based

  bool operator==(const Token& other) const {
    return kind == other.kind && lexeme == other.lexeme;
  }
};

/// Splits source text into tokens. Comments and whitespace are dropped;
/// every other byte lands in exactly one token. Bytes that fit no rule
/// become single-character punctuation tokens, so this never fails.
std::vector<Token> tokenize(std::string_view text);

/// True for lexemes in the fixed C keyword list (plus bool/true/false/nullptr).
bool is_keyword(std::string_view lexeme);

/// Joins lexemes with single spaces. tokenize(detokenize(ts)) == ts.
std::string detokenize(const std::vector<Token>& tokens);

const char* token_kind_name(TokenKind kind);

}  // namespace repairkit
