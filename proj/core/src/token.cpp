#include "repairkit/token.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace repairkit {

namespace {

const std::unordered_set<std::string_view>& keyword_set() {
  static const std::unordered_set<std::string_view> kw = {
      "auto",     "break",    "case",     "char",   "const",    "continue",
      "default",  "do",       "double",   "else",   "enum",     "extern",
      "float",    "for",      "goto",     "if",     "inline",   "int",
      "long",     "register", "restrict", "return", "short",    "signed",
      "sizeof",   "static",   "struct",   "switch", "typedef",  "union",
      "unsigned", "void",     "volatile", "while",  "bool",     "true",
      "false",    "nullptr",
  };
  return kw;
}

// Longest match first; single-char operators are handled separately.
constexpr std::array<std::string_view, 15> kMultiCharOps = {
    "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=",
};

constexpr std::string_view kSingleCharOps = "+-*/%<>=!~&|^?:.";
constexpr std::string_view kPunctuation = ";,(){}[]";

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool is_keyword(std::string_view lexeme) {
  return keyword_set().count(lexeme) != 0;
}

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::keyword: return "keyword";
    case TokenKind::identifier: return "identifier";
    case TokenKind::number_literal: return "number-literal";
    case TokenKind::string_literal: return "string-literal";
    case TokenKind::char_literal: return "char-literal";
    case TokenKind::op: return "operator";
    case TokenKind::punctuation: return "punctuation";
  }
  return "unknown";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  uint32_t line = 1;
  uint32_t col = 1;

  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };

  auto emit = [&](TokenKind kind, size_t len, uint32_t tline, uint32_t tcol) {
    out.push_back(Token{kind, std::string(text.substr(i, len)), tline, tcol});
    advance(len);
  };

  while (i < text.size()) {
    const char c = text[i];
    const uint32_t tline = line;
    const uint32_t tcol = col;

    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
        c == '\v') {
      advance(1);
      continue;
    }

    // Line comment.
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      size_t end = text.find('\n', i);
      advance((end == std::string_view::npos ? text.size() : end) - i);
      continue;
    }

    // Block comment; unterminated runs to end of input.
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      size_t end = text.find("*/", i + 2);
      size_t stop = (end == std::string_view::npos) ? text.size() : end + 2;
      advance(stop - i);
      continue;
    }

    if (is_ident_start(c)) {
      size_t len = 1;
      while (i + len < text.size() && is_ident_char(text[i + len])) ++len;
      std::string_view word = text.substr(i, len);
      emit(is_keyword(word) ? TokenKind::keyword : TokenKind::identifier, len,
           tline, tcol);
      continue;
    }

    // pp-number: digits, letters, dots, and exponent signs after e/E/p/P.
    if (is_digit(c) || (c == '.' && i + 1 < text.size() && is_digit(text[i + 1]))) {
      size_t len = 1;
      while (i + len < text.size()) {
        char d = text[i + len];
        if (is_ident_char(d) || d == '.') {
          ++len;
        } else if ((d == '+' || d == '-') &&
                   (text[i + len - 1] == 'e' || text[i + len - 1] == 'E' ||
                    text[i + len - 1] == 'p' || text[i + len - 1] == 'P')) {
          ++len;
        } else {
          break;
        }
      }
      emit(TokenKind::number_literal, len, tline, tcol);
      continue;
    }

    // String/char literal; an unterminated one ends at the line break so a
    // stray quote cannot swallow the rest of the input.
    if (c == '"' || c == '\'') {
      size_t len = 1;
      bool escaped = false;
      while (i + len < text.size()) {
        char d = text[i + len];
        if (escaped) {
          escaped = false;
          ++len;
          continue;
        }
        if (d == '\\') {
          escaped = true;
          ++len;
          continue;
        }
        if (d == c) {
          ++len;
          break;
        }
        if (d == '\n') break;
        ++len;
      }
      emit(c == '"' ? TokenKind::string_literal : TokenKind::char_literal, len,
           tline, tcol);
      continue;
    }

    // Multi-char operators, longest match first.
    bool matched = false;
    for (std::string_view op : kMultiCharOps) {
      if (text.substr(i, op.size()) == op) {
        emit(TokenKind::op, op.size(), tline, tcol);
        matched = true;
        break;
      }
    }
    if (matched) continue;

    if (kSingleCharOps.find(c) != std::string_view::npos) {
      emit(TokenKind::op, 1, tline, tcol);
      continue;
    }

    // Known punctuation or an unknown byte; either way a one-char token.
    (void)kPunctuation;
    emit(TokenKind::punctuation, 1, tline, tcol);
  }

  return out;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (size_t k = 0; k < tokens.size(); ++k) {
    if (k) out += ' ';
    out += tokens[k].lexeme;
  }
  return out;
}

}  // namespace repairkit
