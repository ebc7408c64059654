#include "repairkit/ast.hpp"

#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace repairkit {

namespace {

const std::unordered_set<std::string_view> kTypeKeywords = {
    "void", "char",   "short",    "int",      "long",   "float",
    "double", "signed", "unsigned", "bool",     "auto",
};

const std::unordered_set<std::string_view> kQualifierKeywords = {
    "const",  "volatile", "static", "extern", "register",
    "inline", "restrict", "typedef",
};

const std::unordered_set<std::string_view> kTagKeywords = {"struct", "enum",
                                                           "union"};

const std::unordered_set<std::string_view> kUnsupportedStmtKeywords = {
    "do", "switch", "case", "default", "goto"};

const std::unordered_map<std::string_view, const char*>& assign_kinds() {
  static const std::unordered_map<std::string_view, const char*> m = {
      {"=", node_kind::assign_expr},      {"+=", node_kind::add_assign_expr},
      {"-=", node_kind::sub_assign_expr}, {"*=", node_kind::mul_assign_expr},
      {"/=", node_kind::div_assign_expr},
  };
  return m;
}

// Binary operator precedence levels, lowest binds loosest.
const std::vector<std::vector<std::string_view>>& binary_levels() {
  static const std::vector<std::vector<std::string_view>> levels = {
      {"||"}, {"&&"}, {"|"}, {"^"}, {"&"},
      {"==", "!="}, {"<", ">", "<=", ">="}, {"<<", ">>"}, {"+", "-"},
      {"*", "/", "%"},
  };
  return levels;
}

const std::unordered_set<std::string_view> kUnaryOps = {"!", "-", "~", "*",
                                                        "&", "++", "--", "+"};

struct ParseError {};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens)
      : toks_(tokens), skipped_(tokens.size(), false) {}

  ParseOutcome run() {
    ParseOutcome outcome;
    if (toks_.empty()) {
      outcome.failed = true;
      outcome.diagnostics.push_back({1, 1, "no tokens in input"});
      return outcome;
    }

    std::vector<SyntaxNode> items;
    while (!at_end()) {
      size_t start = pos_;
      try {
        items.push_back(parse_external_item());
      } catch (const ParseError&) {
        sync_top_level();
        mark_skipped(start, pos_);
      }
    }

    outcome.diagnostics = std::move(diags_);
    if (items.empty()) {
      outcome.failed = true;
      if (outcome.diagnostics.empty()) {
        outcome.diagnostics.push_back({1, 1, "no top-level construct parsed"});
      }
      return outcome;
    }

    SyntaxNode root;
    root.kind = node_kind::translation_unit;
    root.children = std::move(items);
    root.span_begin = 0;
    root.span_end = static_cast<uint32_t>(toks_.size());

    size_t skipped = 0;
    for (bool b : skipped_) skipped += b ? 1 : 0;

    SyntaxTree tree;
    tree.root = std::move(root);
    tree.coverage =
        1.0 - static_cast<double>(skipped) / static_cast<double>(toks_.size());
    outcome.tree = std::move(tree);
    return outcome;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;
  std::vector<bool> skipped_;
  std::vector<Diagnostic> diags_;

  // ---- token stream helpers ----

  bool at_end() const { return pos_ >= toks_.size(); }

  const Token& cur() const { return toks_[pos_]; }

  bool check(TokenKind kind, std::string_view lexeme) const {
    return !at_end() && cur().kind == kind && cur().lexeme == lexeme;
  }

  bool check_punct(std::string_view p) const {
    return check(TokenKind::punctuation, p);
  }

  bool check_op(std::string_view o) const { return check(TokenKind::op, o); }

  bool check_kw(std::string_view k) const {
    return check(TokenKind::keyword, k);
  }

  bool check_ident() const {
    return !at_end() && cur().kind == TokenKind::identifier;
  }

  [[noreturn]] void fail(const std::string& message) {
    if (at_end()) {
      uint32_t line = toks_.empty() ? 1 : toks_.back().line;
      uint32_t col = toks_.empty() ? 1 : toks_.back().column;
      diags_.push_back({line, col, message + " (at end of input)"});
    } else {
      diags_.push_back({cur().line, cur().column,
                        message + " near '" + cur().lexeme + "'"});
    }
    throw ParseError{};
  }

  void expect_punct(std::string_view p) {
    if (!check_punct(p)) fail(std::string("expected '") + std::string(p) + "'");
    ++pos_;
  }

  void expect_op(std::string_view o) {
    if (!check_op(o)) fail(std::string("expected '") + std::string(o) + "'");
    ++pos_;
  }

  void mark_skipped(size_t from, size_t to) {
    for (size_t k = from; k < to && k < skipped_.size(); ++k)
      skipped_[k] = true;
  }

  // ---- node builders ----

  SyntaxNode make(const char* kind, std::vector<SyntaxNode> children,
                  size_t start) const {
    SyntaxNode n;
    n.kind = kind;
    n.children = std::move(children);
    n.span_begin = static_cast<uint32_t>(start);
    n.span_end = static_cast<uint32_t>(pos_);
    return n;
  }

  // Leaf from the current token; advances.
  SyntaxNode token_leaf(const char* kind) {
    SyntaxNode n;
    n.kind = kind;
    n.leaf_lexeme = cur().lexeme;
    n.span_begin = static_cast<uint32_t>(pos_);
    n.span_end = static_cast<uint32_t>(pos_ + 1);
    ++pos_;
    return n;
  }

  SyntaxNode synthetic_leaf(const char* kind, std::string lexeme,
                            size_t start) const {
    SyntaxNode n;
    n.kind = kind;
    n.leaf_lexeme = std::move(lexeme);
    n.span_begin = static_cast<uint32_t>(start);
    n.span_end = static_cast<uint32_t>(pos_);
    return n;
  }

  SyntaxNode identifier_leaf() {
    if (!check_ident()) fail("expected identifier");
    return token_leaf(node_kind::identifier);
  }

  // ---- error recovery ----

  // Skip to just past the next ';' at the same brace depth, or stop in front
  // of a '}' closing the enclosing block.
  void sync_statement() {
    int depth = 0;
    while (!at_end()) {
      const Token& t = cur();
      if (t.kind == TokenKind::punctuation) {
        if (t.lexeme == "{") {
          ++depth;
        } else if (t.lexeme == "}") {
          if (depth == 0) return;
          --depth;
        } else if (t.lexeme == ";" && depth == 0) {
          ++pos_;
          return;
        }
      }
      ++pos_;
    }
  }

  // Top level has no enclosing block, so a stray '}' is consumed to make
  // progress.
  void sync_top_level() {
    int depth = 0;
    while (!at_end()) {
      const Token& t = cur();
      ++pos_;
      if (t.kind == TokenKind::punctuation) {
        if (t.lexeme == "{") {
          ++depth;
        } else if (t.lexeme == "}") {
          if (depth == 0) return;
          --depth;
        } else if (t.lexeme == ";" && depth == 0) {
          return;
        }
      }
    }
  }

  // ---- declaration specifiers ----

  bool spec_keyword_at(size_t j) const {
    if (j >= toks_.size()) return false;
    const Token& t = toks_[j];
    if (t.kind != TokenKind::keyword) return false;
    return kTypeKeywords.count(t.lexeme) || kQualifierKeywords.count(t.lexeme) ||
           kTagKeywords.count(t.lexeme);
  }

  // Consumes type keywords, qualifiers, struct/enum/union tags, and at most
  // one user-type identifier (only when another identifier follows, possibly
  // through '*'s). Returns the number of specifier leaves appended.
  size_t parse_decl_specifiers(std::vector<SyntaxNode>& out) {
    size_t count = 0;
    while (!at_end()) {
      const Token& t = cur();
      if (t.kind == TokenKind::keyword && kTagKeywords.count(t.lexeme)) {
        out.push_back(token_leaf(node_kind::keyword));
        ++count;
        if (check_ident()) {
          out.push_back(token_leaf(node_kind::identifier));
          ++count;
        }
        continue;
      }
      if (t.kind == TokenKind::keyword &&
          (kTypeKeywords.count(t.lexeme) || kQualifierKeywords.count(t.lexeme))) {
        out.push_back(token_leaf(node_kind::keyword));
        ++count;
        continue;
      }
      if (t.kind == TokenKind::identifier) {
        size_t j = pos_ + 1;
        while (j < toks_.size() && toks_[j].kind == TokenKind::op &&
               toks_[j].lexeme == "*")
          ++j;
        if (j < toks_.size() && toks_[j].kind == TokenKind::identifier) {
          out.push_back(token_leaf(node_kind::identifier));
          ++count;
          continue;
        }
      }
      break;
    }
    return count;
  }

  // ---- functions ----

  SyntaxNode parse_external_item() {
    if (auto fn = try_parse_function()) return std::move(*fn);
    return parse_statement();
  }

  std::optional<SyntaxNode> try_parse_function() {
    size_t save_pos = pos_;
    size_t save_diags = diags_.size();
    try {
      return parse_function();
    } catch (const ParseError&) {
      pos_ = save_pos;
      diags_.resize(save_diags);
      return std::nullopt;
    }
  }

  SyntaxNode parse_function() {
    size_t start = pos_;
    std::vector<SyntaxNode> children;
    if (parse_decl_specifiers(children) == 0) fail("expected type specifier");
    while (check_op("*")) children.push_back(token_leaf(node_kind::op));
    children.push_back(identifier_leaf());
    expect_punct("(");
    std::vector<SyntaxNode> params;
    if (!check_punct(")")) {
      params.push_back(parse_param());
      while (check_punct(",")) {
        ++pos_;
        params.push_back(parse_param());
      }
    }
    expect_punct(")");
    if (!params.empty()) {
      SyntaxNode pl;
      pl.kind = node_kind::param_list;
      pl.span_begin = params.front().span_begin;
      pl.span_end = params.back().span_end;
      pl.children = std::move(params);
      children.push_back(std::move(pl));
    }
    if (check_punct("{")) {
      children.push_back(parse_compound());
      return make(node_kind::function_def, std::move(children), start);
    }
    if (check_punct(";")) {
      ++pos_;
      return make(node_kind::function_decl, std::move(children), start);
    }
    fail("expected function body or ';'");
  }

  SyntaxNode parse_param() {
    size_t start = pos_;
    // varargs: the operator table has no "...", so it arrives as three dots
    if (check_op(".")) {
      size_t dots = 0;
      while (check_op(".") && dots < 3) {
        ++pos_;
        ++dots;
      }
      return synthetic_leaf(node_kind::param, "...", start);
    }
    std::vector<SyntaxNode> children;
    parse_decl_specifiers(children);
    while (check_op("*")) children.push_back(token_leaf(node_kind::op));
    if (check_ident()) children.push_back(token_leaf(node_kind::identifier));
    while (check_punct("[")) {
      ++pos_;
      if (check_punct("]")) {
        ++pos_;
        children.push_back(synthetic_leaf(node_kind::array_suffix, "[]", start));
      } else {
        SyntaxNode dim = parse_expression();
        expect_punct("]");
        children.push_back(
            make(node_kind::array_suffix, {std::move(dim)}, start));
      }
    }
    if (children.empty()) fail("expected parameter");
    return make(node_kind::param, std::move(children), start);
  }

  // ---- statements ----

  SyntaxNode parse_compound() {
    size_t start = pos_;
    expect_punct("{");
    std::vector<SyntaxNode> stmts;
    while (!at_end() && !check_punct("}")) {
      size_t stmt_start = pos_;
      try {
        stmts.push_back(parse_statement());
      } catch (const ParseError&) {
        sync_statement();
        mark_skipped(stmt_start, pos_);
      }
    }
    if (!at_end()) {
      ++pos_;  // '}'
    } else {
      diags_.push_back({toks_.back().line, toks_.back().column,
                        "unterminated compound statement"});
    }
    if (stmts.empty()) return synthetic_leaf(node_kind::compound, "{}", start);
    return make(node_kind::compound, std::move(stmts), start);
  }

  bool is_declaration_start() const {
    if (at_end()) return false;
    if (spec_keyword_at(pos_)) return true;
    if (cur().kind != TokenKind::identifier) return false;
    size_t j = pos_ + 1;
    while (j < toks_.size() && toks_[j].kind == TokenKind::op &&
           toks_[j].lexeme == "*")
      ++j;
    if (j >= toks_.size() || toks_[j].kind != TokenKind::identifier)
      return false;
    ++j;
    if (j >= toks_.size()) return false;
    const Token& after = toks_[j];
    return (after.kind == TokenKind::op && after.lexeme == "=") ||
           (after.kind == TokenKind::punctuation &&
            (after.lexeme == ";" || after.lexeme == "," ||
             after.lexeme == "["));
  }

  SyntaxNode parse_statement() {
    if (at_end()) fail("expected statement");
    const Token& t = cur();

    if (t.kind == TokenKind::punctuation && t.lexeme == "{")
      return parse_compound();

    if (t.kind == TokenKind::punctuation && t.lexeme == ";") {
      size_t start = pos_;
      ++pos_;
      return synthetic_leaf(node_kind::empty_stmt, ";", start);
    }

    if (t.kind == TokenKind::keyword) {
      if (t.lexeme == "if") return parse_if();
      if (t.lexeme == "while") return parse_while();
      if (t.lexeme == "for") return parse_for();
      if (t.lexeme == "return") return parse_return();
      if (t.lexeme == "break" || t.lexeme == "continue") {
        size_t start = pos_;
        std::string word = t.lexeme;
        ++pos_;
        expect_punct(";");
        return synthetic_leaf(word == "break" ? node_kind::break_stmt
                                              : node_kind::continue_stmt,
                              word, start);
      }
      if (kUnsupportedStmtKeywords.count(t.lexeme))
        fail("unsupported statement '" + t.lexeme + "'");
    }

    if (is_declaration_start()) return parse_declaration();

    size_t start = pos_;
    SyntaxNode expr = parse_expression();
    expect_punct(";");
    return make(node_kind::expr_stmt, {std::move(expr)}, start);
  }

  SyntaxNode parse_if() {
    size_t start = pos_;
    ++pos_;  // if
    expect_punct("(");
    SyntaxNode cond = parse_expression();
    expect_punct(")");
    SyntaxNode then_branch = parse_statement();
    std::vector<SyntaxNode> children;
    children.push_back(std::move(cond));
    children.push_back(std::move(then_branch));
    if (check_kw("else")) {
      ++pos_;
      children.push_back(parse_statement());
    }
    return make(node_kind::if_stmt, std::move(children), start);
  }

  SyntaxNode parse_while() {
    size_t start = pos_;
    ++pos_;  // while
    expect_punct("(");
    SyntaxNode cond = parse_expression();
    expect_punct(")");
    SyntaxNode body = parse_statement();
    return make(node_kind::while_stmt, {std::move(cond), std::move(body)},
                start);
  }

  SyntaxNode parse_for() {
    size_t start = pos_;
    ++pos_;  // for
    expect_punct("(");
    std::vector<SyntaxNode> children;

    if (check_punct(";")) {
      ++pos_;
    } else if (is_declaration_start()) {
      size_t part = pos_;
      SyntaxNode decl = parse_declaration();  // consumes ';'
      children.push_back(make(node_kind::for_init, {std::move(decl)}, part));
    } else {
      size_t part = pos_;
      SyntaxNode init = parse_expression();
      expect_punct(";");
      children.push_back(make(node_kind::for_init, {std::move(init)}, part));
    }

    if (!check_punct(";")) {
      size_t part = pos_;
      SyntaxNode cond = parse_expression();
      children.push_back(make(node_kind::for_cond, {std::move(cond)}, part));
    }
    expect_punct(";");

    if (!check_punct(")")) {
      size_t part = pos_;
      SyntaxNode step = parse_expression();
      children.push_back(make(node_kind::for_step, {std::move(step)}, part));
    }
    expect_punct(")");

    children.push_back(parse_statement());
    return make(node_kind::for_stmt, std::move(children), start);
  }

  SyntaxNode parse_return() {
    size_t start = pos_;
    ++pos_;  // return
    if (check_punct(";")) {
      ++pos_;
      return synthetic_leaf(node_kind::return_stmt, "return", start);
    }
    SyntaxNode value = parse_expression();
    expect_punct(";");
    return make(node_kind::return_stmt, {std::move(value)}, start);
  }

  SyntaxNode parse_declaration() {
    size_t start = pos_;
    std::vector<SyntaxNode> children;
    if (parse_decl_specifiers(children) == 0) fail("expected declaration");
    children.push_back(parse_init_declarator());
    while (check_punct(",")) {
      ++pos_;
      children.push_back(parse_init_declarator());
    }
    expect_punct(";");
    return make(node_kind::declaration, std::move(children), start);
  }

  SyntaxNode parse_init_declarator() {
    size_t start = pos_;
    std::vector<SyntaxNode> children;
    while (check_op("*")) children.push_back(token_leaf(node_kind::op));
    children.push_back(identifier_leaf());
    while (check_punct("[")) {
      size_t part = pos_;
      ++pos_;
      if (check_punct("]")) {
        ++pos_;
        children.push_back(synthetic_leaf(node_kind::array_suffix, "[]", part));
      } else {
        SyntaxNode dim = parse_expression();
        expect_punct("]");
        children.push_back(
            make(node_kind::array_suffix, {std::move(dim)}, part));
      }
    }
    if (check_op("=")) {
      size_t part = pos_;
      ++pos_;
      SyntaxNode init = parse_initializer();
      children.push_back(
          make(node_kind::initializer, {std::move(init)}, part));
    }
    return make(node_kind::init_declarator, std::move(children), start);
  }

  SyntaxNode parse_initializer() {
    if (!check_punct("{")) return parse_assignment();
    size_t start = pos_;
    ++pos_;
    std::vector<SyntaxNode> items;
    if (!check_punct("}")) {
      items.push_back(parse_initializer());
      while (check_punct(",")) {
        ++pos_;
        if (check_punct("}")) break;  // trailing comma
        items.push_back(parse_initializer());
      }
    }
    expect_punct("}");
    if (items.empty())
      return synthetic_leaf(node_kind::init_list, "{}", start);
    return make(node_kind::init_list, std::move(items), start);
  }

  // ---- expressions ----

  SyntaxNode parse_expression() { return parse_assignment(); }

  SyntaxNode parse_assignment() {
    size_t start = pos_;
    SyntaxNode lhs = parse_ternary();
    if (!at_end() && cur().kind == TokenKind::op) {
      auto it = assign_kinds().find(cur().lexeme);
      if (it != assign_kinds().end()) {
        ++pos_;
        SyntaxNode rhs = parse_assignment();
        return make(it->second, {std::move(lhs), std::move(rhs)}, start);
      }
    }
    return lhs;
  }

  SyntaxNode parse_ternary() {
    size_t start = pos_;
    SyntaxNode cond = parse_binary(0);
    if (check_op("?")) {
      ++pos_;
      SyntaxNode then_value = parse_expression();
      expect_op(":");
      SyntaxNode else_value = parse_assignment();
      return make(node_kind::ternary_expr,
                  {std::move(cond), std::move(then_value),
                   std::move(else_value)},
                  start);
    }
    return cond;
  }

  SyntaxNode parse_binary(size_t level) {
    const auto& levels = binary_levels();
    if (level >= levels.size()) return parse_unary();
    size_t start = pos_;
    SyntaxNode lhs = parse_binary(level + 1);
    while (!at_end() && cur().kind == TokenKind::op) {
      bool at_level = false;
      for (std::string_view op : levels[level]) {
        if (cur().lexeme == op) {
          at_level = true;
          break;
        }
      }
      if (!at_level) break;
      SyntaxNode op_leaf = token_leaf(node_kind::op);
      SyntaxNode rhs = parse_binary(level + 1);
      lhs = make(node_kind::binary_expr,
                 {std::move(lhs), std::move(op_leaf), std::move(rhs)}, start);
    }
    return lhs;
  }

  bool starts_unary_expression(size_t j) const {
    if (j >= toks_.size()) return false;
    const Token& t = toks_[j];
    switch (t.kind) {
      case TokenKind::identifier:
      case TokenKind::number_literal:
      case TokenKind::string_literal:
      case TokenKind::char_literal:
        return true;
      case TokenKind::keyword:
        return t.lexeme == "true" || t.lexeme == "false" ||
               t.lexeme == "nullptr" || t.lexeme == "sizeof";
      case TokenKind::op:
        return kUnaryOps.count(t.lexeme) != 0;
      case TokenKind::punctuation:
        return t.lexeme == "(";
    }
    return false;
  }

  // A parenthesized type followed by a unary expression is treated as a cast.
  // Recognized purely from token shapes: "(type-keyword ...)" or
  // "(identifier * ... *)".
  bool at_cast_prefix() const {
    if (!check_punct("(")) return false;
    size_t j = pos_ + 1;
    if (j >= toks_.size()) return false;
    bool type_like = false;
    if (spec_keyword_at(j)) {
      type_like = true;
      while (j < toks_.size() &&
             (spec_keyword_at(j) || toks_[j].kind == TokenKind::identifier ||
              (toks_[j].kind == TokenKind::op && toks_[j].lexeme == "*")))
        ++j;
    } else if (toks_[j].kind == TokenKind::identifier) {
      size_t stars = 0;
      ++j;
      while (j < toks_.size() && toks_[j].kind == TokenKind::op &&
             toks_[j].lexeme == "*") {
        ++j;
        ++stars;
      }
      type_like = stars > 0;
    }
    if (!type_like) return false;
    if (j >= toks_.size() || !(toks_[j].kind == TokenKind::punctuation &&
                               toks_[j].lexeme == ")"))
      return false;
    return starts_unary_expression(j + 1);
  }

  SyntaxNode parse_unary() {
    if (at_end()) fail("expected expression");
    const Token& t = cur();

    if (t.kind == TokenKind::op && kUnaryOps.count(t.lexeme)) {
      size_t start = pos_;
      SyntaxNode op_leaf = token_leaf(node_kind::op);
      SyntaxNode operand = parse_unary();
      return make(node_kind::unary_expr,
                  {std::move(op_leaf), std::move(operand)}, start);
    }

    if (t.kind == TokenKind::keyword && t.lexeme == "sizeof") {
      size_t start = pos_;
      SyntaxNode kw = token_leaf(node_kind::keyword);
      SyntaxNode operand = parse_unary();
      return make(node_kind::unary_expr, {std::move(kw), std::move(operand)},
                  start);
    }

    if (at_cast_prefix()) {
      size_t start = pos_;
      ++pos_;  // '('
      std::vector<SyntaxNode> children;
      while (!check_punct(")")) {
        const Token& inner = cur();
        if (inner.kind == TokenKind::keyword) {
          children.push_back(token_leaf(node_kind::keyword));
        } else if (inner.kind == TokenKind::identifier) {
          children.push_back(token_leaf(node_kind::identifier));
        } else {
          children.push_back(token_leaf(node_kind::op));
        }
      }
      ++pos_;  // ')'
      children.push_back(parse_unary());
      return make(node_kind::cast_expr, std::move(children), start);
    }

    return parse_postfix();
  }

  SyntaxNode parse_postfix() {
    size_t start = pos_;
    SyntaxNode node = parse_primary();
    while (!at_end()) {
      if (check_punct("(")) {
        ++pos_;
        std::vector<SyntaxNode> children;
        children.push_back(std::move(node));
        if (!check_punct(")")) {
          children.push_back(parse_assignment());
          while (check_punct(",")) {
            ++pos_;
            children.push_back(parse_assignment());
          }
        }
        expect_punct(")");
        node = make(node_kind::call_expr, std::move(children), start);
        continue;
      }
      if (check_punct("[")) {
        ++pos_;
        SyntaxNode index = parse_expression();
        expect_punct("]");
        node = make(node_kind::index_expr, {std::move(node), std::move(index)},
                    start);
        continue;
      }
      if (check_op(".") || check_op("->")) {
        SyntaxNode op_leaf = token_leaf(node_kind::op);
        SyntaxNode field = identifier_leaf();
        node = make(node_kind::member_expr,
                    {std::move(node), std::move(op_leaf), std::move(field)},
                    start);
        continue;
      }
      if (check_op("++") || check_op("--")) {
        SyntaxNode op_leaf = token_leaf(node_kind::op);
        node = make(node_kind::postfix_expr,
                    {std::move(node), std::move(op_leaf)}, start);
        continue;
      }
      break;
    }
    return node;
  }

  SyntaxNode parse_primary() {
    if (at_end()) fail("expected expression");
    const Token& t = cur();
    switch (t.kind) {
      case TokenKind::identifier:
        return token_leaf(node_kind::identifier);
      case TokenKind::number_literal:
      case TokenKind::string_literal:
      case TokenKind::char_literal:
        return token_leaf(node_kind::literal);
      case TokenKind::keyword:
        if (t.lexeme == "true" || t.lexeme == "false" || t.lexeme == "nullptr")
          return token_leaf(node_kind::literal);
        break;
      case TokenKind::punctuation:
        if (t.lexeme == "(") {
          size_t start = pos_;
          ++pos_;
          SyntaxNode inner = parse_expression();
          expect_punct(")");
          return make(node_kind::paren_expr, {std::move(inner)}, start);
        }
        break;
      default:
        break;
    }
    fail("expected expression");
  }
};

}  // namespace

ParseOutcome parse(const std::vector<Token>& tokens) {
  return Parser(tokens).run();
}

ParseOutcome parse_text(std::string_view text) {
  return parse(tokenize(text));
}

size_t node_count(const SyntaxNode& node) {
  size_t n = 1;
  for (const auto& child : node.children) n += node_count(child);
  return n;
}

}  // namespace repairkit
