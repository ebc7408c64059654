#include <doctest.h>

#include "repairkit/token.hpp"
#include "support/genprog.hpp"

using namespace repairkit;

namespace {

std::vector<std::string> lexemes(const std::vector<Token>& toks) {
  std::vector<std::string> out;
  for (const auto& t : toks) out.push_back(t.lexeme);
  return out;
}

}  // namespace

TEST_CASE("tokenize basic sentences") {
  auto toks = tokenize("return 0;");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].kind == TokenKind::keyword);
  CHECK(toks[0].lexeme == "return");
  CHECK(toks[1].kind == TokenKind::number_literal);
  CHECK(toks[1].lexeme == "0");
  CHECK(toks[2].kind == TokenKind::punctuation);
  CHECK(toks[2].lexeme == ";");
}

TEST_CASE("comments are stripped") {
  auto toks = tokenize("/*x*/ a");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0].kind == TokenKind::identifier);
  CHECK(toks[0].lexeme == "a");

  CHECK(tokenize("// whole line\n").empty());
  CHECK(tokenize("a // trailing\nb").size() == 2);
  CHECK(tokenize("/* unterminated ...").empty());
}

TEST_CASE("maximal munch operator table") {
  CHECK(lexemes(tokenize("a->b")) ==
        std::vector<std::string>{"a", "->", "b"});
  CHECK(lexemes(tokenize("a+++b")) ==
        std::vector<std::string>{"a", "++", "+", "b"});
  CHECK(lexemes(tokenize("a<<=b")) ==
        std::vector<std::string>{"a", "<<", "=", "b"});
  CHECK(lexemes(tokenize("x-->0")) ==
        std::vector<std::string>{"x", "--", ">", "0"});
  CHECK(lexemes(tokenize("a&&b||c")) ==
        std::vector<std::string>{"a", "&&", "b", "||", "c"});
  CHECK(lexemes(tokenize("i+=2")) == std::vector<std::string>{"i", "+=", "2"});
}

TEST_CASE("keyword list") {
  CHECK(is_keyword("while"));
  CHECK(is_keyword("restrict"));
  CHECK(is_keyword("bool"));
  CHECK(is_keyword("true"));
  CHECK(is_keyword("nullptr"));
  CHECK_FALSE(is_keyword("foo"));
  CHECK_FALSE(is_keyword("class"));  // not in the documented C list

  auto toks = tokenize("true_value");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0].kind == TokenKind::identifier);
}

TEST_CASE("literals") {
  auto toks = tokenize("x = 1.5e-3 + 0x1F; s = \"a b\"; c = 'q';");
  REQUIRE(toks.size() == 12);
  CHECK(toks[2].lexeme == "1.5e-3");
  CHECK(toks[2].kind == TokenKind::number_literal);
  CHECK(toks[4].lexeme == "0x1F");
  CHECK(toks[8].lexeme == "\"a b\"");
  CHECK(toks[8].kind == TokenKind::string_literal);
  CHECK(toks[11].lexeme == "'q'");
  CHECK(toks[11].kind == TokenKind::char_literal);
}

TEST_CASE("string literals stop at line breaks when unterminated") {
  auto toks = tokenize("s = \"abc\nx");
  REQUIRE(toks.size() == 4);
  CHECK(toks[2].lexeme == "\"abc");
  CHECK(toks[3].lexeme == "x");
}

TEST_CASE("escapes inside strings") {
  auto toks = tokenize("\"a\\\"b\"");
  REQUIRE(toks.size() == 1);
  CHECK(toks[0].lexeme == "\"a\\\"b\"");
}

TEST_CASE("unknown bytes become single-char punctuation") {
  auto toks = tokenize("a @ b \x01");
  REQUIRE(toks.size() == 4);
  CHECK(toks[1].kind == TokenKind::punctuation);
  CHECK(toks[1].lexeme == "@");
  CHECK(toks[3].lexeme == "\x01");
}

TEST_CASE("line and column tracking") {
  auto toks = tokenize("a\n  bb\tc");
  REQUIRE(toks.size() == 3);
  CHECK(toks[0].line == 1);
  CHECK(toks[0].column == 1);
  CHECK(toks[1].line == 2);
  CHECK(toks[1].column == 3);
  CHECK(toks[2].line == 2);
  CHECK(toks[2].column == 6);
}

TEST_CASE("detokenize/retokenize round trip") {
  testing::ProgramGenerator gen(11);
  for (int i = 0; i < 50; ++i) {
    std::string program = gen.function();
    auto toks = tokenize(program);
    auto again = tokenize(detokenize(toks));
    CHECK(again == toks);
  }
}

TEST_CASE("tokenize is total on arbitrary bytes") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    std::string junk;
    int len = static_cast<int>(rng() % 200);
    for (int k = 0; k < len; ++k)
      junk.push_back(static_cast<char>(rng() % 256));
    auto toks = tokenize(junk);  // must not throw
    auto again = tokenize(detokenize(toks));
    CHECK(again == toks);
  }
}
