#include <doctest.h>

#include <random>

#include "repairkit/curriculum.hpp"
#include "repairkit/dataset.hpp"
#include "repairkit/error.hpp"
#include "support/oracles.hpp"

using namespace repairkit;

namespace {

RepairSample raw(const std::string& id, const std::string& repo,
                 const std::string& vuln, const std::string& fixed) {
  RepairSample s;
  s.id = id;
  s.repo = repo;
  s.vulnerable_fn = vuln;
  s.fixed_fn = fixed;
  return s;
}

// random text whose lines never collide with the marker lines
std::string random_text(std::mt19937_64& rng, int lines) {
  std::string out;
  for (int i = 0; i < lines; ++i) {
    int len = static_cast<int>(rng() % 10);
    for (int k = 0; k < len; ++k)
      out.push_back(static_cast<char>('a' + rng() % 26));
    out += rng() % 4 ? "\n" : ";\n";
  }
  if (rng() % 3 == 0 && !out.empty()) out.pop_back();  // drop trailing newline
  return out;
}

}  // namespace

TEST_CASE("identical texts diff to nothing") {
  CHECK(diff_hunks("a\nb\nc\n", "a\nb\nc\n").empty());
}

TEST_CASE("one modified line is one hunk") {
  auto hunks = diff_hunks("a\nb\nc\n", "a\nX\nc\n");
  REQUIRE(hunks.size() == 1);
  CHECK(hunks[0] == LineRange{2, 2});
}

TEST_CASE("separated changes stay separate hunks") {
  // 7-line fixture, lines 2 and 6 modified, 3 unchanged lines between
  std::string vuln = "l1\nl2\nl3\nl4\nl5\nl6\nl7\n";
  std::string fixed = "l1\nX2\nl3\nl4\nl5\nX6\nl7\n";
  auto hunks = diff_hunks(vuln, fixed);
  REQUIRE(hunks.size() == 2);
  CHECK(hunks[0] == LineRange{2, 2});
  CHECK(hunks[1] == LineRange{6, 6});

  // cross-check the changed-line set against the reference LCS
  auto changed = testing::naive_changed_lines({"l1", "l2", "l3", "l4", "l5",
                                               "l6", "l7"},
                                              {"l1", "X2", "l3", "l4", "l5",
                                               "X6", "l7"});
  CHECK(changed == std::vector<size_t>{1, 5});
}

TEST_CASE("adjacent changed lines merge into one hunk") {
  auto hunks = diff_hunks("a\nb\nc\nd\n", "a\nX\nY\nd\n");
  REQUIRE(hunks.size() == 1);
  CHECK(hunks[0] == LineRange{2, 3});
}

TEST_CASE("deleted lines count as changed") {
  auto hunks = diff_hunks("a\nb\nc\n", "a\nc\n");
  REQUIRE(hunks.size() == 1);
  CHECK(hunks[0] == LineRange{2, 2});
}

TEST_CASE("pure insertions anchor to the preceding line") {
  auto hunks = diff_hunks("a\nb\nc\n", "a\nb\nNEW\nc\n");
  REQUIRE(hunks.size() == 1);
  CHECK(hunks[0] == LineRange{2, 2});

  // insertion before the first line anchors to line 1
  auto head = diff_hunks("a\nb\n", "NEW\na\nb\n");
  REQUIRE(head.size() == 1);
  CHECK(head[0] == LineRange{1, 1});

  // insertion at the end anchors to the last line
  auto tail = diff_hunks("a\nb\n", "a\nb\nNEW\n");
  REQUIRE(tail.size() == 1);
  CHECK(tail[0] == LineRange{2, 2});
}

TEST_CASE("insertions adjacent to changes join that hunk") {
  auto hunks = diff_hunks("a\nb\nc\n", "a\nX\nNEW\nc\n");
  REQUIRE(hunks.size() == 1);
  CHECK(hunks[0] == LineRange{2, 2});
}

TEST_CASE("diff ignores trailing newline differences") {
  CHECK(diff_hunks("a\nb", "a\nb\n").empty());
  CHECK(diff_hunks("a\nb\n", "a\nb").empty());
  auto with = diff_hunks("a\nb\n", "a\nX\n");
  auto without = diff_hunks("a\nb", "a\nX");
  CHECK(with == without);
}

TEST_CASE("diff rejects empty inputs") {
  CHECK_THROWS_AS(diff_hunks("", "a\n"), Error);
  CHECK_THROWS_AS(diff_hunks("a\n", ""), Error);
}

TEST_CASE("marker insertion around one line") {
  std::string marked = insert_markers("a\nb\nc\n", {{2, 2}});
  CHECK(marked == "a\n<vul_start>\nb\n<vul_end>\nc\n");
  CHECK(strip_markers(marked) == "a\nb\nc\n");
  CHECK(count_hunks(marked) == 1);
}

TEST_CASE("empty range list leaves the text alone") {
  CHECK(insert_markers("a\nb\n", {}) == "a\nb\n");
}

TEST_CASE("marker validation") {
  CHECK_THROWS_AS(insert_markers("a\nb\n", {{0, 1}}), Error);
  CHECK_THROWS_AS(insert_markers("a\nb\n", {{1, 3}}), Error);
  CHECK_THROWS_AS(insert_markers("a\nb\n", {{2, 1}}), Error);
  CHECK_THROWS_AS(insert_markers("a\nb\nc\n", {{1, 2}, {2, 3}}), Error);
  CHECK_THROWS_AS(insert_markers("a\nb\nc\n", {{2, 2}, {1, 1}}), Error);
}

TEST_CASE("marker round trip on random texts and hunk sets") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 150; ++trial) {
    std::string text = random_text(rng, 1 + static_cast<int>(rng() % 20));
    size_t lines = 0;
    for (char c : text)
      if (c == '\n') ++lines;
    if (!text.empty() && text.back() != '\n') ++lines;
    if (lines == 0) continue;

    std::vector<LineRange> hunks;
    int line = 1;
    while (line <= static_cast<int>(lines)) {
      if (rng() % 3 == 0) {
        int last = std::min<int>(static_cast<int>(lines),
                                 line + static_cast<int>(rng() % 3));
        hunks.push_back({line, last});
        line = last + 2;  // at least one gap line
      } else {
        ++line;
      }
    }

    std::string marked = insert_markers(text, hunks);
    CHECK(strip_markers(marked) == text);
    CHECK(count_hunks(marked) == static_cast<int>(hunks.size()));
  }
}

TEST_CASE("dedup keeps first occurrences") {
  std::vector<RepairSample> samples = {
      raw("1", "r", "int a;\n", "int b;\n"),
      raw("2", "r", "int a;\n", "int b;\n"),          // exact duplicate
      raw("3", "r", "int  a;  \n", "int b;\n"),       // whitespace variant
      raw("4", "r", "int a;\n", "int c;\n"),          // different fix: kept
  };
  auto unique = dedup(samples);
  REQUIRE(unique.size() == 2);
  CHECK(unique[0].id == "1");
  CHECK(unique[1].id == "4");
  CHECK(dedup(unique).size() == unique.size());  // idempotent
}

TEST_CASE("normalize_whitespace") {
  CHECK(normalize_whitespace("  a \t b\n\nc ") == "a b c");
  CHECK(normalize_whitespace("abc") == "abc");
  CHECK(normalize_whitespace("   ") == "");
}

TEST_CASE("ten equal repositories pack to 8/1/1") {
  std::vector<RepairSample> samples;
  for (int r = 0; r < 10; ++r)
    for (int i = 0; i < 5; ++i)
      samples.push_back(raw("r" + std::to_string(r) + "_" + std::to_string(i),
                            "repo" + std::to_string(r), "v\n", "f\n"));
  SplitManifest m = repo_split(samples, {0.8, 0.1, 0.1}, 0);
  CHECK(m.train.size() == 40);
  CHECK(m.val.size() == 5);
  CHECK(m.test.size() == 5);
  CHECK(m.achieved_ratios.at("train") == doctest::Approx(0.8));
}

TEST_CASE("no repository ever crosses splits") {
  std::mt19937_64 rng(223);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<RepairSample> samples;
    int repos = 3 + static_cast<int>(rng() % 20);
    int id = 0;
    for (int r = 0; r < repos; ++r) {
      int members = 1 + static_cast<int>(rng() % 12);
      for (int i = 0; i < members; ++i)
        samples.push_back(raw("s" + std::to_string(id++),
                              "repo" + std::to_string(r), "v\n", "f\n"));
    }
    SplitManifest m = repo_split(samples, {0.8, 0.1, 0.1}, rng());

    CHECK(m.train.size() + m.val.size() + m.test.size() == samples.size());
    for (const auto& sample : samples) {
      const std::string& split = m.repo_assignment.at(sample.repo);
      const auto& bucket = split == "train" ? m.train
                           : split == "val" ? m.val
                                            : m.test;
      CHECK(std::find(bucket.begin(), bucket.end(), sample.id) != bucket.end());
    }
  }
}

TEST_CASE("skewed repositories report achieved ratios") {
  std::vector<RepairSample> samples;
  for (int i = 0; i < 50; ++i)
    samples.push_back(raw("big" + std::to_string(i), "big", "v\n", "f\n"));
  for (int r = 0; r < 10; ++r)
    for (int i = 0; i < 5; ++i)
      samples.push_back(raw("s" + std::to_string(r) + "_" + std::to_string(i),
                            "small" + std::to_string(r), "v\n", "f\n"));
  SplitManifest m = repo_split(samples, {0.8, 0.1, 0.1}, 7);

  double total = static_cast<double>(samples.size());
  CHECK(m.achieved_ratios.at("train") ==
        doctest::Approx(m.train.size() / total));
  CHECK(m.achieved_ratios.at("val") == doctest::Approx(m.val.size() / total));
  CHECK(m.achieved_ratios.at("test") == doctest::Approx(m.test.size() / total));
  // the 50-sample repo lands in exactly one split
  CHECK(m.repo_assignment.count("big") == 1);
}

TEST_CASE("split validation") {
  std::vector<RepairSample> two = {raw("a", "r1", "v\n", "f\n"),
                                   raw("b", "r2", "v\n", "f\n")};
  CHECK_THROWS_AS(repo_split(two, {0.8, 0.1, 0.1}, 0), Error);

  std::vector<RepairSample> three = {raw("a", "r1", "v\n", "f\n"),
                                     raw("b", "r2", "v\n", "f\n"),
                                     raw("c", "r3", "v\n", "f\n")};
  CHECK_THROWS_AS(repo_split(three, {0.8, 0.1, 0.2}, 0), Error);
  CHECK_THROWS_AS(repo_split(three, {0.9, 0.1, 0.0}, 0), Error);
}

TEST_CASE("make_sample fills markers and hunk count consistently") {
  RepairSample s = make_sample("id1", "repo", "CWE-787",
                               "a\nb\nc\nd\n", "a\nX\nc\nY\n");
  CHECK(s.hunks == 2);
  CHECK(count_hunks(s.marked_fn) == s.hunks);
  CHECK(strip_markers(s.marked_fn) == s.vulnerable_fn);
  CHECK(s.cwe == "CWE-787");
}
