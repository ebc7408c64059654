#pragma once

#include <string>
#include <vector>

namespace repairkit::testing {

// Hand-written C-like functions in the style of security patches. Every one
// parses cleanly and moves at least one value between variables, so the
// oracle data-flow graph is never empty.
inline std::vector<std::string> realistic_functions() {
  return {
      "int clamp_len(int len, int cap) {\n"
      "  int out = len;\n"
      "  if (out > cap) { out = cap; }\n"
      "  if (out < 0) { out = 0; }\n"
      "  return out;\n"
      "}\n",

      "int copy_bounded(char *dst, char *src, int n, int cap) {\n"
      "  int count = n;\n"
      "  if (count > cap) { count = cap; }\n"
      "  int i = 0;\n"
      "  while (i < count) {\n"
      "    dst[i] = src[i];\n"
      "    i = i + 1;\n"
      "  }\n"
      "  return count;\n"
      "}\n",

      "int checked_add(int a, int b) {\n"
      "  long wide = (long)a + (long)b;\n"
      "  int result = (int)wide;\n"
      "  if (wide != result) { return -1; }\n"
      "  return result;\n"
      "}\n",

      "int read_field(struct packet *p, int idx) {\n"
      "  int limit = p->count;\n"
      "  if (idx >= limit) { return -1; }\n"
      "  int value = p->data[idx];\n"
      "  return value;\n"
      "}\n",

      "int guard_null(char *ptr, int fallback) {\n"
      "  int out = fallback;\n"
      "  if (ptr != 0) { out = ptr[0]; }\n"
      "  return out;\n"
      "}\n",

      "int sum_range(int *values, int n) {\n"
      "  int total = 0;\n"
      "  for (int i = 0; i < n; i++) {\n"
      "    total += values[i];\n"
      "  }\n"
      "  return total;\n"
      "}\n",

      "unsigned scale_count(unsigned count, unsigned factor) {\n"
      "  unsigned scaled = count * factor;\n"
      "  if (factor != 0 && scaled / factor != count) { scaled = 0; }\n"
      "  return scaled;\n"
      "}\n",

      "int free_once(struct buf *b) {\n"
      "  int freed = b->freed;\n"
      "  if (freed) { return 0; }\n"
      "  release(b);\n"
      "  b->freed = 1;\n"
      "  return 1;\n"
      "}\n",
  };
}

// A (candidate, oracle) pair whose expected component scores the tests
// derive from the reference oracles.
inline std::string golden_candidate() {
  return "int check(int n, int cap) {\n"
         "  int v = n;\n"
         "  if (v > cap) { v = cap; }\n"
         "  return v;\n"
         "}\n";
}

inline std::string golden_oracle() {
  return "int check(int n, int cap) {\n"
         "  int v = n;\n"
         "  if (v > cap) { v = 0; }\n"
         "  if (v < 0) { v = 0; }\n"
         "  return v;\n"
         "}\n";
}

}  // namespace repairkit::testing
