#include "repairkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

// n-gram key: lexemes joined with an unlikely separator byte
std::string ngram_key(const std::vector<Token>& toks, size_t start, size_t n) {
  std::string key;
  for (size_t k = 0; k < n; ++k) {
    if (k) key += '\x1f';
    key += toks[start + k].lexeme;
  }
  return key;
}

double token_weight(const Token& tok, const MetricConfig& cfg) {
  return tok.kind == TokenKind::keyword ? cfg.keyword_weight : cfg.other_weight;
}

double gram_weight(const std::vector<Token>& toks, size_t start, size_t n,
                   const MetricConfig& cfg) {
  double sum = 0.0;
  for (size_t k = 0; k < n; ++k) sum += token_weight(toks[start + k], cfg);
  return sum / static_cast<double>(n);
}

// Shared BLEU skeleton; `weighted` switches the counting scheme.
double bleu_impl(const std::vector<Token>& cand, const std::vector<Token>& ref,
                 const MetricConfig& cfg, bool weighted) {
  cfg.validate();
  if (ref.empty())
    throw Error(ErrorCode::invalid_input, "bleu: empty reference");
  if (cand.empty()) return 0.0;

  const size_t order = std::min({static_cast<size_t>(cfg.max_ngram),
                                 cand.size(), ref.size()});

  double log_sum = 0.0;
  for (size_t n = 1; n <= order; ++n) {
    struct GramStat {
      long cand_count = 0;
      long ref_count = 0;
      double weight = 0.0;
    };
    std::unordered_map<std::string, GramStat> grams;
    for (size_t i = 0; i + n <= cand.size(); ++i) {
      GramStat& g = grams[ngram_key(cand, i, n)];
      g.cand_count += 1;
      if (weighted && g.cand_count == 1) g.weight = gram_weight(cand, i, n, cfg);
    }
    for (size_t i = 0; i + n <= ref.size(); ++i) {
      auto it = grams.find(ngram_key(ref, i, n));
      if (it != grams.end()) it->second.ref_count += 1;
    }

    double matched = 0.0;
    double total = 0.0;
    for (const auto& [key, g] : grams) {
      double w = weighted ? g.weight : 1.0;
      total += w * static_cast<double>(g.cand_count);
      matched += w * static_cast<double>(std::min(g.cand_count, g.ref_count));
    }
    double p = total > 0.0 ? matched / total : 0.0;
    if (p <= 0.0) p = cfg.smoothing_epsilon;
    log_sum += std::log(p);
  }

  double brevity = 1.0;
  if (cand.size() < ref.size()) {
    brevity = std::exp(1.0 - static_cast<double>(ref.size()) /
                                 static_cast<double>(cand.size()));
  }
  return brevity * std::exp(log_sum / static_cast<double>(order));
}

}  // namespace

void MetricConfig::validate() const {
  if (max_ngram < 1)
    throw Error(ErrorCode::invalid_input, "max_ngram must be >= 1");
  if (keyword_weight < 0.0 || other_weight < 0.0)
    throw Error(ErrorCode::invalid_input, "token weights must be >= 0");
  if (min_subtree_height < 1)
    throw Error(ErrorCode::invalid_input, "min_subtree_height must be >= 1");
  if (smoothing_epsilon <= 0.0)
    throw Error(ErrorCode::invalid_input, "smoothing_epsilon must be > 0");
  double sum = 0.0;
  for (double w : codebleu_weights) {
    if (w < 0.0)
      throw Error(ErrorCode::invalid_input, "codebleu weights must be >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorCode::invalid_input, "codebleu weights must sum to 1");
}

const char* degraded_name(Degraded flag) {
  switch (flag) {
    case Degraded::candidate_unparseable: return "candidate-unparseable";
    case Degraded::oracle_unparseable: return "oracle-unparseable";
    case Degraded::empty_oracle_dfg: return "empty-oracle-dfg";
  }
  return "unknown";
}

bool ScoreReport::has_flag(Degraded flag) const {
  return std::find(degraded.begin(), degraded.end(), flag) != degraded.end();
}

double bleu(const std::vector<Token>& cand, const std::vector<Token>& ref,
            const MetricConfig& cfg) {
  return bleu_impl(cand, ref, cfg, /*weighted=*/false);
}

double weighted_bleu(const std::vector<Token>& cand,
                     const std::vector<Token>& ref, const MetricConfig& cfg) {
  return bleu_impl(cand, ref, cfg, /*weighted=*/true);
}

double ast_similarity(const SyntaxTree& cand_tree, const SyntaxTree& ref_tree,
                      const MetricConfig& cfg) {
  SubtreeMultiset cand = extract_subtrees(cand_tree, cfg.min_subtree_height);
  SubtreeMultiset ref = extract_subtrees(ref_tree, cfg.min_subtree_height);
  long ref_size = multiset_size(ref);
  if (ref_size == 0) return multiset_size(cand) == 0 ? 1.0 : 0.0;
  return static_cast<double>(multiset_intersection_size(cand, ref)) /
         static_cast<double>(ref_size);
}

double dfg_similarity(const DataFlowGraph& cand, const DataFlowGraph& ref) {
  if (ref.edges.empty()) return 0.0;
  // both edge lists are sorted; count min multiplicities by merging
  long matched = 0;
  size_t i = 0, j = 0;
  while (i < cand.edges.size() && j < ref.edges.size()) {
    if (cand.edges[i] < ref.edges[j]) {
      ++i;
    } else if (ref.edges[j] < cand.edges[i]) {
      ++j;
    } else {
      ++matched;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(matched) / static_cast<double>(ref.edges.size());
}

double composite_reward(const std::array<double, 3>& components,
                        const std::array<bool, 3>& included) {
  double sum = 0.0;
  int n = 0;
  for (size_t k = 0; k < components.size(); ++k) {
    if (!included[k]) continue;
    sum += components[k];
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

double codebleu_combine(const std::array<double, 4>& components,
                        const std::array<double, 4>& weights,
                        const std::array<bool, 4>& available) {
  double weight_sum = 0.0;
  for (size_t k = 0; k < 4; ++k)
    if (available[k]) weight_sum += weights[k];
  if (weight_sum <= 0.0) return 0.0;
  double score = 0.0;
  for (size_t k = 0; k < 4; ++k)
    if (available[k]) score += (weights[k] / weight_sum) * components[k];
  return score;
}

ScoreReport score_pair(std::string_view cand_text, std::string_view ref_text,
                       const MetricConfig& cfg) {
  cfg.validate();
  std::vector<Token> ref_tokens = tokenize(ref_text);
  if (ref_tokens.empty())
    throw Error(ErrorCode::invalid_input, "score_pair: oracle has no tokens");
  std::vector<Token> cand_tokens = tokenize(cand_text);

  ScoreReport report;
  report.bleu = bleu(cand_tokens, ref_tokens, cfg);
  report.weighted_bleu = weighted_bleu(cand_tokens, ref_tokens, cfg);

  ParseOutcome ref_parse = parse(ref_tokens);
  ParseOutcome cand_parse = parse(cand_tokens);

  bool structural_available = false;
  bool dfg_available = false;

  if (ref_parse.failed) {
    report.degraded.push_back(Degraded::oracle_unparseable);
  } else if (cand_parse.failed) {
    report.degraded.push_back(Degraded::candidate_unparseable);
  } else {
    structural_available = true;
    report.sim_ast = ast_similarity(*cand_parse.tree, *ref_parse.tree, cfg);
    DataFlowGraph cand_dfg = extract_dfg(*cand_parse.tree);
    DataFlowGraph ref_dfg = extract_dfg(*ref_parse.tree);
    if (ref_dfg.edges.empty()) {
      report.degraded.push_back(Degraded::empty_oracle_dfg);
    } else {
      dfg_available = true;
      report.sim_dfg = dfg_similarity(cand_dfg, ref_dfg);
    }
  }

  if (ref_parse.failed) {
    // only the lexical component survives
    report.reward = composite_reward({report.bleu, 0.0, 0.0},
                                     {true, false, false});
  } else if (cand_parse.failed) {
    // structural components stay in the mean at 0: unparseable patches
    // are penalized, not excused
    report.reward = composite_reward({report.bleu, 0.0, 0.0},
                                     {true, true, true});
  } else {
    report.reward = composite_reward(
        {report.bleu, report.sim_ast, report.sim_dfg},
        {true, true, dfg_available});
  }

  report.codebleu = codebleu_combine(
      {report.bleu, report.weighted_bleu, report.sim_ast, report.sim_dfg},
      cfg.codebleu_weights,
      {true, true, structural_available, dfg_available});
  return report;
}

double codebleu(std::string_view cand_text, std::string_view ref_text,
                const MetricConfig& cfg) {
  return score_pair(cand_text, ref_text, cfg).codebleu;
}

}  // namespace repairkit
