#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "repairkit/ast.hpp"
#include "repairkit/dfg.hpp"
#include "repairkit/subtree.hpp"
#include "repairkit/token.hpp"

namespace repairkit {

struct MetricConfig {
  int max_ngram = 4;
  double keyword_weight = 1.0;
  double other_weight = 0.2;
  // weights for bleu / weighted_bleu / sim_ast / sim_dfg; must sum to 1
  std::array<double, 4> codebleu_weights = {0.25, 0.25, 0.25, 0.25};
  int min_subtree_height = 1;
  double smoothing_epsilon = 1e-9;

  void validate() const;  // throws Error(invalid_input) on bad values
};

// Which score components had to fall back.
enum class Degraded : uint8_t {
  candidate_unparseable,
  oracle_unparseable,
  empty_oracle_dfg,
};

const char* degraded_name(Degraded flag);

struct ScoreReport {
  double bleu = 0.0;
  double weighted_bleu = 0.0;
  double sim_ast = 0.0;
  double sim_dfg = 0.0;
  double reward = 0.0;
  double codebleu = 0.0;
  std::vector<Degraded> degraded;

  bool has_flag(Degraded flag) const;
};

/// BLEU over token lexemes. Effective order is min(max_ngram, |cand|, |ref|);
/// zero precisions are replaced by smoothing_epsilon; brevity penalty
/// exp(1 - |ref|/|cand|) applies when the candidate is shorter. Empty
/// candidate scores 0; empty reference is an error.
double bleu(const std::vector<Token>& cand, const std::vector<Token>& ref,
            const MetricConfig& cfg);

/// Like bleu, but each n-gram counts with the mean weight of its tokens
/// (keyword_weight for keywords, other_weight otherwise).
double weighted_bleu(const std::vector<Token>& cand,
                     const std::vector<Token>& ref, const MetricConfig& cfg);

/// |S(cand) ∩ S(ref)| / |S(ref)| over canonical subtree multisets.
/// Both empty -> 1; only reference empty -> 0.
double ast_similarity(const SyntaxTree& cand_tree, const SyntaxTree& ref_tree,
                      const MetricConfig& cfg);

/// Multiset edge intersection over |E(ref)|. The caller must handle the
/// empty-reference case (see score_pair); here it yields 0.
double dfg_similarity(const DataFlowGraph& cand, const DataFlowGraph& ref);

/// Mean of the available components. `included` marks which of
/// {bleu, sim_ast, sim_dfg} participate.
double composite_reward(const std::array<double, 3>& components,
                        const std::array<bool, 3>& included);

/// Weighted CodeBLEU combination; weights of unavailable components are
/// redistributed proportionally across the rest.
double codebleu_combine(const std::array<double, 4>& components,
                        const std::array<double, 4>& weights,
                        const std::array<bool, 4>& available);

/// CodeBLEU for a text pair.
double codebleu(std::string_view cand_text, std::string_view ref_text,
                const MetricConfig& cfg);

/// Full pipeline: tokenize, parse, extract, score. Total over arbitrary
/// candidate text. Throws Error(invalid_input) when the oracle has no tokens.
ScoreReport score_pair(std::string_view cand_text, std::string_view ref_text,
                       const MetricConfig& cfg);

}  // namespace repairkit
