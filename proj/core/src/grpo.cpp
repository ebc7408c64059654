#include "repairkit/grpo.hpp"

#include <algorithm>
#include <cmath>

#include "repairkit/error.hpp"

namespace repairkit {

RewardGroup normalize_advantages(const std::vector<double>& rewards,
                                 double epsilon) {
  if (rewards.size() < 2)
    throw Error(ErrorCode::invalid_input,
                "normalize_advantages: need at least 2 rewards");
  if (!(epsilon > 0.0))
    throw Error(ErrorCode::invalid_input,
                "normalize_advantages: epsilon must be > 0");
  for (double r : rewards)
    if (!std::isfinite(r))
      throw Error(ErrorCode::invalid_input,
                  "normalize_advantages: non-finite reward");

  RewardGroup group;
  group.rewards = rewards;
  group.epsilon = epsilon;

  const double n = static_cast<double>(rewards.size());
  double sum = 0.0;
  for (double r : rewards) sum += r;
  group.mu = sum / n;

  // A constant group carries no signal; keep the zeros exact instead of
  // letting mean-rounding leak in.
  bool constant = std::all_of(rewards.begin(), rewards.end(),
                              [&](double r) { return r == rewards.front(); });
  if (constant) {
    group.mu = rewards.front();
    group.sigma = 0.0;
    group.advantages.assign(rewards.size(), 0.0);
    return group;
  }

  double var = 0.0;
  for (double r : rewards) {
    double d = r - group.mu;
    var += d * d;
  }
  group.sigma = std::sqrt(var / n);  // population deviation

  group.advantages.reserve(rewards.size());
  for (double r : rewards)
    group.advantages.push_back((r - group.mu) / (group.sigma + epsilon));
  return group;
}

std::vector<double> importance_ratios(const PolicyEval& eval) {
  if (eval.logp_new.size() != eval.logp_old.size())
    throw Error(ErrorCode::invalid_input,
                "importance_ratios: length mismatch");
  std::vector<double> ratios;
  ratios.reserve(eval.logp_new.size());
  for (size_t i = 0; i < eval.logp_new.size(); ++i) {
    if (!std::isfinite(eval.logp_new[i]) || !std::isfinite(eval.logp_old[i]))
      throw Error(ErrorCode::invalid_input,
                  "importance_ratios: non-finite log-probability");
    ratios.push_back(std::exp(eval.logp_new[i] - eval.logp_old[i]));
  }
  return ratios;
}

double kl_estimate(const PolicyEval& eval) {
  if (eval.logp_new.size() != eval.logp_old.size())
    throw Error(ErrorCode::invalid_input, "kl_estimate: length mismatch");
  if (eval.logp_new.empty()) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < eval.logp_new.size(); ++i)
    sum += eval.logp_old[i] - eval.logp_new[i];
  return sum / static_cast<double>(eval.logp_new.size());
}

SurrogateReport clipped_surrogate(const std::vector<double>& ratios,
                                  const std::vector<double>& advantages,
                                  double clip_eps, double kl, double beta) {
  if (ratios.size() != advantages.size())
    throw Error(ErrorCode::invalid_input,
                "clipped_surrogate: ratios/advantages length mismatch");
  if (!(clip_eps > 0.0))
    throw Error(ErrorCode::invalid_input,
                "clipped_surrogate: clip_eps must be > 0");
  if (beta < 0.0)
    throw Error(ErrorCode::invalid_input,
                "clipped_surrogate: beta must be >= 0");

  SurrogateReport report;
  report.ratios = ratios;
  report.kl_estimate = kl;
  report.per_sample_objective.reserve(ratios.size());

  double sum = 0.0;
  for (size_t i = 0; i < ratios.size(); ++i) {
    double clipped =
        std::clamp(ratios[i], 1.0 - clip_eps, 1.0 + clip_eps);
    double objective =
        std::min(ratios[i] * advantages[i], clipped * advantages[i]);
    report.per_sample_objective.push_back(objective);
    sum += objective;
  }
  report.mean_objective =
      ratios.empty() ? 0.0 : sum / static_cast<double>(ratios.size());
  report.loss = -report.mean_objective + beta * kl;
  return report;
}

}  // namespace repairkit
