#pragma once

#include <string>
#include <vector>

namespace repairkit {

/// Rewards of one rollout group plus its normalized advantages:
/// A_j = (R_j - mu) / (sigma + epsilon), population sigma.
struct RewardGroup {
  std::string prompt_id;
  std::vector<double> rewards;
  double mu = 0.0;
  double sigma = 0.0;
  std::vector<double> advantages;
  double epsilon = 1e-4;
};

/// Sequence log-probabilities of the group's candidates under the current
/// and the previous policy.
struct PolicyEval {
  std::vector<double> logp_new;
  std::vector<double> logp_old;
};

struct SurrogateReport {
  std::vector<double> ratios;
  std::vector<double> per_sample_objective;
  double mean_objective = 0.0;
  double kl_estimate = 0.0;
  double loss = 0.0;  // -mean_objective + beta * kl_estimate
};

/// Group-relative advantage normalization. Requires >= 2 rewards and
/// epsilon > 0. A constant group yields advantages of exactly zero.
RewardGroup normalize_advantages(const std::vector<double>& rewards,
                                 double epsilon);

/// exp(logp_new - logp_old), elementwise.
std::vector<double> importance_ratios(const PolicyEval& eval);

/// Naive estimator of KL[old || new]: mean(logp_old - logp_new).
double kl_estimate(const PolicyEval& eval);

/// Clipped surrogate objective:
/// per-sample = min(r*A, clip(r, 1-clip_eps, 1+clip_eps)*A),
/// loss = -mean + beta * kl.
SurrogateReport clipped_surrogate(const std::vector<double>& ratios,
                                  const std::vector<double>& advantages,
                                  double clip_eps, double kl, double beta);

}  // namespace repairkit
