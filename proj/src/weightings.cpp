#include "clp/weightings.hpp"

#include <cmath>
#include <stdexcept>

namespace clp {

namespace {
constexpr double kSimplexTol = 1e-12;
constexpr double kClampTol = 1e-15;
}  // namespace

void validate_reward_weights(const RewardWeights& rw) {
  if (rw.w.empty()) throw std::invalid_argument("RewardWeights: empty");
  double sum = 0.0;
  for (double v : rw.w) {
    if (!(v >= 0.0)) throw std::invalid_argument("RewardWeights: negative entry");
    sum += v;
  }
  if (std::abs(sum - 1.0) > kSimplexTol) {
    throw std::invalid_argument("RewardWeights: entries do not sum to 1");
  }
}

void validate_kl_weight(const KLWeight& k) {
  if (!(k.alpha_min > 0.0) || !(k.alpha_min < 1.0)) {
    throw std::invalid_argument("KLWeight: alpha_min must lie in (0,1)");
  }
  if (!(k.alpha >= k.alpha_min) || !(k.alpha <= 1.0)) {
    throw std::invalid_argument("KLWeight: alpha must lie in [alpha_min, 1]");
  }
}

double f_mix(double alpha, double alpha_min) {
  return f_mix(KLWeight{alpha, alpha_min});
}

double f_mix(const KLWeight& k) {
  if (!(k.alpha_min < 1.0)) {
    throw std::invalid_argument("f_mix: alpha_min >= 1 is degenerate");
  }
  validate_kl_weight(k);
  return (k.alpha - k.alpha_min) / (k.alpha * (1.0 - k.alpha_min));
}

KLWeight inv_f_mix(double u, double alpha_min) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::invalid_argument("inv_f_mix: u outside [0,1]");
  if (!(alpha_min > 0.0) || !(alpha_min < 1.0)) {
    throw std::invalid_argument("inv_f_mix: alpha_min must lie in (0,1)");
  }
  double alpha = alpha_min / (alpha_min * u + (1.0 - u));
  // Float round-off can land a hair outside [alpha_min, 1].
  alpha = std::min(1.0, std::max(alpha_min, alpha));
  return KLWeight{alpha, alpha_min};
}

void validate_sampler(const WeightingSampler& s) {
  if (s.dirichlet_params.empty()) {
    throw std::invalid_argument("WeightingSampler: dirichlet params empty");
  }
  for (double b : s.dirichlet_params) {
    if (!(b > 0.0)) throw std::invalid_argument("WeightingSampler: dirichlet param <= 0");
  }
  if (!(s.alpha_min > 0.0) || !(s.alpha_min < 1.0)) {
    throw std::invalid_argument("WeightingSampler: alpha_min must lie in (0,1)");
  }
  if (s.alpha_mode == AlphaMode::kFixed) {
    validate_kl_weight(KLWeight{s.alpha_fixed, s.alpha_min});
  }
  if (s.w_mode == WMode::kFixed) {
    if (s.w_fixed.size() != s.dirichlet_params.size()) {
      throw std::invalid_argument("WeightingSampler: w_fixed length != m");
    }
    validate_reward_weights(RewardWeights{s.w_fixed});
  }
}

RewardWeights sample_dirichlet(const std::vector<double>& params, Rng& rng) {
  const int m = static_cast<int>(params.size());
  RewardWeights rw;
  rw.w.resize(m);
  double sum = 0.0;
  while (sum <= 0.0) {  // all-underflow draws are retried
    sum = 0.0;
    for (int i = 0; i < m; ++i) {
      std::gamma_distribution<double> g(params[i], 1.0);
      rw.w[i] = g(rng);
      sum += rw.w[i];
    }
  }
  double clamped_sum = 0.0;
  for (int i = 0; i < m; ++i) {
    rw.w[i] /= sum;
    if (rw.w[i] < kClampTol) rw.w[i] = 0.0;
    clamped_sum += rw.w[i];
  }
  for (int i = 0; i < m; ++i) rw.w[i] /= clamped_sum;
  return rw;
}

Weighting sample_weighting(const WeightingSampler& s, Rng& rng) {
  validate_sampler(s);
  Weighting out;
  if (s.alpha_mode == AlphaMode::kInverseCdf) {
    out.kl = inv_f_mix(uniform01(rng), s.alpha_min);
  } else {
    out.kl = KLWeight{s.alpha_fixed, s.alpha_min};
  }
  if (s.w_mode == WMode::kDirichlet) {
    out.rw = sample_dirichlet(s.dirichlet_params, rng);
  } else {
    out.rw = RewardWeights{s.w_fixed};
  }
  return out;
}

}  // namespace clp
