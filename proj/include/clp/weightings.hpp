#pragma once

#include <cstdint>
#include <vector>

#include "clp/rng.hpp"

namespace clp {

// Reward weights w on the m-simplex.
struct RewardWeights {
  std::vector<double> w;
};

// KL weight alpha in [alpha_min, 1].
struct KLWeight {
  double alpha = 1.0;
  double alpha_min = 0.01;
};

struct Weighting {
  KLWeight kl;
  RewardWeights rw;
};

// Throw std::invalid_argument when the invariants fail.
void validate_reward_weights(const RewardWeights& rw);
void validate_kl_weight(const KLWeight& k);

// KL-mixing coefficient beta = (alpha - alpha_min) / (alpha * (1 - alpha_min)).
// Strictly increasing on [alpha_min, 1] with f_mix(alpha_min) = 0 and
// f_mix(1) = 1. Rejects alpha_min >= 1 (denominator degenerates).
double f_mix(const KLWeight& k);
double f_mix(double alpha, double alpha_min);

// Inverse of f_mix: alpha = alpha_min / (alpha_min*u + (1-u)), u in [0,1].
KLWeight inv_f_mix(double u, double alpha_min);

enum class AlphaMode { kFixed, kInverseCdf };
enum class WMode { kDirichlet, kFixed };

struct WeightingSampler {
  std::vector<double> dirichlet_params;  // all > 0; length m
  double alpha_min = 0.01;
  AlphaMode alpha_mode = AlphaMode::kInverseCdf;
  double alpha_fixed = 1.0;              // used when alpha_mode == kFixed
  WMode w_mode = WMode::kDirichlet;
  std::vector<double> w_fixed;           // used when w_mode == kFixed
  uint64_t seed = 0;

  int m() const { return static_cast<int>(dirichlet_params.size()); }
};

void validate_sampler(const WeightingSampler& s);

// Dirichlet draw via normalized Gamma variates. Entries below 1e-15 are
// clamped to zero and the vector renormalized so downstream logs stay finite.
RewardWeights sample_dirichlet(const std::vector<double>& params, Rng& rng);

// One (alpha, w) draw. Alpha is drawn by the inverse-CDF method so that
// f_mix(alpha) is uniform on [0,1] (or held fixed); w follows w_mode.
Weighting sample_weighting(const WeightingSampler& s, Rng& rng);

}  // namespace clp
